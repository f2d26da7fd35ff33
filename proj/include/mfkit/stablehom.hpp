#pragma once

#include "mfkit/cases.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mfkit {

/// Graded morphism table of a pair of objects in the singularity category:
/// dimensions of Hom(X, Y(l)[i]) for i = 0, 1; all other i follow from the
/// identification of the double homological shift with the wdeg twist.
struct GradedHomTable {
    GradingData g;
    long long rho_lo = 0, rho_hi = 0;  // audited weight window
    bool audited = false;
    // canonical form of l -> (a lift of l in generator coordinates, dimension)
    std::map<std::vector<long long>, std::pair<GVec, long>> even, odd;

    long parity_dim(const GVec& l, int parity) const;
    /// Hom(X, Y(l)[i]) for arbitrary integer i via quasi-periodicity.
    long dim_at(const GVec& l, long long i) const;
    long total_dim() const;
    bool is_zero() const { return even.empty() && odd.empty(); }
    /// All (i, dim) with Hom(X, Y(l)[i]) nonzero.
    std::vector<std::pair<long long, long>> bracket_profile(const GVec& l) const;
    std::vector<std::pair<GVec, long>> support(int parity) const;
};

struct WindowOptions {
    std::optional<long long> margin;  // override of the default audit margin
    int max_retries = 4;
};

long long default_margin(const GradingData& g);

/// Module route: resolve the source and take Hom into the target module.
GradedHomTable stable_hom_module(const GradingData& g, const MatrixFactorization& x,
                                 const MonomialModule& n, const WindowOptions& opt = {});

/// General route: 2-periodic Hom complex of two matrix factorizations.
GradedHomTable stable_hom_mf(const MatrixFactorization& x, const MatrixFactorization& y,
                             const WindowOptions& opt = {});

/// Catalogued-kind table (module route), e.g. stable_hom(c, "Mxyz", "k").
GradedHomTable stable_hom(const ModelCase& c, const std::string& src_kind, const std::string& dst_kind,
                          const WindowOptions& opt = {});

long graded_component(const GradedHomTable& t, const GVec& l, long long i);

bool is_zero_object(const MatrixFactorization& x, const WindowOptions& opt = {});

/// Cocycle representatives of a basis of Hom(X, Y(l)[parity]) in the MF Hom
/// complex, reduced-row-echelon normalized over the fixed monomial order.
std::vector<MFMorphism> cocycle_basis(const MatrixFactorization& x, const MatrixFactorization& y,
                                      const GVec& l, int parity);

/// Composition of cocycles (beta after alpha); twists add, parities add,
/// with the extra wdeg twist when both factors are odd.
MFMorphism compose(const GradingData& g, const MFMorphism& alpha, const MFMorphism& beta);

/// Coordinates of a cocycle's class in the cocycle_basis of its slot.
std::vector<Rat> class_coordinates(const MatrixFactorization& x, const MatrixFactorization& y,
                                   const MFMorphism& m);

bool class_is_zero(const MatrixFactorization& x, const MatrixFactorization& y, const MFMorphism& m);

MFMorphism identity_morphism(const MatrixFactorization& x);

}  // namespace mfkit
