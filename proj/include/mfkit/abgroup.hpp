#pragma once

#include "mfkit/linalg.hpp"

#include <memory>
#include <vector>

namespace mfkit {

/// Element of a finitely generated abelian group in generator coordinates.
using GVec = std::vector<long long>;

GVec gvec_add(const GVec& a, const GVec& b);
GVec gvec_sub(const GVec& a, const GVec& b);
GVec gvec_neg(const GVec& a);
GVec gvec_scale(long long k, const GVec& a);
GVec gvec_zero(int n);

/// Generators-and-relations presentation. Each relation is an integer
/// vector of coefficients over the generators.
struct GroupPresentation {
    int num_generators = 0;
    std::vector<GVec> relations;
};

/// Finitely generated abelian group in canonical (free + torsion) form.
///
/// Coordinates are mapped to canonical ones by the unimodular matrix U of
/// the Smith decomposition of the relation matrix; the inverse map is kept
/// so canonical tuples can be lifted back to generator coordinates.
class AbelianGroup {
public:
    static AbelianGroup from_presentation(const GroupPresentation& p);

    int num_generators() const { return ngen_; }
    int free_rank() const { return static_cast<int>(free_rows_.size()); }
    const std::vector<long long>& invariant_factors() const { return invariant_factors_; }
    long long order() const;  // 0 when infinite

    /// Canonical form: free coordinates (in row order) followed by torsion
    /// coordinates reduced into [0, d_i).
    std::vector<long long> canonical_form(const GVec& g) const;
    bool equal(const GVec& a, const GVec& b) const;
    bool is_zero(const GVec& g) const;

    /// Lift a canonical tuple back to generator coordinates.
    GVec from_canonical(const std::vector<long long>& canon) const;

    /// Order of the cyclic subgroup generated by g (0 when infinite).
    long long element_order(const GVec& g) const;

    const IntMat& change_of_basis() const { return U_; }
    const GroupPresentation& presentation() const { return presentation_; }

private:
    int ngen_ = 0;
    GroupPresentation presentation_;
    std::vector<long long> invariant_factors_;  // d_i > 1
    IntMat U_, Uinv_;                           // canonical = U * generator coords
    std::vector<int> free_rows_;                // rows of U with no relation constraint
    std::vector<int> torsion_rows_;             // rows with modulus d_i > 1
};

AbelianGroup group_from_presentation(const GroupPresentation& p);

/// Coset representatives of G/<h>; throws InputError when infinite.
std::vector<GVec> enumerate_quotient(const AbelianGroup& g, const GVec& h);

}  // namespace mfkit
