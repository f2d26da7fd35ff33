#pragma once

#include "mfkit/poly.hpp"

#include <string>
#include <vector>

namespace mfkit {

/// Quotient of the graded polynomial ring by a monomial ideal, R/I.
/// Kinds like k, M_x, M_xy, k[x]/(x^i) are all of this shape.
struct MonomialModule {
    std::string name;
    int nvars = 0;
    std::vector<Expo> ideal_gens;  // monomial generators of I

    bool in_ideal(const Expo& e) const;
    /// Maximal coordinate subspaces of the support (components of rad I).
    std::vector<std::vector<int>> support_components() const;
};

/// The free module R itself (I = 0).
MonomialModule ring_module(int nvars);

/// All monomials of the given degree (empty when none); deterministic
/// graded-lex order.
std::vector<Expo> monomial_basis(const GradingData& g, const GVec& degree);

/// Monomial basis of the graded piece M_degree of a monomial quotient.
std::vector<Expo> module_basis(const GradingData& g, const MonomialModule& m, const GVec& degree);

long module_dim(const GradingData& g, const MonomialModule& m, const GVec& degree);

/// Matrix of multiplication by f from M_degree to M_{degree+deg f} in the
/// graded-lex monomial bases. Throws on inhomogeneous f.
RatMat mult_map(const GradingData& g, const MonomialModule& m, const Poly& f, const GVec& degree);

/// Hypersurface quotient A = R/(w): dimension and basis of A_degree.
struct HypersurfaceQuotient {
    GradingData g;
    Poly w;
    GVec wdeg;
};

HypersurfaceQuotient hypersurface(const InvertiblePolynomial& w);

long quotient_piece_dim(const HypersurfaceQuotient& a, const GVec& degree);

/// Whether multiplication by w is injective on the reduced module (true iff
/// w restricts to a nonzero polynomial on every support component).
bool acts_injectively(const Poly& w, const MonomialModule& m);

/// True when w lies in the defining ideal, i.e. the quotient is a module
/// over R/(w).
bool well_defined_over(const Poly& w, const MonomialModule& m);

}  // namespace mfkit
