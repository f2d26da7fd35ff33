#pragma once

#include "mfkit/abgroup.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mfkit {

/// One summand of the chain/loop decomposition.
struct Atom {
    enum Kind { Chain, Loop } kind;
    std::vector<int> vars;        // ordered variable indices
    std::vector<long long> exps;  // exponents p_i >= 2, aligned with vars
};

struct AtomicDecomposition {
    std::vector<Atom> parts;
};

/// Polynomial sum of n monomials in n variables with an invertible exponent
/// matrix and positive quasi-homogeneous weights. Coefficients are fixed to 1.
struct InvertiblePolynomial {
    int n = 0;
    std::vector<std::vector<long long>> exponents;  // row i = exponent vector of monomial i

    /// Throws InputError when the matrix is singular, has a nonpositive
    /// weight, or (for n <= 3) does not decompose into chains and loops.
    static InvertiblePolynomial from_matrix(std::vector<std::vector<long long>> a);

    std::vector<Rat> weights() const;  // A^{-1} * (1,...,1)
};

AtomicDecomposition classify(const InvertiblePolynomial& w);
InvertiblePolynomial transpose(const InvertiblePolynomial& w);

/// mu = prod_i (1/q_i - 1); throws when the product is not a positive integer.
long long milnor_number(const InvertiblePolynomial& w);

/// Maximal grading data: the group L generated by the variable degrees with
/// all monomials of w forced equal, its finite quotient by the degree of w,
/// and an integral positive weight function on L.
struct GradingData {
    int nvars = 0;
    std::shared_ptr<const AbelianGroup> L;     // maximal grading group
    std::shared_ptr<const AbelianGroup> Lbar;  // L / <wdeg>
    std::vector<GVec> xdeg;                    // degrees of the variables (unit vectors)
    GVec wdeg;                                 // degree of the potential
    std::vector<long long> rho_x;              // rho(x_i) > 0
    long long rho_w = 0;

    long long rho(const GVec& l) const;
    std::vector<long long> canon(const GVec& l) const { return L->canonical_form(l); }
    /// The unique element with given rho value and torsion class (rank-1 L).
    GVec element_at(long long rho_value, const std::vector<long long>& torsion) const;
    std::vector<std::vector<long long>> torsion_classes() const;
};

GradingData grading_data(const InvertiblePolynomial& w);

/// Names one of the classified shapes, e.g. "2-loop", "3-split-b".
std::string case_name(const AtomicDecomposition& d);

}  // namespace mfkit
