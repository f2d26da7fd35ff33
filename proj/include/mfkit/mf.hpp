#pragma once

#include "mfkit/gralg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mfkit {

/// Dense matrix of polynomials.
struct PolyMat {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> a;

    PolyMat() = default;
    PolyMat(int r, int c, int nvars) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Poly::zero(nvars)) {}

    Poly& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Poly& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    PolyMat mul(const PolyMat& other) const;
    PolyMat operator-() const;
};

/// Graded matrix factorization of w: free modules X0 = (+) A(-tw_even[a]),
/// X1 = (+) A(-tw_odd[b]) with d1 : X1 -> X0 and d0 : X0 -> X1(wdeg), both
/// compositions equal to w * id.
struct MatrixFactorization {
    GradingData g;
    Poly w;
    GVec wdeg;
    std::vector<GVec> tw_even, tw_odd;
    PolyMat d1;  // odd -> even
    PolyMat d0;  // even -> odd, carrying the wdeg twist

    int rank_even() const { return static_cast<int>(tw_even.size()); }
    int rank_odd() const { return static_cast<int>(tw_odd.size()); }
};

/// Koszul factorization of the ideal (f_1,...,f_c) from a decomposition
/// w = sum f_i g_i; ranks are (2^{c-1}, 2^{c-1}).
MatrixFactorization koszul_mf(const GradingData& g, const Poly& w,
                              const std::vector<std::pair<Poly, Poly>>& pairs);

/// Throws std::logic_error naming the offending entry when the composition
/// or homogeneity invariants fail.
void validate(const MatrixFactorization& x);

MatrixFactorization twist(const MatrixFactorization& x, const GVec& l);
MatrixFactorization shift(const MatrixFactorization& x, int s);
MatrixFactorization direct_sum(const MatrixFactorization& x, const MatrixFactorization& y);

/// Morphism data between matrix factorizations at a twist.
/// parity 0: a : X0 -> Y0(l), b : X1 -> Y1(l)
/// parity 1: a : X1 -> Y0(l), b : X0 -> Y1(l + wdeg)
struct MFMorphism {
    int parity = 0;
    GVec twist;
    PolyMat a, b;
};

/// Cone of an even, twist-zero cocycle phi : X -> Y.
MatrixFactorization cone(const MatrixFactorization& x, const MatrixFactorization& y, const MFMorphism& phi);

/// One stage of the unrolled 2-periodic complex.
struct UnrolledStage {
    std::vector<GVec> twists;  // labels t of (+) A(-t)
    PolyMat d;                 // differential from this stage into the previous one
};

/// `length` stages of the resolution ... -> C_1 -> C_0 with C_0 = X0(-start_twist).
std::vector<UnrolledStage> unroll(const MatrixFactorization& x, int length, const GVec& start_twist);

}  // namespace mfkit
