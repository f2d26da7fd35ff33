#pragma once

#include "mfkit/mf.hpp"

#include <string>
#include <vector>

namespace mfkit {

/// One of the classified polynomial shapes together with its grading data.
struct ModelCase {
    std::string name;  // "1-chain", "2-split", ..., "3-loop"
    std::vector<long long> exps;
    InvertiblePolynomial w;
    GradingData g;
    Poly wpoly;
    int nvars = 0;

    long long p(int i) const { return exps[static_cast<size_t>(i)]; }
};

ModelCase make_case(const std::string& name, const std::vector<long long>& exps);

/// Exponent matrix of a named case.
std::vector<std::vector<long long>> case_matrix(const std::string& name, const std::vector<long long>& exps);

/// Kinds displayed in the collections: "k", "Mx", "My", "Mz", "Mxy", "Mxyz"
/// (plus "Mxz"/"Myz" as generation helpers).
std::vector<std::string> kinds_for_case(const ModelCase& c);
bool kind_defined(const ModelCase& c, const std::string& kind);

/// Monomial quotient underlying a kind.
MonomialModule kind_module(const ModelCase& c, const std::string& kind);

/// Truncation family k[x_v]/(x_v^i) (other variables act by zero).
MonomialModule truncation_module(const ModelCase& c, int var, long long i);

/// Two-variable families used in the generation arguments, e.g. k[x,z]/(x^i).
MonomialModule plane_truncation_module(const ModelCase& c, int keep_a, int keep_b, int trunc_var, long long i);
/// k[x_a, x_b]/(x_b * x_a^i) style quotients.
MonomialModule plane_product_module(const ModelCase& c, int keep_a, int keep_b, long long i);

/// Stabilized matrix factorization of a displayed kind, with the splitting
/// of w recorded in the catalogue for this case.
MatrixFactorization mf_for_kind(const ModelCase& c, const std::string& kind);

/// Twist labels of the first two steps of the module's resolution, used by
/// the cokernel probe (Euler characteristic of the truncated resolution).
struct AugmentationData {
    std::vector<GVec> p0, p1;
};
AugmentationData augmentation_for_kind(const ModelCase& c, const std::string& kind);

/// Graded dimension of coker(d1) predicted from the module side; the probe
/// asserts the matrix-factorization side agrees.
long predicted_coker_dim(const ModelCase& c, const std::string& kind, const GVec& degree);
long mf_coker_dim(const ModelCase& c, const MatrixFactorization& x, const GVec& degree);

}  // namespace mfkit
