#pragma once

#include "mfkit/stablehom.hpp"

#include <set>
#include <string>
#include <vector>

namespace mfkit {

/// Object of a collection: a kind, placed on the integer lattice; the twist
/// and homological shift are determined by the position.
struct CollectionObject {
    std::string kind;
    GVec twist;
    int homshift = 0;
    std::vector<int> pos;
};

struct ExpectedArrow {
    int src = 0, dst = 0;  // indices into objects
    long dim = 1;
};

struct ExceptionalCollection {
    ModelCase model;
    bool strong_variant = true;
    std::vector<CollectionObject> objects;  // ordered lexicographically by position
};

/// Support components of a kind, e.g. "Mxy" -> {{0},{1}}, "M[yt]" -> {{1,3}}.
std::vector<std::vector<int>> kind_components(const std::string& kind);
std::string kind_name_from_components(std::vector<std::vector<int>> comps);
/// Union of the component variable sets.
std::vector<int> kind_support(const std::string& kind);

/// Twist and shift determined by a position, given the kind's support.
GVec placement_twist(const GradingData& g, const std::string& kind, const std::vector<int>& pos);
int placement_shift(const std::string& kind, const std::vector<int>& pos);

/// The explicit collection of a classified case. `strong=false` selects the
/// non-strong 3-chain layout (negative control).
ExceptionalCollection build_collection(const std::string& case_name, const std::vector<long long>& exps,
                                       bool strong = true);

/// Unit-cube arrow pattern with the per-case face exclusions; all dimensions
/// are 1 except the corner arrow in the 3-loop case (dimension 2). For the
/// non-strong 3-chain variant with p = 2 the extra non-cube arrow appears.
std::vector<ExpectedArrow> expected_arrows(const ExceptionalCollection& c);

/// Thom-Sebastiani product for split sums over disjoint variable sets.
ExceptionalCollection thom_sebastiani(const ExceptionalCollection& a, const ExceptionalCollection& b);

/// Conjectural generators for n = 4 ("4-chain" / "4-loop"): object kinds and
/// multiplicities only; no exceptionality claims.
ExceptionalCollection conjectural_collection(const std::string& type, const std::vector<long long>& exps);

/// Object count per kind (sorted by kind name).
std::vector<std::pair<std::string, long>> kind_counts(const ExceptionalCollection& c);

}  // namespace mfkit
