#pragma once

#include "mfkit/collections.hpp"

#include <map>
#include <string>
#include <vector>

namespace mfkit {

/// A nonzero morphism space between two collection objects.
struct RealizedArrow {
    int src = 0, dst = 0;
    long long bracket = 0;  // Hom(E_src, E_dst[bracket]) != 0
    long dim = 0;
};

struct VerificationReport {
    bool objects_exceptional = true;       // every Hom(E,E[*]) = k at 0 only
    bool hom_digraph_acyclic = true;       // some order makes the collection exceptional
    bool lex_semiorthogonal = true;        // no morphisms against the lexicographic order
    bool strong = true;                    // all morphisms in bracket 0
    bool pattern_matches = true;           // bracket-0 arrows equal the expected pattern
    std::vector<RealizedArrow> arrows;     // all nonzero spaces, any bracket
    std::vector<RealizedArrow> violations; // nonzero-bracket spaces
    std::vector<ExpectedArrow> missing;    // expected but absent at bracket 0
    std::vector<RealizedArrow> extra;      // present at bracket 0 but unexpected

    bool strong_exceptional() const {
        return objects_exceptional && hom_digraph_acyclic && strong;
    }
    bool clean() const { return strong_exceptional() && pattern_matches && lex_semiorthogonal; }
};

struct VerifyOptions {
    WindowOptions window;
    int jobs = 1;
};

/// Exhaustive pairwise check of a collection against its expected pattern.
VerificationReport check_collection(const ExceptionalCollection& c, const VerifyOptions& opt = {});

/// Tables for all ordered kind pairs of the collection's case.
std::map<std::pair<std::string, std::string>, GradedHomTable> pair_tables(const ModelCase& c,
                                                                          const std::vector<std::string>& kinds,
                                                                          const VerifyOptions& opt = {});

/// Bracket profile between two placed objects, from the kind-pair table.
std::vector<std::pair<long long, long>> object_profile(const GradedHomTable& t, const CollectionObject& a,
                                                       const CollectionObject& b);

bool check_exceptional_object(const GradedHomTable& self_table);
bool orthogonality(const GradedHomTable& ab, const GradedHomTable& ba, const CollectionObject& a,
                   const CollectionObject& b);

}  // namespace mfkit
