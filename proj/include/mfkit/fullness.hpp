#pragma once

#include "mfkit/collections.hpp"

#include <string>
#include <vector>

namespace mfkit {

/// A state: a module kind at a class of the finite reduced grading group.
/// Homological shifts are erased and twists are reduced, so a state is a
/// (module name, canonical class) pair.
struct GenState {
    std::string kind;                 // module name (see fullness rule kinds)
    std::vector<long long> cls;       // canonical form in the reduced group
    bool operator<(const GenState& o) const { return std::tie(kind, cls) < std::tie(o.kind, o.cls); }
    bool operator==(const GenState& o) const { return kind == o.kind && cls == o.cls; }
};

/// Directed generation rule: from the inputs (all shifted by a free class
/// parameter) obtain the output. Slots whose module is a zero object in the
/// singularity category have been dropped at registration time.
struct GenRule {
    std::string provenance;  // which exact sequence the rule transcribes
    std::vector<std::pair<std::string, GVec>> inputs;  // (kind, twist offset)
    std::pair<std::string, GVec> output;
};

struct RuleSet {
    ModelCase model;
    std::vector<GenRule> rules;
    /// kind name -> underlying monomial quotient (for probes and exports)
    std::map<std::string, MonomialModule> modules;
};

/// Rules transcribed from the case's generation argument; every underlying
/// short exact sequence is dimension-probed and every zero-object claim is
/// re-derived from the non-zero-divisor criterion.
RuleSet register_rules(const ModelCase& c);

struct TraceStep {
    std::string provenance;
    GVec shift;        // instantiation of the free parameter (lift)
    GenState produced;
};

struct GenerationState {
    std::set<GenState> have;
    std::vector<TraceStep> trace;
};

/// Least fixed point of the rule set over the seed.
GenerationState saturate(const GenerationState& seed, const RuleSet& rules);

struct FullnessCertificate {
    bool certified = false;
    long long classes_covered = 0, classes_total = 0;
    std::vector<TraceStep> trace;
    std::vector<std::vector<long long>> missing;  // uncovered classes of the reduced group
};

/// Certifies that the collection generates the residue field at every class
/// of the reduced grading group.
FullnessCertificate certify_fullness(const ExceptionalCollection& c);
FullnessCertificate certify_fullness_seeded(const ModelCase& c, const std::vector<GenState>& seed);

GenState state_of_object(const ModelCase& c, const CollectionObject& o);

}  // namespace mfkit
