#pragma once

#include "mfkit/blocks.hpp"
#include "mfkit/fullness.hpp"

#include <string>

namespace mfkit {

/// All serializers are deterministic: map iteration orders are canonical and
/// every list is sorted before printing.

std::string group_to_json(const AbelianGroup& g);
std::string grading_to_json(const GradingData& g);
std::string decomposition_to_json(const AtomicDecomposition& d);

std::string table_to_tsv(const GradedHomTable& t);
std::string table_to_json(const GradedHomTable& t);

std::string collection_to_json(const ExceptionalCollection& c);
std::string collection_to_dot(const ExceptionalCollection& c);

std::string report_to_json(const ExceptionalCollection& c, const VerificationReport& r);
std::string report_to_tsv(const ExceptionalCollection& c, const VerificationReport& r);

std::string certificate_to_json(const FullnessCertificate& cert);

std::string quiver_to_dot(const ExceptionalCollection& c, const DimQuiver& q, const BlockDecomposition& bd,
                          const DimQuiver* before = nullptr);
std::string blocks_trace_to_json(const BlockDecomposition& initial, const BlockDecomposition& final_bd,
                                 const std::vector<MutationStep>& trace);

std::string mf_to_json(const MatrixFactorization& m);

}  // namespace mfkit
