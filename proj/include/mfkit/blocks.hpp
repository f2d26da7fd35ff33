#pragma once

#include "mfkit/verify.hpp"

#include <string>
#include <vector>

namespace mfkit {

/// Quiver of nonzero morphism spaces of a verified strong collection.
struct DimQuiver {
    struct Edge {
        int src = 0, dst = 0;
        long dim = 0;
        long long bracket = 0;
    };
    int num_vertices = 0;
    std::vector<Edge> edges;
};

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // ordered blocks of vertex indices
};

DimQuiver quiver_from_report(const ExceptionalCollection& c, const VerificationReport& r);

/// Blocks by the coordinate sum of the lattice positions.
BlockDecomposition antidiagonal_blocks(const ExceptionalCollection& c);

/// One mutation step: all arrows into the last block are reversed (equal
/// dimensions), and the last block is relocated in front of the trailing
/// window. Throws when the head is not orthogonal to the last block.
struct MutationStep {
    int sink_block = 0;    // 1-based index of the mutated block
    int merged_into = 0;   // 1-based index it is united with
};
void invert_sink_block(DimQuiver& q, BlockDecomposition& bd, int window);

/// Repeated sink mutations until at most n+1 blocks remain; returns the
/// merge trace.
std::vector<MutationStep> reduce_blocks(DimQuiver& q, BlockDecomposition& bd, int window);

bool block_internally_orthogonal(const DimQuiver& q, const std::vector<int>& block);
bool blocks_orthogonal(const DimQuiver& q, const std::vector<int>& a, const std::vector<int>& b);

/// Concrete mutation of an exceptional pair at the matrix-factorization
/// level: left = cone(ev)[-1], right = cone(coev).
MatrixFactorization concrete_mutation(const MatrixFactorization& e, const MatrixFactorization& f,
                                      const std::string& direction);

}  // namespace mfkit
