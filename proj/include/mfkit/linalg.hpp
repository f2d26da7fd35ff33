#pragma once

#include "mfkit/numeric.hpp"

#include <map>
#include <vector>

namespace mfkit {

/// Dense integer matrix (arbitrary precision entries).
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    IntMat mul(const IntMat& other) const;
    bool operator==(const IntMat& other) const { return rows == other.rows && cols == other.cols && a == other.a; }
};

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMat& m);

/// U*M*V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SNFResult {
    IntMat U, D, V;
};
SNFResult smith_normal_form(const IntMat& m);

/// Dense rational matrix.
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    RatMat mul(const RatMat& other) const;
    bool is_zero() const;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& m);

long rank_dense(RatMat m);

/// Nullspace basis (as rows), in the canonical RREF-derived form.
std::vector<std::vector<Rat>> kernel_basis(RatMat m);

/// Sparse rational matrix used for rank computations on Hom-complex pieces.
/// Rows are kept as sorted column->value maps.
struct SparseRatMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Rat>> row;

    SparseRatMat() = default;
    SparseRatMat(int r, int c) : rows(r), cols(c), row(r) {}

    void add(int i, int j, const Rat& v);
    RatMat dense() const;
};

long rank_sparse(const SparseRatMat& m);

/// Dimension of the span of `extra` modulo the span of `base` (rows).
long rank_increment(const std::vector<std::vector<Rat>>& base, const std::vector<std::vector<Rat>>& extra);

}  // namespace mfkit
