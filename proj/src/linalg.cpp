#include "mfkit/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace mfkit {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& other) const {
    IntMat r(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols; ++j) r.at(i, j) += v * other.at(k, j);
        }
    return r;
}

Int determinant(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: square matrix required");
    int n = m.rows;
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
    IntMat D, U, V;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    // row_i -= q * row_j
    void row_op(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < D.cols; ++c) D.at(i, c) -= q * D.at(j, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) -= q * U.at(j, c);
    }
    // col_i -= q * col_j
    void col_op(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < D.rows; ++r) D.at(r, i) -= q * D.at(r, j);
        for (int r = 0; r < V.rows; ++r) V.at(r, i) -= q * V.at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < D.cols; ++c) D.at(i, c) = -D.at(i, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    }
};

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SNFResult smith_normal_form(const IntMat& m) {
    SnfWork w;
    w.D = m;
    w.U = IntMat::identity(m.rows);
    w.V = IntMat::identity(m.cols);
    const int steps = std::min(m.rows, m.cols);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry in the remaining block becomes the pivot
            int pi = -1, pj = -1;
            for (int i = t; i < m.rows; ++i)
                for (int j = t; j < m.cols; ++j) {
                    if (w.D.at(i, j) == 0) continue;
                    if (pi < 0 || abs_int(w.D.at(i, j)) < abs_int(w.D.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // block is zero
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < m.rows; ++i) {
                if (w.D.at(i, t) == 0) continue;
                Int q = w.D.at(i, t) / w.D.at(t, t);
                w.row_op(i, t, q);
                if (w.D.at(i, t) != 0) dirty = true;
            }
            if (dirty) continue;
            for (int j = t + 1; j < m.cols; ++j) {
                if (w.D.at(t, j) == 0) continue;
                Int q = w.D.at(t, j) / w.D.at(t, t);
                w.col_op(j, t, q);
                if (w.D.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // enforce divisibility of the rest of the block by the pivot
            bool divisible = true;
            for (int i = t + 1; i < m.rows && divisible; ++i)
                for (int j = t + 1; j < m.cols && divisible; ++j)
                    if (w.D.at(i, j) % w.D.at(t, t) != 0) {
                        w.row_op(t, i, Int(-1));  // fold the offending row in
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (w.D.at(t, t) < 0) w.negate_row(t);
    }
done:
    return SNFResult{w.U, w.D, w.V};
}

RatMat RatMat::mul(const RatMat& other) const {
    RatMat r(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols; ++j) r.at(i, j) += v * other.at(k, j);
        }
    return r;
}

bool RatMat::is_zero() const {
    for (const Rat& v : a)
        if (v != 0) return false;
    return true;
}

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        Rat inv = m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) /= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

long rank_dense(RatMat m) { return static_cast<long>(rref(m).size()); }

std::vector<std::vector<Rat>> kernel_basis(RatMat m) {
    const int n = m.cols;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(n);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            // row r has pivot at pivots[r]; solve for the pivot variable
            v[pivots[r]] = -m.at(static_cast<int>(r), c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void SparseRatMat::add(int i, int j, const Rat& v) {
    if (v == 0) return;
    Rat& slot = row[i][j];
    slot += v;
    if (slot == 0) row[i].erase(j);
}

RatMat SparseRatMat::dense() const {
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, v] : row[i]) m.at(i, j) = v;
    return m;
}

long rank_sparse(const SparseRatMat& m) {
    std::vector<std::map<int, Rat>> rows = m.row;
    std::vector<char> active(rows.size(), 1);
    // column -> number of active rows touching it
    std::map<int, long> colcount;
    for (const auto& r : rows)
        for (const auto& [c, v] : r) ++colcount[c];

    long rank = 0;
    for (;;) {
        int best = -1;
        size_t best_nnz = 0;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i].empty()) continue;
            if (best < 0 || rows[i].size() < best_nnz) {
                best = static_cast<int>(i);
                best_nnz = rows[i].size();
            }
        }
        if (best < 0) break;
        // pick the pivot column with fewest active occupants (less fill)
        int pcol = -1;
        long pcount = 0;
        for (const auto& [c, v] : rows[best]) {
            long cnt = colcount[c];
            if (pcol < 0 || cnt < pcount) {
                pcol = c;
                pcount = cnt;
            }
        }
        ++rank;
        Rat pv = rows[best].at(pcol);
        std::map<int, Rat> pivot_row = rows[best];
        for (const auto& [c, v] : pivot_row) --colcount[c];
        active[best] = 0;
        rows[best].clear();

        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            auto it = rows[i].find(pcol);
            if (it == rows[i].end()) continue;
            Rat f = it->second / pv;
            for (const auto& [c, v] : pivot_row) {
                auto jt = rows[i].find(c);
                if (jt == rows[i].end()) {
                    Rat nv = -f * v;
                    if (nv != 0) {
                        rows[i][c] = nv;
                        ++colcount[c];
                    }
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) {
                        rows[i].erase(jt);
                        --colcount[c];
                    }
                }
            }
        }
    }
    return rank;
}

long rank_increment(const std::vector<std::vector<Rat>>& base, const std::vector<std::vector<Rat>>& extra) {
    if (extra.empty()) return 0;
    const int n = static_cast<int>(extra[0].size());
    RatMat m(static_cast<int>(base.size() + extra.size()), n);
    int r = 0;
    for (const auto& v : base) {
        for (int j = 0; j < n; ++j) m.at(r, j) = v[j];
        ++r;
    }
    for (const auto& v : extra) {
        for (int j = 0; j < n; ++j) m.at(r, j) = v[j];
        ++r;
    }
    long total = rank_dense(m);
    RatMat b(static_cast<int>(base.size()), n);
    for (size_t i = 0; i < base.size(); ++i)
        for (int j = 0; j < n; ++j) b.at(static_cast<int>(i), j) = base[i][j];
    return total - rank_dense(std::move(b));
}

}  // namespace mfkit
