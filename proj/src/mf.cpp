#include "mfkit/mf.hpp"

#include <algorithm>
#include <sstream>

namespace mfkit {

PolyMat PolyMat::mul(const PolyMat& other) const {
    if (cols != other.rows) throw std::logic_error("matrix dimension mismatch in composition");
    int nv = 0;
    if (!a.empty()) nv = a[0].nvars;
    else if (!other.a.empty()) nv = other.a[0].nvars;
    PolyMat r(rows, other.cols, nv);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < other.cols; ++j) {
                if (other.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + at(i, k) * other.at(k, j);
            }
        }
    return r;
}

PolyMat PolyMat::operator-() const {
    PolyMat r = *this;
    for (Poly& p : r.a) p = -p;
    return r;
}

namespace {

int popcount(unsigned v) {
    int c = 0;
    while (v) {
        c += v & 1u;
        v >>= 1;
    }
    return c;
}

// subsets ordered by size then lexicographically by element list
std::vector<unsigned> ordered_subsets(int c, bool even) {
    std::vector<unsigned> subs;
    for (unsigned m = 0; m < (1u << c); ++m)
        if ((popcount(m) % 2 == 0) == even) subs.push_back(m);
    std::sort(subs.begin(), subs.end(), [](unsigned a, unsigned b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;  // bitmask order equals lex order on sorted element lists here
    });
    return subs;
}

int sign_before(unsigned mask, int i) {
    // (-1)^{#elements of mask below i}
    int cnt = popcount(mask & ((1u << i) - 1));
    return cnt % 2 == 0 ? 1 : -1;
}

}  // namespace

MatrixFactorization koszul_mf(const GradingData& g, const Poly& w,
                              const std::vector<std::pair<Poly, Poly>>& pairs) {
    const int c = static_cast<int>(pairs.size());
    Poly check = Poly::zero(g.nvars);
    for (const auto& [f, h] : pairs) check = check + f * h;
    if (!(check == w)) throw InputError("pair products do not sum to the potential");

    std::vector<GVec> fdeg(c);
    for (int i = 0; i < c; ++i) {
        auto d = homogeneous_degree(g, pairs[i].first);
        if (!d) throw InputError("zero factor in a Koszul pair");
        fdeg[i] = *d;
    }

    auto label = [&](unsigned mask) {
        GVec t = gvec_zero(g.nvars);
        for (int i = 0; i < c; ++i)
            if (mask & (1u << i)) t = gvec_add(t, fdeg[i]);
        int half = popcount(mask) / 2;
        for (int k = 0; k < half; ++k) t = gvec_sub(t, g.wdeg);
        return t;
    };

    std::vector<unsigned> evens = ordered_subsets(c, true);
    std::vector<unsigned> odds = ordered_subsets(c, false);
    std::map<unsigned, int> eidx, oidx;
    for (size_t i = 0; i < evens.size(); ++i) eidx[evens[i]] = static_cast<int>(i);
    for (size_t i = 0; i < odds.size(); ++i) oidx[odds[i]] = static_cast<int>(i);

    MatrixFactorization x;
    x.g = g;
    x.w = w;
    x.wdeg = g.wdeg;
    for (unsigned m : evens) x.tw_even.push_back(label(m));
    for (unsigned m : odds) x.tw_odd.push_back(label(m));
    x.d1 = PolyMat(static_cast<int>(evens.size()), static_cast<int>(odds.size()), g.nvars);
    x.d0 = PolyMat(static_cast<int>(odds.size()), static_cast<int>(evens.size()), g.nvars);

    // d = sum_i ( f_i * contraction_i + g_i * wedge_i ) with the usual signs
    for (unsigned m : odds) {
        int col = oidx[m];
        for (int i = 0; i < c; ++i) {
            if (m & (1u << i)) {  // contraction into an even subset
                unsigned tgt = m & ~(1u << i);
                Poly term = pairs[i].first.scaled(sign_before(m, i));
                x.d1.at(eidx[tgt], col) = x.d1.at(eidx[tgt], col) + term;
            } else {  // wedge into an even subset
                unsigned tgt = m | (1u << i);
                Poly term = pairs[i].second.scaled(sign_before(m, i));
                x.d1.at(eidx[tgt], col) = x.d1.at(eidx[tgt], col) + term;
            }
        }
    }
    for (unsigned m : evens) {
        int col = eidx[m];
        for (int i = 0; i < c; ++i) {
            if (m & (1u << i)) {
                unsigned tgt = m & ~(1u << i);
                Poly term = pairs[i].first.scaled(sign_before(m, i));
                x.d0.at(oidx[tgt], col) = x.d0.at(oidx[tgt], col) + term;
            } else {
                unsigned tgt = m | (1u << i);
                Poly term = pairs[i].second.scaled(sign_before(m, i));
                x.d0.at(oidx[tgt], col) = x.d0.at(oidx[tgt], col) + term;
            }
        }
    }
    validate(x);
    return x;
}

void validate(const MatrixFactorization& x) {
    const auto& g = x.g;
    auto check_entry = [&](const Poly& p, const GVec& want, const char* which, int i, int j) {
        if (p.is_zero()) return;
        auto d = homogeneous_degree(g, p);
        if (!d || !g.L->equal(*d, want)) {
            std::ostringstream os;
            os << "inhomogeneous entry " << which << "[" << i << "][" << j << "] = " << p.str();
            throw std::logic_error(os.str());
        }
    };
    for (int i = 0; i < x.d1.rows; ++i)
        for (int j = 0; j < x.d1.cols; ++j)
            check_entry(x.d1.at(i, j), gvec_sub(x.tw_odd[j], x.tw_even[i]), "d1", i, j);
    for (int i = 0; i < x.d0.rows; ++i)
        for (int j = 0; j < x.d0.cols; ++j)
            check_entry(x.d0.at(i, j), gvec_add(gvec_sub(x.tw_even[j], x.tw_odd[i]), x.wdeg), "d0", i, j);

    PolyMat p10 = x.d1.mul(x.d0);
    PolyMat p01 = x.d0.mul(x.d1);
    auto check_diag = [&](const PolyMat& m, const char* which) {
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) {
                const Poly want = (i == j) ? x.w : Poly::zero(g.nvars);
                if (!(m.at(i, j) == want)) {
                    std::ostringstream os;
                    os << "composition " << which << " is not w*id at (" << i << "," << j << "): "
                       << m.at(i, j).str();
                    throw std::logic_error(os.str());
                }
            }
    };
    check_diag(p10, "d1*d0");
    check_diag(p01, "d0*d1");
}

MatrixFactorization twist(const MatrixFactorization& x, const GVec& l) {
    MatrixFactorization r = x;
    for (GVec& t : r.tw_even) t = gvec_sub(t, l);
    for (GVec& t : r.tw_odd) t = gvec_sub(t, l);
    return r;
}

MatrixFactorization shift(const MatrixFactorization& x, int s) {
    MatrixFactorization r = x;
    int steps = s >= 0 ? s : -s;
    for (int k = 0; k < steps; ++k) {
        MatrixFactorization n = r;
        if (s >= 0) {
            // [1]: new X0 = X1(wdeg), new X1 = X0
            n.tw_even.clear();
            for (const GVec& u : r.tw_odd) n.tw_even.push_back(gvec_sub(u, r.wdeg));
            n.tw_odd = r.tw_even;
            n.d1 = -r.d0;
            n.d0 = -r.d1;
        } else {
            // [-1]: new X0 = X1, new X1 = X0(-wdeg)
            n.tw_even = r.tw_odd;
            n.tw_odd.clear();
            for (const GVec& t : r.tw_even) n.tw_odd.push_back(gvec_add(t, r.wdeg));
            n.d1 = -r.d0;
            n.d0 = -r.d1;
        }
        r = n;
    }
    return r;
}

MatrixFactorization direct_sum(const MatrixFactorization& x, const MatrixFactorization& y) {
    MatrixFactorization r;
    r.g = x.g;
    r.w = x.w;
    r.wdeg = x.wdeg;
    r.tw_even = x.tw_even;
    r.tw_even.insert(r.tw_even.end(), y.tw_even.begin(), y.tw_even.end());
    r.tw_odd = x.tw_odd;
    r.tw_odd.insert(r.tw_odd.end(), y.tw_odd.begin(), y.tw_odd.end());
    r.d1 = PolyMat(r.rank_even(), r.rank_odd(), x.g.nvars);
    r.d0 = PolyMat(r.rank_odd(), r.rank_even(), x.g.nvars);
    for (int i = 0; i < x.d1.rows; ++i)
        for (int j = 0; j < x.d1.cols; ++j) r.d1.at(i, j) = x.d1.at(i, j);
    for (int i = 0; i < y.d1.rows; ++i)
        for (int j = 0; j < y.d1.cols; ++j) r.d1.at(x.d1.rows + i, x.d1.cols + j) = y.d1.at(i, j);
    for (int i = 0; i < x.d0.rows; ++i)
        for (int j = 0; j < x.d0.cols; ++j) r.d0.at(i, j) = x.d0.at(i, j);
    for (int i = 0; i < y.d0.rows; ++i)
        for (int j = 0; j < y.d0.cols; ++j) r.d0.at(x.d0.rows + i, x.d0.cols + j) = y.d0.at(i, j);
    return r;
}

MatrixFactorization cone(const MatrixFactorization& x, const MatrixFactorization& y, const MFMorphism& phi) {
    if (phi.parity != 0) throw InputError("cone expects an even morphism");
    for (long long v : phi.twist)
        if (v != 0) throw InputError("cone expects a twist-zero morphism");

    MatrixFactorization c;
    c.g = y.g;
    c.w = y.w;
    c.wdeg = y.wdeg;
    c.tw_even = y.tw_even;
    for (const GVec& u : x.tw_odd) c.tw_even.push_back(gvec_sub(u, x.wdeg));
    c.tw_odd = y.tw_odd;
    for (const GVec& t : x.tw_even) c.tw_odd.push_back(t);

    c.d1 = PolyMat(c.rank_even(), c.rank_odd(), y.g.nvars);
    c.d0 = PolyMat(c.rank_odd(), c.rank_even(), y.g.nvars);
    const int ye = y.rank_even(), yo = y.rank_odd();
    for (int i = 0; i < yo; ++i)
        for (int j = 0; j < ye; ++j) c.d0.at(i, j) = y.d0.at(i, j);
    for (int i = 0; i < ye; ++i)
        for (int j = 0; j < yo; ++j) c.d1.at(i, j) = y.d1.at(i, j);
    // phi blocks
    for (int i = 0; i < ye; ++i)
        for (int j = 0; j < x.rank_even(); ++j) c.d1.at(i, yo + j) = phi.a.at(i, j);
    for (int i = 0; i < yo; ++i)
        for (int j = 0; j < x.rank_odd(); ++j) c.d0.at(i, ye + j) = phi.b.at(i, j);
    // shifted copy of x
    for (int i = 0; i < x.rank_odd(); ++i)
        for (int j = 0; j < x.rank_even(); ++j) c.d1.at(ye + i, yo + j) = -x.d0.at(i, j);
    for (int i = 0; i < x.rank_even(); ++i)
        for (int j = 0; j < x.rank_odd(); ++j) c.d0.at(yo + i, ye + j) = -x.d1.at(i, j);

    validate(c);
    return c;
}

std::vector<UnrolledStage> unroll(const MatrixFactorization& x, int length, const GVec& start_twist) {
    std::vector<UnrolledStage> stages;
    for (int j = 0; j < length; ++j) {
        UnrolledStage s;
        int period = j / 2;
        const auto& base = (j % 2 == 0) ? x.tw_even : x.tw_odd;
        for (const GVec& t : base) {
            GVec lab = t;
            for (int k = 0; k < period; ++k) lab = gvec_add(lab, x.wdeg);
            s.twists.push_back(gvec_sub(lab, start_twist));
        }
        s.d = (j % 2 == 1) ? x.d1 : x.d0;  // stage 0 has no outgoing differential; see below
        stages.push_back(std::move(s));
    }
    if (!stages.empty()) stages[0].d = PolyMat(0, 0, x.g.nvars);
    return stages;
}

}  // namespace mfkit
