#include "mfkit/stablehom.hpp"

#include <algorithm>
#include <functional>

namespace mfkit {

long GradedHomTable::parity_dim(const GVec& l, int parity) const {
    const auto& m = (parity % 2 == 0) ? even : odd;
    auto it = m.find(g.L->canonical_form(l));
    if (it != m.end()) return it->second.second;
    long long r = g.rho(l);
    if (audited && (r < rho_lo || r > rho_hi)) return 0;  // audited vanishing
    if (r < rho_lo || r > rho_hi) throw AuditError("degree outside unaudited window");
    return 0;
}

long GradedHomTable::dim_at(const GVec& l, long long i) const {
    long long eps = ((i % 2) + 2) % 2;
    long long j = (i - eps) / 2;
    GVec shifted = gvec_add(l, gvec_scale(j, g.wdeg));
    return parity_dim(shifted, static_cast<int>(eps));
}

long GradedHomTable::total_dim() const {
    long t = 0;
    for (const auto& [k, v] : even) t += v.second;
    for (const auto& [k, v] : odd) t += v.second;
    return t;
}

std::vector<std::pair<long long, long>> GradedHomTable::bracket_profile(const GVec& l) const {
    std::vector<std::pair<long long, long>> out;
    long long rl = g.rho(l);
    for (int parity = 0; parity < 2; ++parity) {
        const auto& m = (parity == 0) ? even : odd;
        for (const auto& [canon, val] : m) {
            const GVec& target = val.first;
            long long diff = g.rho(target) - rl;
            if (diff % g.rho_w != 0) continue;
            long long j = diff / g.rho_w;
            if (g.L->canonical_form(gvec_add(l, gvec_scale(j, g.wdeg))) != canon) continue;
            out.emplace_back(2 * j + parity, val.second);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<GVec, long>> GradedHomTable::support(int parity) const {
    std::vector<std::pair<GVec, long>> out;
    const auto& m = (parity % 2 == 0) ? even : odd;
    for (const auto& [canon, val] : m) out.push_back(val);
    return out;
}

long long default_margin(const GradingData& g) {
    long long m = g.rho_w;
    for (long long r : g.rho_x) m += r;
    return 2 * m;
}

namespace {

// ---------------------------------------------------------------------------
// module route: Hom complex of the unrolled factorization into a module
// ---------------------------------------------------------------------------

struct ModuleHomEngine {
    const GradingData& g;
    const MatrixFactorization& x;
    const MonomialModule& n;

    // per-degree module bases, keyed by canonical form
    std::map<std::vector<long long>, std::vector<Expo>> basis_cache;
    std::map<std::vector<long long>, long> rank_u_cache, rank_v_cache;

    const std::vector<Expo>& basis(const GVec& d) {
        auto key = g.L->canonical_form(d);
        auto it = basis_cache.find(key);
        if (it != basis_cache.end()) return it->second;
        return basis_cache.emplace(key, module_basis(g, n, d)).first->second;
    }

    long space_dim(const GVec& l, const std::vector<GVec>& tw) {
        long d = 0;
        for (const GVec& t : tw) d += static_cast<long>(basis(gvec_add(l, t)).size());
        return d;
    }

    // matrix of precomposition with dmat between the two stages of the
    // periodic complex at twist l (dst_l = l for u, l + wdeg for v)
    SparseRatMat build(const GVec& l, const GVec& dst_l, const std::vector<GVec>& src_tw,
                       const std::vector<GVec>& dst_tw, const PolyMat& dmat, bool transpose_entry) {
        std::vector<const std::vector<Expo>*> src_b, dst_b;
        std::vector<int> src_off{0}, dst_off{0};
        for (const GVec& t : src_tw) {
            src_b.push_back(&basis(gvec_add(l, t)));
            src_off.push_back(src_off.back() + static_cast<int>(src_b.back()->size()));
        }
        for (const GVec& t : dst_tw) {
            dst_b.push_back(&basis(gvec_add(dst_l, t)));
            dst_off.push_back(dst_off.back() + static_cast<int>(dst_b.back()->size()));
        }
        SparseRatMat m(dst_off.back(), src_off.back());
        for (size_t a = 0; a < src_tw.size(); ++a)
            for (size_t bidx = 0; bidx < dst_tw.size(); ++bidx) {
                const Poly& entry = transpose_entry ? dmat.at(static_cast<int>(a), static_cast<int>(bidx))
                                                    : dmat.at(static_cast<int>(bidx), static_cast<int>(a));
                if (entry.is_zero()) continue;
                const auto& sb = *src_b[a];
                const auto& db = *dst_b[bidx];
                for (size_t j = 0; j < sb.size(); ++j)
                    for (const auto& [fe, fc] : entry.terms) {
                        Expo prod(g.nvars);
                        for (int v = 0; v < g.nvars; ++v) prod[v] = sb[j][v] + fe[v];
                        if (n.in_ideal(prod)) continue;
                        auto it = std::lower_bound(db.begin(), db.end(), prod, GrlexLess{});
                        if (it == db.end() || !(*it == prod)) throw std::logic_error("monomial escaped basis");
                        m.add(dst_off[bidx] + static_cast<int>(it - db.begin()),
                              src_off[a] + static_cast<int>(j), fc);
                    }
            }
        return m;
    }

    // u(l) : B_even(l) -> B_odd(l), precomposition with d1; block (b <- a)
    // multiplies by d1[a][b]
    long rank_u(const GVec& l) {
        auto key = g.L->canonical_form(l);
        auto it = rank_u_cache.find(key);
        if (it != rank_u_cache.end()) return it->second;
        long r = rank_sparse(build(l, l, x.tw_even, x.tw_odd, x.d1, true));
        rank_u_cache.emplace(key, r);
        return r;
    }

    // v(l) : B_odd(l) -> B_even(l + wdeg), precomposition with d0
    long rank_v(const GVec& l) {
        auto key = g.L->canonical_form(l);
        auto it = rank_v_cache.find(key);
        if (it != rank_v_cache.end()) return it->second;
        long r = rank_sparse(build(l, gvec_add(l, g.wdeg), x.tw_odd, x.tw_even, x.d0, true));
        rank_v_cache.emplace(key, r);
        return r;
    }

    long h_even(const GVec& l) {
        return space_dim(l, x.tw_even) - rank_u(l) - rank_v(gvec_sub(l, g.wdeg));
    }
    long h_odd(const GVec& l) { return space_dim(l, x.tw_odd) - rank_v(l) - rank_u(l); }
};

// ---------------------------------------------------------------------------
// general route: Hom complex of two matrix factorizations over R
// ---------------------------------------------------------------------------

/// Layout of the even or odd morphism space at a twist.
struct BlockSpace {
    struct Block {
        int slot;  // 0: "a" component, 1: "b" component
        int a, b;  // row in Y-side, column in X-side
        GVec degree;
        std::vector<Expo> basis;
        int offset;
    };
    std::vector<Block> blocks;
    int dim = 0;

    int find_offset(int slot, int a, int b) const {
        for (const auto& blk : blocks)
            if (blk.slot == slot && blk.a == a && blk.b == b) return blk.offset;
        throw std::logic_error("block not found");
    }
    const Block* find(int slot, int a, int b) const {
        for (const auto& blk : blocks)
            if (blk.slot == slot && blk.a == a && blk.b == b) return &blk;
        return nullptr;
    }
};

struct MFHomEngine {
    const GradingData& g;
    const MatrixFactorization& x;  // source
    const MatrixFactorization& y;  // target
    MonomialModule R;

    std::map<std::vector<long long>, long> rank_e_cache, rank_o_cache;

    explicit MFHomEngine(const GradingData& gg, const MatrixFactorization& xx, const MatrixFactorization& yy)
        : g(gg), x(xx), y(yy), R(ring_module(gg.nvars)) {}

    BlockSpace even_space(const GVec& l) {
        BlockSpace s;
        for (int a = 0; a < y.rank_even(); ++a)
            for (int b = 0; b < x.rank_even(); ++b) {
                GVec d = gvec_add(gvec_sub(x.tw_even[b], y.tw_even[a]), l);
                s.blocks.push_back({0, a, b, d, module_basis(g, R, d), s.dim});
                s.dim += static_cast<int>(s.blocks.back().basis.size());
            }
        for (int a = 0; a < y.rank_odd(); ++a)
            for (int b = 0; b < x.rank_odd(); ++b) {
                GVec d = gvec_add(gvec_sub(x.tw_odd[b], y.tw_odd[a]), l);
                s.blocks.push_back({1, a, b, d, module_basis(g, R, d), s.dim});
                s.dim += static_cast<int>(s.blocks.back().basis.size());
            }
        return s;
    }

    BlockSpace odd_space(const GVec& l) {
        BlockSpace s;
        for (int a = 0; a < y.rank_even(); ++a)
            for (int b = 0; b < x.rank_odd(); ++b) {
                GVec d = gvec_add(gvec_sub(x.tw_odd[b], y.tw_even[a]), l);
                s.blocks.push_back({0, a, b, d, module_basis(g, R, d), s.dim});
                s.dim += static_cast<int>(s.blocks.back().basis.size());
            }
        for (int a = 0; a < y.rank_odd(); ++a)
            for (int b = 0; b < x.rank_even(); ++b) {
                GVec d = gvec_add(gvec_add(gvec_sub(x.tw_even[b], y.tw_odd[a]), l), g.wdeg);
                s.blocks.push_back({1, a, b, d, module_basis(g, R, d), s.dim});
                s.dim += static_cast<int>(s.blocks.back().basis.size());
            }
        return s;
    }

    void emit(SparseRatMat& m, const BlockSpace& out, int slot, int a, int b, const Poly& f,
              const Expo& mono, int col, const Rat& sign) {
        if (f.is_zero()) return;
        const BlockSpace::Block* blk = out.find(slot, a, b);
        if (!blk) throw std::logic_error("missing output block");
        for (const auto& [fe, fc] : f.terms) {
            Expo prod(g.nvars);
            for (int v = 0; v < g.nvars; ++v) prod[v] = mono[v] + fe[v];
            auto it = std::lower_bound(blk->basis.begin(), blk->basis.end(), prod, GrlexLess{});
            if (it == blk->basis.end() || !(*it == prod)) throw std::logic_error("monomial escaped basis");
            m.add(blk->offset + static_cast<int>(it - blk->basis.begin()), col, fc * sign);
        }
    }

    // d_even : E(l) -> O(l)
    SparseRatMat d_even(const BlockSpace& e, const BlockSpace& o) {
        SparseRatMat m(o.dim, e.dim);
        for (const auto& blk : e.blocks) {
            int col = blk.offset;
            for (const Expo& mono : blk.basis) {
                if (blk.slot == 0) {  // f0 component at (a, b)
                    for (int b2 = 0; b2 < x.rank_odd(); ++b2)
                        emit(m, o, 0, blk.a, b2, Poly::monomial(g.nvars, mono) * x.d1.at(blk.b, b2), Expo(g.nvars, 0), col, -1);
                    for (int a2 = 0; a2 < y.rank_odd(); ++a2)
                        emit(m, o, 1, a2, blk.b, y.d0.at(a2, blk.a), mono, col, 1);
                } else {  // f1 component
                    for (int a2 = 0; a2 < y.rank_even(); ++a2)
                        emit(m, o, 0, a2, blk.b, y.d1.at(a2, blk.a), mono, col, 1);
                    for (int b2 = 0; b2 < x.rank_even(); ++b2)
                        emit(m, o, 1, blk.a, b2, Poly::monomial(g.nvars, mono) * x.d0.at(blk.b, b2), Expo(g.nvars, 0), col, -1);
                }
                ++col;
            }
        }
        return m;
    }

    // d_odd : O(l) -> E(l + wdeg)
    SparseRatMat d_odd(const BlockSpace& o, const BlockSpace& e_next) {
        SparseRatMat m(e_next.dim, o.dim);
        for (const auto& blk : o.blocks) {
            int col = blk.offset;
            for (const Expo& mono : blk.basis) {
                if (blk.slot == 0) {  // g_a : X1 -> Y0(l) at (a, b)
                    for (int b2 = 0; b2 < x.rank_even(); ++b2)
                        emit(m, e_next, 0, blk.a, b2, Poly::monomial(g.nvars, mono) * x.d0.at(blk.b, b2), Expo(g.nvars, 0), col, 1);
                    for (int a2 = 0; a2 < y.rank_odd(); ++a2)
                        emit(m, e_next, 1, a2, blk.b, y.d0.at(a2, blk.a), mono, col, 1);
                } else {  // g_b : X0 -> Y1(l + wdeg) at (a, b)
                    for (int a2 = 0; a2 < y.rank_even(); ++a2)
                        emit(m, e_next, 0, a2, blk.b, y.d1.at(a2, blk.a), mono, col, 1);
                    for (int b2 = 0; b2 < x.rank_odd(); ++b2)
                        emit(m, e_next, 1, blk.a, b2, Poly::monomial(g.nvars, mono) * x.d1.at(blk.b, b2), Expo(g.nvars, 0), col, 1);
                }
                ++col;
            }
        }
        return m;
    }

    long rank_d_even(const GVec& l) {
        auto key = g.L->canonical_form(l);
        auto it = rank_e_cache.find(key);
        if (it != rank_e_cache.end()) return it->second;
        BlockSpace e = even_space(l), o = odd_space(l);
        long r = rank_sparse(d_even(e, o));
        rank_e_cache.emplace(key, r);
        return r;
    }

    long rank_d_odd(const GVec& l) {
        auto key = g.L->canonical_form(l);
        auto it = rank_o_cache.find(key);
        if (it != rank_o_cache.end()) return it->second;
        BlockSpace o = odd_space(l), e = even_space(gvec_add(l, g.wdeg));
        long r = rank_sparse(d_odd(o, e));
        rank_o_cache.emplace(key, r);
        return r;
    }

    long h_even(const GVec& l) {
        return even_space(l).dim - rank_d_even(l) - rank_d_odd(gvec_sub(l, g.wdeg));
    }
    long h_odd(const GVec& l) { return odd_space(l).dim - rank_d_odd(l) - rank_d_even(l); }
};

// shared window-scan driver
template <typename HEven, typename HOdd>
GradedHomTable scan_window(const GradingData& g, long long lo, long long hi, const WindowOptions& opt,
                           HEven h_even, HOdd h_odd) {
    long long margin = opt.margin.value_or(default_margin(g));
    if (margin < 2) margin = 2;
    lo -= margin;
    hi += margin;

    auto classes = g.torsion_classes();
    for (int attempt = 0;; ++attempt) {
        GradedHomTable t;
        t.g = g;
        t.rho_lo = lo;
        t.rho_hi = hi;
        bool boundary_clear = true;
        for (long long r = lo; r <= hi; ++r) {
            for (const auto& tc : classes) {
                GVec l = g.element_at(r, tc);
                long de = h_even(l);
                long dodd = h_odd(l);
                if (de < 0 || dodd < 0) throw std::logic_error("negative cohomology dimension");
                if (de > 0) t.even[g.L->canonical_form(l)] = {l, de};
                if (dodd > 0) t.odd[g.L->canonical_form(l)] = {l, dodd};
                bool on_boundary = (r <= lo + 1) || (r >= hi - 1);
                if (on_boundary && (de > 0 || dodd > 0)) boundary_clear = false;
            }
        }
        if (boundary_clear) {
            t.audited = true;
            return t;
        }
        if (attempt >= opt.max_retries)
            throw AuditError("window audit failed: nonvanishing dimensions on the boundary shells");
        lo -= margin;
        hi += margin;
    }
}

}  // namespace

GradedHomTable stable_hom_module(const GradingData& g, const MatrixFactorization& x, const MonomialModule& n,
                                 const WindowOptions& opt) {
    ModuleHomEngine eng{g, x, n, {}, {}, {}};
    long long lo = 0, hi = 0;
    bool first = true;
    for (const auto& tws : {std::cref(x.tw_even), std::cref(x.tw_odd)})
        for (const GVec& t : tws.get()) {
            long long v = -g.rho(t);
            if (first) {
                lo = hi = v;
                first = false;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    return scan_window(
        g, lo, hi, opt, [&](const GVec& l) { return eng.h_even(l); },
        [&](const GVec& l) { return eng.h_odd(l); });
}

GradedHomTable stable_hom_mf(const MatrixFactorization& x, const MatrixFactorization& y,
                             const WindowOptions& opt) {
    const GradingData& g = x.g;
    if (x.rank_even() == 0 && x.rank_odd() == 0) {
        GradedHomTable t;
        t.g = g;
        t.audited = true;
        return t;
    }
    MFHomEngine eng(g, x, y);
    long long lo = 0, hi = 0;
    bool first = true;
    for (const auto& ty : {std::cref(y.tw_even), std::cref(y.tw_odd)})
        for (const auto& tx : {std::cref(x.tw_even), std::cref(x.tw_odd)})
            for (const GVec& a : ty.get())
                for (const GVec& b : tx.get()) {
                    long long v = g.rho(a) - g.rho(b);
                    if (first) {
                        lo = hi = v;
                        first = false;
                    } else {
                        lo = std::min(lo, v);
                        hi = std::max(hi, v);
                    }
                }
    return scan_window(
        g, lo, hi, opt, [&](const GVec& l) { return eng.h_even(l); },
        [&](const GVec& l) { return eng.h_odd(l); });
}

GradedHomTable stable_hom(const ModelCase& c, const std::string& src_kind, const std::string& dst_kind,
                          const WindowOptions& opt) {
    MatrixFactorization x = mf_for_kind(c, src_kind);
    MonomialModule n = kind_module(c, dst_kind);
    return stable_hom_module(c.g, x, n, opt);
}

long graded_component(const GradedHomTable& t, const GVec& l, long long i) { return t.dim_at(l, i); }

bool is_zero_object(const MatrixFactorization& x, const WindowOptions& opt) {
    return stable_hom_mf(x, x, opt).is_zero();
}

namespace {

std::vector<Rat> pack(const BlockSpace& s, const MFMorphism& m) {
    std::vector<Rat> v(s.dim);
    for (const auto& blk : s.blocks) {
        const PolyMat& mat = (blk.slot == 0) ? m.a : m.b;
        const Poly& p = mat.at(blk.a, blk.b);
        for (const auto& [e, c] : p.terms) {
            auto it = std::lower_bound(blk.basis.begin(), blk.basis.end(), e, GrlexLess{});
            if (it == blk.basis.end() || !(*it == e)) throw std::logic_error("morphism entry outside basis");
            v[blk.offset + static_cast<int>(it - blk.basis.begin())] = c;
        }
    }
    return v;
}

MFMorphism unpack(const GradingData& g, const MatrixFactorization& x, const MatrixFactorization& y,
                  const BlockSpace& s, const GVec& l, int parity, const std::vector<Rat>& v) {
    MFMorphism m;
    m.parity = parity;
    m.twist = l;
    if (parity == 0) {
        m.a = PolyMat(y.rank_even(), x.rank_even(), g.nvars);
        m.b = PolyMat(y.rank_odd(), x.rank_odd(), g.nvars);
    } else {
        m.a = PolyMat(y.rank_even(), x.rank_odd(), g.nvars);
        m.b = PolyMat(y.rank_odd(), x.rank_even(), g.nvars);
    }
    for (const auto& blk : s.blocks) {
        PolyMat& mat = (blk.slot == 0) ? m.a : m.b;
        Poly p = Poly::zero(g.nvars);
        for (size_t j = 0; j < blk.basis.size(); ++j) {
            const Rat& c = v[blk.offset + static_cast<int>(j)];
            if (c != 0) p = p + Poly::monomial(g.nvars, blk.basis[j], c);
        }
        mat.at(blk.a, blk.b) = p;
    }
    return m;
}

struct SlotData {
    BlockSpace space;           // the slot itself
    RatMat out;                 // outgoing differential (dense)
    std::vector<std::vector<Rat>> image;  // incoming image vectors (rows)
};

SlotData slot_data(const MatrixFactorization& x, const MatrixFactorization& y, const GVec& l, int parity) {
    MFHomEngine eng(x.g, x, y);
    SlotData d;
    if (parity == 0) {
        BlockSpace e = eng.even_space(l);
        BlockSpace o = eng.odd_space(l);
        d.out = eng.d_even(e, o).dense();
        BlockSpace oprev = eng.odd_space(gvec_sub(l, x.g.wdeg));
        RatMat din = eng.d_odd(oprev, e).dense();
        for (int j = 0; j < din.cols; ++j) {
            std::vector<Rat> col(din.rows);
            for (int i = 0; i < din.rows; ++i) col[i] = din.at(i, j);
            d.image.push_back(std::move(col));
        }
        d.space = std::move(e);
    } else {
        BlockSpace o = eng.odd_space(l);
        BlockSpace enext = eng.even_space(gvec_add(l, x.g.wdeg));
        d.out = eng.d_odd(o, enext).dense();
        BlockSpace e = eng.even_space(l);
        RatMat din = eng.d_even(e, o).dense();
        for (int j = 0; j < din.cols; ++j) {
            std::vector<Rat> col(din.rows);
            for (int i = 0; i < din.rows; ++i) col[i] = din.at(i, j);
            d.image.push_back(std::move(col));
        }
        d.space = std::move(o);
    }
    return d;
}

}  // namespace

std::vector<MFMorphism> cocycle_basis(const MatrixFactorization& x, const MatrixFactorization& y,
                                      const GVec& l, int parity) {
    SlotData d = slot_data(x, y, l, parity);
    std::vector<std::vector<Rat>> ker = kernel_basis(d.out);

    // pick kernel vectors extending the image span
    std::vector<std::vector<Rat>> picked;
    std::vector<std::vector<Rat>> span = d.image;
    for (auto& k : ker) {
        if (rank_increment(span, {k}) == 1) {
            span.push_back(k);
            picked.push_back(k);
        }
    }
    // reduced-row-echelon normalization of the representatives
    if (!picked.empty()) {
        RatMat m(static_cast<int>(picked.size()), d.space.dim);
        for (size_t i = 0; i < picked.size(); ++i)
            for (int j = 0; j < d.space.dim; ++j) m.at(static_cast<int>(i), j) = picked[i][j];
        rref(m);
        for (size_t i = 0; i < picked.size(); ++i)
            for (int j = 0; j < d.space.dim; ++j) picked[i][j] = m.at(static_cast<int>(i), j);
    }
    std::vector<MFMorphism> out;
    for (const auto& v : picked) out.push_back(unpack(x.g, x, y, d.space, l, parity, v));
    return out;
}

MFMorphism compose(const GradingData& g, const MFMorphism& alpha, const MFMorphism& beta) {
    MFMorphism r;
    r.parity = (alpha.parity + beta.parity) % 2;
    r.twist = gvec_add(alpha.twist, beta.twist);
    if (alpha.parity == 1 && beta.parity == 1) r.twist = gvec_add(r.twist, g.wdeg);
    if (alpha.parity == 0 && beta.parity == 0) {
        r.a = beta.a.mul(alpha.a);
        r.b = beta.b.mul(alpha.b);
    } else if (alpha.parity == 0 && beta.parity == 1) {
        r.a = beta.a.mul(alpha.b);
        r.b = beta.b.mul(alpha.a);
    } else if (alpha.parity == 1 && beta.parity == 0) {
        r.a = beta.a.mul(alpha.a);
        r.b = beta.b.mul(alpha.b);
    } else {
        r.a = beta.a.mul(alpha.b);
        r.b = beta.b.mul(alpha.a);
    }
    return r;
}

std::vector<Rat> class_coordinates(const MatrixFactorization& x, const MatrixFactorization& y,
                                   const MFMorphism& m) {
    SlotData d = slot_data(x, y, m.twist, m.parity);
    std::vector<Rat> vec = pack(d.space, m);

    // sanity: must be a cocycle
    for (int i = 0; i < d.out.rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < d.out.cols; ++j) s += d.out.at(i, j) * vec[j];
        if (s != 0) throw std::logic_error("class_coordinates: not a cocycle");
    }

    std::vector<MFMorphism> reps = cocycle_basis(x, y, m.twist, m.parity);
    std::vector<std::vector<Rat>> rep_vecs;
    for (const auto& r : reps) rep_vecs.push_back(pack(d.space, r));

    // solve vec = sum c_i rep_i + sum b_j image_j
    int cols = static_cast<int>(rep_vecs.size() + d.image.size());
    RatMat sys(d.space.dim, cols + 1);
    for (size_t j = 0; j < rep_vecs.size(); ++j)
        for (int i = 0; i < d.space.dim; ++i) sys.at(i, static_cast<int>(j)) = rep_vecs[j][i];
    for (size_t j = 0; j < d.image.size(); ++j)
        for (int i = 0; i < d.space.dim; ++i)
            sys.at(i, static_cast<int>(rep_vecs.size() + j)) = d.image[j][i];
    for (int i = 0; i < d.space.dim; ++i) sys.at(i, cols) = vec[i];

    std::vector<int> pivots = rref(sys);
    // read the solution for the representative coefficients
    std::vector<Rat> sol(cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) throw std::logic_error("class_coordinates: inconsistent system");
        sol[pivots[r]] = sys.at(static_cast<int>(r), cols);
    }
    return std::vector<Rat>(sol.begin(), sol.begin() + static_cast<long>(rep_vecs.size()));
}

bool class_is_zero(const MatrixFactorization& x, const MatrixFactorization& y, const MFMorphism& m) {
    for (const Rat& c : class_coordinates(x, y, m))
        if (c != 0) return false;
    return true;
}

MFMorphism identity_morphism(const MatrixFactorization& x) {
    MFMorphism m;
    m.parity = 0;
    m.twist = gvec_zero(x.g.nvars);
    m.a = PolyMat(x.rank_even(), x.rank_even(), x.g.nvars);
    m.b = PolyMat(x.rank_odd(), x.rank_odd(), x.g.nvars);
    Poly one = Poly::monomial(x.g.nvars, Expo(x.g.nvars, 0));
    for (int i = 0; i < x.rank_even(); ++i) m.a.at(i, i) = one;
    for (int i = 0; i < x.rank_odd(); ++i) m.b.at(i, i) = one;
    return m;
}

}  // namespace mfkit
