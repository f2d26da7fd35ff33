#include "mfkit/cases.hpp"

#include <algorithm>

namespace mfkit {

namespace {

long long exp_at(const std::vector<long long>& e, size_t i) {
    if (i >= e.size()) throw InputError("not enough exponents for this case");
    if (e[i] < 2) throw InputError("exponents must be at least 2");
    return e[i];
}

}  // namespace

std::vector<std::vector<long long>> case_matrix(const std::string& name, const std::vector<long long>& e) {
    auto p = [&](size_t i) { return exp_at(e, i); };
    if (name == "1-chain") return {{p(0)}};
    if (name == "2-split") return {{p(0), 0}, {0, p(1)}};
    if (name == "2-chain") return {{p(0), 0}, {1, p(1)}};
    if (name == "2-loop") return {{p(0), 1}, {1, p(1)}};
    if (name == "3-split-a") return {{p(0), 0, 0}, {0, p(1), 0}, {0, 0, p(2)}};
    if (name == "3-split-b") return {{p(0), 0, 0}, {1, p(1), 0}, {0, 0, p(2)}};
    if (name == "3-split-c") return {{p(0), 1, 0}, {1, p(1), 0}, {0, 0, p(2)}};
    if (name == "3-chain") return {{p(0), 0, 0}, {1, p(1), 0}, {0, 1, p(2)}};
    if (name == "3-loop") return {{p(0), 0, 1}, {1, p(1), 0}, {0, 1, p(2)}};
    if (name == "4-chain") return {{p(0), 0, 0, 0}, {1, p(1), 0, 0}, {0, 1, p(2), 0}, {0, 0, 1, p(3)}};
    if (name == "4-loop") return {{p(0), 0, 0, 1}, {1, p(1), 0, 0}, {0, 1, p(2), 0}, {0, 0, 1, p(3)}};
    throw InputError("unknown case: " + name);
}

ModelCase make_case(const std::string& name, const std::vector<long long>& exps) {
    ModelCase c;
    c.name = name;
    c.exps = exps;
    c.w = InvertiblePolynomial::from_matrix(case_matrix(name, exps));
    c.g = grading_data(c.w);
    c.wpoly = potential_poly(c.w);
    c.nvars = c.w.n;
    return c;
}

std::vector<std::string> kinds_for_case(const ModelCase& c) {
    const std::string& n = c.name;
    if (n == "1-chain" || n == "2-split" || n == "3-split-a") return {"k"};
    if (n == "2-chain" || n == "3-split-b") return {"k", "My"};
    if (n == "2-loop") return {"k", "My", "Mx", "Mxy"};
    if (n == "3-split-c") return {"k", "My", "Mx", "Mxy"};
    if (n == "3-chain") return {"k", "My", "Mz"};
    if (n == "3-loop") return {"k", "My", "Mx", "Mz", "Mxyz"};
    throw InputError("kinds_for_case: unsupported case " + n);
}

bool kind_defined(const ModelCase& c, const std::string& kind) {
    auto ks = kinds_for_case(c);
    return std::find(ks.begin(), ks.end(), kind) != ks.end();
}

namespace {

Expo unit(int n, int i, int k = 1) {
    Expo e(n, 0);
    e[i] = k;
    return e;
}

}  // namespace

MonomialModule kind_module(const ModelCase& c, const std::string& kind) {
    const int n = c.nvars;
    MonomialModule m;
    m.name = kind;
    m.nvars = n;
    auto axis = [&](int keep) {
        for (int i = 0; i < n; ++i)
            if (i != keep) m.ideal_gens.push_back(unit(n, i));
    };
    if (kind == "k") {
        for (int i = 0; i < n; ++i) m.ideal_gens.push_back(unit(n, i));
    } else if (kind == "Mx") {
        axis(0);
    } else if (kind == "My") {
        axis(1);
    } else if (kind == "Mz") {
        axis(2);
    } else if (kind == "Mxy" || kind == "Mxz" || kind == "Myz") {
        int a = 0, b = (kind == "Mxy") ? 1 : 2;
        if (kind == "Myz") a = 1, b = 2;
        Expo prod(n, 0);
        prod[a] = prod[b] = 1;
        m.ideal_gens.push_back(prod);
        for (int i = 0; i < n; ++i)
            if (i != a && i != b) m.ideal_gens.push_back(unit(n, i));
    } else if (kind == "Mxyz") {
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                Expo prod(n, 0);
                prod[a] = prod[b] = 1;
                m.ideal_gens.push_back(prod);
            }
        for (int i = 3; i < n; ++i) m.ideal_gens.push_back(unit(n, i));
    } else {
        throw InputError("unknown kind: " + kind);
    }
    return m;
}

MonomialModule truncation_module(const ModelCase& c, int var, long long i) {
    MonomialModule m;
    m.name = "M(" + std::to_string(var) + "^" + std::to_string(i) + ")";
    m.nvars = c.nvars;
    for (int j = 0; j < c.nvars; ++j)
        if (j != var) m.ideal_gens.push_back(unit(c.nvars, j));
    m.ideal_gens.push_back(unit(c.nvars, var, static_cast<int>(i)));
    return m;
}

MonomialModule plane_truncation_module(const ModelCase& c, int keep_a, int keep_b, int trunc_var, long long i) {
    MonomialModule m;
    m.name = "M(" + std::to_string(keep_a) + "," + std::to_string(keep_b) + ";" + std::to_string(trunc_var) +
             "^" + std::to_string(i) + ")";
    m.nvars = c.nvars;
    for (int j = 0; j < c.nvars; ++j)
        if (j != keep_a && j != keep_b) m.ideal_gens.push_back(unit(c.nvars, j));
    m.ideal_gens.push_back(unit(c.nvars, trunc_var, static_cast<int>(i)));
    return m;
}

MonomialModule plane_product_module(const ModelCase& c, int keep_a, int keep_b, long long i) {
    MonomialModule m;
    m.name = "M(" + std::to_string(keep_a) + "," + std::to_string(keep_b) + ";" + std::to_string(keep_b) +
             "*" + std::to_string(keep_a) + "^" + std::to_string(i) + ")";
    m.nvars = c.nvars;
    for (int j = 0; j < c.nvars; ++j)
        if (j != keep_a && j != keep_b) m.ideal_gens.push_back(unit(c.nvars, j));
    Expo e(c.nvars, 0);
    e[keep_a] = static_cast<int>(i);
    e[keep_b] = 1;
    m.ideal_gens.push_back(e);
    return m;
}

namespace {

// shorthand polynomial builders over the case's variable count
struct PB {
    int n;
    Poly v(int i, long long k) const { return Poly::vpow(n, i, static_cast<int>(k)); }
    Poly vv(int i, long long ki, int j, long long kj) const {
        Expo e(n, 0);
        e[i] = static_cast<int>(ki);
        e[j] = static_cast<int>(kj);
        return Poly::monomial(n, e);
    }
};

using Pairs = std::vector<std::pair<Poly, Poly>>;

Pairs koszul_pairs(const ModelCase& c, const std::string& kind) {
    PB b{c.nvars};
    const std::string& cs = c.name;
    long long p = c.exps.size() > 0 ? c.exps[0] : 0;
    long long q = c.exps.size() > 1 ? c.exps[1] : 0;
    long long r = c.exps.size() > 2 ? c.exps[2] : 0;
    const int x = 0, y = 1, z = 2;

    if (kind == "k") {
        if (cs == "1-chain") return {{b.v(x, 1), b.v(x, p - 1)}};
        if (cs == "2-split") return {{b.v(x, 1), b.v(x, p - 1)}, {b.v(y, 1), b.v(y, q - 1)}};
        if (cs == "2-chain") return {{b.v(x, 1), b.v(x, p - 1)}, {b.v(y, 1), b.vv(x, 1, y, q - 1)}};
        if (cs == "2-loop")
            return {{b.v(x, 1), b.vv(y, 1, x, p - 1)}, {b.v(y, 1), b.vv(x, 1, y, q - 1)}};
        if (cs == "3-split-a")
            return {{b.v(x, 1), b.v(x, p - 1)}, {b.v(y, 1), b.v(y, q - 1)}, {b.v(z, 1), b.v(z, r - 1)}};
        if (cs == "3-split-b")
            return {{b.v(x, 1), b.v(x, p - 1)}, {b.v(y, 1), b.vv(x, 1, y, q - 1)}, {b.v(z, 1), b.v(z, r - 1)}};
        if (cs == "3-split-c")
            return {{b.v(x, 1), b.vv(y, 1, x, p - 1)}, {b.v(y, 1), b.vv(x, 1, y, q - 1)},
                    {b.v(z, 1), b.v(z, r - 1)}};
        if (cs == "3-chain")
            return {{b.v(x, 1), b.v(x, p - 1)}, {b.v(y, 1), b.vv(x, 1, y, q - 1)},
                    {b.v(z, 1), b.vv(y, 1, z, r - 1)}};
        if (cs == "3-loop")
            return {{b.v(x, 1), b.vv(z, 1, x, p - 1)}, {b.v(y, 1), b.vv(x, 1, y, q - 1)},
                    {b.v(z, 1), b.vv(y, 1, z, r - 1)}};
    }
    if (kind == "My") {
        if (cs == "2-chain") return {{b.v(x, 1), b.v(x, p - 1) + b.v(y, q)}};
        if (cs == "2-loop") return {{b.v(x, 1), b.vv(y, 1, x, p - 1) + b.v(y, q)}};
        if (cs == "3-split-b") return {{b.v(x, 1), b.v(x, p - 1) + b.v(y, q)}, {b.v(z, 1), b.v(z, r - 1)}};
        if (cs == "3-split-c")
            return {{b.v(x, 1), b.vv(y, 1, x, p - 1) + b.v(y, q)}, {b.v(z, 1), b.v(z, r - 1)}};
        if (cs == "3-chain")
            return {{b.v(x, 1), b.v(x, p - 1) + b.v(y, q)}, {b.v(z, 1), b.vv(y, 1, z, r - 1)}};
        if (cs == "3-loop")
            return {{b.v(x, 1), b.vv(z, 1, x, p - 1) + b.v(y, q)}, {b.v(z, 1), b.vv(y, 1, z, r - 1)}};
    }
    if (kind == "Mx") {
        if (cs == "2-loop") return {{b.v(y, 1), b.vv(x, 1, y, q - 1) + b.v(x, p)}};
        if (cs == "3-split-c")
            return {{b.v(y, 1), b.vv(x, 1, y, q - 1) + b.v(x, p)}, {b.v(z, 1), b.v(z, r - 1)}};
        if (cs == "3-loop")
            return {{b.v(y, 1), b.vv(x, 1, y, q - 1)}, {b.v(z, 1), b.v(x, p) + b.vv(y, 1, z, r - 1)}};
    }
    if (kind == "Mz") {
        if (cs == "3-chain")
            return {{b.v(x, 1), b.v(x, p - 1)}, {b.v(y, 1), b.vv(x, 1, y, q - 1) + b.v(z, r)}};
        if (cs == "3-loop")
            return {{b.v(x, 1), b.vv(z, 1, x, p - 1)}, {b.v(y, 1), b.vv(x, 1, y, q - 1) + b.v(z, r)}};
    }
    if (kind == "Mxy") {
        if (cs == "2-loop") return {{b.vv(x, 1, y, 1), b.v(x, p - 1) + b.v(y, q - 1)}};
        if (cs == "3-split-c")
            return {{b.vv(x, 1, y, 1), b.v(x, p - 1) + b.v(y, q - 1)}, {b.v(z, 1), b.v(z, r - 1)}};
    }
    throw InputError("no catalogued factorization for kind " + kind + " in case " + cs);
}

GVec deg_of(const ModelCase& c, const Poly& f) {
    auto d = homogeneous_degree(c.g, f);
    if (!d) throw std::logic_error("degree of zero polynomial");
    return *d;
}

MatrixFactorization mxyz_template(const ModelCase& c) {
    if (c.name != "3-loop") throw InputError("Mxyz is catalogued for the 3-loop case only");
    PB b{c.nvars};
    const int x = 0, y = 1, z = 2;
    long long p = c.exps[0], q = c.exps[1], r = c.exps[2];
    Poly wy = b.vv(x, 1, y, q - 1);
    Poly wz = b.v(x, p) + b.vv(y, 1, z, r - 1);
    Poly wpx = b.vv(z, 1, x, p - 1) + b.v(y, q);  // the x-side cofactor
    Poly wyz = b.v(z, r - 1);
    Poly one = Poly::monomial(c.nvars, Expo(c.nvars, 0));
    Poly zero = Poly::zero(c.nvars);

    const GVec X = c.g.xdeg[x], Y = c.g.xdeg[y], Z = c.g.xdeg[z], W = c.g.wdeg;
    MatrixFactorization m;
    m.g = c.g;
    m.w = c.wpoly;
    m.wdeg = W;
    GVec xyzw = gvec_sub(gvec_add(gvec_add(X, Y), Z), W);
    m.tw_even = {X, xyzw, gvec_zero(c.nvars), xyzw};
    m.tw_odd = {gvec_add(X, Y), gvec_add(X, Z), X, gvec_add(Y, Z)};

    m.d1 = PolyMat(4, 4, c.nvars);
    m.d0 = PolyMat(4, 4, c.nvars);
    // rows follow tw_even, columns tw_odd
    Poly d1rows[4][4] = {
        {b.v(y, 1), b.v(z, 1), -one, zero},
        {-wz, wy, zero, b.v(y, q)},
        {zero, zero, b.v(x, 1), b.vv(y, 1, z, 1)},
        {zero, zero, -wyz, wpx},
    };
    Poly d0rows[4][4] = {
        {wy, -b.v(z, 1), b.v(y, q - 1), zero},
        {wz, b.v(y, 1), b.v(x, p - 1), -b.v(y, 1)},
        {zero, zero, wpx, -b.vv(y, 1, z, 1)},
        {zero, zero, wyz, b.v(x, 1)},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m.d1.at(i, j) = d1rows[i][j];
            m.d0.at(i, j) = d0rows[i][j];
        }
    validate(m);
    return m;
}

}  // namespace

MatrixFactorization mf_for_kind(const ModelCase& c, const std::string& kind) {
    if (!kind_defined(c, kind)) throw InputError("kind " + kind + " is not defined over case " + c.name);
    if (kind == "Mxyz") return mxyz_template(c);
    return koszul_mf(c.g, c.wpoly, koszul_pairs(c, kind));
}

AugmentationData augmentation_for_kind(const ModelCase& c, const std::string& kind) {
    AugmentationData a;
    if (kind == "Mxyz") {
        const GVec X = c.g.xdeg[0], Y = c.g.xdeg[1], Z = c.g.xdeg[2];
        a.p0 = {X, gvec_zero(c.nvars)};
        a.p1 = {gvec_add(X, Y), gvec_add(X, Z), X, gvec_add(Y, Z)};
        return a;
    }
    a.p0 = {gvec_zero(c.nvars)};
    for (const auto& [f, h] : koszul_pairs(c, kind)) a.p1.push_back(deg_of(c, f));
    return a;
}

long predicted_coker_dim(const ModelCase& c, const std::string& kind, const GVec& degree) {
    // coker(d1) is the second syzygy twisted by wdeg, so its dimension is the
    // Euler characteristic dim P1 - dim P0 + dim M at degree + wdeg.
    HypersurfaceQuotient A{c.g, c.wpoly, c.g.wdeg};
    AugmentationData aug = augmentation_for_kind(c, kind);
    GVec d = gvec_add(degree, c.g.wdeg);
    long v = module_dim(c.g, kind_module(c, kind), d);
    for (const GVec& t : aug.p1) v += quotient_piece_dim(A, gvec_sub(d, t));
    for (const GVec& t : aug.p0) v -= quotient_piece_dim(A, gvec_sub(d, t));
    return v;
}

namespace {

// rank over A = R/(w) of a polynomial block matrix between twisted free
// modules, at a fixed degree: rank_R([D | w*id]) - rank_R(w*id)
long rank_over_quotient(const GradingData& g, const Poly& w, const std::vector<GVec>& src,
                        const std::vector<GVec>& dst, const PolyMat& mat, const GVec& degree) {
    MonomialModule R = ring_module(g.nvars);
    std::vector<std::vector<Expo>> dst_basis(dst.size());
    std::vector<int> dst_off(dst.size() + 1, 0);
    for (size_t i = 0; i < dst.size(); ++i) {
        dst_basis[i] = module_basis(g, R, gvec_sub(degree, dst[i]));
        dst_off[i + 1] = dst_off[i] + static_cast<int>(dst_basis[i].size());
    }
    int dst_dim = dst_off[dst.size()];

    auto emit_rows = [&](SparseRatMat& m, int col, size_t dst_i, const Poly& f, const Expo& mono) {
        for (const auto& [fe, fc] : f.terms) {
            Expo prod(g.nvars);
            for (int v = 0; v < g.nvars; ++v) prod[v] = mono[v] + fe[v];
            auto& basis = dst_basis[dst_i];
            auto it = std::lower_bound(basis.begin(), basis.end(), prod, GrlexLess{});
            if (it == basis.end() || !(*it == prod)) throw std::logic_error("monomial escaped basis");
            m.add(dst_off[dst_i] + static_cast<int>(it - basis.begin()), col, fc);
        }
    };

    // columns of [D | W]
    int cols = 0;
    std::vector<std::vector<Expo>> src_basis(src.size());
    for (size_t j = 0; j < src.size(); ++j) {
        src_basis[j] = module_basis(g, R, gvec_sub(degree, src[j]));
        cols += static_cast<int>(src_basis[j].size());
    }
    std::vector<std::vector<Expo>> w_basis(dst.size());
    int wcols = 0;
    for (size_t i = 0; i < dst.size(); ++i) {
        w_basis[i] = module_basis(g, R, gvec_sub(gvec_sub(degree, dst[i]), g.wdeg));
        wcols += static_cast<int>(w_basis[i].size());
    }

    SparseRatMat full(dst_dim, cols + wcols);
    SparseRatMat wonly(dst_dim, wcols);
    int col = 0;
    for (size_t j = 0; j < src.size(); ++j)
        for (const Expo& mono : src_basis[j]) {
            for (size_t i = 0; i < dst.size(); ++i)
                if (!mat.at(static_cast<int>(i), static_cast<int>(j)).is_zero())
                    emit_rows(full, col, i, mat.at(static_cast<int>(i), static_cast<int>(j)), mono);
            ++col;
        }
    int wcol = 0;
    for (size_t i = 0; i < dst.size(); ++i)
        for (const Expo& mono : w_basis[i]) {
            for (const auto& [fe, fc] : w.terms) {
                Expo prod(g.nvars);
                for (int v = 0; v < g.nvars; ++v) prod[v] = mono[v] + fe[v];
                auto& basis = dst_basis[i];
                auto it = std::lower_bound(basis.begin(), basis.end(), prod, GrlexLess{});
                if (it == basis.end() || !(*it == prod)) throw std::logic_error("monomial escaped basis");
                full.add(dst_off[i] + static_cast<int>(it - basis.begin()), col + wcol, fc);
                wonly.add(dst_off[i] + static_cast<int>(it - basis.begin()), wcol, fc);
            }
            ++wcol;
        }
    return rank_sparse(full) - rank_sparse(wonly);
}

}  // namespace

long mf_coker_dim(const ModelCase& c, const MatrixFactorization& x, const GVec& degree) {
    HypersurfaceQuotient A{c.g, c.wpoly, c.g.wdeg};
    long even_dim = 0;
    for (const GVec& t : x.tw_even) even_dim += quotient_piece_dim(A, gvec_sub(degree, t));
    return even_dim - rank_over_quotient(c.g, c.wpoly, x.tw_odd, x.tw_even, x.d1, degree);
}

}  // namespace mfkit
