#include "mfkit/gralg.hpp"

#include <algorithm>

namespace mfkit {

bool MonomialModule::in_ideal(const Expo& e) const {
    for (const Expo& g : ideal_gens) {
        bool divides = true;
        for (size_t i = 0; i < g.size() && divides; ++i)
            if (e[i] < g[i]) divides = false;
        if (divides) return true;
    }
    return false;
}

std::vector<std::vector<int>> MonomialModule::support_components() const {
    // subsets S of variables such that no generator has support inside S;
    // return the maximal ones
    std::vector<std::vector<int>> gens_support;
    for (const Expo& g : ideal_gens) {
        std::vector<int> s;
        for (int i = 0; i < nvars; ++i)
            if (g[i] > 0) s.push_back(i);
        gens_support.push_back(std::move(s));
    }
    std::vector<std::vector<int>> faces;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const auto& s : gens_support) {
            bool inside = true;
            for (int v : s)
                if (!(mask & (1u << v))) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<int> face;
        for (int v = 0; v < nvars; ++v)
            if (mask & (1u << v)) face.push_back(v);
        faces.push_back(std::move(face));
    }
    // keep maximal faces only
    std::vector<std::vector<int>> maximal;
    for (const auto& f : faces) {
        bool is_max = true;
        for (const auto& g : faces) {
            if (f.size() >= g.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.push_back(f);
    }
    return maximal;
}

MonomialModule ring_module(int nvars) { return MonomialModule{"R", nvars, {}}; }

namespace {

void enumerate_rec(const GradingData& g, int var, long long budget, Expo& cur, std::vector<Expo>& out,
                   const GVec& target) {
    if (var == g.nvars) {
        if (budget != 0) return;
        GVec d = expo_degree(cur);
        if (g.L->equal(d, target)) out.push_back(cur);
        return;
    }
    long long step = g.rho_x[var];
    for (long long e = 0; e * step <= budget; ++e) {
        cur[var] = static_cast<int>(e);
        enumerate_rec(g, var + 1, budget - e * step, cur, out, target);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Expo> monomial_basis(const GradingData& g, const GVec& degree) {
    std::vector<Expo> out;
    long long budget = g.rho(degree);
    if (budget < 0) return out;
    Expo cur(g.nvars, 0);
    enumerate_rec(g, 0, budget, cur, out, degree);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<Expo> module_basis(const GradingData& g, const MonomialModule& m, const GVec& degree) {
    std::vector<Expo> out;
    for (Expo& e : monomial_basis(g, degree))
        if (!m.in_ideal(e)) out.push_back(std::move(e));
    return out;
}

long module_dim(const GradingData& g, const MonomialModule& m, const GVec& degree) {
    return static_cast<long>(module_basis(g, m, degree).size());
}

RatMat mult_map(const GradingData& g, const MonomialModule& m, const Poly& f, const GVec& degree) {
    auto fdeg = homogeneous_degree(g, f);
    std::vector<Expo> src = module_basis(g, m, degree);
    if (!fdeg) return RatMat(0, static_cast<int>(src.size()));
    GVec tdeg = gvec_add(degree, *fdeg);
    std::vector<Expo> dst = module_basis(g, m, tdeg);
    RatMat mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    std::map<Expo, int, GrlexLess> index;
    for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);

    for (size_t j = 0; j < src.size(); ++j) {
        for (const auto& [fe, fc] : f.terms) {
            Expo prod(g.nvars);
            for (int i = 0; i < g.nvars; ++i) prod[i] = src[j][i] + fe[i];
            if (m.in_ideal(prod)) continue;
            auto it = index.find(prod);
            if (it == index.end()) throw std::logic_error("product escaped the graded piece");
            mat.at(it->second, static_cast<int>(j)) += fc;
        }
    }
    return mat;
}

HypersurfaceQuotient hypersurface(const InvertiblePolynomial& w) {
    HypersurfaceQuotient a;
    a.g = grading_data(w);
    a.w = potential_poly(w);
    a.wdeg = a.g.wdeg;
    return a;
}

long quotient_piece_dim(const HypersurfaceQuotient& a, const GVec& degree) {
    MonomialModule r = ring_module(a.g.nvars);
    long full = module_dim(a.g, r, degree);
    if (full == 0) return 0;
    RatMat w_mult = mult_map(a.g, r, a.w, gvec_sub(degree, a.wdeg));
    return full - rank_dense(std::move(w_mult));
}

bool acts_injectively(const Poly& w, const MonomialModule& m) {
    auto comps = m.support_components();
    for (const auto& s : comps)
        if (w.restricted_to(s).is_zero()) return false;
    return true;
}

bool well_defined_over(const Poly& w, const MonomialModule& m) {
    for (const auto& [e, c] : w.terms)
        if (!m.in_ideal(e)) return false;
    return true;
}

}  // namespace mfkit
