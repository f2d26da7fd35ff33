// Frozen expected morphism tables for the two- and three-variable cases.
// Each entry lists the twists l with Hom(Src, Dst(l)[parity]) nonzero, as a
// multiset (repeated entries mean higher dimension).
#pragma once

#include "mfkit/stablehom.hpp"

#include <map>
#include <string>
#include <vector>

namespace mfkit::fixtures {

struct PairSupport {
    std::vector<GVec> even, odd;
};

using TableFixture = std::map<std::pair<std::string, std::string>, PairSupport>;

inline TableFixture expected_table(const ModelCase& c) {
    const long long p = c.exps.size() > 0 ? c.exps[0] : 0;
    const long long q = c.exps.size() > 1 ? c.exps[1] : 0;
    const long long r = c.exps.size() > 2 ? c.exps[2] : 0;
    const int n = c.nvars;
    auto X = [&](long long m = 1) { return gvec_scale(m, c.g.xdeg[0]); };
    auto Y = [&](long long m = 1) { return gvec_scale(m, c.g.xdeg[1]); };
    auto Z = [&](long long m = 1) { return gvec_scale(m, c.g.xdeg[2]); };
    const GVec W = c.g.wdeg;
    auto add = [](const GVec& a, const GVec& b) { return gvec_add(a, b); };
    auto sub = [](const GVec& a, const GVec& b) { return gvec_sub(a, b); };
    auto range = [&](auto unit, long long lo, long long hi, const GVec& off) {
        std::vector<GVec> v;
        for (long long m = lo; m <= hi; ++m) v.push_back(add(unit(m), off));
        return v;
    };
    auto concat = [](std::vector<GVec> a, const std::vector<GVec>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    const GVec zero = gvec_zero(n);

    TableFixture t;
    if (n == 2) {
        GVec wxy = sub(sub(W, X()), Y());
        t[{"k", "k"}] = {{zero, wxy}, {X(-1), Y(-1)}};
        t[{"k", "My"}] = {{wxy}, {Y(-1)}};
        t[{"k", "Mx"}] = {{wxy}, {X(-1)}};
        t[{"k", "Mxy"}] = {{wxy}, {zero}};
        t[{"My", "k"}] = {{zero}, {X(-1)}};
        t[{"My", "My"}] = {range(Y, 0, q - 1, zero), {}};
        t[{"My", "Mx"}] = {{}, {X(-1)}};
        t[{"My", "Mxy"}] = {range(Y, 1, q - 1, zero), {}};
        t[{"Mx", "k"}] = {{zero}, {Y(-1)}};
        t[{"Mx", "My"}] = {{}, {Y(-1)}};
        t[{"Mx", "Mx"}] = {range(X, 0, p - 1, zero), {}};
        t[{"Mx", "Mxy"}] = {range(X, 1, p - 1, zero), {}};
        t[{"Mxy", "k"}] = {{zero}, {add(X(-1), Y(-1))}};
        t[{"Mxy", "My"}] = {range(Y, 0, q - 2, zero), {}};
        t[{"Mxy", "Mx"}] = {range(X, 0, p - 2, zero), {}};
        t[{"Mxy", "Mxy"}] = {concat(range(X, 0, p - 2, zero), range(Y, 1, q - 1, zero)), {}};
        return t;
    }

    GVec wxy = sub(sub(W, X()), Y());
    GVec wxz = sub(sub(W, X()), Z());
    GVec wyz = sub(sub(W, Y()), Z());
    GVec wxyz = sub(sub(sub(W, X()), Y()), Z());
    GVec eps = (c.name == "3-loop") ? Y(-1) : Z(-1);  // twist of the odd self-extensions of Mx

    t[{"k", "k"}] = {{zero, wxy, wxz, wyz}, {X(-1), Y(-1), Z(-1), wxyz}};
    t[{"k", "My"}] = {{wxy, wyz}, {Y(-1), wxyz}};
    t[{"k", "Mx"}] = {{wxy, wxz}, {X(-1), wxyz}};
    t[{"k", "Mxy"}] = {{sub(W, Z()), wxy}, {zero, wxyz}};
    t[{"k", "Mz"}] = {{wxz, wyz}, {Z(-1), wxyz}};
    t[{"k", "Mxyz"}] = {{sub(W, X()), sub(W, Y()), sub(W, Z())}, {zero, zero, wxyz}};

    t[{"My", "k"}] = {{zero, wxz}, {X(-1), Z(-1)}};
    t[{"My", "My"}] = {range(Y, 0, q - 1, zero), range(Y, 0, q - 1, Z(-1))};
    t[{"My", "Mx"}] = {{wxz}, {X(-1)}};
    t[{"My", "Mxy"}] = {range(Y, 1, q - 1, zero), range(Y, 1, q - 1, Z(-1))};
    t[{"My", "Mz"}] = {{wxz}, {Z(-1)}};
    t[{"My", "Mxyz"}] = {range(Y, 1, q, zero), concat({zero}, range(Y, 1, q - 1, Z(-1)))};

    t[{"Mx", "k"}] = {{zero, wyz}, {Y(-1), Z(-1)}};
    t[{"Mx", "My"}] = {{wyz}, {Y(-1)}};
    t[{"Mx", "Mx"}] = {range(X, 0, p - 1, zero), range(X, 0, p - 1, eps)};
    t[{"Mx", "Mxy"}] = {range(X, 1, p - 1, zero), range(X, 1, p - 1, Z(-1))};
    t[{"Mx", "Mz"}] = {{wyz}, {Z(-1)}};
    t[{"Mx", "Mxyz"}] = {range(X, 1, p, zero), concat({zero}, range(X, 1, p - 1, Y(-1)))};

    t[{"Mxy", "k"}] = {{zero, wxyz}, {Z(-1), add(X(-1), Y(-1))}};
    t[{"Mxy", "My"}] = {range(Y, 0, q - 2, zero), range(Y, 0, q - 2, Z(-1))};
    t[{"Mxy", "Mx"}] = {range(X, 0, p - 2, zero), range(X, 0, p - 2, Z(-1))};
    t[{"Mxy", "Mxy"}] = {concat(range(X, 0, p - 2, zero), range(Y, 1, q - 1, zero)),
                         concat(range(X, 0, p - 2, Z(-1)), range(Y, 1, q - 1, Z(-1)))};

    t[{"Mz", "k"}] = {{zero, wxy}, {X(-1), Y(-1)}};
    t[{"Mz", "My"}] = {{wxy}, {Y(-1)}};
    t[{"Mz", "Mx"}] = {{wxy}, {X(-1)}};
    t[{"Mz", "Mz"}] = {range(Z, 0, r - 1, zero), range(Z, 0, r - 1, X(-1))};
    t[{"Mz", "Mxyz"}] = {range(Z, 1, r, zero), concat({zero}, range(Z, 1, r - 1, X(-1)))};

    t[{"Mxyz", "k"}] = {{zero, wxyz, wxyz}, {add(X(-1), Y(-1)), add(X(-1), Z(-1)), add(Y(-1), Z(-1))}};
    t[{"Mxyz", "My"}] = {concat(range(Y, 0, q - 2, zero), {wxyz}), range(Y, 0, q - 1, add(Y(-1), Z(-1)))};
    t[{"Mxyz", "Mx"}] = {concat(range(X, 0, p - 2, zero), {wxyz}), range(X, 0, p - 1, add(X(-1), Y(-1)))};
    t[{"Mxyz", "Mz"}] = {concat(range(Z, 0, r - 2, zero), {wxyz}), range(Z, 0, r - 1, add(X(-1), Z(-1)))};
    t[{"Mxyz", "Mxyz"}] = {
        concat(concat(range(X, 0, p - 1, zero), range(Y, 1, q - 1, zero)), range(Z, 1, r - 1, zero)),
        concat(concat(range(X, 0, p - 1, Y(-1)), range(Y, 0, q - 2, Z(-1))), range(Z, 0, r - 2, X(-1)))};
    return t;
}

/// Multiset of canonical forms with multiplicities.
inline std::map<std::vector<long long>, long> canonical_multiset(const GradingData& g,
                                                                 const std::vector<GVec>& lift) {
    std::map<std::vector<long long>, long> m;
    for (const GVec& l : lift) ++m[g.L->canonical_form(l)];
    return m;
}

inline std::map<std::vector<long long>, long> table_multiset(const GradedHomTable& t, int parity) {
    std::map<std::vector<long long>, long> m;
    for (const auto& [l, dim] : t.support(parity)) m[t.g.L->canonical_form(l)] = dim;
    return m;
}

}  // namespace mfkit::fixtures
