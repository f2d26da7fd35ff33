#include "mfkit/invpoly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mfkit {

namespace {

IntMat to_intmat(const std::vector<std::vector<long long>>& a) {
    int n = static_cast<int>(a.size());
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = a[i][j];
    return m;
}

}  // namespace

std::vector<Rat> InvertiblePolynomial::weights() const {
    // solve A q = (1,...,1) by Gaussian elimination over rationals
    RatMat aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = Rat(exponents[i][j]);
        aug.at(i, n) = 1;
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n) throw InputError("exponent matrix is singular");
    std::vector<Rat> q(n);
    for (int i = 0; i < n; ++i) q[i] = aug.at(i, n);
    return q;
}

InvertiblePolynomial InvertiblePolynomial::from_matrix(std::vector<std::vector<long long>> a) {
    InvertiblePolynomial w;
    w.n = static_cast<int>(a.size());
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != w.n) throw InputError("exponent matrix must be square");
        for (long long e : row)
            if (e < 0) throw InputError("exponent matrix must be nonnegative");
    }
    w.exponents = std::move(a);
    if (determinant(to_intmat(w.exponents)) == 0) throw InputError("exponent matrix is singular");
    for (const Rat& q : w.weights())
        if (q <= 0) throw InputError("polynomial has a nonpositive weight");
    if (w.n <= 3) classify(w);  // shape validation
    return w;
}

AtomicDecomposition classify(const InvertiblePolynomial& w) {
    const int n = w.n;
    // Monomial i must be x_h^p (a root) or x_t * x_h^p with p >= 2, and the
    // head variables h must be a permutation of all variables.
    std::vector<int> head(n, -1), tail(n, -1);  // per monomial
    for (int i = 0; i < n; ++i) {
        std::vector<int> support;
        for (int j = 0; j < n; ++j)
            if (w.exponents[i][j] != 0) support.push_back(j);
        if (support.size() == 1) {
            if (w.exponents[i][support[0]] < 2) throw InputError("monomial exponent below 2");
            head[i] = support[0];
        } else if (support.size() == 2) {
            int a = support[0], b = support[1];
            long long ea = w.exponents[i][a], eb = w.exponents[i][b];
            if (ea == 1 && eb >= 2) {
                head[i] = b;
                tail[i] = a;
            } else if (eb == 1 && ea >= 2) {
                head[i] = a;
                tail[i] = b;
            } else {
                throw InputError("monomial is not of chain/loop shape");
            }
        } else {
            throw InputError("monomial is not of chain/loop shape");
        }
    }
    std::vector<int> mono_of_head(n, -1);
    for (int i = 0; i < n; ++i) {
        if (mono_of_head[head[i]] != -1) throw InputError("two monomials share a head variable");
        mono_of_head[head[i]] = i;
    }

    // prev[v] = the variable whose monomial feeds v, if any
    std::vector<int> prev(n, -1), succ_count(n, 0);
    for (int v = 0; v < n; ++v) {
        int i = mono_of_head[v];
        if (tail[i] >= 0) {
            prev[v] = tail[i];
            ++succ_count[tail[i]];
        }
    }
    for (int v = 0; v < n; ++v)
        if (succ_count[v] > 1) throw InputError("variable feeds two chain links");

    AtomicDecomposition dec;
    std::vector<char> used(n, 0);
    // chains start at roots (prev == -1)
    for (int v = 0; v < n; ++v) {
        if (prev[v] != -1 || used[v]) continue;
        Atom atom;
        atom.kind = Atom::Chain;
        int cur = v;
        for (;;) {
            used[cur] = 1;
            atom.vars.push_back(cur);
            atom.exps.push_back(w.exponents[mono_of_head[cur]][cur]);
            int next = -1;
            for (int u = 0; u < n; ++u)
                if (prev[u] == cur) next = u;
            if (next < 0) break;
            cur = next;
        }
        dec.parts.push_back(std::move(atom));
    }
    // remaining variables sit on loops
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        Atom atom;
        atom.kind = Atom::Loop;
        int cur = v;
        do {
            used[cur] = 1;
            atom.vars.push_back(cur);
            atom.exps.push_back(w.exponents[mono_of_head[cur]][cur]);
            int next = -1;
            for (int u = 0; u < n; ++u)
                if (prev[u] == cur && !used[u]) next = u;
            if (next < 0) break;
            cur = next;
        } while (true);
        if (atom.vars.size() < 2) throw InputError("loop of length one");
        dec.parts.push_back(std::move(atom));
    }
    return dec;
}

InvertiblePolynomial transpose(const InvertiblePolynomial& w) {
    std::vector<std::vector<long long>> a(w.n, std::vector<long long>(w.n));
    for (int i = 0; i < w.n; ++i)
        for (int j = 0; j < w.n; ++j) a[j][i] = w.exponents[i][j];
    return InvertiblePolynomial::from_matrix(std::move(a));
}

long long milnor_number(const InvertiblePolynomial& w) {
    Rat mu = 1;
    for (const Rat& q : w.weights()) mu *= (1 - q) / q;
    if (boost::multiprecision::denominator(mu) != 1 || mu <= 0)
        throw InputError("Milnor number is not a positive integer");
    return to_ll(boost::multiprecision::numerator(mu));
}

long long GradingData::rho(const GVec& l) const {
    long long v = 0;
    for (int i = 0; i < nvars; ++i) v += rho_x[i] * l[i];
    return v;
}

GVec GradingData::element_at(long long rho_value, const std::vector<long long>& torsion) const {
    // canonical layout of L: one free coordinate followed by torsion coords
    std::vector<long long> canon;
    canon.push_back(0);
    for (long long t : torsion) canon.push_back(t);
    GVec base = L->from_canonical(canon);
    // adjust the free part: rho is a multiple of the canonical free coordinate
    long long r0 = rho(base);
    long long unit = rho(L->from_canonical([&] {
        auto c = canon;
        c[0] = 1;
        return c;
    }())) - r0;
    if (unit == 0) throw std::logic_error("degenerate weight function");
    if ((rho_value - r0) % unit != 0) throw InputError("no element with requested weight in this class");
    long long k = (rho_value - r0) / unit;
    canon[0] = k;
    return L->from_canonical(canon);
}

std::vector<std::vector<long long>> GradingData::torsion_classes() const {
    std::vector<std::vector<long long>> classes;
    const auto& inv = L->invariant_factors();
    std::vector<long long> tuple(inv.size(), 0);
    for (;;) {
        classes.push_back(tuple);
        size_t k = 0;
        while (k < tuple.size()) {
            if (++tuple[k] < inv[k]) break;
            tuple[k] = 0;
            ++k;
        }
        if (k == tuple.size()) break;
    }
    return classes;
}

GradingData grading_data(const InvertiblePolynomial& w) {
    GradingData g;
    g.nvars = w.n;
    GroupPresentation lp;
    lp.num_generators = w.n;
    for (int i = 0; i + 1 < w.n; ++i) {
        GVec rel(w.n, 0);
        for (int j = 0; j < w.n; ++j) rel[j] = w.exponents[i][j] - w.exponents[i + 1][j];
        lp.relations.push_back(std::move(rel));
    }
    g.L = std::make_shared<AbelianGroup>(AbelianGroup::from_presentation(lp));
    if (g.L->free_rank() != 1) throw std::logic_error("maximal grading group must have rank 1");

    g.xdeg.resize(w.n);
    for (int i = 0; i < w.n; ++i) {
        g.xdeg[i] = gvec_zero(w.n);
        g.xdeg[i][i] = 1;
    }
    g.wdeg = GVec(w.exponents[0].begin(), w.exponents[0].end());

    // rho = the free canonical coordinate, sign-fixed so rho(wdeg) > 0
    long long sign = g.L->canonical_form(g.wdeg)[0] > 0 ? 1 : -1;
    g.rho_x.resize(w.n);
    for (int i = 0; i < w.n; ++i) {
        g.rho_x[i] = sign * g.L->canonical_form(g.xdeg[i])[0];
        if (g.rho_x[i] <= 0) throw std::logic_error("weight function not positive on a variable");
    }
    g.rho_w = 0;
    for (int j = 0; j < w.n; ++j) g.rho_w += g.rho_x[j] * g.wdeg[j];

    GroupPresentation bp = lp;
    bp.relations.push_back(g.wdeg);
    g.Lbar = std::make_shared<AbelianGroup>(AbelianGroup::from_presentation(bp));
    if (g.Lbar->free_rank() != 0) throw std::logic_error("reduced grading group must be finite");
    return g;
}

std::string case_name(const AtomicDecomposition& d) {
    std::vector<std::string> names;
    int total_vars = 0;
    for (const Atom& a : d.parts) total_vars += static_cast<int>(a.vars.size());

    if (d.parts.size() == 1) {
        const Atom& a = d.parts[0];
        std::string base = std::to_string(a.vars.size()) + (a.kind == Atom::Loop ? "-loop" : "-chain");
        return base;
    }
    if (total_vars == 2) return "2-split";
    if (total_vars == 3 && d.parts.size() == 3) return "3-split-a";
    if (total_vars == 3 && d.parts.size() == 2) {
        for (const Atom& a : d.parts) {
            if (a.vars.size() == 2) return a.kind == Atom::Loop ? "3-split-c" : "3-split-b";
        }
    }
    // generic split sum
    std::string s;
    for (const Atom& a : d.parts) {
        if (!s.empty()) s += "+";
        s += std::to_string(a.vars.size()) + (a.kind == Atom::Loop ? "-loop" : "-chain");
    }
    return s;
}

}  // namespace mfkit
