#include "mfkit/poly.hpp"

#include <sstream>

namespace mfkit {

Poly Poly::monomial(int nvars, const Expo& e, const Rat& c) {
    Poly p{nvars, {}};
    if (c != 0) p.terms[e] = c;
    return p;
}

Poly Poly::vpow(int nvars, int i, int k, const Rat& c) {
    Expo e(nvars, 0);
    e[i] = k;
    return monomial(nvars, e, c);
}

Poly Poly::operator+(const Poly& other) const {
    Poly r = *this;
    for (const auto& [e, c] : other.terms) {
        Rat& slot = r.terms[e];
        slot += c;
        if (slot == 0) r.terms.erase(e);
    }
    return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

Poly Poly::scaled(const Rat& k) const {
    if (k == 0) return zero(nvars);
    Poly r = *this;
    for (auto& [e, c] : r.terms) c *= k;
    return r;
}

Poly Poly::operator*(const Poly& other) const {
    Poly r{nvars, {}};
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : other.terms) {
            Expo e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
            Rat& slot = r.terms[e];
            slot += ca * cb;
            if (slot == 0) r.terms.erase(e);
        }
    return r;
}

Poly Poly::restricted_to(const std::vector<int>& keep) const {
    std::vector<char> ok(nvars, 0);
    for (int v : keep) ok[v] = 1;
    Poly r{nvars, {}};
    for (const auto& [e, c] : terms) {
        bool inside = true;
        for (int i = 0; i < nvars && inside; ++i)
            if (e[i] > 0 && !ok[i]) inside = false;
        if (inside) r.terms[e] = c;
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (terms.empty()) return "0";
    static const char* defaults[] = {"x", "y", "z", "t", "u", "v"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        bool any = false;
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            if (any) os << "*";
            any = true;
            os << (i < static_cast<int>(var_names.size()) ? var_names[i] : defaults[i]);
            if (e[i] > 1) os << "^" << e[i];
        }
        if (!any) os << "1";
    }
    return os.str();
}

GVec expo_degree(const Expo& e) { return GVec(e.begin(), e.end()); }

std::optional<GVec> homogeneous_degree(const GradingData& g, const Poly& f) {
    std::optional<GVec> deg;
    for (const auto& [e, c] : f.terms) {
        GVec d = expo_degree(e);
        if (!deg)
            deg = d;
        else if (!g.L->equal(*deg, d))
            throw InputError("polynomial is not homogeneous");
    }
    return deg;
}

Poly potential_poly(const InvertiblePolynomial& w) {
    Poly p = Poly::zero(w.n);
    for (int i = 0; i < w.n; ++i) {
        Expo e(w.n);
        for (int j = 0; j < w.n; ++j) e[j] = static_cast<int>(w.exponents[i][j]);
        p = p + Poly::monomial(w.n, e);
    }
    return p;
}

}  // namespace mfkit
