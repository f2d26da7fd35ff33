#pragma once

#include "mfkit/invpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mfkit {

/// Exponent vector of a monomial.
using Expo = std::vector<int>;

/// Graded-lex order on exponent vectors: total degree first, then lex.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int sa = 0, sb = 0;
        for (int v : a) sa += v;
        for (int v : b) sb += v;
        if (sa != sb) return sa < sb;
        return a < b;
    }
};

/// Sparse multivariate polynomial with rational coefficients.
struct Poly {
    int nvars = 0;
    std::map<Expo, Rat, GrlexLess> terms;

    static Poly zero(int nvars) { return Poly{nvars, {}}; }
    static Poly monomial(int nvars, const Expo& e, const Rat& c = 1);
    /// Variable power x_i^k.
    static Poly vpow(int nvars, int i, int k, const Rat& c = 1);

    bool is_zero() const { return terms.empty(); }
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;
    bool operator==(const Poly& other) const { return nvars == other.nvars && terms == other.terms; }

    /// Set all terms containing a variable outside `keep` to zero.
    Poly restricted_to(const std::vector<int>& keep) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;
};

GVec expo_degree(const Expo& e);

/// Degree of a homogeneous polynomial in the grading group; nullopt for 0,
/// throws InputError when terms have different degrees.
std::optional<GVec> homogeneous_degree(const GradingData& g, const Poly& f);

/// The potential as a polynomial: sum of the monomial rows with coefficient 1.
Poly potential_poly(const InvertiblePolynomial& w);

}  // namespace mfkit
