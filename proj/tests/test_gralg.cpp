#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfkit/cases.hpp"

#include <map>
#include <set>

using namespace mfkit;

TEST_CASE("monomial bases of graded pieces") {
    SUBCASE("one variable") {
        ModelCase c = make_case("1-chain", {4});
        auto b = monomial_basis(c.g, gvec_scale(3, c.g.xdeg[0]));
        REQUIRE(b.size() == 1);
        CHECK(b[0] == Expo{3});
    }
    SUBCASE("axis module over the 2-chain (3,2)") {
        ModelCase c = make_case("2-chain", {3, 2});
        MonomialModule my = kind_module(c, "My");
        CHECK(module_basis(c.g, my, gvec_scale(2, c.g.xdeg[1])) == std::vector<Expo>{{0, 2}});
        CHECK(module_basis(c.g, my, c.g.xdeg[0]).empty());
    }
    SUBCASE("negative weight short-circuits") {
        ModelCase c = make_case("2-split", {2, 2});
        CHECK(monomial_basis(c.g, gvec_neg(c.g.xdeg[0])).empty());
    }
}

TEST_CASE("hypersurface quotient pieces") {
    ModelCase c = make_case("2-split", {2, 2});
    HypersurfaceQuotient a{c.g, c.wpoly, c.g.wdeg};
    SUBCASE("dimension drops by the rank of multiplication by w") {
        // at the degree of w the span {x^2, y^2} is cut by the single relation
        CHECK(quotient_piece_dim(a, c.g.wdeg) == 1);
    }
    SUBCASE("degree zero is spanned by 1") { CHECK(quotient_piece_dim(a, gvec_zero(2)) == 1); }
    SUBCASE("negative degree is empty") { CHECK(quotient_piece_dim(a, gvec_neg(c.g.xdeg[0])) == 0); }
    SUBCASE("eventual periodicity of the Hilbert function along w-shifts") {
        for (const auto& base :
             {gvec_zero(2), c.g.xdeg[0], c.g.xdeg[1], gvec_add(c.g.xdeg[0], c.g.xdeg[1])}) {
            std::vector<long> dims;
            GVec d = base;
            for (int k = 0; k < 10; ++k) {
                dims.push_back(quotient_piece_dim(a, d));
                d = gvec_add(d, c.g.wdeg);
            }
            for (size_t k = 1; k + 1 < dims.size(); ++k) CHECK(dims[k + 1] == dims[k]);
        }
    }
}

TEST_CASE("multiplication maps") {
    ModelCase c = make_case("2-chain", {3, 2});
    MonomialModule r = ring_module(2);
    SUBCASE("multiplication by 1 is the identity") {
        Poly one = Poly::monomial(2, {0, 0});
        RatMat m = mult_map(c.g, r, one, c.g.xdeg[0]);
        REQUIRE(m.rows == m.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) CHECK(m.at(i, j) == ((i == j) ? 1 : 0));
    }
    SUBCASE("x acts by zero on the residue field") {
        MonomialModule k = kind_module(c, "k");
        RatMat m = mult_map(c.g, k, Poly::vpow(2, 0, 1), gvec_zero(2));
        CHECK(m.is_zero());
    }
    SUBCASE("the x-cofactor acts on the y-axis module as y^q") {
        MonomialModule my = kind_module(c, "My");
        Poly wx = Poly::vpow(2, 0, 2) + Poly::vpow(2, 1, 2);  // x^{p-1} + y^q
        Poly yq = Poly::vpow(2, 1, 2);
        for (int m0 = 0; m0 <= 4; ++m0) {
            GVec d = gvec_scale(m0, c.g.xdeg[1]);
            RatMat a2 = mult_map(c.g, my, wx, d);
            RatMat b = mult_map(c.g, my, yq, d);
            REQUIRE(a2.rows == b.rows);
            REQUIRE(a2.cols == b.cols);
            for (int i = 0; i < a2.rows; ++i)
                for (int j = 0; j < a2.cols; ++j) CHECK(a2.at(i, j) == b.at(i, j));
        }
    }
    SUBCASE("composition law") {
        Poly f = Poly::vpow(2, 1, 1), g = Poly::vpow(2, 0, 1);
        GVec d = c.g.xdeg[1];
        RatMat fg = mult_map(c.g, r, f * g, d);
        RatMat gm = mult_map(c.g, r, g, d);
        RatMat fm = mult_map(c.g, r, f, gvec_add(d, c.g.xdeg[0]));
        RatMat comp = fm.mul(gm);
        REQUIRE(fg.rows == comp.rows);
        for (int i = 0; i < fg.rows; ++i)
            for (int j = 0; j < fg.cols; ++j) CHECK(fg.at(i, j) == comp.at(i, j));
    }
    SUBCASE("inhomogeneous multiplier is rejected") {
        Poly bad = Poly::vpow(2, 0, 1) + Poly::vpow(2, 1, 1);  // x + y over the 2-chain
        CHECK_THROWS_AS(mult_map(c.g, r, bad, gvec_zero(2)), InputError);
    }
}

TEST_CASE("non-zero-divisor criterion on support components") {
    SUBCASE("2-split: the x-axis restriction is x^p") {
        ModelCase c = make_case("2-split", {3, 2});
        CHECK(acts_injectively(c.wpoly, kind_module(c, "Mx")));
    }
    SUBCASE("2-loop: the x-axis restriction vanishes") {
        ModelCase c = make_case("2-loop", {3, 2});
        CHECK(!acts_injectively(c.wpoly, kind_module(c, "Mx")));
    }
    SUBCASE("3-loop: the xz-plane restriction is z x^p") {
        ModelCase c = make_case("3-loop", {2, 2, 2});
        MonomialModule xz;
        xz.nvars = 3;
        xz.ideal_gens = {{0, 1, 0}};  // kill y only
        CHECK(acts_injectively(c.wpoly, xz));
    }
}

TEST_CASE("well-definedness of the displayed kinds per case") {
    auto defined = [](const ModelCase& c, const std::string& kind) {
        return well_defined_over(c.wpoly, kind_module(c, kind));
    };
    std::vector<std::string> all{"k", "Mx", "My", "Mz", "Mxy", "Mxz", "Myz", "Mxyz"};
    std::map<std::string, std::set<std::string>> expected{
        {"3-split-a", {"k"}},
        {"3-split-b", {"k", "My"}},
        {"3-split-c", {"k", "Mx", "My", "Mxy"}},
        {"3-chain", {"k", "My", "Mz", "Myz"}},
        {"3-loop", {"k", "Mx", "My", "Mz", "Mxy", "Mxz", "Myz", "Mxyz"}},
    };
    for (const auto& [name, kinds] : expected) {
        ModelCase c = make_case(name, {3, 2, 2});
        for (const auto& k : all) CHECK(defined(c, k) == (kinds.count(k) > 0));
    }
}
