#include <catch2/catch_amalgamated.hpp>

#include "simplie/hypercrossed/nerve.hpp"
#include "simplie/hypercrossed/pairs.hpp"
#include "simplie/hypercrossed/peiffer.hpp"
#include "test_fixtures.hpp"

using namespace simplie;

TEST_CASE("pair enumerations, small cases frozen") {
    CHECK(enum_P(1).empty());
    CHECK(enum_Pbar(1).empty());

    auto p2 = enum_P(2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0] == IndexPair{{0}, {1}});
    CHECK(enum_Pbar(2) == p2);

    auto pb3 = enum_Pbar(3);
    REQUIRE(pb3.size() == 3);
    CHECK(pb3[0] == IndexPair{{0}, {2, 1}});
    CHECK(pb3[1] == IndexPair{{1}, {2, 0}});
    CHECK(pb3[2] == IndexPair{{1, 0}, {2}});

    auto pb21 = enum_Pbar_parts(3, 2, 1);
    REQUIRE(pb21.size() == 2);
    CHECK(pb21[0] == IndexPair{{0}, {2, 1}});
    CHECK(pb21[1] == IndexPair{{1}, {2, 0}});
    auto pb12 = enum_Pbar_parts(3, 1, 2);
    REQUIRE(pb12.size() == 1);
    CHECK(pb12[0] == IndexPair{{1, 0}, {2}});

    // P(3) also contains non-covering pairs such as ({0},{1})
    auto p3 = enum_P(3);
    CHECK(p3.size() > pb3.size());
    bool has_noncover = false;
    for (auto& p : p3)
        if (p.alpha == MultiIndex{0} && p.beta == MultiIndex{1}) has_noncover = true;
    CHECK(has_noncover);
}

TEST_CASE("covering pair counts and invariants") {
    for (int n = 2; n <= 6; ++n) {
        auto pb = enum_Pbar(n);
        CHECK(pb.size() == (size_t)(1u << (n - 1)) - 1);
        size_t parts_total = 0;
        for (int n1 = 1; n1 < n; ++n1) parts_total += enum_Pbar_parts(n, n1, n - n1).size();
        CHECK(parts_total == pb.size());
        for (auto& p : pb) {
            CHECK(mask_of(p.alpha) < mask_of(p.beta));
            CHECK((mask_of(p.alpha) & mask_of(p.beta)) == 0);
            CHECK((mask_of(p.alpha) | mask_of(p.beta)) == (1u << n) - 1);
            CHECK_FALSE(p.alpha.empty());
        }
    }
}

TEST_CASE("pairing vanishes on the nerve of a crossed module") {
    SimplicialLieAlgebra S = from_crossed_module(fixtures::cm_golden(), 2);
    PeifferEvaluator F(S);
    // N_1 = {(x, 0)}: ambient level-1 vectors with zero d-part
    Vec a{Rat(1), Rat(0), Rat(0)}, b{Rat(5), Rat(0), Rat(0)};
    Vec v = F.value(2, {0}, {1}, a, b);
    CHECK(vec_is_zero(v));
}

TEST_CASE("pairing on the nerve of a 2-crossed module recovers the lift") {
    Rat nu(7, 2);
    SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_zero_lift(nu), 3);
    PeifferEvaluator F(S);
    // N_1 ambient: (v, w) with w = 0; basis vector a = D
    Vec a{Rat(1), Rat(0)}, b{Rat(1), Rat(0)};
    Vec v = F.value(2, {0}, {1}, a, b);
    // level-2 blocks are [x][u][v][w]; F_{(0),(1)}(a,b) has x-part {b,a}
    REQUIRE(v.size() == 4);
    CHECK(v[0] == nu);  // {D,D} = nu X
    CHECK(v[1] == 0);
    CHECK(v[2] == 0);
    CHECK(v[3] == 0);

    MooreComplex M = moore_complex(S);
    CHECK(M.N[2].contains(v));
}

TEST_CASE("pairing is bilinear and valued in the Moore subspace") {
    SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_weighted(Rat(2)), 3);
    PeifferEvaluator F(S);
    MooreComplex M = moore_complex(S);
    Vec a{Rat(1), Rat(0)}, b{Rat(3), Rat(0)}, c{Rat(-2), Rat(0)};
    Vec ab = vec_add(a, b);
    Vec lhs = F.value(2, {0}, {1}, ab, c);
    Vec rhs = vec_add(F.value(2, {0}, {1}, a, c), F.value(2, {0}, {1}, b, c));
    CHECK(lhs == rhs);
    CHECK(M.N[2].contains(lhs));
    // and for the skew pair at level 3 with alpha = {1,0}, beta = {2}
    Vec x3 = F.value(3, {1, 0}, {2}, Vec{Rat(1), Rat(0)}, Vec(S.dim(2), Rat(0)));
    CHECK(vec_is_zero(x3));
}

TEST_CASE("crossed module validation rejects broken structures") {
    SECTION("peiffer law") {
        CrossedModule cm;
        Vec ch(8, Rat(0));
        ch[(0 * 2 + 1) * 2 + 0] = 1;  // [a,b] = a: solvable 2-dim algebra
        ch[(1 * 2 + 0) * 2 + 0] = -1;
        cm.h = LieAlgebra(2, ch);
        cm.d = LieAlgebra::abelian(1);
        cm.delta = Mat(1, 2);                   // zero boundary
        cm.action = {Mat(2, 2)};                // zero action
        Report r = check_crossed_module(cm);
        REQUIRE_FALSE(r.ok());
        bool peiffer = false;
        for (auto& iss : r.issues) peiffer |= (iss.law == "peiffer");
        CHECK(peiffer);
    }
    SECTION("equivariance") {
        CrossedModule cm = fixtures::cm_golden();
        cm.action[1](0, 0) = 1;  // F now acts on X, but [F, delta X] = 0
        Report r = check_crossed_module(cm);
        REQUIRE_FALSE(r.ok());
        bool equiv = false;
        for (auto& iss : r.issues) equiv |= (iss.law == "equivariance");
        CHECK(equiv);
    }
    SECTION("valid fixture passes") { CHECK(check_crossed_module(fixtures::cm_golden()).ok()); }
}

TEST_CASE("2-crossed module validation") {
    CHECK(check_two_crossed_module(fixtures::tcm_zero_lift(Rat(1))).ok());
    CHECK(check_two_crossed_module(fixtures::tcm_weighted(Rat(-3, 4))).ok());
    CHECK(check_two_crossed_module(fixtures::tcm_boundary(Rat(5))).ok());
    CHECK(check_two_crossed_module(fixtures::tcm_top_boundary(Rat(2), Rat(3))).ok());

    SECTION("lift equivariance mismatch") {
        TwoCrossedModule t = fixtures::tcm_weighted(Rat(1));
        t.action_h = {Mat(1, 1, {Rat(3)})};  // K.{D,D} = 3X but {K.D,D}+{D,K.D} = 2X
        Report r = check_two_crossed_module(t);
        REQUIRE_FALSE(r.ok());
        bool law = false;
        for (auto& iss : r.issues) law |= (iss.law == "lift_equivariance");
        CHECK(law);
    }
    SECTION("chain condition") {
        TwoCrossedModule t = fixtures::tcm_zero_lift(Rat(0));
        t.delta2 = Mat(1, 1, {Rat(1)});
        t.delta1 = Mat(1, 1, {Rat(1)});
        Report r = check_two_crossed_module(t);
        REQUIRE_FALSE(r.ok());
        bool law = false;
        for (auto& iss : r.issues) law |= (iss.law == "complex");
        CHECK(law);
    }
    SECTION("broken top equivariance") {
        TwoCrossedModule t = fixtures::tcm_weighted(Rat(0));
        t.delta1 = Mat(1, 1, {Rat(1)});  // delta1(K.D) = K but [K, delta1 D] = 0
        Report r = check_two_crossed_module(t);
        REQUIRE_FALSE(r.ok());
        bool law = false;
        for (auto& iss : r.issues) law |= (iss.law == "equivariance_top" || iss.law == "peiffer_identity");
        CHECK(law);
    }
}
