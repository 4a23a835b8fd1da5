#include <catch2/catch_amalgamated.hpp>

#include "simplie/hypercrossed/nerve.hpp"
#include "simplie/hypercrossed/peiffer.hpp"
#include "simplie/oracle/grassmann.hpp"
#include "simplie/oracle/superfield.hpp"
#include "simplie/simplicial/dold_kan.hpp"
#include "simplie/simplicial/moore.hpp"

#include "test_fixtures.hpp"

using namespace simplie;

namespace {

Vec qv(std::initializer_list<Rat> xs) { return Vec(xs); }

ChainComplex length3_complex() {
    ChainComplex C;
    C.dim = {1, 1, 1, 1};
    C.d.resize(4);
    C.d[1] = Mat(1, 1, {Rat(0)});
    C.d[2] = Mat(1, 1, {Rat(1)});
    C.d[3] = Mat(1, 1, {Rat(0)});
    return C;
}

}  // namespace

TEST_CASE("grassmann terms accumulate and cancel") {
    GrassmannPoly p(superfield_alphabet(2), 2);
    p.add_term(0b0100, qv({1, 2}));
    p.add_term(0b0100, qv({3, -2}));
    CHECK(p.coefficient(0b0100) == qv({4, 0}));
    p.add_term(0b0100, qv({-4, 0}));
    CHECK(p.is_zero());
}

TEST_CASE("right multiplication crosses higher odd variables") {
    // parities: marker 1 odd, marker 2 even, two odd positions
    GrassmannPoly p(superfield_alphabet(2, 1, 0), 1);
    p.add_term(1u << theta_var(1), qv({1}));
    GrassmannPoly q = p.mul_var_right(theta_var(0));
    CHECK(q.coefficient((1u << theta_var(0)) | (1u << theta_var(1))) == qv({-1}));
    // squares vanish
    CHECK(q.mul_var_right(theta_var(0)).is_zero());
    // the even marker crosses nothing: the odd marker below contributes no
    // crossing either, since right insertion only passes greater indices
    GrassmannPoly r(superfield_alphabet(1, 1, 0), 1);
    r.add_term(0b01, qv({1}));
    CHECK(r.mul_var_right(theta_var(0)).coefficient(0b01 | (1u << theta_var(0))) == qv({1}));
}

TEST_CASE("left derivative moves the variable past lower odd symbols") {
    // an odd coefficient marker to the left of the position flips the sign
    GrassmannPoly p(superfield_alphabet(1, 1, 0), 1);
    p.add_term(0b01 | (1u << theta_var(0)), qv({1}));
    CHECK(p.derive_left(theta_var(0)).coefficient(0b01) == qv({-1}));
    // with an even marker there is no crossing
    GrassmannPoly q(superfield_alphabet(1, 0, 0), 1);
    q.add_term(0b01 | (1u << theta_var(0)), qv({1}));
    CHECK(q.derive_left(theta_var(0)).coefficient(0b01) == qv({1}));
}

TEST_CASE("left derivatives anticommute") {
    GrassmannPoly p(superfield_alphabet(3, 1, 0), 1);
    p.add_term(theta_mask(0, 2), qv({5}));
    p.add_term(0b01 | theta_mask(1, 2), qv({-3}));
    GrassmannPoly ab = p.derive_left(theta_var(1)).derive_left(theta_var(2));
    GrassmannPoly ba = p.derive_left(theta_var(2)).derive_left(theta_var(1));
    CHECK((ab + ba).is_zero());
}

TEST_CASE("variable identification tracks crossings") {
    // word t1 t2, substitute t2 := t0: t1 t0 = -(t0 t1)
    GrassmannPoly p(superfield_alphabet(3), 1);
    p.add_term((1u << theta_var(1)) | (1u << theta_var(2)), qv({1}));
    GrassmannPoly q = p.identify_vars(theta_var(2), theta_var(0));
    CHECK(q.coefficient((1u << theta_var(0)) | (1u << theta_var(1))) == qv({-1}));
    // adjacent identification has no crossing
    GrassmannPoly r = p.identify_vars(theta_var(2), theta_var(1));
    CHECK(r.is_zero());  // t1 t1 = 0
}

TEST_CASE("renaming requires an increasing map") {
    GrassmannPoly p(superfield_alphabet(2), 1);
    p.add_term(1u << theta_var(0), qv({1}));
    std::vector<int> down{0, 1, theta_var(1), theta_var(0)};
    CHECK_THROWS_AS(p.rename_vars(down, p.parities()), std::logic_error);
    std::vector<int> up{0, 1, theta_var(1), -1};
    CHECK(p.rename_vars(up, p.parities()).coefficient(1u << theta_var(1)) == qv({1}));
}

TEST_CASE("combine is graded antisymmetric for the level bracket") {
    LieAlgebra d = fixtures::cm_golden().d;
    auto br = [&d](const Vec& u, const Vec& w) { return d.bracket(u, w); };
    // A odd through its position, B odd through the first marker
    GrassmannPoly A(superfield_alphabet(1, 1, 0), 2);
    A.add_term(1u << theta_var(0), qv({1, 0}));
    GrassmannPoly B(superfield_alphabet(1, 1, 0), 2);
    B.add_term(0b01, qv({0, 1}));
    GrassmannPoly AB = grassmann_combine(A, B, br, 2);
    GrassmannPoly BA = grassmann_combine(B, A, br, 2);
    // both arguments odd: [A,B] = +[B,A]
    CHECK(AB.coefficient(0b01 | (1u << theta_var(0))) ==
          BA.coefficient(0b01 | (1u << theta_var(0))));
    CHECK(AB.coefficient(0b01 | (1u << theta_var(0))) == qv({0, -1}));
}

TEST_CASE("assembled realization has unit top coefficient") {
    SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_weighted(Rat(1, 2)));
    MooreComplex M = moore_complex(S);
    for (int n = 1; n <= 2; ++n) {
        Vec x = M.N[(size_t)n].basis()[0];
        std::vector<SuperfieldSlot> slots{{n, x, 0u}};
        GrassmannPoly a = assemble_superfield(S, n, slots, 0, n);
        CHECK(a.coefficient(theta_mask(0, n - 1)) == x);
    }
}

TEST_CASE("realizations satisfy the face and degeneracy relations") {
    SECTION("crossed module nerve") {
        SimplicialLieAlgebra S = from_crossed_module(fixtures::cm_golden());
        std::map<int, Vec> slots{{0, qv({2, -3})}, {1, qv({Rat(7, 2), 0, 0})}};
        CHECK(check_superfield_relations(S, slots, 2).ok());
    }
    SECTION("two-crossed nerve") {
        SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_weighted(Rat(2, 3)));
        std::map<int, Vec> slots{
            {0, qv({5})}, {1, qv({Rat(2, 3), 0})}, {2, qv({Rat(-7, 2), 0, 0, 0})}};
        CHECK(check_superfield_relations(S, slots, 3).ok());
    }
    SECTION("abelian tower of a three-step complex") {
        SimplicialLieAlgebra S = dold_kan_abelian(length3_complex(), 4);
        MooreComplex M = moore_complex(S);
        std::map<int, Vec> slots;
        for (int m = 0; m <= 3; ++m)
            slots[m] = vec_scale(Rat(2 * m + 1, 3), M.N[(size_t)m].basis()[0]);
        CHECK(check_superfield_relations(S, slots, 4).ok());
    }
    SECTION("a corrupted degeneracy is flagged") {
        SimplicialLieAlgebra S = from_crossed_module(fixtures::cm_golden());
        S.degen[1][0](0, 0) += 1;
        std::map<int, Vec> slots{{0, qv({1, 0})}, {1, qv({1, 0, 0})}};
        Report rep = check_superfield_relations(S, slots, 2);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.issues[0].law.rfind("superfield_", 0) == 0);
    }
}

TEST_CASE("the degree term never reaches the top monomial") {
    SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_boundary(Rat(5)));
    MooreComplex M = moore_complex(S);
    for (int m = 1; m <= 2; ++m) {
        std::vector<SuperfieldSlot> slots;
        for (int deg = 0; deg <= 2; ++deg)
            slots.push_back({deg, M.N[(size_t)deg].basis()[0], 0u});
        GrassmannPoly t2 = superfield_degree_term(S, slots, m);
        CHECK(vec_is_zero(t2.coefficient(theta_mask(1, m))));
    }
}

TEST_CASE("linear extraction reproduces the boundary with shift parity") {
    auto check_d = [](const SimplicialLieAlgebra& S) {
        MooreComplex M = moore_complex(S);
        for (int n = 1; n <= M.length(); ++n) {
            for (const Vec& x : M.N[(size_t)n].basis()) {
                Vec raw = oracle_d_raw(S, n, x);
                Vec expected = S.face[(size_t)n][0].apply(x);
                if (n % 2 != 0) expected = vec_scale(Rat(-1), expected);
                CHECK(raw == expected);
                CHECK(oracle_d_value(S, n, x) == S.face[(size_t)n][0].apply(x));
            }
            CHECK(oracle_d_matrix(S, M, n) == M.delta[(size_t)n]);
        }
    };
    check_d(from_crossed_module(fixtures::cm_golden()));
    check_d(from_two_crossed_module(fixtures::tcm_weighted(Rat(1, 3))));
    check_d(from_two_crossed_module(fixtures::tcm_boundary(Rat(5))));
    check_d(from_two_crossed_module(fixtures::tcm_top_boundary(Rat(2), Rat(3))));
    check_d(dold_kan_abelian(length3_complex(), 4));
}

TEST_CASE("bilinear extraction at the calibration nodes") {
    SECTION("degree zero pair is the level bracket") {
        SimplicialLieAlgebra S = from_crossed_module(fixtures::cm_golden());
        Vec E = qv({1, 0}), F = qv({0, 1});
        CHECK(oracle_bracket_value(S, 0, 0, E, F) == qv({0, 1}));
        CHECK(oracle_bracket_value(S, 0, 0, F, E) == qv({0, -1}));
        CHECK(vec_is_zero(oracle_bracket_value(S, 0, 0, E, E)));
    }
    SECTION("mixed pairs act through degeneracies") {
        SimplicialLieAlgebra S = from_crossed_module(fixtures::cm_golden());
        Vec E = qv({1, 0}), F = qv({0, 1}), X = qv({1, 0, 0});
        CHECK(oracle_bracket_value(S, 0, 1, E, X) == qv({1, 0, 0}));
        CHECK(vec_is_zero(oracle_bracket_value(S, 0, 1, F, X)));
        CHECK(oracle_bracket_value(S, 1, 0, X, E) == qv({-1, 0, 0}));
        CHECK(vec_is_zero(oracle_bracket_value(S, 1, 0, X, F)));
    }
    SECTION("weighted two-crossed actions") {
        SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_weighted(Rat(1, 2)));
        Vec K = qv({1}), D = qv({1, 0}), X = qv({1, 0, 0, 0});
        CHECK(oracle_bracket_value(S, 0, 1, K, D) == qv({1, 0}));
        CHECK(oracle_bracket_value(S, 1, 0, D, K) == qv({-1, 0}));
        CHECK(oracle_bracket_value(S, 0, 2, K, X) == qv({2, 0, 0, 0}));
        CHECK(oracle_bracket_value(S, 2, 0, X, K) == qv({-2, 0, 0, 0}));
    }
    SECTION("degree one square recovers the symmetrized lift") {
        SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_zero_lift(Rat(1)));
        Vec D = qv({1, 0});
        CHECK(oracle_bracket_value(S, 1, 1, D, D) == qv({-2, 0, 0, 0}));
        SimplicialLieAlgebra Sw = from_two_crossed_module(fixtures::tcm_weighted(Rat(3, 7)));
        CHECK(oracle_bracket_value(Sw, 1, 1, D, D) == qv({Rat(-6, 7), 0, 0, 0}));
    }
}

TEST_CASE("degree one square matches the pairing route") {
    SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_weighted(Rat(5, 3)));
    PeifferEvaluator pe(S);
    MultiIndex a{0}, b{1};
    Vec D = qv({1, 0}), D2 = qv({Rat(1, 2), 0});
    Vec formula = vec_add(pe.value(2, a, b, D, D2), pe.value(2, a, b, D2, D));
    formula = vec_scale(Rat(-1), formula);
    CHECK(oracle_bracket_value(S, 1, 1, D, D2) == formula);
}

TEST_CASE("raw bilinear extraction has shifted-parity symmetry") {
    SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_weighted(Rat(2)));
    Vec K = qv({1}), D = qv({1, 0}), X = qv({1, 0, 0, 0});
    auto flip = [](int n1, int n2, const Vec& v) {
        return ((n1 + 1) * (n2 + 1)) % 2 == 0 ? v : vec_scale(Rat(-1), v);
    };
    CHECK(oracle_bracket_raw(S, 0, 1, K, D) == flip(0, 1, oracle_bracket_raw(S, 1, 0, D, K)));
    CHECK(oracle_bracket_raw(S, 0, 2, K, X) == flip(0, 2, oracle_bracket_raw(S, 2, 0, X, K)));
    CHECK(oracle_bracket_raw(S, 1, 2, D, X) == flip(1, 2, oracle_bracket_raw(S, 2, 1, X, D)));
    CHECK(oracle_bracket_raw(S, 1, 1, D, vec_scale(Rat(3), D)) ==
          flip(1, 1, oracle_bracket_raw(S, 1, 1, vec_scale(Rat(3), D), D)));
}

TEST_CASE("pairings above the top degree vanish") {
    SECTION("crossed module nerve stops at degree one") {
        SimplicialLieAlgebra S = from_crossed_module(fixtures::cm_golden());
        Vec X = qv({1, 0, 0});
        CHECK(vec_is_zero(oracle_bracket_value(S, 1, 1, X, X)));
    }
    SECTION("two-crossed nerve stops at degree two") {
        SimplicialLieAlgebra S = from_two_crossed_module(fixtures::tcm_weighted(Rat(4, 5)));
        Vec D = qv({1, 0}), X = qv({1, 0, 0, 0});
        CHECK(vec_is_zero(oracle_bracket_value(S, 1, 2, D, X)));
        CHECK(vec_is_zero(oracle_bracket_value(S, 2, 1, X, D)));
    }
}

TEST_CASE("abelian towers have zero pairings") {
    SimplicialLieAlgebra S = dold_kan_abelian(length3_complex(), 4);
    MooreComplex M = moore_complex(S);
    for (int n1 = 0; n1 <= 2; ++n1) {
        for (int n2 = 0; n1 + n2 <= 3; ++n2) {
            Vec x = M.N[(size_t)n1].basis()[0];
            Vec y = M.N[(size_t)n2].basis()[0];
            CHECK(vec_is_zero(oracle_bracket_value(S, n1, n2, x, y)));
        }
    }
}
