#pragma once

#include <map>
#include <vector>

#include "simplie/core/report.hpp"
#include "simplie/oracle/grassmann.hpp"
#include "simplie/simplicial/moore.hpp"
#include "simplie/simplicial/multi_index.hpp"
#include "simplie/simplicial/simplicial_lie_algebra.hpp"

namespace simplie {

// One formal coordinate of the superfield: an ambient level-`degree` vector
// (expected to lie in the degree-th Moore subspace), optionally tagged with
// central/anticommuting marker variables so that multilinear components can
// be read off as marker coefficients.
struct SuperfieldSlot {
    int degree = 0;
    Vec value;
    unsigned marker = 0;  // bitmask over the two marker variables
};

// Alphabet layout: variables 0 and 1 are the two markers (parities p1, p2),
// variables 2 .. 2+n_theta-1 are the odd theta positions 0 .. n_theta-1.
inline int theta_var(int pos) { return 2 + pos; }

inline std::vector<int> superfield_alphabet(int n_theta, int p1 = 0, int p2 = 0) {
    std::vector<int> par{p1, p2};
    par.insert(par.end(), (size_t)n_theta, 1);
    return par;
}

inline unsigned theta_mask(int first_pos, int last_pos) {
    unsigned m = 0;
    for (int p = first_pos; p <= last_pos; ++p) m |= 1u << theta_var(p);
    return m;
}

// Level-n realization of the superfield on theta positions
// offset .. offset+n-1: sum over index sets alpha of s_alpha(slot value of
// degree n-|alpha|) times the product, in ascending order, of the difference
// generators tb_j attached to the complement of alpha. Here tb_0 is the
// first position and tb_j (j >= 1) is position j minus position j-1.
inline GrassmannPoly assemble_superfield(const SimplicialLieAlgebra& S, int n,
                                         const std::vector<SuperfieldSlot>& slots, int offset,
                                         int n_theta, int p1 = 0, int p2 = 0) {
    if (n < 0 || n > S.truncation()) throw std::logic_error("assemble_superfield: level out of range");
    if (offset + n > n_theta) throw std::logic_error("assemble_superfield: alphabet too small");
    GrassmannPoly out(superfield_alphabet(n_theta, p1, p2), S.dim(n));
    for (const MultiIndex& alpha : enum_S(n)) {
        int m = n - (int)alpha.size();
        for (const SuperfieldSlot& slot : slots) {
            if (slot.degree != m) continue;
            if (slot.value.size() != S.dim(m))
                throw std::logic_error("assemble_superfield: slot dimension mismatch");
            Vec coeff = s_alpha_matrix(S, n, alpha).apply(slot.value);
            GrassmannPoly term(out.parities(), S.dim(n));
            term.add_term(slot.marker, coeff);
            for (int i : complement_ascending(n, alpha)) {
                GrassmannPoly next = term.mul_var_right(theta_var(offset + i));
                if (i > 0) next += term.mul_var_right(theta_var(offset + i - 1)).negated();
                term = std::move(next);
            }
            out += term;
        }
    }
    return out;
}

// First term of the superfield differential at output level m: minus the
// left derivative, with respect to the extra front variable at position 0,
// of the zeroth face applied to the level-(m+1) realization on positions
// 0..m. Linear in the slots. Empty when level m+1 exceeds the truncation
// (that case is only ever used for marker-bilinear extractions, which this
// term cannot reach).
inline GrassmannPoly superfield_face_term(const SimplicialLieAlgebra& S,
                                          const std::vector<SuperfieldSlot>& slots, int m,
                                          int p1 = 0, int p2 = 0) {
    if (m + 1 > S.truncation())
        return GrassmannPoly(superfield_alphabet(m + 1, p1, p2), S.dim(m));
    GrassmannPoly a = assemble_superfield(S, m + 1, slots, 0, m + 1, p1, p2);
    return a.apply_matrix(S.face[(size_t)m + 1][0]).derive_left(theta_var(0)).negated();
}

// Second term: minus the sum of the left derivatives of the level-m
// realization (on positions 1..m) with respect to its own variables. Its
// coefficient at the full top monomial vanishes identically, since a
// derivative's monomials never contain the differentiated variable.
inline GrassmannPoly superfield_degree_term(const SimplicialLieAlgebra& S,
                                            const std::vector<SuperfieldSlot>& slots, int m,
                                            int p1 = 0, int p2 = 0) {
    GrassmannPoly a = assemble_superfield(S, m, slots, 1, m + 1, p1, p2);
    GrassmannPoly out(a.parities(), S.dim(m));
    for (int i = 1; i <= m; ++i) out += a.derive_left(theta_var(i));
    return out.negated();
}

// Third term: one half of the level-m bracket of the level-m realization
// with itself, coefficients paired through the Koszul rule.
inline GrassmannPoly superfield_interaction_term(const SimplicialLieAlgebra& S,
                                                 const std::vector<SuperfieldSlot>& slots, int m,
                                                 int p1 = 0, int p2 = 0) {
    GrassmannPoly a = assemble_superfield(S, m, slots, 1, m + 1, p1, p2);
    const LieAlgebra& g = S.level[(size_t)m];
    GrassmannPoly sq = grassmann_combine(
        a, a, [&g](const Vec& u, const Vec& w) { return g.bracket(u, w); }, S.dim(m));
    return sq.scaled(Rat(1, 2));
}

// Full differential of the superfield at output level m, as a polynomial on
// positions 0..m (the output field itself occupies positions 1..m).
inline GrassmannPoly superfield_differential(const SimplicialLieAlgebra& S,
                                             const std::vector<SuperfieldSlot>& slots, int m,
                                             int p1 = 0, int p2 = 0) {
    GrassmannPoly out = superfield_face_term(S, slots, m, p1, p2);
    out += superfield_degree_term(S, slots, m, p1, p2);
    out += superfield_interaction_term(S, slots, m, p1, p2);
    return out;
}

// Shift parities attached to reading the linear and bilinear components off
// the differential: sigma dresses the linear part, varsigma the bilinear
// one. With these dressings the linear part reproduces the Moore boundary
// and the bilinear part the direct pairing formula.
inline int sigma_shift(int n) { return n % 2 == 0 ? 1 : -1; }

inline int varsigma(int n1, int n2) { return (n1 * (n2 + 1)) % 2 == 0 ? 1 : -1; }

// Raw linear extraction: coefficient of marker-1 times the top monomial of
// the output field, with the degree-n input riding marker 1 of parity n+1.
// Ambient level n-1 vector.
inline Vec oracle_d_raw(const SimplicialLieAlgebra& S, int n, const Vec& x) {
    if (n < 1 || n > S.truncation()) throw std::logic_error("oracle_d_raw: degree out of range");
    std::vector<SuperfieldSlot> slots{{n, x, 1u << 0}};
    GrassmannPoly da = superfield_differential(S, slots, n - 1, (n + 1) % 2, 0);
    return da.coefficient((1u << 0) | theta_mask(1, n - 1));
}

// Raw bilinear extraction: coefficient of marker-1 marker-2 times the top
// monomial at output level n1+n2, with the two inputs riding the two
// markers of parities n1+1 and n2+1. Ambient level n1+n2 vector.
inline Vec oracle_bracket_raw(const SimplicialLieAlgebra& S, int n1, int n2, const Vec& x,
                              const Vec& y) {
    int m = n1 + n2;
    if (m > S.truncation()) throw std::logic_error("oracle_bracket_raw: output level out of range");
    std::vector<SuperfieldSlot> slots{{n1, x, 1u << 0}, {n2, y, 1u << 1}};
    GrassmannPoly da = superfield_differential(S, slots, m, (n1 + 1) % 2, (n2 + 1) % 2);
    return da.coefficient((1u << 0) | (1u << 1) | theta_mask(1, m));
}

inline Vec oracle_d_value(const SimplicialLieAlgebra& S, int n, const Vec& x) {
    Vec v = oracle_d_raw(S, n, x);
    return sigma_shift(n) == 1 ? v : vec_scale(Rat(-1), v);
}

inline Vec oracle_bracket_value(const SimplicialLieAlgebra& S, int n1, int n2, const Vec& x,
                                const Vec& y) {
    Vec v = oracle_bracket_raw(S, n1, n2, x, y);
    return varsigma(n1, n2) == 1 ? v : vec_scale(Rat(-1), v);
}

// Dressed linear part on Moore coordinates, as a matrix from the degree-n
// to the degree-(n-1) coordinate space.
inline Mat oracle_d_matrix(const SimplicialLieAlgebra& S, const MooreComplex& M, int n) {
    size_t dn = M.N[(size_t)n].dim();
    size_t dm = M.N[(size_t)n - 1].dim();
    Mat out(dm, dn);
    for (size_t j = 0; j < dn; ++j) {
        Vec v = oracle_d_value(S, n, M.N[(size_t)n].basis()[j]);
        Vec coords;
        if (!M.N[(size_t)n - 1].coordinates_of(v, coords)) {
            Report r;
            r.add("oracle_output_escapes_moore", {(long)n, (long)j}, "linear part");
            throw ValidationError(r);
        }
        for (size_t i = 0; i < dm; ++i) out(i, j) = coords[i];
    }
    return out;
}

// Dressed bilinear part on Moore coordinates: entry i*dim2+j holds the
// coordinates, in the degree-(n1+n2) space, of the pairing of the i-th
// degree-n1 and j-th degree-n2 basis vectors.
inline std::vector<Vec> oracle_bracket_matrix(const SimplicialLieAlgebra& S, const MooreComplex& M,
                                              int n1, int n2) {
    size_t d1 = M.N[(size_t)n1].dim();
    size_t d2 = M.N[(size_t)n2].dim();
    const Subspace& target = M.N[(size_t)(n1 + n2)];
    std::vector<Vec> out(d1 * d2);
    for (size_t i = 0; i < d1; ++i) {
        for (size_t j = 0; j < d2; ++j) {
            Vec v = oracle_bracket_value(S, n1, n2, M.N[(size_t)n1].basis()[i],
                                         M.N[(size_t)n2].basis()[j]);
            Vec coords;
            if (!target.coordinates_of(v, coords)) {
                Report r;
                r.add("oracle_output_escapes_moore", {(long)n1, (long)n2, (long)i, (long)j},
                      "bilinear part");
                throw ValidationError(r);
            }
            out[i * d2 + j] = std::move(coords);
        }
    }
    return out;
}

// Structural relations tying the assembled realizations to the simplicial
// operators: faces delete a variable (the zeroth after freezing the front
// variable to zero), degeneracies repeat one (the zeroth freezes a fresh
// front variable to zero). Slot values must lie in the Moore subspaces.
inline Report check_superfield_relations(const SimplicialLieAlgebra& S,
                                         const std::map<int, Vec>& slot_values, int max_level) {
    Report rep;
    std::vector<SuperfieldSlot> slots;
    for (const auto& [deg, val] : slot_values) slots.push_back({deg, val, 0u});
    auto expect_zero = [&rep](GrassmannPoly p, const std::string& law, std::vector<long> where) {
        if (!p.is_zero()) rep.add(law, std::move(where), "realization mismatch");
    };
    for (int n = 1; n <= max_level && n <= S.truncation(); ++n) {
        // face i >= 1: delete position i-1 from the level-n realization
        for (int i = 1; i <= n; ++i) {
            GrassmannPoly lhs =
                assemble_superfield(S, n, slots, 0, n).apply_matrix(S.face[(size_t)n][(size_t)i]);
            GrassmannPoly small = assemble_superfield(S, n - 1, slots, 0, n);
            std::vector<int> to{0, 1};
            for (int p = 0; p < n; ++p)
                to.push_back(p < n - 1 ? theta_var(p < i - 1 ? p : p + 1) : -1);
            GrassmannPoly rhs = small.rename_vars(to, lhs.parities());
            expect_zero(lhs + rhs.negated(), "superfield_face", {n, i});
        }
        // face 0: freeze the front variable, then delete it
        {
            GrassmannPoly lhs = assemble_superfield(S, n, slots, 0, n)
                                    .substitute_zero(theta_var(0))
                                    .apply_matrix(S.face[(size_t)n][0]);
            GrassmannPoly rhs = assemble_superfield(S, n - 1, slots, 1, n);
            expect_zero(lhs + rhs.negated(), "superfield_face_zero", {n});
        }
        if (n + 1 > S.truncation()) continue;
        // degeneracy i >= 1: repeat position i of the level-(n+1) realization
        for (int i = 1; i <= n; ++i) {
            GrassmannPoly lhs =
                assemble_superfield(S, n, slots, 1, n + 1).apply_matrix(S.degen[(size_t)n][(size_t)i]);
            GrassmannPoly big = assemble_superfield(S, n + 1, slots, 1, n + 2);
            big = big.identify_vars(theta_var(i + 1), theta_var(i));
            std::vector<int> to{0, 1};
            for (int p = 0; p < n + 2; ++p) {
                if (p == i + 1)
                    to.push_back(-1);
                else
                    to.push_back(p <= i ? theta_var(p) : theta_var(p - 1));
            }
            GrassmannPoly rhs = big.rename_vars(to, lhs.parities());
            expect_zero(lhs + rhs.negated(), "superfield_degen", {n, i});
        }
        // degeneracy 0: freeze a fresh front variable of the level-(n+1)
        // realization to zero
        {
            GrassmannPoly lhs =
                assemble_superfield(S, n, slots, 1, n + 1).apply_matrix(S.degen[(size_t)n][0]);
            GrassmannPoly rhs =
                assemble_superfield(S, n + 1, slots, 0, n + 1).substitute_zero(theta_var(0));
            expect_zero(lhs + rhs.negated(), "superfield_degen_zero", {n});
        }
    }
    return rep;
}

}  // namespace simplie
