#pragma once

#include <algorithm>
#include <vector>

#include "simplie/dgla/dgla.hpp"
#include "simplie/hypercrossed/peiffer.hpp"
#include "simplie/oracle/superfield.hpp"

namespace simplie {

// Bracket of two normalized chains, computed from the pairing formula.
// x lives at level n1 and y at level n2, both ambient vectors inside the
// normalized subspace; the value is an ambient vector at level n1+n2,
// again inside the normalized subspace.
//
//   (0,0)     the level 0 bracket;
//   (0,n)     [s_{n-1} ... s_0 x, y];
//   (n,0)     -[s_{n-1} ... s_0 y, x];
//   (n1,n2)   over covering pairs (alpha,beta) with degree split (n1,n2):
//                 (-1)^{n1(n2+1)} shuffle_sign(alpha,beta) F_{alpha,beta}(x,y)
//             plus (-1)^{(n1+1)(n2+1)} times the same sum with the split
//             (n2,n1) and the arguments exchanged.
inline Vec chain_bracket(const SimplicialLieAlgebra& S, const PeifferEvaluator& P, int n1, int n2,
                         const Vec& x, const Vec& y) {
    int n = n1 + n2;
    if (n1 == 0 && n2 == 0) return S.level[0].bracket(x, y);
    if (n1 == 0 || n2 == 0) {
        MultiIndex all;
        for (int i = n - 1; i >= 0; --i) all.push_back(i);
        const Mat& up = P.s_alpha(n, all);
        if (n1 == 0) return S.level[(size_t)n].bracket(up.apply(x), y);
        return vec_scale(Rat(-1), S.level[(size_t)n].bracket(up.apply(y), x));
    }
    Vec acc(S.dim((size_t)n), Rat(0));
    int direct = parity_sign((long)n1 * (n2 + 1));
    for (const IndexPair& pr : enum_Pbar_parts(n, n1, n2)) {
        Rat c(direct * shuffle_sign(n, pr.alpha, pr.beta));
        acc = vec_add(acc, vec_scale(c, P.value(n, pr.alpha, pr.beta, x, y)));
    }
    int swap = parity_sign((long)(n1 + 1) * (n2 + 1));
    int transposed = parity_sign((long)n2 * (n1 + 1));
    for (const IndexPair& pr : enum_Pbar_parts(n, n2, n1)) {
        Rat c(swap * transposed * shuffle_sign(n, pr.alpha, pr.beta));
        acc = vec_add(acc, vec_scale(c, P.value(n, pr.alpha, pr.beta, y, x)));
    }
    return acc;
}

namespace detail {

// +1 when the tables agree, -1 when one is the exact negative of the other
// (all-zero tables count as agreeing), 0 on any mixed disagreement.
inline int table_sign(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    bool eq = true, neg = true;
    for (size_t t = 0; t < a.size(); ++t) {
        if (a[t] != b[t]) eq = false;
        if (!vec_is_zero(vec_add(a[t], b[t]))) neg = false;
        if (!eq && !neg) return 0;
    }
    return eq ? 1 : -1;
}

inline int mat_sign(const Mat& a, const Mat& b) {
    if (a == b) return 1;
    if ((a + b).is_zero()) return -1;
    return 0;
}

}  // namespace detail

// A built graded bracket structure together with the normalized-chain bases
// its coordinates refer to, and the outcome of the cross-check between the
// two independent routes: every table is computed once from the pairing
// formula and once by superfield extraction, and the recorded route sign is
// the ratio between them (+1 expected everywhere; a uniform -1 would flag a
// convention flip, any mixed disagreement throws).
struct DglaBuild {
    Dgla dgla;
    MooreComplex moore;
    std::vector<int> d_route_sign;                     // index n = 1..k
    std::vector<std::vector<int>> bracket_route_sign;  // [n1][n2], n1+n2 <= k
};

// Assemble the degreewise-finite differential graded Lie algebra carried by
// the normalized chains of S, truncated at the largest degree k with
// nonzero chains. The differential is the normalized-chain boundary; the
// brackets come from chain_bracket. Every table is reconciled against the
// superfield extraction, and when the tower has a level above k, brackets
// of total degree k+1 are required to vanish on both routes.
inline DglaBuild build_dgla(const SimplicialLieAlgebra& S) {
    DglaBuild B;
    B.moore = moore_complex(S);
    const MooreComplex& M = B.moore;
    int k = (int)M.length();
    int K = (int)S.truncation();

    Dgla& G = B.dgla;
    G.k = k;
    G.dims.resize((size_t)k + 1);
    for (int n = 0; n <= k; ++n) G.dims[(size_t)n] = M.N[(size_t)n].dim();
    G.d.resize((size_t)k + 1);
    for (int n = 1; n <= k; ++n) G.d[(size_t)n] = M.delta[(size_t)n];
    G.bracket.assign((size_t)k + 1, std::vector<std::vector<Vec>>((size_t)k + 1));

    B.d_route_sign.assign((size_t)k + 1, 1);
    for (int n = 1; n <= k; ++n) {
        int sg = detail::mat_sign(G.d[(size_t)n], oracle_d_matrix(S, M, n));
        if (sg == 0) {
            Report rep;
            rep.add("route_differential", {n},
                    "boundary and superfield extraction disagree beyond a global sign");
            throw ValidationError(std::move(rep));
        }
        B.d_route_sign[(size_t)n] = sg;
    }

    PeifferEvaluator P(S);
    B.bracket_route_sign.assign((size_t)k + 1, std::vector<int>((size_t)k + 1, 1));
    int top = std::min(k + 1, K);
    for (int n1 = 0; n1 <= k; ++n1)
        for (int n2 = 0; n1 + n2 <= top && n2 <= k; ++n2) {
            int n = n1 + n2;
            size_t d1 = M.N[(size_t)n1].dim(), d2 = M.N[(size_t)n2].dim();
            std::vector<Vec> formula(d1 * d2);
            for (size_t i = 0; i < d1; ++i)
                for (size_t j = 0; j < d2; ++j) {
                    Vec val = chain_bracket(S, P, n1, n2, M.N[(size_t)n1].basis()[i],
                                            M.N[(size_t)n2].basis()[j]);
                    Vec coords;
                    if (!M.N[(size_t)n].coordinates_of(val, coords)) {
                        Report rep;
                        rep.add(n <= k ? "bracket_escapes_normalized" : "truncation_bracket",
                                {n1, n2, (long)i, (long)j});
                        throw ValidationError(std::move(rep));
                    }
                    formula[i * d2 + j] = std::move(coords);
                }
            int sg = detail::table_sign(formula, oracle_bracket_matrix(S, M, n1, n2));
            if (sg == 0) {
                Report rep;
                rep.add("route_bracket", {n1, n2},
                        "pairing formula and superfield extraction disagree beyond a global sign");
                throw ValidationError(std::move(rep));
            }
            if (n <= k) {
                B.bracket_route_sign[(size_t)n1][(size_t)n2] = sg;
                G.bracket[(size_t)n1][(size_t)n2] = std::move(formula);
            }
        }

    return B;
}

}  // namespace simplie
