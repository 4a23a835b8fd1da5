#pragma once

#include <string>
#include <vector>

#include "simplie/core/matrix.hpp"
#include "simplie/core/report.hpp"

namespace simplie {

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Differential graded Lie algebra concentrated in degrees 0..k; everything
// in higher degree is identically zero. d[n] : degree n -> degree n-1
// (d[0] stays empty). bracket[n1][n2] tabulates, for basis elements e_i of
// degree n1 and e_j of degree n2, the value [e_i, e_j] in the degree
// n1+n2 basis, stored flat at i * dims[n2] + j; tables with n1+n2 > k are
// left empty and act as zero maps.
struct Dgla {
    int k = 0;
    std::vector<size_t> dims;
    std::vector<Mat> d;
    std::vector<std::vector<std::vector<Vec>>> bracket;

    size_t dim(int n) const { return (n >= 0 && n <= k) ? dims[(size_t)n] : 0; }

    Vec zero(int n) const { return Vec(dim(n), Rat(0)); }

    Vec unit(int n, size_t i) const {
        Vec e = zero(n);
        e[i] = 1;
        return e;
    }

    Vec apply_d(int n, const Vec& v) const {
        if (n < 1 || n > k) return zero(n - 1);
        return d[(size_t)n].apply(v);
    }

    // Bilinear extension of the basis tables; zero above degree k.
    Vec apply_bracket(int n1, int n2, const Vec& x, const Vec& y) const {
        int n = n1 + n2;
        if (x.size() != dim(n1) || y.size() != dim(n2))
            throw std::invalid_argument("Dgla::apply_bracket: size mismatch");
        Vec out = zero(n);
        if (n1 > k || n2 > k || n > k) return out;
        const auto& tab = bracket[(size_t)n1][(size_t)n2];
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < y.size(); ++j) {
                if (y[j] == 0) continue;
                const Vec& bij = tab[i * y.size() + j];
                for (size_t t = 0; t < out.size(); ++t) out[t] += x[i] * y[j] * bij[t];
            }
        }
        return out;
    }
};

// Structural soundness of the tables: vector lengths and matrix shapes.
inline Report check_dgla_shape(const Dgla& G) {
    Report rep;
    if (G.dims.size() != (size_t)G.k + 1 || G.d.size() != (size_t)G.k + 1 ||
        G.bracket.size() != (size_t)G.k + 1) {
        rep.add("shape", {G.k}, "table count does not match the truncation degree");
        return rep;
    }
    for (int n = 1; n <= G.k; ++n)
        if (G.d[(size_t)n].rows() != G.dim(n - 1) || G.d[(size_t)n].cols() != G.dim(n))
            rep.add("shape", {n}, "differential block has the wrong shape");
    for (int n1 = 0; n1 <= G.k; ++n1) {
        if (G.bracket[(size_t)n1].size() != (size_t)G.k + 1) {
            rep.add("shape", {n1}, "bracket row has the wrong length");
            continue;
        }
        for (int n2 = 0; n2 <= G.k; ++n2) {
            const auto& tab = G.bracket[(size_t)n1][(size_t)n2];
            if (n1 + n2 > G.k) {
                if (!tab.empty()) rep.add("shape", {n1, n2}, "table above the truncation degree");
                continue;
            }
            if (tab.size() != G.dim(n1) * G.dim(n2)) {
                rep.add("shape", {n1, n2}, "bracket table has the wrong size");
                continue;
            }
            for (size_t t = 0; t < tab.size(); ++t)
                if (tab[t].size() != G.dim(n1 + n2))
                    rep.add("shape", {n1, n2, (long)t}, "bracket value has the wrong length");
        }
    }
    return rep;
}

// The graded axioms, checked entrywise on basis elements with exact
// arithmetic:
//   d_squared     : d(d x) = 0;
//   antisymmetry  : [x,y] + (-1)^{n1 n2} [y,x] = 0;
//   leibniz       : d[x,y] = [dx,y] + (-1)^{n1} [x,dy], including total
//                   degree k+1 where the left side vanishes by truncation;
//   jacobi        : (-1)^{n1 n3}[x,[y,z]] + (-1)^{n2 n1}[y,[z,x]]
//                   + (-1)^{n3 n2}[z,[x,y]] = 0.
inline Report verify_dgla(const Dgla& G) {
    Report rep = check_dgla_shape(G);
    if (!rep.ok()) return rep;

    for (int n = 2; n <= G.k; ++n)
        if (!(G.d[(size_t)n - 1] * G.d[(size_t)n]).is_zero()) rep.add("d_squared", {n});

    for (int n1 = 0; n1 <= G.k; ++n1)
        for (int n2 = 0; n1 + n2 <= G.k; ++n2) {
            int sg = parity_sign((long)n1 * n2);
            for (size_t i = 0; i < G.dim(n1); ++i)
                for (size_t j = 0; j < G.dim(n2); ++j) {
                    Vec lhs = G.bracket[(size_t)n1][(size_t)n2][i * G.dim(n2) + j];
                    Vec rhs = G.bracket[(size_t)n2][(size_t)n1][j * G.dim(n1) + i];
                    if (!vec_is_zero(vec_add(lhs, vec_scale(Rat(sg), rhs))))
                        rep.add("antisymmetry", {n1, n2, (long)i, (long)j});
                }
        }

    for (int n1 = 0; n1 <= G.k; ++n1)
        for (int n2 = 0; n2 <= G.k; ++n2) {
            int n = n1 + n2;
            if (n < 1 || n > G.k + 1) continue;
            for (size_t i = 0; i < G.dim(n1); ++i)
                for (size_t j = 0; j < G.dim(n2); ++j) {
                    Vec lhs = n <= G.k
                                  ? G.apply_d(n, G.bracket[(size_t)n1][(size_t)n2][i * G.dim(n2) + j])
                                  : G.zero(G.k);
                    Vec rhs = G.zero(n - 1);
                    if (n1 >= 1)
                        rhs = vec_add(rhs, G.apply_bracket(n1 - 1, n2, G.d[(size_t)n1].col(i),
                                                           G.unit(n2, j)));
                    if (n2 >= 1)
                        rhs = vec_add(rhs, vec_scale(Rat(parity_sign(n1)),
                                                     G.apply_bracket(n1, n2 - 1, G.unit(n1, i),
                                                                     G.d[(size_t)n2].col(j))));
                    if (lhs != rhs) rep.add("leibniz", {n1, n2, (long)i, (long)j});
                }
        }

    for (int n1 = 0; n1 <= G.k; ++n1)
        for (int n2 = 0; n1 + n2 <= G.k; ++n2)
            for (int n3 = 0; n1 + n2 + n3 <= G.k; ++n3)
                for (size_t i = 0; i < G.dim(n1); ++i)
                    for (size_t j = 0; j < G.dim(n2); ++j)
                        for (size_t l = 0; l < G.dim(n3); ++l) {
                            Vec x = G.unit(n1, i), y = G.unit(n2, j), z = G.unit(n3, l);
                            Vec t1 = vec_scale(Rat(parity_sign((long)n1 * n3)),
                                               G.apply_bracket(n1, n2 + n3, x,
                                                               G.apply_bracket(n2, n3, y, z)));
                            Vec t2 = vec_scale(Rat(parity_sign((long)n2 * n1)),
                                               G.apply_bracket(n2, n3 + n1, y,
                                                               G.apply_bracket(n3, n1, z, x)));
                            Vec t3 = vec_scale(Rat(parity_sign((long)n3 * n2)),
                                               G.apply_bracket(n3, n1 + n2, z,
                                                               G.apply_bracket(n1, n2, x, y)));
                            if (!vec_is_zero(vec_add(vec_add(t1, t2), t3)))
                                rep.add("jacobi", {n1, n2, n3, (long)i, (long)j, (long)l});
                        }

    return rep;
}

}  // namespace simplie
