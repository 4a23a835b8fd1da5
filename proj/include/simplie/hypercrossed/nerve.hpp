#pragma once

#include <functional>
#include <vector>

#include "simplie/core/subspace.hpp"
#include "simplie/hypercrossed/crossed_module.hpp"
#include "simplie/hypercrossed/two_crossed_module.hpp"
#include "simplie/simplicial/simplicial_lie_algebra.hpp"

namespace simplie {

namespace detail {

// ----- crossed module: level n carries blocks [x_1]...[x_n][e] in h^n + d.
// An element is read as the chain of edges x_i based at e_i = e + boundary
// of the earlier x_j, and the bracket is taken edgewise in the semidirect
// product h x| d.

inline size_t cm_dim(const CrossedModule& cm, size_t n) { return n * cm.h.dim() + cm.d.dim(); }

inline Vec cm_bracket(const CrossedModule& cm, size_t n, const Vec& a, const Vec& b) {
    size_t dh = cm.h.dim(), dd = cm.d.dim();
    auto xblk = [&](const Vec& v, size_t i) {
        Vec r(dh);
        for (size_t t = 0; t < dh; ++t) r[t] = v[(i - 1) * dh + t];
        return r;
    };
    Vec out(cm_dim(cm, n), Rat(0));
    Vec e(dd), f(dd);
    for (size_t t = 0; t < dd; ++t) e[t] = a[n * dh + t], f[t] = b[n * dh + t];
    Vec ei = e, fi = f;
    for (size_t i = 1; i <= n; ++i) {
        Vec xi = xblk(a, i), yi = xblk(b, i);
        Vec z = cm.h.bracket(xi, yi);
        z = vec_add(z, cm.act(ei, yi));
        z = vec_sub(z, cm.act(fi, xi));
        for (size_t t = 0; t < dh; ++t) out[(i - 1) * dh + t] = z[t];
        ei = vec_add(ei, cm.delta.apply(xi));
        fi = vec_add(fi, cm.delta.apply(yi));
    }
    Vec ef = cm.d.bracket(e, f);
    for (size_t t = 0; t < dd; ++t) out[n * dh + t] = ef[t];
    return out;
}

// face i : level n -> level n-1.  i = 0 drops x_1 into the base point,
// 0 < i < n merges x_i and x_{i+1}, i = n drops x_n.
inline Mat cm_face(const CrossedModule& cm, size_t n, size_t i) {
    size_t dh = cm.h.dim(), dd = cm.d.dim();
    Mat m(cm_dim(cm, n - 1), cm_dim(cm, n));
    auto put_block = [&](size_t dst_block, size_t src_block, size_t block_dim) {
        for (size_t t = 0; t < block_dim; ++t) m(dst_block + t, src_block + t) = 1;
    };
    for (size_t j = 1; j <= n; ++j) {
        size_t src = (j - 1) * dh;
        if (i == 0) {
            if (j == 1) {
                for (size_t t = 0; t < dh; ++t)
                    for (size_t r = 0; r < dd; ++r) m((n - 1) * dh + r, src + t) = cm.delta(r, t);
            } else {
                put_block((j - 2) * dh, src, dh);
            }
        } else if (i == n) {
            if (j < n) put_block((j - 1) * dh, src, dh);
        } else {
            if (j < i)
                put_block((j - 1) * dh, src, dh);
            else if (j == i || j == i + 1)
                put_block((i - 1) * dh, src, dh);
            else
                put_block((j - 2) * dh, src, dh);
        }
    }
    put_block((n - 1) * dh, n * dh, dd);
    return m;
}

// degeneracy i : level n -> level n+1 inserts a zero edge after x_i.
inline Mat cm_degen(const CrossedModule& cm, size_t n, size_t i) {
    size_t dh = cm.h.dim(), dd = cm.d.dim();
    Mat m(cm_dim(cm, n + 1), cm_dim(cm, n));
    auto put_block = [&](size_t dst, size_t src, size_t block_dim) {
        for (size_t t = 0; t < block_dim; ++t) m(dst + t, src + t) = 1;
    };
    for (size_t j = 1; j <= n; ++j) {
        size_t dst_block = (j <= i) ? j : j + 1;  // block i+1 of the target stays zero
        put_block((dst_block - 1) * dh, (j - 1) * dh, dh);
    }
    put_block((n + 1) * dh, n * dh, dd);
    return m;
}

inline LieAlgebra algebra_from_bilinear(size_t D, const std::function<Vec(const Vec&, const Vec&)>& br) {
    Vec c(D * D * D, Rat(0));
    for (size_t r = 0; r < D; ++r) {
        Vec er(D, Rat(0));
        er[r] = 1;
        for (size_t s = 0; s < D; ++s) {
            Vec es(D, Rat(0));
            es[s] = 1;
            Vec v = br(er, es);
            for (size_t t = 0; t < D; ++t) c[(r * D + s) * D + t] = v[t];
        }
    }
    return LieAlgebra(D, std::move(c));
}

}  // namespace detail

// Simplicial Lie algebra generated by a crossed module, truncated at K.
// Level n is h^n + d; N_1 = h with boundary delta, N_n = 0 for n >= 2.
inline SimplicialLieAlgebra from_crossed_module(const CrossedModule& cm, size_t K = 2) {
    Report rep = check_crossed_module(cm);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    SimplicialLieAlgebra S;
    S.face.resize(K + 1);
    S.degen.resize(K + 1);
    for (size_t n = 0; n <= K; ++n) {
        S.level.push_back(detail::algebra_from_bilinear(
            detail::cm_dim(cm, n), [&](const Vec& a, const Vec& b) { return detail::cm_bracket(cm, n, a, b); }));
        if (n >= 1)
            for (size_t i = 0; i <= n; ++i) S.face[n].push_back(detail::cm_face(cm, n, i));
        if (n < K)
            for (size_t i = 0; i <= n; ++i) S.degen[n].push_back(detail::cm_degen(cm, n, i));
    }
    return S;
}

// Extend a truncated simplicial Lie algebra upward: each new level is the
// span of the degeneracy images inside the simplicial kernel of the levels
// below, with faces the coordinate projections. This is the correct
// continuation whenever the Moore complex of the new levels is zero; the
// bracket closure of the span is verified and failure is reported.
inline void coskeletal_extend(SimplicialLieAlgebra& S, size_t K) {
    while (S.truncation() < K) {
        size_t n = S.truncation() + 1;
        if (n < 2) throw std::logic_error("coskeletal_extend: need two explicit levels");
        size_t dprev = S.dim(n - 1), amb = (n + 1) * dprev;

        std::vector<Mat> sk;  // candidate degeneracy i into the product of faces
        for (size_t i = 0; i < n; ++i) {
            Mat m(amb, dprev);
            for (size_t j = 0; j <= n; ++j) {
                Mat blk = (j == i || j == i + 1)
                              ? Mat::identity(dprev)
                              : (j < i ? S.degen[n - 2][i - 1] * S.face[n - 1][j]
                                       : S.degen[n - 2][i] * S.face[n - 1][j - 1]);
                for (size_t r = 0; r < dprev; ++r)
                    for (size_t c = 0; c < dprev; ++c)
                        if (blk(r, c) != 0) m(j * dprev + r, c) = blk(r, c);
            }
            sk.push_back(std::move(m));
        }

        std::vector<Vec> gens;
        for (const Mat& m : sk)
            for (size_t c = 0; c < m.cols(); ++c) gens.push_back(m.col(c));
        Subspace G = Subspace::from_spanning(amb, gens);
        size_t D = G.dim();

        auto block = [&](const Vec& v, size_t j) {
            Vec r(dprev);
            for (size_t t = 0; t < dprev; ++t) r[t] = v[j * dprev + t];
            return r;
        };

        Vec c(D * D * D, Rat(0));
        for (size_t r = 0; r < D; ++r)
            for (size_t s = 0; s < D; ++s) {
                Vec z(amb, Rat(0));
                for (size_t j = 0; j <= n; ++j) {
                    Vec zj = S.level[n - 1].bracket(block(G.basis()[r], j), block(G.basis()[s], j));
                    for (size_t t = 0; t < dprev; ++t) z[j * dprev + t] = zj[t];
                }
                Vec coords;
                if (!G.coordinates_of(z, coords)) {
                    Report rep;
                    rep.add("degenerate_span_closure", {(long)n, (long)r, (long)s},
                            "bracket of degenerate elements leaves the degenerate span");
                    throw ValidationError(std::move(rep));
                }
                for (size_t t = 0; t < D; ++t) c[(r * D + s) * D + t] = coords[t];
            }
        LieAlgebra top(D, std::move(c));

        std::vector<Mat> faces;
        for (size_t i = 0; i <= n; ++i) {
            Mat f(dprev, D);
            for (size_t r = 0; r < D; ++r) {
                Vec b = block(G.basis()[r], i);
                for (size_t t = 0; t < dprev; ++t) f(t, r) = b[t];
            }
            faces.push_back(std::move(f));
        }

        std::vector<Mat> degs;
        for (size_t i = 0; i < n; ++i) {
            Mat g(D, dprev);
            for (size_t t = 0; t < dprev; ++t) {
                Vec coords;
                if (!G.coordinates_of(sk[i].col(t), coords)) throw std::logic_error("degeneracy escaped its own span");
                for (size_t r = 0; r < D; ++r) g(r, t) = coords[r];
            }
            degs.push_back(std::move(g));
        }

        S.level.push_back(std::move(top));
        S.face.push_back(std::move(faces));
        S.degen[n - 1] = std::move(degs);
        S.degen.push_back({});
    }
}

// Simplicial Lie algebra generated by a 2-crossed module, truncated at K
// (K >= 2). Level 0 = k, level 1 = d + k, level 2 = h + d + d + k with
// blocks [x][u][v][w]; levels above 2 are degenerate and built by
// coskeletal_extend.
inline SimplicialLieAlgebra from_two_crossed_module(const TwoCrossedModule& t, size_t K = 3) {
    Report rep = check_two_crossed_module(t);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    if (K < 2) throw InputError("truncation for a 2-crossed module must be at least 2");
    size_t dh = t.h.dim(), dd = t.d.dim(), dk = t.k.dim();
    size_t d1 = dd + dk, d2 = dh + 2 * dd + dk;

    auto split1 = [&](const Vec& a, Vec& v, Vec& w) {
        v.assign(a.begin(), a.begin() + dd);
        w.assign(a.begin() + dd, a.end());
    };
    auto split2 = [&](const Vec& a, Vec& x, Vec& u, Vec& v, Vec& w) {
        x.assign(a.begin(), a.begin() + dh);
        u.assign(a.begin() + dh, a.begin() + dh + dd);
        v.assign(a.begin() + dh + dd, a.begin() + dh + 2 * dd);
        w.assign(a.begin() + dh + 2 * dd, a.end());
    };
    auto join1 = [&](const Vec& v, const Vec& w) {
        Vec r(d1);
        for (size_t i = 0; i < dd; ++i) r[i] = v[i];
        for (size_t i = 0; i < dk; ++i) r[dd + i] = w[i];
        return r;
    };
    auto join2 = [&](const Vec& x, const Vec& u, const Vec& v, const Vec& w) {
        Vec r(d2);
        for (size_t i = 0; i < dh; ++i) r[i] = x[i];
        for (size_t i = 0; i < dd; ++i) r[dh + i] = u[i], r[dh + dd + i] = v[i];
        for (size_t i = 0; i < dk; ++i) r[dh + 2 * dd + i] = w[i];
        return r;
    };

    auto bracket1 = [&](const Vec& a, const Vec& b) {
        Vec v, w, v2, w2;
        split1(a, v, w);
        split1(b, v2, w2);
        Vec V = vec_add(t.d.bracket(v, v2), vec_sub(t.act_d(w, v2), t.act_d(w2, v)));
        return join1(V, t.k.bracket(w, w2));
    };

    auto bracket2 = [&](const Vec& a, const Vec& b) {
        Vec x, u, v, w, x2, u2, v2, w2;
        split2(a, x, u, v, w);
        split2(b, x2, u2, v2, w2);
        Vec W = t.k.bracket(w, w2);
        Vec V = vec_add(t.d.bracket(v, v2), vec_sub(t.act_d(w, v2), t.act_d(w2, v)));
        Vec U = t.d.bracket(u, u2);
        U = vec_add(U, t.d.bracket(u, v2));
        U = vec_add(U, t.d.bracket(v, u2));
        U = vec_add(U, vec_sub(t.act_d(w, u2), t.act_d(w2, u)));
        Vec X = t.h.bracket(x, x2);
        X = vec_add(X, t.lift_of(t.delta2.apply(x), u2));
        X = vec_add(X, t.lift_of(u, t.delta2.apply(x2)));
        Vec left_base = vec_add(t.delta1.apply(vec_add(u, v)), w);
        Vec right_base = vec_add(t.delta1.apply(v2), w2);
        X = vec_add(X, t.act_h(left_base, x2));
        X = vec_sub(X, t.act_h(right_base, x));
        X = vec_sub(X, t.lift_of(v, u2));
        X = vec_add(X, t.lift_of(v2, u));
        return join2(X, U, V, W);
    };

    SimplicialLieAlgebra S;
    S.level.push_back(t.k);
    S.level.push_back(detail::algebra_from_bilinear(d1, bracket1));
    S.level.push_back(detail::algebra_from_bilinear(d2, bracket2));
    S.face.resize(3);
    S.degen.resize(3);

    {  // level 1 -> 0 and 0 -> 1
        Mat f0(dk, d1), f1(dk, d1), s0(d1, dk);
        for (size_t i = 0; i < dk; ++i) {
            for (size_t j = 0; j < dd; ++j) f0(i, j) = t.delta1(i, j);
            f0(i, dd + i) = 1;
            f1(i, dd + i) = 1;
            s0(dd + i, i) = 1;
        }
        S.face[1] = {f0, f1};
        S.degen[0] = {s0};
    }
    {  // level 2 -> 1 and 1 -> 2
        Mat f0(d1, d2), f1(d1, d2), f2(d1, d2);
        for (size_t i = 0; i < dd; ++i) {
            for (size_t j = 0; j < dh; ++j) f0(i, j) = t.delta2(i, j);  // d-part: delta2 x + u
            f0(i, dh + i) = 1;
            f1(i, dh + i) = 1;  // u + v
            f1(i, dh + dd + i) = 1;
            f2(i, dh + dd + i) = 1;  // v
        }
        for (size_t i = 0; i < dk; ++i) {
            for (size_t j = 0; j < dd; ++j) f0(dd + i, dh + dd + j) = t.delta1(i, j);  // k-part: delta1 v + w
            f0(dd + i, dh + 2 * dd + i) = 1;
            f1(dd + i, dh + 2 * dd + i) = 1;
            f2(dd + i, dh + 2 * dd + i) = 1;
        }
        Mat s0(d2, d1), s1(d2, d1);
        for (size_t i = 0; i < dd; ++i) {
            s0(dh + i, i) = 1;       // u := v-part of the edge
            s1(dh + dd + i, i) = 1;  // v := v-part of the edge
        }
        for (size_t i = 0; i < dk; ++i) {
            s0(dh + 2 * dd + i, dd + i) = 1;
            s1(dh + 2 * dd + i, dd + i) = 1;
        }
        S.face[2] = {f0, f1, f2};
        S.degen[1] = {s0, s1};
    }

    if (K > 2) coskeletal_extend(S, K);
    return S;
}

}  // namespace simplie
