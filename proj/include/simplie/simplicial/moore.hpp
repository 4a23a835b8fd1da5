#pragma once

#include <vector>

#include "simplie/core/subspace.hpp"
#include "simplie/simplicial/multi_index.hpp"
#include "simplie/simplicial/simplicial_lie_algebra.hpp"

namespace simplie {

// Normalized chains: N_0 = level 0, N_n = ker d_1 ∩ ... ∩ ker d_n, with
// differential delta_n = d_0 restricted to N_n. delta[n] is written in the
// Moore bases (columns = basis of N_n, values = coordinates in N_{n-1}).
struct MooreComplex {
    std::vector<Subspace> N;
    std::vector<Mat> delta;  // delta[0] unused (empty matrix)

    size_t length() const {
        size_t len = 0;
        for (size_t n = 0; n < N.size(); ++n)
            if (N[n].dim() > 0) len = n;
        return len;
    }
};

inline MooreComplex moore_complex(const SimplicialLieAlgebra& S) {
    size_t K = S.truncation();
    MooreComplex M;
    M.N.resize(K + 1);
    M.delta.resize(K + 1);
    M.N[0] = Subspace::full(S.dim(0));
    for (size_t n = 1; n <= K; ++n) {
        Subspace cur = Subspace::kernel_of(S.face[n][1]);
        for (size_t i = 2; i <= n; ++i) cur = cur.intersect(Subspace::kernel_of(S.face[n][i]));
        M.N[n] = cur;
    }
    for (size_t n = 1; n <= K; ++n) {
        Mat d(M.N[n - 1].dim(), M.N[n].dim());
        for (size_t j = 0; j < M.N[n].dim(); ++j) {
            Vec img = S.face[n][0].apply(M.N[n].basis()[j]);
            Vec coords;
            if (!M.N[n - 1].coordinates_of(img, coords)) {
                Report rep;
                rep.add("moore_boundary", {(long)n, (long)j}, "d_0 does not carry N_n into N_{n-1}");
                throw ValidationError(std::move(rep));
            }
            for (size_t i = 0; i < coords.size(); ++i) d(i, j) = coords[i];
        }
        M.delta[n] = std::move(d);
    }
    return M;
}

// delta^2 = 0, and [delta N_n, N_{n-1}] ⊆ delta N_n (the boundary image is
// an ideal level by level).
inline Report check_moore(const SimplicialLieAlgebra& S, const MooreComplex& M) {
    Report rep;
    size_t K = S.truncation();
    for (size_t n = 2; n <= K; ++n)
        if (!(M.delta[n - 1] * M.delta[n]).is_zero()) rep.add("delta_squared", {(long)n});
    for (size_t n = 1; n <= K; ++n) {
        std::vector<Vec> image;
        for (size_t j = 0; j < M.N[n].dim(); ++j)
            image.push_back(S.face[n][0].apply(M.N[n].basis()[j]));
        Subspace dN = Subspace::from_spanning(S.dim(n - 1), image);
        for (const Vec& u : dN.basis())
            for (const Vec& v : M.N[n - 1].basis())
                if (!dN.contains(S.level[n - 1].bracket(u, v)))
                    rep.add("boundary_ideal", {(long)n});
    }
    return rep;
}

// p_n = p^1 ∘ ... ∘ p^n with p^i = id - s_{i-1} d_i, applied p^n first.
// Projects level n onto N_n along the degenerate part.
inline Mat moore_projector(const SimplicialLieAlgebra& S, size_t n) {
    Mat acc = Mat::identity(S.dim(n));
    for (size_t i = 1; i <= n; ++i) {
        Mat pi = Mat::identity(S.dim(n)) - S.degen[n - 1][i - 1] * S.face[n][i];
        acc = acc * pi;  // left-to-right product p^1 * p^2 * ... * p^n
    }
    return acc;
}

// Level n splits as the direct sum of s_alpha N_{n-|alpha|} over alpha in
// S(n): the images must be independent and fill the level.
inline Report check_decomposition(const SimplicialLieAlgebra& S, const MooreComplex& M) {
    Report rep;
    size_t K = S.truncation();
    for (size_t n = 0; n <= K; ++n) {
        size_t dim_sum = 0;
        Subspace span(S.dim(n));
        for (const MultiIndex& alpha : enum_S((int)n)) {
            size_t m = n - alpha.size();
            Mat sa = s_alpha_matrix(S, (int)n, alpha);
            std::vector<Vec> vecs;
            for (const Vec& b : M.N[m].basis()) vecs.push_back(sa.apply(b));
            Subspace img = Subspace::from_spanning(S.dim(n), vecs);
            if (img.dim() != M.N[m].dim())
                rep.add("decomposition_injective", {(long)n, (long)mask_of(alpha)});
            dim_sum += M.N[m].dim();
            span = span.sum(img);
        }
        if (dim_sum != S.dim(n) || span.dim() != S.dim(n))
            rep.add("decomposition_spans", {(long)n},
                    "sum of s_alpha N blocks has dimension " + std::to_string(span.dim()) + " of " +
                        std::to_string(S.dim(n)));
    }
    return rep;
}

}  // namespace simplie
