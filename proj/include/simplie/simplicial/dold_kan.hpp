#pragma once

#include <algorithm>
#include <vector>

#include "simplie/simplicial/multi_index.hpp"
#include "simplie/simplicial/simplicial_lie_algebra.hpp"

namespace simplie {

// Nonnegatively graded chain complex of Q-vector spaces with d^2 = 0.
struct ChainComplex {
    std::vector<size_t> dim;  // dim[m] = dim V_m, m = 0..top
    std::vector<Mat> d;       // d[m] : V_m -> V_{m-1} for m >= 1; d[0] empty

    size_t dim_at(size_t m) const { return m < dim.size() ? dim[m] : 0; }
};

inline Report check_chain_complex(const ChainComplex& C) {
    Report rep;
    if (C.dim.empty() || C.d.size() != C.dim.size()) {
        rep.add("shape", {}, "chain complex needs one differential slot per degree");
        return rep;
    }
    for (size_t m = 1; m < C.dim.size(); ++m)
        if (C.d[m].rows() != C.dim[m - 1] || C.d[m].cols() != C.dim[m])
            rep.add("shape", {(long)m}, "differential matrix has wrong dimensions");
    if (!rep.ok()) return rep;
    for (size_t m = 2; m < C.dim.size(); ++m)
        if (!(C.d[m - 1] * C.d[m]).is_zero()) rep.add("delta_squared", {(long)m});
    return rep;
}

namespace detail {

struct DkLevel {
    std::vector<MultiIndex> alphas;  // enum_S order; index == subset mask
    std::vector<size_t> offset;
    size_t total = 0;
};

inline DkLevel dk_level(const ChainComplex& C, int n) {
    DkLevel L;
    L.alphas = enum_S(n);
    L.offset.resize(L.alphas.size());
    for (size_t a = 0; a < L.alphas.size(); ++a) {
        L.offset[a] = L.total;
        L.total += C.dim_at((size_t)n - L.alphas[a].size());
    }
    return L;
}

// Linear realization of the monotone map phi : [p] -> [n] on the levels
// built from C: summand alpha carries V_{n-|alpha|} placed by s_alpha.
// On that summand the operator factors through psi = (surjection of alpha)
// o phi = iota o rho; the injection part acts by iterated differentials
// when its image is the top segment {m-q,...,m} of [m] and by zero
// otherwise; the surjection part re-places the result in the summand named
// by its plateau set.
inline Mat dk_operator(const ChainComplex& C, int n, int p, const std::vector<int>& phi) {
    DkLevel Ln = dk_level(C, n), Lp = dk_level(C, p);
    Mat M(Lp.total, Ln.total);
    for (size_t a = 0; a < Ln.alphas.size(); ++a) {
        const MultiIndex& alpha = Ln.alphas[a];
        int m = n - (int)alpha.size();
        size_t dm = C.dim_at((size_t)m);
        if (dm == 0) continue;
        std::vector<int> pia = surjection_of(n, alpha);
        std::vector<int> psi(p + 1);
        for (int t = 0; t <= p; ++t) psi[t] = pia[phi[t]];
        std::vector<int> image = psi;
        image.erase(std::unique(image.begin(), image.end()), image.end());
        int q = (int)image.size() - 1;
        bool top_segment = true;
        for (int j = 0; j <= q; ++j)
            if (image[j] != m - q + j) top_segment = false;
        if (!top_segment) continue;
        Mat block = Mat::identity(dm);
        for (int lvl = m; lvl > q; --lvl) block = C.d[(size_t)lvl] * block;
        std::vector<int> rho(p + 1);
        for (int t = 0; t <= p; ++t)
            rho[t] = (int)(std::lower_bound(image.begin(), image.end(), psi[t]) - image.begin());
        size_t b = mask_of(plateau_set(rho));
        for (size_t r = 0; r < block.rows(); ++r)
            for (size_t c = 0; c < block.cols(); ++c)
                if (block(r, c) != 0) M(Lp.offset[b] + r, Ln.offset[a] + c) = block(r, c);
    }
    return M;
}

inline std::vector<int> coface_map(int i, int n) {  // [n-1] -> [n], skips i
    std::vector<int> f(n);
    for (int t = 0; t < n; ++t) f[t] = t < i ? t : t + 1;
    return f;
}

inline std::vector<int> codegeneracy_map(int i, int n) {  // [n+1] ->> [n], repeats i
    std::vector<int> f(n + 2);
    for (int t = 0; t <= n + 1; ++t) f[t] = t <= i ? t : t - 1;
    return f;
}

}  // namespace detail

// Abelian simplicial Lie algebra whose Moore complex is C, truncated at K.
inline SimplicialLieAlgebra dold_kan_abelian(const ChainComplex& C, size_t K) {
    Report rep = check_chain_complex(C);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    SimplicialLieAlgebra S;
    S.face.resize(K + 1);
    S.degen.resize(K + 1);
    for (size_t n = 0; n <= K; ++n) S.level.push_back(LieAlgebra::abelian(detail::dk_level(C, (int)n).total));
    for (size_t n = 1; n <= K; ++n)
        for (int i = 0; i <= (int)n; ++i)
            S.face[n].push_back(detail::dk_operator(C, (int)n, (int)n - 1, detail::coface_map(i, (int)n)));
    for (size_t n = 0; n < K; ++n)
        for (int i = 0; i <= (int)n; ++i)
            S.degen[n].push_back(detail::dk_operator(C, (int)n, (int)n + 1, detail::codegeneracy_map(i, (int)n)));
    return S;
}

}  // namespace simplie
