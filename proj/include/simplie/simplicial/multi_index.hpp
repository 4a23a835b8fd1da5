#pragma once

#include <vector>

#include "simplie/simplicial/simplicial_lie_algebra.hpp"

namespace simplie {

// Strictly decreasing subset of {0,...,n-1}; {} is the empty index.
using MultiIndex = std::vector<int>;

inline unsigned mask_of(const MultiIndex& a) {
    unsigned m = 0;
    for (int i : a) m |= 1u << i;
    return m;
}

// All of S(n), ordered by the binary value of the subset (ascending):
// {} < {0} < {1} < {1,0} < {2} < {2,0} < {2,1} < {2,1,0} < ...
inline std::vector<MultiIndex> enum_S(int n) {
    std::vector<MultiIndex> out;
    for (unsigned m = 0; m < (1u << n); ++m) {
        MultiIndex a;
        for (int i = n - 1; i >= 0; --i)
            if (m & (1u << i)) a.push_back(i);
        out.push_back(std::move(a));
    }
    return out;
}

inline std::vector<int> complement_ascending(int n, const MultiIndex& a) {
    unsigned m = mask_of(a);
    std::vector<int> c;
    for (int i = 0; i < n; ++i)
        if (!(m & (1u << i))) c.push_back(i);
    return c;
}

// Parity of the permutation that sorts v ascending (entries distinct).
inline int sort_sign(const std::vector<int>& v) {
    int inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// Sign of the shuffle attached to a pair (alpha, beta) of disjoint indices
// in S(n): sort the concatenation of the two ascending complements.
inline int shuffle_sign(int n, const MultiIndex& alpha, const MultiIndex& beta) {
    std::vector<int> word = complement_ascending(n, alpha);
    std::vector<int> cb = complement_ascending(n, beta);
    word.insert(word.end(), cb.begin(), cb.end());
    return sort_sign(word);
}

// s_alpha : level (n - |alpha|) -> level n, the composite of degeneracies
// s_{i_l} o ... o s_{i_1} for alpha = {i_l > ... > i_1} (smallest applied
// first). Empty alpha gives the identity on level n.
inline Mat s_alpha_matrix(const SimplicialLieAlgebra& S, int n, const MultiIndex& alpha) {
    int l = (int)alpha.size();
    int src = n - l;
    Mat m = Mat::identity(S.dim(src));
    int lvl = src;
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it, ++lvl) m = S.degen[lvl][(size_t)*it] * m;
    return m;
}

// The monotone surjection with plateau set alpha: [n] ->> [n - |alpha|],
// t |-> t - #{a in alpha : a < t}.
inline std::vector<int> surjection_of(int n, const MultiIndex& alpha) {
    unsigned m = mask_of(alpha);
    std::vector<int> f(n + 1);
    for (int t = 0, d = 0; t <= n; ++t) {
        if (t > 0 && (m & (1u << (t - 1)))) ++d;
        f[t] = t - d;
    }
    return f;
}

// Plateau set {i : f(i) = f(i+1)} of a monotone surjection, as a MultiIndex.
inline MultiIndex plateau_set(const std::vector<int>& f) {
    MultiIndex a;
    for (int i = (int)f.size() - 2; i >= 0; --i)
        if (f[i] == f[i + 1]) a.push_back(i);
    return a;
}

}  // namespace simplie
