#pragma once

#include <vector>

#include "simplie/simplicial/multi_index.hpp"

namespace simplie {

struct IndexPair {
    MultiIndex alpha, beta;
    bool operator==(const IndexPair& o) const { return alpha == o.alpha && beta == o.beta; }
};

// Pairs {} < alpha < beta in the S(n) order with alpha and beta disjoint,
// listed by (subset value of alpha, subset value of beta).
inline std::vector<IndexPair> enum_P(int n) {
    std::vector<IndexPair> out;
    auto S = enum_S(n);
    for (const auto& a : S) {
        if (a.empty()) continue;
        for (const auto& b : S) {
            if (mask_of(b) <= mask_of(a)) continue;
            if ((mask_of(a) & mask_of(b)) != 0) continue;
            out.push_back({a, b});
        }
    }
    return out;
}

// Pairs in P(n) that additionally cover all of {0,...,n-1}.
inline std::vector<IndexPair> enum_Pbar(int n) {
    std::vector<IndexPair> out;
    for (auto& p : enum_P(n))
        if ((mask_of(p.alpha) | mask_of(p.beta)) == (1u << n) - 1) out.push_back(p);
    return out;
}

// Covering pairs with n - |alpha| = n1 and n - |beta| = n2 (so n1 + n2 = n).
inline std::vector<IndexPair> enum_Pbar_parts(int n, int n1, int n2) {
    std::vector<IndexPair> out;
    for (auto& p : enum_Pbar(n))
        if (n - (int)p.alpha.size() == n1 && n - (int)p.beta.size() == n2) out.push_back(p);
    return out;
}

}  // namespace simplie
