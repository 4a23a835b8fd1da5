#pragma once

#include <vector>

#include "simplie/core/lie_algebra.hpp"

namespace simplie {

// Truncated simplicial Lie algebra: levels 0..K with faces d_i and
// degeneracies s_i stored as matrices in the chosen bases.
//   face[n][i]  : level n   -> level n-1   (1 <= n <= K, 0 <= i <= n)
//   degen[n][i] : level n   -> level n+1   (0 <= n <  K, 0 <= i <= n)
struct SimplicialLieAlgebra {
    std::vector<LieAlgebra> level;
    std::vector<std::vector<Mat>> face;   // face[0] empty
    std::vector<std::vector<Mat>> degen;  // degen[K] empty

    size_t truncation() const { return level.empty() ? 0 : level.size() - 1; }
    size_t dim(size_t n) const { return level[n].dim(); }
};

// Structural well-formedness: container sizes and matrix shapes. A Report
// from here must be clean before validate_simplicial is meaningful.
inline Report check_shapes(const SimplicialLieAlgebra& S) {
    Report rep;
    if (S.level.empty()) {
        rep.add("shape", {}, "no levels");
        return rep;
    }
    size_t K = S.truncation();
    if (S.face.size() != K + 1 || S.degen.size() != K + 1) {
        rep.add("shape", {}, "face/degeneracy tables must have one entry per level");
        return rep;
    }
    if (!S.face[0].empty()) rep.add("shape", {0}, "level 0 has no face maps");
    for (size_t n = 1; n <= K; ++n) {
        if (S.face[n].size() != n + 1) {
            rep.add("shape", {(long)n}, "level n needs n+1 face maps");
            continue;
        }
        for (size_t i = 0; i <= n; ++i)
            if (S.face[n][i].rows() != S.dim(n - 1) || S.face[n][i].cols() != S.dim(n))
                rep.add("shape", {(long)n, (long)i}, "face matrix has wrong dimensions");
    }
    if (!S.degen[K].empty()) rep.add("shape", {(long)K}, "top level stores no degeneracies");
    for (size_t n = 0; n < K; ++n) {
        if (S.degen[n].size() != n + 1) {
            rep.add("shape", {(long)n}, "level n needs n+1 degeneracy maps");
            continue;
        }
        for (size_t i = 0; i <= n; ++i)
            if (S.degen[n][i].rows() != S.dim(n + 1) || S.degen[n][i].cols() != S.dim(n))
                rep.add("shape", {(long)n, (long)i}, "degeneracy matrix has wrong dimensions");
    }
    return rep;
}

// Full validation: shapes, per-level Lie axioms are enforced by LieAlgebra
// construction, simplicial identities, and every face/degeneracy being a
// Lie algebra morphism. Issue locations are {n, i, j} where n is the level
// of the (first-applied) map.
inline Report validate_simplicial(const SimplicialLieAlgebra& S) {
    Report rep = check_shapes(S);
    if (!rep.ok()) return rep;
    size_t K = S.truncation();

    // d_i d_j = d_{j-1} d_i  (i < j), maps: level n -> n-2
    for (size_t n = 2; n <= K; ++n)
        for (size_t j = 1; j <= n; ++j)
            for (size_t i = 0; i < j; ++i)
                if (S.face[n - 1][i] * S.face[n][j] != S.face[n - 1][j - 1] * S.face[n][i])
                    rep.add("face_face", {(long)n, (long)i, (long)j});

    // s_i s_j = s_{j+1} s_i  (i <= j), maps: level n -> n+2
    for (size_t n = 0; n + 2 <= K; ++n)
        for (size_t j = 0; j <= n; ++j)
            for (size_t i = 0; i <= j; ++i)
                if (S.degen[n + 1][i] * S.degen[n][j] != S.degen[n + 1][j + 1] * S.degen[n][i])
                    rep.add("degen_degen", {(long)n, (long)i, (long)j});

    // d_i s_j, maps: level n -> n
    for (size_t n = 0; n + 1 <= K; ++n)
        for (size_t j = 0; j <= n; ++j)
            for (size_t i = 0; i <= n + 1; ++i) {
                Mat lhs = S.face[n + 1][i] * S.degen[n][j];
                if (i == j || i == j + 1) {
                    if (lhs != Mat::identity(S.dim(n))) rep.add("face_degen_id", {(long)n, (long)i, (long)j});
                } else if (i < j) {
                    if (lhs != S.degen[n - 1][j - 1] * S.face[n][i]) rep.add("face_degen", {(long)n, (long)i, (long)j});
                } else {  // i > j+1
                    if (lhs != S.degen[n - 1][j] * S.face[n][i - 1]) rep.add("face_degen", {(long)n, (long)i, (long)j});
                }
            }

    for (size_t n = 1; n <= K; ++n)
        for (size_t i = 0; i <= n; ++i) {
            Report m = check_lie_morphism(S.face[n][i], S.level[n], S.level[n - 1], "face_morphism");
            for (auto& iss : m.issues) {
                iss.where.insert(iss.where.begin(), {(long)n, (long)i});
                rep.issues.push_back(iss);
            }
        }
    for (size_t n = 0; n < K; ++n)
        for (size_t i = 0; i <= n; ++i) {
            Report m = check_lie_morphism(S.degen[n][i], S.level[n], S.level[n + 1], "degen_morphism");
            for (auto& iss : m.issues) {
                iss.where.insert(iss.where.begin(), {(long)n, (long)i});
                rep.issues.push_back(iss);
            }
        }
    return rep;
}

}  // namespace simplie
