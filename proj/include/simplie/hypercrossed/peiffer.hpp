#pragma once

#include <map>
#include <utility>

#include "simplie/hypercrossed/pairs.hpp"
#include "simplie/simplicial/moore.hpp"

namespace simplie {

// F_{alpha,beta}(x, y) = p_n([s_alpha x, s_beta y]) at level n, evaluated on
// ambient vectors x at level n-|alpha| and y at level n-|beta|. The result
// lies in N_n. Matrices are cached per level / index.
class PeifferEvaluator {
public:
    explicit PeifferEvaluator(const SimplicialLieAlgebra& S) : S_(&S) {}

    Vec value(int n, const MultiIndex& alpha, const MultiIndex& beta, const Vec& x, const Vec& y) const {
        const Mat& sa = s_alpha(n, alpha);
        const Mat& sb = s_alpha(n, beta);
        Vec br = S_->level[(size_t)n].bracket(sa.apply(x), sb.apply(y));
        return projector(n).apply(br);
    }

    const Mat& projector(int n) const {
        auto it = proj_.find(n);
        if (it == proj_.end()) it = proj_.emplace(n, moore_projector(*S_, (size_t)n)).first;
        return it->second;
    }

    const Mat& s_alpha(int n, const MultiIndex& alpha) const {
        auto key = std::make_pair(n, mask_of(alpha));
        auto it = salpha_.find(key);
        if (it == salpha_.end()) it = salpha_.emplace(key, s_alpha_matrix(*S_, n, alpha)).first;
        return it->second;
    }

private:
    const SimplicialLieAlgebra* S_;
    mutable std::map<int, Mat> proj_;
    mutable std::map<std::pair<int, unsigned>, Mat> salpha_;
};

}  // namespace simplie
