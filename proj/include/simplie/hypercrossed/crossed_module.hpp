#pragma once

#include <vector>

#include "simplie/core/lie_algebra.hpp"

namespace simplie {

// Lie crossed module delta : h -> d with d acting on h by derivations.
// action[i] is the matrix of the i-th basis vector of d acting on h.
struct CrossedModule {
    LieAlgebra h, d;
    Mat delta;                // d.dim() x h.dim()
    std::vector<Mat> action;  // d.dim() entries, each h.dim() x h.dim()

    Mat action_of(const Vec& dv) const {
        Mat m(h.dim(), h.dim());
        for (size_t i = 0; i < d.dim(); ++i)
            if (dv[i] != 0) m = m + action[i].scaled(dv[i]);
        return m;
    }

    Vec act(const Vec& dv, const Vec& x) const { return action_of(dv).apply(x); }
};

inline Report check_crossed_module(const CrossedModule& cm) {
    Report rep;
    size_t dh = cm.h.dim(), dd = cm.d.dim();
    if (cm.delta.rows() != dd || cm.delta.cols() != dh) {
        rep.add("shape", {}, "boundary matrix must map h into d");
        return rep;
    }
    if (cm.action.size() != dd) {
        rep.add("shape", {}, "need one action matrix per basis vector of d");
        return rep;
    }
    for (size_t i = 0; i < dd; ++i)
        if (cm.action[i].rows() != dh || cm.action[i].cols() != dh) {
            rep.add("shape", {(long)i}, "action matrix has wrong dimensions");
            return rep;
        }

    auto eh = [&](size_t i) { Vec v(dh, Rat(0)); v[i] = 1; return v; };

    // rho([a,b]) = rho(a) rho(b) - rho(b) rho(a) on basis pairs of d
    for (size_t i = 0; i < dd; ++i)
        for (size_t j = i + 1; j < dd; ++j) {
            Mat lhs = cm.action_of(cm.d.bracket_basis(i, j));
            Mat rhs = cm.action[i] * cm.action[j] - cm.action[j] * cm.action[i];
            if (lhs != rhs) rep.add("action_homomorphism", {(long)i, (long)j});
        }

    // a . [x,y] = [a.x, y] + [x, a.y]
    for (size_t a = 0; a < dd; ++a)
        for (size_t i = 0; i < dh; ++i)
            for (size_t j = i + 1; j < dh; ++j) {
                Vec lhs = cm.action[a].apply(cm.h.bracket_basis(i, j));
                Vec rhs = vec_add(cm.h.bracket(cm.action[a].apply(eh(i)), eh(j)),
                                  cm.h.bracket(eh(i), cm.action[a].apply(eh(j))));
                if (lhs != rhs) rep.add("action_derivation", {(long)a, (long)i, (long)j});
            }

    // delta(a . x) = [a, delta x]
    for (size_t a = 0; a < dd; ++a)
        for (size_t i = 0; i < dh; ++i) {
            Vec ea(dd, Rat(0));
            ea[a] = 1;
            Vec lhs = cm.delta.apply(cm.action[a].apply(eh(i)));
            Vec rhs = cm.d.bracket(ea, cm.delta.col(i));
            if (lhs != rhs) rep.add("equivariance", {(long)a, (long)i});
        }

    // delta(x) . y = [x, y]
    for (size_t i = 0; i < dh; ++i)
        for (size_t j = 0; j < dh; ++j) {
            Vec lhs = cm.act(cm.delta.col(i), eh(j));
            Vec rhs = cm.h.bracket_basis(i, j);
            if (lhs != rhs) rep.add("peiffer", {(long)i, (long)j});
        }

    return rep;
}

}  // namespace simplie
