#pragma once

#include <vector>

#include "simplie/core/lie_algebra.hpp"

namespace simplie {

// Lie 2-crossed module  h --delta2--> d --delta1--> k  with k acting on d
// and h by derivations and a bilinear lift {.,.} : d x d -> h measuring the
// failure of delta2 to be a crossed module boundary.
struct TwoCrossedModule {
    LieAlgebra h, d, k;
    Mat delta2;  // d.dim() x h.dim()
    Mat delta1;  // k.dim() x d.dim()
    std::vector<Mat> action_d;  // k.dim() entries, d.dim() x d.dim()
    std::vector<Mat> action_h;  // k.dim() entries, h.dim() x h.dim()
    std::vector<Vec> lift;      // d.dim()*d.dim() entries: lift[i*d.dim()+j] = {e_i, e_j}

    Mat act_d_of(const Vec& kv) const {
        Mat m(d.dim(), d.dim());
        for (size_t i = 0; i < k.dim(); ++i)
            if (kv[i] != 0) m = m + action_d[i].scaled(kv[i]);
        return m;
    }
    Mat act_h_of(const Vec& kv) const {
        Mat m(h.dim(), h.dim());
        for (size_t i = 0; i < k.dim(); ++i)
            if (kv[i] != 0) m = m + action_h[i].scaled(kv[i]);
        return m;
    }
    Vec act_d(const Vec& kv, const Vec& dv) const { return act_d_of(kv).apply(dv); }
    Vec act_h(const Vec& kv, const Vec& x) const { return act_h_of(kv).apply(x); }

    Vec lift_of(const Vec& a, const Vec& b) const {
        Vec r(h.dim(), Rat(0));
        for (size_t i = 0; i < d.dim(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < d.dim(); ++j) {
                if (b[j] == 0) continue;
                Rat f = a[i] * b[j];
                const Vec& lij = lift[i * d.dim() + j];
                for (size_t t = 0; t < h.dim(); ++t)
                    if (lij[t] != 0) r[t] += f * lij[t];
            }
        }
        return r;
    }
};

inline Report check_two_crossed_module(const TwoCrossedModule& t) {
    Report rep;
    size_t dh = t.h.dim(), dd = t.d.dim(), dk = t.k.dim();
    if (t.delta2.rows() != dd || t.delta2.cols() != dh || t.delta1.rows() != dk || t.delta1.cols() != dd) {
        rep.add("shape", {}, "boundary matrices must chain h -> d -> k");
        return rep;
    }
    if (t.action_d.size() != dk || t.action_h.size() != dk || t.lift.size() != dd * dd) {
        rep.add("shape", {}, "action tables need one matrix per basis vector of k; lift needs d.dim^2 entries");
        return rep;
    }
    for (size_t i = 0; i < dk; ++i)
        if (t.action_d[i].rows() != dd || t.action_d[i].cols() != dd || t.action_h[i].rows() != dh ||
            t.action_h[i].cols() != dh) {
            rep.add("shape", {(long)i}, "action matrix has wrong dimensions");
            return rep;
        }
    for (size_t i = 0; i < dd * dd; ++i)
        if (t.lift[i].size() != dh) {
            rep.add("shape", {(long)i}, "lift entry has wrong dimension");
            return rep;
        }

    auto eh = [&](size_t i) { Vec v(dh, Rat(0)); v[i] = 1; return v; };
    auto ed = [&](size_t i) { Vec v(dd, Rat(0)); v[i] = 1; return v; };
    auto ek = [&](size_t i) { Vec v(dk, Rat(0)); v[i] = 1; return v; };

    if (!(t.delta1 * t.delta2).is_zero()) rep.add("complex", {}, "delta1 . delta2 != 0");

    for (size_t i = 0; i < dk; ++i)
        for (size_t j = i + 1; j < dk; ++j) {
            if (t.act_d_of(t.k.bracket_basis(i, j)) != t.action_d[i] * t.action_d[j] - t.action_d[j] * t.action_d[i])
                rep.add("action_homomorphism_d", {(long)i, (long)j});
            if (t.act_h_of(t.k.bracket_basis(i, j)) != t.action_h[i] * t.action_h[j] - t.action_h[j] * t.action_h[i])
                rep.add("action_homomorphism_h", {(long)i, (long)j});
        }

    for (size_t a = 0; a < dk; ++a) {
        for (size_t i = 0; i < dd; ++i)
            for (size_t j = i + 1; j < dd; ++j)
                if (t.action_d[a].apply(t.d.bracket_basis(i, j)) !=
                    vec_add(t.d.bracket(t.action_d[a].apply(ed(i)), ed(j)),
                            t.d.bracket(ed(i), t.action_d[a].apply(ed(j)))))
                    rep.add("action_derivation_d", {(long)a, (long)i, (long)j});
        for (size_t i = 0; i < dh; ++i)
            for (size_t j = i + 1; j < dh; ++j)
                if (t.action_h[a].apply(t.h.bracket_basis(i, j)) !=
                    vec_add(t.h.bracket(t.action_h[a].apply(eh(i)), eh(j)),
                            t.h.bracket(eh(i), t.action_h[a].apply(eh(j)))))
                    rep.add("action_derivation_h", {(long)a, (long)i, (long)j});
    }

    // delta2(k.x) = k.delta2(x);  delta1(k.v) = [k, delta1 v]
    for (size_t a = 0; a < dk; ++a) {
        for (size_t i = 0; i < dh; ++i)
            if (t.delta2.apply(t.action_h[a].apply(eh(i))) != t.act_d(ek(a), t.delta2.col(i)))
                rep.add("equivariance_mid", {(long)a, (long)i});
        for (size_t i = 0; i < dd; ++i)
            if (t.delta1.apply(t.action_d[a].apply(ed(i))) != t.k.bracket(ek(a), t.delta1.col(i)))
                rep.add("equivariance_top", {(long)a, (long)i});
    }

    // [d1,d2] = delta2{d1,d2} + delta1(d1).d2
    for (size_t i = 0; i < dd; ++i)
        for (size_t j = 0; j < dd; ++j) {
            Vec rhs = vec_add(t.delta2.apply(t.lift[i * dd + j]), t.act_d(t.delta1.col(i), ed(j)));
            if (t.d.bracket_basis(i, j) != rhs) rep.add("peiffer_identity", {(long)i, (long)j});
        }

    // {delta2 x, delta2 y} = [x,y]
    for (size_t i = 0; i < dh; ++i)
        for (size_t j = 0; j < dh; ++j)
            if (t.lift_of(t.delta2.col(i), t.delta2.col(j)) != t.h.bracket_basis(i, j))
                rep.add("lift_on_image", {(long)i, (long)j});

    // {[d1,d2],d3} = delta1(d1).{d2,d3} - delta1(d2).{d1,d3} + {d1,[d2,d3]} - {d2,[d1,d3]}
    for (size_t i = 0; i < dd; ++i)
        for (size_t j = 0; j < dd; ++j)
            for (size_t l = 0; l < dd; ++l) {
                Vec lhs = t.lift_of(t.d.bracket_basis(i, j), ed(l));
                Vec rhs = t.act_h(t.delta1.col(i), t.lift[j * dd + l]);
                rhs = vec_sub(rhs, t.act_h(t.delta1.col(j), t.lift[i * dd + l]));
                rhs = vec_add(rhs, t.lift_of(ed(i), t.d.bracket_basis(j, l)));
                rhs = vec_sub(rhs, t.lift_of(ed(j), t.d.bracket_basis(i, l)));
                if (lhs != rhs) rep.add("lift_bracket_left", {(long)i, (long)j, (long)l});
            }

    // {d1,[d2,d3]} = {delta2{d1,d2},d3} - {delta2{d1,d3},d2}
    for (size_t i = 0; i < dd; ++i)
        for (size_t j = 0; j < dd; ++j)
            for (size_t l = 0; l < dd; ++l) {
                Vec lhs = t.lift_of(ed(i), t.d.bracket_basis(j, l));
                Vec rhs = vec_sub(t.lift_of(t.delta2.apply(t.lift[i * dd + j]), ed(l)),
                                  t.lift_of(t.delta2.apply(t.lift[i * dd + l]), ed(j)));
                if (lhs != rhs) rep.add("lift_bracket_right", {(long)i, (long)j, (long)l});
            }

    // {delta2 x, v} + {v, delta2 x} = -delta1(v).x
    for (size_t i = 0; i < dh; ++i)
        for (size_t j = 0; j < dd; ++j) {
            Vec lhs = vec_add(t.lift_of(t.delta2.col(i), ed(j)), t.lift_of(ed(j), t.delta2.col(i)));
            Vec rhs = vec_scale(Rat(-1), t.act_h(t.delta1.col(j), eh(i)));
            if (lhs != rhs) rep.add("lift_mixed", {(long)i, (long)j});
        }

    // k.{d1,d2} = {k.d1,d2} + {d1,k.d2}
    for (size_t a = 0; a < dk; ++a)
        for (size_t i = 0; i < dd; ++i)
            for (size_t j = 0; j < dd; ++j) {
                Vec lhs = t.act_h(ek(a), t.lift[i * dd + j]);
                Vec rhs = vec_add(t.lift_of(t.action_d[a].apply(ed(i)), ed(j)),
                                  t.lift_of(ed(i), t.action_d[a].apply(ed(j))));
                if (lhs != rhs) rep.add("lift_equivariance", {(long)a, (long)i, (long)j});
            }

    return rep;
}

}  // namespace simplie
