#pragma once

#include "simplie/hypercrossed/crossed_module.hpp"
#include "simplie/hypercrossed/two_crossed_module.hpp"

namespace simplie::fixtures {

// d = span{E,F} with [E,F] = F; h = span{X} abelian; delta X = 3F;
// E.X = X, F.X = 0.
inline CrossedModule cm_golden() {
    CrossedModule cm;
    Vec cd(8, Rat(0));
    cd[(0 * 2 + 1) * 2 + 1] = 1;
    cd[(1 * 2 + 0) * 2 + 1] = -1;
    cm.d = LieAlgebra(2, cd);
    cm.h = LieAlgebra::abelian(1);
    cm.delta = Mat(2, 1);
    cm.delta(1, 0) = 3;
    cm.action = {Mat(1, 1, {Rat(1)}), Mat(1, 1, {Rat(0)})};
    return cm;
}

// One-parameter family: everything abelian with zero maps and zero actions
// except the lift {D,D} = nu X.
inline TwoCrossedModule tcm_zero_lift(const Rat& nu) {
    TwoCrossedModule t;
    t.h = LieAlgebra::abelian(1);
    t.d = LieAlgebra::abelian(1);
    t.k = LieAlgebra::abelian(1);
    t.delta2 = Mat(1, 1);
    t.delta1 = Mat(1, 1);
    t.action_d = {Mat(1, 1)};
    t.action_h = {Mat(1, 1)};
    t.lift = {Vec{nu}};
    return t;
}

// K.D = D, K.X = 2X, {D,D} = nu X, both boundaries zero.
inline TwoCrossedModule tcm_weighted(const Rat& nu) {
    TwoCrossedModule t = tcm_zero_lift(nu);
    t.action_d = {Mat(1, 1, {Rat(1)})};
    t.action_h = {Mat(1, 1, {Rat(2)})};
    return t;
}

// delta2 X = mu D with K acting as the identity on both D and X; zero lift.
inline TwoCrossedModule tcm_boundary(const Rat& mu) {
    TwoCrossedModule t = tcm_zero_lift(Rat(0));
    t.delta2 = Mat(1, 1, {mu});
    t.action_d = {Mat(1, 1, {Rat(1)})};
    t.action_h = {Mat(1, 1, {Rat(1)})};
    return t;
}

// delta1 D = kappa K with zero actions and lift {D,D} = nu X.
inline TwoCrossedModule tcm_top_boundary(const Rat& kappa, const Rat& nu) {
    TwoCrossedModule t = tcm_zero_lift(nu);
    t.delta1 = Mat(1, 1, {kappa});
    return t;
}

}  // namespace simplie::fixtures
