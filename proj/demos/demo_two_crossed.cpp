// A three-term example where the degree-one self-bracket is forced by the
// pairing lift rather than by any underlying bracket: all three constituent
// algebras are abelian lines K, D, X with zero boundaries and the single
// lift value {D, D} = X. The assembled structure puts [D, D] = -2X.
#include <iostream>

#include "simplie/dgla/build.hpp"
#include "simplie/hypercrossed/nerve.hpp"

using namespace simplie;

static void print_vec(const Vec& v) {
    std::cout << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << rational_to_string(v[i]);
    }
    std::cout << ")";
}

int main() {
    TwoCrossedModule t;
    t.h = LieAlgebra::abelian(1);
    t.d = LieAlgebra::abelian(1);
    t.k = LieAlgebra::abelian(1);
    t.delta2 = Mat(1, 1);
    t.delta1 = Mat(1, 1);
    t.action_d = {Mat(1, 1)};
    t.action_h = {Mat(1, 1)};
    t.lift = {Vec{Rat(1)}};

    SimplicialLieAlgebra S = from_two_crossed_module(t, 3);
    std::cout << "tower levels:";
    for (size_t n = 0; n <= S.truncation(); ++n) std::cout << " " << S.dim(n);
    std::cout << "\n";

    DglaBuild B = build_dgla(S);
    const Dgla& G = B.dgla;
    std::cout << "chain dims:";
    for (size_t d : G.dims) std::cout << " " << d;
    std::cout << "\n";

    std::cout << "[K, D] = ";
    print_vec(G.bracket[0][1][0]);
    std::cout << "   [K, X] = ";
    print_vec(G.bracket[0][2][0]);
    std::cout << "\n[D, D] = ";
    print_vec(G.bracket[1][1][0]);
    std::cout << "   (nonzero despite every constituent bracket vanishing)\n";

    Report rep = verify_dgla(G);
    std::cout << "axiom check: " << (rep.ok() ? "ok" : "FAILED") << "\n";
    if (!rep.ok()) std::cout << rep.to_string();
    return rep.ok() ? 0 : 1;
}
