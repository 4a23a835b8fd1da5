// Walk a crossed module of Lie algebras end to end: generate its simplicial
// tower, extract the normalized complex, assemble the graded bracket tables,
// and print everything alongside the full axiom check.
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
    // Base d = span{E, F} with [E, F] = F; top h = span{X} abelian.
    // Boundary sends X to 3F; E acts as the identity on X, F acts by zero.
    CrossedModule cm;
    Vec cd(8, Rat(0));
    cd[(0 * 2 + 1) * 2 + 1] = 1;
    cd[(1 * 2 + 0) * 2 + 1] = -1;
    cm.d = LieAlgebra(2, cd);
    cm.h = LieAlgebra::abelian(1);
    cm.delta = Mat(2, 1);
    cm.delta(1, 0) = 3;
    cm.action = {Mat(1, 1, {Rat(1)}), Mat(1, 1, {Rat(0)})};

    SimplicialLieAlgebra S = from_crossed_module(cm, 2);
    std::cout << "tower levels:";
    for (size_t n = 0; n <= S.truncation(); ++n) std::cout << " " << S.dim(n);
    std::cout << "\n";

    DglaBuild B = build_dgla(S);
    const Dgla& G = B.dgla;
    std::cout << "chain dims:";
    for (size_t d : G.dims) std::cout << " " << d;
    std::cout << "\nboundary of the degree-1 generator: ";
    print_vec(G.d[1].col(0));
    std::cout << "\n";

    const char* names0[] = {"E", "F"};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            std::cout << "[" << names0[i] << ", " << names0[j] << "] = ";
            print_vec(G.bracket[0][0][i * 2 + j]);
            std::cout << "\n";
        }
    for (size_t i = 0; i < 2; ++i) {
        std::cout << "[" << names0[i] << ", X] = ";
        print_vec(G.bracket[0][1][i]);
        std::cout << "   [X, " << names0[i] << "] = ";
        print_vec(G.bracket[1][0][i]);
        std::cout << "\n";
    }

    Report rep = verify_dgla(G);
    std::cout << "axiom check: " << (rep.ok() ? "ok" : "FAILED") << "\n";
    if (!rep.ok()) std::cout << rep.to_string();
    return rep.ok() ? 0 : 1;
}
