// times crystal closure with the OpenMP frontier expansion against the serial
// reference and checks they agree
#include "mcrystal/crystal.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace mcrystal;

static double run(const CartanData& cd, const Monomial& seed, const std::vector<int>& ops,
                  bool parallel, size_t* nodes) {
    auto t0 = std::chrono::steady_clock::now();
    CrystalGraph g = generate_component(cd, seed, ops, 5000000, parallel);
    auto t1 = std::chrono::steady_clock::now();
    *nodes = g.nodes.size();
    return std::chrono::duration<double>(t1 - t0).count();
}

int main() {
    struct Case {
        const char* label;
        char family;
        int rank;
        int node;
        int power;
    };
    Case cases[] = {
        {"D6 2w3", 'D', 6, 3, 2},
        {"E6 2w4", 'E', 6, 4, 2},
        {"C6 2w4", 'C', 6, 4, 2},
        {"B6 2w5", 'B', 6, 5, 2},
    };
    printf("%-12s %10s %12s %12s %8s\n", "case", "nodes", "serial[s]", "parallel[s]", "speedup");
    int bad = 0;
    for (const auto& k : cases) {
        CartanData cd = build_finite(k.family, k.rank);
        Monomial seed = make_monomial(cd.N);
        mul_var(seed, k.node, 0, k.power);
        size_t ns = 0, np = 0;
        double ts = run(cd, seed, i0_ops(cd), false, &ns);
        double tp = run(cd, seed, i0_ops(cd), true, &np);
        if (ns != np) {
            printf("%-12s MISMATCH serial=%zu parallel=%zu\n", k.label, ns, np);
            bad = 1;
            continue;
        }
        printf("%-12s %10zu %12.3f %12.3f %7.2fx\n", k.label, ns, ts, tp, ts / tp);
    }
    return bad;
}
