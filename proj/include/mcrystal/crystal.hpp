#pragma once
#include "mcrystal/monomial.hpp"
#include <optional>
#include <string>
#include <vector>

namespace mcrystal {

struct GraphEdge {
    int src;
    int label;
    int dst;
    bool operator<(const GraphEdge& o) const {
        if (src != o.src) return src < o.src;
        if (label != o.label) return label < o.label;
        return dst < o.dst;
    }
    bool operator==(const GraphEdge& o) const {
        return src == o.src && label == o.label && dst == o.dst;
    }
};

enum class GraphMode { FullBounded, TauQuotient, FiniteSubset };

struct CrystalGraph {
    std::string type_name;
    std::vector<Monomial> nodes; // discovery order; edges are f-edges only
    std::vector<GraphEdge> edges;
    Monomial seed;
    GraphMode mode = GraphMode::FullBounded;
    std::optional<int> period;
    bool truncated = false;
};

struct BoundExceeded {
    CrystalGraph partial;
};

struct NotPeriodic : std::runtime_error { using std::runtime_error::runtime_error; };
struct MultipleHighest : std::runtime_error { using std::runtime_error::runtime_error; };

// BFS closure of seed under f_j/e_j for j in ops.  Deterministic discovery order.
// parallel=true expands each frontier with OpenMP but merges in serial order, so the
// result is identical to the serial reference.
CrystalGraph generate_component(const CartanData& cd, const Monomial& seed,
                                const std::vector<int>& ops, size_t bound,
                                bool parallel = true);

// Quotient by tau_{2p}: nodes are canonical class representatives.  Verifies that
// the operators are compatible with the identification (NotPeriodic otherwise).
CrystalGraph generate_quotient(const CartanData& cd, const Monomial& seed, int period,
                               size_t bound, bool parallel = true);

// Representative normal form used by generate_quotient: shift by multiples of 2p so
// the minimal support grade lies in [g0, g0 + 2p).
Monomial tau_canonical(const Monomial& m, int period, int g0);

struct ComponentReport {
    Monomial highest;
    size_t size = 0;
    std::vector<int> label; // u_i(highest) for i = 1..n
    std::vector<int> members;
};

std::vector<ComponentReport> decompose_I0(const CartanData& cd, const CrystalGraph& g);

bool is_highest(const CartanData& cd, const Monomial& m, const std::vector<int>& ops);

// Smallest 2p > 0 such that tau_{2p}(seed) lies in the component, together with the
// power N with tau_{2p} = z_ell^N.  Null if not found within max_nodes.
std::optional<std::pair<int, int>> detect_z_period(const CartanData& cd, const Monomial& seed,
                                                   int ell, size_t max_nodes);

std::string export_graph(const CrystalGraph& g, const std::string& format);

std::vector<int> all_ops(const CartanData& cd);
std::vector<int> i0_ops(const CartanData& cd);

} // namespace mcrystal
