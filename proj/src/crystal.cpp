#include "mcrystal/crystal.hpp"
#include <json.hpp>
#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace mcrystal {

std::vector<int> all_ops(const CartanData& cd) {
    std::vector<int> ops;
    for (int i = cd.finite ? 1 : 0; i < cd.N; i++) ops.push_back(i);
    return ops;
}

std::vector<int> i0_ops(const CartanData& cd) {
    std::vector<int> ops;
    for (int i = 1; i < cd.N; i++) ops.push_back(i);
    return ops;
}

namespace {

int min_grade(const Monomial& m) {
    int g = std::numeric_limits<int>::max();
    for (const auto& t : m.u) g = std::min(g, t[1]);
    return g;
}

int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
}

struct BfsHooks {
    // called for each freshly inserted node; return false to stop the search after
    // finishing the current level
    std::function<bool(const Monomial&, int idx)> on_insert;
};

// period == 0: plain BFS.  period > 0: nodes are tau_{period}-canonical classes; on
// top of that each class records a "witness" shift t, meaning tau_{period*t}(rep)
// lies in the original component, and shift_gcd accumulates gcd of witness clashes.
// The tau_{period}-identification is genuine on the component iff shift_gcd == 1.
CrystalGraph bfs_closure(const CartanData& cd, const Monomial& seed,
                         const std::vector<int>& ops, size_t bound, bool parallel,
                         int period, long* shift_gcd = nullptr,
                         const BfsHooks* hooks = nullptr) {
    CrystalGraph g;
    g.type_name = cd.finite ? type_name(cd.type) + ":I0" : type_name(cd.type);
    const int g0 = (period && !seed.u.empty()) ? min_grade(seed) : 0;
    auto canon_k = [&](const Monomial& m) -> std::pair<Monomial, int> {
        if (!period || m.u.empty()) return {m, 0};
        int k = floor_div(g0 - min_grade(m) + period - 1, period);
        return {k ? tau_shift(m, k * period) : m, k};
    };
    g.seed = canon_k(seed).first;
    std::unordered_map<Monomial, int, MonomialHash> index;
    g.nodes.push_back(g.seed);
    index.emplace(g.seed, 0);
    std::vector<long> witness{0};
    long gcd_acc = 0;
    std::set<GraphEdge> edges;
    std::vector<int> frontier{0};
    bool stop = false;
    if (hooks && hooks->on_insert && !hooks->on_insert(g.seed, 0)) stop = true;

    while (!frontier.empty() && !stop) {
        const size_t tasks = frontier.size() * ops.size() * 2;
        std::vector<std::optional<Monomial>> child(tasks);
        auto compute = [&](size_t t) {
            size_t node_k = t / (ops.size() * 2);
            size_t rest = t % (ops.size() * 2);
            int j = ops[rest / 2];
            const Monomial& m = g.nodes[frontier[node_k]];
            child[t] = (rest % 2 == 0) ? lower(cd, m, j) : raise(cd, m, j);
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (long long t = 0; t < (long long)tasks; t++) compute((size_t)t);
        } else {
            for (size_t t = 0; t < tasks; t++) compute(t);
        }
        std::vector<int> next;
        for (size_t t = 0; t < tasks; t++) {
            if (!child[t]) continue;
            size_t node_k = t / (ops.size() * 2);
            size_t rest = t % (ops.size() * 2);
            int j = ops[rest / 2];
            bool is_lower = rest % 2 == 0;
            auto [c, k] = canon_k(*child[t]);
            int src = frontier[node_k];
            long t_child = witness[src] - k;
            auto [it, fresh] = index.emplace(std::move(c), (int)g.nodes.size());
            if (fresh) {
                g.nodes.push_back(it->first);
                witness.push_back(t_child);
                if (g.nodes.size() > bound) {
                    g.truncated = true;
                    g.edges.assign(edges.begin(), edges.end());
                    throw BoundExceeded{g};
                }
                next.push_back(it->second);
                if (hooks && hooks->on_insert && !hooks->on_insert(it->first, it->second))
                    stop = true;
            } else {
                long d = std::abs(t_child - witness[it->second]);
                if (d) gcd_acc = std::gcd(gcd_acc, d);
            }
            edges.insert(is_lower ? GraphEdge{src, j, it->second}
                                  : GraphEdge{it->second, j, src});
        }
        frontier = std::move(next);
    }
    g.edges.assign(edges.begin(), edges.end());
    if (shift_gcd) *shift_gcd = gcd_acc;
    return g;
}

} // namespace

Monomial tau_canonical(const Monomial& m, int period, int g0) {
    if (m.u.empty()) return m;
    int g = min_grade(m);
    int k = floor_div(g0 - g + period - 1, period);
    return k == 0 ? m : tau_shift(m, k * period);
}

CrystalGraph generate_component(const CartanData& cd, const Monomial& seed,
                                const std::vector<int>& ops, size_t bound, bool parallel) {
    CrystalGraph g = bfs_closure(cd, seed, ops, bound, parallel, 0);
    g.mode = cd.finite ? GraphMode::FiniteSubset : GraphMode::FullBounded;
    return g;
}

CrystalGraph generate_quotient(const CartanData& cd, const Monomial& seed, int period,
                               size_t bound, bool parallel) {
    if (period <= 0 || period % 2 != 0) throw OutOfRange("period must be a positive even integer");
    long shift_gcd = 0;
    CrystalGraph g = bfs_closure(cd, seed, all_ops(cd), bound, parallel, period, &shift_gcd);
    g.mode = GraphMode::TauQuotient;
    g.period = period;
    // the classes must actually be realized on the component: the witness shifts
    // have to generate all of Z, otherwise we only saw tau_{period * gcd}
    if (shift_gcd != 1)
        throw NotPeriodic("component is not tau_" + std::to_string(period) +
                          "-stable (observed shift gcd " + std::to_string(shift_gcd) + ")");
    return g;
}

bool is_highest(const CartanData& cd, const Monomial& m, const std::vector<int>& ops) {
    for (int j : ops)
        if (eps_i(m, j) != 0) return false;
    return true;
}

std::vector<ComponentReport> decompose_I0(const CartanData& cd, const CrystalGraph& g) {
    const int n = (int)g.nodes.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; i++) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges)
        if (e.label != 0) parent[find(e.src)] = find(e.dst);
    std::vector<int> roots;
    std::unordered_map<int, int> comp_of_root;
    std::vector<ComponentReport> out;
    for (int i = 0; i < n; i++) {
        int r = find(i);
        auto it = comp_of_root.find(r);
        if (it == comp_of_root.end()) {
            it = comp_of_root.emplace(r, (int)out.size()).first;
            out.emplace_back();
        }
        out[it->second].members.push_back(i);
        out[it->second].size++;
    }
    auto ops = i0_ops(cd);
    for (auto& c : out) {
        int high = -1;
        for (int idx : c.members) {
            if (is_highest(cd, g.nodes[idx], ops)) {
                if (high != -1)
                    throw MultipleHighest("two e-null nodes in one I_0 component");
                high = idx;
            }
        }
        if (high == -1) throw MultipleHighest("component without an e-null node");
        c.highest = g.nodes[high];
        c.label.assign(cd.N, 0);
        for (const auto& t : c.highest.u) c.label[t[0]] += t[2];
        c.label.erase(c.label.begin()); // I_0 weight: nodes 1..n
    }
    // deterministic component order: by discovery index of the highest node
    std::sort(out.begin(), out.end(), [&](const ComponentReport& x, const ComponentReport& y) {
        return x.members.front() < y.members.front();
    });
    return out;
}

std::optional<std::pair<int, int>> detect_z_period(const CartanData& cd, const Monomial& seed,
                                                   int ell, size_t max_nodes) {
    if (seed.u.empty()) return std::nullopt;
    const int d_l = d_ell(cd, ell);
    const int g0 = min_grade(seed);
    std::vector<std::pair<int, int>> found; // (2p, N)
    BfsHooks hooks;
    hooks.on_insert = [&](const Monomial& m, int) {
        if (m.u.size() != seed.u.size() || m.u.empty()) return true;
        int d = min_grade(m) - g0;
        if (d == 0) return true;
        if (!(m == tau_shift(seed, d))) return true;
        auto dm = delta_multiple(cd, m);
        if (!dm) return true;
        int num = d > 0 ? -*dm : *dm;
        if (num % d_l != 0) return true;
        found.emplace_back(std::abs(d), num / d_l);
        return false; // finish the level, then stop
    };
    try {
        bfs_closure(cd, seed, all_ops(cd), max_nodes, true, 0, nullptr, &hooks);
    } catch (const BoundExceeded&) {
        // fell over the node budget; report whatever was found
    }
    if (found.empty()) return std::nullopt;
    return *std::min_element(found.begin(), found.end());
}

std::string export_graph(const CrystalGraph& g, const std::string& format) {
    if (format == "dot") {
        std::ostringstream out;
        out << "digraph crystal {\n";
        out << "  rankdir=TB;\n";
        for (size_t i = 0; i < g.nodes.size(); i++)
            out << "  n" << i << " [label=\"" << format_monomial(g.nodes[i]) << "\"];\n";
        for (const auto& e : g.edges)
            out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label << "\"];\n";
        out << "}\n";
        return out.str();
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["type"] = g.type_name;
        j["seed"] = format_monomial(g.seed);
        if (g.period)
            j["period"] = *g.period;
        else
            j["period"] = nullptr;
        if (g.truncated) j["truncated"] = true;
        auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
        for (const auto& m : g.nodes) nodes.push_back(format_monomial(m));
        auto& edges = j["edges"] = nlohmann::ordered_json::array();
        for (const auto& e : g.edges) edges.push_back({e.src, e.label, e.dst});
        // structural I_0 components: highest = no incoming edge with label != 0
        std::vector<int> parent(g.nodes.size());
        for (size_t i = 0; i < parent.size(); i++) parent[i] = (int)i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<bool> has_in(g.nodes.size(), false);
        for (const auto& e : g.edges)
            if (e.label != 0) {
                parent[find(e.src)] = find(e.dst);
                has_in[e.dst] = true;
            }
        std::map<int, std::vector<int>> comps;
        for (size_t i = 0; i < g.nodes.size(); i++) comps[find((int)i)].push_back((int)i);
        auto& comp_arr = j["components"] = nlohmann::ordered_json::array();
        std::vector<std::pair<int, std::vector<int>>> ordered(comps.begin(), comps.end());
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });
        for (const auto& [root, members] : ordered) {
            int high = members.front();
            for (int idx : members)
                if (!has_in[idx]) high = idx;
            comp_arr.push_back({{"highest", high}, {"members", members}});
        }
        return j.dump(2) + "\n";
    }
    throw OutOfRange("unknown export format: " + format);
}

} // namespace mcrystal
