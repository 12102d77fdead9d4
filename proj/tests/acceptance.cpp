// end-to-end acceptance checks; one pass/fail line per criterion
#include "mcrystal/crystal.hpp"
#include "mcrystal/embed.hpp"
#include "mcrystal/tableaux.hpp"
#include "mcrystal/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace mcrystal;
using boost::multiprecision::cpp_int;

namespace {

Monomial pm(const CartanData& cd, const std::string& s) { return parse_monomial(s, cd.N); }

struct Criterion {
    std::string fail_detail;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (cond || !ok) return;
        ok = false;
        fail_detail = what;
    }
};

// --- 1: type A vector crystal quotients ---------------------------------------

void criterion_vector_a(Criterion& c) {
    for (int n = 2; n <= 8; n += 2) {
        try {
            build_cartan(parse_type("A1~" + std::to_string(n)));
            c.expect(false, "A1~" + std::to_string(n) + " accepted");
        } catch (const UnsupportedType&) {
        }
    }
    for (int n = 1; n <= 7; n += 2) {
        CartanData cd = build_cartan(parse_type("A1~" + std::to_string(n)));
        std::string tag = "A1~" + std::to_string(n) + " ";
        CrystalGraph g = generate_quotient(cd, pm(cd, "1_0 0_1^-1"), n + 1, 10000);
        c.expect(g.nodes.size() == (size_t)n + 1, tag + "node count");
        c.expect(g.edges.size() == (size_t)n + 1, tag + "edge count");
        // the cycle visits labels 1,...,n,0 in order and returns to the seed
        std::map<std::pair<int, int>, int> out;
        for (const auto& e : g.edges) out[{e.src, e.label}] = e.dst;
        int cur = 0;
        bool walk = true;
        for (int i = 1; i <= n && walk; i++) {
            auto it = out.find({cur, i});
            if (it == out.end()) walk = false;
            else cur = it->second;
        }
        auto back = out.find({cur, 0});
        c.expect(walk && back != out.end() && back->second == 0, tag + "cycle");
        auto z = detect_z_period(cd, pm(cd, "1_0 0_1^-1"), 1, 100000);
        c.expect(z && *z == std::pair<int, int>{n + 1, -1}, tag + "z relation");
    }
}

// --- 2: type D vector crystal quotients ---------------------------------------

void criterion_vector_d(Criterion& c) {
    for (int n = 4; n <= 7; n++) {
        CartanData cd = build_cartan(parse_type("D1~" + std::to_string(n)));
        std::string tag = "D1~" + std::to_string(n) + " ";
        CrystalGraph g = generate_quotient(cd, pm(cd, "1_0 0_2^-1"), 2 * n - 4, 10000);
        c.expect(g.nodes.size() == (size_t)(2 * n), tag + "node count");
        auto comps = decompose_I0(cd, g);
        c.expect(comps.size() == 1 && comps[0].size == (size_t)(2 * n), tag + "one component");
        // fork: one node with two outgoing I_0 arrows labeled n-1 and n, whose two
        // targets rejoin at a common node through the crossed labels
        std::map<int, std::vector<std::pair<int, int>>> out; // src -> (label, dst)
        for (const auto& e : g.edges)
            if (e.label != 0) out[e.src].push_back({e.label, e.dst});
        int forks = 0;
        bool fork_ok = false;
        for (auto& [src, arr] : out) {
            if (arr.size() != 2) continue;
            forks++;
            std::sort(arr.begin(), arr.end());
            if (arr[0].first != n - 1 || arr[1].first != n) continue;
            int via_n1 = arr[0].second, via_n = arr[1].second;
            auto join = [&](int node, int label) -> int {
                for (auto& [l, d] : out[node])
                    if (l == label) return d;
                return -1;
            };
            fork_ok = join(via_n1, n) >= 0 && join(via_n1, n) == join(via_n, n - 1);
        }
        c.expect(forks == 1 && fork_ok, tag + "fork");
        for (int p : {0, 2, -4}) {
            auto f1 = lower(cd, affine_box(cd, 'D', -2, p), 0);
            auto f2 = lower(cd, affine_box(cd, 'D', -1, p), 0);
            c.expect(f1 && *f1 == affine_box(cd, 'D', 1, p + 2 * n - 4), tag + "f_0 on bar2");
            c.expect(f2 && *f2 == affine_box(cd, 'D', 2, p + 2 * n - 4), tag + "f_0 on bar1");
        }
    }
}

// --- 3: exceptional fixture corpus --------------------------------------------

void criterion_fixtures(Criterion& c) {
    auto files = list_fixtures(fixture_dir(MCRYSTAL_DATA_DIR "/fixtures"));
    c.expect(files.size() >= 15, "fixture corpus incomplete");
    for (const auto& path : files) {
        Fixture f = load_fixture(path);
        FixtureReport rep = check_fixture(f);
        for (const auto& [what, pass] : rep.assertions)
            c.expect(pass, f.name + ": " + what);
        if (f.name == "f4_node2") {
            // the two components given by size only complement the lists to 1598
            size_t unlisted = 0;
            for (const auto& comp : f.components)
                if (comp.monomials.empty()) unlisted += comp.size;
            c.expect(unlisted == 1598, "f4_node2 complement total");
        }
    }
}

// --- 4: tau / z relations ------------------------------------------------------

void criterion_z_relations(Criterion& c) {
    struct Case {
        std::string type, seed;
        int ell;
        int two_p, N; // expected tau_{two_p} = z_ell^N
        size_t cap = 400000;
    };
    std::vector<Case> cases;
    auto add = [&](std::string t, std::string s, int ell, int P, int N, size_t cap = 400000) {
        cases.push_back({std::move(t), std::move(s), ell, P, N, cap});
    };
    auto split_seed = [](int ell) {
        return std::to_string(ell) + "_0 0_" + std::to_string(ell - 1) + "^-1 0_" +
               std::to_string(ell + 1) + "^-1";
    };
    for (int n = 4; n <= 6; n++)
        for (int ell = 2; ell <= n - 2; ell++)
            add("D1~" + std::to_string(n), split_seed(ell), ell, 2 * n - 4, -ell);
    for (int n = 2; n <= 5; n++) {
        std::string t = "C1~" + std::to_string(n);
        for (int ell = 1; ell <= n - 1; ell++)
            add(t, std::to_string(ell) + "_0 0_" + std::to_string(ell) + "^-1", ell, 2 * n, -ell);
        add(t, std::to_string(n) + "_0 0_" + std::to_string(n) + "^-1", n, 2, -1);
    }
    for (int n = 3; n <= 5; n++) // z_n = tau_{-4}
        add("B1~" + std::to_string(n), std::to_string(n) + "_0 0_" + std::to_string(n - 1) + "^-1",
            n, 4, -1);
    for (int n = 1; n <= 4; n++) {
        std::string t = "A2~" + std::to_string(2 * n);
        for (int ell = 1; ell <= n - 1; ell++)
            add(t, std::to_string(ell) + "_0 0_" + std::to_string(ell) + "^-2", ell, 2 * n, -ell);
        add(t, std::to_string(n) + "_0 0_" + std::to_string(n) + "^-2", n, 2, -1);
    }
    for (int n = 3; n <= 4; n++) // z_n = tau_{-4} (weight d_n delta with d_n = 2)
        add("A2~" + std::to_string(2 * n - 1),
            std::to_string(n) + "_0 0_" + std::to_string(n - 1) + "^-2", n, 4, -1);
    for (int n = 2; n <= 4; n++) // z_n = tau_{-2}
        add("D2~" + std::to_string(n + 1), std::to_string(n) + "_0 0_" + std::to_string(n) + "^-1",
            n, 2, -1);
    add("E1~6", "3_0 0_2^-1 0_4^-1 0_6^-1", 3, 2, -1, 800000);
    add("F1~4", "1_0 0_1^-1 0_5^-1", 1, 4, -1);
    add("F1~4", "2_0 0_2^-1 0_4^-1 0_6^-1", 2, 2, -1);
    add("F1~4", "3_0 0_3^-1 0_5^-1", 3, 6, -2);
    add("F1~4", "4_0 0_4^-1", 4, 6, -1);

    for (const auto& k : cases) {
        CartanData cd = build_cartan(parse_type(k.type));
        auto r = detect_z_period(cd, pm(cd, k.seed), k.ell, k.cap);
        std::string tag = k.type + " ell=" + std::to_string(k.ell);
        if (!r) {
            c.expect(false, tag + " no period found");
            continue;
        }
        // detect returns the smallest period; the stated relation must be the
        // corresponding power of it
        auto [p2, N] = *r;
        c.expect(k.two_p % p2 == 0 && N * (k.two_p / p2) == k.N, tag + " relation mismatch");
    }
}

// --- 5 & 6: tableaux grids -----------------------------------------------------

template <typename Fn>
void grid_walk(Fn&& fn) {
    for (int n = 4; n <= 6; n++)
        for (int ell = 1; ell <= n - 2; ell++)
            for (int h = 0; h <= ell; h++)
                for (int r = 0; r <= n - ell - 1; r++) fn('D', n, ell, h, r, n - ell - 1);
    for (int n = 3; n <= 6; n++)
        for (int ell = 1; ell <= n - 1; ell++)
            for (int h = 0; h <= ell; h++)
                for (int r = 0; r <= n - ell - 1; r++) fn('B', n, ell, h, r, n - ell - 1);
    for (int n = 2; n <= 6; n++)
        for (int ell = 1; ell <= n - 1; ell++)
            for (int h = 0; h <= ell; h++)
                for (int r = 0; r <= n - ell; r++) fn('C', n, ell, h, r, n - ell);
}

void criterion_bijection(Criterion& c) {
    grid_walk([&](char fam, int n, int ell, int h, int r, int) {
        BijectionReport rep = oracle_bijection(fam, n, ell, h, r);
        std::ostringstream tag;
        tag << fam << " n=" << n << " l=" << ell << " h=" << h << " r=" << r;
        c.expect(rep.ok, tag.str() + ": " + rep.detail);
    });
}

void criterion_correction_maps(Criterion& c) {
    grid_walk([&](char fam, int n, int ell, int h, int r, int rmax) {
        CartanData cd = build_finite(fam, n);
        std::ostringstream pre;
        pre << fam << " n=" << n << " l=" << ell << " h=" << h << " r=" << r << " ";
        std::string tag = pre.str();
        auto ts = enumerate_tableaux(fam, n, ell, h, r);
        auto commutes = [&](const Tableau& T, const Tableau& U, auto&& map,
                            const std::string& what) {
            for (int k = 1; k <= n; k++) {
                auto a = tableau_lower(cd, fam, T, k);
                auto b = tableau_lower(cd, fam, U, k);
                c.expect((bool)a == (bool)b, tag + what + " nullity at k=" + std::to_string(k));
                if (a && b) c.expect(map(*a) == *b, tag + what + " at k=" + std::to_string(k));
            }
        };
        for (const auto& T : ts) {
            if (r < rmax) {
                Tableau U = sigma(fam, n, T);
                c.expect(U.r == r + 1 && check_admissible(fam, n, U).ok, tag + "sigma image");
                c.expect(sigma_prime(fam, n, U) == T, tag + "sigma round trip");
                commutes(T, U, [&](const Tableau& V) { return sigma(fam, n, V); }, "sigma");
            }
            if (h < ell) {
                Tableau U = tau_lhr(fam, n, T);
                c.expect(U.h == h + 1 && check_admissible(fam, n, U).ok, tag + "tau image");
                commutes(T, U, [&](const Tableau& V) { return tau_lhr(fam, n, V); }, "tau");
            }
        }
        if (h < ell && !ts.empty()) {
            // the highest tableau goes to the highest tableau of the wider split
            Tableau hi;
            hi.h = h;
            hi.r = r;
            for (int a = 1; a <= ell; a++) hi.entries.push_back(a);
            Tableau want = hi;
            want.h = h + 1;
            c.expect(tau_lhr(fam, n, hi) == want, tag + "tau highest");
        }
    });
}

// --- 7: strict embedding --------------------------------------------------------

void criterion_embedding(Criterion& c) {
    struct Case { const char* type; int ell; };
    for (Case k : {Case{"A1~3", 1}, Case{"D1~4", 2}, Case{"G1~2", 2}}) {
        CartanData cd = build_cartan(parse_type(k.type));
        Shift sh = canonical_shift(cd);
        EmbedReport rep = verify_strict(cd, fundamental_seed(cd, k.ell, sh), sh, 5);
        std::string tag(k.type);
        c.expect(rep.ok() && rep.nodes_checked > 1,
                 tag + (rep.violations.empty() ? " too small" : ": " + rep.violations.front()));
    }
}

// --- 8: dimension oracle ---------------------------------------------------------

void criterion_dimensions(Criterion& c) {
    struct Fam { char f; int lo, hi; };
    for (Fam fam : {Fam{'A', 1, 6}, Fam{'B', 2, 6}, Fam{'C', 2, 6}, Fam{'D', 4, 6},
                    Fam{'E', 6, 6}, Fam{'F', 4, 4}, Fam{'G', 2, 2}}) {
        for (int n = fam.lo; n <= fam.hi; n++) {
            CartanData cd = build_finite(fam.f, n);
            for (int node = 1; node <= n; node++) {
                Monomial seed = make_monomial(cd.N);
                mul_var(seed, node, 0, 1);
                CrystalGraph g = generate_component(cd, seed, i0_ops(cd), 1000000);
                std::vector<int> lam(cd.N, 0);
                lam[node] = 1;
                std::ostringstream tag;
                tag << fam.f << n << " node " << node;
                c.expect(cpp_int(g.nodes.size()) == weyl_dim(cd, lam), tag.str());
            }
        }
    }
    // type D quotients decompose as sum of fundamental dimensions with steps of 2
    for (int n = 4; n <= 6; n++) {
        CartanData cd = build_cartan(parse_type("D1~" + std::to_string(n)));
        CartanData fin = build_finite('D', n);
        for (int ell = 2; ell <= n - 2; ell++) {
            Monomial seed = pm(cd, std::to_string(ell) + "_0 0_" + std::to_string(ell - 1) +
                                       "^-1 0_" + std::to_string(ell + 1) + "^-1");
            CrystalGraph g = generate_quotient(cd, seed, 2 * n - 4, 1000000);
            cpp_int want = 0;
            for (int k = 0; ell - 2 * k >= 0; k++) {
                if (ell - 2 * k == 0) { want += 1; continue; }
                std::vector<int> lam(fin.N, 0);
                lam[ell - 2 * k] = 1;
                want += weyl_dim(fin, lam);
            }
            std::ostringstream tag;
            tag << "D1~" << n << " l=" << ell;
            c.expect(cpp_int(g.nodes.size()) == ell * want, tag.str() + " quotient size");
            c.expect(decompose_I0(cd, g).size() == (size_t)(ell * (ell / 2 + 1)),
                     tag.str() + " component count");
        }
    }
}

// --- 9: operator properties on random monomials ----------------------------------

void criterion_properties(Criterion& c) {
    const char* types[] = {"A1~3", "B1~3", "C1~2", "D1~4", "A2~4",  "A2dag~4", "A2~5",
                           "D2~3", "E1~6", "F1~4", "G1~2", "E2~6", "D3~4"};
    std::mt19937 rng(20240811);
    for (const char* tname : types) {
        CartanData cd = build_cartan(parse_type(tname));
        std::string tag = std::string(tname) + " ";
        for (int it = 0; it < 10000; it++) {
            Monomial m = make_monomial(cd.N);
            int factors = 1 + (int)(rng() % 4);
            for (int f = 0; f < factors; f++) {
                int i = (int)(rng() % cd.N);
                int l = cd.s[i] + 2 * ((int)(rng() % 7) - 3);
                int e = (int)(rng() % 4) - 2;
                if (e >= 0) e++;
                mul_var(m, i, l, e);
            }
            int pc = parity_class(cd, m);
            for (int i = 0; i < cd.N; i++) {
                int phi = phi_i(m, i), eps = eps_i(m, i);
                auto down = lower(cd, m, i);
                c.expect((bool)down == (phi > 0), tag + "f defined iff phi > 0");
                if (down) {
                    c.expect(phi_i(*down, i) == phi - 1, tag + "phi decrement");
                    c.expect(eps_i(*down, i) == eps + 1, tag + "eps increment");
                    c.expect(parity_class(cd, *down) == pc, tag + "parity under f");
                    c.expect(down->ledger[i] == m.ledger[i] + 1, tag + "ledger under f");
                    auto back = raise(cd, *down, i);
                    c.expect(back && *back == m && back->ledger == m.ledger,
                             tag + "e undoes f");
                    auto shifted = lower(cd, tau_shift(m, 2), i);
                    c.expect(shifted && *shifted == tau_shift(*down, 2),
                             tag + "tau equivariance of f");
                } else {
                    c.expect(!lower(cd, tau_shift(m, 2), i), tag + "tau equivariance of null f");
                }
                auto up = raise(cd, m, i);
                c.expect((bool)up == (eps > 0), tag + "e defined iff eps > 0");
                if (up) {
                    c.expect(eps_i(*up, i) == eps - 1, tag + "eps decrement");
                    c.expect(phi_i(*up, i) == phi + 1, tag + "phi increment");
                    c.expect(parity_class(cd, *up) == pc, tag + "parity under e");
                    c.expect(up->ledger[i] == m.ledger[i] - 1, tag + "ledger under e");
                    auto back = lower(cd, *up, i);
                    c.expect(back && *back == m && back->ledger == m.ledger,
                             tag + "f undoes e");
                }
            }
        }
    }
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        void (*fn)(Criterion&);
    };
    Entry entries[] = {
        {"1 type A vector crystal quotients", criterion_vector_a},
        {"2 type D vector crystal quotients", criterion_vector_d},
        {"3 exceptional fixture corpus", criterion_fixtures},
        {"4 tau/z relations", criterion_z_relations},
        {"5 tableaux/BFS bijection grid", criterion_bijection},
        {"6 correction map properties", criterion_correction_maps},
        {"7 strict embedding depth-5 balls", criterion_embedding},
        {"8 dimension oracle consistency", criterion_dimensions},
        {"9 operator property suite", criterion_properties},
    };
    int failed = 0;
    for (const auto& e : entries) {
        Criterion c;
        try {
            e.fn(c);
        } catch (const BoundExceeded&) {
            c.expect(false, "node bound exceeded");
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        if (c.ok) {
            printf("PASS %s\n", e.name);
        } else {
            printf("FAIL %s (%s)\n", e.name, c.fail_detail.c_str());
            failed++;
        }
        fflush(stdout);
    }
    return failed;
}
