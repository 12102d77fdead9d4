#pragma once
#include "mcrystal/cartan.hpp"
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mcrystal {

struct ParityError : std::runtime_error { using std::runtime_error::runtime_error; };
struct SyntaxError : std::runtime_error { using std::runtime_error::runtime_error; };

// A Laurent monomial in the variables Y_{i,l}: sparse exponent map plus a root
// ledger (net number of times f_j has been applied since the seed).  Identity,
// hashing and ordering look at the exponents only; the ledger is bookkeeping.
struct Monomial {
    // sorted by (i, l); exponent e is never 0
    std::vector<std::array<int, 3>> u; // {i, l, e}
    std::vector<int> ledger;           // size = node count; f_j adds +1 to ledger[j]

    bool operator==(const Monomial& o) const { return u == o.u; }
    bool operator<(const Monomial& o) const { return u < o.u; }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (const auto& t : m.u)
            for (int v : t) {
                h ^= (size_t)(uint32_t)v;
                h *= 1099511628211ull;
            }
        return h;
    }
};

Monomial make_monomial(int node_count);
int exponent(const Monomial& m, int i, int l);
void mul_var(Monomial& m, int i, int l, int e); // multiply by Y_{i,l}^e

int phi_i(const Monomial& m, int i);
int eps_i(const Monomial& m, int i);
int p_i(const Monomial& m, int i); // requires eps_i > 0
int q_i(const Monomial& m, int i); // requires phi_i > 0

// Exponent map of A_{i,l}; public entry point, checks l == s_i + 1 mod 2.
std::vector<std::array<int, 3>> a_multiplier(const CartanData& cd, int i, int l);

std::optional<Monomial> lower(const CartanData& cd, const Monomial& m, int i); // f_i
std::optional<Monomial> raise(const CartanData& cd, const Monomial& m, int i); // e_i

Monomial tau_shift(const Monomial& m, int two_p);
Monomial project_I0(const Monomial& m);

// wt(m) = wt(seed) - sum_i c_i alpha_i, with c = ledger
std::vector<int> weight_delta(const Monomial& m);
// N such that c = N * a (marks), if the ledger is a delta multiple
std::optional<int> delta_multiple(const CartanData& cd, const Monomial& m);

Monomial parse_monomial(const std::string& text, int node_count);
std::string format_monomial(const Monomial& m);

// Seed for the level-0 fundamental weight at node ell (Y_{l,phi(l)} Y_{0,phi(0)}^{-a_l^vee},
// with the A^(2)dagger exceptions).
Monomial fundamental_seed(const CartanData& cd, int ell, const Shift& shift);

// 0: inconsistent with both colorings; 1: support parity matches s; -1: matches 1-s.
// Empty support reports 1.
int parity_class(const CartanData& cd, const Monomial& m);

} // namespace mcrystal
