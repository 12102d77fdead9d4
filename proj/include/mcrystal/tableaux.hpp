#pragma once
#include "mcrystal/monomial.hpp"
#include <optional>
#include <string>
#include <vector>

namespace mcrystal {

struct UnknownSymbol : std::runtime_error { using std::runtime_error::runtime_error; };
struct Inadmissible : std::runtime_error { using std::runtime_error::runtime_error; };

// Entries are encoded as ints: +k for k, -k for the barred k, 0 for the middle
// symbol (types with an odd middle letter).  Type A columns use plain 1..n+1.
struct Tableau {
    std::vector<int> entries;
    int h = 0; // split: first column is entries[0..h-1]
    int r = 0; // jump
    bool operator==(const Tableau& o) const {
        return entries == o.entries && h == o.h && r == o.r;
    }
    bool operator<(const Tableau& o) const {
        if (entries != o.entries) return entries < o.entries;
        if (h != o.h) return h < o.h;
        return r < o.r;
    }
};

// classical alphabets in enumeration order (type D: n listed before -n)
std::vector<int> alphabet(char family, int n);
bool sym_lt(char family, int n, int x, int y);     // strict x < y in the partial order
bool sym_succeq(char family, int n, int x, int y); // x >= y (false when incomparable)

// full-size boxes of the affine realization (node 0 kept)
Monomial affine_box(const CartanData& cd, char family, int sym, int p);
// finite boxes: same tables with Y_{0,*} = 1
Monomial finite_box(const CartanData& cd, char family, int sym, int p);
// half-size spin boxes (type D) and the short half boxes of the twisted D family
Monomial spin_box(const CartanData& cd, int sym, int p);
Monomial half_box_d2(const CartanData& cd, int sym, int p);

// Y_{h,l-h} Y_{h,l-h-2r}^{-1} Y_{l,-2r} with Y_{0,*} = 1
Monomial seed_lhr(const CartanData& cd, int ell, int h, int r);

// column grades l-2a+1 (a <= h) and l+1-2a-2r (a > h)
Monomial monomial_of_tableau(const CartanData& cd, char family, const Tableau& T);

struct AdmissReport {
    bool ok = true;
    std::string clause; // e.g. "D.4"
    int a = -1, b = -1; // offending positions (1-based) where applicable
};
AdmissReport check_admissible(char family, int n, const Tableau& T);

// jump-change isomorphisms (sigma: r -> r+1, sigma_prime: r -> r-1)
// and the split-change isomorphism (tau: h -> h+1)
Tableau sigma(char family, int n, const Tableau& T);
Tableau sigma_prime(char family, int n, const Tableau& T);
Tableau tau_lhr(char family, int n, const Tableau& T);

std::vector<Tableau> enumerate_tableaux(char family, int n, int ell, int h, int r);

// entry replacement realizing f_k / e_k (k in 1..n); cd must be finite data
std::optional<Tableau> tableau_lower(const CartanData& cd, char family, const Tableau& T, int k);
std::optional<Tableau> tableau_raise(const CartanData& cd, char family, const Tableau& T, int k);

std::string format_tableau(const Tableau& T);
Tableau parse_tableau(const std::string& text);

// ---- affine closed forms (tableau with extra indices) ----

// type A columns: m_{T;j}, entries strictly increasing in 1..n+1
Monomial scheme_A(const CartanData& cd, int ell, const std::vector<int>& entries, int j);
std::optional<std::pair<std::vector<int>, int>>
affine_op_A(const CartanData& cd, int ell, const std::vector<int>& entries, int j, bool lower_op);

// type C columns: m_{T;j}, T in C_{ell, ell-j, n-ell}
Monomial scheme_C(const CartanData& cd, int ell, const std::vector<int>& entries, int j);
std::optional<std::pair<std::vector<int>, int>>
affine_op_C(const CartanData& cd, int ell, const std::vector<int>& entries, int j, bool lower_op);

// type D spin columns (length n); plus selects the sign class of the model
Monomial scheme_spin(const CartanData& cd, const std::vector<int>& entries);
bool check_spin(int n, const std::vector<int>& entries, bool plus);
// result carries the tau shift applied on top of the returned tableau
std::optional<std::pair<std::vector<int>, int>>
affine_op_spin(const CartanData& cd, const std::vector<int>& entries, bool lower_op);

// twisted D family, last node: columns of length n+1 over the middle alphabet
Monomial scheme_d2_last(const CartanData& cd, const std::vector<int>& entries);
bool check_d2_last(int n, const std::vector<int>& entries);
std::optional<std::pair<std::vector<int>, int>>
affine_op_d2_last(const CartanData& cd, const std::vector<int>& entries, bool lower_op);

} // namespace mcrystal
