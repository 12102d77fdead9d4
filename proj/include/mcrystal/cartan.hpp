#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace mcrystal {

enum class Family {
    A1,     // A^(1)_n, n odd (even rejected)
    B1,     // B^(1)_n, n >= 3
    C1,     // C^(1)_n, n >= 2
    D1,     // D^(1)_n, n >= 4
    A2even, // A^(2)_{2n}, n >= 1
    A2dag,  // A^(2)dagger_{2n}, n >= 1 (reversed numbering of A2even)
    A2odd,  // A^(2)_{2n-1}, n >= 3
    D2,     // D^(2)_{n+1}, n >= 2
    E1_6, E1_7, E1_8, F1_4, G1_2,
    E2_6,   // E^(2)_6
    D3_4,   // D^(3)_4
};

struct AffineType {
    Family family;
    int n; // number of non-affine nodes; node set is {0,...,n}
};

struct UnsupportedType : std::runtime_error { using std::runtime_error::runtime_error; };
struct OddCycle : std::runtime_error { using std::runtime_error::runtime_error; };
struct InvalidPhi : std::runtime_error { using std::runtime_error::runtime_error; };
struct OutOfRange : std::runtime_error { using std::runtime_error::runtime_error; };

struct CartanData {
    AffineType type{Family::A1, 1};
    int N = 0; // node count (= n+1 for affine data)
    std::vector<std::vector<int>> C; // C[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> a;      // marks (delta = sum a_i alpha_i); empty for finite data
    std::vector<int> a_vee;  // comarks
    std::vector<int> s;      // parity coloring, s[0] = 0
    std::vector<int> theta;  // graph distance to node 0
    bool finite = false;     // true when node 0 has been cut out (I_0 subalgebra)
};

struct Shift {
    std::vector<int> order; // nodes listed i_1 < i_2 < ... (descending phi)
    std::vector<int> phi;
};

// Type registry strings: "A1~n", "B1~n", "C1~n", "D1~n", "A2~<2n>", "A2dag~<2n>",
// "A2~<2n-1>" (odd subscript), "D2~<n+1>", "E1~6", "E1~7", "E1~8", "F1~4", "G1~2",
// "E2~6", "D3~4".  The number after '~' is the literal subscript.
AffineType parse_type(const std::string& text);
std::string type_name(const AffineType& t);

CartanData build_cartan(const AffineType& type);
std::vector<int> parity_coloring(const CartanData& cd); // recompute (s is prefilled)

Shift make_shift(const CartanData& cd, const std::vector<int>& phi);
Shift canonical_shift(const CartanData& cd); // phi = s
Shift shift_for_pair(const CartanData& cd, int i, int l, int lp);

int d_ell(const CartanData& cd, int ell);

// Finite-type data for the I_0 subalgebra: node 0 is kept in the index space but
// disconnected; operators must only use 1..n.
CartanData finite_subalgebra(const CartanData& cd);

// Standalone finite Cartan data, nodes 1..rank (index 0 inert).  family is one of
// 'A','B','C','D','E','F','G'; numbering matches the I_0 restrictions used here
// (E6: node 6 hangs off node 3; E7: node 7 off node 3; E8: node 8 off node 5).
CartanData build_finite(char family, int rank);

} // namespace mcrystal
