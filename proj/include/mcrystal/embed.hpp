#pragma once
#include "mcrystal/monomial.hpp"
#include <optional>
#include <string>
#include <vector>

namespace mcrystal {

struct WindowTooSmall : std::runtime_error { using std::runtime_error::runtime_error; };

// factors of the big tensor word: b_i(l) blocks, t_lambda markers, unit padding
struct ElemFactor {
    enum Kind { Bi, Tlambda, Cunit } kind = Cunit;
    int node = -1;           // Bi only
    long l = 0;              // Bi only
    std::vector<int> lam;    // Tlambda only: <lambda, alpha_i^vee> per node
    bool operator==(const ElemFactor& o) const {
        return kind == o.kind && node == o.node && l == o.l && lam == o.lam;
    }
    bool operator<(const ElemFactor& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (node != o.node) return node < o.node;
        if (l != o.l) return l < o.l;
        return lam < o.lam;
    }
};

struct TensorWord {
    std::vector<ElemFactor> factors;
    bool operator==(const TensorWord& o) const { return factors == o.factors; }
    bool operator<(const TensorWord& o) const { return factors < o.factors; }
};

// pairing <wt(x), alpha_i^vee> of a single factor
long factor_weight(const CartanData& cd, const ElemFactor& x, int i);

// tensor-rule epsilon/phi; NEG_INF marks minus infinity
inline constexpr long NEG_INF = -(1L << 40);
std::pair<long, long> tensor_eps_phi(const CartanData& cd, const TensorWord& w, int i);

// raise acts on the leftmost maximizer, lower on the rightmost; acting on a
// non-Bi maximizer gives null
std::optional<TensorWord> tensor_op(const CartanData& cd, const TensorWord& w, int i,
                                    bool lower_op);

// the embedding: factor m' over the seed as a product of A-multipliers on grades
// inside [glo, ghi] and lay the exponents out as a word
TensorWord phi_embed(const CartanData& cd, const Monomial& mp, const Monomial& seed,
                     const Shift& shift, int glo, int ghi);

struct EmbedReport {
    size_t nodes_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// BFS ball of the given radius around the seed (raise and lower, all nodes);
// checks eps/phi equality, operator commutation and injectivity of the embedding
EmbedReport verify_strict(const CartanData& cd, const Monomial& seed, const Shift& shift,
                          int depth);

} // namespace mcrystal
