#include "mcrystal/monomial.hpp"
#include <algorithm>
#include <sstream>

namespace mcrystal {

Monomial make_monomial(int node_count) {
    Monomial m;
    m.ledger.assign(node_count, 0);
    return m;
}

int exponent(const Monomial& m, int i, int l) {
    auto it = std::lower_bound(m.u.begin(), m.u.end(), std::array<int, 3>{i, l, INT32_MIN});
    if (it != m.u.end() && (*it)[0] == i && (*it)[1] == l) return (*it)[2];
    return 0;
}

void mul_var(Monomial& m, int i, int l, int e) {
    if (e == 0) return;
    auto it = std::lower_bound(m.u.begin(), m.u.end(), std::array<int, 3>{i, l, INT32_MIN});
    if (it != m.u.end() && (*it)[0] == i && (*it)[1] == l) {
        (*it)[2] += e;
        if ((*it)[2] == 0) m.u.erase(it);
    } else {
        m.u.insert(it, {i, l, e});
    }
}

namespace {

// contiguous slice of m.u belonging to node i
std::pair<size_t, size_t> node_slice(const Monomial& m, int i) {
    auto lo = std::lower_bound(m.u.begin(), m.u.end(), std::array<int, 3>{i, INT32_MIN, 0});
    auto hi = std::lower_bound(m.u.begin(), m.u.end(), std::array<int, 3>{i + 1, INT32_MIN, 0});
    return {(size_t)(lo - m.u.begin()), (size_t)(hi - m.u.begin())};
}

} // namespace

int phi_i(const Monomial& m, int i) {
    auto [lo, hi] = node_slice(m, i);
    int best = 0, run = 0;
    for (size_t k = lo; k < hi; k++) {
        run += m.u[k][2];
        best = std::max(best, run);
    }
    return best;
}

int eps_i(const Monomial& m, int i) {
    auto [lo, hi] = node_slice(m, i);
    int best = 0, run = 0;
    for (size_t k = hi; k-- > lo;) {
        run += m.u[k][2];
        best = std::max(best, -run);
    }
    return best;
}

int p_i(const Monomial& m, int i) {
    // max L with eps_{i,L} = eps_i; lands on a support grade when eps_i > 0
    auto [lo, hi] = node_slice(m, i);
    int e = eps_i(m, i);
    int run = 0;
    for (size_t k = hi; k-- > lo;) {
        run += m.u[k][2];
        if (-run == e) return m.u[k][1];
    }
    throw std::logic_error("p_i called with eps_i = 0");
}

int q_i(const Monomial& m, int i) {
    auto [lo, hi] = node_slice(m, i);
    int f = phi_i(m, i);
    int run = 0;
    for (size_t k = lo; k < hi; k++) {
        run += m.u[k][2];
        if (run == f) return m.u[k][1];
    }
    throw std::logic_error("q_i called with phi_i = 0");
}

static std::vector<std::array<int, 3>> a_multiplier_raw(const CartanData& cd, int i, int l) {
    std::vector<std::array<int, 3>> out;
    for (int j = 0; j < cd.N; j++) {
        if (j == i) {
            out.push_back({i, l - 1, 1});
            out.push_back({i, l + 1, 1});
        } else if (cd.C[j][i] != 0) {
            out.push_back({j, l, cd.C[j][i]});
        }
    }
    return out;
}

std::vector<std::array<int, 3>> a_multiplier(const CartanData& cd, int i, int l) {
    if (i < 0 || i >= cd.N) throw OutOfRange("a_multiplier: bad node");
    if (((l - cd.s[i] - 1) % 2 + 2) % 2 != 0)
        throw ParityError("A_{i,l} needs l = s_i + 1 mod 2");
    return a_multiplier_raw(cd, i, l);
}

std::optional<Monomial> lower(const CartanData& cd, const Monomial& m, int i) {
    if (phi_i(m, i) == 0) return std::nullopt;
    int l = q_i(m, i) + 1;
    Monomial out = m;
    for (const auto& t : a_multiplier_raw(cd, i, l)) mul_var(out, t[0], t[1], -t[2]);
    out.ledger[i] += 1;
    return out;
}

std::optional<Monomial> raise(const CartanData& cd, const Monomial& m, int i) {
    if (eps_i(m, i) == 0) return std::nullopt;
    int l = p_i(m, i) - 1;
    Monomial out = m;
    for (const auto& t : a_multiplier_raw(cd, i, l)) mul_var(out, t[0], t[1], t[2]);
    out.ledger[i] -= 1;
    return out;
}

Monomial tau_shift(const Monomial& m, int two_p) {
    Monomial out = m;
    for (auto& t : out.u) t[1] += two_p;
    return out;
}

Monomial project_I0(const Monomial& m) {
    Monomial out = m;
    std::erase_if(out.u, [](const std::array<int, 3>& t) { return t[0] == 0; });
    return out;
}

std::vector<int> weight_delta(const Monomial& m) {
    return m.ledger;
}

std::optional<int> delta_multiple(const CartanData& cd, const Monomial& m) {
    if (cd.a.empty()) return std::nullopt;
    // c = N*a; a[0] >= 1 so N is determined by node 0
    if (m.ledger[0] % cd.a[0] != 0) return std::nullopt;
    int N = m.ledger[0] / cd.a[0];
    for (int i = 0; i < cd.N; i++)
        if (m.ledger[i] != N * cd.a[i]) return std::nullopt;
    return N;
}

Monomial parse_monomial(const std::string& text, int node_count) {
    Monomial m = make_monomial(node_count);
    std::istringstream in(text);
    std::string tok;
    size_t pos = 0;
    while (in >> tok) {
        auto us = tok.find('_');
        if (us == std::string::npos || us == 0)
            throw SyntaxError("expected index_grade at position " + std::to_string(pos));
        auto caret = tok.find('^', us + 1);
        auto num = [&](const std::string& s) {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(s, &used);
            } catch (const std::exception&) {
                throw SyntaxError("bad integer '" + s + "' at position " + std::to_string(pos));
            }
            if (used != s.size())
                throw SyntaxError("bad integer '" + s + "' at position " + std::to_string(pos));
            return v;
        };
        int i = num(tok.substr(0, us));
        int l = num(caret == std::string::npos ? tok.substr(us + 1)
                                               : tok.substr(us + 1, caret - us - 1));
        int e = caret == std::string::npos ? 1 : num(tok.substr(caret + 1));
        if (i < 0 || i >= node_count)
            throw SyntaxError("node index " + std::to_string(i) + " out of range");
        mul_var(m, i, l, e);
        pos++;
    }
    return m;
}

std::string format_monomial(const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : m.u) {
        if (!first) out << ' ';
        first = false;
        out << t[0] << '_' << t[1];
        if (t[2] != 1) out << '^' << t[2];
    }
    return out.str();
}

Monomial fundamental_seed(const CartanData& cd, int ell, const Shift& shift) {
    if (ell <= 0 || ell >= cd.N) throw OutOfRange("fundamental_seed: node must be in 1..n");
    Monomial m = make_monomial(cd.N);
    int n = cd.N - 1;
    if (cd.type.family == Family::A2dag) {
        if (ell == n) {
            mul_var(m, n, shift.phi[n], 2);
            mul_var(m, 0, shift.phi[0], -1);
        } else {
            mul_var(m, ell, shift.phi[ell], 1);
            mul_var(m, 0, shift.phi[0], -1);
        }
    } else {
        mul_var(m, ell, shift.phi[ell], 1);
        mul_var(m, 0, shift.phi[0], -cd.a_vee[ell]);
    }
    return m;
}

int parity_class(const CartanData& cd, const Monomial& m) {
    int cls = 0; // 0 unknown yet
    for (const auto& t : m.u) {
        int p = ((t[1] - cd.s[t[0]]) % 2 + 2) % 2 == 0 ? 1 : -1;
        if (cls == 0)
            cls = p;
        else if (cls != p)
            return 0;
    }
    return cls == 0 ? 1 : cls;
}

} // namespace mcrystal
