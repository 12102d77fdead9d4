#include "mcrystal/embed.hpp"
#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mcrystal {

long factor_weight(const CartanData& cd, const ElemFactor& x, int i) {
    switch (x.kind) {
    case ElemFactor::Bi: return x.l * cd.C[i][x.node]; // wt = l * alpha_{node}
    case ElemFactor::Tlambda: return x.lam[i];
    default: return 0;
    }
}

namespace {

long factor_eps(const ElemFactor& x, int i) {
    if (x.kind == ElemFactor::Cunit) return 0;
    if (x.kind == ElemFactor::Bi && x.node == i) return -x.l;
    return NEG_INF;
}

long factor_phi(const ElemFactor& x, int i) {
    if (x.kind == ElemFactor::Cunit) return 0;
    if (x.kind == ElemFactor::Bi && x.node == i) return x.l;
    return NEG_INF;
}

// E_k = eps(x_k) - sum_{j<k} <wt x_j>, F_k = phi(x_k) + sum_{j>k} <wt x_j>
std::pair<std::vector<long>, std::vector<long>> scan(const CartanData& cd,
                                                     const TensorWord& w, int i) {
    const size_t N = w.factors.size();
    std::vector<long> E(N, NEG_INF), F(N, NEG_INF);
    long prefix = 0;
    for (size_t k = 0; k < N; k++) {
        long e = factor_eps(w.factors[k], i);
        if (e != NEG_INF) E[k] = e - prefix;
        prefix += factor_weight(cd, w.factors[k], i);
    }
    long suffix = 0;
    for (size_t k = N; k-- > 0;) {
        long p = factor_phi(w.factors[k], i);
        if (p != NEG_INF) F[k] = p + suffix;
        suffix += factor_weight(cd, w.factors[k], i);
    }
    return {E, F};
}

} // namespace

std::pair<long, long> tensor_eps_phi(const CartanData& cd, const TensorWord& w, int i) {
    auto [E, F] = scan(cd, w, i);
    long eps = NEG_INF, phi = NEG_INF;
    for (long v : E) eps = std::max(eps, v);
    for (long v : F) phi = std::max(phi, v);
    return {eps, phi};
}

std::optional<TensorWord> tensor_op(const CartanData& cd, const TensorWord& w, int i,
                                    bool lower_op) {
    auto [E, F] = scan(cd, w, i);
    const auto& S = lower_op ? F : E;
    long best = NEG_INF;
    for (long v : S) best = std::max(best, v);
    if (best == NEG_INF) return std::nullopt;
    size_t pos = 0;
    if (lower_op) {
        for (size_t k = S.size(); k-- > 0;)
            if (S[k] == best) { pos = k; break; }
    } else {
        for (size_t k = 0; k < S.size(); k++)
            if (S[k] == best) { pos = k; break; }
    }
    ElemFactor x = w.factors[pos];
    if (x.kind != ElemFactor::Bi || x.node != i) return std::nullopt;
    TensorWord out = w;
    out.factors[pos].l += lower_op ? -1 : 1;
    return out;
}

TensorWord phi_embed(const CartanData& cd, const Monomial& mp, const Monomial& seed,
                     const Shift& shift, int glo, int ghi) {
    const auto& phi = shift.phi;
    // block range: every grade in [glo, ghi] must be expressible as 2l + phi(i)
    int pmin = *std::min_element(phi.begin(), phi.end());
    int pmax = *std::max_element(phi.begin(), phi.end());
    long Lmax = std::max<long>(1, ((long)ghi - pmin + 2) / 2 + 1);
    long Lmin = std::min<long>(-1, -(((long)pmax - glo + 2) / 2 + 1));

    // solve d_{i,k} = z_i(k) + z_i(k-1) + sum_{j~i} C[i][j] z_j(k or k-1)
    // top-down; within one level follow the shift order (descending phi)
    auto zidx = [&](long k) { return (size_t)(k - (Lmin - 2)); };
    std::vector<std::vector<long>> z(cd.N, std::vector<long>(zidx(Lmax + 2) + 1, 0));
    for (long k = Lmax + 1; k >= Lmin; k--) {
        for (int i : shift.order) {
            long d = exponent(mp, i, (int)(2 * k) + phi[i]) -
                     exponent(seed, i, (int)(2 * k) + phi[i]);
            long acc = d - z[i][zidx(k)];
            for (int j = 0; j < cd.N; j++) {
                if (j == i || cd.C[i][j] == 0) continue;
                long lj = phi[j] == phi[i] + 1 ? k - 1 : k;
                acc -= (long)cd.C[i][j] * z[j][zidx(lj)];
            }
            z[i][zidx(k - 1)] = acc;
        }
    }
    for (int i = 0; i < cd.N; i++)
        if (z[i][zidx(Lmin - 1)] != 0)
            throw WindowTooSmall("embedding window does not close at the bottom");
    // the factorization must reproduce m' exactly
    Monomial rebuilt = seed;
    for (int i = 0; i < cd.N; i++)
        for (long k = Lmin; k <= Lmax; k++) {
            long e = z[i][zidx(k)];
            if (!e) continue;
            for (const auto& t : a_multiplier(cd, i, (int)(2 * k) + phi[i] + 1))
                mul_var(rebuilt, t[0], t[1], (int)(t[2] * e));
        }
    if (!(rebuilt == mp)) throw WindowTooSmall("monomial support escapes the window");

    TensorWord w;
    w.factors.push_back({});
    for (long l = Lmax; l >= Lmin; l--) {
        for (int i : shift.order) {
            ElemFactor f;
            f.kind = ElemFactor::Bi;
            f.node = i;
            f.l = z[i][zidx(l)];
            w.factors.push_back(f);
        }
        ElemFactor t;
        t.kind = ElemFactor::Tlambda;
        t.lam.resize(cd.N);
        for (int i = 0; i < cd.N; i++) t.lam[i] = exponent(seed, i, (int)(2 * l) + phi[i]);
        w.factors.push_back(t);
        if (l == 0) {
            // t_alpha: level-0 weights pair to zero against every coroot
            ElemFactor a;
            a.kind = ElemFactor::Tlambda;
            a.lam.assign(cd.N, 0);
            w.factors.push_back(a);
        }
    }
    w.factors.push_back({});
    return w;
}

EmbedReport verify_strict(const CartanData& cd, const Monomial& seed, const Shift& shift,
                          int depth) {
    // radius-limited ball, both operator directions
    std::set<Monomial> ball{seed};
    std::vector<Monomial> frontier{seed};
    for (int step = 0; step < depth; step++) {
        std::vector<Monomial> next;
        for (const auto& m : frontier)
            for (int i = 0; i < cd.N; i++)
                for (bool down : {false, true}) {
                    auto c = down ? lower(cd, m, i) : raise(cd, m, i);
                    if (c && ball.insert(*c).second) next.push_back(*c);
                }
        frontier = std::move(next);
    }
    int glo = 0, ghi = 0;
    for (const auto& m : ball)
        for (const auto& t : m.u) {
            glo = std::min(glo, t[1]);
            ghi = std::max(ghi, t[1]);
        }
    glo -= 2 * cd.N + 2; // children of boundary nodes stay inside the window
    ghi += 2 * cd.N + 2;

    EmbedReport rep;
    std::map<TensorWord, Monomial> seen;
    auto note = [&](const Monomial& m, int i, const std::string& what) {
        std::ostringstream os;
        os << "node " << format_monomial(m) << " i=" << i << ": " << what;
        rep.violations.push_back(os.str());
    };
    for (const auto& m : ball) {
        TensorWord w = phi_embed(cd, m, seed, shift, glo, ghi);
        auto [it, fresh] = seen.emplace(w, m);
        if (!fresh && !(it->second == m)) note(m, -1, "embedding is not injective");
        for (int i = 0; i < cd.N; i++) {
            auto [we, wp] = tensor_eps_phi(cd, w, i);
            if (we != eps_i(m, i)) note(m, i, "eps mismatch");
            if (wp != phi_i(m, i)) note(m, i, "phi mismatch");
            for (bool down : {false, true}) {
                auto mc = down ? lower(cd, m, i) : raise(cd, m, i);
                auto wc = tensor_op(cd, w, i, down);
                if (mc.has_value() != wc.has_value()) {
                    note(m, i, down ? "lower nullity mismatch" : "raise nullity mismatch");
                    continue;
                }
                if (mc && !(phi_embed(cd, *mc, seed, shift, glo, ghi) == *wc))
                    note(m, i, down ? "lower does not commute" : "raise does not commute");
            }
        }
        rep.nodes_checked++;
    }
    return rep;
}

} // namespace mcrystal
