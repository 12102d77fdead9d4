#include "mcrystal/tableaux.hpp"
#include <algorithm>
#include <functional>
#include <sstream>

namespace mcrystal {

namespace {

// total-order rank; type D gives n and -n the same level (incomparable)
int level(char family, int n, int s) {
    int k = s < 0 ? -s : s;
    switch (family) {
    case 'D':
        if (s == 0 || k > n) throw UnknownSymbol("bad type D symbol " + std::to_string(s));
        return s > 0 ? k : 2 * n - k;
    case 'B':
        if (k > n) throw UnknownSymbol("bad type B symbol " + std::to_string(s));
        if (s == 0) return 2 * n + 1;
        return s > 0 ? 2 * k : 4 * n + 2 - 2 * k;
    case 'C':
        if (s == 0 || k > n) throw UnknownSymbol("bad type C symbol " + std::to_string(s));
        return s > 0 ? k : 2 * n + 1 - k;
    default: throw UnknownSymbol(std::string("unknown family ") + family);
    }
}

int at(const Tableau& T, int a) { return T.entries[a - 1]; } // 1-based

} // namespace

std::vector<int> alphabet(char family, int n) {
    std::vector<int> out;
    if (family == 'D') {
        for (int k = 1; k <= n; k++) out.push_back(k);
        for (int k = n; k >= 1; k--) out.push_back(-k);
    } else if (family == 'B') {
        for (int k = 1; k <= n; k++) out.push_back(k);
        out.push_back(0);
        for (int k = n; k >= 1; k--) out.push_back(-k);
    } else if (family == 'C') {
        for (int k = 1; k <= n; k++) out.push_back(k);
        for (int k = n; k >= 1; k--) out.push_back(-k);
    } else {
        throw UnknownSymbol(std::string("unknown family ") + family);
    }
    return out;
}

bool sym_lt(char family, int n, int x, int y) {
    return level(family, n, x) < level(family, n, y);
}

bool sym_succeq(char family, int n, int x, int y) {
    if (x == y) return true;
    return sym_lt(family, n, y, x);
}

Monomial affine_box(const CartanData& cd, char family, int sym, int p) {
    const int n = cd.N - 1;
    Monomial m = make_monomial(cd.N);
    auto Y = [&](int i, int l, int e) { mul_var(m, i, l, e); };
    if (family == 'A') {
        if (sym < 1 || sym > n + 1) throw UnknownSymbol("bad type A symbol " + std::to_string(sym));
        Y(sym - 1, p + sym, -1);
        Y(sym % (n + 1), p + sym - 1, 1);
        return m;
    }
    if (family == 'C') {
        int k = sym < 0 ? -sym : sym;
        if (sym == 0 || k > n) throw UnknownSymbol("bad type C symbol " + std::to_string(sym));
        if (sym > 0) {
            Y(k - 1, p + k, -1);
            Y(k, p + k - 1, 1);
        } else {
            Y(k - 1, p + 2 * n - k, 1);
            Y(k, p + 2 * n + 1 - k, -1);
        }
        return m;
    }
    if (family == 'B') {
        switch (sym) {
        case 1: Y(0, p + 2, -1); Y(1, p, 1); return m;
        case 2: Y(0, p + 2, -1); Y(1, p + 2, -1); Y(2, p + 1, 1); return m;
        case 0: Y(n, p + n + 1, -1); Y(n, p + n - 1, 1); return m;
        case -2: Y(0, p + 2 * n - 2, 1); Y(1, p + 2 * n - 2, 1); Y(2, p + 2 * n - 1, -1); return m;
        case -1: Y(0, p + 2 * n - 2, 1); Y(1, p + 2 * n, -1); return m;
        }
        if (sym == n) { Y(n - 1, p + n, -1); Y(n, p + n - 1, 2); return m; }
        if (sym == -n) { Y(n - 1, p + n, 1); Y(n, p + n + 1, -2); return m; }
        int k = sym < 0 ? -sym : sym;
        if (k < 3 || k > n) throw UnknownSymbol("bad type B symbol " + std::to_string(sym));
        if (sym > 0) {
            Y(k - 1, p + k, -1);
            Y(k, p + k - 1, 1);
        } else {
            Y(k - 1, p + 2 * n - k, 1);
            Y(k, p + 2 * n + 1 - k, -1);
        }
        return m;
    }
    if (family == 'D') {
        switch (sym) {
        case 1: Y(0, p + 2, -1); Y(1, p, 1); return m;
        case 2: Y(0, p + 2, -1); Y(1, p + 2, -1); Y(2, p + 1, 1); return m;
        case -2: Y(0, p + 2 * n - 4, 1); Y(1, p + 2 * n - 4, 1); Y(2, p + 2 * n - 3, -1); return m;
        case -1: Y(0, p + 2 * n - 4, 1); Y(1, p + 2 * n - 2, -1); return m;
        }
        if (sym == n - 1) { Y(n - 2, p + n - 1, -1); Y(n - 1, p + n - 2, 1); Y(n, p + n - 2, 1); return m; }
        if (sym == n) { Y(n - 1, p + n, -1); Y(n, p + n - 2, 1); return m; }
        if (sym == -n) { Y(n - 1, p + n - 2, 1); Y(n, p + n, -1); return m; }
        if (sym == -(n - 1)) { Y(n - 2, p + n - 1, 1); Y(n - 1, p + n, -1); Y(n, p + n, -1); return m; }
        int k = sym < 0 ? -sym : sym;
        if (sym == 0 || k < 3 || k > n - 2) throw UnknownSymbol("bad type D symbol " + std::to_string(sym));
        if (sym > 0) {
            Y(k - 1, p + k, -1);
            Y(k, p + k - 1, 1);
        } else {
            Y(k - 1, p + 2 * n - 2 - k, 1);
            Y(k, p + 2 * n - 1 - k, -1);
        }
        return m;
    }
    throw UnknownSymbol(std::string("unknown family ") + family);
}

Monomial finite_box(const CartanData& cd, char family, int sym, int p) {
    return project_I0(affine_box(cd, family, sym, p));
}

Monomial spin_box(const CartanData& cd, int sym, int p) {
    const int n = cd.N - 1;
    Monomial m = make_monomial(cd.N);
    auto Y = [&](int i, int l, int e) { mul_var(m, i, l, e); };
    switch (sym) {
    case 1: Y(1, p - 1, 1); return m;
    case 2: Y(1, p + 1, -1); Y(2, p, 1); Y(0, p + 1, -1); return m;
    case -1: Y(0, p + 2 * n - 1, 1); return m;
    }
    if (sym == n - 1) { Y(n - 2, p + n - 2, -1); return m; }
    if (sym == n) { Y(n, p + n - 1, 1); return m; }
    if (sym == -(n - 1)) { Y(n - 1, p + n + 1, -1); Y(n, p + n + 1, -1); return m; }
    if (sym == -n) { Y(n - 1, p + n - 1, 1); return m; }
    int k = sym < 0 ? -sym : sym;
    if (sym == 0 || k > n - 2 || k < 2) throw UnknownSymbol("bad spin symbol " + std::to_string(sym));
    if (sym > 0) { Y(k - 1, p + k - 1, -1); Y(k, p + k - 2, 1); }
    // barred 2..n-2: empty
    return m;
}

Monomial half_box_d2(const CartanData& cd, int sym, int p) {
    const int n = cd.N - 1;
    Monomial m = make_monomial(cd.N);
    auto Y = [&](int i, int l, int e) { mul_var(m, i, l, e); };
    if (sym == 0) { Y(n, p + n, 1); return m; }
    if (sym == -1) { Y(0, p + 2 * n, 1); return m; }
    if (sym == n) { Y(n - 1, p + n - 1, -1); return m; }
    if (sym == -n) { Y(n, p + n + 2, -2); return m; }
    int k = sym < 0 ? -sym : sym;
    if (k > n) throw UnknownSymbol("bad half box symbol " + std::to_string(sym));
    if (sym > 0) { Y(k - 1, p + k - 1, -1); Y(k, p + k - 2, 1); }
    // barred 2..n-1: empty
    return m;
}

Monomial seed_lhr(const CartanData& cd, int ell, int h, int r) {
    Monomial m = make_monomial(cd.N);
    if (h > 0) {
        mul_var(m, h, ell - h, 1);
        mul_var(m, h, ell - h - 2 * r, -1);
    }
    mul_var(m, ell, -2 * r, 1);
    return m;
}

Monomial monomial_of_tableau(const CartanData& cd, char family, const Tableau& T) {
    const int ell = (int)T.entries.size();
    Monomial m = make_monomial(cd.N);
    for (int a = 1; a <= ell; a++) {
        int p = a <= T.h ? ell - 2 * a + 1 : ell + 1 - 2 * a - 2 * T.r;
        Monomial b = finite_box(cd, family, at(T, a), p);
        for (const auto& t : b.u) mul_var(m, t[0], t[1], t[2]);
    }
    return m;
}

AdmissReport check_admissible(char family, int n, const Tableau& T) {
    const int ell = (int)T.entries.size();
    const int h = T.h, r = T.r;
    auto fail = [&](int clause, int a, int b) {
        return AdmissReport{false, std::string(1, family) + "." + std::to_string(clause), a, b};
    };
    // 1: column chains
    for (int a = 1; a < ell; a++) {
        if (a == h) continue; // column boundary
        int x = at(T, a), y = at(T, a + 1);
        bool ok;
        if (family == 'D')
            ok = !sym_succeq(family, n, x, y);
        else if (family == 'B')
            ok = sym_lt(family, n, x, y) || (x == 0 && y == 0);
        else
            ok = sym_lt(family, n, x, y);
        if (!ok) return fail(1, a, a + 1);
    }
    // 2/3: (k, kbar) pairs inside one column at the critical distance
    const int in_col = family == 'D' ? n - 1 : n; // distance n-1-k resp. n-k
    for (int a = 1; a <= ell; a++) {
        int k = at(T, a);
        if (k <= 0) continue;
        int b = a + in_col - k;
        if (b <= a || b > ell) continue;
        bool same_col = (a <= h) == (b <= h);
        if (same_col && at(T, b) == -k) return fail(a <= h ? 2 : 3, a, b);
    }
    // 4: cross pairs at distance n - max(r,1) - k (D) resp. n + 1 - max(r,1) - k
    const int cross = (family == 'D' ? n : n + 1) - std::max(r, 1);
    for (int a = 1; a <= h; a++) {
        int k = at(T, a);
        if (k <= 0) continue;
        int b = a + cross - k;
        if (b > h && b <= ell && at(T, b) == -k) return fail(4, a, b);
    }
    if (h >= 1 && h < ell) {
        int top = at(T, h), bot = at(T, h + 1);
        const int kmax = family == 'D' ? n - 1 : n;
        // 5: unbarred letter repeated across the split needs a completing run
        if (bot >= 1 && bot <= kmax && sym_succeq(family, n, top, bot)) {
            int k = bot;
            if (top < k || top > kmax) return fail(5, h, h + 1);
            int kp = top;
            int lo = h + (family == 'D' ? n - r - k : n - r - k + 1) + 1;
            int hi = h + (family == 'D' ? n - 1 - k : n - k);
            bool found = false;
            for (int b = std::max(lo, h + 2 + (kp - k)); b <= std::min(hi, ell); b++) {
                if (at(T, b) != -k) continue;
                bool run = true;
                for (int t = 0; t <= kp - k; t++)
                    if (at(T, b - t) != -(k + t)) { run = false; break; }
                if (run) { found = true; break; }
            }
            if (!found) return fail(5, h, h + 1);
        }
        // 6: barred mirror
        if (bot <= -1 && -bot <= kmax && sym_succeq(family, n, top, bot)) {
            int k = -bot;
            if (top >= 0 || -top > k || -top > kmax) return fail(6, h, h + 1);
            int kp = -top;
            int lo = h - (family == 'D' ? n - 2 - k : n - k - 1);
            int hi = h - (family == 'D' ? n - r - k : n - r - k + 1);
            bool found = false;
            for (int a = std::max(lo, 1 + (k - kp)); a <= std::min(hi, h); a++) {
                if (at(T, a) != k) continue;
                bool run = true;
                for (int t = 0; t <= k - kp; t++)
                    if (at(T, a - t) != k - t) { run = false; break; }
                if (run) { found = true; break; }
            }
            if (!found) return fail(6, h, h + 1);
        }
        // 7: the middle letters across the split
        if (family == 'D' && (bot == n || bot == -n) && sym_succeq(family, n, top, bot))
            return fail(7, h, h + 1);
        if (family == 'B' && bot == 0 && !(top == 0 || sym_lt(family, n, top, 0)))
            return fail(7, h, h + 1);
    }
    return {};
}

Tableau sigma(char family, int n, const Tableau& T) {
    Tableau S = T;
    const int ell = (int)S.entries.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 1; k <= n - 1; k++) {
            int d = (family == 'D' ? n - S.r - k - 1 : n - S.r - k);
            if (d <= 0) continue;
            for (int a = 1; a <= S.h; a++) {
                int b = a + d;
                if (b <= S.h || b > ell) continue;
                if (S.entries[a - 1] == k && S.entries[b - 1] == -k) {
                    S.entries[a - 1] = k + 1;
                    S.entries[b - 1] = -(k + 1);
                    changed = true;
                }
            }
        }
    }
    S.r = T.r + 1;
    return S;
}

Tableau sigma_prime(char family, int n, const Tableau& T) {
    Tableau S = T;
    S.r = T.r - 1;
    if (T.r <= 1) return S;
    const int ell = (int)S.entries.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = n; k >= 2; k--) {
            int d = (family == 'D' ? n - T.r - k + 1 : n - T.r - k + 2);
            if (d <= 0) continue;
            for (int a = 1; a <= S.h; a++) {
                int b = a + d;
                if (b <= S.h || b > ell) continue;
                if (S.entries[a - 1] == k && S.entries[b - 1] == -k) {
                    S.entries[a - 1] = k - 1;
                    S.entries[b - 1] = -(k - 1);
                    changed = true;
                }
            }
        }
    }
    return S;
}

Tableau tau_lhr(char family, int n, const Tableau& T) {
    const int ell = (int)T.entries.size();
    const int h = T.h, r = T.r;
    if (h >= ell) throw OutOfRange("tau needs a nonempty second column");
    const int k1 = at(T, h + 1);
    const int kmax = family == 'D' ? n - 1 : n;
    Tableau S;
    S.h = h + 1;
    S.r = r;
    if (k1 >= 1 && k1 <= kmax) {
        int lo = h + (family == 'D' ? n - r - k1 : n - r - k1 + 1) + 1;
        int hi = std::min(ell, h + (family == 'D' ? n - 1 - k1 : n - k1));
        for (int b = std::max(lo, h + 2); b <= hi; b++) {
            if (at(T, b) != -k1) continue;
            int b2 = b;
            while (b2 - 1 >= h + 2 && at(T, b2 - 1) < 0 && at(T, b2 - 1) == at(T, b2) - 1) b2--;
            int k2 = -at(T, b2);
            for (int a = 1; a <= h; a++) S.entries.push_back(at(T, a));
            S.entries.push_back(k2 + 1);
            for (int a = h + 2; a <= b2 - 1; a++) S.entries.push_back(at(T, a));
            for (int v = k2 + 1; v >= k1 + 1; v--) S.entries.push_back(-v);
            for (int a = b + 1; a <= ell; a++) S.entries.push_back(at(T, a));
            return S;
        }
    } else if (k1 <= -1 && -k1 <= kmax) {
        int k = -k1;
        int lo = std::max(1, h - (family == 'D' ? n - 2 - k : n - k - 1));
        int hi = std::min(h, h - (family == 'D' ? n - r - k : n - r - k + 1));
        for (int a = lo; a <= hi; a++) {
            if (at(T, a) != k) continue;
            int a2 = a;
            while (a2 - 1 >= 1 && at(T, a2 - 1) > 0 && at(T, a2 - 1) == at(T, a2) - 1) a2--;
            int k2 = at(T, a2);
            for (int c = 1; c <= a2 - 1; c++) S.entries.push_back(at(T, c));
            for (int v = k2 - 1; v <= k - 1; v++) S.entries.push_back(v);
            for (int c = a + 1; c <= h; c++) S.entries.push_back(at(T, c));
            S.entries.push_back(-(k2 - 1));
            for (int c = h + 2; c <= ell; c++) S.entries.push_back(at(T, c));
            return S;
        }
    }
    // no partner: just move the split
    S.entries = T.entries;
    return S;
}

std::vector<Tableau> enumerate_tableaux(char family, int n, int ell, int h, int r) {
    std::vector<int> alpha = alphabet(family, n);
    std::vector<Tableau> out;
    Tableau cur;
    cur.h = h;
    cur.r = r;
    auto chain_ok = [&](int prev, int next) {
        if (family == 'D') return !sym_succeq(family, n, prev, next);
        if (family == 'B') return sym_lt(family, n, prev, next) || (prev == 0 && next == 0);
        return sym_lt(family, n, prev, next);
    };
    std::function<void(int)> dfs = [&](int pos) {
        if (pos > ell) {
            if (check_admissible(family, n, cur).ok) out.push_back(cur);
            return;
        }
        for (int s : alpha) {
            if (pos != 1 && pos != h + 1 && !chain_ok(cur.entries.back(), s)) continue;
            cur.entries.push_back(s);
            dfs(pos + 1);
            cur.entries.pop_back();
        }
    };
    dfs(1);
    return out;
}

namespace {

std::optional<Tableau> entry_op(const CartanData& cd, char family, const Tableau& T, int k,
                                bool lower_op) {
    const int n = cd.N - 1;
    Monomial m = monomial_of_tableau(cd, family, T);
    auto target = lower_op ? lower(cd, m, k) : raise(cd, m, k);
    if (!target) return std::nullopt;
    std::vector<std::pair<int, Tableau>> cands; // (changed position, candidate)
    for (int a = 1; a <= (int)T.entries.size(); a++) {
        for (int s : alphabet(family, n)) {
            if (s == at(T, a)) continue;
            Tableau U = T;
            U.entries[a - 1] = s;
            if (!check_admissible(family, n, U).ok) continue;
            if (monomial_of_tableau(cd, family, U) == *target) cands.emplace_back(a, U);
        }
    }
    if (cands.empty()) return std::nullopt;
    if (cands.size() == 1) return cands[0].second;
    // ambiguity between the two ends of a telescoping pair: prefer the barred
    // (later) position on a cross pair with a nonzero jump, the earlier otherwise
    auto& first = cands.front();
    auto& last = cands.back();
    bool is_cross = first.first <= T.h && last.first > T.h;
    return (is_cross && T.r != 0) ? last.second : first.second;
}

} // namespace

std::optional<Tableau> tableau_lower(const CartanData& cd, char family, const Tableau& T, int k) {
    return entry_op(cd, family, T, k, true);
}

std::optional<Tableau> tableau_raise(const CartanData& cd, char family, const Tableau& T, int k) {
    return entry_op(cd, family, T, k, false);
}

std::string format_tableau(const Tableau& T) {
    std::ostringstream out;
    out << "((";
    for (int a = 1; a <= T.h; a++) out << (a > 1 ? "," : "") << at(T, a);
    out << "),(";
    for (int a = T.h + 1; a <= (int)T.entries.size(); a++)
        out << (a > T.h + 1 ? "," : "") << at(T, a);
    out << ")) r=" << T.r;
    return out.str();
}

Tableau parse_tableau(const std::string& text) {
    Tableau T;
    size_t pos = 0;
    auto expect = [&](const std::string& tok) {
        while (pos < text.size() && text[pos] == ' ') pos++;
        if (text.compare(pos, tok.size(), tok) != 0)
            throw SyntaxError("expected '" + tok + "' in tableau text");
        pos += tok.size();
    };
    auto read_group = [&]() {
        int count = 0;
        expect("(");
        while (pos < text.size() && text[pos] == ' ') pos++;
        while (pos < text.size() && text[pos] != ')') {
            size_t used = 0;
            int v = std::stoi(text.substr(pos), &used);
            pos += used;
            T.entries.push_back(v);
            count++;
            while (pos < text.size() && text[pos] == ' ') pos++;
            if (pos < text.size() && text[pos] == ',') pos++;
            while (pos < text.size() && text[pos] == ' ') pos++;
        }
        expect(")");
        return count;
    };
    expect("(");
    T.h = read_group();
    expect(",");
    read_group();
    expect(")");
    expect("r=");
    size_t used = 0;
    T.r = std::stoi(text.substr(pos), &used);
    pos += used;
    while (pos < text.size() && text[pos] == ' ') pos++;
    if (pos != text.size()) throw SyntaxError("trailing characters in tableau text");
    return T;
}

Monomial scheme_A(const CartanData& cd, int ell, const std::vector<int>& entries, int j) {
    const int n = cd.N - 1;
    int jm = ((j % ell) + ell) % ell;
    int wraps = (j - jm) / ell;
    Monomial m = make_monomial(cd.N);
    for (int p = 1; p <= (int)entries.size(); p++) {
        int grade = p <= jm ? n - ell - 2 * p + 2 * jm + 2 : ell + 1 - 2 * p + 2 * jm;
        Monomial b = affine_box(cd, 'A', entries[p - 1], grade);
        for (const auto& t : b.u) mul_var(m, t[0], t[1], t[2]);
    }
    return wraps ? tau_shift(m, wraps * (n + 1)) : m;
}

std::optional<std::pair<std::vector<int>, int>>
affine_op_A(const CartanData& cd, int ell, const std::vector<int>& entries, int j, bool lower_op) {
    const int n = cd.N - 1;
    std::vector<int> out;
    if (lower_op) {
        if (entries.front() == 1 || entries.back() != n + 1) return std::nullopt;
        out.push_back(1);
        out.insert(out.end(), entries.begin(), entries.end() - 1);
        return std::make_pair(out, j + 1);
    }
    if (entries.front() != 1 || entries.back() == n + 1) return std::nullopt;
    out.assign(entries.begin() + 1, entries.end());
    out.push_back(n + 1);
    return std::make_pair(out, j - 1);
}

Monomial scheme_C(const CartanData& cd, int ell, const std::vector<int>& entries, int j) {
    const int n = cd.N - 1;
    int jm = ((j % ell) + ell) % ell;
    int wraps = (j - jm) / ell;
    Monomial m = make_monomial(cd.N);
    for (int a = 1; a <= (int)entries.size(); a++) {
        int grade = a <= ell - jm ? -2 * jm + ell + 1 - 2 * a : 3 * ell + 1 - 2 * n - 2 * jm - 2 * a;
        Monomial b = affine_box(cd, 'C', entries[a - 1], grade);
        for (const auto& t : b.u) mul_var(m, t[0], t[1], t[2]);
    }
    // the product formula at j + ell reproduces the j formula shifted down by 2n
    return wraps ? tau_shift(m, -wraps * 2 * n) : m;
}

std::optional<std::pair<std::vector<int>, int>>
affine_op_C(const CartanData& cd, int ell, const std::vector<int>& entries, int j, bool lower_op) {
    std::vector<int> out;
    if (lower_op) {
        if (entries.front() == 1 || entries.back() != -1) return std::nullopt;
        out.push_back(1);
        out.insert(out.end(), entries.begin(), entries.end() - 1);
        return std::make_pair(out, j - 1);
    }
    if (entries.front() != 1 || entries.back() == -1) return std::nullopt;
    out.assign(entries.begin() + 1, entries.end());
    out.push_back(-1);
    return std::make_pair(out, j + 1);
}

Monomial scheme_spin(const CartanData& cd, const std::vector<int>& entries) {
    const int n = cd.N - 1;
    Monomial m = make_monomial(cd.N);
    for (int a = 1; a <= (int)entries.size(); a++) {
        Monomial b = spin_box(cd, entries[a - 1], n + 1 - 2 * a);
        for (const auto& t : b.u) mul_var(m, t[0], t[1], t[2]);
    }
    return m;
}

bool check_spin(int n, const std::vector<int>& entries, bool plus) {
    if ((int)entries.size() != n) return false;
    for (int a = 0; a + 1 < n; a++)
        if (!sym_lt('D', n, entries[a], entries[a + 1])) return false;
    for (int x : entries)
        if (std::find(entries.begin(), entries.end(), -x) != entries.end()) return false;
    for (int a = 1; a <= n; a++) {
        if (entries[a - 1] == n && (n - a) % 2 != (plus ? 0 : 1)) return false;
        if (entries[a - 1] == -n && (n - a) % 2 != (plus ? 1 : 0)) return false;
    }
    return true;
}

std::optional<std::pair<std::vector<int>, int>>
affine_op_spin(const CartanData& cd, const std::vector<int>& entries, bool lower_op) {
    const int n = cd.N - 1;
    std::vector<int> out;
    if (lower_op) {
        if ((int)entries.size() != n || entries[n - 2] != -2) return std::nullopt;
        out = {1, 2};
        out.insert(out.end(), entries.begin(), entries.end() - 2);
        return std::make_pair(out, 4);
    }
    if ((int)entries.size() != n || entries[1] != 2) return std::nullopt;
    out.assign(entries.begin() + 2, entries.end());
    out.push_back(-2);
    out.push_back(-1);
    return std::make_pair(out, -4);
}

Monomial scheme_d2_last(const CartanData& cd, const std::vector<int>& entries) {
    const int n = cd.N - 1;
    Monomial m = make_monomial(cd.N);
    for (int a = 1; a <= (int)entries.size(); a++) {
        Monomial b = half_box_d2(cd, entries[a - 1], n + 2 - 2 * a);
        for (const auto& t : b.u) mul_var(m, t[0], t[1], t[2]);
    }
    return m;
}

bool check_d2_last(int n, const std::vector<int>& entries) {
    if ((int)entries.size() != n + 1) return false;
    for (int a = 0; a + 1 <= n; a++)
        if (!sym_lt('B', n, entries[a], entries[a + 1])) return false;
    for (int x : entries)
        if (x != 0 && std::find(entries.begin(), entries.end(), -x) != entries.end()) return false;
    return true;
}

std::optional<std::pair<std::vector<int>, int>>
affine_op_d2_last(const CartanData& cd, const std::vector<int>& entries, bool lower_op) {
    std::vector<int> out;
    if (lower_op) {
        if (entries.back() != -1) return std::nullopt;
        out.push_back(1);
        out.insert(out.end(), entries.begin(), entries.end() - 1);
        return std::make_pair(out, 2);
    }
    if (entries.front() != 1) return std::nullopt;
    out.assign(entries.begin() + 1, entries.end());
    out.push_back(-1);
    return std::make_pair(out, -2);
}

} // namespace mcrystal
