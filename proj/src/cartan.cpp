#include "mcrystal/cartan.hpp"
#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace mcrystal {

namespace {

std::vector<std::vector<int>> diag2(int N) {
    std::vector<std::vector<int>> C(N, std::vector<int>(N, 0));
    for (int i = 0; i < N; i++) C[i][i] = 2;
    return C;
}

void edge(std::vector<std::vector<int>>& C, int i, int j, int cij = -1, int cji = -1) {
    C[i][j] = cij;
    C[j][i] = cji;
}

} // namespace

AffineType parse_type(const std::string& text) {
    auto pos = text.find('~');
    if (pos == std::string::npos) throw UnsupportedType("bad type string: " + text);
    std::string fam = text.substr(0, pos);
    int sub = 0;
    try {
        size_t used = 0;
        sub = std::stoi(text.substr(pos + 1), &used);
        if (used != text.size() - pos - 1) throw std::invalid_argument("trail");
    } catch (const std::exception&) {
        throw UnsupportedType("bad subscript in type string: " + text);
    }
    if (fam == "A1") return {Family::A1, sub};
    if (fam == "B1") return {Family::B1, sub};
    if (fam == "C1") return {Family::C1, sub};
    if (fam == "D1") return {Family::D1, sub};
    if (fam == "A2") {
        if (sub % 2 == 0) return {Family::A2even, sub / 2};
        return {Family::A2odd, (sub + 1) / 2};
    }
    if (fam == "A2dag") {
        if (sub % 2 != 0) throw UnsupportedType("A2dag subscript must be even: " + text);
        return {Family::A2dag, sub / 2};
    }
    if (fam == "D2") return {Family::D2, sub - 1};
    if (fam == "E1" && sub == 6) return {Family::E1_6, 6};
    if (fam == "E1" && sub == 7) return {Family::E1_7, 7};
    if (fam == "E1" && sub == 8) return {Family::E1_8, 8};
    if (fam == "F1" && sub == 4) return {Family::F1_4, 4};
    if (fam == "G1" && sub == 2) return {Family::G1_2, 2};
    if (fam == "E2" && sub == 6) return {Family::E2_6, 4};
    if (fam == "D3" && sub == 4) return {Family::D3_4, 2};
    throw UnsupportedType("unknown type string: " + text);
}

std::string type_name(const AffineType& t) {
    switch (t.family) {
    case Family::A1: return "A1~" + std::to_string(t.n);
    case Family::B1: return "B1~" + std::to_string(t.n);
    case Family::C1: return "C1~" + std::to_string(t.n);
    case Family::D1: return "D1~" + std::to_string(t.n);
    case Family::A2even: return "A2~" + std::to_string(2 * t.n);
    case Family::A2dag: return "A2dag~" + std::to_string(2 * t.n);
    case Family::A2odd: return "A2~" + std::to_string(2 * t.n - 1);
    case Family::D2: return "D2~" + std::to_string(t.n + 1);
    case Family::E1_6: return "E1~6";
    case Family::E1_7: return "E1~7";
    case Family::E1_8: return "E1~8";
    case Family::F1_4: return "F1~4";
    case Family::G1_2: return "G1~2";
    case Family::E2_6: return "E2~6";
    case Family::D3_4: return "D3~4";
    }
    return "?";
}

std::vector<int> parity_coloring(const CartanData& cd) {
    // BFS 2-coloring rooted at node 0 with s_0 = 0.
    std::vector<int> s(cd.N, -1);
    s[0] = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (int j = 0; j < cd.N; j++) {
            if (j == i || cd.C[i][j] == 0) continue;
            if (s[j] == -1) {
                s[j] = 1 - s[i];
                q.push_back(j);
            } else if (s[j] != 1 - s[i]) {
                throw OddCycle("Dynkin graph is not bipartite");
            }
        }
    }
    for (int i = 0; i < cd.N; i++)
        if (s[i] == -1) throw UnsupportedType("disconnected Dynkin graph");
    return s;
}

CartanData build_cartan(const AffineType& type) {
    CartanData cd;
    cd.type = type;
    const int n = type.n;
    switch (type.family) {
    case Family::A1: {
        if (n < 1) throw UnsupportedType("A1~n needs n >= 1");
        if (n % 2 == 0) throw UnsupportedType("A^(1) of even rank has an odd cycle");
        cd.N = n + 1;
        cd.C = diag2(cd.N);
        if (n == 1) {
            edge(cd.C, 0, 1, -2, -2);
        } else {
            for (int i = 0; i < n; i++) edge(cd.C, i, i + 1);
            edge(cd.C, n, 0);
        }
        cd.a.assign(cd.N, 1);
        cd.a_vee.assign(cd.N, 1);
        break;
    }
    case Family::B1: {
        if (n < 3) throw UnsupportedType("B1~n needs n >= 3");
        cd.N = n + 1;
        cd.C = diag2(cd.N);
        edge(cd.C, 0, 2);
        edge(cd.C, 1, 2);
        for (int i = 2; i < n - 1; i++) edge(cd.C, i, i + 1);
        edge(cd.C, n - 1, n, -1, -2);
        cd.a.assign(cd.N, 2);
        cd.a[0] = cd.a[1] = 1;
        cd.a_vee = cd.a;
        cd.a_vee[n] = 1;
        break;
    }
    case Family::C1: {
        if (n < 2) throw UnsupportedType("C1~n needs n >= 2");
        cd.N = n + 1;
        cd.C = diag2(cd.N);
        edge(cd.C, 0, 1, -1, -2);
        for (int i = 1; i < n - 1; i++) edge(cd.C, i, i + 1);
        edge(cd.C, n - 1, n, -2, -1);
        cd.a.assign(cd.N, 2);
        cd.a[0] = cd.a[n] = 1;
        cd.a_vee.assign(cd.N, 1);
        break;
    }
    case Family::D1: {
        if (n < 4) throw UnsupportedType("D1~n needs n >= 4");
        cd.N = n + 1;
        cd.C = diag2(cd.N);
        edge(cd.C, 0, 2);
        edge(cd.C, 1, 2);
        for (int i = 2; i < n - 2; i++) edge(cd.C, i, i + 1);
        edge(cd.C, n - 2, n - 1);
        edge(cd.C, n - 2, n);
        cd.a.assign(cd.N, 2);
        cd.a[0] = cd.a[1] = cd.a[n - 1] = cd.a[n] = 1;
        cd.a_vee = cd.a;
        break;
    }
    case Family::A2even: {
        if (n < 1) throw UnsupportedType("A2~2n needs n >= 1");
        cd.N = n + 1;
        cd.C = diag2(cd.N);
        if (n == 1) {
            edge(cd.C, 0, 1, -4, -1);
        } else {
            edge(cd.C, 0, 1, -2, -1);
            for (int i = 1; i < n - 1; i++) edge(cd.C, i, i + 1);
            edge(cd.C, n - 1, n, -2, -1);
        }
        cd.a.assign(cd.N, 2);
        cd.a[n] = 1;
        cd.a_vee.assign(cd.N, 2);
        cd.a_vee[0] = 1;
        break;
    }
    case Family::A2dag: {
        // reversed numbering of A^(2)_{2n}: C'_{i,j} = C_{n-i,n-j}
        CartanData base = build_cartan({Family::A2even, n});
        cd.N = n + 1;
        cd.C = diag2(cd.N);
        for (int i = 0; i <= n; i++)
            for (int j = 0; j <= n; j++) cd.C[i][j] = base.C[n - i][n - j];
        cd.a.resize(cd.N);
        cd.a_vee.resize(cd.N);
        for (int i = 0; i <= n; i++) {
            cd.a[i] = base.a[n - i];
            cd.a_vee[i] = base.a_vee[n - i];
        }
        break;
    }
    case Family::A2odd: {
        if (n < 3) throw UnsupportedType("A2~2n-1 needs n >= 3");
        cd.N = n + 1;
        cd.C = diag2(cd.N);
        edge(cd.C, 0, 2);
        edge(cd.C, 1, 2);
        for (int i = 2; i < n - 1; i++) edge(cd.C, i, i + 1);
        edge(cd.C, n - 1, n, -2, -1);
        cd.a.assign(cd.N, 2);
        cd.a[0] = cd.a[1] = cd.a[n] = 1;
        cd.a_vee = cd.a;
        cd.a_vee[n] = 2;
        break;
    }
    case Family::D2: {
        if (n < 2) throw UnsupportedType("D2~n+1 needs n >= 2");
        cd.N = n + 1;
        cd.C = diag2(cd.N);
        edge(cd.C, 0, 1, -2, -1);
        for (int i = 1; i < n - 1; i++) edge(cd.C, i, i + 1);
        edge(cd.C, n - 1, n, -1, -2);
        cd.a.assign(cd.N, 1);
        cd.a_vee.assign(cd.N, 2);
        cd.a_vee[0] = cd.a_vee[n] = 1;
        break;
    }
    case Family::E1_6: {
        cd.N = 7;
        cd.C = diag2(7);
        for (int i = 1; i < 5; i++) edge(cd.C, i, i + 1);
        edge(cd.C, 3, 6);
        edge(cd.C, 0, 6);
        cd.a = {1, 1, 2, 3, 2, 1, 2};
        cd.a_vee = cd.a;
        break;
    }
    case Family::E1_7: {
        cd.N = 8;
        cd.C = diag2(8);
        for (int i = 0; i < 6; i++) edge(cd.C, i, i + 1);
        edge(cd.C, 3, 7);
        cd.a = {1, 2, 3, 4, 3, 2, 1, 2};
        cd.a_vee = cd.a;
        break;
    }
    case Family::E1_8: {
        cd.N = 9;
        cd.C = diag2(9);
        for (int i = 0; i < 7; i++) edge(cd.C, i, i + 1);
        edge(cd.C, 5, 8);
        cd.a = {1, 2, 3, 4, 5, 6, 4, 2, 3};
        cd.a_vee = cd.a;
        break;
    }
    case Family::F1_4: {
        cd.N = 5;
        cd.C = diag2(5);
        edge(cd.C, 0, 1);
        edge(cd.C, 1, 2);
        edge(cd.C, 2, 3, -1, -2);
        edge(cd.C, 3, 4);
        cd.a = {1, 2, 3, 4, 2};
        cd.a_vee = {1, 2, 3, 2, 1};
        break;
    }
    case Family::G1_2: {
        cd.N = 3;
        cd.C = diag2(3);
        edge(cd.C, 0, 1);
        edge(cd.C, 1, 2, -1, -3);
        cd.a = {1, 2, 3};
        cd.a_vee = {1, 2, 1};
        break;
    }
    case Family::E2_6: {
        cd.N = 5;
        cd.C = diag2(5);
        edge(cd.C, 0, 1);
        edge(cd.C, 1, 2);
        edge(cd.C, 2, 3, -2, -1);
        edge(cd.C, 3, 4);
        cd.a = {1, 2, 3, 2, 1};
        cd.a_vee = {1, 2, 3, 4, 2};
        break;
    }
    case Family::D3_4: {
        cd.N = 3;
        cd.C = diag2(3);
        edge(cd.C, 0, 1);
        edge(cd.C, 1, 2, -3, -1);
        cd.a = {1, 2, 1};
        cd.a_vee = {1, 2, 3};
        break;
    }
    }
    cd.s = parity_coloring(cd);
    cd.theta.assign(cd.N, -1);
    cd.theta[0] = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (int j = 0; j < cd.N; j++)
            if (j != i && cd.C[i][j] != 0 && cd.theta[j] == -1) {
                cd.theta[j] = cd.theta[i] + 1;
                q.push_back(j);
            }
    }
    // null-vector sanity: sum_j C_{i,j} a_j = 0 and sum_j a^vee_j C_{j,i} = 0
    for (int i = 0; i < cd.N; i++) {
        long long r = 0, c = 0;
        for (int j = 0; j < cd.N; j++) {
            r += (long long)cd.C[i][j] * cd.a[j];
            c += (long long)cd.a_vee[j] * cd.C[j][i];
        }
        if (r != 0 || c != 0) throw UnsupportedType("internal: bad marks table");
    }
    return cd;
}

Shift make_shift(const CartanData& cd, const std::vector<int>& phi) {
    if ((int)phi.size() != cd.N) throw InvalidPhi("phi has wrong size");
    int lo = cd.finite ? 1 : 0;
    for (int i = lo; i < cd.N; i++) {
        if (((phi[i] - cd.s[i]) % 2 + 2) % 2 != 0)
            throw InvalidPhi("phi(i) parity differs from s_i at node " + std::to_string(i));
        for (int j = i + 1; j < cd.N; j++)
            if (cd.C[i][j] != 0 && std::abs(phi[i] - phi[j]) != 1)
                throw InvalidPhi("phi gap on edge (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is not 1");
    }
    Shift sh;
    sh.phi = phi;
    sh.order.resize(cd.N - lo);
    std::iota(sh.order.begin(), sh.order.end(), lo);
    std::stable_sort(sh.order.begin(), sh.order.end(),
                     [&](int i, int j) { return phi[i] != phi[j] ? phi[i] > phi[j] : i < j; });
    return sh;
}

Shift canonical_shift(const CartanData& cd) {
    return make_shift(cd, cd.s);
}

Shift shift_for_pair(const CartanData& cd, int i, int l, int lp) {
    if (i < 0 || i >= cd.N) throw OutOfRange("node out of range");
    int th = cd.theta[i];
    int d = l - lp;
    if (d < -th || d > th || ((d - th) % 2 + 2) % 2 != 0)
        throw OutOfRange("l - l' must lie in {-theta_i, ..., theta_i} with step 2");
    if (((lp - cd.s[0]) % 2 + 2) % 2 != 0)
        throw OutOfRange("l' must have the parity of s_0");
    int a = (th + d) / 2;
    std::vector<int> phi(cd.N);
    for (int j = 0; j < cd.N; j++)
        phi[j] = cd.theta[j] <= a ? lp + cd.theta[j] : lp + 2 * a - cd.theta[j];
    return make_shift(cd, phi);
}

int d_ell(const CartanData& cd, int ell) {
    if (ell <= 0 || ell >= cd.N) throw OutOfRange("d_ell: node must be in 1..n");
    if (cd.type.family == Family::A2even && ell == cd.N - 1) return 1;
    if (cd.a_vee[ell] < cd.a[ell]) return 1;
    return cd.a_vee[ell] / cd.a[ell];
}

CartanData finite_subalgebra(const CartanData& cd) {
    CartanData f = cd;
    f.finite = true;
    for (int j = 1; j < f.N; j++) f.C[0][j] = f.C[j][0] = 0;
    f.a.clear();
    f.a_vee.clear();
    return f;
}

CartanData build_finite(char family, int rank) {
    CartanData cd;
    cd.finite = true;
    cd.N = rank + 1;
    cd.type = {Family::A1, rank}; // placeholder tag; finite data is identified by C alone
    cd.C = diag2(cd.N);
    cd.C[0][0] = 0;
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; i++) edge(cd.C, i, i + 1);
    };
    switch (family) {
    case 'A':
        if (rank < 1) throw UnsupportedType("rank");
        chain(1, rank);
        break;
    case 'B':
        if (rank < 2) throw UnsupportedType("rank");
        chain(1, rank - 1);
        edge(cd.C, rank - 1, rank, -1, -2);
        break;
    case 'C':
        if (rank < 2) throw UnsupportedType("rank");
        chain(1, rank - 1);
        edge(cd.C, rank - 1, rank, -2, -1);
        break;
    case 'D':
        if (rank < 3) throw UnsupportedType("rank");
        chain(1, rank - 2);
        edge(cd.C, rank - 2, rank - 1);
        edge(cd.C, rank - 2, rank);
        break;
    case 'E':
        if (rank == 6) {
            chain(1, 5);
            edge(cd.C, 3, 6);
        } else if (rank == 7) {
            chain(1, 6);
            edge(cd.C, 3, 7);
        } else if (rank == 8) {
            chain(1, 7);
            edge(cd.C, 5, 8);
        } else {
            throw UnsupportedType("E rank");
        }
        break;
    case 'F':
        if (rank != 4) throw UnsupportedType("F rank");
        edge(cd.C, 1, 2);
        edge(cd.C, 2, 3, -1, -2);
        edge(cd.C, 3, 4);
        break;
    case 'G':
        if (rank != 2) throw UnsupportedType("G rank");
        edge(cd.C, 1, 2, -1, -3);
        break;
    default:
        throw UnsupportedType("unknown finite family");
    }
    // 2-coloring rooted at node 1
    cd.s.assign(cd.N, -1);
    cd.s[0] = 0;
    cd.s[1] = 0;
    std::deque<int> q{1};
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (int j = 1; j < cd.N; j++)
            if (j != i && cd.C[i][j] != 0 && cd.s[j] == -1) {
                cd.s[j] = 1 - cd.s[i];
                q.push_back(j);
            }
    }
    cd.theta.assign(cd.N, 0);
    return cd;
}

} // namespace mcrystal
