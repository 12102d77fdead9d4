#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcrystal/monomial.hpp"

using namespace mcrystal;

namespace {
Monomial pm(const CartanData& cd, const std::string& s) { return parse_monomial(s, cd.N); }
} // namespace

TEST_CASE("a_multiplier A1~1") {
    CartanData a11 = build_cartan(parse_type("A1~1"));
    // s = (0, 1); A_{1,l} needs l = 0 mod 2
    auto d = a_multiplier(a11, 1, 2);
    Monomial m = make_monomial(a11.N);
    for (auto& t : d) mul_var(m, t[0], t[1], t[2]);
    CHECK(format_monomial(m) == "0_2^-2 1_1 1_3");
    CHECK_THROWS_AS(a_multiplier(a11, 1, 1), ParityError);
}

TEST_CASE("a_multiplier D1~4 star") {
    CartanData d4 = build_cartan(parse_type("D1~4"));
    // s_2 = 1 so A_{2,l} needs even l; use l = 0
    auto d = a_multiplier(d4, 2, 0);
    Monomial m = make_monomial(d4.N);
    for (auto& t : d) mul_var(m, t[0], t[1], t[2]);
    CHECK(exponent(m, 2, -1) == 1);
    CHECK(exponent(m, 2, 1) == 1);
    for (int j : {0, 1, 3, 4}) CHECK(exponent(m, j, 0) == -1);
}

TEST_CASE("phi/eps/p/q scans") {
    CartanData d4 = build_cartan(parse_type("D1~4"));
    Monomial m = pm(d4, "1_0");
    CHECK(phi_i(m, 1) == 1);
    CHECK(eps_i(m, 1) == 0);
    CHECK(q_i(m, 1) == 0);

    Monomial m2 = pm(d4, "2_0 0_3^-2");
    CHECK(phi_i(m2, 0) == 0);
    CHECK(eps_i(m2, 0) == 2);
    CHECK(phi_i(m2, 2) == 1);
    CHECK(q_i(m2, 2) == 0);

    Monomial m3 = pm(d4, "1_0 1_2^-1");
    CHECK(phi_i(m3, 1) == 1);
    CHECK(eps_i(m3, 1) == 1);
    CHECK(p_i(m3, 1) == 2);
    CHECK(q_i(m3, 1) == 0);

    Monomial m4 = pm(d4, "1_2^-1");
    CHECK(eps_i(m4, 1) == 1);
    CHECK(p_i(m4, 1) == 2);
}

TEST_CASE("lower matches the worked D1~4 chain") {
    CartanData d4 = build_cartan(parse_type("D1~4"));
    Monomial m = pm(d4, "2_0 0_3^-2");
    auto s2 = lower(d4, m, 2);
    REQUIRE(s2);
    CHECK(format_monomial(*s2) == "0_1 0_3^-2 1_1 2_2^-1 3_1 4_1");
    auto s0 = lower(d4, *s2, 0);
    REQUIRE(s0);
    CHECK(format_monomial(*s0) == "0_3^-3 1_1 3_1 4_1");
    CHECK(!lower(d4, pm(d4, "1_2^-1"), 1));
}

TEST_CASE("raise inverts lower and matches the A2 example") {
    CartanData d4 = build_cartan(parse_type("D1~4"));
    Monomial m = pm(d4, "2_0 0_3^-2");
    for (int i = 0; i < d4.N; i++) {
        auto down = lower(d4, m, i);
        if (!down) continue;
        auto back = raise(d4, *down, i);
        REQUIRE(back);
        CHECK(*back == m);
        CHECK(back->ledger == m.ledger);
    }
    CHECK(!raise(d4, pm(d4, "1_0"), 1));

    CartanData a2e = build_cartan(parse_type("A2~4"));
    auto up = raise(a2e, pm(a2e, "1_0 0_1^-2"), 0);
    REQUIRE(up);
    CHECK(format_monomial(*up) == "0_-1 0_1^-1");
}

TEST_CASE("phi/eps bookkeeping under lower") {
    CartanData d4 = build_cartan(parse_type("D1~4"));
    Monomial m = pm(d4, "2_0 0_3^-2");
    for (int i = 0; i < d4.N; i++) {
        auto down = lower(d4, m, i);
        if (!down) continue;
        CHECK(eps_i(*down, i) == eps_i(m, i) + 1);
        CHECK(phi_i(*down, i) == phi_i(m, i) - 1);
    }
}

TEST_CASE("weight ledger and delta_multiple") {
    CartanData a13 = build_cartan(parse_type("A1~3"));
    Monomial m = pm(a13, "1_0 0_1^-1");
    CHECK(delta_multiple(a13, m) == 0);
    // one full 0..n cycle of f: ledger = (1,1,1,1) = delta
    Monomial cur = m;
    for (int i : {1, 2, 3, 0}) {
        auto nxt = lower(a13, cur, i);
        REQUIRE(nxt);
        cur = *nxt;
    }
    CHECK(delta_multiple(a13, cur) == 1);
    CHECK(cur == tau_shift(m, 4));
    auto once = lower(a13, m, 1);
    REQUIRE(once);
    CHECK(!delta_multiple(a13, *once));
}

TEST_CASE("tau_shift commutes with the operators") {
    CartanData d4 = build_cartan(parse_type("D1~4"));
    Monomial m = pm(d4, "2_0 0_3^-2");
    CHECK(tau_shift(m, 0) == m);
    CHECK(tau_shift(tau_shift(m, 6), -6) == m);
    for (int i = 0; i < d4.N; i++) {
        auto a = lower(d4, tau_shift(m, 4), i);
        auto b = lower(d4, m, i);
        CHECK(a.has_value() == b.has_value());
        if (a) CHECK(*a == tau_shift(*b, 4));
    }
}

TEST_CASE("project_I0") {
    CartanData d4 = build_cartan(parse_type("D1~4"));
    CHECK(format_monomial(project_I0(pm(d4, "1_0 0_1^-1"))) == "1_0");
    CHECK(format_monomial(project_I0(pm(d4, "0_3 0_5^-1"))) == "");
    Monomial p = project_I0(pm(d4, "2_0 0_3^-2"));
    CHECK(project_I0(p) == p);
}

TEST_CASE("parse and format") {
    CartanData e6 = build_cartan(parse_type("E1~6"));
    Monomial m = pm(e6, "5_0 0_4^-1");
    CHECK(exponent(m, 5, 0) == 1);
    CHECK(exponent(m, 0, 4) == -1);
    CHECK(format_monomial(m) == "0_4^-1 5_0");
    CHECK(format_monomial(pm(e6, "")) == "");
    CHECK(format_monomial(pm(e6, "1_0 1_0")) == "1_0^2");
    CHECK_THROWS_AS(parse_monomial("7_0", e6.N), SyntaxError);
    CHECK_THROWS_AS(parse_monomial("x_0", e6.N), SyntaxError);
    CHECK_THROWS_AS(parse_monomial("1^2", e6.N), SyntaxError);
}

TEST_CASE("fundamental seeds") {
    CartanData a13 = build_cartan(parse_type("A1~3"));
    Shift sh = shift_for_pair(a13, 1, 1, 0); // phi(1)=1, phi(0)=0? theta_1=1 so phi(0)=l'=0
    Monomial m = fundamental_seed(a13, 1, sh);
    CHECK(format_monomial(m) == "0_0^-1 1_1");

    CartanData dn = build_cartan(parse_type("D1~5"));
    Shift shn = shift_for_pair(dn, 5, 1, -2); // theta_5 = 3
    CHECK(shn.phi[5] == 1);
    CHECK(shn.phi[0] == -2);
    Monomial mn = fundamental_seed(dn, 5, shn);
    CHECK(format_monomial(mn) == "0_-2^-1 5_1");

    CartanData a2d = build_cartan(parse_type("A2dag~4")); // n = 2
    Shift shd = canonical_shift(a2d);
    Monomial md = fundamental_seed(a2d, 2, shd);
    CHECK(exponent(md, 2, shd.phi[2]) == 2);
    CHECK(exponent(md, 0, shd.phi[0]) == -1);
}

TEST_CASE("parity_class") {
    CartanData d4 = build_cartan(parse_type("D1~4"));
    CHECK(parity_class(d4, pm(d4, "1_0")) == 1);     // s_1 = 0
    CHECK(parity_class(d4, pm(d4, "2_0 0_3^-2")) == -1);
    CHECK(parity_class(d4, pm(d4, "1_0 2_0")) == 0); // mixed
    CHECK(parity_class(d4, pm(d4, "")) == 1);
}
