#pragma once
#include "mcrystal/crystal.hpp"
#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mcrystal {

struct FixtureError : std::runtime_error { using std::runtime_error::runtime_error; };

// Weyl dimension formula over the positive roots; lambda holds the fundamental
// weight coefficients in the node index space of cd (index 0 unused).
boost::multiprecision::cpp_int weyl_dim(const CartanData& finite_cd,
                                        const std::vector<int>& lambda);

struct FixtureComponent {
    size_t size = 0;
    std::vector<std::string> monomials; // may be empty: size-only assertion
};

struct Fixture {
    std::string name;
    AffineType type{Family::A1, 1};
    std::string seed_text;
    int period = 0;
    std::optional<size_t> total;            // total node count of the quotient
    std::optional<int> ell;                 // node for the z-relation
    std::optional<std::pair<int, int>> z;   // tau_{2p} = z_ell^N as (2p, N)
    std::vector<FixtureComponent> components;
    std::vector<std::array<int, 3>> edges;  // indices into the concatenated lists
};

Fixture parse_fixture(const std::string& text, const std::string& name);
Fixture load_fixture(const std::string& path);
// fixture directory: CRYSTAL_FIXTURE_DIR when set, fallback otherwise
std::string fixture_dir(const std::string& fallback = "data/fixtures");
std::vector<std::string> list_fixtures(const std::string& dir);

struct FixtureReport {
    std::string name;
    std::vector<std::pair<std::string, bool>> assertions;
    bool ok() const {
        for (const auto& [what, pass] : assertions)
            if (!pass) return false;
        return true;
    }
};

FixtureReport check_fixture(const Fixture& f, size_t bound = 1000000);

struct BijectionReport {
    bool ok = true;
    std::string detail;
};

// tableau enumeration vs BFS from the telescoped seed, as sets and labeled graphs
BijectionReport oracle_bijection(char family, int n, int ell, int h, int r);

} // namespace mcrystal
