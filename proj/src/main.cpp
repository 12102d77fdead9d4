#include "mcrystal/crystal.hpp"
#include "mcrystal/embed.hpp"
#include "mcrystal/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace mcrystal;

namespace {

struct SeedSpec {
    Monomial m;
    Shift sh;
};

// either literal monomial text or "fundamental:<ell>[:l,l']"
SeedSpec resolve_seed(const CartanData& cd, const std::string& text) {
    const std::string tag = "fundamental:";
    if (text.rfind(tag, 0) != 0)
        return {parse_monomial(text, cd.N), canonical_shift(cd)};
    std::string rest = text.substr(tag.size());
    size_t colon = rest.find(':');
    int ell = 0;
    try {
        ell = std::stoi(rest.substr(0, colon));
    } catch (...) {
        throw SyntaxError("bad fundamental seed: " + text);
    }
    Shift sh;
    if (colon == std::string::npos) {
        sh = canonical_shift(cd);
    } else {
        std::string pair = rest.substr(colon + 1);
        size_t comma = pair.find(',');
        if (comma == std::string::npos)
            throw SyntaxError("bad fundamental seed: " + text);
        sh = shift_for_pair(cd, ell, std::stoi(pair.substr(0, comma)),
                            std::stoi(pair.substr(comma + 1)));
    }
    return {fundamental_seed(cd, ell, sh), sh};
}

std::vector<int> resolve_ops(const CartanData& cd, const std::string& text) {
    if (text == "all") return all_ops(cd);
    if (text == "I0" || text == "i0") return i0_ops(cd);
    std::vector<int> ops;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int i = std::stoi(tok);
        if (i < 0 || i >= cd.N) throw OutOfRange("operator index out of range: " + tok);
        ops.push_back(i);
    }
    if (ops.empty()) throw SyntaxError("empty operator list");
    return ops;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text;
}

int cmd_generate(const std::string& type, const std::string& seed_text,
                 const std::string& ops_text, int period, size_t bound,
                 const std::string& format, const std::string& out_path) {
    CartanData cd = build_cartan(parse_type(type));
    SeedSpec seed = resolve_seed(cd, seed_text);
    std::vector<int> ops = resolve_ops(cd, ops_text);
    try {
        CrystalGraph g = period > 0 ? generate_quotient(cd, seed.m, period, bound)
                                    : generate_component(cd, seed.m, ops, bound);
        emit(export_graph(g, format), out_path);
        return 0;
    } catch (const BoundExceeded& b) {
        emit(export_graph(b.partial, format), out_path);
        std::cerr << "node bound " << bound << " exceeded; output is partial\n";
        return 2;
    }
}

int cmd_verify(const std::string& which, size_t bound) {
    std::string dir = fixture_dir();
    std::vector<std::string> paths;
    if (which == "all") {
        paths = list_fixtures(dir);
        if (paths.empty()) throw FixtureError("no fixtures found in " + dir);
    } else {
        std::string name = which;
        if (name.size() < 4 || name.substr(name.size() - 4) != ".txt") name += ".txt";
        paths.push_back(dir + "/" + name);
    }
    bool all_ok = true;
    for (const auto& path : paths) {
        FixtureReport rep = check_fixture(load_fixture(path), bound);
        for (const auto& [what, pass] : rep.assertions)
            std::cout << (pass ? "PASS " : "FAIL ") << rep.name << ": " << what << "\n";
        if (!rep.ok()) all_ok = false;
    }
    return all_ok ? 0 : 3;
}

int cmd_embed_check(const std::string& type, const std::string& seed_text, int depth) {
    CartanData cd = build_cartan(parse_type(type));
    SeedSpec seed = resolve_seed(cd, seed_text);
    EmbedReport rep = verify_strict(cd, seed.m, seed.sh, depth);
    std::cout << "checked " << rep.nodes_checked << " nodes, " << rep.violations.size()
              << " violations\n";
    for (const auto& v : rep.violations) std::cout << "FAIL " << v << "\n";
    return rep.ok() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial crystals of affine quantum algebras"};
    app.require_subcommand(1);

    std::string type, seed_text, ops_text = "all", format = "json", out_path, fixture = "all";
    int period = 0, depth = 3;
    size_t bound = 1000000;

    CLI::App* gen = app.add_subcommand("generate", "grow a crystal graph from a seed");
    gen->add_option("--type", type, "affine type, e.g. D1~4")->required();
    gen->add_option("--seed", seed_text, "monomial text or fundamental:<l>[:l,l']")->required();
    gen->add_option("--ops", ops_text, "all | I0 | comma list of node indices");
    gen->add_option("--period", period, "quotient by tau_{2p} (0 = no quotient)");
    gen->add_option("--bound", bound, "node-count limit");
    gen->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    gen->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* ver = app.add_subcommand("verify", "check the fixture corpus");
    ver->add_option("--fixture", fixture, "fixture name or 'all'");
    ver->add_option("--bound", bound, "node-count limit");

    CLI::App* emb = app.add_subcommand("embed-check", "strictness of the tensor-word embedding");
    emb->add_option("--type", type)->required();
    emb->add_option("--seed", seed_text, "monomial text or fundamental:<l>[:l,l']")->required();
    emb->add_option("--depth", depth, "ball radius around the seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed())
            return cmd_generate(type, seed_text, ops_text, period, bound, format, out_path);
        if (ver->parsed()) return cmd_verify(fixture, bound);
        return cmd_embed_check(type, seed_text, depth);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const BoundExceeded&) {
        std::cerr << "error: node bound exceeded\n";
        return 2;
    }
}
