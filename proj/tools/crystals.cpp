// Command-line front end: enumerate crystal models, export components as
// DOT/JSON, verify the model chain and tabulate dimensions.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "crystal/correspondence.hpp"

using namespace crystal;

namespace {

struct RunConfig {
    std::string family = "B";
    int rank = 2;
    std::string weight = "1";
    std::string model = "kn"; // kn | rev | wall
    std::string output = "table"; // dot | json | table
    size_t cap = default_node_cap;
    bool cc1_printed_form = false;
};

std::vector<long> parse_coeffs(const std::string& s, int rank) {
    std::vector<long> c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(std::stol(item));
    if ((int)c.size() != rank)
        throw CLI::ValidationError("--weight needs " + std::to_string(rank) + " comma-separated coefficients");
    return c;
}

size_t cap_from_env(size_t cap) {
    if (const char* env = std::getenv("CRYSTAL_NODE_CAP")) return std::stoull(env);
    return cap;
}

std::vector<int> classical(const LieType& t) {
    std::vector<int> colors;
    for (int i = 1; i <= t.rank; ++i) colors.push_back(i);
    return colors;
}

CrystalGraph build_graph(const RunConfig& cfg, const LieType& t, const Weight& lam) {
    if (cfg.model == "kn") return generate_component(highest_kn(t, lam), classical(t), cfg.cap);
    if (cfg.model == "rev") return generate_component(highest_rev(t, lam), classical(t), cfg.cap);
    if (cfg.model == "wall") return generate_component(highest_wall(t, lam), classical(t), cfg.cap);
    throw CLI::ValidationError("unknown model '" + cfg.model + "'");
}

int cmd_enumerate(const RunConfig& cfg) {
    LieType t = parse_type(cfg.family, cfg.rank);
    Weight lam = weight_from_coeffs(t, parse_coeffs(cfg.weight, cfg.rank));
    std::vector<std::string> keys;
    if (cfg.model == "kn") {
        for (const auto& m : enumerate_kn(t, lam, cfg.cap)) keys.push_back(m.key());
    } else if (cfg.model == "rev") {
        TwoColOptions opt;
        opt.cc1_min_form = !cfg.cc1_printed_form;
        for (const auto& m : enumerate_t(t, lam, cfg.cap, opt)) keys.push_back(m.key());
    } else if (cfg.model == "wall") {
        auto g = build_graph(cfg, t, lam);
        keys = g.keys;
    } else {
        throw CLI::ValidationError("unknown model '" + cfg.model + "'");
    }
    for (const auto& k : keys) std::cout << k << "\n";
    std::cout << "count " << keys.size() << "\n";
    return 0;
}

int cmd_graph(const RunConfig& cfg, const std::string& outfile) {
    LieType t = parse_type(cfg.family, cfg.rank);
    Weight lam = weight_from_coeffs(t, parse_coeffs(cfg.weight, cfg.rank));
    CrystalGraph g = build_graph(cfg, t, lam);
    std::string payload = (cfg.output == "json") ? g.to_json() : g.to_dot();
    if (outfile.empty()) {
        std::cout << payload;
    } else {
        std::ofstream os(outfile, std::ios::binary);
        os << payload;
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    LieType t = parse_type(cfg.family, cfg.rank);
    Weight lam = weight_from_coeffs(t, parse_coeffs(cfg.weight, cfg.rank));
    VerifyReport rep = verify_chain(t, lam, cfg.cap);
    std::cout << rep.to_json();
    return rep.ok() ? 0 : 1;
}

void coeff_vectors(int n, long max_sum, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if ((int)cur.size() == n) {
        out.push_back(cur);
        return;
    }
    long used = 0;
    for (long v : cur) used += v;
    for (long v = 0; v <= max_sum - used; ++v) {
        cur.push_back(v);
        coeff_vectors(n, max_sum, cur, out);
        cur.pop_back();
    }
}

int cmd_dims(const RunConfig& cfg, long max_sum) {
    LieType t = parse_type(cfg.family, cfg.rank);
    bool all_ok = true;
    std::vector<std::vector<long>> grid;
    std::vector<long> cur;
    coeff_vectors(t.rank, max_sum, cur, grid);
    std::cout << "coeffs\tweyl\tkn\trev\tcomponent\n";
    for (const auto& c : grid) {
        Weight lam = weight_from_coeffs(t, c);
        long long dim = weyl_dim(t, lam);
        size_t kn = enumerate_kn(t, lam, cfg.cap).size();
        size_t rev = enumerate_t(t, lam, cfg.cap).size();
        size_t comp = generate_component(highest_kn(t, lam), classical(t), cfg.cap).size();
        bool ok = (long long)kn == dim && (long long)rev == dim && (long long)comp == dim;
        all_ok = all_ok && ok;
        for (size_t j = 0; j < c.size(); ++j) std::cout << (j ? "," : "") << c[j];
        std::cout << "\t" << dim << "\t" << kn << "\t" << rev << "\t" << comp << (ok ? "" : "\tMISMATCH")
                  << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal models of the classical Lie algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string outfile;
    long max_sum = 2;

    auto add_common = [&](CLI::App* sub, bool with_weight = true) {
        sub->add_option("--type", cfg.family, "family A|B|C|D")->required();
        sub->add_option("--rank", cfg.rank, "rank n")->required();
        if (with_weight)
            sub->add_option("--weight", cfg.weight, "fundamental-weight coefficients c_1,...,c_n")->required();
        sub->add_option("--cap", cfg.cap, "node cap (or env CRYSTAL_NODE_CAP)");
    };

    CLI::App* en = app.add_subcommand("enumerate", "list the elements of one model");
    add_common(en);
    en->add_option("--model", cfg.model, "kn | rev | wall");
    en->add_flag("--cc1-printed-form", cfg.cc1_printed_form,
                 "use the printed equal-letter form of (2CC-1) instead of the min form");

    CLI::App* gr = app.add_subcommand("graph", "export a crystal component");
    add_common(gr);
    gr->add_option("--model", cfg.model, "kn | rev | wall");
    gr->add_option("--output", cfg.output, "dot | json");
    gr->add_option("--out", outfile, "write to file instead of stdout");

    CLI::App* ve = app.add_subcommand("verify", "cross-check all models for one weight");
    add_common(ve);

    CLI::App* di = app.add_subcommand("dims", "tabulate model sizes against the Weyl dimension");
    add_common(di, false);
    di->add_option("--max-sum", max_sum, "largest coefficient sum");

    CLI11_PARSE(app, argc, argv);
    cfg.cap = cap_from_env(cfg.cap);

    try {
        if (en->parsed()) return cmd_enumerate(cfg);
        if (gr->parsed()) return cmd_graph(cfg, outfile);
        if (ve->parsed()) return cmd_verify(cfg);
        if (di->parsed()) return cmd_dims(cfg, max_sum);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
