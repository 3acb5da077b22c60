#include "posetdim/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetdim/decomposition.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/io.hpp"
#include "posetdim/realizer.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string td_path;
    std::string td_out;
    std::string out_path;
    Node root = 0;
    std::string child_order = "asc";
    std::string expansion = "asc";
    std::size_t d_max = kDefaultMaxDimension;
    std::uint64_t seed = 0;
    double density = 0.5;
    bool json = false;
    std::string family;
    std::size_t size = 0;
    std::uint64_t t = 0;
    std::uint64_t h = 0;
};

const std::map<std::string, ChildOrder> kChildOrders{{"asc", ChildOrder::ascending},
                                                     {"desc", ChildOrder::descending}};
const std::map<std::string, ExpansionOrder> kExpansionOrders{{"asc", ExpansionOrder::ascending},
                                                             {"desc", ExpansionOrder::descending}};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

// Decomposition of the cover graph: from file, or the exact oracle.
TreeDecomposition decomposition_for(const Poset& poset, const std::string& td_path) {
    if (!td_path.empty()) return load_td(td_path);
    return exact_treewidth_small(cover_graph(poset)).decomposition;
}

int cmd_realize(const RunConfig& cfg, std::ostream& out) {
    const Poset poset = load_poset(cfg.input);
    const TreeDecomposition td = decomposition_for(poset, cfg.td_path);
    ModelOptions options;
    options.root = cfg.root;
    options.child_order = kChildOrders.at(cfg.child_order);
    options.expansion = kExpansionOrders.at(cfg.expansion);

    const Construction c = build_realizer(poset, td, options);
    std::ostringstream realizer_text;
    write_realizer(realizer_text, c.realizer, poset.size());
    if (!cfg.out_path.empty()) write_file(cfg.out_path, realizer_text.str());

    if (cfg.json) {
        auto j = report_to_json(c.report);
        if (cfg.out_path.empty()) {
            auto& arr = j["realizer"] = nlohmann::ordered_json::array();
            for (const auto& ext : c.realizer.extensions) arr.push_back(ext.order);
        }
        out << j.dump() << '\n';
    } else {
        write_report_text(out, c.report);
        if (cfg.out_path.empty()) out << realizer_text.str();
    }
    return c.report.verified ? kOk : kInvalidInput;
}

int cmd_dim_exact(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Poset poset = load_poset(cfg.input);
    DimensionCertificate cert;
    try {
        cert = exact_dimension(poset, cfg.d_max);
    } catch (const DimensionNotFound& e) {
        if (cfg.json)
            out << nlohmann::ordered_json{{"dimension", nullptr}, {"d_max", e.d_max()}}.dump() << '\n';
        err << "dimension exceeds " << e.d_max() << '\n';
        return kDimensionNotFound;
    }
    if (cfg.json) {
        nlohmann::ordered_json j;
        j["dimension"] = cert.dimension;
        auto& parts = j["partition"] = nlohmann::ordered_json::array();
        for (const auto& part : cert.partition) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& [x, y] : part) arr.push_back({x, y});
            parts.push_back(std::move(arr));
        }
        auto& exts = j["extensions"] = nlohmann::ordered_json::array();
        for (const auto& ext : cert.extensions) exts.push_back(ext.order);
        out << j.dump() << '\n';
    } else {
        out << cert.dimension << '\n';
        Realizer r{cert.extensions};
        write_realizer(out, r, poset.size());
    }
    return kOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    FamilySpec spec;
    spec.family = parse_family(cfg.family);
    spec.size = cfg.size;
    spec.seed = cfg.seed;
    spec.density = cfg.density;
    const Poset poset = generate(spec);

    std::ostringstream text;
    write_poset(text, poset);
    if (cfg.out_path.empty())
        out << text.str();
    else
        write_file(cfg.out_path, text.str());

    if (!cfg.td_out.empty()) {
        TreeDecomposition td;
        if (spec.family == Family::kelly)
            td = kelly_path_decomposition(spec.size);
        else if (spec.family == Family::tree || spec.family == Family::chain ||
                 spec.family == Family::antichain)
            td = forest_decomposition(cover_graph(poset));
        else
            td = exact_treewidth_small(cover_graph(poset)).decomposition;
        std::ostringstream td_text;
        write_td(td_text, td);
        write_file(cfg.td_out, td_text.str());
    }
    return kOk;
}

// Accepts a PACE graph or a poset file (checked against its cover graph).
Graph load_graph_or_cover(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string first;
    while (std::getline(in, first)) {
        auto pos = first.find_first_not_of(" \t\r");
        if (pos == std::string::npos || first[pos] == 'c' || first[pos] == '#') continue;
        break;
    }
    std::istringstream fields(first);
    std::string p, tag;
    fields >> p >> tag;
    if (p == "p" && tag == "tw") return load_graph_gr(path);
    return cover_graph(load_poset(path));
}

int cmd_check_td(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph_or_cover(cfg.input);
    const TreeDecomposition td = load_td(cfg.td_path);
    try {
        const WidthReport r = validate_td(g, td);
        if (cfg.json)
            out << nlohmann::ordered_json{{"valid", true},
                                          {"width", r.width},
                                          {"node_count", r.node_count},
                                          {"is_path", r.is_path}}
                       .dump()
                << '\n';
        else
            out << "valid width " << r.width << " nodes " << r.node_count
                << (r.is_path ? " path" : " tree") << '\n';
        return kOk;
    } catch (const InvalidDecomposition& e) {
        if (cfg.json)
            out << nlohmann::ordered_json{{"valid", false}, {"error", e.what()}, {"witness", e.witness()}}
                       .dump()
                << '\n';
        err << "invalid decomposition: " << e.what() << '\n';
        return kInvalidInput;
    }
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
    const double b = theoretical_bound_log2(cfg.t, cfg.h);
    if (cfg.json)
        out << nlohmann::ordered_json{{"t", cfg.t}, {"h", cfg.h}, {"bound_log2", b}}.dump() << '\n';
    else
        out << std::setprecision(12) << b << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Realizers of posets from tree decompositions of their cover graphs", "posetdim"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* realize = app.add_subcommand("realize", "build and verify a realizer");
    realize->add_option("poset", cfg.input, "poset file")->required()->check(CLI::ExistingFile);
    realize->add_option("--td", cfg.td_path, "PACE .td decomposition of the cover graph")
        ->check(CLI::ExistingFile);
    realize->add_option("--root", cfg.root, "decomposition node used as root (0-based)");
    realize->add_option("--child-order", cfg.child_order, "asc|desc")
        ->check(CLI::IsMember({"asc", "desc"}));
    realize->add_option("--expansion", cfg.expansion, "asc|desc")->check(CLI::IsMember({"asc", "desc"}));
    realize->add_option("--out", cfg.out_path, "realizer output file");
    realize->add_flag("--json", cfg.json, "JSON report");

    auto* dim = app.add_subcommand("dim-exact", "exact dimension by exhaustive search");
    dim->add_option("poset", cfg.input, "poset file")->required()->check(CLI::ExistingFile);
    dim->add_option("--dmax", cfg.d_max, "largest dimension tried")->check(CLI::PositiveNumber);
    dim->add_flag("--json", cfg.json, "JSON output");

    auto* gen = app.add_subcommand("gen", "generate a poset family");
    gen->add_option("family", cfg.family, "standard|kelly|grid|chain|antichain|random|tree")
        ->required()
        ->check(CLI::IsMember({"standard", "kelly", "grid", "chain", "antichain", "random", "tree"}));
    gen->add_option("size", cfg.size, "d for standard/kelly, n otherwise")->required();
    gen->add_option("--seed", cfg.seed, "random seed");
    gen->add_option("--density", cfg.density, "relation density for random")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--out", cfg.out_path, "poset output file");
    gen->add_option("--td-out", cfg.td_out, "write a decomposition of the cover graph");

    auto* check = app.add_subcommand("check-td", "validate a tree decomposition");
    check->add_option("graph", cfg.input, "PACE .gr graph or poset file")->required()->check(CLI::ExistingFile);
    check->add_option("td", cfg.td_path, "PACE .td file")->required()->check(CLI::ExistingFile);
    check->add_flag("--json", cfg.json, "JSON output");

    auto* bound = app.add_subcommand("bound", "log2 of the dimension bound for width t, height h");
    bound->add_option("width", cfg.t, "decomposition width t")->required();
    bound->add_option("height", cfg.h, "poset height h")->required()->check(CLI::PositiveNumber);
    bound->add_flag("--json", cfg.json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*realize) return cmd_realize(cfg, out);
        if (*dim) return cmd_dim_exact(cfg, out, err);
        if (*gen) return cmd_gen(cfg, out);
        if (*check) return cmd_check_td(cfg, out, err);
        if (*bound) return cmd_bound(cfg, out);
    } catch (const LemmaViolation& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kLemmaViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace posetdim::cli
