#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "adgame/construct.hpp"

using namespace adgame;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

int cmd_analyze(const std::string& graph_path) {
    Graph g = load_graph(graph_path);
    int beta_prime = (int)minimum_edge_cover(g).size();
    std::cout << "vertices " << g.vertex_count() << "\n"
              << "edges " << g.edges().size() << "\n"
              << "beta_prime " << beta_prime << "\n"
              << "perfect_matching " << (has_perfect_matching(g) ? "true" : "false") << "\n";
    for (int d = 1; d <= g.vertex_count(); ++d)
        std::cout << "regime " << d << " " << regime_name(classify_regime(g, d).kind) << "\n";
    return 0;
}

int cmd_min_edge_cover(const std::string& graph_path) {
    Graph g = load_graph(graph_path);
    for (const Edge& e : minimum_edge_cover(g))
        std::cout << e.first << " " << e.second << "\n";
    return 0;
}

int cmd_fpm(const std::string& graph_path) {
    Graph g = load_graph(graph_path);
    auto f = fractional_perfect_matching(g);
    if (!f) {
        std::cout << "NONE\n";
        return 1;
    }
    std::cout << format_fractional_matching(*f);
    return 0;
}

int cmd_reduce(const std::string& graph_path, const std::string& matching_path) {
    Graph g = load_graph(graph_path);
    FractionalMatching f = parse_fractional_matching(g, slurp(matching_path));
    if (!f.is_perfect(g)) throw std::runtime_error("matching is not perfect");
    std::cout << format_fractional_matching(canonicalize_fpm(g, f));
    return 0;
}

int cmd_partition(const std::string& graph_path, int delta, int bound) {
    Graph g = load_graph(graph_path);
    auto found = find_delta_partitionable(g, delta, bound);
    if (!found) {
        std::cout << "NONE\n";
        return 1;
    }
    for (const EdgeSet& part : found->second.partites) {
        std::cout << "partite";
        for (const Edge& e : part) std::cout << " " << e.first << " " << e.second;
        std::cout << "\n";
    }
    return 0;
}

int cmd_construct_ne(const std::string& graph_path, int alpha, int delta, bool pure,
                     int bound) {
    Graph g = load_graph(graph_path);
    if (pure) {
        PureProfile s = pure_vertex_balanced_ne(g, alpha, delta); // throws on bad input
        std::cout << format_profile(to_mixed(g, s));
        return 0;
    }
    Regime regime = classify_regime(g, delta);
    auto profile = construct_defense_optimal(g, alpha, delta, bound);
    if (!profile) {
        if (regime.kind == RegimeKind::Many)
            std::cout << "NONE many-defenders regime\n";
        else
            std::cout << "NONE no delta-partitionable fractional perfect matching\n";
        return 1;
    }
    std::cout << format_profile(*profile);
    return 0;
}

int cmd_verify_ne(const std::string& graph_path, const std::string& profile_path) {
    Graph g = load_graph(graph_path);
    MixedProfile p = parse_profile(g, slurp(profile_path));
    NeReport r = verify_ne(g, p);
    std::cout << format_ne_report(r);
    return r.is_ne ? 0 : 1;
}

int cmd_classify(const std::string& graph_path, int delta) {
    Graph g = load_graph(graph_path);
    Regime regime = classify_regime(g, delta);
    std::cout << "regime " << regime_name(regime.kind) << "\n"
              << "beta_prime " << regime.beta_prime << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"attacker-defender graph game toolkit"};
    app.require_subcommand(1);

    std::string graph_path, matching_path, profile_path;
    int alpha = 1, delta = 1;
    int bound = -1; // -1 means the per-operation default
    bool pure = false;
    app.add_option("--bound", bound, "exact-search vertex bound override");

    auto* analyze = app.add_subcommand("analyze", "graph summary and regime table");
    analyze->add_option("graph", graph_path)->required();

    auto* mec = app.add_subcommand("min-edge-cover", "minimum edge cover edges");
    mec->add_option("graph", graph_path)->required();

    auto* fpm = app.add_subcommand("fpm", "fractional perfect matching or NONE");
    fpm->add_option("graph", graph_path)->required();

    auto* reduce = app.add_subcommand("reduce", "canonicalize a fractional perfect matching");
    reduce->add_option("graph", graph_path)->required();
    reduce->add_option("--matching", matching_path, "matching file")->required();

    auto* partition = app.add_subcommand("partition", "delta-partitionable FPM or NONE");
    partition->add_option("graph", graph_path)->required();
    partition->add_option("--delta", delta)->required();

    auto* construct = app.add_subcommand("construct-ne", "defense-optimal equilibrium or NONE");
    construct->add_option("graph", graph_path)->required();
    construct->add_option("--alpha", alpha)->required();
    construct->add_option("--delta", delta)->required();
    construct->add_flag("--pure", pure, "pure vertex-balanced construction");

    auto* verify = app.add_subcommand("verify-ne", "verify a profile file");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("--profile", profile_path, "profile file")->required();

    auto* classify = app.add_subcommand("classify", "defender regime for delta");
    classify->add_option("graph", graph_path)->required();
    classify->add_option("--delta", delta)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(graph_path);
        if (*mec) return cmd_min_edge_cover(graph_path);
        if (*fpm) return cmd_fpm(graph_path);
        if (*reduce) return cmd_reduce(graph_path, matching_path);
        if (*partition) return cmd_partition(graph_path, delta, bound < 0 ? 16 : bound);
        if (*construct) return cmd_construct_ne(graph_path, alpha, delta, pure,
                                                bound < 0 ? 16 : bound);
        if (*verify) return cmd_verify_ne(graph_path, profile_path);
        if (*classify) return cmd_classify(graph_path, delta);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
