#include "adgame/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace adgame {

Regime classify_regime(const Graph& g, int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    int beta_prime = (int)minimum_edge_cover(g).size();
    if (delta >= beta_prime) return {RegimeKind::TooMany, beta_prime};
    if (2 * delta <= g.vertex_count()) return {RegimeKind::Few, beta_prime};
    return {RegimeKind::Many, beta_prime};
}

const char* regime_name(RegimeKind k) {
    switch (k) {
        case RegimeKind::Few: return "few-defenders";
        case RegimeKind::Many: return "many-defenders";
        case RegimeKind::TooMany: return "too-many-defenders";
    }
    return "?";
}

MixedProfile construct_from_partitionable(const Graph& g, const FractionalMatching& f,
                                          const EdgePartition& p, int alpha) {
    int delta = (int)p.partites.size();
    if (alpha < 1) throw std::invalid_argument("alpha must be positive");
    if (!verify_partitionable(g, f, p, delta))
        throw std::invalid_argument("not a delta-partitionable FPM");
    int n = g.vertex_count();
    std::map<int, Rat> uniform;
    for (int v = 0; v < n; ++v) uniform[v] = Rat(1, n);
    std::vector<std::map<int, Rat>> attackers(alpha, uniform);
    std::vector<std::map<Edge, Rat>> defenders;
    for (const auto& part : p.partites) {
        std::map<Edge, Rat> dist;
        for (const Edge& e : part) dist[e] = Rat(2 * delta, n) * f.weight(e);
        defenders.push_back(std::move(dist));
    }
    return make_mixed_profile(g, std::move(attackers), std::move(defenders));
}

std::optional<MixedProfile> construct_perfect_matching_ne(const Graph& g, int alpha,
                                                          int delta) {
    if (alpha < 1 || delta < 1) throw std::invalid_argument("alpha and delta must be positive");
    int n = g.vertex_count();
    if (2 * delta > n) throw std::invalid_argument("delta exceeds |V|/2");
    EdgeSet m = maximum_matching(g);
    if (2 * (int)m.size() != n) throw std::invalid_argument("no perfect matching");
    if (n % (2 * delta) != 0) return std::nullopt;
    int block = n / (2 * delta);
    std::vector<Edge> edges(m.begin(), m.end()); // canonical order
    std::map<int, Rat> uniform;
    for (int v = 0; v < n; ++v) uniform[v] = Rat(1, n);
    std::vector<std::map<int, Rat>> attackers(alpha, uniform);
    std::vector<std::map<Edge, Rat>> defenders;
    for (int j = 0; j < delta; ++j) {
        std::map<Edge, Rat> dist;
        for (int i = 0; i < block; ++i) dist[edges[j * block + i]] = Rat(2 * delta, n);
        defenders.push_back(std::move(dist));
    }
    return make_mixed_profile(g, std::move(attackers), std::move(defenders));
}

namespace {

// Defender multiplicities |D(v)| of the round-robin assignment onto the
// canonical minimum edge cover. Sum over v is 2 delta.
std::pair<std::vector<Edge>, std::vector<int>>
round_robin_cover(const Graph& g, int delta) {
    EdgeSet cover = minimum_edge_cover(g);
    if (delta < (int)cover.size())
        throw std::invalid_argument("delta below beta'(G)");
    std::vector<Edge> ec(cover.begin(), cover.end());
    std::vector<Edge> choice(delta);
    std::vector<int> mult(g.vertex_count(), 0);
    for (int j = 0; j < delta; ++j) {
        choice[j] = ec[j % ec.size()];
        mult[choice[j].first]++;
        mult[choice[j].second]++;
    }
    return {choice, mult};
}

} // namespace

MixedProfile defender_pure_vertex_balanced_ne(const Graph& g, int alpha, int delta) {
    if (alpha < 1 || delta < 1) throw std::invalid_argument("alpha and delta must be positive");
    auto [choice, mult] = round_robin_cover(g, delta);
    std::map<int, Rat> load;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mult[v] > 0) load[v] = Rat(mult[v], 2 * delta);
    std::vector<std::map<int, Rat>> attackers(alpha, load);
    std::vector<std::map<Edge, Rat>> defenders;
    for (const Edge& e : choice) defenders.push_back({{e, Rat(1)}});
    return make_mixed_profile(g, std::move(attackers), std::move(defenders));
}

PureProfile pure_vertex_balanced_ne(const Graph& g, int alpha, int delta) {
    if (alpha < 1 || delta < 1) throw std::invalid_argument("alpha and delta must be positive");
    if (alpha % (2 * delta) != 0)
        throw std::invalid_argument("2 delta must divide alpha");
    auto [choice, mult] = round_robin_cover(g, delta);
    PureProfile s;
    s.defender_choices = choice;
    int unit = alpha / (2 * delta);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 0; i < mult[v] * unit; ++i) s.attacker_choices.push_back(v);
    return s;
}

std::optional<MixedProfile> construct_defense_optimal(const Graph& g, int alpha,
                                                      int delta, int bound) {
    Regime regime = classify_regime(g, delta);
    switch (regime.kind) {
        case RegimeKind::TooMany:
            return defender_pure_vertex_balanced_ne(g, alpha, delta);
        case RegimeKind::Many:
            return std::nullopt;
        case RegimeKind::Few: {
            auto found = find_delta_partitionable(g, delta, bound);
            if (!found) return std::nullopt;
            return construct_from_partitionable(g, found->first, found->second, alpha);
        }
    }
    return std::nullopt;
}

bool is_defender_pure_graph(const Graph& g, int delta) {
    return delta >= (int)minimum_edge_cover(g).size();
}

} // namespace adgame
