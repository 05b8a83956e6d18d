#pragma once

#include <map>
#include <optional>
#include <string>

#include "adgame/graph.hpp"
#include "adgame/rational.hpp"

namespace adgame {

// Edge weighting f: E -> [0,1] with per-vertex incident sums <= 1.
// Only strictly positive weights are stored, so the key set is E(f).
struct FractionalMatching {
    std::map<Edge, Rat> weights;

    Rat weight(const Edge& e) const {
        auto it = weights.find(e);
        return it == weights.end() ? Rat(0) : it->second;
    }
    EdgeSet support() const {
        EdgeSet es;
        for (const auto& [e, w] : weights) es.insert(e);
        return es;
    }
    std::map<int, Rat> vertex_sums(int n) const;
    bool is_perfect(const Graph& g) const;
};

// Validity = edge membership, weights in (0,1], vertex sums <= 1.
bool is_valid_fractional_matching(const Graph& g, const FractionalMatching& f);

EdgeSet maximum_matching(const Graph& g);

// Minimum edge cover, size beta'(G); maximum matching plus one edge per
// exposed vertex (Gallai).
EdgeSet minimum_edge_cover(const Graph& g);

// Exact exponential search over vertex subsets of the restricted subgraph.
VertexSet minimum_vertex_cover_exact(const Graph& g, const EdgeSet& restrict,
                                     int bound = 20);

// Half-integral FPM via a perfect matching of the bipartite double cover,
// or absent when none exists.
std::optional<FractionalMatching> fractional_perfect_matching(const Graph& g);

// Rewrites f into an equivalent matching (identical vertex sums) whose
// support has no even cycle. Support only shrinks.
FractionalMatching eliminate_even_cycles(const Graph& g, const FractionalMatching& f);

// Requires a fractional perfect matching with even-cycle-free support;
// output is equivalent with no non-isolated odd cycle in its support.
FractionalMatching isolate_odd_cycles(const Graph& g, const FractionalMatching& f);

// Both reductions in sequence. Every support component of the result is a
// single weight-1 edge or an isolated odd cycle of weight-1/2 edges.
FractionalMatching canonicalize_fpm(const Graph& g, const FractionalMatching& f);

// Text format: one line "u v p/q" per supported edge; omitted edges are zero.
FractionalMatching parse_fractional_matching(const Graph& g, const std::string& text);
std::string format_fractional_matching(const FractionalMatching& f);

} // namespace adgame
