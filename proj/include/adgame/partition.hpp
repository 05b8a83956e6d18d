#pragma once

#include <optional>
#include <vector>

#include "adgame/matching.hpp"

namespace adgame {

// Vertex-disjoint partites E_1..E_delta of an FPM support; each partite
// spans |V|/delta vertices and carries weight |V|/(2 delta).
struct EdgePartition {
    std::vector<EdgeSet> partites;
};

// True iff the partites are vertex-disjoint and each weight sum is exactly
// |V|/(2 delta). Throws if p is not a partition of E(f) or f is not an FPM.
bool verify_partitionable(const Graph& g, const FractionalMatching& f,
                          const EdgePartition& p, int delta);

// Exact search for a delta-partitionable FPM: delta vertex-disjoint groups,
// each spanned by disjoint single edges and odd cycles over |V|/delta
// vertices. NP-complete in general, hence the hard vertex bound.
std::optional<std::pair<FractionalMatching, EdgePartition>>
find_delta_partitionable(const Graph& g, int delta, int bound = 16);

std::optional<std::vector<VertexSet>> partition_into_triangles(const Graph& g,
                                                               int bound = 16);

bool has_perfect_matching(const Graph& g);

} // namespace adgame
