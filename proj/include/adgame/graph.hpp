#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace adgame {

// Edges are stored with the smaller endpoint first so that the natural
// pair ordering is the canonical edge order used for tie-breaking.
using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;
using VertexSet = std::set<int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// A cycle as its vertex sequence v_1..v_n; the edge back to v_1 is implicit.
struct Cycle {
    std::vector<int> vertices;

    bool odd() const { return vertices.size() % 2 == 1; }
    EdgeSet edges() const;
};

// Simple undirected graph, no isolated vertices, vertices 0..n-1.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edge_list);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    // Sorted ascending; iteration over it is the canonical neighbor order.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    EdgeSet edge_set() const { return EdgeSet(edges_.begin(), edges_.end()); }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Format: header "n m", then m lines "u v". '#' starts a comment line.
Graph parse_graph(const std::string& text);

VertexSet vertices_of(const EdgeSet& es);

// Even cycle of the subgraph induced by restrict, or absent.
std::optional<Cycle> find_even_cycle(const Graph& g, const EdgeSet& restrict);

// Odd cycle with a branch vertex of induced degree >= 3, or absent when
// every odd cycle of the induced subgraph is an isolated component.
std::optional<std::pair<Cycle, int>>
find_non_isolated_odd_cycle(const Graph& g, const EdgeSet& restrict);

bool is_edge_cover(const Graph& g, const EdgeSet& f);
bool is_vertex_cover(const Graph& g, const EdgeSet& restrict, const VertexSet& s);

} // namespace adgame
