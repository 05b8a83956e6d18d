#include "adgame/graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace adgame {

EdgeSet Cycle::edges() const {
    EdgeSet es;
    size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i)
        es.insert(make_edge(vertices[i], vertices[(i + 1) % n]));
    return es;
}

Graph::Graph(int vertex_count, std::vector<Edge> edge_list) : n_(vertex_count) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    EdgeSet seen;
    for (auto& e : edge_list) {
        e = make_edge(e.first, e.second);
        if (e.first == e.second)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
        if (e.first < 0 || e.second >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.first) +
                                        "," + std::to_string(e.second) + ")");
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (int v = 0; v < n_; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        if (adj_[v].empty())
            throw std::invalid_argument("isolated vertex " + std::to_string(v));
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad header");
        } else {
            int u, v;
            if (!(ls >> u >> v))
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad edge line");
            edges.emplace_back(u, v);
        }
        std::string rest;
        if (ls >> rest)
            throw std::runtime_error("line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n < 0) throw std::runtime_error("empty graph document");
    if ((int)edges.size() != m)
        throw std::runtime_error("edge count mismatch: header says " + std::to_string(m) +
                                 ", got " + std::to_string(edges.size()));
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

VertexSet vertices_of(const EdgeSet& es) {
    VertexSet vs;
    for (const auto& e : es) {
        vs.insert(e.first);
        vs.insert(e.second);
    }
    return vs;
}

bool is_edge_cover(const Graph& g, const EdgeSet& f) {
    VertexSet covered = vertices_of(f);
    return (int)covered.size() == g.vertex_count();
}

bool is_vertex_cover(const Graph&, const EdgeSet& restrict, const VertexSet& s) {
    for (const auto& e : restrict)
        if (!s.count(e.first) && !s.count(e.second)) return false;
    return true;
}

namespace {

// Adjacency of the restricted subgraph, neighbors sorted ascending.
std::map<int, std::vector<int>> restricted_adj(const EdgeSet& restrict) {
    std::map<int, std::vector<int>> adj;
    for (const auto& e : restrict) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

// Biconnected components (blocks) of the restricted subgraph as edge sets.
std::vector<EdgeSet> blocks_of(const EdgeSet& restrict) {
    auto adj = restricted_adj(restrict);
    std::map<int, int> disc, low;
    std::vector<Edge> stack;
    std::vector<EdgeSet> blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int w : adj[u]) {
            if (!disc.count(w)) {
                stack.push_back(make_edge(u, w));
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    EdgeSet block;
                    Edge top = make_edge(u, w);
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.insert(e);
                        if (e == top) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (w != parent && disc[w] < disc[u]) {
                stack.push_back(make_edge(u, w));
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (const auto& [v, nb] : adj)
        if (!disc.count(v)) dfs(v, -1);
    // Canonical processing order: by smallest edge.
    std::sort(blocks.begin(), blocks.end(),
              [](const EdgeSet& a, const EdgeSet& b) { return *a.begin() < *b.begin(); });
    return blocks;
}

bool check_cycle(const EdgeSet& restrict, const Cycle& c) {
    size_t n = c.vertices.size();
    if (n < 3) return false;
    VertexSet seen(c.vertices.begin(), c.vertices.end());
    if (seen.size() != n) return false;
    for (size_t i = 0; i < n; ++i)
        if (!restrict.count(make_edge(c.vertices[i], c.vertices[(i + 1) % n])))
            return false;
    return true;
}

// BFS tree over `adj` from `root`; fills parent and depth maps.
void bfs_tree(const std::map<int, std::vector<int>>& adj, int root,
              std::map<int, int>& parent, std::map<int, int>& depth) {
    std::queue<int> q;
    parent[root] = -1;
    depth[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj.at(u))
            if (!depth.count(w)) {
                parent[w] = u;
                depth[w] = depth[u] + 1;
                q.push(w);
            }
    }
}

// Simple cycle through non-tree edge (u,v): paths to their LCA plus the edge.
Cycle fundamental_cycle(const std::map<int, int>& parent, const std::map<int, int>& depth,
                        int u, int v) {
    std::vector<int> pu{u}, pv{v};
    int a = u, b = v;
    while (depth.at(a) > depth.at(b)) { a = parent.at(a); pu.push_back(a); }
    while (depth.at(b) > depth.at(a)) { b = parent.at(b); pv.push_back(b); }
    while (a != b) {
        a = parent.at(a); pu.push_back(a);
        b = parent.at(b); pv.push_back(b);
    }
    // pu ends at the LCA, pv's last element duplicates it.
    std::vector<int> cyc(pu.begin(), pu.end());
    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cyc.push_back(*it);
    return Cycle{cyc};
}

// Rotate/orient so the cycle starts at its smallest vertex, moving first to
// the smaller of that vertex's two cycle neighbors. Purely cosmetic determinism.
Cycle canonical_rotation(Cycle c) {
    auto& v = c.vertices;
    size_t n = v.size();
    size_t k = std::min_element(v.begin(), v.end()) - v.begin();
    std::rotate(v.begin(), v.begin() + k, v.end());
    if (v[1] > v[n - 1]) std::reverse(v.begin() + 1, v.end());
    return c;
}

// Given odd cycle `cyc` and a path x=p_0..p_m=y whose interior avoids the
// cycle, the two arc+path cycles have lengths of opposite parity; return the
// even one. Chords are the m=1 case.
Cycle even_from_ear(const Cycle& cyc, const std::vector<int>& path) {
    int x = path.front(), y = path.back();
    const auto& cv = cyc.vertices;
    size_t n = cv.size();
    size_t ix = std::find(cv.begin(), cv.end(), x) - cv.begin();
    size_t iy = std::find(cv.begin(), cv.end(), y) - cv.begin();
    assert(ix < n && iy < n && ix != iy);
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> arc;
        size_t i = ix;
        while (true) {
            arc.push_back(cv[i]);
            if (i == iy) break;
            i = dir == 0 ? (i + 1) % n : (i + n - 1) % n;
        }
        // arc runs x..y; append path interior back from y's side to x's side.
        std::vector<int> cycle_vs = arc;
        for (size_t j = path.size() - 2; j >= 1; --j) cycle_vs.push_back(path[j]);
        if (cycle_vs.size() % 2 == 0) return Cycle{cycle_vs};
    }
    assert(false && "arc parities cannot agree");
    return {};
}

} // namespace

std::optional<Cycle> find_even_cycle(const Graph& g, const EdgeSet& restrict) {
    for (const auto& e : restrict)
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("restrict contains a non-edge");
    for (const auto& block : blocks_of(restrict)) {
        if (block.size() < 3) continue; // single edge, or nothing cyclic
        auto adj = restricted_adj(block);
        bool all_deg2 = true;
        for (const auto& [v, nb] : adj)
            if (nb.size() != 2) { all_deg2 = false; break; }
        if (all_deg2 && block.size() == adj.size()) {
            // The block is exactly one cycle; trace it.
            std::vector<int> cyc{adj.begin()->first};
            int prev = -1;
            while (true) {
                int cur = cyc.back();
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                if (nxt == cyc.front()) break;
                prev = cur;
                cyc.push_back(nxt);
            }
            if (cyc.size() % 2 == 0) {
                Cycle c = canonical_rotation(Cycle{cyc});
                assert(check_cycle(restrict, c));
                return c;
            }
            continue;
        }
        // Block carries at least two distinct cycles, so an even one exists.
        int root = adj.begin()->first;
        std::map<int, int> parent, depth;
        bfs_tree(adj, root, parent, depth);
        std::optional<Cycle> fund;
        for (const auto& e : block)
            if (parent[e.first] != e.second && parent[e.second] != e.first) {
                fund = fundamental_cycle(parent, depth, e.first, e.second);
                break;
            }
        assert(fund && "block with |E|>|V| has a non-tree edge");
        Cycle c = *fund;
        if (c.vertices.size() % 2 == 0) {
            c = canonical_rotation(c);
            assert(check_cycle(restrict, c));
            return c;
        }
        VertexSet on_cycle(c.vertices.begin(), c.vertices.end());
        EdgeSet cyc_edges = c.edges();
        // Chord case: both endpoints on the odd cycle.
        for (const auto& e : block)
            if (on_cycle.count(e.first) && on_cycle.count(e.second) && !cyc_edges.count(e)) {
                Cycle out = canonical_rotation(even_from_ear(c, {e.first, e.second}));
                assert(check_cycle(restrict, out));
                return out;
            }
        // Ear case: edge (x,w) leaving the cycle; BFS in block minus x back to
        // the cycle yields a path internally disjoint from it.
        for (const auto& e : block) {
            int x, w;
            if (on_cycle.count(e.first) && !on_cycle.count(e.second)) x = e.first, w = e.second;
            else if (on_cycle.count(e.second) && !on_cycle.count(e.first)) x = e.second, w = e.first;
            else continue;
            std::map<int, int> par;
            par[w] = -1;
            std::queue<int> q;
            q.push(w);
            int y = -1;
            while (!q.empty() && y < 0) {
                int u = q.front();
                q.pop();
                for (int z : adj[u]) {
                    if (z == x || par.count(z)) continue;
                    par[z] = u;
                    if (on_cycle.count(z)) { y = z; break; }
                    q.push(z);
                }
            }
            assert(y >= 0 && "biconnected block must reconnect the ear");
            std::vector<int> path{y};
            for (int u = par[y]; u != -1; u = par[u]) path.push_back(u);
            path.push_back(x);
            std::reverse(path.begin(), path.end()); // x, w, ..., y
            Cycle out = canonical_rotation(even_from_ear(c, path));
            assert(check_cycle(restrict, out));
            return out;
        }
        assert(false && "block larger than its cycle must have a chord or an ear");
    }
    return std::nullopt;
}

std::optional<std::pair<Cycle, int>>
find_non_isolated_odd_cycle(const Graph& g, const EdgeSet& restrict) {
    for (const auto& e : restrict)
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("restrict contains a non-edge");
    auto adj = restricted_adj(restrict);
    std::map<int, int> comp;
    int comp_id = 0;
    for (const auto& [start, nb0] : adj) {
        if (comp.count(start)) continue;
        int id = comp_id++;
        std::vector<int> members;
        std::queue<int> q;
        comp[start] = id;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            members.push_back(u);
            for (int w : adj[u])
                if (!comp.count(w)) { comp[w] = id; q.push(w); }
        }
        size_t edge_count = 0;
        bool all_deg2 = true;
        for (int u : members) {
            edge_count += adj[u].size();
            if (adj[u].size() != 2) all_deg2 = false;
        }
        edge_count /= 2;
        if (all_deg2 && edge_count == members.size())
            continue; // bare cycle component: its one cycle is isolated
        // Any odd cycle here has a vertex of degree >= 3, else it would be a
        // component of its own. Find one via BFS parity.
        std::map<int, int> parent, depth;
        bfs_tree(adj, *std::min_element(members.begin(), members.end()), parent, depth);
        std::optional<Cycle> odd;
        for (int u : members) {
            for (int w : adj[u]) {
                if (u > w) continue;
                if (parent[u] == w || parent[w] == u) continue;
                if ((depth[u] + depth[w]) % 2 == 0) {
                    odd = fundamental_cycle(parent, depth, u, w);
                    break;
                }
            }
            if (odd) break;
        }
        if (!odd) continue; // bipartite component: no odd cycle at all
        Cycle c = canonical_rotation(*odd);
        assert(check_cycle(restrict, c) && c.odd());
        int v0 = -1;
        for (int v : c.vertices)
            if (adj[v].size() >= 3 && (v0 < 0 || v < v0)) v0 = v;
        assert(v0 >= 0 && "odd cycle inside a larger component has a branch vertex");
        return std::make_pair(c, v0);
    }
    return std::nullopt;
}

} // namespace adgame
