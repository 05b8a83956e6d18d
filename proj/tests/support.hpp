#pragma once

// Shared fixtures, independent brute-force oracles, and random instance
// generators. Oracles deliberately avoid the library's algorithms so that
// agreement is meaningful.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "adgame/construct.hpp"

namespace support {

using namespace adgame;

// --- fixtures ---

inline Graph k2() { return parse_graph("2 1\n0 1\n"); }
inline Graph p3() { return parse_graph("3 2\n0 1\n1 2\n"); }
inline Graph c3() { return parse_graph("3 3\n0 1\n1 2\n0 2\n"); }
inline Graph c4() { return parse_graph("4 4\n0 1\n1 2\n2 3\n0 3\n"); }
inline Graph c6() { return parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n"); }
// Two triangles {0,1,2} and {3,4,5} joined by the bridge (2,3).
inline Graph tt6() { return parse_graph("6 7\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n2 3\n"); }
// Star-like tree: center 3 with leaves 4..7, path 3-0-1-2.
inline Graph star8() { return parse_graph("8 7\n0 1\n0 3\n1 2\n3 4\n3 5\n3 6\n3 7\n"); }

// --- cycle enumeration ---

// All simple cycles of the restricted subgraph, each listed once (anchored at
// its smallest vertex, second vertex smaller than the last).
inline std::vector<std::vector<int>> all_cycles(const Graph& g, const EdgeSet& restrict) {
    std::vector<std::vector<int>> out;
    auto has = [&](int u, int v) { return restrict.count(make_edge(u, v)) > 0; };
    VertexSet verts = vertices_of(restrict);
    std::vector<int> path;
    std::vector<bool> used(g.vertex_count(), false);
    std::function<void(int)> extend = [&](int start) {
        int cur = path.back();
        for (int w : g.neighbors(cur)) {
            if (!has(cur, w) || w < start) continue;
            if (w == start && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(path);
                continue;
            }
            if (used[w]) continue;
            used[w] = true;
            path.push_back(w);
            extend(start);
            path.pop_back();
            used[w] = false;
        }
    };
    for (int v : verts) {
        path = {v};
        used[v] = true;
        extend(v);
        used[v] = false;
    }
    return out;
}

// --- brute-force covers and matchings (subset enumeration) ---

inline int brute_max_matching_size(const Graph& g) {
    const auto& es = g.edges();
    int m = (int)es.size(), best = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        uint32_t touched = 0;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            if (mask & (uint32_t(1) << i)) {
                uint32_t ends =
                    (uint32_t(1) << es[i].first) | (uint32_t(1) << es[i].second);
                if (touched & ends) ok = false;
                touched |= ends;
            }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

inline int brute_min_edge_cover_size(const Graph& g) {
    const auto& es = g.edges();
    int m = (int)es.size(), best = m + 1;
    uint32_t all = (uint32_t(1) << g.vertex_count()) - 1;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        uint32_t touched = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (uint32_t(1) << i))
                touched |= (uint32_t(1) << es[i].first) | (uint32_t(1) << es[i].second);
        if (touched == all) best = std::min(best, std::popcount(mask));
    }
    return best;
}

inline int brute_min_vertex_cover_size(const Graph& g, const EdgeSet& restrict) {
    int n = g.vertex_count(), best = n;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (uint32_t(1) << v)) s.insert(v);
        if (is_vertex_cover(g, restrict, s)) best = std::min(best, std::popcount(mask));
    }
    return best;
}

// --- structural feasibility oracles ---

// Does this vertex set carry a Hamiltonian cycle (within the set)?
inline bool has_ham_cycle(const Graph& g, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    std::vector<int> perm(vs.begin() + 1, vs.end());
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = g.has_edge(vs[0], perm.front()) && g.has_edge(vs[0], perm.back());
        for (size_t i = 0; ok && i + 1 < perm.size(); ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Can `verts` be partitioned into adjacent pairs and odd cycles? This is the
// brute-force check that a vertex group supports disjoint single edges plus
// odd cycles spanning it.
inline bool spannable(const Graph& g, std::vector<int> verts) {
    if (verts.empty()) return true;
    std::sort(verts.begin(), verts.end());
    int v = verts[0];
    std::vector<int> rest(verts.begin() + 1, verts.end());
    int r = (int)rest.size();
    for (uint32_t mask = 0; mask < (uint32_t(1) << r); ++mask) {
        int sz = std::popcount(mask) + 1;
        if (sz != 2 && (sz < 3 || sz % 2 == 0)) continue;
        std::vector<int> block{v}, remain;
        for (int i = 0; i < r; ++i)
            ((mask >> i) & 1 ? block : remain).push_back(rest[i]);
        bool ok = sz == 2 ? g.has_edge(block[0], block[1]) : has_ham_cycle(g, block);
        if (ok && spannable(g, remain)) return true;
    }
    return false;
}

inline bool oracle_fpm_exists(const Graph& g) {
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return spannable(g, all);
}

// Independent check for a delta-partitionable FPM: enumerate assignments of
// vertices to delta groups of size |V|/delta, each group spannable.
inline bool oracle_delta_partitionable(const Graph& g, int delta) {
    int n = g.vertex_count();
    if (delta < 1 || n % delta != 0) return false;
    int k = n / delta;
    std::vector<int> group(n, -1);
    std::function<bool(int)> assign = [&](int opened) -> bool {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (group[u] < 0) { v = u; break; }
        if (v < 0) {
            for (int j = 0; j < delta; ++j) {
                std::vector<int> members;
                for (int u = 0; u < n; ++u)
                    if (group[u] == j) members.push_back(u);
                if (!spannable(g, members)) return false;
            }
            return true;
        }
        int limit = std::min(opened + 1, delta);
        for (int j = 0; j < limit; ++j) {
            int count = 0;
            for (int u = 0; u < n; ++u)
                if (group[u] == j) ++count;
            if (count >= k) continue;
            group[v] = j;
            if (assign(std::max(opened, j + 1))) return true;
            group[v] = -1;
        }
        return false;
    };
    return assign(0);
}

// --- literal subset-sum forms of the conditional expected proportion ---

inline Rat oracle_cep_direct(const std::vector<Rat>& q) {
    int m = (int)q.size();
    Rat total = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        Rat prod = 1;
        for (int i = 0; i < m; ++i)
            prod *= (mask >> i) & 1 ? q[i] : 1 - q[i];
        total += prod / Rat(std::popcount(mask) + 1);
    }
    return total;
}

inline Rat oracle_cep_alternating(const std::vector<Rat>& q) {
    int m = (int)q.size();
    Rat total = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        Rat prod = 1;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) prod *= q[i];
        int l = std::popcount(mask) + 1;
        total += Rat(l % 2 == 1 ? 1 : -1, l) * prod;
    }
    return total;
}

// --- random instances ---

inline int rand_int(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat rand_rat01(std::mt19937& rng, int max_den = 12) {
    int q = rand_int(rng, 1, max_den);
    int p = rand_int(rng, 0, q);
    return Rat(p, q);
}

// Connected graph on n vertices: random spanning tree plus random extras.
inline Graph random_connected_graph(std::mt19937& rng, int n, int extra_percent = 30) {
    std::vector<Edge> edges;
    EdgeSet seen;
    for (int v = 1; v < n; ++v) {
        Edge e = make_edge(v, rand_int(rng, 0, v - 1));
        edges.push_back(e);
        seen.insert(e);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Edge e{u, v};
            if (!seen.count(e) && rand_int(rng, 0, 99) < extra_percent) {
                edges.push_back(e);
                seen.insert(e);
            }
        }
    return Graph(n, edges);
}

// Exact random distribution over the given keys (positive entries, sum 1).
template <typename Key>
std::map<Key, Rat> random_distribution(std::mt19937& rng, const std::vector<Key>& keys) {
    std::vector<int> w(keys.size());
    int total = 0;
    for (auto& x : w) {
        x = rand_int(rng, 0, 6);
        total += x;
    }
    if (total == 0) {
        w[rand_int(rng, 0, (int)w.size() - 1)] = 1;
        total = 1;
    }
    std::map<Key, Rat> dist;
    for (size_t i = 0; i < keys.size(); ++i)
        if (w[i] > 0) dist[keys[i]] += Rat(w[i], total);
    return dist;
}

inline MixedProfile random_profile(std::mt19937& rng, const Graph& g, int alpha, int delta) {
    std::vector<int> verts(g.vertex_count());
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<std::map<int, Rat>> attackers;
    for (int a = 0; a < alpha; ++a) attackers.push_back(random_distribution(rng, verts));
    std::vector<std::map<Edge, Rat>> defenders;
    for (int d = 0; d < delta; ++d) defenders.push_back(random_distribution(rng, g.edges()));
    return make_mixed_profile(g, std::move(attackers), std::move(defenders));
}

// Randomized FPM: start from the half-integral one and push exact random
// amounts around even cycles of the whole graph, which preserves all vertex
// sums. Returns absent when the graph has no FPM.
inline std::optional<FractionalMatching> random_fpm(std::mt19937& rng, const Graph& g,
                                                    int rounds = 8) {
    auto f = fractional_perfect_matching(g);
    if (!f) return std::nullopt;
    for (int round = 0; round < rounds; ++round) {
        // Random even cycle: search a random edge subset so different rounds
        // perturb along different cycles.
        EdgeSet subset;
        for (const Edge& e : g.edges())
            if (rand_int(rng, 0, 2) > 0) subset.insert(e);
        auto found = find_even_cycle(g, subset);
        if (!found) continue;
        const auto& cyc = found->vertices;
        // Alternating signs around the cycle; the shift must keep every
        // weight in [0,1].
        Rat lo = 0, hi = 1;
        for (size_t i = 0; i < cyc.size(); ++i) {
            Edge e = make_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
            Rat w = f->weight(e);
            if (i % 2 == 0) {
                hi = std::min(hi, Rat(1 - w)); // + direction
                lo = std::max(lo, Rat(-w));
            } else {
                hi = std::min(hi, w);
                lo = std::max(lo, Rat(w - 1));
            }
        }
        if (lo >= hi) continue;
        Rat eps = lo + (hi - lo) * rand_rat01(rng);
        if (eps == 0) continue;
        for (size_t i = 0; i < cyc.size(); ++i) {
            Edge e = make_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
            Rat w = f->weight(e) + (i % 2 == 0 ? eps : -eps);
            if (w == 0)
                f->weights.erase(e);
            else
                f->weights[e] = w;
        }
    }
    return f;
}

// Support subgraph has no pendant edge: no edge with exactly one endpoint of
// degree 1.
inline bool support_has_pendant_edge(const FractionalMatching& f) {
    std::map<int, int> deg;
    for (const auto& [e, w] : f.weights) {
        deg[e.first]++;
        deg[e.second]++;
    }
    for (const auto& [e, w] : f.weights)
        if ((deg[e.first] == 1) != (deg[e.second] == 1)) return true;
    return false;
}

// Support components are single weight-1 edges or odd cycles of weight 1/2.
inline bool canonical_structure(const Graph& g, const FractionalMatching& f) {
    EdgeSet support = f.support();
    VertexSet verts = vertices_of(support);
    std::map<int, std::vector<int>> adj;
    for (const auto& e : support) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    VertexSet done;
    for (int v : verts) {
        if (done.count(v)) continue;
        std::vector<int> comp;
        std::vector<int> stack{v};
        done.insert(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : adj[u])
                if (done.insert(w).second) stack.push_back(w);
        }
        size_t edge_count = 0;
        for (int u : comp) edge_count += adj[u].size();
        edge_count /= 2;
        if (comp.size() == 2 && edge_count == 1) {
            if (f.weight(make_edge(comp[0], comp[1])) != 1) return false;
        } else if (edge_count == comp.size() && comp.size() % 2 == 1 && comp.size() >= 3) {
            for (int u : comp) {
                if (adj[u].size() != 2) return false;
                for (int w : adj[u])
                    if (f.weight(make_edge(u, w)) != Rat(1, 2)) return false;
            }
        } else {
            return false;
        }
    }
    return true;
}

inline bool equivalent(const Graph& g, const FractionalMatching& a,
                       const FractionalMatching& b) {
    return a.vertex_sums(g.vertex_count()) == b.vertex_sums(g.vertex_count());
}

inline bool support_contained(const FractionalMatching& inner,
                              const FractionalMatching& outer) {
    EdgeSet os = outer.support();
    for (const auto& [e, w] : inner.weights)
        if (!os.count(e)) return false;
    return true;
}

} // namespace support
