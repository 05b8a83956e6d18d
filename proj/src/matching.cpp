#include "adgame/matching.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace adgame {

std::map<int, Rat> FractionalMatching::vertex_sums(int n) const {
    std::map<int, Rat> sums;
    for (int v = 0; v < n; ++v) sums[v] = 0;
    for (const auto& [e, w] : weights) {
        sums[e.first] += w;
        sums[e.second] += w;
    }
    return sums;
}

bool FractionalMatching::is_perfect(const Graph& g) const {
    for (const auto& [v, s] : vertex_sums(g.vertex_count()))
        if (s != 1) return false;
    return true;
}

bool is_valid_fractional_matching(const Graph& g, const FractionalMatching& f) {
    for (const auto& [e, w] : f.weights) {
        if (!g.has_edge(e.first, e.second)) return false;
        if (w <= 0 || w > 1) return false;
    }
    for (const auto& [v, s] : f.vertex_sums(g.vertex_count()))
        if (s > 1) return false;
    return true;
}

// --- maximum matching (Edmonds' blossom contraction, O(V^3)) ---

namespace {

struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, p, base;
    std::vector<bool> used, in_blossom;

    explicit Blossom(const Graph& graph)
        : g(graph), n(graph.vertex_count()), match(n, -1), p(n, -1), base(n),
          used(n, false), in_blossom(n, false) {}

    int lca(int a, int b) {
        std::vector<bool> seen(n, false);
        for (int v = a;;) {
            v = base[v];
            seen[v] = true;
            if (match[v] == -1) break;
            v = p[match[v]];
        }
        for (int v = b;;) {
            v = base[v];
            if (seen[v]) return v;
            v = p[match[v]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(p.begin(), p.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_augmenting_path(v);
            while (u != -1) {
                int pv = p[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

} // namespace

EdgeSet maximum_matching(const Graph& g) {
    Blossom b(g);
    b.run();
    EdgeSet m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (b.match[v] > v) m.insert(make_edge(v, b.match[v]));
    return m;
}

EdgeSet minimum_edge_cover(const Graph& g) {
    EdgeSet cover = maximum_matching(g);
    VertexSet covered = vertices_of(cover);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered.count(v)) {
            cover.insert(make_edge(v, g.neighbors(v).front()));
            covered.insert(v);
        }
    return cover;
}

VertexSet minimum_vertex_cover_exact(const Graph& g, const EdgeSet& restrict, int bound) {
    if (g.vertex_count() > bound)
        throw std::runtime_error("exact vertex cover search bound exceeded: |V| = " +
                                 std::to_string(g.vertex_count()) + " > " +
                                 std::to_string(bound));
    if (restrict.empty()) return {};
    VertexSet rverts = vertices_of(restrict);
    std::vector<int> rv(rverts.begin(), rverts.end());
    int k = (int)rv.size();
    std::vector<uint64_t> edge_masks;
    for (const auto& e : restrict) {
        int i = (int)(std::lower_bound(rv.begin(), rv.end(), e.first) - rv.begin());
        int j = (int)(std::lower_bound(rv.begin(), rv.end(), e.second) - rv.begin());
        edge_masks.push_back((uint64_t(1) << i) | (uint64_t(1) << j));
    }
    std::optional<VertexSet> best;
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
        if (best && (size_t)std::popcount(mask) > best->size()) continue;
        bool covers = true;
        for (uint64_t em : edge_masks)
            if (!(mask & em)) { covers = false; break; }
        if (!covers) continue;
        VertexSet s;
        for (int i = 0; i < k; ++i)
            if (mask & (uint64_t(1) << i)) s.insert(rv[i]);
        if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best))
            best = s;
    }
    return *best;
}

// --- fractional perfect matching via the bipartite double cover ---

namespace {

// Kuhn's algorithm; left side = original vertices, right side likewise.
// Left u connects to right v exactly when (u,v) is an edge.
struct DoubleCover {
    const Graph& g;
    int n;
    std::vector<int> match_right; // right v -> left u, or -1

    explicit DoubleCover(const Graph& graph)
        : g(graph), n(graph.vertex_count()), match_right(n, -1) {}

    bool try_kuhn(int u, std::vector<bool>& visited) {
        for (int v : g.neighbors(u)) {
            if (visited[v]) continue;
            visited[v] = true;
            if (match_right[v] == -1 || try_kuhn(match_right[v], visited)) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    }

    bool perfect() {
        for (int u = 0; u < n; ++u) {
            std::vector<bool> visited(n, false);
            if (!try_kuhn(u, visited)) return false;
        }
        return true;
    }
};

} // namespace

std::optional<FractionalMatching> fractional_perfect_matching(const Graph& g) {
    DoubleCover dc(g);
    if (!dc.perfect()) return std::nullopt;
    FractionalMatching f;
    for (int v = 0; v < g.vertex_count(); ++v)
        f.weights[make_edge(dc.match_right[v], v)] += Rat(1, 2);
    assert(f.is_perfect(g));
    return f;
}

// --- reduction algorithms ---

FractionalMatching eliminate_even_cycles(const Graph& g, const FractionalMatching& f0) {
    if (!is_valid_fractional_matching(g, f0))
        throw std::invalid_argument("not a valid fractional matching");
    FractionalMatching f = f0;
    size_t guard = f.weights.size() + 1;
    while (guard-- > 0) {
        auto cyc = find_even_cycle(g, f.support());
        if (!cyc) return f;
        const auto& cv = cyc->vertices;
        size_t len = cv.size();
        // Edge on the cycle minimizing f, ties by canonical edge order.
        size_t i0 = 0;
        Edge e0 = make_edge(cv[0], cv[1]);
        for (size_t i = 1; i < len; ++i) {
            Edge e = make_edge(cv[i], cv[(i + 1) % len]);
            if (f.weight(e) < f.weight(e0) || (f.weight(e) == f.weight(e0) && e < e0)) {
                e0 = e;
                i0 = i;
            }
        }
        Rat fe0 = f.weight(e0);
        for (size_t i = 0; i < len; ++i) {
            Edge e = make_edge(cv[i], cv[(i + 1) % len]);
            int sign = ((i + len - i0) % 2 == 0) ? -1 : +1; // g(e0) = -1, alternating
            Rat w = f.weight(e) + sign * fe0;
            assert(w >= 0 && w <= 1);
            if (w == 0)
                f.weights.erase(e);
            else
                f.weights[e] = w;
        }
        assert(f.weight(e0) == 0);
    }
    throw std::logic_error("even-cycle elimination failed to terminate");
}

namespace {

// Signed coefficients for one inner-loop iteration: +-1/2 alternating around
// the odd cycle starting positive at v0, -+1 alternating along the stem
// starting negative at (v0,v1), then +-1/2 alternating along the closed tail
// starting opposite to the last assigned sign. Vertex sums of g are all zero,
// so adding a multiple of g preserves equivalence.
std::map<Edge, Rat> signed_coefficients(const std::vector<int>& cv,
                                        const std::vector<int>& walk, size_t l) {
    std::map<Edge, Rat> gmap;
    size_t m = cv.size();
    for (size_t j = 0; j < m; ++j) {
        Edge e = make_edge(cv[j], cv[(j + 1) % m]);
        assert(!gmap.count(e));
        gmap[e] = Rat(j % 2 == 0 ? 1 : -1, 2);
    }
    int last_sign = 1; // sign of the final cycle edge (m odd, so positive)
    for (size_t k = 0; k + 1 < walk.size() && k < l; ++k) {
        Edge e = make_edge(walk[k], walk[k + 1]);
        assert(!gmap.count(e));
        last_sign = (k % 2 == 0) ? -1 : 1;
        gmap[e] = last_sign;
    }
    for (size_t k = l; k + 1 < walk.size(); ++k) {
        Edge e = make_edge(walk[k], walk[k + 1]);
        assert(!gmap.count(e));
        int sign = ((k - l) % 2 == 0) ? -last_sign : last_sign;
        gmap[e] = Rat(sign, 2);
    }
    std::map<int, Rat> sums;
    for (const auto& [e, w] : gmap) {
        sums[e.first] += w;
        sums[e.second] += w;
    }
    for (const auto& [v, s] : sums) assert(s == 0);
    (void)sums;
    return gmap;
}

} // namespace

FractionalMatching isolate_odd_cycles(const Graph& g, const FractionalMatching& f0) {
    if (!is_valid_fractional_matching(g, f0) || !f0.is_perfect(g))
        throw std::invalid_argument("not a fractional perfect matching");
    if (find_even_cycle(g, f0.support()))
        throw std::invalid_argument("support contains an even cycle");
    FractionalMatching f = f0;
    size_t guard = (f.weights.size() + 1) * (f.weights.size() + 1);
    while (true) {
        auto found = find_non_isolated_odd_cycle(g, f.support());
        if (!found) return f;
        auto [cyc, v0] = *found;
        // Orient the cycle to start at v0, toward its smaller cycle neighbor.
        std::vector<int> cv = cyc.vertices;
        std::rotate(cv.begin(), std::find(cv.begin(), cv.end(), v0), cv.end());
        if (cv[1] > cv.back()) std::reverse(cv.begin() + 1, cv.end());
        VertexSet on_cycle(cv.begin(), cv.end());
        EdgeSet cyc_edges = cyc.edges();
        // Branch edge (v0,v1) with v1 off the cycle; chords would create an
        // even cycle, which the precondition rules out.
        int v1 = -1;
        for (int w : g.neighbors(v0))
            if (f.weight(make_edge(v0, w)) > 0 && !on_cycle.count(w)) { v1 = w; break; }
        assert(v1 >= 0);
        Edge branch = make_edge(v0, v1);

        auto support_has_all = [&]() {
            if (f.weight(branch) == 0) return false;
            for (const auto& e : cyc_edges)
                if (f.weight(e) == 0) return false;
            return true;
        };
        while (support_has_all()) {
            if (guard-- == 0)
                throw std::logic_error("odd-cycle isolation failed to terminate");
            // Walk from v1 with no immediate back-step until a visited vertex
            // closes the path; the support has no pendant edges, so the walk
            // can always continue.
            std::vector<int> walk{v0, v1};
            size_t l, r;
            while (true) {
                int cur = walk.back(), prev = walk[walk.size() - 2];
                int closure = -1, step = -1;
                for (int w : g.neighbors(cur)) {
                    if (w == prev || f.weight(make_edge(cur, w)) == 0) continue;
                    auto it = std::find(walk.begin(), walk.end(), w);
                    if (it != walk.end()) {
                        if (closure < 0) {
                            closure = w;
                            l = it - walk.begin();
                        }
                    } else if (step < 0) {
                        step = w;
                    }
                }
                if (closure >= 0) {
                    r = walk.size();
                    walk.push_back(closure);
                    break;
                }
                assert(step >= 0 && "no pendant edges, so a forward step exists");
                assert(!(on_cycle.count(step) && step != v0) &&
                       "walk cannot re-enter the cycle without an even cycle existing");
                walk.push_back(step);
            }
            assert(l + 2 <= r);
            assert((r - l) % 2 == 1 && "closed tail must be an odd cycle");
            auto gmap = signed_coefficients(cv, walk, l);
            // Minimizing edge e_0 for f(e)/|g(e)|, ties by canonical order.
            Edge e0 = gmap.begin()->first;
            Rat best = f.weight(e0) / abs(gmap.at(e0));
            for (const auto& [e, w] : gmap) {
                Rat ratio = f.weight(e) / abs(w);
                if (ratio < best || (ratio == best && e < e0)) {
                    best = ratio;
                    e0 = e;
                }
            }
            if (gmap.at(e0) > 0)
                for (auto& [e, w] : gmap) w = -w;
            Rat scale = f.weight(e0) / abs(gmap.at(e0));
            for (const auto& [e, w] : gmap) {
                Rat nw = f.weight(e) + w * scale;
                assert(nw >= 0 && nw <= 1);
                if (nw == 0)
                    f.weights.erase(e);
                else
                    f.weights[e] = nw;
            }
            assert(f.weight(e0) == 0);
            assert(f.is_perfect(g));
        }
    }
}

FractionalMatching canonicalize_fpm(const Graph& g, const FractionalMatching& f) {
    if (!is_valid_fractional_matching(g, f) || !f.is_perfect(g))
        throw std::invalid_argument("not a fractional perfect matching");
    FractionalMatching out = isolate_odd_cycles(g, eliminate_even_cycles(g, f));
#ifndef NDEBUG
    for (const auto& [e, w] : out.weights) assert(w == 1 || w == Rat(1, 2));
#endif
    return out;
}

FractionalMatching parse_fractional_matching(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    FractionalMatching f;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        std::string wtext;
        if (!(ls >> u >> v >> wtext))
            throw std::runtime_error("line " + std::to_string(lineno) + ": bad matching line");
        if (!g.has_edge(u, v))
            throw std::runtime_error("line " + std::to_string(lineno) + ": not a graph edge");
        Edge e = make_edge(u, v);
        if (f.weights.count(e))
            throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate edge");
        Rat w;
        try {
            w = parse_rat(wtext);
        } catch (const std::invalid_argument& err) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + err.what());
        }
        if (w < 0 || w > 1)
            throw std::runtime_error("line " + std::to_string(lineno) + ": weight outside [0,1]");
        if (w > 0) f.weights[e] = w;
    }
    if (!is_valid_fractional_matching(g, f))
        throw std::runtime_error("vertex sum exceeds 1");
    return f;
}

std::string format_fractional_matching(const FractionalMatching& f) {
    std::ostringstream out;
    for (const auto& [e, w] : f.weights)
        out << e.first << " " << e.second << " " << rat_str(w) << "\n";
    return out.str();
}

} // namespace adgame
