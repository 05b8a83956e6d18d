#include "adgame/partition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace adgame {

bool verify_partitionable(const Graph& g, const FractionalMatching& f,
                          const EdgePartition& p, int delta) {
    if (!is_valid_fractional_matching(g, f) || !f.is_perfect(g))
        throw std::invalid_argument("not a fractional perfect matching");
    EdgeSet support = f.support();
    EdgeSet seen;
    if ((int)p.partites.size() != delta)
        throw std::invalid_argument("partite count differs from delta");
    for (const auto& part : p.partites) {
        if (part.empty()) throw std::invalid_argument("empty partite");
        for (const auto& e : part) {
            if (!support.count(e))
                throw std::invalid_argument("partite edge outside E(f)");
            if (!seen.insert(e).second)
                throw std::invalid_argument("edge in two partites");
        }
    }
    if (seen != support)
        throw std::invalid_argument("partites do not cover E(f)");
    VertexSet used;
    for (const auto& part : p.partites)
        for (int v : vertices_of(part))
            if (!used.insert(v).second) return false; // partites share a vertex
    Rat quota(g.vertex_count(), 2 * delta);
    for (const auto& part : p.partites) {
        Rat sum = 0;
        for (const auto& e : part) sum += f.weight(e);
        if (sum != quota) return false;
    }
    return true;
}

namespace {

// One building block of a partitionable FPM: a single edge or an odd cycle.
struct Component {
    std::vector<int> vertices; // cycle order, or the two edge endpoints
    EdgeSet edges;
    bool is_cycle;
};

struct Search {
    const Graph& g;
    int n, k, delta;
    uint32_t covered = 0;
    std::vector<Component> components;
    std::optional<std::pair<FractionalMatching, EdgePartition>> result;

    Search(const Graph& graph, int group_size, int groups)
        : g(graph), n(graph.vertex_count()), k(group_size), delta(groups) {}

    bool is_covered(int v) const { return covered & (uint32_t(1) << v); }
    void set_covered(int v) { covered |= uint32_t(1) << v; }
    void clear_covered(int v) { covered &= ~(uint32_t(1) << v); }

    // Exact bin packing of component sizes into delta groups of k vertices.
    bool group(std::vector<int>& assign, std::vector<int>& load, size_t idx) const {
        if (idx == components.size()) return true;
        int size = (int)components[idx].vertices.size();
        for (size_t j = 0; j < load.size(); ++j) {
            if (load[j] + size > k) continue;
            assign[idx] = (int)j;
            load[j] += size;
            if (group(assign, load, idx + 1)) return true;
            load[j] -= size;
            if (load[j] == 0) break; // opening a later empty group is symmetric
        }
        return false;
    }

    bool try_finish() {
        std::vector<int> assign(components.size(), -1), load(delta, 0);
        if (!group(assign, load, 0)) return false;
        std::vector<EdgeSet> partites(delta);
        FractionalMatching f;
        for (size_t i = 0; i < components.size(); ++i) {
            const auto& c = components[i];
            for (const auto& e : c.edges) {
                partites[assign[i]].insert(e);
                f.weights[e] = c.is_cycle ? Rat(1, 2) : Rat(1);
            }
        }
        std::sort(partites.begin(), partites.end());
        result = {std::move(f), EdgePartition{std::move(partites)}};
        return true;
    }

    bool cover() {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!is_covered(u)) { v = u; break; }
        if (v < 0) return try_finish();
        // Option 1: single edge (v,u).
        for (int u : g.neighbors(v)) {
            if (is_covered(u)) continue;
            set_covered(v);
            set_covered(u);
            components.push_back({{v, u}, {make_edge(v, u)}, false});
            if (cover()) return true;
            components.pop_back();
            clear_covered(u);
            clear_covered(v);
        }
        // Option 2: odd cycles through v over uncovered vertices. Each cycle
        // is enumerated once by requiring the second vertex below the last.
        std::vector<int> path{v};
        set_covered(v);
        bool ok = cycles(v, path);
        clear_covered(v);
        return ok;
    }

    bool cycles(int v, std::vector<int>& path) {
        int cur = path.back();
        for (int u : g.neighbors(cur)) {
            if (is_covered(u)) {
                if (u == v && path.size() >= 3 && path.size() % 2 == 1 &&
                    path[1] < path.back()) {
                    Component c{path, {}, true};
                    for (size_t i = 0; i < path.size(); ++i)
                        c.edges.insert(make_edge(path[i], path[(i + 1) % path.size()]));
                    components.push_back(std::move(c));
                    if (cover()) return true;
                    components.pop_back();
                }
                continue;
            }
            if ((int)path.size() >= k) continue;
            set_covered(u);
            path.push_back(u);
            if (cycles(v, path)) return true;
            path.pop_back();
            clear_covered(u);
        }
        return false;
    }
};

} // namespace

std::optional<std::pair<FractionalMatching, EdgePartition>>
find_delta_partitionable(const Graph& g, int delta, int bound) {
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    int n = g.vertex_count();
    if (n > bound)
        throw std::runtime_error("partition search bound exceeded: |V| = " +
                                 std::to_string(n) + " > " + std::to_string(bound));
    if (n % delta != 0) return std::nullopt;
    int k = n / delta;
    if (k < 2) return std::nullopt; // a non-empty partite spans at least an edge
    Search s(g, k, delta);
    if (!s.cover()) return std::nullopt;
    assert(s.result);
    assert(verify_partitionable(g, s.result->first, s.result->second, delta));
    return s.result;
}

namespace {

bool triangles_rec(const Graph& g, std::vector<bool>& covered,
                   std::vector<VertexSet>& out) {
    int v = -1;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!covered[u]) { v = u; break; }
    if (v < 0) return true;
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
        if (covered[nb[i]]) continue;
        for (size_t j = i + 1; j < nb.size(); ++j) {
            if (covered[nb[j]] || !g.has_edge(nb[i], nb[j])) continue;
            covered[v] = covered[nb[i]] = covered[nb[j]] = true;
            out.push_back({v, nb[i], nb[j]});
            if (triangles_rec(g, covered, out)) return true;
            out.pop_back();
            covered[v] = covered[nb[i]] = covered[nb[j]] = false;
        }
    }
    return false;
}

} // namespace

std::optional<std::vector<VertexSet>> partition_into_triangles(const Graph& g, int bound) {
    int n = g.vertex_count();
    if (n % 3 != 0) throw std::invalid_argument("|V| not divisible by 3");
    if (n > bound)
        throw std::runtime_error("triangle partition bound exceeded: |V| = " +
                                 std::to_string(n) + " > " + std::to_string(bound));
    std::vector<bool> covered(n, false);
    std::vector<VertexSet> out;
    if (triangles_rec(g, covered, out)) return out;
    return std::nullopt;
}

bool has_perfect_matching(const Graph& g) {
    return 2 * (int)maximum_matching(g).size() == g.vertex_count();
}

} // namespace adgame
