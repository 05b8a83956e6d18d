#include "adgame/game.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "adgame/matching.hpp"

namespace adgame {

MixedProfile make_mixed_profile(const Graph& g,
                                std::vector<std::map<int, Rat>> attackers,
                                std::vector<std::map<Edge, Rat>> defenders) {
    if (attackers.empty() || defenders.empty())
        throw std::invalid_argument("need at least one attacker and one defender");
    for (auto& dist : attackers) {
        Rat sum = 0;
        for (auto it = dist.begin(); it != dist.end();) {
            if (it->first < 0 || it->first >= g.vertex_count())
                throw std::invalid_argument("attacker strategy on unknown vertex");
            if (it->second < 0) throw std::invalid_argument("negative probability");
            sum += it->second;
            it = it->second == 0 ? dist.erase(it) : std::next(it);
        }
        if (sum != 1) throw std::invalid_argument("attacker distribution does not sum to 1");
        if (dist.empty()) throw std::invalid_argument("empty attacker support");
    }
    for (auto& dist : defenders) {
        Rat sum = 0;
        std::map<Edge, Rat> canon;
        for (const auto& [e, w] : dist) {
            Edge ce = make_edge(e.first, e.second);
            if (!g.has_edge(ce.first, ce.second))
                throw std::invalid_argument("defender strategy on unknown edge");
            if (w < 0) throw std::invalid_argument("negative probability");
            sum += w;
            if (w > 0) {
                if (!canon.emplace(ce, w).second)
                    throw std::invalid_argument("duplicate edge in defender strategy");
            }
        }
        if (sum != 1) throw std::invalid_argument("defender distribution does not sum to 1");
        if (canon.empty()) throw std::invalid_argument("empty defender support");
        dist = std::move(canon);
    }
    return MixedProfile{std::move(attackers), std::move(defenders)};
}

MixedProfile to_mixed(const Graph& g, const PureProfile& s) {
    std::vector<std::map<int, Rat>> attackers;
    std::vector<std::map<Edge, Rat>> defenders;
    for (int v : s.attacker_choices) attackers.push_back({{v, Rat(1)}});
    for (const Edge& e : s.defender_choices) defenders.push_back({{e, Rat(1)}});
    return make_mixed_profile(g, std::move(attackers), std::move(defenders));
}

Rat hit_probability(const Graph& g, const MixedProfile& p, int d, int v) {
    if (d < 0 || d >= p.delta() || v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("bad defender or vertex index");
    Rat sum = 0;
    for (const auto& [e, w] : p.defenders[d])
        if (e.first == v || e.second == v) sum += w;
    return sum;
}

Rat hit_probability_vertex(const Graph& g, const MixedProfile& p, int v) {
    Rat miss = 1;
    for (int d = 0; d < p.delta(); ++d)
        miss *= 1 - hit_probability(g, p, d, v);
    return 1 - miss;
}

Rat hit_probability_vertex_incl_excl(const Graph& g, const MixedProfile& p, int v) {
    int m = p.delta();
    if (m > 25) throw std::invalid_argument("inclusion-exclusion oracle limited to 25 defenders");
    std::vector<Rat> q(m);
    for (int d = 0; d < m; ++d) q[d] = hit_probability(g, p, d, v);
    Rat total = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
        Rat prod = 1;
        for (int d = 0; d < m; ++d)
            if (mask & (uint32_t(1) << d)) prod *= q[d];
        total += (std::popcount(mask) % 2 == 1) ? prod : -prod;
    }
    return total;
}

Rat min_hit(const Graph& g, const MixedProfile& p) {
    Rat best = hit_probability_vertex(g, p, 0);
    for (int v = 1; v < g.vertex_count(); ++v)
        best = std::min(best, hit_probability_vertex(g, p, v));
    return best;
}

Rat cep_direct_from_probs(const std::vector<Rat>& q) {
    // Distribution of the number X of other defenders hitting the vertex
    // (independent Bernoullis), then E[1/(X+1)]. This groups the defining
    // sum over subsets D' by |D'|.
    std::vector<Rat> dist{Rat(1)};
    for (const Rat& qi : q) {
        std::vector<Rat> next(dist.size() + 1, Rat(0));
        for (size_t x = 0; x < dist.size(); ++x) {
            next[x] += dist[x] * (1 - qi);
            next[x + 1] += dist[x] * qi;
        }
        dist = std::move(next);
    }
    Rat total = 0;
    for (size_t x = 0; x < dist.size(); ++x)
        total += dist[x] / Rat(x + 1);
    return total;
}

Rat cep_alternating_from_probs(const std::vector<Rat>& q) {
    // sum over l of (1/l)(-1)^{l-1} e_{l-1}(q), with the elementary
    // symmetric polynomials built by dynamic programming.
    std::vector<Rat> e(q.size() + 1, Rat(0));
    e[0] = 1;
    for (const Rat& qi : q)
        for (size_t j = e.size() - 1; j >= 1; --j) e[j] += e[j - 1] * qi;
    Rat total = 0;
    for (size_t l = 1; l <= e.size(); ++l)
        total += Rat(l % 2 == 1 ? 1 : -1, (long)l) * e[l - 1];
    return total;
}

Rat conditional_expected_proportion(const Graph& g, const MixedProfile& p, int d, int v) {
    std::vector<Rat> q;
    for (int k = 0; k < p.delta(); ++k)
        if (k != d) q.push_back(hit_probability(g, p, k, v));
    Rat direct = cep_direct_from_probs(q);
    Rat alternating = cep_alternating_from_probs(q);
    if (direct != alternating)
        throw std::logic_error("conditional expected proportion formulas disagree");
    return direct;
}

Rat expected_attackers(const MixedProfile& p, int v) {
    Rat sum = 0;
    for (const auto& dist : p.attackers) {
        auto it = dist.find(v);
        if (it != dist.end()) sum += it->second;
    }
    return sum;
}

Rat expected_utility_attacker(const Graph& g, const MixedProfile& p, int a) {
    if (a < 0 || a >= p.alpha()) throw std::invalid_argument("bad attacker index");
    Rat total = 0;
    for (const auto& [v, w] : p.attackers[a])
        total += w * (1 - hit_probability_vertex(g, p, v));
    return total;
}

Rat expected_utility_defender(const Graph& g, const MixedProfile& p, int d) {
    if (d < 0 || d >= p.delta()) throw std::invalid_argument("bad defender index");
    Rat total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Rat hp = hit_probability(g, p, d, v);
        if (hp == 0) continue;
        total += hp * conditional_expected_proportion(g, p, d, v) * expected_attackers(p, v);
    }
    return total;
}

namespace {

std::string vertex_str(int v) { return "vertex " + std::to_string(v); }
std::string edge_str(const Edge& e) {
    return "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void fill_summary(const Graph& g, const MixedProfile& p, NeReport& r) {
    r.min_hit = min_hit(g, p);
    Rat total_def = 0;
    for (int d = 0; d < p.delta(); ++d)
        total_def += expected_utility_defender(g, p, d);
    r.defense_ratio = total_def > 0 ? Rat(p.alpha()) / total_def : Rat(0);
    r.is_ne = r.violations.empty();
    Rat target = std::max(Rat(1), Rat(g.vertex_count(), 2 * p.delta()));
    r.is_defense_optimal = r.is_ne && total_def > 0 && r.defense_ratio == target;
    EdgeSet def_support;
    for (const auto& dist : p.defenders)
        for (const auto& [e, w] : dist) def_support.insert(e);
    VertexSet atk_support;
    for (const auto& dist : p.attackers)
        for (const auto& [v, w] : dist) atk_support.insert(v);
    r.supports_edge_cover = is_edge_cover(g, def_support);
    r.supports_vertex_cover = is_vertex_cover(g, def_support, atk_support);
}

} // namespace

NeReport verify_ne(const Graph& g, const MixedProfile& p) {
    NeReport r;
    Rat mh = min_hit(g, p);
    int argmin = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (hit_probability_vertex(g, p, v) == mh) { argmin = v; break; }
    // Condition (1): every attacker-support vertex achieves MinHit.
    for (int a = 0; a < p.alpha(); ++a)
        for (const auto& [v, w] : p.attackers[a]) {
            Rat hp = hit_probability_vertex(g, p, v);
            if (hp != mh)
                r.violations.push_back({"attacker " + std::to_string(a),
                                        vertex_str(v) + " -> " + vertex_str(argmin),
                                        w * (hp - mh)});
        }
    // Condition (2): every defender-support edge attains the maximal share.
    for (int d = 0; d < p.delta(); ++d) {
        std::vector<Rat> prop(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            prop[v] = conditional_expected_proportion(g, p, d, v);
        auto value = [&](const Edge& e) {
            return prop[e.first] * expected_attackers(p, e.first) +
                   prop[e.second] * expected_attackers(p, e.second);
        };
        Edge best_edge = g.edges().front();
        Rat best = value(best_edge);
        for (const Edge& e : g.edges()) {
            Rat val = value(e);
            if (val > best) { best = val; best_edge = e; }
        }
        for (const auto& [e, w] : p.defenders[d]) {
            Rat val = value(e);
            if (val != best)
                r.violations.push_back({"defender " + std::to_string(d),
                                        edge_str(e) + " -> " + edge_str(best_edge),
                                        w * (best - val)});
        }
    }
    fill_summary(g, p, r);
    return r;
}

NeReport verify_pure_ne(const Graph& g, const PureProfile& s) {
    MixedProfile p = to_mixed(g, s); // validates choices
    int n = g.vertex_count();
    std::vector<int> A(n, 0), D(n, 0);
    for (int v : s.attacker_choices) A[v]++;
    for (const Edge& e : s.defender_choices) {
        D[e.first]++;
        D[e.second]++;
    }
    NeReport r;
    // Attackers: utility is 1 on uncovered vertices, 0 on covered ones.
    int uncovered = -1;
    for (int v = 0; v < n; ++v)
        if (D[v] == 0) { uncovered = v; break; }
    if (uncovered >= 0)
        for (size_t a = 0; a < s.attacker_choices.size(); ++a) {
            int v = s.attacker_choices[a];
            if (D[v] > 0)
                r.violations.push_back({"attacker " + std::to_string(a),
                                        vertex_str(v) + " -> " + vertex_str(uncovered),
                                        Rat(1)});
        }
    // Defenders: fair shares, deviation denominators gain the +1.
    for (size_t j = 0; j < s.defender_choices.size(); ++j) {
        const Edge cur = s.defender_choices[j];
        auto share = [&](const Edge& e) {
            int du = D[e.first] - (e.first == cur.first || e.first == cur.second ? 1 : 0);
            int dv = D[e.second] - (e.second == cur.first || e.second == cur.second ? 1 : 0);
            return Rat(A[e.first], du + 1) + Rat(A[e.second], dv + 1);
        };
        Rat current = share(cur);
        Edge best_edge = cur;
        Rat best = current;
        for (const Edge& e : g.edges()) {
            Rat val = share(e);
            if (val > best) { best = val; best_edge = e; }
        }
        if (best > current)
            r.violations.push_back({"defender " + std::to_string(j),
                                    edge_str(cur) + " -> " + edge_str(best_edge),
                                    best - current});
    }
    fill_summary(g, p, r);
    return r;
}

namespace {

// Branch-and-bound minimum vertex cover size of an explicit edge list.
int vc_size(const std::vector<Edge>& edges, size_t idx, VertexSet& chosen, int best) {
    while (idx < edges.size() &&
           (chosen.count(edges[idx].first) || chosen.count(edges[idx].second)))
        ++idx;
    if (idx == edges.size()) return (int)chosen.size();
    if ((int)chosen.size() + 1 >= best) return best;
    for (int v : {edges[idx].first, edges[idx].second}) {
        chosen.insert(v);
        best = std::min(best, vc_size(edges, idx + 1, chosen, best));
        chosen.erase(v);
    }
    return best;
}

} // namespace

std::pair<bool, bool> pure_ne_necessary(const Graph& g, int alpha, int delta, int bound) {
    int beta_prime = (int)minimum_edge_cover(g).size();
    bool first = delta >= beta_prime;
    int m = (int)g.edges().size();
    if (m > bound)
        throw std::runtime_error("edge cover enumeration bound exceeded: |E| = " +
                                 std::to_string(m) + " > " + std::to_string(bound));
    int best_beta = -1;
    for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
        std::vector<Edge> subset;
        for (int i = 0; i < m; ++i)
            if (mask & (uint32_t(1) << i)) subset.push_back(g.edges()[i]);
        if (!is_edge_cover(g, EdgeSet(subset.begin(), subset.end()))) continue;
        VertexSet chosen;
        int beta = vc_size(subset, 0, chosen, g.vertex_count() + 1);
        if (best_beta < 0 || beta < best_beta) best_beta = beta;
    }
    bool second = best_beta >= 0 && alpha >= best_beta;
    return {first, second};
}

bool is_unidefender(const Graph& g, const MixedProfile& p) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        int hitters = 0;
        for (int d = 0; d < p.delta(); ++d)
            if (hit_probability(g, p, d, v) > 0) ++hitters;
        if (hitters > 1) return false;
    }
    return true;
}

bool is_monodefender(const Graph& g, const MixedProfile& p) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        int hitters = 0;
        for (int d = 0; d < p.delta(); ++d)
            if (hit_probability(g, p, d, v) > 0) ++hitters;
        if (hitters != 1) return false;
    }
    return true;
}

MixedProfile parse_profile(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int alpha = -1, delta = -1, lineno = 0;
    std::vector<std::map<int, Rat>> attackers;
    std::vector<std::map<Edge, Rat>> defenders;
    auto fail = [&](const std::string& msg) -> std::runtime_error {
        return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (alpha < 0) {
            if (!(ls >> alpha >> delta) || alpha < 1 || delta < 1)
                throw fail("bad profile header");
            continue;
        }
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) throw fail("expected 'a' or 'd' line");
        auto as_int = [&](const std::string& s) {
            try {
                size_t used;
                int v = std::stoi(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return v;
            } catch (const std::exception&) {
                throw fail("bad integer: " + s);
            }
        };
        if (tok[0] == "a") {
            if (tok.size() % 2 != 1 || tok.size() < 3) throw fail("bad attacker line");
            std::map<int, Rat> dist;
            for (size_t i = 1; i < tok.size(); i += 2)
                if (!dist.emplace(as_int(tok[i]), parse_rat(tok[i + 1])).second)
                    throw fail("duplicate vertex in attacker line");
            attackers.push_back(std::move(dist));
        } else if (tok[0] == "d") {
            if (tok.size() % 3 != 1 || tok.size() < 4) throw fail("bad defender line");
            std::map<Edge, Rat> dist;
            for (size_t i = 1; i < tok.size(); i += 3) {
                Edge e = make_edge(as_int(tok[i]), as_int(tok[i + 1]));
                if (!dist.emplace(e, parse_rat(tok[i + 2])).second)
                    throw fail("duplicate edge in defender line");
            }
            defenders.push_back(std::move(dist));
        } else {
            throw fail("expected 'a' or 'd' line");
        }
    }
    if (alpha < 0) throw std::runtime_error("empty profile document");
    if ((int)attackers.size() != alpha || (int)defenders.size() != delta)
        throw std::runtime_error("profile line counts disagree with header");
    try {
        return make_mixed_profile(g, std::move(attackers), std::move(defenders));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::string format_profile(const MixedProfile& p) {
    std::ostringstream out;
    out << p.alpha() << " " << p.delta() << "\n";
    for (const auto& dist : p.attackers) {
        out << "a";
        for (const auto& [v, w] : dist) out << " " << v << " " << rat_str(w);
        out << "\n";
    }
    for (const auto& dist : p.defenders) {
        out << "d";
        for (const auto& [e, w] : dist)
            out << " " << e.first << " " << e.second << " " << rat_str(w);
        out << "\n";
    }
    return out.str();
}

std::string format_ne_report(const NeReport& r) {
    std::ostringstream out;
    out << "is_ne " << (r.is_ne ? "true" : "false") << "\n";
    out << "min_hit " << rat_str(r.min_hit) << "\n";
    out << "defense_ratio " << rat_str(r.defense_ratio) << "\n";
    out << "defense_optimal " << (r.is_defense_optimal ? "true" : "false") << "\n";
    out << "supports_edge_cover " << (r.supports_edge_cover ? "true" : "false") << "\n";
    out << "supports_vertex_cover " << (r.supports_vertex_cover ? "true" : "false") << "\n";
    out << "violations " << r.violations.size() << "\n";
    for (const auto& v : r.violations)
        out << "violation " << v.player << ": " << v.deviation
            << " gain " << rat_str(v.gain) << "\n";
    return out.str();
}

} // namespace adgame
