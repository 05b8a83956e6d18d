#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adgame/graph.hpp"
#include "adgame/rational.hpp"

namespace adgame {

// Mixed profile of AD_{alpha,delta}(G): attackers randomize over vertices,
// defenders over edges. Distributions keep strictly positive entries only,
// so the key sets are the supports.
struct MixedProfile {
    std::vector<std::map<int, Rat>> attackers;
    std::vector<std::map<Edge, Rat>> defenders;

    int alpha() const { return (int)attackers.size(); }
    int delta() const { return (int)defenders.size(); }
};

struct PureProfile {
    std::vector<int> attacker_choices;
    std::vector<Edge> defender_choices;
};

// Validates and normalizes (drops zero entries, requires exact sum 1,
// non-negative entries, non-empty supports, valid vertices/edges).
MixedProfile make_mixed_profile(const Graph& g,
                                std::vector<std::map<int, Rat>> attackers,
                                std::vector<std::map<Edge, Rat>> defenders);

MixedProfile to_mixed(const Graph& g, const PureProfile& s);

struct Violation {
    std::string player;    // e.g. "defender 3"
    std::string deviation; // human-readable improving move
    Rat gain;              // exact utility improvement
};

struct NeReport {
    bool is_ne = false;
    Rat min_hit = 0;
    Rat defense_ratio = 0; // alpha / sum of defender utilities; 0 if that sum is 0
    bool is_defense_optimal = false;
    bool supports_edge_cover = false;   // diagnostic necessary condition
    bool supports_vertex_cover = false; // diagnostic necessary condition
    std::vector<Violation> violations;
};

// P(Hit(d, v)): total weight defender d places on edges incident to v.
Rat hit_probability(const Graph& g, const MixedProfile& p, int d, int v);

// P(Hit(v)) via the complement product over independent defenders.
Rat hit_probability_vertex(const Graph& g, const MixedProfile& p, int v);

// Same quantity by inclusion-exclusion over defender subsets; exponential
// in delta, kept as a cross-validation oracle.
Rat hit_probability_vertex_incl_excl(const Graph& g, const MixedProfile& p, int v);

Rat min_hit(const Graph& g, const MixedProfile& p);

// Expected share of one defender at a vertex it lands on, given the hit
// probabilities of the others. Two formulas for the same quantity; they
// must agree exactly, which is the combinatorial identity under test.
Rat cep_direct_from_probs(const std::vector<Rat>& other_hit_probs);
Rat cep_alternating_from_probs(const std::vector<Rat>& other_hit_probs);

// Computes both forms and insists on exact agreement.
Rat conditional_expected_proportion(const Graph& g, const MixedProfile& p, int d, int v);

// |A|(v): expected number of attackers on v; sums to alpha over V.
Rat expected_attackers(const MixedProfile& p, int v);

Rat expected_utility_attacker(const Graph& g, const MixedProfile& p, int a);
Rat expected_utility_defender(const Graph& g, const MixedProfile& p, int d);

// Exact check of the equilibrium characterization: attacker-support vertices
// all at MinHit, defender-support edges all at the maximal share value.
NeReport verify_ne(const Graph& g, const MixedProfile& p);

// Pure specialization with integer counts and +1 deviation denominators.
NeReport verify_pure_ne(const Graph& g, const PureProfile& s);

// (delta >= beta'(G), alpha >= min over edge covers EC of beta(G(EC))).
// Necessary but not sufficient for a pure equilibrium to exist.
std::pair<bool, bool> pure_ne_necessary(const Graph& g, int alpha, int delta,
                                        int bound = 20);

// Every vertex hit by at most one / exactly one defender's support.
bool is_unidefender(const Graph& g, const MixedProfile& p);
bool is_monodefender(const Graph& g, const MixedProfile& p);

// Text format: header "alpha delta"; alpha lines "a v p/q v p/q ..."; delta
// lines "d u v p/q u v p/q ...". '#' starts a comment line.
MixedProfile parse_profile(const Graph& g, const std::string& text);
std::string format_profile(const MixedProfile& p);

std::string format_ne_report(const NeReport& r);

} // namespace adgame
