#pragma once

#include <optional>

#include "adgame/game.hpp"
#include "adgame/partition.hpp"

namespace adgame {

enum class RegimeKind { Few, Many, TooMany };

struct Regime {
    RegimeKind kind;
    int beta_prime;
};

// Few: delta <= |V|/2. Many: |V|/2 < delta < beta'. TooMany: delta >= beta'.
// On the overlap (beta' = |V|/2 = delta) TooMany wins; the Few-regime
// machinery stays reachable through find_delta_partitionable directly.
Regime classify_regime(const Graph& g, int delta);

const char* regime_name(RegimeKind k);

// Attackers uniform over V; defender j spreads (2 delta / |V|) f(e) over its
// partite. Hits every vertex with probability 2 delta / |V|.
MixedProfile construct_from_partitionable(const Graph& g, const FractionalMatching& f,
                                          const EdgePartition& p, int alpha);

// Splits a perfect matching into delta uniform blocks; needs 2 delta | |V|,
// absent otherwise. Throws when no perfect matching exists or delta > |V|/2.
std::optional<MixedProfile> construct_perfect_matching_ne(const Graph& g, int alpha,
                                                          int delta);

// Round-robin defenders over a minimum edge cover, attackers proportional to
// defender multiplicity: sigma_a(v) = |D(v)| / (2 delta). Needs delta >= beta'.
MixedProfile defender_pure_vertex_balanced_ne(const Graph& g, int alpha, int delta);

// Pure variant: integer loads |D(v)| alpha / (2 delta) filled in vertex
// order. Needs delta >= beta' and 2 delta | alpha.
PureProfile pure_vertex_balanced_ne(const Graph& g, int alpha, int delta);

// Dispatcher: Few -> partitionable search, Many -> absent (provably no
// defense-optimal equilibrium), TooMany -> defender-pure vertex-balanced.
std::optional<MixedProfile> construct_defense_optimal(const Graph& g, int alpha,
                                                      int delta, int bound = 16);

bool is_defender_pure_graph(const Graph& g, int delta);

} // namespace adgame
