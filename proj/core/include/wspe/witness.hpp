/*
 * Copyright 2026 The wspe Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "wspe/fixpoint.hpp"
#include "wspe/game.hpp"
#include "wspe/lasso.hpp"
#include "wspe/objectives.hpp"
#include "wspe/path_oracle.hpp"

namespace wspe {

/// (i, v): player i can move into v. Player 0 marks the outcome from v0.
struct IndexEntry {
  Player player = 0;
  VertexId vertex = 0;
  friend auto operator<=>(const IndexEntry&, const IndexEntry&) = default;
};

/// Sorted by (player, vertex).
using DeviationIndex = std::vector<IndexEntry>;

/// {(0, v0)} ∪ {(i, v') | (v, v') edge, v reachable from v0, v owned by i}.
DeviationIndex deviation_index(const Game& game, VertexId v0);

/// One lasso per deviation index entry.
struct SymbolicWitness {
  std::map<IndexEntry, Lasso> lassoes;
};

/// Pair of lassoes (source, deviation) and vertex `at` of the source where
/// the owner of `at` would gain by moving into the deviation lasso.
struct GoodnessViolation {
  IndexEntry source;
  VertexId at = 0;
  IndexEntry deviation;
  bool source_gain = false;
  bool deviation_gain = false;
  friend bool operator==(const GoodnessViolation&, const GoodnessViolation&) = default;
};

/// Throws MalformedWitness when a lasso is invalid in the game, starts at
/// the wrong vertex, or exceeds 2|V|^2 edges.
void check_witness_structure(const SymbolicWitness& witness, const Game& game);

/// nullopt iff for all lassoes ρ_{j,u}, ρ_{i,v'} and every v visited by
/// ρ_{j,u} with v owned by i and (v, v') an edge, Gain_i(ρ_{j,u}) >=
/// Gain_i(ρ_{i,v'}). Otherwise the first violation, scanning entries in
/// order, vertices in lasso order and successors ascending. Throws
/// WitnessIncomplete when a needed entry (i, v') is missing.
std::optional<GoodnessViolation> is_good(const SymbolicWitness& witness, const Game& game,
                                         const ObjectiveSet& objectives);

/// Witness read off the fixpoint: ρ_{0,v0} has payoff `target`, every other
/// ρ_{i,v'} has a payoff minimizing component i over the label of v', ties
/// broken lexicographically. Each lasso stays inside the vertices labeled
/// by its own payoff.
SymbolicWitness build_witness(const Game& game, const ObjectiveSet& objectives,
                              const LabelTable& fixtable, VertexId v0, const Payoff& target,
                              PathOracle& oracle);

SymbolicWitness build_witness(const Game& game, const ObjectiveSet& objectives,
                              const LabelTable& fixtable, VertexId v0, const Payoff& target,
                              const OracleOptions& options = {});

}  // namespace wspe
