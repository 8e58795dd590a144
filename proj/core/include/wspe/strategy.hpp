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

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "wspe/game.hpp"
#include "wspe/lasso.hpp"
#include "wspe/objectives.hpp"
#include "wspe/witness.hpp"

namespace wspe {

using MemoryState = std::uint32_t;

inline constexpr MemoryState kNoState = std::numeric_limits<MemoryState>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Deterministic Moore machine for one player. The memory state always
/// accounts for the current vertex: `initial` is the state at the start
/// vertex, and update(m, w) is applied when the play moves to w. The
/// strategy at current vertex v in state m is action(m, v).
class MooreMachine {
 public:
  MooreMachine() = default;
  MooreMachine(std::size_t states, std::size_t vertices, MemoryState initial);

  std::size_t state_count() const noexcept { return states_; }
  std::size_t vertex_count() const noexcept { return vertices_; }
  MemoryState initial() const noexcept { return initial_; }

  MemoryState update(MemoryState m, VertexId w) const { return update_[index(m, w)]; }
  void set_update(MemoryState m, VertexId w, MemoryState next) { update_[index(m, w)] = next; }

  /// kNoVertex where the machine does not prescribe a move.
  VertexId action(MemoryState m, VertexId v) const { return action_[index(m, v)]; }
  void set_action(MemoryState m, VertexId v, VertexId next) { action_[index(m, v)] = next; }

  /// Optional human-readable state names, used for serialization.
  std::vector<std::string> labels;

  friend bool operator==(const MooreMachine&, const MooreMachine&) = default;

 private:
  std::size_t index(MemoryState m, VertexId v) const { return std::size_t{m} * vertices_ + v; }

  std::size_t states_ = 0;
  std::size_t vertices_ = 0;
  MemoryState initial_ = 0;
  std::vector<MemoryState> update_;
  std::vector<VertexId> action_;
};

/// One machine per player, machines[i - 1] for player i.
struct StrategyProfile {
  std::vector<MooreMachine> machines;

  const MooreMachine& of(Player i) const { return machines.at(static_cast<std::size_t>(i - 1)); }
  std::vector<MemoryState> initial_states() const;
  /// Largest machine.
  std::size_t memory_size() const;
};

/// Smallest machine with the same behaviour: states are merged when they
/// prescribe the same actions and their updates lead to merged states.
/// `class_of`, when given, receives the new state of every old state.
MooreMachine minimize(const MooreMachine& machine, std::vector<MemoryState>* class_of = nullptr);

/// Finite-memory profile whose subgame outcomes are the witness lassoes.
/// All players share the memory (entry, position), minimized; only the
/// actions differ. `entry_states`, when given, receives the state in which
/// the lasso of each entry starts. Throws WitnessNotGood / WitnessIncomplete.
StrategyProfile synthesize(const SymbolicWitness& witness, const Game& game,
                           const ObjectiveSet& objectives, VertexId v0,
                           std::map<IndexEntry, MemoryState>* entry_states = nullptr);

/// The construction behind synthesize() without the goodness check. The
/// profile follows the witness lassoes; it is a weak SPE iff the witness is
/// good. Throws WitnessIncomplete.
StrategyProfile realize(const SymbolicWitness& witness, const Game& game, VertexId v0,
                        std::map<IndexEntry, MemoryState>* entry_states = nullptr);

/// (|V|·|Π| + 1) · 2|V|^2
std::size_t synthesis_size_bound(const Game& game);

/// The unique play from `start` when every player follows the profile from
/// the given memory states. Throws MachinePartial on an undefined entry.
Lasso outcome_from(const StrategyProfile& profile, const Game& game, VertexId start,
                   const std::vector<MemoryState>& states);

}  // namespace wspe
