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

#include <string_view>
#include <vector>

#include "wspe/game.hpp"
#include "wspe/lasso.hpp"
#include "wspe/payoff.hpp"

namespace wspe {

enum class ObjectiveKind {
  Reachability,
  Safety,
  Buchi,
  CoBuchi,
  Parity,
  ExplicitMuller,
  Muller,
  Rabin,
  Streett,
};

std::string_view to_string(ObjectiveKind kind) noexcept;
/// Accepts the names produced by to_string ("buchi", "explicit_muller", ...).
ObjectiveKind parse_objective_kind(std::string_view name);

/// All kinds but Reachability and Safety.
constexpr bool is_prefix_independent(ObjectiveKind kind) noexcept {
  return kind != ObjectiveKind::Reachability && kind != ObjectiveKind::Safety;
}

/// A (G, R) pair of vertex sets, used for Rabin/Streett conditions.
struct SetPair {
  VertexSet g;
  VertexSet r;
  friend bool operator==(const SetPair&, const SetPair&) = default;
};

/// Per-player objective data. Only the fields relevant to the kind are
/// populated:
///   Reachability/Safety/Buchi/CoBuchi  target
///   Parity                             colors (one per vertex, >= 1, max-even wins)
///   ExplicitMuller                     families (sets of vertices)
///   Muller                             colors + color_families (sorted color lists)
///   Rabin/Streett                      pairs
struct PlayerObjective {
  VertexSet target;
  std::vector<int> colors;
  std::vector<VertexSet> families;
  std::vector<std::vector<int>> color_families;
  std::vector<SetPair> pairs;

  friend bool operator==(const PlayerObjective&, const PlayerObjective&) = default;
};

/// One objective per player, all of the same kind.
class ObjectiveSet {
 public:
  ObjectiveSet(ObjectiveKind kind, std::vector<PlayerObjective> players);

  ObjectiveKind kind() const noexcept { return kind_; }
  int players() const noexcept { return static_cast<int>(players_.size()); }
  const PlayerObjective& of(Player i) const { return players_.at(static_cast<std::size_t>(i - 1)); }

  /// Throws InvalidObjective when the data does not fit the game (player
  /// count, set sizes, total colorings, colors >= 1).
  void validate(const Game& game) const;

  /// Membership of the play with the given Occ and Inf sets in player i's
  /// objective. Occ only matters for Reachability/Safety.
  bool gain(const VertexSet& occ, const VertexSet& inf, Player i) const;
  Payoff payoff(const VertexSet& occ, const VertexSet& inf) const;

  friend bool operator==(const ObjectiveSet&, const ObjectiveSet&) = default;

 private:
  ObjectiveKind kind_;
  std::vector<PlayerObjective> players_;
};

bool gain(const Lasso& lasso, const Game& game, const ObjectiveSet& objectives, Player i);
Payoff payoff_of(const Lasso& lasso, const Game& game, const ObjectiveSet& objectives);

/// Convenience constructors for vertex-target kinds.
ObjectiveSet target_objectives(ObjectiveKind kind, const std::vector<VertexSet>& targets);

}  // namespace wspe
