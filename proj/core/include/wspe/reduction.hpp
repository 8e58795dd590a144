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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wspe/game.hpp"
#include "wspe/lasso.hpp"
#include "wspe/objectives.hpp"
#include "wspe/strategy.hpp"

namespace wspe {

/// Product of a Reachability/Safety game with the set of players whose
/// target set has been visited so far. Reachability becomes Büchi and
/// Safety becomes co-Büchi on the flag sets; payoffs are preserved play by
/// play. Only product vertices reachable from the initial one exist, and
/// the initial product vertex has index 0.
struct ReducedGame {
  Game game;
  ObjectiveSet objectives;
  /// Original vertex of each product vertex.
  std::vector<VertexId> base;
  /// Bit i-1 set iff player i's target was visited.
  std::vector<std::uint64_t> flags;
  ObjectiveKind source_kind;
  /// Flags raised on entering each original vertex.
  std::vector<std::uint64_t> trigger;

  std::optional<VertexId> find(VertexId base_vertex, std::uint64_t flag_bits) const;

  std::map<std::pair<VertexId, std::uint64_t>, VertexId> lookup;
};

/// "v@{1,2}"
std::string product_vertex_name(const std::string& base_name, std::uint64_t flags);

/// Throws NotReachSafety for kinds that are already prefix-independent.
ReducedGame to_prefix_independent(const Game& game, const ObjectiveSet& objectives);

/// Base-game play traced by a product play.
Lasso project(const Lasso& lasso, const ReducedGame& reduced);

/// Profile on the base game: each memory state is a pair (product memory,
/// flag set), keeping only pairs reachable along legal plays.
StrategyProfile pull_back_profile(const StrategyProfile& product_profile,
                                  const ReducedGame& reduced, const Game& base_game);

/// Same strategies seen on the product game, so a base-game profile can be
/// checked by the verifier.
StrategyProfile push_forward_profile(const StrategyProfile& base_profile,
                                     const ReducedGame& reduced, const Game& base_game);

}  // namespace wspe
