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
#include <optional>

#include "wspe/game.hpp"
#include "wspe/objectives.hpp"
#include "wspe/payoff.hpp"
#include "wspe/witness.hpp"

// Exhaustive reference implementations for tests. Nothing here calls the
// solver's graph, path or fixpoint code; vertex sets are plain 64-bit masks.
namespace wspe::brute {

inline constexpr std::size_t kMaxAllowed = 20;

/// Some play from `from` staying in `allowed` has payoff `target`. Tries
/// every subset of `allowed` as the Inf set. Prefix-independent kinds only.
/// Throws TooLarge when |allowed| > 20 or the game has more than 64 vertices.
bool exists_play(const Game& game, const ObjectiveSet& objectives, const VertexSet& allowed,
                 VertexId from, const Payoff& target);

/// Every payoff of some play from `from` in the whole game.
PayoffSet payoff_set(const Game& game, const ObjectiveSet& objectives, VertexId from);

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct SearchOptions {
  /// Exhaustive enumeration of the lasso class; defaults to |V| <= 4.
  std::optional<bool> exhaustive;
  /// Sampled mode: number of random lassoes drawn.
  std::size_t budget = 100000;
  std::uint64_t seed = 1;
};

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<SymbolicWitness> witness;
  /// Distinct (payoff, Occ) lasso shapes considered.
  std::size_t shapes = 0;
};

/// Looks for a good symbolic witness whose (0, v0) lasso has payoff
/// `target`. Exhaustive mode tries every feasible Inf set and every simple
/// prefix into it, closing each with a walk that covers the Inf set. Any
/// lasso can be shortcut to one of these with the same Inf set and a
/// smaller Occ set, which only weakens the goodness constraints, so
/// NotFound is a proof of absence. Sampled mode draws random lassoes and can only report Found or
/// BudgetExceeded.
SearchResult witness_search(const Game& game, const ObjectiveSet& objectives, VertexId v0,
                            const Payoff& target, const SearchOptions& options = {});

}  // namespace wspe::brute
