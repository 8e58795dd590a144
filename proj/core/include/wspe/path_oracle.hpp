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

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wspe/game.hpp"
#include "wspe/lasso.hpp"
#include "wspe/objectives.hpp"
#include "wspe/payoff.hpp"

namespace wspe {

struct OracleOptions {
  /// Largest number of candidate vertices the generic Inf-set enumeration
  /// (used for Muller objectives) will accept.
  std::size_t enumeration_cap = 22;
};

/// Conjunction of Streett pairs: for every (G, R), Inf ∩ G = ∅ or Inf ∩ R ≠ ∅.
struct StreettSpec {
  std::vector<SetPair> pairs;
};

/// Emerson-Lei style emptiness check. Returns a set S that is strongly
/// connected with an edge, lies inside `allowed`, is reachable from `from`
/// inside `allowed` and satisfies every pair of `spec`; nullopt if none.
std::optional<VertexSet> streett_nonempty(const Game& game, const VertexSet& allowed,
                                          VertexId from, const StreettSpec& spec);

/// Disjunction of Streett specs equivalent to "the payoff equals target"
/// for Büchi, co-Büchi, parity, Rabin and Streett objectives. An empty
/// result means no play can have that payoff.
std::vector<StreettSpec> streett_branches(const Game& game, const ObjectiveSet& objectives,
                                          const Payoff& target);

/// Visits every Inf-realizable set S ⊆ allowed reachable from `from`, by
/// increasing cardinality then lexicographically. `visit` returns false to
/// stop. Throws ArenaTooLarge when more than `cap` candidate vertices remain.
void for_each_feasible_inf_set(const Game& game, const VertexSet& allowed, VertexId from,
                               const std::function<bool(const VertexSet&)>& visit,
                               std::size_t cap = OracleOptions{}.enumeration_cap);

std::vector<VertexSet> feasible_inf_sets(const Game& game, const VertexSet& allowed, VertexId from,
                                         std::size_t cap = OracleOptions{}.enumeration_cap);

/// A set S that can be the Inf set of a play from `from` inside `allowed`
/// whose payoff is `target`, or nullopt.
std::optional<VertexSet> find_inf_set(const Game& game, const ObjectiveSet& objectives,
                                      const VertexSet& allowed, VertexId from,
                                      const Payoff& target, const OracleOptions& options = {});

bool exists_play(const Game& game, const ObjectiveSet& objectives, const VertexSet& allowed,
                 VertexId from, const Payoff& target, const OracleOptions& options = {});

/// Lasso from `from` whose cycle visits exactly `inf_set`: a shortest path
/// into the set followed by a closed walk made of shortest paths.
Lasso lasso_through(const Game& game, const VertexSet& allowed, VertexId from,
                    const VertexSet& inf_set);

/// Throws NoSuchPlay when exists_play is false for the same arguments.
Lasso extract_lasso(const Game& game, const ObjectiveSet& objectives, const VertexSet& allowed,
                    VertexId from, const Payoff& target, const OracleOptions& options = {});

/// All vertices u of `allowed` with exists_play(allowed, u, target), computed
/// with one query per strongly connected component.
VertexSet vertices_with_play(const Game& game, const ObjectiveSet& objectives,
                             const VertexSet& allowed, const Payoff& target,
                             const OracleOptions& options = {});

/// Memoizing front-end over the free functions above, bound to one game.
/// Not thread-safe; use one instance per thread.
class PathOracle {
 public:
  PathOracle(const Game& game, const ObjectiveSet& objectives, OracleOptions options = {});

  const Game& game() const noexcept { return game_; }
  const ObjectiveSet& objectives() const noexcept { return objectives_; }
  const OracleOptions& options() const noexcept { return options_; }

  bool exists(const VertexSet& allowed, VertexId from, const Payoff& target);
  VertexSet vertices_with(const VertexSet& allowed, const Payoff& target);
  Lasso extract(const VertexSet& allowed, VertexId from, const Payoff& target);

  std::size_t cache_hits() const noexcept { return hits_; }
  std::size_t queries() const noexcept { return queries_; }

 private:
  struct Key {
    VertexSet allowed;
    VertexId from;
    std::uint64_t target;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  const Game& game_;
  const ObjectiveSet& objectives_;
  OracleOptions options_;
  std::unordered_map<Key, bool, KeyHash> exists_cache_;
  std::unordered_map<Key, VertexSet, KeyHash> sweep_cache_;
  std::size_t hits_ = 0;
  std::size_t queries_ = 0;
};

}  // namespace wspe
