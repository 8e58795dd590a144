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

#include <optional>
#include <vector>

#include "wspe/game.hpp"
#include "wspe/lasso.hpp"
#include "wspe/objectives.hpp"
#include "wspe/strategy.hpp"

namespace wspe {

/// Finite quotient of a history: current vertex plus every player's memory.
struct Configuration {
  VertexId vertex = 0;
  std::vector<MemoryState> states;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// A profitable one-shot deviation: at `configuration`, `player` gains by
/// moving to `deviation` instead of `prescribed`.
struct Counterexample {
  Configuration configuration;
  Player player = 0;
  VertexId prescribed = 0;
  VertexId deviation = 0;
  bool gain = false;
  bool deviation_gain = false;
  Lasso outcome;
  Lasso deviation_outcome;
};

struct VerifyStats {
  std::size_t configurations = 0;
};

/// Decides whether `profile` is a very weak SPE from v0 (equivalently a
/// weak SPE). Explores every configuration reachable from (v0, initial
/// states) along arbitrary game edges and checks each one-shot deviation
/// against the continuation of the profile. Returns the first
/// counterexample in exploration order, or nullopt.
///
/// Requires prefix-independent objectives; throws MachinePartial when the
/// profile is undefined on a reachable query.
std::optional<Counterexample> verify_very_weak_spe(const Game& game,
                                                   const ObjectiveSet& objectives, VertexId v0,
                                                   const StrategyProfile& profile,
                                                   VerifyStats* stats = nullptr);

}  // namespace wspe
