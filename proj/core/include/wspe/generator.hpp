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

#include "wspe/game.hpp"
#include "wspe/objectives.hpp"

namespace wspe {

/// Parameters of the random game model. All draws come from one
/// std::mt19937_64 seeded with `seed`, so output is reproducible.
///
///  - edges: every ordered pair (u, v), self-loops included, independently
///    with probability `density`; a vertex left without successor gets one
///    uniform successor.
///  - owners: uniform over players.
///  - target kinds: each vertex joins F_i with probability 1/2.
///  - Parity: colors uniform in [1, max_color].
///  - Muller: colors uniform in [1, max_color]; 1..max_family families,
///    each a uniform nonempty subset of the colors used.
///  - ExplicitMuller: 1..max_family families; each is a random vertex set
///    that supports a cycle when one is found within a few draws, otherwise
///    a uniform nonempty subset.
///  - Rabin/Streett: 1..max_pairs pairs, each vertex in G and in R with
///    probability 1/2 independently.
struct GeneratorParams {
  std::uint64_t seed = 1;
  int vertices = 5;
  int players = 2;
  ObjectiveKind kind = ObjectiveKind::Buchi;
  double density = 0.3;
  int max_color = 4;
  int max_pairs = 2;
  int max_family = 3;
};

struct GeneratedGame {
  Game game;
  ObjectiveSet objectives;
};

/// Vertices are named v0, v1, ...; the initial vertex is v0.
/// Throws InvalidParams.
GeneratedGame gen_random_game(const GeneratorParams& params);

}  // namespace wspe
