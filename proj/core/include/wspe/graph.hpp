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

namespace wspe {

/// Vertices reachable from `from` using only vertices of `within`.
/// Empty when `from` is outside `within`.
VertexSet reachable(const Game& game, VertexId from, const VertexSet& within);

/// Vertices of `within` that can reach `targets` inside `within`.
VertexSet backward_reachable(const Game& game, const VertexSet& targets, const VertexSet& within);

/// Strongly connected components of the subgraph induced by `within`
/// (Tarjan, iterative). Trivial components are included.
std::vector<VertexSet> sccs(const Game& game, const VertexSet& within);

/// True iff some edge of the game has both endpoints in `s`.
bool has_internal_edge(const Game& game, const VertexSet& s);

/// True iff the subgraph induced by `s` is strongly connected and has an
/// edge, i.e. `s` can be the Inf set of a play staying inside `s`.
bool is_cycle_set(const Game& game, const VertexSet& s);

/// Shortest path (as a vertex sequence, both ends included) from `from` to
/// the nearest vertex of `targets`, staying inside `within`. A zero-length
/// path is returned when `from` is itself a target.
std::optional<std::vector<VertexId>> shortest_path(const Game& game, VertexId from,
                                                   const VertexSet& targets,
                                                   const VertexSet& within);

}  // namespace wspe
