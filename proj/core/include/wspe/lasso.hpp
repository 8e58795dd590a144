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

#include <string>
#include <vector>

#include "wspe/game.hpp"

namespace wspe {

/// Ultimately periodic play prefix·cycle^ω. The prefix may be empty; the
/// cycle is nonempty but need not be simple.
struct Lasso {
  std::vector<VertexId> prefix;
  std::vector<VertexId> cycle;

  VertexId first() const { return prefix.empty() ? cycle.front() : prefix.front(); }

  /// Number of edges of the history prefix·cycle.
  std::size_t length() const { return prefix.size() + cycle.size() - 1; }

  /// Vertex at position `pos` of the infinite play.
  VertexId at(std::size_t pos) const;

  /// prefix followed by cycle, as one sequence.
  std::vector<VertexId> word() const;

  /// Checks nonempty cycle and that consecutive vertices (including the
  /// closing cycle edge) are joined by edges of `game`.
  bool valid_in(const Game& game) const;

  /// Canonical representative of the same infinite play: primitive cycle,
  /// shortest prefix. Two lassoes describe the same play iff their
  /// normalized forms are equal.
  Lasso normalized() const;

  /// "v0 v1 v2 (v3)^w"
  std::string str(const Game& game) const;

  friend bool operator==(const Lasso&, const Lasso&) = default;
};

VertexSet occ(const Lasso& lasso, std::size_t vertex_count);
VertexSet inf(const Lasso& lasso, std::size_t vertex_count);

}  // namespace wspe
