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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace wspe {

/// Dense vertex index. External names are kept on the Game.
using VertexId = std::uint32_t;

/// Player number, 1-based as in the game description. 0 is reserved for
/// the "no deviation" slot of a deviation index.
using Player = int;

/// Vertex subsets are bitsets sized to the vertex count of their game.
using VertexSet = boost::dynamic_bitset<>;

using Edge = std::pair<VertexId, VertexId>;

/// Turn-based arena: a finite directed graph whose vertices are partitioned
/// among players, with a designated initial vertex. Every vertex has at
/// least one successor. Immutable once constructed.
class Game {
 public:
  Game(int players, std::vector<std::string> names, std::vector<Player> owner,
       const std::vector<Edge>& edges, VertexId initial);

  int players() const noexcept { return players_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  VertexId initial() const noexcept { return initial_; }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Like find() but throws InvalidGame for unknown names.
  VertexId id(std::string_view name) const;

  Player owner(VertexId v) const { return owner_.at(v); }

  /// Successors in ascending index order, without duplicates.
  std::span<const VertexId> successors(VertexId v) const {
    return {succ_.data() + offsets_[v], succ_.data() + offsets_[v + 1]};
  }
  bool has_edge(VertexId from, VertexId to) const;

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet full_set() const {
    VertexSet s(size());
    s.set();
    return s;
  }

  std::vector<Edge> edges() const;

  /// Same arena, different initial vertex.
  Game with_initial(VertexId v) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  int players_;
  std::vector<std::string> names_;
  std::vector<Player> owner_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> succ_;
  std::size_t edge_count_ = 0;
  VertexId initial_;
  std::unordered_map<std::string, VertexId> index_;
};

/// Vertices of a set in ascending order.
std::vector<VertexId> members(const VertexSet& s);

VertexSet make_set(std::size_t n, std::initializer_list<VertexId> vs);
VertexSet make_set(std::size_t n, std::span<const VertexId> vs);

}  // namespace wspe
