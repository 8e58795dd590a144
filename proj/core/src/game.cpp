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
#include "wspe/game.hpp"

#include <algorithm>

#include "wspe/error.hpp"

namespace wspe {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidGame: return "InvalidGame";
    case Errc::InvalidObjective: return "InvalidObjective";
    case Errc::ObjectiveNotPrefixIndependent: return "ObjectiveNotPrefixIndependent";
    case Errc::VertexNotAllowed: return "VertexNotAllowed";
    case Errc::ArenaTooLarge: return "ArenaTooLarge";
    case Errc::NoSuchPlay: return "NoSuchPlay";
    case Errc::EmptyLabelEncountered: return "EmptyLabelEncountered";
    case Errc::InvalidThresholds: return "InvalidThresholds";
    case Errc::TargetNotAchievable: return "TargetNotAchievable";
    case Errc::InternalWitnessNotGood: return "InternalWitnessNotGood";
    case Errc::MalformedWitness: return "MalformedWitness";
    case Errc::WitnessNotGood: return "WitnessNotGood";
    case Errc::WitnessIncomplete: return "WitnessIncomplete";
    case Errc::MachinePartial: return "MachinePartial";
    case Errc::NotReachSafety: return "NotReachSafety";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Game::Game(int players, std::vector<std::string> names, std::vector<Player> owner,
           const std::vector<Edge>& edges, VertexId initial)
    : players_(players), names_(std::move(names)), owner_(std::move(owner)), initial_(initial) {
  const std::size_t n = names_.size();
  if (players_ < 1) throw Error(Errc::InvalidGame, "at least one player is required");
  if (n == 0) throw Error(Errc::InvalidGame, "the vertex set is empty");
  if (owner_.size() != n) throw Error(Errc::InvalidGame, "owner map must cover every vertex");
  if (initial_ >= n) throw Error(Errc::InvalidGame, "initial vertex out of range");

  for (VertexId v = 0; v < n; ++v) {
    if (!index_.emplace(names_[v], v).second) {
      throw Error(Errc::InvalidGame, "duplicate vertex name '" + names_[v] + "'");
    }
    if (owner_[v] < 1 || owner_[v] > players_) {
      throw Error(Errc::InvalidGame, "vertex '" + names_[v] + "' has owner outside 1.." +
                                         std::to_string(players_));
    }
  }

  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error(Errc::InvalidGame, "edge endpoint out of range");
    adj[u].push_back(v);
  }
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (VertexId v = 0; v < n; ++v) {
    auto& a = adj[v];
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty()) throw Error(Errc::InvalidGame, "vertex '" + names_[v] + "' has no successor");
    succ_.insert(succ_.end(), a.begin(), a.end());
    offsets_.push_back(succ_.size());
  }
  edge_count_ = succ_.size();
}

std::optional<VertexId> Game::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Game::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(Errc::InvalidGame, "unknown vertex '" + std::string(name) + "'");
}

bool Game::has_edge(VertexId from, VertexId to) const {
  auto s = successors(from);
  return std::binary_search(s.begin(), s.end(), to);
}

std::vector<Edge> Game::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v : successors(u)) out.emplace_back(u, v);
  }
  return out;
}

Game Game::with_initial(VertexId v) const {
  if (v >= size()) throw Error(Errc::InvalidGame, "initial vertex out of range");
  Game g = *this;
  g.initial_ = v;
  return g;
}

std::vector<VertexId> members(const VertexSet& s) {
  std::vector<VertexId> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

VertexSet make_set(std::size_t n, std::initializer_list<VertexId> vs) {
  return make_set(n, std::span<const VertexId>(vs.begin(), vs.size()));
}

VertexSet make_set(std::size_t n, std::span<const VertexId> vs) {
  VertexSet s(n);
  for (VertexId v : vs) s.set(v);
  return s;
}

}  // namespace wspe
