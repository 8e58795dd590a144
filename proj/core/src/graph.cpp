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
#include "wspe/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace wspe {

VertexSet reachable(const Game& game, VertexId from, const VertexSet& within) {
  VertexSet seen(game.size());
  if (!within.test(from)) return seen;
  std::vector<VertexId> stack{from};
  seen.set(from);
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : game.successors(u)) {
      if (within.test(v) && !seen.test(v)) {
        seen.set(v);
        stack.push_back(v);
      }
    }
  }
  return seen;
}

VertexSet backward_reachable(const Game& game, const VertexSet& targets, const VertexSet& within) {
  const std::size_t n = game.size();
  std::vector<std::vector<VertexId>> pred(n);
  for (VertexId u = 0; u < n; ++u) {
    if (!within.test(u)) continue;
    for (VertexId v : game.successors(u)) {
      if (within.test(v)) pred[v].push_back(u);
    }
  }
  VertexSet seen = targets & within;
  std::vector<VertexId> stack = members(seen);
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : pred[v]) {
      if (!seen.test(u)) {
        seen.set(u);
        stack.push_back(u);
      }
    }
  }
  return seen;
}

std::vector<VertexSet> sccs(const Game& game, const VertexSet& within) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = game.size();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<VertexSet> out;
  std::size_t counter = 0;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (auto root = within.find_first(); root != VertexSet::npos; root = within.find_next(root)) {
    if (index[root] != kUnvisited) continue;
    call.push_back({static_cast<VertexId>(root), 0});
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<VertexId>(root));
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      auto succ = game.successors(f.v);
      if (f.next < succ.size()) {
        VertexId w = succ[f.next++];
        if (!within.test(w)) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) {
        VertexId parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == index[v]) {
        VertexSet comp(n);
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.set(w);
        } while (w != v);
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

bool has_internal_edge(const Game& game, const VertexSet& s) {
  for (auto u = s.find_first(); u != VertexSet::npos; u = s.find_next(u)) {
    for (VertexId v : game.successors(static_cast<VertexId>(u))) {
      if (s.test(v)) return true;
    }
  }
  return false;
}

bool is_cycle_set(const Game& game, const VertexSet& s) {
  auto first = s.find_first();
  if (first == VertexSet::npos) return false;
  if (!has_internal_edge(game, s)) return false;
  if (reachable(game, static_cast<VertexId>(first), s) != s) return false;
  return backward_reachable(game, make_set(game.size(), {static_cast<VertexId>(first)}), s) == s;
}

std::optional<std::vector<VertexId>> shortest_path(const Game& game, VertexId from,
                                                   const VertexSet& targets,
                                                   const VertexSet& within) {
  if (!within.test(from)) return std::nullopt;
  if (targets.test(from)) return std::vector<VertexId>{from};
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> parent(game.size(), kNone);
  std::deque<VertexId> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : game.successors(u)) {
      if (!within.test(v) || parent[v] != kNone) continue;
      parent[v] = u;
      if (targets.test(v)) {
        std::vector<VertexId> path{v};
        while (path.back() != from) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

}  // namespace wspe
