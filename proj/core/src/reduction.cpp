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
#include "wspe/reduction.hpp"

#include <deque>
#include <set>

#include "wspe/error.hpp"

namespace wspe {

namespace {

std::vector<std::uint64_t> triggers(const Game& game, const ObjectiveSet& objectives) {
  std::vector<std::uint64_t> trig(game.size(), 0);
  for (Player i = 1; i <= objectives.players(); ++i) {
    const auto& t = objectives.of(i).target;
    for (auto v = t.find_first(); v != VertexSet::npos; v = t.find_next(v)) {
      trig[v] |= std::uint64_t{1} << (i - 1);
    }
  }
  return trig;
}

}  // namespace

std::optional<VertexId> ReducedGame::find(VertexId base_vertex, std::uint64_t flag_bits) const {
  auto it = lookup.find({base_vertex, flag_bits});
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

std::string product_vertex_name(const std::string& base_name, std::uint64_t flags) {
  std::string s = base_name + "@{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (!((flags >> i) & 1U)) continue;
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

ReducedGame to_prefix_independent(const Game& game, const ObjectiveSet& objectives) {
  if (is_prefix_independent(objectives.kind())) {
    throw Error(Errc::NotReachSafety, "objectives are already prefix-independent");
  }
  objectives.validate(game);
  const auto trig = triggers(game, objectives);

  std::vector<VertexId> base;
  std::vector<std::uint64_t> flags;
  std::map<std::pair<VertexId, std::uint64_t>, VertexId> lookup;
  std::vector<Edge> edges;
  auto intern = [&](VertexId v, std::uint64_t s) {
    auto [it, fresh] = lookup.emplace(std::make_pair(v, s), static_cast<VertexId>(base.size()));
    if (fresh) {
      base.push_back(v);
      flags.push_back(s);
    }
    return it->second;
  };

  intern(game.initial(), trig[game.initial()]);
  for (VertexId p = 0; p < base.size(); ++p) {
    const VertexId v = base[p];
    const std::uint64_t s = flags[p];
    for (VertexId w : game.successors(v)) edges.emplace_back(p, intern(w, s | trig[w]));
  }

  std::vector<std::string> names;
  std::vector<Player> owner;
  for (VertexId p = 0; p < base.size(); ++p) {
    names.push_back(product_vertex_name(game.name(base[p]), flags[p]));
    owner.push_back(game.owner(base[p]));
  }
  Game product(game.players(), std::move(names), std::move(owner), edges, 0);

  std::vector<VertexSet> targets;
  for (Player i = 1; i <= game.players(); ++i) {
    VertexSet t(base.size());
    for (VertexId p = 0; p < base.size(); ++p) {
      if ((flags[p] >> (i - 1)) & 1U) t.set(p);
    }
    targets.push_back(std::move(t));
  }
  const ObjectiveKind kind = objectives.kind() == ObjectiveKind::Reachability
                                 ? ObjectiveKind::Buchi
                                 : ObjectiveKind::CoBuchi;
  return ReducedGame{std::move(product), target_objectives(kind, targets), std::move(base),
                     std::move(flags),   objectives.kind(),                  trig,
                     std::move(lookup)};
}

Lasso project(const Lasso& lasso, const ReducedGame& reduced) {
  Lasso out;
  for (VertexId p : lasso.prefix) out.prefix.push_back(reduced.base.at(p));
  for (VertexId p : lasso.cycle) out.cycle.push_back(reduced.base.at(p));
  return out;
}

StrategyProfile pull_back_profile(const StrategyProfile& product_profile,
                                  const ReducedGame& reduced, const Game& base_game) {
  const std::size_t n = base_game.size();
  const auto& trig = reduced.trigger;
  auto enter = [&](VertexId w, std::uint64_t s) { return reduced.find(w, s | trig[w]); };

  StrategyProfile out;
  for (const auto& machine : product_profile.machines) {
    using Pair = std::pair<MemoryState, std::uint64_t>;
    std::map<Pair, MemoryState> pair_id;
    std::vector<Pair> pairs;
    auto intern_pair = [&](const Pair& pr) {
      auto [it, fresh] = pair_id.emplace(pr, static_cast<MemoryState>(pairs.size()));
      if (fresh) pairs.push_back(pr);
      return it->second;
    };

    // Walk every legal play of the base game, carrying product memory and flags.
    const VertexId v0 = reduced.base[0];
    std::set<std::tuple<VertexId, MemoryState, std::uint64_t>> seen;
    std::deque<std::tuple<VertexId, MemoryState, std::uint64_t>> queue;
    intern_pair({machine.initial(), reduced.flags[0]});
    queue.emplace_back(v0, machine.initial(), reduced.flags[0]);
    seen.insert(queue.back());
    while (!queue.empty()) {
      auto [v, m, s] = queue.front();
      queue.pop_front();
      for (VertexId w : base_game.successors(v)) {
        auto pid = enter(w, s);
        if (!pid) continue;
        const MemoryState next = machine.update(m, *pid);
        if (next == kNoState) continue;
        const std::uint64_t s2 = reduced.flags[*pid];
        intern_pair({next, s2});
        if (seen.emplace(w, next, s2).second) queue.emplace_back(w, next, s2);
      }
    }

    MooreMachine pulled(pairs.size(), n, 0);
    pulled.labels.resize(pairs.size());
    for (MemoryState k = 0; k < pairs.size(); ++k) {
      const auto [m, s] = pairs[k];
      pulled.labels[k] = (m < machine.labels.size() ? machine.labels[m] : std::to_string(m)) +
                         product_vertex_name("", s);
      for (VertexId w = 0; w < n; ++w) {
        MemoryState to = k;
        if (auto pid = enter(w, s)) {
          const MemoryState next = machine.update(m, *pid);
          if (auto it = pair_id.find({next, reduced.flags[*pid]}); it != pair_id.end()) {
            to = it->second;
          }
        }
        pulled.set_update(k, w, to);
      }
      for (VertexId v = 0; v < n; ++v) {
        auto pid = reduced.find(v, s);
        if (!pid) continue;
        const VertexId a = machine.action(m, *pid);
        if (a != kNoVertex) pulled.set_action(k, v, reduced.base[a]);
      }
    }
    out.machines.push_back(std::move(pulled));
  }
  return out;
}

StrategyProfile push_forward_profile(const StrategyProfile& base_profile,
                                     const ReducedGame& reduced, const Game& base_game) {
  const std::size_t np = reduced.game.size();
  StrategyProfile out;
  for (const auto& machine : base_profile.machines) {
    if (machine.vertex_count() != base_game.size()) {
      throw Error(Errc::MachinePartial, "machine tables do not match the vertex count");
    }
    MooreMachine fwd(machine.state_count(), np, machine.initial());
    fwd.labels = machine.labels;
    for (MemoryState m = 0; m < machine.state_count(); ++m) {
      for (VertexId p = 0; p < np; ++p) {
        fwd.set_update(m, p, machine.update(m, reduced.base[p]));
        const VertexId a = machine.action(m, reduced.base[p]);
        if (a == kNoVertex) continue;
        for (VertexId q : reduced.game.successors(p)) {
          if (reduced.base[q] == a) {
            fwd.set_action(m, p, q);
            break;
          }
        }
      }
    }
    out.machines.push_back(std::move(fwd));
  }
  return out;
}

}  // namespace wspe
