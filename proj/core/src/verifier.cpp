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
#include "wspe/verifier.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "wspe/error.hpp"

namespace wspe {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

class ConfigGraph {
 public:
  ConfigGraph(const Game& game, const StrategyProfile& profile) : game_(game), profile_(profile) {}

  std::size_t intern(VertexId v, const std::vector<MemoryState>& states) {
    std::vector<MemoryState> key = states;
    key.push_back(v);
    auto [it, fresh] = ids_.emplace(std::move(key), configs_.size());
    if (fresh) {
      configs_.push_back({v, states});
      prescribed_.push_back(kUnset);
      prescribed_action_.push_back(kNoVertex);
      moves_.emplace_back();
      queue_.push_back(it->second);
    }
    return it->second;
  }

  void explore() {
    while (!queue_.empty()) {
      const std::size_t c = queue_.front();
      queue_.pop_front();
      const VertexId v = configs_[c].vertex;
      const auto states = configs_[c].states;
      const Player i = game_.owner(v);
      const VertexId act = profile_.of(i).action(states[static_cast<std::size_t>(i - 1)], v);
      if (act == kNoVertex || !game_.has_edge(v, act)) {
        throw Error(Errc::MachinePartial, "player " + std::to_string(i) +
                                              " has no legal action at " + game_.name(v));
      }
      prescribed_action_[c] = act;
      std::vector<std::pair<VertexId, std::size_t>> moves;
      for (VertexId w : game_.successors(v)) {
        std::vector<MemoryState> next = states;
        for (std::size_t j = 0; j < next.size(); ++j) {
          next[j] = profile_.machines[j].update(next[j], w);
          if (next[j] == kNoState || next[j] >= profile_.machines[j].state_count()) {
            throw Error(Errc::MachinePartial, "undefined memory update on " + game_.name(w));
          }
        }
        const std::size_t d = intern(w, next);
        moves.emplace_back(w, d);
        if (w == act) prescribed_[c] = d;
      }
      moves_[c] = std::move(moves);
    }
  }

  // Payoff of the profile's outcome from every configuration. The
  // prescribed-successor graph is functional, so each walk ends in a cycle
  // whose vertices form the Inf set.
  std::vector<Payoff> outcome_payoffs(const ObjectiveSet& objectives) const {
    const std::size_t n = configs_.size();
    std::vector<Payoff> pay(n);
    std::vector<int> state(n, 0);
    std::vector<std::size_t> path;
    for (std::size_t c = 0; c < n; ++c) {
      if (state[c] != 0) continue;
      path.clear();
      std::size_t x = c;
      while (state[x] == 0) {
        state[x] = 1;
        path.push_back(x);
        x = prescribed_[x];
      }
      std::size_t tail = path.size();
      Payoff p;
      if (state[x] == 1) {
        tail = static_cast<std::size_t>(std::find(path.begin(), path.end(), x) - path.begin());
        VertexSet cyc(game_.size());
        for (std::size_t k = tail; k < path.size(); ++k) cyc.set(configs_[path[k]].vertex);
        p = objectives.payoff(cyc, cyc);
      } else {
        p = pay[x];
      }
      for (std::size_t y : path) {
        pay[y] = p;
        state[y] = 2;
      }
    }
    return pay;
  }

  const std::vector<Configuration>& configs() const { return configs_; }
  const std::vector<std::pair<VertexId, std::size_t>>& moves(std::size_t c) const { return moves_[c]; }
  VertexId prescribed_action(std::size_t c) const { return prescribed_action_[c]; }

 private:
  const Game& game_;
  const StrategyProfile& profile_;
  std::unordered_map<std::vector<MemoryState>, std::size_t, boost::hash<std::vector<MemoryState>>> ids_;
  std::vector<Configuration> configs_;
  std::deque<std::size_t> queue_;
  std::vector<std::size_t> prescribed_;
  std::vector<VertexId> prescribed_action_;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> moves_;
};

}  // namespace

std::optional<Counterexample> verify_very_weak_spe(const Game& game,
                                                   const ObjectiveSet& objectives, VertexId v0,
                                                   const StrategyProfile& profile,
                                                   VerifyStats* stats) {
  if (!is_prefix_independent(objectives.kind())) {
    throw Error(Errc::ObjectiveNotPrefixIndependent,
                "verify Reachability/Safety profiles on the reduced game");
  }
  if (profile.machines.size() != static_cast<std::size_t>(game.players())) {
    throw Error(Errc::MachinePartial, "profile must have one machine per player");
  }
  for (const auto& m : profile.machines) {
    if (m.vertex_count() != game.size()) {
      throw Error(Errc::MachinePartial, "machine tables do not match the vertex count");
    }
  }

  ConfigGraph graph(game, profile);
  graph.intern(v0, profile.initial_states());
  graph.explore();
  if (stats) stats->configurations = graph.configs().size();
  const auto pay = graph.outcome_payoffs(objectives);

  for (std::size_t c = 0; c < graph.configs().size(); ++c) {
    const auto& conf = graph.configs()[c];
    const Player i = game.owner(conf.vertex);
    if (pay[c].get(i)) continue;
    const VertexId act = graph.prescribed_action(c);
    for (const auto& [w, d] : graph.moves(c)) {
      if (w == act || !pay[d].get(i)) continue;
      Counterexample cx;
      cx.configuration = conf;
      cx.player = i;
      cx.prescribed = act;
      cx.deviation = w;
      cx.gain = false;
      cx.deviation_gain = true;
      cx.outcome = outcome_from(profile, game, conf.vertex, conf.states);
      cx.deviation_outcome = outcome_from(profile, game, w, graph.configs()[d].states);
      return cx;
    }
  }
  return std::nullopt;
}

}  // namespace wspe
