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
#include "wspe/witness.hpp"

#include <algorithm>

#include "wspe/error.hpp"
#include "wspe/graph.hpp"

namespace wspe {

namespace {

std::string entry_str(const IndexEntry& e, const Game& game) {
  return "(" + std::to_string(e.player) + "," + game.name(e.vertex) + ")";
}

}  // namespace

DeviationIndex deviation_index(const Game& game, VertexId v0) {
  const VertexSet reach = reachable(game, v0, game.full_set());
  DeviationIndex index{{0, v0}};
  for (auto u = reach.find_first(); u != VertexSet::npos; u = reach.find_next(u)) {
    const auto v = static_cast<VertexId>(u);
    for (VertexId w : game.successors(v)) index.push_back({game.owner(v), w});
  }
  std::sort(index.begin(), index.end());
  index.erase(std::unique(index.begin(), index.end()), index.end());
  return index;
}

void check_witness_structure(const SymbolicWitness& witness, const Game& game) {
  const std::size_t bound = 2 * game.size() * game.size();
  for (const auto& [entry, lasso] : witness.lassoes) {
    if (entry.player < 0 || entry.player > game.players() || entry.vertex >= game.size()) {
      throw Error(Errc::MalformedWitness, "entry out of range");
    }
    if (!lasso.valid_in(game)) {
      throw Error(Errc::MalformedWitness, "lasso of " + entry_str(entry, game) +
                                              " is not a play of the game");
    }
    if (lasso.first() != entry.vertex) {
      throw Error(Errc::MalformedWitness, "lasso of " + entry_str(entry, game) +
                                              " does not start at " + game.name(entry.vertex));
    }
    if (lasso.length() > bound) {
      throw Error(Errc::MalformedWitness, "lasso of " + entry_str(entry, game) +
                                              " is longer than 2|V|^2");
    }
  }
}

std::optional<GoodnessViolation> is_good(const SymbolicWitness& witness, const Game& game,
                                         const ObjectiveSet& objectives) {
  check_witness_structure(witness, game);
  std::map<IndexEntry, Payoff> payoffs;
  for (const auto& [entry, lasso] : witness.lassoes) {
    payoffs.emplace(entry, payoff_of(lasso, game, objectives));
  }

  for (const auto& [source, lasso] : witness.lassoes) {
    const Payoff& mine = payoffs.at(source);
    VertexSet seen(game.size());
    for (VertexId v : lasso.word()) {
      if (seen.test(v)) continue;
      seen.set(v);
      const Player i = game.owner(v);
      for (VertexId w : game.successors(v)) {
        const IndexEntry dev{i, w};
        auto it = payoffs.find(dev);
        if (it == payoffs.end()) {
          throw Error(Errc::WitnessIncomplete, "missing lasso for " + entry_str(dev, game));
        }
        if (!mine.get(i) && it->second.get(i)) {
          return GoodnessViolation{source, v, dev, false, true};
        }
      }
    }
  }
  return std::nullopt;
}

SymbolicWitness build_witness(const Game& game, const ObjectiveSet& objectives,
                              const LabelTable& fixtable, VertexId v0, const Payoff& target,
                              PathOracle& oracle) {
  if (!fixtable.arena.test(v0) || !fixtable.at(v0).contains(target)) {
    throw Error(Errc::TargetNotAchievable,
                "payoff " + target.str() + " is not in the fixpoint label of " + game.name(v0));
  }
  if (!fixtable.all_nonempty()) {
    throw Error(Errc::TargetNotAchievable, "some reachable vertex has an empty fixpoint label");
  }

  SymbolicWitness witness;
  for (const IndexEntry& e : deviation_index(game, v0)) {
    Payoff chosen = target;
    if (e.player != 0) {
      const PayoffSet& label = fixtable.at(e.vertex);
      // Labels are sorted, so the first minimizer is the lexicographically
      // smallest one.
      const bool any_zero = std::any_of(label.begin(), label.end(),
                                        [&](const Payoff& q) { return !q.get(e.player); });
      chosen = *std::find_if(label.begin(), label.end(),
                             [&](const Payoff& q) { return q.get(e.player) == !any_zero; });
    }
    witness.lassoes.emplace(e, oracle.extract(fixtable.holders(chosen), e.vertex, chosen));
  }

  if (auto bad = is_good(witness, game, objectives)) {
    throw Error(Errc::InternalWitnessNotGood,
                "built witness violates goodness at " + game.name(bad->at) + " between " +
                    entry_str(bad->source, game) + " and " + entry_str(bad->deviation, game));
  }
  return witness;
}

SymbolicWitness build_witness(const Game& game, const ObjectiveSet& objectives,
                              const LabelTable& fixtable, VertexId v0, const Payoff& target,
                              const OracleOptions& options) {
  PathOracle oracle(game, objectives, options);
  return build_witness(game, objectives, fixtable, v0, target, oracle);
}

}  // namespace wspe
