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
#include "wspe/fixpoint.hpp"

#include <algorithm>
#include <random>

#include "wspe/error.hpp"
#include "wspe/graph.hpp"

namespace wspe {

namespace {

constexpr int kMaxEnumeratedPlayers = 20;

std::vector<Payoff> all_payoffs(int players) {
  if (players > kMaxEnumeratedPlayers) {
    throw Error(Errc::TooLarge, "payoff space of " + std::to_string(players) +
                                    " players is too large to enumerate");
  }
  std::vector<Payoff> out;
  const std::uint64_t count = std::uint64_t{1} << players;
  out.reserve(count);
  for (std::uint64_t b = 0; b < count; ++b) out.emplace_back(players, b);
  return out;
}

void check_thresholds(const Payoff& x, const Payoff& y, int players) {
  if (x.players() != players || y.players() != players) {
    throw Error(Errc::InvalidThresholds, "threshold width does not match the player count");
  }
  if (!x.leq(y)) {
    throw Error(Errc::InvalidThresholds, "lower threshold " + x.str() +
                                             " is not below upper threshold " + y.str());
  }
}

// Visits admissible Remove candidates in canonical order until `visit`
// returns false. Over Boolean payoffs, p_i < p'_i for every p' in the
// successor label means p_i = 0 and every p' has p'_i = 1.
template <typename Visit>
void scan_candidates(const LabelTable& table, const Game& game, Visit&& visit) {
  for (auto vi = table.arena.find_first(); vi != VertexSet::npos; vi = table.arena.find_next(vi)) {
    const auto v = static_cast<VertexId>(vi);
    const Player i = game.owner(v);
    for (const auto& p : table.labels[v]) {
      if (p.get(i)) continue;
      for (VertexId succ : game.successors(v)) {
        const auto& target = table.labels[succ];
        if (target.empty()) {
          throw Error(Errc::EmptyLabelEncountered,
                      "label of '" + game.name(succ) + "' is empty during Remove");
        }
        if (std::all_of(target.begin(), target.end(), [i](const Payoff& q) { return q.get(i); })) {
          if (!visit(RemoveCandidate{v, p, succ})) return;
        }
      }
    }
  }
}

}  // namespace

VertexSet LabelTable::holders(const Payoff& p) const {
  VertexSet s(labels.size());
  for (auto v = arena.find_first(); v != VertexSet::npos; v = arena.find_next(v)) {
    if (labels[v].contains(p)) s.set(v);
  }
  return s;
}

bool LabelTable::all_nonempty() const {
  for (auto v = arena.find_first(); v != VertexSet::npos; v = arena.find_next(v)) {
    if (labels[v].empty()) return false;
  }
  return true;
}

LabelTable init_labels(const Game& game, const ObjectiveSet& objectives, VertexId v0,
                       PathOracle& oracle) {
  LabelTable table;
  table.arena = reachable(game, v0, game.full_set());
  table.labels.assign(game.size(), PayoffSet{});
  const auto payoffs = all_payoffs(objectives.players());

  // Payoffs realizable inside each component, then pushed back to every
  // arena vertex that can reach the component.
  for (const auto& k : sccs(game, table.arena)) {
    if (!has_internal_edge(game, k)) continue;
    const auto rep = static_cast<VertexId>(k.find_first());
    PayoffSet inside;
    for (const auto& p : payoffs) {
      if (oracle.exists(k, rep, p)) inside.insert(p);
    }
    if (inside.empty()) continue;
    const VertexSet up = backward_reachable(game, k, table.arena);
    for (auto v = up.find_first(); v != VertexSet::npos; v = up.find_next(v)) {
      for (const auto& p : inside) table.labels[v].insert(p);
    }
  }
  return table;
}

std::vector<RemoveCandidate> remove_candidates(const LabelTable& table, const Game& game) {
  std::vector<RemoveCandidate> out;
  scan_candidates(table, game, [&](const RemoveCandidate& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::optional<RemoveCandidate> remove_step(LabelTable& table, const Game& game) {
  std::optional<RemoveCandidate> found;
  scan_candidates(table, game, [&](const RemoveCandidate& c) {
    found = c;
    return false;
  });
  if (found) table.labels[found->vertex].erase(found->payoff);
  ++table.step;
  return found;
}

std::vector<VertexId> adjust_step(LabelTable& table, const Game& game, PathOracle& oracle,
                                  const Payoff& removed) {
  (void)game;
  const VertexSet allowed = table.holders(removed);
  ++table.step;
  if (allowed.none()) return {};
  const VertexSet keep = oracle.vertices_with(allowed, removed);
  std::vector<VertexId> dropped = members(allowed - keep);
  for (VertexId u : dropped) table.labels[u].erase(removed);
  return dropped;
}

FixpointResult fixpoint(const Game& game, const ObjectiveSet& objectives, VertexId v0,
                        const FixpointOptions& options) {
  PathOracle oracle(game, objectives, options.oracle);
  FixpointResult result;
  result.table = init_labels(game, objectives, v0, oracle);
  if (options.record_rows) result.rows.push_back(result.table.labels);

  std::optional<std::mt19937_64> rng;
  if (options.random_order_seed) rng.emplace(*options.random_order_seed);

  while (true) {
    std::optional<RemoveCandidate> removed;
    if (rng) {
      auto cands = remove_candidates(result.table, game);
      if (!cands.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
        removed = cands[pick(*rng)];
        result.table.labels[removed->vertex].erase(removed->payoff);
      }
      ++result.table.step;
    } else {
      removed = remove_step(result.table, game);
    }

    StepRecord rec;
    rec.k = result.table.step;
    rec.kind = StepKind::Remove;
    if (!removed) {
      result.trace.push_back(std::move(rec));
      break;
    }
    rec.payoff = removed->payoff;
    rec.vertices = {removed->vertex};
    rec.successor = removed->successor;
    rec.empty_label = !result.table.all_nonempty();
    result.trace.push_back(std::move(rec));
    if (options.record_rows) result.rows.push_back(result.table.labels);

    StepRecord adj;
    adj.kind = StepKind::Adjust;
    adj.payoff = removed->payoff;
    adj.adjust_allowed = result.table.holders(removed->payoff);
    adj.vertices = adjust_step(result.table, game, oracle, removed->payoff);
    adj.k = result.table.step;
    adj.empty_label = !result.table.all_nonempty();
    result.trace.push_back(std::move(adj));
    if (options.record_rows) result.rows.push_back(result.table.labels);
    ++result.rounds;
  }
  result.fixpoint_step = 2 * result.rounds;
  return result;
}

Decision decide(const Game& game, const ObjectiveSet& objectives, VertexId v0, const Payoff& x,
                const Payoff& y, const FixpointOptions& options) {
  check_thresholds(x, y, objectives.players());
  Decision d;
  d.fixpoint = fixpoint(game, objectives, v0, options);
  const auto& table = d.fixpoint.table;
  if (!table.all_nonempty()) return d;
  for (const auto& p : table.labels[v0]) {
    if (x.leq(p) && p.leq(y)) {
      d.payoff = p;
      break;
    }
  }
  return d;
}

std::optional<Payoff> decide_constraint(const Game& game, const ObjectiveSet& objectives,
                                        VertexId v0, const Payoff& x, const Payoff& y,
                                        const FixpointOptions& options) {
  return decide(game, objectives, v0, x, y, options).payoff;
}

}  // namespace wspe
