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
#include "wspe/strategy.hpp"

#include <algorithm>
#include <map>

#include "wspe/error.hpp"

namespace wspe {

MooreMachine::MooreMachine(std::size_t states, std::size_t vertices, MemoryState initial)
    : states_(states),
      vertices_(vertices),
      initial_(initial),
      update_(states * vertices, kNoState),
      action_(states * vertices, kNoVertex) {
  if (states == 0 || initial >= states) {
    throw Error(Errc::InvalidParams, "machine needs a valid initial state");
  }
}

std::vector<MemoryState> StrategyProfile::initial_states() const {
  std::vector<MemoryState> s;
  s.reserve(machines.size());
  for (const auto& m : machines) s.push_back(m.initial());
  return s;
}

std::size_t StrategyProfile::memory_size() const {
  std::size_t best = 0;
  for (const auto& m : machines) best = std::max(best, m.state_count());
  return best;
}

std::size_t synthesis_size_bound(const Game& game) {
  const std::size_t v = game.size();
  return (v * static_cast<std::size_t>(game.players()) + 1) * 2 * v * v;
}

MooreMachine minimize(const MooreMachine& machine, std::vector<MemoryState>* class_of) {
  const std::size_t states = machine.state_count();
  const std::size_t n = machine.vertex_count();
  std::vector<MemoryState> cls(states, 0);

  // Moore partition refinement, starting from the action rows.
  std::size_t classes = 0;
  {
    std::map<std::vector<VertexId>, MemoryState> by_row;
    for (MemoryState m = 0; m < states; ++m) {
      std::vector<VertexId> row(n);
      for (VertexId v = 0; v < n; ++v) row[v] = machine.action(m, v);
      cls[m] = by_row.emplace(std::move(row), static_cast<MemoryState>(by_row.size())).first->second;
    }
    classes = by_row.size();
  }
  while (true) {
    std::map<std::vector<MemoryState>, MemoryState> by_sig;
    std::vector<MemoryState> next(states);
    for (MemoryState m = 0; m < states; ++m) {
      std::vector<MemoryState> sig{cls[m]};
      for (VertexId v = 0; v < n; ++v) {
        const MemoryState t = machine.update(m, v);
        sig.push_back(t == kNoState ? kNoState : cls[t]);
      }
      next[m] = by_sig.emplace(std::move(sig), static_cast<MemoryState>(by_sig.size())).first->second;
    }
    cls = std::move(next);
    if (by_sig.size() == classes) break;
    classes = by_sig.size();
  }

  // Renumber classes by first occurrence so the result is canonical.
  std::vector<MemoryState> rename(classes, kNoState);
  std::vector<MemoryState> rep;
  for (MemoryState m = 0; m < states; ++m) {
    if (rename[cls[m]] == kNoState) {
      rename[cls[m]] = static_cast<MemoryState>(rep.size());
      rep.push_back(m);
    }
  }
  for (auto& c : cls) c = rename[c];

  MooreMachine out(rep.size(), n, cls[machine.initial()]);
  for (MemoryState c = 0; c < rep.size(); ++c) {
    for (VertexId v = 0; v < n; ++v) {
      const MemoryState t = machine.update(rep[c], v);
      out.set_update(c, v, t == kNoState ? kNoState : cls[t]);
      out.set_action(c, v, machine.action(rep[c], v));
    }
    if (rep[c] < machine.labels.size()) out.labels.push_back(machine.labels[rep[c]]);
  }
  if (class_of != nullptr) *class_of = std::move(cls);
  return out;
}

StrategyProfile synthesize(const SymbolicWitness& witness, const Game& game,
                           const ObjectiveSet& objectives, VertexId v0,
                           std::map<IndexEntry, MemoryState>* entry_states) {
  for (const auto& e : deviation_index(game, v0)) {
    if (!witness.lassoes.contains(e)) {
      throw Error(Errc::WitnessIncomplete, "missing lasso for (" + std::to_string(e.player) +
                                               "," + game.name(e.vertex) + ")");
    }
  }
  if (auto bad = is_good(witness, game, objectives)) {
    throw Error(Errc::WitnessNotGood, "profitable one-shot deviation at " + game.name(bad->at));
  }
  return realize(witness, game, v0, entry_states);
}

StrategyProfile realize(const SymbolicWitness& witness, const Game& game, VertexId v0,
                        std::map<IndexEntry, MemoryState>* entry_states) {
  for (const auto& e : deviation_index(game, v0)) {
    if (!witness.lassoes.contains(e)) {
      throw Error(Errc::WitnessIncomplete, "missing lasso for (" + std::to_string(e.player) +
                                               "," + game.name(e.vertex) + ")");
    }
  }
  check_witness_structure(witness, game);

  // State layout: one block per entry, one state per position of prefix·cycle.
  std::vector<IndexEntry> entries;
  std::vector<std::vector<VertexId>> words;
  std::vector<std::size_t> cycle_start;
  std::vector<MemoryState> base;
  std::map<IndexEntry, std::size_t> entry_of;
  std::map<VertexId, std::size_t> first_entry_at;  // smallest entry per start vertex
  MemoryState total = 0;
  for (const auto& [e, lasso] : witness.lassoes) {
    const std::size_t b = entries.size();
    entries.push_back(e);
    words.push_back(lasso.word());
    cycle_start.push_back(lasso.prefix.size());
    base.push_back(total);
    entry_of.emplace(e, b);
    first_entry_at.emplace(e.vertex, b);
    total += static_cast<MemoryState>(words.back().size());
  }
  auto next_pos = [&](std::size_t b, std::size_t pos) {
    return pos + 1 < words[b].size() ? pos + 1 : cycle_start[b];
  };

  const std::size_t n = game.size();
  MooreMachine shared(total, n, base[entry_of.at(IndexEntry{0, v0})]);
  shared.labels.resize(total);

  for (std::size_t b = 0; b < entries.size(); ++b) {
    const auto& w = words[b];
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      const auto m = static_cast<MemoryState>(base[b] + pos);
      const std::size_t next = next_pos(b, pos);
      const VertexId here = w[pos];
      const VertexId expected = w[next];
      shared.labels[m] = "(" + std::to_string(entries[b].player) + "," +
                         game.name(entries[b].vertex) + ")#" + std::to_string(pos);

      // Following the lasso advances; anything else is a deviation by the
      // owner of `here` and restarts on that player's lasso for the new vertex.
      for (VertexId obs = 0; obs < n; ++obs) {
        MemoryState to = m;
        if (obs == expected) {
          to = static_cast<MemoryState>(base[b] + next);
        } else if (auto it = entry_of.find(IndexEntry{game.owner(here), obs}); it != entry_of.end()) {
          to = base[it->second];
        } else if (auto jt = first_entry_at.find(obs); jt != first_entry_at.end()) {
          to = base[jt->second];
        }
        shared.set_update(m, obs, to);
      }

      // Off-track vertices never occur along legal plays; they get the move
      // of some lasso starting there so the table stays total.
      for (VertexId v = 0; v < n; ++v) {
        VertexId act = game.successors(v).front();
        if (v == here) {
          act = expected;
        } else if (auto jt = first_entry_at.find(v); jt != first_entry_at.end()) {
          act = words[jt->second][next_pos(jt->second, 0)];
        }
        shared.set_action(m, v, act);
      }
    }
  }

  std::vector<MemoryState> class_of;
  shared = minimize(shared, &class_of);
  if (entry_states != nullptr) {
    entry_states->clear();
    for (std::size_t b = 0; b < entries.size(); ++b) entry_states->emplace(entries[b], class_of[base[b]]);
  }

  StrategyProfile profile;
  for (Player i = 1; i <= game.players(); ++i) {
    MooreMachine mine = shared;
    for (MemoryState m = 0; m < shared.state_count(); ++m) {
      for (VertexId v = 0; v < n; ++v) {
        if (game.owner(v) != i) mine.set_action(m, v, kNoVertex);
      }
    }
    profile.machines.push_back(std::move(mine));
  }
  return profile;
}

Lasso outcome_from(const StrategyProfile& profile, const Game& game, VertexId start,
                   const std::vector<MemoryState>& states) {
  if (states.size() != profile.machines.size()) {
    throw Error(Errc::MachinePartial, "one memory state per player is required");
  }
  std::map<std::vector<MemoryState>, std::size_t> seen;
  std::vector<VertexId> trail;
  std::vector<MemoryState> cur = states;
  VertexId v = start;
  while (true) {
    std::vector<MemoryState> key = cur;
    key.push_back(v);
    auto [it, fresh] = seen.emplace(std::move(key), trail.size());
    if (!fresh) {
      Lasso l;
      l.prefix.assign(trail.begin(), trail.begin() + static_cast<std::ptrdiff_t>(it->second));
      l.cycle.assign(trail.begin() + static_cast<std::ptrdiff_t>(it->second), trail.end());
      return l;
    }
    trail.push_back(v);
    const auto& machine = profile.of(game.owner(v));
    const VertexId next = machine.action(cur[static_cast<std::size_t>(game.owner(v) - 1)], v);
    if (next == kNoVertex || !game.has_edge(v, next)) {
      throw Error(Errc::MachinePartial, "no legal action at " + game.name(v));
    }
    for (std::size_t j = 0; j < cur.size(); ++j) {
      cur[j] = profile.machines[j].update(cur[j], next);
      if (cur[j] == kNoState) throw Error(Errc::MachinePartial, "undefined memory update");
    }
    v = next;
  }
}

}  // namespace wspe
