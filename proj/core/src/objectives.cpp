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
#include "wspe/objectives.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "wspe/error.hpp"

namespace wspe {

namespace {

constexpr std::array<std::pair<ObjectiveKind, std::string_view>, 9> kKindNames{{
    {ObjectiveKind::Reachability, "reachability"},
    {ObjectiveKind::Safety, "safety"},
    {ObjectiveKind::Buchi, "buchi"},
    {ObjectiveKind::CoBuchi, "cobuchi"},
    {ObjectiveKind::Parity, "parity"},
    {ObjectiveKind::ExplicitMuller, "explicit_muller"},
    {ObjectiveKind::Muller, "muller"},
    {ObjectiveKind::Rabin, "rabin"},
    {ObjectiveKind::Streett, "streett"},
}};

std::vector<int> color_set(const std::vector<int>& colors, const VertexSet& inf) {
  std::set<int> cs;
  for (auto v = inf.find_first(); v != VertexSet::npos; v = inf.find_next(v)) cs.insert(colors[v]);
  return {cs.begin(), cs.end()};
}

}  // namespace

std::string_view to_string(ObjectiveKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ObjectiveKind parse_objective_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw Error(Errc::InvalidObjective, "unknown objective type '" + std::string(name) + "'");
}

ObjectiveSet::ObjectiveSet(ObjectiveKind kind, std::vector<PlayerObjective> players)
    : kind_(kind), players_(std::move(players)) {
  for (auto& p : players_) {
    for (auto& fam : p.color_families) {
      std::sort(fam.begin(), fam.end());
      fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    }
  }
}

void ObjectiveSet::validate(const Game& game) const {
  const std::size_t n = game.size();
  if (players() != game.players()) {
    throw Error(Errc::InvalidObjective, "objective count does not match the player count");
  }
  auto check_set = [&](const VertexSet& s, const char* what) {
    if (s.size() != n) throw Error(Errc::InvalidObjective, std::string(what) + " has wrong size");
  };
  auto check_colors = [&](const std::vector<int>& colors) {
    if (colors.size() != n) throw Error(Errc::InvalidObjective, "coloring must be total");
    for (int c : colors) {
      if (c < 1) throw Error(Errc::InvalidObjective, "colors must be >= 1");
    }
  };
  for (Player i = 1; i <= players(); ++i) {
    const auto& o = of(i);
    switch (kind_) {
      case ObjectiveKind::Reachability:
      case ObjectiveKind::Safety:
      case ObjectiveKind::Buchi:
      case ObjectiveKind::CoBuchi: check_set(o.target, "target set"); break;
      case ObjectiveKind::Parity: check_colors(o.colors); break;
      case ObjectiveKind::ExplicitMuller:
        for (const auto& f : o.families) check_set(f, "family member");
        break;
      case ObjectiveKind::Muller: {
        check_colors(o.colors);
        const int d = *std::max_element(o.colors.begin(), o.colors.end());
        for (const auto& f : o.color_families) {
          for (int c : f) {
            if (c < 1 || c > d) throw Error(Errc::InvalidObjective, "family color outside 1..d");
          }
        }
        break;
      }
      case ObjectiveKind::Rabin:
      case ObjectiveKind::Streett:
        for (const auto& pr : o.pairs) {
          check_set(pr.g, "pair set G");
          check_set(pr.r, "pair set R");
        }
        break;
    }
  }
}

bool ObjectiveSet::gain(const VertexSet& occ, const VertexSet& inf, Player i) const {
  const auto& o = of(i);
  switch (kind_) {
    case ObjectiveKind::Reachability: return occ.intersects(o.target);
    case ObjectiveKind::Safety: return !occ.intersects(o.target);
    case ObjectiveKind::Buchi: return inf.intersects(o.target);
    case ObjectiveKind::CoBuchi: return !inf.intersects(o.target);
    case ObjectiveKind::Parity: {
      int best = 0;
      for (auto v = inf.find_first(); v != VertexSet::npos; v = inf.find_next(v)) {
        best = std::max(best, o.colors[v]);
      }
      return best % 2 == 0;
    }
    case ObjectiveKind::ExplicitMuller:
      return std::find(o.families.begin(), o.families.end(), inf) != o.families.end();
    case ObjectiveKind::Muller: {
      auto cs = color_set(o.colors, inf);
      return std::find(o.color_families.begin(), o.color_families.end(), cs) !=
             o.color_families.end();
    }
    case ObjectiveKind::Rabin:
      return std::any_of(o.pairs.begin(), o.pairs.end(), [&](const SetPair& p) {
        return inf.intersects(p.g) && !inf.intersects(p.r);
      });
    case ObjectiveKind::Streett:
      return std::all_of(o.pairs.begin(), o.pairs.end(), [&](const SetPair& p) {
        return !inf.intersects(p.g) || inf.intersects(p.r);
      });
  }
  return false;
}

Payoff ObjectiveSet::payoff(const VertexSet& occ, const VertexSet& inf) const {
  Payoff p(players());
  for (Player i = 1; i <= players(); ++i) p.set(i, gain(occ, inf, i));
  return p;
}

bool gain(const Lasso& lasso, const Game& game, const ObjectiveSet& objectives, Player i) {
  return objectives.gain(occ(lasso, game.size()), inf(lasso, game.size()), i);
}

Payoff payoff_of(const Lasso& lasso, const Game& game, const ObjectiveSet& objectives) {
  return objectives.payoff(occ(lasso, game.size()), inf(lasso, game.size()));
}

ObjectiveSet target_objectives(ObjectiveKind kind, const std::vector<VertexSet>& targets) {
  std::vector<PlayerObjective> ps;
  ps.reserve(targets.size());
  for (const auto& t : targets) {
    PlayerObjective o;
    o.target = t;
    ps.push_back(std::move(o));
  }
  return ObjectiveSet(kind, std::move(ps));
}

}  // namespace wspe
