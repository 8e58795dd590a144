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
#include "wspe/path_oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "wspe/error.hpp"
#include "wspe/graph.hpp"

namespace wspe {

namespace {

void require_prefix_independent(const ObjectiveSet& objectives) {
  if (!is_prefix_independent(objectives.kind())) {
    throw Error(Errc::ObjectiveNotPrefixIndependent,
                std::string(to_string(objectives.kind())) +
                    " objectives must be reduced to Büchi/co-Büchi first");
  }
}

VertexSet color_class(const std::vector<int>& colors, std::size_t n,
                      const std::function<bool(int)>& pick) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (pick(colors[v])) s.set(v);
  }
  return s;
}

std::vector<int> distinct_colors(const std::vector<int>& colors) {
  std::vector<int> cs = colors;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

// Alternatives (a disjunction of Streett specs) for "gain_i == want".
std::vector<StreettSpec> player_alternatives(const Game& game, const ObjectiveSet& objectives,
                                             Player i, bool want) {
  const std::size_t n = game.size();
  const VertexSet all = game.full_set();
  const VertexSet none = game.empty_set();
  const auto& o = objectives.of(i);
  // Some vertex of `s` is visited infinitely often.
  auto hit = [&](const VertexSet& s) { return SetPair{all, s}; };
  // No vertex of `s` is visited infinitely often.
  auto avoid = [&](const VertexSet& s) { return SetPair{s, none}; };

  switch (objectives.kind()) {
    case ObjectiveKind::Buchi:
      return {StreettSpec{{want ? hit(o.target) : avoid(o.target)}}};
    case ObjectiveKind::CoBuchi:
      return {StreettSpec{{want ? avoid(o.target) : hit(o.target)}}};
    case ObjectiveKind::Parity: {
      // Max color even: every odd color seen infinitely often is dominated
      // by a larger even color seen infinitely often (and dually for odd).
      const int parity_of_loser = want ? 1 : 0;
      StreettSpec spec;
      for (int c : distinct_colors(o.colors)) {
        if (c % 2 != parity_of_loser) continue;
        spec.pairs.push_back({color_class(o.colors, n, [c](int x) { return x == c; }),
                              color_class(o.colors, n, [c, parity_of_loser](int x) {
                                return x > c && x % 2 != parity_of_loser;
                              })});
      }
      return {spec};
    }
    case ObjectiveKind::Rabin:
    case ObjectiveKind::Streett: {
      // Winning Rabin and losing Streett are disjunctions over pair indices.
      const bool disjunctive = (objectives.kind() == ObjectiveKind::Rabin) == want;
      if (disjunctive) {
        std::vector<StreettSpec> alts;
        for (const auto& p : o.pairs) alts.push_back(StreettSpec{{hit(p.g), avoid(p.r)}});
        return alts;
      }
      StreettSpec spec;
      for (const auto& p : o.pairs) spec.pairs.push_back({p.g, p.r});
      return {spec};
    }
    default: break;
  }
  throw Error(Errc::InvalidObjective, "objective kind has no Streett encoding");
}

std::optional<VertexSet> explicit_muller_search(const Game& game, const ObjectiveSet& objectives,
                                                const VertexSet& reach, const Payoff& target) {
  const int n_players = objectives.players();
  std::vector<std::unordered_set<VertexSet>> family(static_cast<std::size_t>(n_players));
  for (Player i = 1; i <= n_players; ++i) {
    const auto& fs = objectives.of(i).families;
    family[static_cast<std::size_t>(i - 1)] = {fs.begin(), fs.end()};
  }
  auto payoff_matches = [&](const VertexSet& s) {
    for (Player j = 1; j <= n_players; ++j) {
      if (family[static_cast<std::size_t>(j - 1)].contains(s) != target.get(j)) return false;
    }
    return true;
  };

  for (Player i = 1; i <= n_players; ++i) {
    if (!target.get(i)) continue;
    for (const auto& s : objectives.of(i).families) {
      if (s.none() || !s.is_subset_of(reach)) continue;
      if (is_cycle_set(game, s) && payoff_matches(s)) return s;
    }
    return std::nullopt;
  }

  // All-zero payoff: find a cycle set inside `reach` outside every family.
  // Only sets that belong to some family are split vertex by vertex, so the
  // memo stays bounded by the total family size.
  std::unordered_set<VertexSet> any_family;
  for (const auto& f : family) any_family.insert(f.begin(), f.end());
  std::unordered_set<VertexSet> visited;

  std::function<std::optional<VertexSet>(const VertexSet&)> search =
      [&](const VertexSet& c) -> std::optional<VertexSet> {
    if (c.none() || !visited.insert(c).second) return std::nullopt;
    if (!is_cycle_set(game, c)) {
      for (const auto& k : sccs(game, c)) {
        if (!has_internal_edge(game, k)) continue;
        if (auto r = search(k)) return r;
      }
      return std::nullopt;
    }
    if (!any_family.contains(c)) return c;
    for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v)) {
      VertexSet smaller = c;
      smaller.reset(v);
      if (auto r = search(smaller)) return r;
    }
    return std::nullopt;
  };
  return search(reach);
}

}  // namespace

std::optional<VertexSet> streett_nonempty(const Game& game, const VertexSet& allowed,
                                          VertexId from, const StreettSpec& spec) {
  if (!allowed.test(from)) return std::nullopt;
  std::vector<VertexSet> work{reachable(game, from, allowed)};
  while (!work.empty()) {
    VertexSet c = std::move(work.back());
    work.pop_back();
    for (auto& k : sccs(game, c)) {
      if (!has_internal_edge(game, k)) continue;
      VertexSet bad(game.size());
      for (const auto& p : spec.pairs) {
        if (k.intersects(p.g) && !k.intersects(p.r)) bad |= p.g;
      }
      if (bad.none()) return std::move(k);
      k -= bad;
      if (k.any()) work.push_back(std::move(k));
    }
  }
  return std::nullopt;
}

std::vector<StreettSpec> streett_branches(const Game& game, const ObjectiveSet& objectives,
                                          const Payoff& target) {
  std::vector<StreettSpec> branches{StreettSpec{}};
  for (Player i = 1; i <= objectives.players(); ++i) {
    auto alts = player_alternatives(game, objectives, i, target.get(i));
    std::vector<StreettSpec> next;
    next.reserve(branches.size() * alts.size());
    for (const auto& b : branches) {
      for (const auto& a : alts) {
        StreettSpec merged = b;
        merged.pairs.insert(merged.pairs.end(), a.pairs.begin(), a.pairs.end());
        next.push_back(std::move(merged));
      }
    }
    branches = std::move(next);
    if (branches.empty()) break;
  }
  return branches;
}

void for_each_feasible_inf_set(const Game& game, const VertexSet& allowed, VertexId from,
                               const std::function<bool(const VertexSet&)>& visit,
                               std::size_t cap) {
  if (!allowed.test(from)) {
    throw Error(Errc::VertexNotAllowed, "start vertex '" + game.name(from) + "' is not allowed");
  }
  const auto pool = members(reachable(game, from, allowed));
  if (pool.size() > cap) {
    throw Error(Errc::ArenaTooLarge, std::to_string(pool.size()) +
                                         " candidate vertices exceed the enumeration cap of " +
                                         std::to_string(cap));
  }
  const std::size_t m = pool.size();
  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= m; ++k) {
    pick.resize(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    while (true) {
      VertexSet s(game.size());
      for (std::size_t j : pick) s.set(pool[j]);
      if (is_cycle_set(game, s) && !visit(s)) return;
      // Next k-combination in lexicographic order.
      std::size_t j = k;
      while (j > 0 && pick[j - 1] == m - k + j - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
}

std::vector<VertexSet> feasible_inf_sets(const Game& game, const VertexSet& allowed, VertexId from,
                                         std::size_t cap) {
  std::vector<VertexSet> out;
  for_each_feasible_inf_set(
      game, allowed, from,
      [&](const VertexSet& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

std::optional<VertexSet> find_inf_set(const Game& game, const ObjectiveSet& objectives,
                                      const VertexSet& allowed, VertexId from,
                                      const Payoff& target, const OracleOptions& options) {
  require_prefix_independent(objectives);
  if (!allowed.test(from)) {
    throw Error(Errc::VertexNotAllowed, "start vertex '" + game.name(from) + "' is not allowed");
  }
  if (target.players() != objectives.players()) {
    throw Error(Errc::InvalidParams, "payoff width does not match the player count");
  }

  switch (objectives.kind()) {
    case ObjectiveKind::ExplicitMuller:
      return explicit_muller_search(game, objectives, reachable(game, from, allowed), target);
    case ObjectiveKind::Muller: {
      std::optional<VertexSet> found;
      for_each_feasible_inf_set(
          game, allowed, from,
          [&](const VertexSet& s) {
            if (objectives.payoff(s, s) != target) return true;
            found = s;
            return false;
          },
          options.enumeration_cap);
      return found;
    }
    default: break;
  }
  for (const auto& branch : streett_branches(game, objectives, target)) {
    if (auto s = streett_nonempty(game, allowed, from, branch)) return s;
  }
  return std::nullopt;
}

bool exists_play(const Game& game, const ObjectiveSet& objectives, const VertexSet& allowed,
                 VertexId from, const Payoff& target, const OracleOptions& options) {
  return find_inf_set(game, objectives, allowed, from, target, options).has_value();
}

Lasso lasso_through(const Game& game, const VertexSet& allowed, VertexId from,
                    const VertexSet& inf_set) {
  auto entry = shortest_path(game, from, inf_set, allowed);
  if (!entry) throw Error(Errc::NoSuchPlay, "Inf set is not reachable from the start vertex");
  Lasso lasso;
  lasso.prefix.assign(entry->begin(), entry->end() - 1);

  const VertexId anchor = entry->back();
  std::vector<VertexId>& walk = lasso.cycle;
  walk.push_back(anchor);
  VertexSet visited(game.size());
  visited.set(anchor);
  VertexId cur = anchor;
  for (VertexId t : members(inf_set)) {
    if (visited.test(t)) continue;
    auto seg = shortest_path(game, cur, make_set(game.size(), {t}), inf_set);
    if (!seg) throw Error(Errc::NoSuchPlay, "Inf set is not strongly connected");
    for (std::size_t k = 1; k < seg->size(); ++k) {
      walk.push_back((*seg)[k]);
      visited.set((*seg)[k]);
    }
    cur = t;
  }
  if (cur == anchor) {
    if (!game.has_edge(anchor, anchor)) throw Error(Errc::NoSuchPlay, "Inf set has no cycle");
    return lasso;
  }
  auto back = shortest_path(game, cur, make_set(game.size(), {anchor}), inf_set);
  if (!back) throw Error(Errc::NoSuchPlay, "Inf set is not strongly connected");
  for (std::size_t k = 1; k + 1 < back->size(); ++k) walk.push_back((*back)[k]);
  return lasso;
}

Lasso extract_lasso(const Game& game, const ObjectiveSet& objectives, const VertexSet& allowed,
                    VertexId from, const Payoff& target, const OracleOptions& options) {
  auto s = find_inf_set(game, objectives, allowed, from, target, options);
  if (!s) {
    throw Error(Errc::NoSuchPlay, "no play from '" + game.name(from) + "' with payoff " +
                                      target.str() + " inside the restriction");
  }
  return lasso_through(game, allowed, from, *s);
}

VertexSet vertices_with_play(const Game& game, const ObjectiveSet& objectives,
                             const VertexSet& allowed, const Payoff& target,
                             const OracleOptions& options) {
  require_prefix_independent(objectives);
  VertexSet good(game.size());
  for (const auto& k : sccs(game, allowed)) {
    if (!has_internal_edge(game, k)) continue;
    const auto rep = static_cast<VertexId>(k.find_first());
    if (find_inf_set(game, objectives, k, rep, target, options)) good |= k;
  }
  return backward_reachable(game, good, allowed);
}

std::size_t PathOracle::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = std::hash<VertexSet>{}(k.allowed);
  h ^= std::hash<std::uint64_t>{}((std::uint64_t{k.from} << 32) ^ k.target) + 0x9e3779b97f4a7c15ULL +
       (h << 6) + (h >> 2);
  return h;
}

PathOracle::PathOracle(const Game& game, const ObjectiveSet& objectives, OracleOptions options)
    : game_(game), objectives_(objectives), options_(options) {
  require_prefix_independent(objectives_);
}

bool PathOracle::exists(const VertexSet& allowed, VertexId from, const Payoff& target) {
  ++queries_;
  Key key{allowed, from, target.bits()};
  if (auto it = exists_cache_.find(key); it != exists_cache_.end()) {
    ++hits_;
    return it->second;
  }
  bool r = exists_play(game_, objectives_, allowed, from, target, options_);
  exists_cache_.emplace(std::move(key), r);
  return r;
}

VertexSet PathOracle::vertices_with(const VertexSet& allowed, const Payoff& target) {
  ++queries_;
  Key key{allowed, 0, target.bits()};
  if (auto it = sweep_cache_.find(key); it != sweep_cache_.end()) {
    ++hits_;
    return it->second;
  }
  VertexSet r = vertices_with_play(game_, objectives_, allowed, target, options_);
  sweep_cache_.emplace(std::move(key), r);
  return r;
}

Lasso PathOracle::extract(const VertexSet& allowed, VertexId from, const Payoff& target) {
  return extract_lasso(game_, objectives_, allowed, from, target, options_);
}

}  // namespace wspe
