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
#include "wspe/oracle/brute.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "wspe/error.hpp"

namespace wspe::brute {

namespace {

using Mask = std::uint64_t;

Mask bit(VertexId v) { return Mask{1} << v; }

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (s.test(v)) m |= bit(static_cast<VertexId>(v));
  }
  return m;
}

/// Adjacency as masks plus an evaluator over Occ/Inf masks.
struct Model {
  const Game& game;
  const ObjectiveSet& objectives;
  std::size_t n;
  std::vector<Mask> succ;
  std::vector<Mask> pred;
  std::vector<Mask> target;
  std::vector<std::vector<Mask>> families;
  std::vector<std::vector<std::pair<Mask, Mask>>> pairs;

  Model(const Game& g, const ObjectiveSet& o) : game(g), objectives(o), n(g.size()) {
    if (n > 64) throw Error(Errc::TooLarge, "brute force is limited to 64 vertices");
    for (Player i = 1; i <= o.players(); ++i) {
      const auto& po = o.of(i);
      target.push_back(to_mask(po.target));
      families.emplace_back();
      for (const auto& f : po.families) families.back().push_back(to_mask(f));
      pairs.emplace_back();
      for (const auto& pr : po.pairs) pairs.back().emplace_back(to_mask(pr.g), to_mask(pr.r));
    }
    succ.assign(n, 0);
    pred.assign(n, 0);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v : g.successors(u)) {
        succ[u] |= bit(v);
        pred[v] |= bit(u);
      }
    }
  }

  Mask closure(Mask start, Mask within, const std::vector<Mask>& step) const {
    Mask seen = start & within;
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) {
        next |= step[std::countr_zero(f)];
      }
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool gain(Player i, Mask occ, Mask inf) const {
    const auto& o = objectives.of(i);
    const auto k = static_cast<std::size_t>(i - 1);
    switch (objectives.kind()) {
      case ObjectiveKind::Reachability: return (occ & target[k]) != 0;
      case ObjectiveKind::Safety: return (occ & target[k]) == 0;
      case ObjectiveKind::Buchi: return (inf & target[k]) != 0;
      case ObjectiveKind::CoBuchi: return (inf & target[k]) == 0;
      case ObjectiveKind::Parity: {
        int top = 0;
        for (Mask f = inf; f != 0; f &= f - 1) top = std::max(top, o.colors[std::countr_zero(f)]);
        return top % 2 == 0;
      }
      case ObjectiveKind::ExplicitMuller:
        return std::find(families[k].begin(), families[k].end(), inf) != families[k].end();
      case ObjectiveKind::Muller: {
        std::set<int> seen;
        for (Mask f = inf; f != 0; f &= f - 1) seen.insert(o.colors[std::countr_zero(f)]);
        const std::vector<int> cs(seen.begin(), seen.end());
        for (const auto& fam : o.color_families) {
          std::vector<int> sorted = fam;
          std::sort(sorted.begin(), sorted.end());
          if (sorted == cs) return true;
        }
        return false;
      }
      case ObjectiveKind::Rabin:
        for (const auto& [g, r] : pairs[k]) {
          if ((inf & g) != 0 && (inf & r) == 0) return true;
        }
        return false;
      case ObjectiveKind::Streett:
        for (const auto& [g, r] : pairs[k]) {
          if ((inf & g) != 0 && (inf & r) == 0) return false;
        }
        return true;
    }
    return false;
  }

  Payoff payoff(Mask occ, Mask inf) const {
    Payoff p(objectives.players());
    for (Player i = 1; i <= objectives.players(); ++i) p.set(i, gain(i, occ, inf));
    return p;
  }
};

/// Calls f(S) for every nonempty S within `allowed` that is the Inf set of
/// some play from `from` inside `allowed`.
template <typename F>
void for_each_inf(const Model& m, Mask allowed, VertexId from, F&& f) {
  if (std::popcount(allowed) > static_cast<int>(kMaxAllowed)) {
    throw Error(Errc::TooLarge, "brute force is limited to 20 allowed vertices");
  }
  if ((allowed & bit(from)) == 0) return;
  const Mask reach = m.closure(bit(from), allowed, m.succ);
  std::vector<VertexId> pool;
  for (Mask a = reach; a != 0; a &= a - 1) pool.push_back(static_cast<VertexId>(std::countr_zero(a)));
  const std::uint64_t subsets = std::uint64_t{1} << pool.size();
  for (std::uint64_t code = 1; code < subsets; ++code) {
    Mask s = 0;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if ((code >> k) & 1U) s |= bit(pool[k]);
    }
    const Mask x = s & (~s + 1);
    const VertexId xv = static_cast<VertexId>(std::countr_zero(x));
    if (m.closure(x, s, m.succ) != s || m.closure(x, s, m.pred) != s) continue;
    if (std::popcount(s) == 1 && (m.succ[xv] & s) == 0) continue;
    if (!f(s)) return;
  }
}

}  // namespace

bool exists_play(const Game& game, const ObjectiveSet& objectives, const VertexSet& allowed,
                 VertexId from, const Payoff& target) {
  if (!is_prefix_independent(objectives.kind())) {
    throw Error(Errc::ObjectiveNotPrefixIndependent, "brute exists_play needs Inf-only objectives");
  }
  const Model m(game, objectives);
  bool found = false;
  for_each_inf(m, to_mask(allowed), from, [&](Mask s) {
    found = m.payoff(s, s) == target;
    return !found;
  });
  return found;
}

PayoffSet payoff_set(const Game& game, const ObjectiveSet& objectives, VertexId from) {
  if (!is_prefix_independent(objectives.kind())) {
    throw Error(Errc::ObjectiveNotPrefixIndependent, "brute payoff_set needs Inf-only objectives");
  }
  const Model m(game, objectives);
  PayoffSet out;
  const Mask all = game.size() == 64 ? ~Mask{0} : (Mask{1} << game.size()) - 1;
  for_each_inf(m, all, from, [&](Mask s) {
    out.insert(m.payoff(s, s));
    return true;
  });
  return out;
}

namespace {

struct Shape {
  Payoff payoff;
  Mask occ = 0;
  Lasso lasso;
};

/// Lasso shapes from one start vertex, keyed by (payoff, Occ).
using ShapeMap = std::map<std::pair<Payoff, Mask>, Lasso>;

Mask mask_of(const std::vector<VertexId>& word) {
  Mask m = 0;
  for (VertexId v : word) m |= bit(v);
  return m;
}

void add_shape(const Model& m, ShapeMap& shapes, std::vector<VertexId> prefix,
               std::vector<VertexId> cycle) {
  const Mask inf = mask_of(cycle);
  const Mask occ = inf | mask_of(prefix);
  shapes.emplace(std::make_pair(m.payoff(occ, inf), occ), Lasso{std::move(prefix), std::move(cycle)});
}

/// Shortest path of at least one edge from a to b inside `within`, both
/// endpoints included.
std::vector<VertexId> bfs_path(const Model& m, VertexId a, VertexId b, Mask within) {
  std::vector<VertexId> parent(m.n, a);
  std::vector<VertexId> queue;
  Mask seen = 0;
  auto expand = [&](VertexId x) {
    for (Mask t = m.succ[x] & within & ~seen; t != 0; t &= t - 1) {
      const auto y = static_cast<VertexId>(std::countr_zero(t));
      seen |= bit(y);
      parent[y] = x;
      queue.push_back(y);
    }
  };
  expand(a);
  for (std::size_t head = 0; head < queue.size() && (seen & bit(b)) == 0; ++head) expand(queue[head]);
  std::vector<VertexId> path{b};
  do {
    path.push_back(parent[path.back()]);
  } while (path.back() != a);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Closed walk from c through every vertex of the strongly connected set s,
/// returned without the closing repetition of c.
std::vector<VertexId> covering_walk(const Model& m, VertexId c, Mask s) {
  if (s == bit(c)) return {c};
  std::vector<VertexId> walk{c};
  VertexId at = c;
  for (Mask rest = s & ~bit(c); rest != 0;) {
    const auto x = static_cast<VertexId>(std::countr_zero(rest));
    const auto seg = bfs_path(m, at, x, s);
    for (std::size_t k = 1; k < seg.size(); ++k) {
      walk.push_back(seg[k]);
      rest &= ~bit(seg[k]);
    }
    at = x;
  }
  const auto back = bfs_path(m, at, c, s);
  walk.insert(walk.end(), back.begin() + 1, back.end() - 1);
  return walk;
}

/// Shapes of lassoes from u: a simple prefix followed by a closed walk
/// covering some strongly connected set S. Occ only depends on the prefix
/// vertex set, so prefixes are explored once per (last vertex, set).
ShapeMap exhaustive_shapes(const Model& m, VertexId u, const std::vector<Mask>& cycles) {
  ShapeMap shapes;
  for (Mask s : cycles) {
    if ((s & bit(u)) != 0) add_shape(m, shapes, {}, covering_walk(m, u, s));
  }
  std::set<std::pair<VertexId, Mask>> visited;
  std::vector<VertexId> prefix{u};
  auto dfs = [&](auto&& self, Mask used) -> void {
    const VertexId last = prefix.back();
    for (Mask s : cycles) {
      const Mask entry = m.succ[last] & s;
      if (entry == 0) continue;
      const auto c = static_cast<VertexId>(std::countr_zero(entry));
      add_shape(m, shapes, prefix, covering_walk(m, c, s));
    }
    for (Mask t = m.succ[last] & ~used; t != 0; t &= t - 1) {
      const auto w = static_cast<VertexId>(std::countr_zero(t));
      if (!visited.emplace(w, used | bit(w)).second) continue;
      prefix.push_back(w);
      self(self, used | bit(w));
      prefix.pop_back();
    }
  };
  visited.emplace(u, bit(u));
  dfs(dfs, bit(u));
  return shapes;
}

std::optional<Lasso> random_lasso(const Model& m, VertexId u, std::mt19937_64& rng) {
  std::bernoulli_distribution stop(1.0 / 3.0);
  auto pick = [&](Mask s) {
    std::vector<VertexId> opts;
    for (; s != 0; s &= s - 1) opts.push_back(static_cast<VertexId>(std::countr_zero(s)));
    return opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
  };
  std::vector<VertexId> prefix;
  VertexId c = u;
  if (!stop(rng)) {
    prefix.push_back(u);
    while (true) {
      c = pick(m.succ[prefix.back()]);
      if (stop(rng) || (mask_of(prefix) & bit(c)) != 0) break;
      prefix.push_back(c);
    }
  }
  std::vector<VertexId> cycle{c};
  std::vector<std::size_t> counts(m.n, 0);
  counts[c] = 1;
  VertexId cur = c;
  for (std::size_t steps = 0; steps < m.n * m.n; ++steps) {
    const VertexId w = pick(m.succ[cur]);
    if (w == c && (counts[c] >= m.n || !stop(rng))) return Lasso{prefix, cycle};
    if (++counts[w] > m.n) return std::nullopt;
    cycle.push_back(w);
    cur = w;
  }
  return std::nullopt;
}

}  // namespace

SearchResult witness_search(const Game& game, const ObjectiveSet& objectives, VertexId v0,
                            const Payoff& target, const SearchOptions& options) {
  const Model m(game, objectives);
  const bool exhaustive = options.exhaustive.value_or(m.n <= 4);

  // Index set: (0, v0) and (owner(v), w) for every reachable edge (v, w).
  const Mask all = m.n == 64 ? ~Mask{0} : (Mask{1} << m.n) - 1;
  const Mask reach = m.closure(bit(v0), all, m.succ);
  if (exhaustive && std::popcount(reach) > static_cast<int>(kMaxAllowed)) {
    throw Error(Errc::TooLarge, "exhaustive witness search is limited to 20 reachable vertices");
  }
  std::vector<IndexEntry> entries{{0, v0}};
  for (Mask r = reach; r != 0; r &= r - 1) {
    const auto v = static_cast<VertexId>(std::countr_zero(r));
    for (Mask s = m.succ[v]; s != 0; s &= s - 1) {
      entries.push_back({game.owner(v), static_cast<VertexId>(std::countr_zero(s))});
    }
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

  std::map<VertexId, ShapeMap> by_start;
  for (const auto& e : entries) by_start.emplace(e.vertex, ShapeMap{});
  if (exhaustive) {
    std::vector<Mask> cycles;
    for_each_inf(m, reach, v0, [&](Mask s) {
      cycles.push_back(s);
      return true;
    });
    for (auto& [u, shapes] : by_start) shapes = exhaustive_shapes(m, u, cycles);
  } else {
    std::mt19937_64 rng(options.seed);
    std::vector<VertexId> starts;
    for (const auto& [u, _] : by_start) starts.push_back(u);
    std::uniform_int_distribution<std::size_t> any(0, starts.size() - 1);
    for (std::size_t k = 0; k < options.budget; ++k) {
      const VertexId u = starts[any(rng)];
      if (auto l = random_lasso(m, u, rng)) add_shape(m, by_start[u], l->prefix, l->cycle);
    }
  }

  SearchResult result;
  std::vector<std::vector<Shape>> domain(entries.size());
  std::map<IndexEntry, std::size_t> slot;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    slot[entries[k]] = k;
    for (const auto& [key, lasso] : by_start[entries[k].vertex]) {
      if (entries[k].player == 0 && key.first != target) continue;
      domain[k].push_back(Shape{key.first, key.second, lasso});
    }
    result.shapes += domain[k].size();
  }

  // Drop shapes that some deviation beats no matter which shape the
  // deviation entry takes; what is left can be completed greedily.
  auto zero_for = [&](std::size_t f, Player i) {
    return std::any_of(domain[f].begin(), domain[f].end(),
                       [&](const Shape& s) { return !s.payoff.get(i); });
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      auto& d = domain[k];
      const auto before = d.size();
      d.erase(std::remove_if(d.begin(), d.end(),
                             [&](const Shape& s) {
                               for (Mask o = s.occ; o != 0; o &= o - 1) {
                                 const auto v = static_cast<VertexId>(std::countr_zero(o));
                                 const Player i = game.owner(v);
                                 if (s.payoff.get(i)) continue;
                                 for (Mask t = m.succ[v]; t != 0; t &= t - 1) {
                                   const auto w = static_cast<VertexId>(std::countr_zero(t));
                                   if (!zero_for(slot.at({i, w}), i)) return true;
                                 }
                               }
                               return false;
                             }),
              d.end());
      changed = changed || d.size() != before;
    }
  }

  for (const auto& d : domain) {
    if (d.empty()) {
      result.status = exhaustive ? SearchStatus::NotFound : SearchStatus::BudgetExceeded;
      return result;
    }
  }
  SymbolicWitness w;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Player i = entries[k].player;
    const auto& d = domain[k];
    auto best = d.begin();
    if (i != 0) {
      best = std::find_if(d.begin(), d.end(), [&](const Shape& s) { return !s.payoff.get(i); });
      if (best == d.end()) best = d.begin();
    }
    w.lassoes.emplace(entries[k], best->lasso);
  }
  result.status = SearchStatus::Found;
  result.witness = std::move(w);
  return result;
}

}  // namespace wspe::brute
