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
#include "wspe/generator.hpp"

#include <random>
#include <set>
#include <string>

#include "wspe/error.hpp"
#include "wspe/graph.hpp"

namespace wspe {

namespace {

VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (coin(rng)) s.set(v);
  }
  return s;
}

VertexSet random_nonempty_subset(std::mt19937_64& rng, std::size_t n) {
  VertexSet s = random_subset(rng, n, 0.5);
  if (s.none()) s.set(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  return s;
}

}  // namespace

GeneratedGame gen_random_game(const GeneratorParams& params) {
  if (params.vertices < 1 || params.players < 1 || params.players > 63) {
    throw Error(Errc::InvalidParams, "vertex and player counts must be positive (players <= 63)");
  }
  if (!(params.density > 0.0 && params.density <= 1.0)) {
    throw Error(Errc::InvalidParams, "density must lie in (0, 1]");
  }
  if (params.max_color < 1 || params.max_pairs < 1 || params.max_family < 1) {
    throw Error(Errc::InvalidParams, "max_color, max_pairs and max_family must be positive");
  }

  const auto n = static_cast<std::size_t>(params.vertices);
  std::mt19937_64 rng(params.seed);
  std::bernoulli_distribution edge(params.density);
  std::uniform_int_distribution<std::size_t> any_vertex(0, n - 1);
  std::uniform_int_distribution<Player> any_player(1, params.players);

  std::vector<std::string> names;
  std::vector<Player> owner;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    names.push_back("v" + std::to_string(v));
    owner.push_back(any_player(rng));
  }
  for (std::size_t u = 0; u < n; ++u) {
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (edge(rng)) {
        edges.emplace_back(u, v);
        any = true;
      }
    }
    if (!any) edges.emplace_back(u, any_vertex(rng));
  }
  Game game(params.players, std::move(names), std::move(owner), edges, 0);

  std::vector<PlayerObjective> objs(static_cast<std::size_t>(params.players));
  std::uniform_int_distribution<int> color(1, params.max_color);
  std::uniform_int_distribution<int> pair_count(1, params.max_pairs);
  std::uniform_int_distribution<int> family_count(1, params.max_family);
  for (auto& o : objs) {
    switch (params.kind) {
      case ObjectiveKind::Reachability:
      case ObjectiveKind::Safety:
      case ObjectiveKind::Buchi:
      case ObjectiveKind::CoBuchi: o.target = random_subset(rng, n, 0.5); break;
      case ObjectiveKind::Parity:
        for (std::size_t v = 0; v < n; ++v) o.colors.push_back(color(rng));
        break;
      case ObjectiveKind::Muller: {
        std::set<int> used;
        for (std::size_t v = 0; v < n; ++v) {
          o.colors.push_back(color(rng));
          used.insert(o.colors.back());
        }
        const std::vector<int> palette(used.begin(), used.end());
        std::set<std::vector<int>> fams;
        for (int k = family_count(rng); k > 0; --k) {
          const VertexSet pick = random_nonempty_subset(rng, palette.size());
          std::vector<int> f;
          for (VertexId c : members(pick)) f.push_back(palette[c]);
          fams.insert(std::move(f));
        }
        o.color_families.assign(fams.begin(), fams.end());
        break;
      }
      case ObjectiveKind::ExplicitMuller: {
        std::set<std::vector<VertexId>> fams;
        for (int k = family_count(rng); k > 0; --k) {
          VertexSet f = random_nonempty_subset(rng, n);
          for (int tries = 0; tries < 8 && !is_cycle_set(game, f); ++tries) {
            f = random_nonempty_subset(rng, n);
          }
          fams.insert(members(f));
        }
        for (const auto& f : fams) o.families.push_back(make_set(n, f));
        break;
      }
      case ObjectiveKind::Rabin:
      case ObjectiveKind::Streett:
        for (int k = pair_count(rng); k > 0; --k) {
          SetPair pr{random_subset(rng, n, 0.5), {}};
          pr.r = random_subset(rng, n, 0.5);
          o.pairs.push_back(std::move(pr));
        }
        break;
    }
  }
  ObjectiveSet objectives(params.kind, std::move(objs));
  objectives.validate(game);
  return GeneratedGame{std::move(game), std::move(objectives)};
}

}  // namespace wspe
