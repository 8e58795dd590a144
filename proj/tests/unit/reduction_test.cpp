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
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wspe/error.hpp"
#include "wspe/fixpoint.hpp"
#include "wspe/reduction.hpp"
#include "wspe/strategy.hpp"
#include "wspe/verifier.hpp"
#include "wspe/witness.hpp"

namespace wspe {
namespace {

using testing::lasso;
using testing::set_of;

// a -> b, b -> b, player 1 owns both, F1 = {b}.
GameFile two_vertex(ObjectiveKind kind) {
  Game g(1, {"a", "b"}, {1, 1}, {{0, 1}, {1, 1}}, 0);
  ObjectiveSet o = target_objectives(kind, {make_set(2, {1})});
  return {g, o};
}

TEST(Reduction, ReachabilityBecomesBuchi) {
  const auto f = two_vertex(ObjectiveKind::Reachability);
  const ReducedGame r = to_prefix_independent(f.game, f.objectives);
  ASSERT_EQ(r.game.size(), 2u);
  EXPECT_EQ(r.objectives.kind(), ObjectiveKind::Buchi);
  EXPECT_EQ(r.game.name(0), "a@{}");
  EXPECT_EQ(r.base[0], 0u);
  EXPECT_EQ(r.flags[0], 0u);
  const VertexId b1 = *r.find(1, 1);
  EXPECT_EQ(r.game.name(b1), "b@{1}");
  EXPECT_TRUE(r.game.has_edge(0, b1));
  EXPECT_TRUE(r.game.has_edge(b1, b1));
  EXPECT_EQ(r.game.edge_count(), 2u);
  EXPECT_EQ(r.objectives.of(1).target, make_set(2, {b1}));
  EXPECT_FALSE(r.find(1, 0).has_value());
}

TEST(Reduction, SafetyBecomesCoBuchi) {
  // Initial vertex already in F: the flag is raised at once.
  Game g(1, {"a", "b"}, {1, 1}, {{0, 1}, {1, 1}, {1, 0}}, 0);
  const auto o = target_objectives(ObjectiveKind::Safety, {make_set(2, {0})});
  const ReducedGame r = to_prefix_independent(g, o);
  EXPECT_EQ(r.objectives.kind(), ObjectiveKind::CoBuchi);
  EXPECT_EQ(r.flags[0], 1u);
  EXPECT_EQ(r.game.size(), 2u);
  for (VertexId p = 0; p < r.game.size(); ++p) EXPECT_EQ(r.flags[p], 1u);
  // Every play of the base game visits a: nobody wins.
  const FixpointResult fx = fixpoint(r.game, r.objectives, 0);
  EXPECT_EQ(fx.table.at(0), (PayoffSet{Payoff::parse("0")}));
}

TEST(Reduction, PrefixIndependentKindsAreRejected) {
  const auto f = two_vertex(ObjectiveKind::Buchi);
  try {
    to_prefix_independent(f.game, f.objectives);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotReachSafety);
  }
}

TEST(Reduction, ProductNames) {
  EXPECT_EQ(product_vertex_name("v", 0), "v@{}");
  EXPECT_EQ(product_vertex_name("v", 0b101), "v@{1,3}");
}

// Walks the product along a random play and checks payoff preservation,
// flag monotonicity and the projection.
class ReductionProperties : public ::testing::TestWithParam<ObjectiveKind> {};

TEST_P(ReductionProperties, PlaysArePreserved) {
  std::mt19937_64 rng(5);
  for (const auto& gg : testing::corpus(GetParam(), 40, 2, 8, 3, 23)) {
    const Game& g = gg.game;
    const ReducedGame r = to_prefix_independent(g, gg.objectives);
    EXPECT_LE(r.game.size(), g.size() << g.players());
    for (VertexId p = 0; p < r.game.size(); ++p) {
      EXPECT_EQ(r.game.owner(p), g.owner(r.base[p]));
      for (VertexId q : r.game.successors(p)) {
        EXPECT_TRUE(g.has_edge(r.base[p], r.base[q]));
        EXPECT_EQ(r.flags[p] & ~r.flags[q], 0u);
        EXPECT_EQ(r.flags[q], r.flags[p] | r.trigger[r.base[q]]);
      }
      EXPECT_EQ(r.game.successors(p).size(), g.successors(r.base[p]).size());
    }
    for (int trial = 0; trial < 10; ++trial) {
      // Random walk until a product vertex repeats.
      std::vector<VertexId> walk{0};
      std::vector<int> seen(r.game.size(), -1);
      seen[0] = 0;
      for (;;) {
        const auto succ = r.game.successors(walk.back());
        const VertexId next = succ[rng() % succ.size()];
        if (seen[next] >= 0) {
          const auto cut = walk.begin() + seen[next];
          const Lasso pl{{walk.begin(), cut}, {cut, walk.end()}};
          const Lasso base = project(pl, r);
          ASSERT_TRUE(base.valid_in(g));
          EXPECT_EQ(base.first(), g.initial());
          EXPECT_EQ(payoff_of(pl, r.game, r.objectives), payoff_of(base, g, gg.objectives));
          break;
        }
        seen[next] = static_cast<int>(walk.size());
        walk.push_back(next);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, ReductionProperties,
                         ::testing::Values(ObjectiveKind::Reachability, ObjectiveKind::Safety),
                         [](const auto& info) { return std::string(to_string(info.param)); });

// Solving through the product and pulling the profile back gives a base
// profile whose outcome has the solved payoff and which verifies on the
// product.
TEST(Reduction, PullBackRoundTrip) {
  for (auto kind : {ObjectiveKind::Reachability, ObjectiveKind::Safety}) {
    for (const auto& gg : testing::corpus(kind, 30, 2, 6, 3, 41)) {
      const Game& g = gg.game;
      const ReducedGame r = to_prefix_independent(g, gg.objectives);
      const FixpointResult fx = fixpoint(r.game, r.objectives, 0);
      for (const auto& p : fx.table.at(0)) {
        const auto w = build_witness(r.game, r.objectives, fx.table, 0, p);
        const StrategyProfile ps = synthesize(w, r.game, r.objectives, 0);
        const StrategyProfile base = pull_back_profile(ps, r, g);
        const Lasso out = outcome_from(base, g, g.initial(), base.initial_states());
        EXPECT_EQ(payoff_of(out, g, gg.objectives), p);
        const StrategyProfile forward = push_forward_profile(base, r, g);
        EXPECT_FALSE(verify_very_weak_spe(r.game, r.objectives, 0, forward).has_value());
      }
    }
  }
}

TEST(Reduction, GadgetAsReachability) {
  const auto f = testing::gadget();
  const Game& g = f.game;
  const auto o = target_objectives(ObjectiveKind::Reachability,
                                   {set_of(g, "v1"), set_of(g, "v3 v5")});
  const ReducedGame r = to_prefix_independent(g, o);
  const FixpointResult fx = fixpoint(r.game, r.objectives, 0);
  // Player 2 can always secure v5 from v4, so every outcome gives player 2
  // a win: 11 through v3 and 01 through v5. (v1 v2)^w would give 10.
  EXPECT_EQ(fx.table.at(0), (PayoffSet{Payoff::parse("01"), Payoff::parse("11")}));
}

}  // namespace
}  // namespace wspe
