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
#include "wspe/objectives.hpp"

namespace wspe {
namespace {

using testing::gadget;
using testing::lasso;
using testing::P;
using testing::set_of;

Game two_cycle() {
  return Game(1, {"a", "b"}, {1, 1}, {{0, 1}, {1, 0}, {1, 1}}, 0);
}

TEST(Game, SuccessorsAreSortedAndDeduplicated) {
  Game g(1, {"a", "b", "c"}, {1, 1, 1}, {{0, 2}, {0, 1}, {0, 2}, {1, 1}, {2, 0}}, 0);
  auto s = g.successors(0);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], 1u);
  EXPECT_EQ(s[1], 2u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(2, 1));
}

TEST(Game, RejectsMalformedArenas) {
  // Dead end.
  EXPECT_THROW(Game(1, {"a", "b"}, {1, 1}, {{0, 1}}, 0), Error);
  // Owner out of range.
  EXPECT_THROW(Game(1, {"a"}, {2}, {{0, 0}}, 0), Error);
  // Edge endpoint out of range.
  EXPECT_THROW(Game(1, {"a"}, {1}, {{0, 3}}, 0), Error);
  // Initial vertex out of range.
  EXPECT_THROW(Game(1, {"a"}, {1}, {{0, 0}}, 4), Error);
  // Duplicate names.
  EXPECT_THROW(Game(1, {"a", "a"}, {1, 1}, {{0, 0}, {1, 1}}, 0), Error);
  try {
    Game(1, {"a", "b"}, {1, 1}, {{0, 1}}, 0);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidGame);
  }
}

TEST(Game, NamesRoundTrip) {
  const auto f = gadget();
  EXPECT_EQ(f.game.size(), 7u);
  EXPECT_EQ(f.game.name(f.game.id("v4")), "v4");
  EXPECT_FALSE(f.game.find("v9").has_value());
  EXPECT_THROW(f.game.id("v9"), Error);
}

TEST(Payoff, BitstringOrderIsLexicographic) {
  EXPECT_EQ(P("01").str(), "01");
  EXPECT_FALSE(P("01").get(1));
  EXPECT_TRUE(P("01").get(2));
  EXPECT_LT(P("00"), P("01"));
  EXPECT_LT(P("01"), P("10"));
  EXPECT_LT(P("10"), P("11"));
  EXPECT_TRUE(P("01").leq(P("11")));
  EXPECT_FALSE(P("10").leq(P("01")));
  EXPECT_EQ(Payoff::from_bits({1, 0, 1}).str(), "101");
  EXPECT_THROW(Payoff::parse("0a"), Error);
  EXPECT_THROW(Payoff::parse(""), Error);
}

TEST(PayoffSet, KeepsSortedUniqueItems) {
  PayoffSet s;
  EXPECT_TRUE(s.insert(P("10")));
  EXPECT_TRUE(s.insert(P("00")));
  EXPECT_FALSE(s.insert(P("10")));
  EXPECT_TRUE(s.insert(P("01")));
  EXPECT_EQ(s.str(), "{00,01,10}");
  EXPECT_TRUE(s.erase(P("00")));
  EXPECT_FALSE(s.erase(P("00")));
  EXPECT_EQ(s.str(), "{01,10}");
}

TEST(Lasso, OccAndInf) {
  const auto f = gadget();
  const auto& g = f.game;
  const Lasso a = lasso(g, "v0 v1 v2", "v3");
  EXPECT_EQ(occ(a, g.size()), set_of(g, "v0 v1 v2 v3"));
  EXPECT_EQ(inf(a, g.size()), set_of(g, "v3"));

  const Lasso b = lasso(g, "v0", "v1 v2");
  EXPECT_EQ(occ(b, g.size()), set_of(g, "v0 v1 v2"));
  EXPECT_EQ(inf(b, g.size()), set_of(g, "v1 v2"));

  Game loop(1, {"u"}, {1}, {{0, 0}}, 0);
  const Lasso c{{}, {0}};
  EXPECT_EQ(occ(c, 1), make_set(1, {0}));
  EXPECT_EQ(inf(c, 1), make_set(1, {0}));
  EXPECT_EQ(c.first(), 0u);
  EXPECT_EQ(c.length(), 0u);
}

TEST(Lasso, ValidityAndPositions) {
  const auto f = gadget();
  const auto& g = f.game;
  EXPECT_TRUE(lasso(g, "v0 v1 v2", "v3").valid_in(g));
  EXPECT_TRUE(lasso(g, "", "v1 v2").valid_in(g));
  EXPECT_FALSE(lasso(g, "v0", "v3").valid_in(g));  // no edge v0 -> v3
  EXPECT_FALSE(lasso(g, "", "v1").valid_in(g));    // no edge v1 -> v1
  EXPECT_FALSE(Lasso{}.valid_in(g));

  const Lasso a = lasso(g, "v0", "v1 v2");
  EXPECT_EQ(a.at(0), g.id("v0"));
  EXPECT_EQ(a.at(1), g.id("v1"));
  EXPECT_EQ(a.at(4), g.id("v2"));
  EXPECT_EQ(a.length(), 2u);
  EXPECT_EQ(a.str(g), "v0 (v1 v2)^w");
}

TEST(Lasso, NormalizationIdentifiesEqualPlays) {
  const auto f = gadget();
  const auto& g = f.game;
  const Lasso a = lasso(g, "v0", "v1 v2");
  const Lasso b = lasso(g, "v0 v1 v2", "v1 v2 v1 v2");
  const Lasso c = lasso(g, "v0 v1", "v2 v1");
  EXPECT_EQ(a.normalized(), b.normalized());
  EXPECT_EQ(a.normalized(), c.normalized());
  EXPECT_NE(a.normalized(), lasso(g, "v0 v1 v2", "v3").normalized());
}

TEST(Gain, GadgetOutcome) {
  const auto f = gadget();
  const Lasso a = lasso(f.game, "v0 v1 v2", "v3");
  EXPECT_FALSE(gain(a, f.game, f.objectives, 1));
  EXPECT_TRUE(gain(a, f.game, f.objectives, 2));
  EXPECT_EQ(payoff_of(a, f.game, f.objectives), P("01"));
  EXPECT_EQ(payoff_of(lasso(f.game, "", "v6"), f.game, f.objectives), P("00"));
  EXPECT_EQ(payoff_of(lasso(f.game, "v4", "v5"), f.game, f.objectives), P("01"));
  EXPECT_EQ(payoff_of(lasso(f.game, "", "v1 v2"), f.game, f.objectives), P("10"));
}

TEST(Gain, SafetyWithEmptyBadSetAlwaysWins) {
  const Game g = two_cycle();
  const auto obj = target_objectives(ObjectiveKind::Safety, {VertexSet(2)});
  EXPECT_TRUE(gain(Lasso{{0}, {1}}, g, obj, 1));
  EXPECT_TRUE(gain(Lasso{{}, {0, 1}}, g, obj, 1));
}

TEST(Gain, ReachabilityAndSafetyUseOcc) {
  const Game g = two_cycle();
  const auto reach = target_objectives(ObjectiveKind::Reachability, {make_set(2, {0})});
  const auto safe = target_objectives(ObjectiveKind::Safety, {make_set(2, {0})});
  EXPECT_TRUE(gain(Lasso{{0}, {1}}, g, reach, 1));
  EXPECT_FALSE(gain(Lasso{{0}, {1}}, g, safe, 1));
  EXPECT_FALSE(gain(Lasso{{}, {1}}, g, reach, 1));
  EXPECT_TRUE(gain(Lasso{{}, {1}}, g, safe, 1));
}

TEST(Gain, ParityIsMaxEven) {
  // a -> b, b -> a, b -> b; colors a = 2, b = 1.
  const Game g = two_cycle();
  PlayerObjective o;
  o.colors = {2, 1};
  const ObjectiveSet obj(ObjectiveKind::Parity, {o});
  EXPECT_FALSE(gain(Lasso{{0}, {1}}, g, obj, 1));
  EXPECT_TRUE(gain(Lasso{{}, {0, 1}}, g, obj, 1));
}

TEST(Gain, CoBuchiRabinStreettMuller) {
  const Game g = two_cycle();
  const Lasso only_b{{0}, {1}};
  const Lasso both{{}, {0, 1}};

  const auto cob = target_objectives(ObjectiveKind::CoBuchi, {make_set(2, {0})});
  EXPECT_TRUE(gain(only_b, g, cob, 1));
  EXPECT_FALSE(gain(both, g, cob, 1));

  PlayerObjective pairs;
  pairs.pairs = {SetPair{make_set(2, {1}), make_set(2, {0})}};
  const ObjectiveSet rabin(ObjectiveKind::Rabin, {pairs});
  const ObjectiveSet streett(ObjectiveKind::Streett, {pairs});
  EXPECT_TRUE(gain(only_b, g, rabin, 1));
  EXPECT_FALSE(gain(both, g, rabin, 1));
  EXPECT_FALSE(gain(only_b, g, streett, 1));
  EXPECT_TRUE(gain(both, g, streett, 1));

  PlayerObjective em;
  em.families = {make_set(2, {0, 1})};
  const ObjectiveSet emuller(ObjectiveKind::ExplicitMuller, {em});
  EXPECT_FALSE(gain(only_b, g, emuller, 1));
  EXPECT_TRUE(gain(both, g, emuller, 1));

  PlayerObjective mu;
  mu.colors = {3, 5};
  mu.color_families = {{5}};
  const ObjectiveSet muller(ObjectiveKind::Muller, {mu});
  EXPECT_TRUE(gain(only_b, g, muller, 1));
  EXPECT_FALSE(gain(both, g, muller, 1));
}

TEST(Objectives, ValidateRejectsBadData) {
  const Game g = two_cycle();
  PlayerObjective zero;
  zero.colors = {0, 1};
  EXPECT_THROW(ObjectiveSet(ObjectiveKind::Parity, {zero}).validate(g), Error);
  PlayerObjective partial;
  partial.colors = {1};
  EXPECT_THROW(ObjectiveSet(ObjectiveKind::Parity, {partial}).validate(g), Error);
  EXPECT_THROW(target_objectives(ObjectiveKind::Buchi, {VertexSet(5)}).validate(g), Error);
  // Player count mismatch.
  EXPECT_THROW(target_objectives(ObjectiveKind::Buchi, {VertexSet(2), VertexSet(2)}).validate(g),
               Error);
}

TEST(Objectives, KindNames) {
  for (auto k : {ObjectiveKind::Reachability, ObjectiveKind::Safety, ObjectiveKind::Buchi,
                 ObjectiveKind::CoBuchi, ObjectiveKind::Parity, ObjectiveKind::ExplicitMuller,
                 ObjectiveKind::Muller, ObjectiveKind::Rabin, ObjectiveKind::Streett}) {
    EXPECT_EQ(parse_objective_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_objective_kind("mean-payoff"), Error);
  EXPECT_FALSE(is_prefix_independent(ObjectiveKind::Reachability));
  EXPECT_FALSE(is_prefix_independent(ObjectiveKind::Safety));
  EXPECT_TRUE(is_prefix_independent(ObjectiveKind::Muller));
}

// Random walk lasso from a random start.
Lasso random_lasso(const Game& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> any(0, static_cast<VertexId>(g.size() - 1));
  std::vector<VertexId> walk{any(rng)};
  std::vector<int> seen(g.size(), -1);
  seen[walk[0]] = 0;
  while (true) {
    auto s = g.successors(walk.back());
    const VertexId w = s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
    if (seen[w] >= 0) {
      Lasso l;
      l.prefix.assign(walk.begin(), walk.begin() + seen[w]);
      l.cycle.assign(walk.begin() + seen[w], walk.end());
      return l;
    }
    seen[w] = static_cast<int>(walk.size());
    walk.push_back(w);
  }
}

class PrefixIndependence : public ::testing::TestWithParam<ObjectiveKind> {};

TEST_P(PrefixIndependence, PrependingAHistoryKeepsThePayoff) {
  std::mt19937_64 rng(7);
  for (const auto& gg : testing::corpus(GetParam(), 40, 2, 7, 3, 11)) {
    const auto& g = gg.game;
    for (int t = 0; t < 20; ++t) {
      const Lasso l = random_lasso(g, rng);
      // Walk backwards along some predecessor chain.
      Lasso longer = l;
      for (VertexId u = 0; u < g.size(); ++u) {
        if (g.has_edge(u, l.first())) {
          longer.prefix.insert(longer.prefix.begin(), u);
          break;
        }
      }
      ASSERT_TRUE(longer.valid_in(g));
      EXPECT_EQ(payoff_of(l, g, gg.objectives), payoff_of(longer, g, gg.objectives));
      // Same Occ and Inf, same payoff.
      Lasso unrolled = l;
      unrolled.prefix.insert(unrolled.prefix.end(), l.cycle.begin(), l.cycle.end());
      EXPECT_EQ(payoff_of(l, g, gg.objectives), payoff_of(unrolled, g, gg.objectives));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, PrefixIndependence,
                         ::testing::Values(ObjectiveKind::Buchi, ObjectiveKind::CoBuchi,
                                           ObjectiveKind::Parity, ObjectiveKind::ExplicitMuller,
                                           ObjectiveKind::Muller, ObjectiveKind::Rabin,
                                           ObjectiveKind::Streett),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Gain, ParityComplementFlipsEveryGain) {
  std::mt19937_64 rng(3);
  for (const auto& gg : testing::corpus(ObjectiveKind::Parity, 40, 2, 8, 3, 5)) {
    std::vector<PlayerObjective> shifted;
    for (Player i = 1; i <= gg.objectives.players(); ++i) {
      PlayerObjective o = gg.objectives.of(i);
      for (int& c : o.colors) ++c;
      shifted.push_back(o);
    }
    const ObjectiveSet comp(ObjectiveKind::Parity, shifted);
    for (int t = 0; t < 20; ++t) {
      const Lasso l = random_lasso(gg.game, rng);
      for (Player i = 1; i <= gg.objectives.players(); ++i) {
        EXPECT_NE(gain(l, gg.game, gg.objectives, i), gain(l, gg.game, comp, i));
      }
    }
  }
}

}  // namespace
}  // namespace wspe
