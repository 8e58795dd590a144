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
#include "wspe/strategy.hpp"
#include "wspe/verifier.hpp"
#include "wspe/witness.hpp"

namespace wspe {
namespace {

using testing::gadget;
using testing::fixture;
using testing::lasso;
using testing::P;

class Gadget : public ::testing::Test {
 protected:
  GameFile f = gadget();
  const Game& g = f.game;
  VertexId v0 = g.id("v0");
  SymbolicWitness good = parse_witness(read_file(fixture("gadget_witness.json")), g);
  SymbolicWitness mutated = parse_witness(read_file(fixture("gadget_witness_mutated.json")), g);
};

TEST_F(Gadget, SynthesizedProfileIsVeryWeakSpe) {
  const StrategyProfile s = synthesize(good, g, f.objectives, v0);
  VerifyStats stats;
  EXPECT_FALSE(verify_very_weak_spe(g, f.objectives, v0, s, &stats).has_value());
  EXPECT_GT(stats.configurations, 0u);
  EXPECT_LE(stats.configurations, g.size() * s.memory_size());
}

TEST_F(Gadget, ProfitablePunishmentIsReported) {
  const StrategyProfile s = realize(mutated, g, v0);
  const auto cex = verify_very_weak_spe(g, f.objectives, v0, s);
  ASSERT_TRUE(cex.has_value());
  EXPECT_EQ(cex->configuration.vertex, g.id("v2"));
  EXPECT_EQ(cex->player, 1);
  EXPECT_EQ(cex->deviation, g.id("v1"));
  EXPECT_EQ(cex->prescribed, g.id("v3"));
  EXPECT_FALSE(cex->gain);
  EXPECT_TRUE(cex->deviation_gain);
  EXPECT_EQ(cex->outcome.normalized(), lasso(g, "v2", "v3"));
  EXPECT_EQ(cex->deviation_outcome.normalized(), lasso(g, "", "v1 v2"));
}

TEST_F(Gadget, PartialMachinesAreRejected) {
  StrategyProfile s = synthesize(good, g, f.objectives, v0);
  s.machines[0].set_action(s.machines[0].initial(), g.id("v1"), kNoVertex);
  for (MemoryState m = 0; m < s.machines[0].state_count(); ++m) {
    s.machines[0].set_action(m, g.id("v1"), kNoVertex);
  }
  try {
    verify_very_weak_spe(g, f.objectives, v0, s);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MachinePartial);
  }
}

TEST_F(Gadget, DistinctMachinesPerPlayer) {
  // Positional profile: player 1 always heads for v3, player 2 always to v1.
  StrategyProfile s;
  MooreMachine p1(1, g.size(), 0);
  MooreMachine p2(1, g.size(), 0);
  for (VertexId v = 0; v < g.size(); ++v) {
    p1.set_update(0, v, 0);
    p2.set_update(0, v, 0);
  }
  p1.set_action(0, g.id("v1"), g.id("v2"));
  p1.set_action(0, g.id("v2"), g.id("v3"));
  p1.set_action(0, g.id("v3"), g.id("v3"));
  p1.set_action(0, g.id("v5"), g.id("v5"));
  p1.set_action(0, g.id("v6"), g.id("v6"));
  p2.set_action(0, g.id("v0"), g.id("v1"));
  p2.set_action(0, g.id("v4"), g.id("v5"));
  s.machines = {p1, p2};
  // Player 1 at v2 gets 0 but moving to v1 leads back to v2 and then v3: no gain.
  EXPECT_FALSE(verify_very_weak_spe(g, f.objectives, v0, s).has_value());

  // Player 2 choosing v6 at v4 is punished nowhere: player 2 prefers v5.
  s.machines[1].set_action(0, g.id("v4"), g.id("v6"));
  const auto cex = verify_very_weak_spe(g, f.objectives, v0, s);
  ASSERT_TRUE(cex.has_value());
  EXPECT_EQ(cex->configuration.vertex, g.id("v4"));
  EXPECT_EQ(cex->player, 2);
  EXPECT_EQ(cex->deviation, g.id("v5"));
}

TEST(Verifier, RejectsPrefixDependentObjectives) {
  const auto f = gadget();
  const auto reach = target_objectives(ObjectiveKind::Reachability,
                                       {f.game.empty_set(), f.game.empty_set()});
  const StrategyProfile s =
      synthesize(parse_witness(read_file(fixture("gadget_witness.json")), f.game), f.game,
                 f.objectives, 0);
  EXPECT_THROW(verify_very_weak_spe(f.game, reach, 0, s), Error);
}

// Realized good witnesses verify, including after swapping one lasso for
// another that keeps the witness good.
TEST(Verifier, GoodWitnessesVerify) {
  std::mt19937_64 rng(17);
  int bad_seen = 0;
  for (auto kind : {ObjectiveKind::Buchi, ObjectiveKind::Parity, ObjectiveKind::Streett}) {
    for (const auto& gg : testing::corpus(kind, 40, 2, 7, 3, 81)) {
      const auto& g = gg.game;
      const FixpointResult r = fixpoint(g, gg.objectives, 0);
      for (const auto& p : r.table.at(0)) {
        SymbolicWitness w = build_witness(g, gg.objectives, r.table, 0, p);
        EXPECT_FALSE(verify_very_weak_spe(g, gg.objectives, 0, realize(w, g, 0)).has_value());
        // Swap one entry for another lasso from the same vertex.
        const auto entries = deviation_index(g, 0);
        const IndexEntry target = entries[rng() % entries.size()];
        const VertexSet full = g.full_set();
        for (std::uint64_t bits = 0; bits < (1ULL << g.players()); ++bits) {
          const Payoff q(g.players(), bits);
          if (!exists_play(g, gg.objectives, full, target.vertex, q)) continue;
          SymbolicWitness m = w;
          m.lassoes[target] = extract_lasso(g, gg.objectives, full, target.vertex, q);
          const bool good = !is_good(m, g, gg.objectives).has_value();
          const bool verified = !verify_very_weak_spe(g, gg.objectives, 0, realize(m, g, 0));
          // Goodness also constrains moves the profile itself prescribes, so
          // it is sufficient but not necessary.
          if (good) {
            EXPECT_TRUE(verified);
          }
          bad_seen += verified ? 0 : 1;
        }
      }
    }
  }
  EXPECT_GT(bad_seen, 0);
}

}  // namespace
}  // namespace wspe
