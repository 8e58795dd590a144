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
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wspe/error.hpp"
#include "wspe/fixpoint.hpp"
#include "wspe/strategy.hpp"
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
  SymbolicWitness w = parse_witness(read_file(fixture("gadget_witness.json")), g);
};

TEST_F(Gadget, OutcomeIsTheWitnessOutcome) {
  const StrategyProfile s = synthesize(w, g, f.objectives, g.id("v0"));
  ASSERT_EQ(s.machines.size(), 2u);
  const Lasso out = outcome_from(s, g, g.id("v0"), s.initial_states());
  EXPECT_EQ(out.normalized(), lasso(g, "v0 v1 v2", "v3"));
  EXPECT_EQ(payoff_of(out, g, f.objectives), P("01"));
  EXPECT_LE(s.memory_size(), synthesis_size_bound(g));
}

TEST_F(Gadget, DeviationSwitchesToPunishingLasso) {
  const StrategyProfile s = synthesize(w, g, f.objectives, g.id("v0"));
  // Follow v0 v1 v2, then player 1 deviates to v1.
  std::vector<MemoryState> st = s.initial_states();
  for (const char* name : {"v1", "v2", "v1"}) {
    for (std::size_t j = 0; j < st.size(); ++j) st[j] = s.machines[j].update(st[j], g.id(name));
  }
  EXPECT_EQ(outcome_from(s, g, g.id("v1"), st).normalized(), lasso(g, "v1 v2", "v3"));
}

TEST_F(Gadget, EveryEntryStateReplaysItsLasso) {
  std::map<IndexEntry, MemoryState> starts;
  const StrategyProfile s = synthesize(w, g, f.objectives, g.id("v0"), &starts);
  ASSERT_EQ(starts.size(), w.lassoes.size());
  for (const auto& [entry, l] : w.lassoes) {
    const std::vector<MemoryState> st(2, starts.at(entry));
    EXPECT_EQ(outcome_from(s, g, entry.vertex, st).normalized(), l.normalized());
  }
}

TEST_F(Gadget, MachinesShareMemoryAndOnlyActOnOwnVertices) {
  const StrategyProfile s = synthesize(w, g, f.objectives, g.id("v0"));
  const auto& m1 = s.of(1);
  const auto& m2 = s.of(2);
  ASSERT_EQ(m1.state_count(), m2.state_count());
  for (MemoryState m = 0; m < m1.state_count(); ++m) {
    for (VertexId v = 0; v < g.size(); ++v) {
      EXPECT_EQ(m1.update(m, v), m2.update(m, v));
      const auto& own = g.owner(v) == 1 ? m1 : m2;
      const auto& other = g.owner(v) == 1 ? m2 : m1;
      EXPECT_NE(own.update(m, v), kNoState);
      ASSERT_NE(own.action(m, v), kNoVertex);
      EXPECT_TRUE(g.has_edge(v, own.action(m, v)));
      EXPECT_EQ(other.action(m, v), kNoVertex);
    }
  }
}

TEST_F(Gadget, RejectsBadWitnesses) {
  const SymbolicWitness bad = parse_witness(read_file(fixture("gadget_witness_mutated.json")), g);
  EXPECT_THROW(synthesize(bad, g, f.objectives, g.id("v0")), Error);
  SymbolicWitness partial = w;
  partial.lassoes.erase({2, g.id("v1")});
  try {
    synthesize(partial, g, f.objectives, g.id("v0"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WitnessIncomplete);
  }
}

TEST(Synthesize, SelfLoopIsPositional) {
  const auto f = load_game(fixture("selfloop.json"));
  const FixpointResult r = fixpoint(f.game, f.objectives, 0);
  const SymbolicWitness w = build_witness(f.game, f.objectives, r.table, 0, P("1"));
  const StrategyProfile s = synthesize(w, f.game, f.objectives, 0);
  EXPECT_EQ(s.memory_size(), 1u);
  EXPECT_EQ(outcome_from(s, f.game, 0, s.initial_states()), (Lasso{{}, {0}}));
}

TEST(Minimize, MergesEquivalentStates) {
  MooreMachine m(3, 1, 0);
  for (MemoryState s = 0; s < 3; ++s) {
    m.set_update(s, 0, (s + 1) % 3);
    m.set_action(s, 0, 0);
  }
  std::vector<MemoryState> cls;
  const MooreMachine small = minimize(m, &cls);
  EXPECT_EQ(small.state_count(), 1u);
  EXPECT_EQ(cls, (std::vector<MemoryState>{0, 0, 0}));

  MooreMachine alt(2, 2, 1);
  alt.set_action(0, 0, 0);
  alt.set_action(1, 0, 1);
  for (MemoryState s = 0; s < 2; ++s) {
    alt.set_update(s, 0, s);
    alt.set_update(s, 1, s);
  }
  const MooreMachine kept = minimize(alt);
  EXPECT_EQ(kept.state_count(), 2u);
  EXPECT_EQ(kept.action(kept.initial(), 0), 1u);
}

TEST(Synthesize, RandomOutcomesFollowWitness) {
  for (auto kind : {ObjectiveKind::Buchi, ObjectiveKind::CoBuchi, ObjectiveKind::Streett}) {
    for (const auto& gg : testing::corpus(kind, 30, 2, 7, 3, 71)) {
      const auto& g = gg.game;
      const FixpointResult r = fixpoint(g, gg.objectives, 0);
      for (const auto& p : r.table.at(0)) {
        const SymbolicWitness w = build_witness(g, gg.objectives, r.table, 0, p);
        std::map<IndexEntry, MemoryState> starts;
        const StrategyProfile s = synthesize(w, g, gg.objectives, 0, &starts);
        EXPECT_LE(s.memory_size(), synthesis_size_bound(g));
        for (const auto& [entry, l] : w.lassoes) {
          const std::vector<MemoryState> st(s.machines.size(), starts.at(entry));
          const Lasso out = outcome_from(s, g, entry.vertex, st);
          EXPECT_EQ(out.normalized(), l.normalized());
        }
      }
    }
  }
}

}  // namespace
}  // namespace wspe
