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
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wspe/error.hpp"
#include "wspe/fixpoint.hpp"
#include "wspe/io.hpp"
#include "wspe/strategy.hpp"
#include "wspe/witness.hpp"

namespace wspe {
namespace {

using testing::gadget;
using testing::fixture;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidGame;
}

TEST(Io, Gadget) {
  const auto f = gadget();
  EXPECT_EQ(f.game.size(), 7u);
  EXPECT_EQ(f.game.players(), 2);
  EXPECT_EQ(f.game.edge_count(), 10u);
  EXPECT_EQ(f.game.owner(f.game.id("v0")), 2);
  EXPECT_EQ(f.objectives.kind(), ObjectiveKind::Buchi);
  EXPECT_EQ(f.objectives.of(2).target, testing::set_of(f.game, "v3 v5"));
}

class IoRoundTrip : public ::testing::TestWithParam<ObjectiveKind> {};

TEST_P(IoRoundTrip, GeneratedGames) {
  for (const auto& gg : testing::corpus(GetParam(), 12, 1, 9, 3, 7)) {
    const std::string text = game_to_json(gg.game, gg.objectives).dump(2);
    const GameFile back = parse_game(text);
    EXPECT_EQ(back.game, gg.game);
    EXPECT_EQ(back.objectives, gg.objectives);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Kinds, IoRoundTrip,
    ::testing::Values(ObjectiveKind::Reachability, ObjectiveKind::Safety, ObjectiveKind::Buchi,
                      ObjectiveKind::CoBuchi, ObjectiveKind::Parity,
                      ObjectiveKind::ExplicitMuller, ObjectiveKind::Muller,
                      ObjectiveKind::Rabin, ObjectiveKind::Streett),
    [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Io, ParseErrorCarriesPosition) {
  try {
    parse_game("{\n  \"players\": 2,\n  \"vertices\": [\"a\" \"b\"]\n}");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3, column"), std::string::npos) << e.what();
  }
}

TEST(Io, SchemaErrors) {
  EXPECT_EQ(code_of([] { parse_game("[]"); }), Errc::SchemaError);
  EXPECT_EQ(code_of([] { parse_game(R"({"players": 1})"); }), Errc::SchemaError);
  EXPECT_EQ(code_of([] { parse_game(R"({"format": 2})"); }), Errc::SchemaError);
  const std::string base = R"({"players": 1, "vertices": ["a"], "owner": {"a": 1},
    "edges": [["a", "a"]], "initial": "a", "objective_type": "buchi",
    "objectives": {"1": {"F": ["a"]}}})";
  EXPECT_NO_THROW(parse_game(base));
  auto with = [&](const std::string& from, const std::string& to) {
    std::string s = base;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_EQ(code_of([&] { parse_game(with(R"("F": ["a"])", R"("F": ["z"])")); }),
            Errc::SchemaError);
  EXPECT_EQ(code_of([&] { parse_game(with(R"("F": ["a"])", R"("X": [])")); }),
            Errc::SchemaError);
  EXPECT_EQ(code_of([&] { parse_game(with("\"buchi\"", "\"fancy\"")); }),
            Errc::InvalidObjective);
  EXPECT_EQ(code_of([&] { parse_game(with("\"players\": 1", "\"players\": \"1\"")); }),
            Errc::SchemaError);
  EXPECT_EQ(code_of([&] { parse_game(with(R"([["a", "a"]])", "[]")); }), Errc::InvalidGame);
}

TEST(Io, MissingFile) {
  EXPECT_EQ(code_of([] { load_game(fixture("does_not_exist.json")); }), Errc::ParseError);
}

TEST(Io, WitnessRoundTrip) {
  const auto f = gadget();
  const SymbolicWitness w = parse_witness(read_file(fixture("gadget_witness.json")), f.game);
  EXPECT_EQ(w.lassoes.size(), 10u);
  const auto j = witness_to_json(w, f.game, f.objectives);
  EXPECT_EQ(parse_witness(j.dump(), f.game).lassoes, w.lassoes);
  for (const auto& e : j.at("entries")) {
    EXPECT_TRUE(e.contains("payoff"));
  }
}

TEST(Io, ProfileRoundTrip) {
  const auto f = gadget();
  const SymbolicWitness w = parse_witness(read_file(fixture("gadget_witness.json")), f.game);
  const StrategyProfile s = synthesize(w, f.game, f.objectives, 0);
  const auto j = profile_to_json(s, f.game);
  const StrategyProfile back = parse_profile(j.dump(), f.game);
  ASSERT_EQ(back.machines.size(), s.machines.size());
  for (std::size_t k = 0; k < s.machines.size(); ++k) {
    EXPECT_EQ(back.machines[k], s.machines[k]);
  }
}

TEST(Io, ProfileUnknownVertex) {
  const auto f = gadget();
  EXPECT_EQ(code_of([&] {
              parse_profile(read_file(fixture("profile_unknown_vertex.json")), f.game);
            }),
            Errc::SchemaError);
}

TEST(Io, ProfileActionMustBeAMove) {
  const auto f = gadget();
  const SymbolicWitness w = parse_witness(read_file(fixture("gadget_witness.json")), f.game);
  auto j = profile_to_json(synthesize(w, f.game, f.objectives, 0), f.game);
  // Column of v0 in player 2's first row: v0 -> v3 is not an edge.
  auto& row = j["machines"][1]["action"][0];
  const auto& names = j["vertices"];
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (names[c] == "v0") row[c] = "v3";
  }
  EXPECT_EQ(code_of([&] { parse_profile(j.dump(), f.game); }), Errc::SchemaError);
}

TEST(Io, FixpointJson) {
  const auto f = gadget();
  FixpointOptions opts;
  opts.record_rows = true;
  const auto r = fixpoint(f.game, f.objectives, 0, opts);
  const auto j = fixpoint_to_json(r, f.game);
  EXPECT_EQ(j.at("fixpoint_step"), 4);
  EXPECT_EQ(j.at("steps").size(), r.trace.size());
  EXPECT_EQ(j.at("labels").at("v0"), nlohmann::json::array({"01"}));
}

TEST(Io, DotMentionsEveryVertex) {
  const auto f = gadget();
  const SymbolicWitness w = parse_witness(read_file(fixture("gadget_witness.json")), f.game);
  const std::string dot = game_to_dot(f.game, f.objectives, &w);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  for (const auto& n : f.game.names()) EXPECT_NE(dot.find("\"" + n + "\""), std::string::npos);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
}

}  // namespace
}  // namespace wspe
