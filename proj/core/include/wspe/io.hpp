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
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "wspe/fixpoint.hpp"
#include "wspe/game.hpp"
#include "wspe/objectives.hpp"
#include "wspe/strategy.hpp"
#include "wspe/verifier.hpp"
#include "wspe/witness.hpp"

namespace wspe {

/// Every document carries "format": 1. Documents without the field are
/// accepted; any other value is a SchemaError.
inline constexpr int kFormatVersion = 1;

struct GameFile {
  Game game;
  ObjectiveSet objectives;
};

/// Reads a whole file. Throws ParseError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Game document:
///   {"format": 1, "players": 2, "vertices": ["a", "b"],
///    "owner": {"a": 1, "b": 2}, "edges": [["a", "b"], ["b", "b"]],
///    "initial": "a", "objective_type": "buchi",
///    "objectives": {"1": {"F": ["b"]}, "2": {"F": []}}}
/// Per-player data by kind: "F" (target kinds), "colors" (Parity, map
/// vertex -> color), "families" (ExplicitMuller, lists of vertices),
/// "colors" + "families" (Muller, lists of colors), "pairs" (Rabin and
/// Streett, list of {"G": [...], "R": [...]}).
///
/// Throws ParseError with line and column on malformed JSON, SchemaError on
/// missing or mistyped fields, InvalidGame/InvalidObjective on bad content.
GameFile parse_game(std::string_view text);
GameFile load_game(const std::filesystem::path& path);
nlohmann::json game_to_json(const Game& game, const ObjectiveSet& objectives);

/// {"format": 1, "entries": [{"i": 0, "v": "v0", "prefix": [...],
///   "cycle": [...], "payoff": "01"}]}; "payoff" is informative only.
SymbolicWitness parse_witness(std::string_view text, const Game& game);
nlohmann::json witness_to_json(const SymbolicWitness& witness, const Game& game,
                               const ObjectiveSet& objectives);

/// {"format": 1, "vertices": [...], "machines": [{"player": 1, "states": 3,
///   "initial": 0, "labels": [...], "update": [[...], ...],
///   "action": [[name or null, ...], ...]}]}
/// Row k of "update"/"action" belongs to memory state k; columns follow
/// "vertices". Actions must be moves of the game.
StrategyProfile parse_profile(std::string_view text, const Game& game);
nlohmann::json profile_to_json(const StrategyProfile& profile, const Game& game);

nlohmann::json lasso_to_json(const Lasso& lasso, const Game& game);
nlohmann::json counterexample_to_json(const Counterexample& cex, const Game& game);
nlohmann::json violation_to_json(const GoodnessViolation& violation, const Game& game);
nlohmann::json labels_to_json(const LabelTable& table, const Game& game);
nlohmann::json fixpoint_to_json(const FixpointResult& result, const Game& game);

/// Graphviz rendering. Owners map to node shapes (player 1 circle, 2 box,
/// 3 diamond, ...). With a witness, each lasso is drawn as a colored
/// overlay labeled by its index entry.
std::string game_to_dot(const Game& game, const ObjectiveSet& objectives,
                        const SymbolicWitness* witness = nullptr);

}  // namespace wspe
