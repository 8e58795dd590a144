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
#include "wspe/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wspe/error.hpp"
#include "wspe/fixpoint.hpp"
#include "wspe/generator.hpp"
#include "wspe/io.hpp"
#include "wspe/reduction.hpp"
#include "wspe/strategy.hpp"
#include "wspe/verifier.hpp"
#include "wspe/witness.hpp"

namespace wspe {

namespace {

using nlohmann::json;

/// A game file together with the prefix-independent game the solver works
/// on: the file itself, or its product for Reachability/Safety inputs.
struct Loaded {
  GameFile file;
  std::optional<ReducedGame> reduced;

  const Game& game() const { return reduced ? reduced->game : file.game; }
  const ObjectiveSet& objectives() const { return reduced ? reduced->objectives : file.objectives; }
  VertexId start() const { return game().initial(); }
};

Loaded load(const std::string& path) {
  Loaded l{load_game(path), std::nullopt};
  if (!is_prefix_independent(l.file.objectives.kind())) {
    l.reduced = to_prefix_independent(l.file.game, l.file.objectives);
  }
  return l;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot write " + path);
  f << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

Payoff threshold(const std::string& bits, int players, bool high) {
  if (bits.empty()) {
    Payoff p(players);
    for (Player i = 1; i <= players && high; ++i) p.set(i, true);
    return p;
  }
  try {
    return Payoff::parse(bits);
  } catch (const Error&) {
    throw Error(Errc::InvalidThresholds, "threshold \"" + bits + "\" is not a bitstring");
  }
}

void add_product_info(json& report, const Loaded& l) {
  if (!l.reduced) return;
  report["product"] = {{"source_kind", std::string(to_string(l.reduced->source_kind))},
                       {"vertices", l.reduced->game.size()},
                       {"edges", l.reduced->game.edge_count()}};
}

/// Profile on the input game from one on the solver game.
StrategyProfile to_input_profile(const StrategyProfile& profile, const Loaded& l) {
  return l.reduced ? pull_back_profile(profile, *l.reduced, l.file.game) : profile;
}

StrategyProfile to_solver_profile(const StrategyProfile& profile, const Loaded& l) {
  return l.reduced ? push_forward_profile(profile, *l.reduced, l.file.game) : profile;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string event_text(const StepRecord& s, const Game& game) {
  if (s.kind == StepKind::Remove) {
    if (!s.payoff) return "remove: none";
    return "remove (" + game.name(s.vertices.front()) + "," + s.payoff->str() + ") via " +
           game.name(*s.successor);
  }
  std::string vs;
  for (VertexId v : s.vertices) vs += (vs.empty() ? "" : ",") + game.name(v);
  return "adjust " + s.payoff->str() + ": {" + vs + "}";
}

/// One row per labeling P_k in the layout of a step-by-step table.
std::string trace_table(const FixpointResult& r, const Game& game) {
  const auto vs = members(r.table.arena);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"k", "step"};
  for (VertexId v : vs) header.push_back(game.name(v));
  cells.push_back(header);
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    std::vector<std::string> row{std::to_string(k), k == 0 ? "init" : event_text(r.trace[k - 1], game)};
    for (VertexId v : vs) row.push_back(r.rows[k][v].str());
    cells.push_back(std::move(row));
  }
  // The final no-op Remove leaves the labeling unchanged.
  const auto& last = r.trace.back();
  if (!r.rows.empty() && last.k == r.rows.size()) {
    std::vector<std::string> row{std::to_string(last.k), event_text(last, game)};
    for (VertexId v : vs) row.push_back(r.rows.back()[v].str());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += pad(row[c], width[c] + 2);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  out << "fixpoint P" << r.fixpoint_step << " (" << event_text(last, game) << " at k=" << last.k
      << ")\n";
  return out.str();
}

FixpointOptions fixpoint_options(std::size_t enum_cap, bool rows) {
  FixpointOptions o;
  o.oracle.enumeration_cap = enum_cap;
  o.record_rows = rows;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak subgame perfect equilibria in multiplayer graph games", "wspe"};
  app.require_subcommand(1);

  std::size_t enum_cap = 22;
  app.add_option("--enum-cap", enum_cap, "Largest vertex count for Inf-set enumeration")
      ->capture_default_str();

  std::string game_path;
  std::string min_bits;
  std::string max_bits;
  std::string witness_path;
  std::string synth_path;
  std::string profile_path;
  std::string out_path;
  std::string check_path;
  std::string payoff_bits;
  bool trace = false;
  bool as_json = false;
  std::vector<std::string> batch_paths;
  GeneratorParams gen;
  std::string gen_kind = "buchi";

  auto* solve = app.add_subcommand("solve", "Decide existence of a weak SPE with x <= payoff <= y");
  solve->add_option("game", game_path, "Game file")->required();
  solve->add_option("--min", min_bits, "Lower threshold bitstring (player 1 first)");
  solve->add_option("--max", max_bits, "Upper threshold bitstring");
  solve->add_option("--witness", witness_path, "Write a symbolic witness");
  solve->add_option("--synth", synth_path, "Write a finite-memory strategy profile");

  auto* fix = app.add_subcommand("fixpoint", "Run the labeling fixpoint");
  fix->add_option("game", game_path, "Game file")->required();
  fix->add_flag("--trace", trace, "Print every labeling P_k");
  fix->add_flag("--json", as_json, "Print JSON instead of text");

  auto* verify = app.add_subcommand("verify", "Check that a profile is a weak SPE");
  verify->add_option("game", game_path, "Game file")->required();
  verify->add_option("profile", profile_path, "Profile file")->required();

  auto* witness = app.add_subcommand("witness", "Emit or check a symbolic witness");
  witness->add_option("game", game_path, "Game file")->required();
  witness->add_option("--payoff", payoff_bits, "Payoff of the outcome from the initial vertex");
  witness->add_option("--check", check_path, "Witness file to check");
  witness->add_option("--out", out_path, "Write the witness here instead of stdout");

  auto* synth = app.add_subcommand("synth", "Turn a witness into a strategy profile");
  synth->add_option("game", game_path, "Game file")->required();
  synth->add_option("witness", witness_path, "Witness file")->required();
  synth->add_option("--out", out_path, "Write the profile here instead of stdout");

  auto* generate = app.add_subcommand("gen", "Emit a random game");
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("--vertices", gen.vertices)->capture_default_str();
  generate->add_option("--players", gen.players)->capture_default_str();
  generate->add_option("--kind", gen_kind)->capture_default_str();
  generate->add_option("--density", gen.density)->capture_default_str();
  generate->add_option("--max-color", gen.max_color)->capture_default_str();
  generate->add_option("--max-pairs", gen.max_pairs)->capture_default_str();
  generate->add_option("--max-family", gen.max_family)->capture_default_str();
  generate->add_option("--out", out_path, "Write the game here instead of stdout");

  auto* dot = app.add_subcommand("dot", "Export a game (and optionally a witness) to Graphviz");
  dot->add_option("game", game_path, "Game file")->required();
  dot->add_option("--witness", witness_path, "Witness overlay");

  auto* batch = app.add_subcommand("batch", "Solve many games, CSV output");
  batch->add_option("games", batch_paths, "Game files")->required();
  batch->add_option("--min", min_bits, "Lower threshold bitstring");
  batch->add_option("--max", max_bits, "Upper threshold bitstring");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*solve) {
      const Loaded l = load(game_path);
      const int n = l.file.game.players();
      const Payoff x = threshold(min_bits, n, false);
      const Payoff y = threshold(max_bits, n, true);
      const Decision d = decide(l.game(), l.objectives(), l.start(), x, y,
                                fixpoint_options(enum_cap, false));
      json report;
      report["exists"] = d.payoff.has_value();
      if (d.payoff) report["payoff"] = d.payoff->str();
      report["fixpoint"] = labels_to_json(d.fixpoint.table, l.game());
      report["fixpoint_step"] = d.fixpoint.fixpoint_step;
      add_product_info(report, l);
      if (d.payoff && (!witness_path.empty() || !synth_path.empty())) {
        const SymbolicWitness w = build_witness(l.game(), l.objectives(), d.fixpoint.table,
                                                l.start(), *d.payoff, {enum_cap});
        if (!witness_path.empty()) write_json(witness_path, witness_to_json(w, l.game(), l.objectives()));
        if (!synth_path.empty()) {
          const StrategyProfile profile = synthesize(w, l.game(), l.objectives(), l.start());
          const StrategyProfile input = to_input_profile(profile, l);
          const bool ok = !verify_very_weak_spe(l.game(), l.objectives(), l.start(),
                                                to_solver_profile(input, l))
                               .has_value();
          report["memory"] = input.memory_size();
          report["verified"] = ok;
          write_json(synth_path, profile_to_json(input, l.file.game));
        }
      }
      out << report.dump(2) << "\n";
      return d.payoff ? kExitYes : kExitNo;
    }

    if (*fix) {
      const Loaded l = load(game_path);
      const FixpointResult r =
          fixpoint(l.game(), l.objectives(), l.start(), fixpoint_options(enum_cap, true));
      if (as_json) {
        json j = fixpoint_to_json(r, l.game());
        if (!trace) j.erase("rows");
        add_product_info(j, l);
        out << j.dump(2) << "\n";
      } else if (trace) {
        out << trace_table(r, l.game());
      } else {
        for (VertexId v : members(r.table.arena)) {
          out << l.game().name(v) << " " << r.table.at(v).str() << "\n";
        }
      }
      return kExitYes;
    }

    if (*verify) {
      const Loaded l = load(game_path);
      const StrategyProfile input = parse_profile(read_file(profile_path), l.file.game);
      VerifyStats stats;
      const auto cex = verify_very_weak_spe(l.game(), l.objectives(), l.start(),
                                            to_solver_profile(input, l), &stats);
      json report{{"verified", !cex.has_value()}, {"configurations", stats.configurations}};
      if (cex) report["counterexample"] = counterexample_to_json(*cex, l.game());
      add_product_info(report, l);
      out << report.dump(2) << "\n";
      return cex ? kExitNo : kExitYes;
    }

    if (*witness) {
      const Loaded l = load(game_path);
      if (!check_path.empty()) {
        const SymbolicWitness w = parse_witness(read_file(check_path), l.game());
        check_witness_structure(w, l.game());
        const auto violation = is_good(w, l.game(), l.objectives());
        json report{{"good", !violation.has_value()}};
        if (violation) report["violation"] = violation_to_json(*violation, l.game());
        out << report.dump(2) << "\n";
        return violation ? kExitNo : kExitYes;
      }
      if (payoff_bits.empty()) throw Error(Errc::InvalidThresholds, "witness needs --payoff or --check");
      const Payoff p = Payoff::parse(payoff_bits);
      const FixpointResult r =
          fixpoint(l.game(), l.objectives(), l.start(), fixpoint_options(enum_cap, false));
      if (!r.table.all_nonempty() || !r.table.at(l.start()).contains(p)) {
        err << "no weak SPE with payoff " << p.str() << "\n";
        return kExitNo;
      }
      const SymbolicWitness w =
          build_witness(l.game(), l.objectives(), r.table, l.start(), p, {enum_cap});
      const json j = witness_to_json(w, l.game(), l.objectives());
      if (out_path.empty()) {
        out << j.dump(2) << "\n";
      } else {
        write_json(out_path, j);
      }
      return kExitYes;
    }

    if (*synth) {
      const Loaded l = load(game_path);
      const SymbolicWitness w = parse_witness(read_file(witness_path), l.game());
      check_witness_structure(w, l.game());
      if (const auto violation = is_good(w, l.game(), l.objectives())) {
        out << json{{"good", false}, {"violation", violation_to_json(*violation, l.game())}}.dump(2)
            << "\n";
        return kExitNo;
      }
      const StrategyProfile profile = synthesize(w, l.game(), l.objectives(), l.start());
      const json j = profile_to_json(to_input_profile(profile, l), l.file.game);
      if (out_path.empty()) {
        out << j.dump(2) << "\n";
      } else {
        write_json(out_path, j);
      }
      return kExitYes;
    }

    if (*generate) {
      gen.kind = parse_objective_kind(gen_kind);
      const GeneratedGame g = gen_random_game(gen);
      const json j = game_to_json(g.game, g.objectives);
      if (out_path.empty()) {
        out << j.dump(2) << "\n";
      } else {
        write_json(out_path, j);
      }
      return kExitYes;
    }

    if (*dot) {
      const Loaded l = load(game_path);
      if (witness_path.empty()) {
        out << game_to_dot(l.game(), l.objectives());
      } else {
        const SymbolicWitness w = parse_witness(read_file(witness_path), l.game());
        out << game_to_dot(l.game(), l.objectives(), &w);
      }
      return kExitYes;
    }

    if (*batch) {
      out << "file,kind,players,vertices,edges,exists,payoff,fixpoint_step,millis\n";
      for (const auto& path : batch_paths) {
        const auto t0 = std::chrono::steady_clock::now();
        const Loaded l = load(path);
        const int n = l.file.game.players();
        const Decision d = decide(l.game(), l.objectives(), l.start(), threshold(min_bits, n, false),
                                  threshold(max_bits, n, true), fixpoint_options(enum_cap, false));
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out << path << "," << to_string(l.file.objectives.kind()) << "," << n << ","
            << l.file.game.size() << "," << l.file.game.edge_count() << ","
            << (d.payoff ? "true" : "false") << "," << (d.payoff ? d.payoff->str() : "") << ","
            << d.fixpoint.fixpoint_step << "," << std::fixed << std::setprecision(3) << ms << "\n";
      }
      return kExitYes;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace wspe
