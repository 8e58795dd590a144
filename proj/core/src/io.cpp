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
#include "wspe/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "wspe/error.hpp"

namespace wspe {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::SchemaError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    // Drop the "[json.exception...] parse error at line L, column C: " lead.
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    if (msg.rfind("parse error", 0) == 0) {
      if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    }
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + msg);
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where + ": missing field \"" + key + "\"");
  return *it;
}

void check_format(const json& j) {
  if (!j.is_object()) schema("document must be a JSON object");
  if (auto it = j.find("format"); it != j.end()) {
    if (!it->is_number_integer() || it->get<int>() != kFormatVersion) {
      schema("unsupported format version");
    }
  }
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where + " must be a string");
  return j.get<std::string>();
}

long long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + " must be an integer");
  return j.get<long long>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + " must be an array");
  return j;
}

VertexId vertex_of(const Game& game, const json& j, const std::string& where) {
  const std::string name = as_string(j, where);
  auto v = game.find(name);
  if (!v) schema(where + ": unknown vertex \"" + name + "\"");
  return *v;
}

std::vector<VertexId> vertex_list(const Game& game, const json& j, const std::string& where) {
  std::vector<VertexId> out;
  for (const auto& x : as_array(j, where)) out.push_back(vertex_of(game, x, where));
  return out;
}

VertexSet vertex_set(const Game& game, const json& j, const std::string& where) {
  const auto vs = vertex_list(game, j, where);
  return make_set(game.size(), vs);
}

json set_to_json(const VertexSet& s, const Game& game) {
  json out = json::array();
  for (VertexId v : members(s)) out.push_back(game.name(v));
  return out;
}

json list_to_json(const std::vector<VertexId>& vs, const Game& game) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(game.name(v));
  return out;
}

std::vector<int> coloring(const Game& game, const json& j, const std::string& where) {
  if (!j.is_object()) schema(where + " must map vertices to colors");
  std::vector<int> colors(game.size(), 0);
  for (const auto& [name, c] : j.items()) {
    auto v = game.find(name);
    if (!v) schema(where + ": unknown vertex \"" + name + "\"");
    colors[*v] = static_cast<int>(as_int(c, where));
  }
  return colors;
}

PlayerObjective player_objective(const Game& game, ObjectiveKind kind, const json& j,
                                 const std::string& where) {
  PlayerObjective o;
  switch (kind) {
    case ObjectiveKind::Reachability:
    case ObjectiveKind::Safety:
    case ObjectiveKind::Buchi:
    case ObjectiveKind::CoBuchi: o.target = vertex_set(game, field(j, "F", where), where); break;
    case ObjectiveKind::Parity: o.colors = coloring(game, field(j, "colors", where), where); break;
    case ObjectiveKind::ExplicitMuller:
      for (const auto& f : as_array(field(j, "families", where), where)) {
        o.families.push_back(vertex_set(game, f, where));
      }
      break;
    case ObjectiveKind::Muller:
      o.colors = coloring(game, field(j, "colors", where), where);
      for (const auto& f : as_array(field(j, "families", where), where)) {
        std::set<int> cs;
        for (const auto& c : as_array(f, where)) cs.insert(static_cast<int>(as_int(c, where)));
        o.color_families.emplace_back(cs.begin(), cs.end());
      }
      break;
    case ObjectiveKind::Rabin:
    case ObjectiveKind::Streett:
      for (const auto& pr : as_array(field(j, "pairs", where), where)) {
        o.pairs.push_back(SetPair{vertex_set(game, field(pr, "G", where), where),
                                  vertex_set(game, field(pr, "R", where), where)});
      }
      break;
  }
  return o;
}

json coloring_to_json(const std::vector<int>& colors, const Game& game) {
  json out = json::object();
  for (VertexId v = 0; v < colors.size(); ++v) out[game.name(v)] = colors[v];
  return out;
}

std::vector<VertexId> word_of(const Game& game, const json& j, const std::string& where) {
  return vertex_list(game, j, where);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GameFile parse_game(std::string_view text) {
  const json j = parse_json(text);
  check_format(j);
  const std::string where = "game";

  const long long players = as_int(field(j, "players", where), "players");
  if (players < 1 || players > Payoff::kMaxPlayers) schema("players out of range");

  std::vector<std::string> names;
  for (const auto& x : as_array(field(j, "vertices", where), "vertices")) {
    names.push_back(as_string(x, "vertices"));
  }
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < names.size(); ++v) {
    if (!index.emplace(names[v], v).second) schema("duplicate vertex \"" + names[v] + "\"");
  }
  auto lookup = [&](const json& x, const std::string& ctx) {
    const std::string name = as_string(x, ctx);
    auto it = index.find(name);
    if (it == index.end()) schema(ctx + ": unknown vertex \"" + name + "\"");
    return it->second;
  };

  const json& owner_j = field(j, "owner", where);
  if (!owner_j.is_object()) schema("owner must map vertices to players");
  std::vector<Player> owner(names.size(), 0);
  for (const auto& [name, p] : owner_j.items()) {
    owner[lookup(json(name), "owner")] = static_cast<Player>(as_int(p, "owner"));
  }

  std::vector<Edge> edges;
  for (const auto& e : as_array(field(j, "edges", where), "edges")) {
    if (!e.is_array() || e.size() != 2) schema("edges must be [source, target] pairs");
    edges.emplace_back(lookup(e[0], "edges"), lookup(e[1], "edges"));
  }
  const VertexId initial = lookup(field(j, "initial", where), "initial");

  const ObjectiveKind kind = parse_objective_kind(as_string(field(j, "objective_type", where),
                                                            "objective_type"));
  Game game(static_cast<int>(players), std::move(names), std::move(owner), edges, initial);

  const json& objs = field(j, "objectives", where);
  if (!objs.is_object()) schema("objectives must map players to objective data");
  std::vector<PlayerObjective> per_player;
  for (Player i = 1; i <= players; ++i) {
    const std::string key = std::to_string(i);
    auto it = objs.find(key);
    if (it == objs.end()) schema("objectives: missing player " + key);
    per_player.push_back(player_objective(game, kind, *it, "objectives." + key));
  }
  for (const auto& [key, _] : objs.items()) {
    bool known = false;
    for (Player i = 1; i <= players; ++i) known = known || key == std::to_string(i);
    if (!known) schema("objectives: unknown player \"" + key + "\"");
  }
  ObjectiveSet objectives(kind, std::move(per_player));
  objectives.validate(game);
  return GameFile{std::move(game), std::move(objectives)};
}

GameFile load_game(const std::filesystem::path& path) { return parse_game(read_file(path)); }

json game_to_json(const Game& game, const ObjectiveSet& objectives) {
  json j;
  j["format"] = kFormatVersion;
  j["players"] = game.players();
  j["vertices"] = game.names();
  json owner = json::object();
  for (VertexId v = 0; v < game.size(); ++v) owner[game.name(v)] = game.owner(v);
  j["owner"] = std::move(owner);
  json edges = json::array();
  for (const auto& [u, v] : game.edges()) edges.push_back({game.name(u), game.name(v)});
  j["edges"] = std::move(edges);
  j["initial"] = game.name(game.initial());
  j["objective_type"] = std::string(to_string(objectives.kind()));
  json objs = json::object();
  for (Player i = 1; i <= objectives.players(); ++i) {
    const auto& o = objectives.of(i);
    json d = json::object();
    switch (objectives.kind()) {
      case ObjectiveKind::Reachability:
      case ObjectiveKind::Safety:
      case ObjectiveKind::Buchi:
      case ObjectiveKind::CoBuchi: d["F"] = set_to_json(o.target, game); break;
      case ObjectiveKind::Parity: d["colors"] = coloring_to_json(o.colors, game); break;
      case ObjectiveKind::ExplicitMuller: {
        json fams = json::array();
        for (const auto& f : o.families) fams.push_back(set_to_json(f, game));
        d["families"] = std::move(fams);
        break;
      }
      case ObjectiveKind::Muller:
        d["colors"] = coloring_to_json(o.colors, game);
        d["families"] = o.color_families;
        break;
      case ObjectiveKind::Rabin:
      case ObjectiveKind::Streett: {
        json pairs = json::array();
        for (const auto& pr : o.pairs) {
          pairs.push_back({{"G", set_to_json(pr.g, game)}, {"R", set_to_json(pr.r, game)}});
        }
        d["pairs"] = std::move(pairs);
        break;
      }
    }
    objs[std::to_string(i)] = std::move(d);
  }
  j["objectives"] = std::move(objs);
  return j;
}

SymbolicWitness parse_witness(std::string_view text, const Game& game) {
  const json j = parse_json(text);
  check_format(j);
  SymbolicWitness w;
  for (const auto& e : as_array(field(j, "entries", "witness"), "entries")) {
    IndexEntry key;
    const long long i = as_int(field(e, "i", "entry"), "entry.i");
    if (i < 0 || i > game.players()) schema("entry.i out of range");
    key.player = static_cast<Player>(i);
    key.vertex = vertex_of(game, field(e, "v", "entry"), "entry.v");
    Lasso l;
    l.prefix = word_of(game, field(e, "prefix", "entry"), "entry.prefix");
    l.cycle = word_of(game, field(e, "cycle", "entry"), "entry.cycle");
    if (!w.lassoes.emplace(key, std::move(l)).second) {
      schema("duplicate entry (" + std::to_string(i) + "," + game.name(key.vertex) + ")");
    }
  }
  return w;
}

json lasso_to_json(const Lasso& lasso, const Game& game) {
  return {{"prefix", list_to_json(lasso.prefix, game)}, {"cycle", list_to_json(lasso.cycle, game)}};
}

json witness_to_json(const SymbolicWitness& witness, const Game& game,
                     const ObjectiveSet& objectives) {
  json entries = json::array();
  for (const auto& [key, lasso] : witness.lassoes) {
    json e = lasso_to_json(lasso, game);
    e["i"] = key.player;
    e["v"] = game.name(key.vertex);
    e["payoff"] = payoff_of(lasso, game, objectives).str();
    entries.push_back(std::move(e));
  }
  return {{"format", kFormatVersion}, {"entries", std::move(entries)}};
}

StrategyProfile parse_profile(std::string_view text, const Game& game) {
  const json j = parse_json(text);
  check_format(j);
  // Columns of the tables follow the document's vertex order.
  std::vector<VertexId> column;
  for (const auto& x : as_array(field(j, "vertices", "profile"), "vertices")) {
    column.push_back(vertex_of(game, x, "vertices"));
  }
  {
    std::vector<VertexId> sorted = column;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.size() != game.size()) {
      schema("vertices must list every game vertex exactly once");
    }
  }
  const json& machines = as_array(field(j, "machines", "profile"), "machines");
  if (machines.size() != static_cast<std::size_t>(game.players())) {
    schema("expected one machine per player");
  }
  StrategyProfile profile;
  profile.machines.resize(machines.size());
  std::vector<bool> seen(machines.size(), false);
  for (const auto& mj : machines) {
    const long long player = as_int(field(mj, "player", "machine"), "machine.player");
    if (player < 1 || player > game.players() || seen[player - 1]) {
      schema("machine.player out of range or repeated");
    }
    seen[player - 1] = true;
    const long long states = as_int(field(mj, "states", "machine"), "machine.states");
    const long long initial = as_int(field(mj, "initial", "machine"), "machine.initial");
    if (states < 1 || initial < 0 || initial >= states) schema("machine states out of range");
    MooreMachine m(static_cast<std::size_t>(states), game.size(),
                   static_cast<MemoryState>(initial));
    const json& update = as_array(field(mj, "update", "machine"), "machine.update");
    const json& action = as_array(field(mj, "action", "machine"), "machine.action");
    if (update.size() != static_cast<std::size_t>(states) ||
        action.size() != static_cast<std::size_t>(states)) {
      schema("machine tables need one row per state");
    }
    for (MemoryState s = 0; s < states; ++s) {
      const json& urow = as_array(update[s], "machine.update");
      const json& arow = as_array(action[s], "machine.action");
      if (urow.size() != column.size() || arow.size() != column.size()) {
        schema("machine rows need one column per vertex");
      }
      for (std::size_t c = 0; c < column.size(); ++c) {
        const long long next = as_int(urow[c], "machine.update");
        if (next < 0 || next >= states) schema("machine.update: state out of range");
        m.set_update(s, column[c], static_cast<MemoryState>(next));
        if (arow[c].is_null()) continue;
        const VertexId to = vertex_of(game, arow[c], "machine.action");
        if (!game.has_edge(column[c], to)) {
          schema("machine.action: " + game.name(column[c]) + " -> " + game.name(to) +
                 " is not an edge");
        }
        m.set_action(s, column[c], to);
      }
    }
    if (auto it = mj.find("labels"); it != mj.end()) {
      for (const auto& l : as_array(*it, "machine.labels")) {
        m.labels.push_back(as_string(l, "machine.labels"));
      }
      if (m.labels.size() != static_cast<std::size_t>(states)) {
        schema("machine.labels needs one label per state");
      }
    }
    profile.machines[player - 1] = std::move(m);
  }
  return profile;
}

json profile_to_json(const StrategyProfile& profile, const Game& game) {
  json machines = json::array();
  for (std::size_t k = 0; k < profile.machines.size(); ++k) {
    const auto& m = profile.machines[k];
    json update = json::array();
    json action = json::array();
    for (MemoryState s = 0; s < m.state_count(); ++s) {
      json urow = json::array();
      json arow = json::array();
      for (VertexId v = 0; v < game.size(); ++v) {
        urow.push_back(m.update(s, v));
        const VertexId a = m.action(s, v);
        arow.push_back(a == kNoVertex ? json(nullptr) : json(game.name(a)));
      }
      update.push_back(std::move(urow));
      action.push_back(std::move(arow));
    }
    json mj = {{"player", k + 1},
               {"states", m.state_count()},
               {"initial", m.initial()},
               {"update", std::move(update)},
               {"action", std::move(action)}};
    if (!m.labels.empty()) mj["labels"] = m.labels;
    machines.push_back(std::move(mj));
  }
  return {{"format", kFormatVersion}, {"vertices", game.names()}, {"machines", std::move(machines)}};
}

json counterexample_to_json(const Counterexample& cex, const Game& game) {
  return {{"vertex", game.name(cex.configuration.vertex)},
          {"states", cex.configuration.states},
          {"player", cex.player},
          {"prescribed", game.name(cex.prescribed)},
          {"deviation", game.name(cex.deviation)},
          {"gain", cex.gain ? 1 : 0},
          {"deviation_gain", cex.deviation_gain ? 1 : 0},
          {"outcome", lasso_to_json(cex.outcome, game)},
          {"deviation_outcome", lasso_to_json(cex.deviation_outcome, game)}};
}

json violation_to_json(const GoodnessViolation& violation, const Game& game) {
  auto entry = [&](const IndexEntry& e) {
    return json{{"i", e.player}, {"v", game.name(e.vertex)}};
  };
  return {{"source", entry(violation.source)},
          {"at", game.name(violation.at)},
          {"deviation", entry(violation.deviation)},
          {"source_gain", violation.source_gain ? 1 : 0},
          {"deviation_gain", violation.deviation_gain ? 1 : 0}};
}

json labels_to_json(const LabelTable& table, const Game& game) {
  json out = json::object();
  for (VertexId v = 0; v < game.size(); ++v) {
    if (!table.arena.test(v)) continue;
    json ps = json::array();
    for (const auto& p : table.at(v)) ps.push_back(p.str());
    out[game.name(v)] = std::move(ps);
  }
  return out;
}

json fixpoint_to_json(const FixpointResult& result, const Game& game) {
  json steps = json::array();
  for (const auto& s : result.trace) {
    json sj = {{"k", s.k},
               {"operation", s.kind == StepKind::Remove ? "remove" : "adjust"},
               {"payoff", s.payoff ? json(s.payoff->str()) : json(nullptr)},
               {"vertices", list_to_json(s.vertices, game)}};
    if (s.successor) sj["successor"] = game.name(*s.successor);
    if (s.empty_label) sj["empty_label"] = true;
    steps.push_back(std::move(sj));
  }
  json rows = json::array();
  for (std::size_t k = 0; k < result.rows.size(); ++k) {
    json labels = json::object();
    for (VertexId v = 0; v < game.size(); ++v) {
      if (!result.table.arena.test(v)) continue;
      json ps = json::array();
      for (const auto& p : result.rows[k][v]) ps.push_back(p.str());
      labels[game.name(v)] = std::move(ps);
    }
    rows.push_back({{"k", k}, {"labels", std::move(labels)}});
  }
  return {{"format", kFormatVersion},
          {"fixpoint_step", result.fixpoint_step},
          {"rounds", result.rounds},
          {"steps", std::move(steps)},
          {"rows", std::move(rows)},
          {"labels", labels_to_json(result.table, game)}};
}

std::string game_to_dot(const Game& game, const ObjectiveSet& objectives,
                        const SymbolicWitness* witness) {
  static constexpr const char* kShapes[] = {"circle", "box", "diamond", "triangle",
                                            "hexagon", "pentagon", "octagon"};
  static constexpr const char* kColors[] = {"red", "blue", "darkgreen", "orange",
                                            "purple", "brown", "magenta", "cyan"};
  // Labels use DOT's own "\n" escape, so only quotes are escaped here.
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "digraph game {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (VertexId v = 0; v < game.size(); ++v) {
    const Player p = game.owner(v);
    std::string label = game.name(v);
    if (objectives.kind() == ObjectiveKind::Parity) {
      label += "\\n";
      for (Player i = 1; i <= objectives.players(); ++i) {
        label += (i > 1 ? "," : "") + std::to_string(objectives.of(i).colors[v]);
      }
    } else if (objectives.kind() != ObjectiveKind::Muller) {
      std::string marks;
      for (Player i = 1; i <= objectives.players(); ++i) {
        const auto& t = objectives.of(i).target;
        if (t.size() == game.size() && t.test(v)) {
          marks += (marks.empty() ? "" : ",") + std::to_string(i);
        }
      }
      if (!marks.empty()) label += "\\nF" + marks;
    }
    out << "  " << quote(game.name(v)) << " [shape=" << kShapes[(p - 1) % 7]
        << ", label=" << quote(label) << "];\n";
  }
  out << "  __start -> " << quote(game.name(game.initial())) << ";\n";
  for (const auto& [u, v] : game.edges()) {
    out << "  " << quote(game.name(u)) << " -> " << quote(game.name(v)) << ";\n";
  }
  if (witness != nullptr) {
    std::size_t k = 0;
    for (const auto& [key, lasso] : witness->lassoes) {
      const char* color = kColors[k++ % 8];
      const std::string tag = "(" + std::to_string(key.player) + "," + game.name(key.vertex) + ")";
      auto word = lasso.word();
      word.push_back(lasso.cycle.front());
      std::set<Edge> drawn;
      for (std::size_t n = 0; n + 1 < word.size(); ++n) {
        if (!drawn.emplace(word[n], word[n + 1]).second) continue;
        out << "  " << quote(game.name(word[n])) << " -> " << quote(game.name(word[n + 1]))
            << " [color=" << color << ", style=dashed, label=" << quote(tag) << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace wspe
