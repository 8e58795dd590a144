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

#include <cstdint>
#include <optional>
#include <vector>

#include "wspe/game.hpp"
#include "wspe/objectives.hpp"
#include "wspe/path_oracle.hpp"
#include "wspe/payoff.hpp"

namespace wspe {

/// Payoff labels per vertex. Only vertices of `arena` (the vertices
/// reachable from the initial vertex) carry labels; the rest stay empty.
struct LabelTable {
  VertexSet arena;
  std::vector<PayoffSet> labels;
  std::size_t step = 0;

  const PayoffSet& at(VertexId v) const { return labels.at(v); }
  /// Arena vertices whose label contains p.
  VertexSet holders(const Payoff& p) const;
  /// True iff every arena vertex has a nonempty label.
  bool all_nonempty() const;

  friend bool operator==(const LabelTable& a, const LabelTable& b) {
    return a.arena == b.arena && a.labels == b.labels;
  }
};

/// A payoff p at v that Remove may delete, justified by successor `successor`.
struct RemoveCandidate {
  VertexId vertex;
  Payoff payoff;
  VertexId successor;
  friend bool operator==(const RemoveCandidate&, const RemoveCandidate&) = default;
};

enum class StepKind { Remove, Adjust };

struct StepRecord {
  std::size_t k = 0;
  StepKind kind = StepKind::Remove;
  /// Removed payoff (Remove) or adjusted payoff (Adjust); empty for a no-op Remove.
  std::optional<Payoff> payoff;
  /// Remove: the vertex. Adjust: every vertex that lost the payoff.
  std::vector<VertexId> vertices;
  std::optional<VertexId> successor;
  /// Adjust only: vertices labeled by the payoff before the step.
  VertexSet adjust_allowed;
  /// Some arena label was empty after this step.
  bool empty_label = false;
};

struct FixpointOptions {
  OracleOptions oracle;
  /// Keep a snapshot of every labeling P_0, P_1, ... in the result.
  bool record_rows = false;
  /// When set, Remove picks uniformly among all admissible candidates with
  /// this seed instead of the canonical order.
  std::optional<std::uint64_t> random_order_seed;
};

struct FixpointResult {
  LabelTable table;
  /// Number of effective Remove-Adjust rounds.
  std::size_t rounds = 0;
  /// Step index k* of the stable labeling (2 * rounds).
  std::size_t fixpoint_step = 0;
  std::vector<StepRecord> trace;
  /// rows[k] = P_k when record_rows was set.
  std::vector<std::vector<PayoffSet>> rows;
};

/// P_0: every payoff of some play from each arena vertex.
LabelTable init_labels(const Game& game, const ObjectiveSet& objectives, VertexId v0,
                       PathOracle& oracle);

/// All admissible Remove candidates in canonical order (vertex, payoff,
/// successor). Throws EmptyLabelEncountered when a candidate would rest on
/// an empty successor label.
std::vector<RemoveCandidate> remove_candidates(const LabelTable& table, const Game& game);

/// One Remove operation with the canonical tie-break. Returns the removed
/// (vertex, payoff) or nullopt when nothing can be removed.
std::optional<RemoveCandidate> remove_step(LabelTable& table, const Game& game);

/// One Adjust operation after `removed` was deleted somewhere. Returns the
/// vertices that lost `removed`, in ascending order.
std::vector<VertexId> adjust_step(LabelTable& table, const Game& game, PathOracle& oracle,
                                  const Payoff& removed);

FixpointResult fixpoint(const Game& game, const ObjectiveSet& objectives, VertexId v0,
                        const FixpointOptions& options = {});

struct Decision {
  std::optional<Payoff> payoff;
  FixpointResult fixpoint;
};

/// Constrained existence: the lexicographically smallest p in the fixpoint
/// label of v0 with x <= p <= y, provided no reachable label is empty.
Decision decide(const Game& game, const ObjectiveSet& objectives, VertexId v0, const Payoff& x,
                const Payoff& y, const FixpointOptions& options = {});

std::optional<Payoff> decide_constraint(const Game& game, const ObjectiveSet& objectives,
                                        VertexId v0, const Payoff& x, const Payoff& y,
                                        const FixpointOptions& options = {});

}  // namespace wspe
