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
#include "wspe/lasso.hpp"

#include <algorithm>

namespace wspe {

VertexId Lasso::at(std::size_t pos) const {
  if (pos < prefix.size()) return prefix[pos];
  return cycle[(pos - prefix.size()) % cycle.size()];
}

std::vector<VertexId> Lasso::word() const {
  std::vector<VertexId> w = prefix;
  w.insert(w.end(), cycle.begin(), cycle.end());
  return w;
}

bool Lasso::valid_in(const Game& game) const {
  if (cycle.empty()) return false;
  auto w = word();
  for (VertexId v : w) {
    if (v >= game.size()) return false;
  }
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (!game.has_edge(w[k], w[k + 1])) return false;
  }
  return game.has_edge(cycle.back(), cycle.front());
}

Lasso Lasso::normalized() const {
  Lasso out = *this;
  // Primitive root of the cycle.
  const std::size_t n = out.cycle.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (std::size_t k = period; k < n && ok; ++k) ok = out.cycle[k] == out.cycle[k - period];
    if (ok) {
      out.cycle.resize(period);
      break;
    }
  }
  // Absorb the prefix tail into the cycle while it matches.
  while (!out.prefix.empty() && out.prefix.back() == out.cycle.back()) {
    std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
    out.prefix.pop_back();
  }
  return out;
}

std::string Lasso::str(const Game& game) const {
  std::string s;
  for (VertexId v : prefix) {
    s += game.name(v);
    s += ' ';
  }
  s += '(';
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k) s += ' ';
    s += game.name(cycle[k]);
  }
  return s + ")^w";
}

VertexSet occ(const Lasso& lasso, std::size_t vertex_count) {
  VertexSet s(vertex_count);
  for (VertexId v : lasso.prefix) s.set(v);
  for (VertexId v : lasso.cycle) s.set(v);
  return s;
}

VertexSet inf(const Lasso& lasso, std::size_t vertex_count) {
  VertexSet s(vertex_count);
  for (VertexId v : lasso.cycle) s.set(v);
  return s;
}

}  // namespace wspe
