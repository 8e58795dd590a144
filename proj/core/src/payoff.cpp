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
#include "wspe/payoff.hpp"

#include <algorithm>

#include "wspe/error.hpp"

namespace wspe {

Payoff::Payoff(int players, std::uint64_t bits) : bits_(bits), players_(players) {
  if (players < 1 || players > kMaxPlayers) {
    throw Error(Errc::InvalidParams, "payoff width must be in 1.." + std::to_string(kMaxPlayers));
  }
  if (players < 64 && (bits >> players) != 0) {
    throw Error(Errc::InvalidParams, "payoff bits exceed the player count");
  }
}

Payoff Payoff::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw Error(Errc::ParseError, "payoff bitstring has invalid length");
  }
  Payoff p(static_cast<int>(bits.size()));
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') {
      throw Error(Errc::ParseError, "payoff bitstring must contain only 0 and 1: '" +
                                        std::string(bits) + "'");
    }
    p.set(static_cast<Player>(k + 1), bits[k] == '1');
  }
  return p;
}

Payoff Payoff::from_bits(std::initializer_list<int> bits) {
  Payoff p(static_cast<int>(bits.size()));
  Player i = 1;
  for (int b : bits) p.set(i++, b != 0);
  return p;
}

std::string Payoff::str() const {
  std::string s(static_cast<std::size_t>(players_), '0');
  for (Player i = 1; i <= players_; ++i) {
    if (get(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

PayoffSet::PayoffSet(std::initializer_list<Payoff> ps) {
  for (const auto& p : ps) insert(p);
}

bool PayoffSet::contains(const Payoff& p) const {
  return std::binary_search(items_.begin(), items_.end(), p);
}

bool PayoffSet::insert(const Payoff& p) {
  auto it = std::lower_bound(items_.begin(), items_.end(), p);
  if (it != items_.end() && *it == p) return false;
  items_.insert(it, p);
  return true;
}

bool PayoffSet::erase(const Payoff& p) {
  auto it = std::lower_bound(items_.begin(), items_.end(), p);
  if (it == items_.end() || *it != p) return false;
  items_.erase(it);
  return true;
}

std::string PayoffSet::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (k) s += ",";
    s += items_[k].str();
  }
  return s + "}";
}

}  // namespace wspe
