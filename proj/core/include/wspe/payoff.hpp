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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "wspe/game.hpp"

namespace wspe {

/// Boolean gain vector, one bit per player. Player 1 is the most significant
/// bit, so numeric order on bits() is lexicographic order on the bitstring
/// ("01" < "10").
class Payoff {
 public:
  static constexpr int kMaxPlayers = 63;

  Payoff() = default;
  explicit Payoff(int players, std::uint64_t bits = 0);

  /// Parses "01"-style bitstrings, player 1 first.
  static Payoff parse(std::string_view bits);
  static Payoff from_bits(std::initializer_list<int> bits);

  int players() const noexcept { return players_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool get(Player i) const noexcept { return (bits_ >> shift(i)) & 1U; }
  void set(Player i, bool value) noexcept {
    if (value) {
      bits_ |= std::uint64_t{1} << shift(i);
    } else {
      bits_ &= ~(std::uint64_t{1} << shift(i));
    }
  }

  /// Componentwise order.
  bool leq(const Payoff& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  std::string str() const;

  friend bool operator==(const Payoff&, const Payoff&) = default;
  friend auto operator<=>(const Payoff& a, const Payoff& b) {
    if (auto c = a.players_ <=> b.players_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int shift(Player i) const noexcept { return players_ - i; }

  std::uint64_t bits_ = 0;
  int players_ = 0;
};

/// Small sorted set of payoffs.
class PayoffSet {
 public:
  PayoffSet() = default;
  PayoffSet(std::initializer_list<Payoff> ps);

  bool contains(const Payoff& p) const;
  bool insert(const Payoff& p);
  bool erase(const Payoff& p);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  const Payoff& front() const { return items_.front(); }

  /// "{00,01,10}"
  std::string str() const;

  friend bool operator==(const PayoffSet&, const PayoffSet&) = default;

 private:
  std::vector<Payoff> items_;
};

}  // namespace wspe
