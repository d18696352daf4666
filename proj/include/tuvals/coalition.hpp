// Copyright 2026 The tuvals Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUVALS_COALITION_HPP_
#define TUVALS_COALITION_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tuvals {

// A coalition over the player set {1,...,n}, stored as a bit pattern with
// player i at bit i-1. Player indices are 1-based everywhere in the public
// surface; bit positions are the only 0-based artifact.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 24;

  constexpr Coalition() = default;

  static constexpr Coalition from_mask(std::uint32_t mask) {
    return Coalition(mask);
  }
  static Coalition of(std::initializer_list<int> players);
  static Coalition of(const std::vector<int>& players);
  static constexpr Coalition grand(int n) {
    return Coalition((std::uint32_t{1} << n) - 1u);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int player) const {
    return (mask_ >> (player - 1)) & 1u;
  }
  constexpr Coalition with(int player) const {
    return Coalition(mask_ | bit(player));
  }
  constexpr Coalition without(int player) const {
    return Coalition(mask_ & ~bit(player));
  }
  constexpr Coalition unite(Coalition other) const {
    return Coalition(mask_ | other.mask_);
  }
  constexpr bool subset_of(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool disjoint_from(Coalition other) const {
    return (mask_ & other.mask_) == 0;
  }

  // Smallest player index in the coalition; 0 when empty.
  constexpr int min_player() const {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }

  std::vector<int> members() const;

  // "{1,3}" with ascending player indices; "{}" for the empty coalition.
  std::string to_string() const;

  friend constexpr bool operator==(Coalition a, Coalition b) = default;

 private:
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}
  static constexpr std::uint32_t bit(int player) {
    return std::uint32_t{1} << (player - 1);
  }

  std::uint32_t mask_ = 0;
};

}  // namespace tuvals

#endif  // TUVALS_COALITION_HPP_
