// Copyright 2026 The qiit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qiit {

/// A set of network sites encoded as a bitmask. Site indices are always
/// iterated in ascending order, which fixes the tensor-leg order of every
/// operator supported on the subset.
class SiteSubset {
 public:
  constexpr SiteSubset() = default;
  constexpr explicit SiteSubset(std::uint32_t bits) : bits_(bits) {}

  static constexpr SiteSubset full(int n_sites) {
    return SiteSubset(n_sites >= 32 ? ~0u : ((1u << n_sites) - 1u));
  }
  static constexpr SiteSubset single(int site) { return SiteSubset(1u << site); }
  static SiteSubset of(std::initializer_list<int> sites) {
    std::uint32_t b = 0;
    for (int s : sites) b |= 1u << s;
    return SiteSubset(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  constexpr bool contains(int site) const { return (bits_ >> site) & 1u; }

  constexpr SiteSubset operator|(SiteSubset o) const { return SiteSubset(bits_ | o.bits_); }
  constexpr SiteSubset operator&(SiteSubset o) const { return SiteSubset(bits_ & o.bits_); }
  constexpr SiteSubset minus(SiteSubset o) const { return SiteSubset(bits_ & ~o.bits_); }
  constexpr bool is_subset_of(SiteSubset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(SiteSubset o) const { return (bits_ & o.bits_) != 0; }
  constexpr SiteSubset complement_in(SiteSubset universe) const {
    return SiteSubset(universe.bits_ & ~bits_);
  }

  int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<int> sites() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Rank of this subset among submasks of `super`: the bits of this set are
  /// compacted onto the positions of `super` (a portable parallel bit
  /// extract). Used to index dense tables over submasks.
  std::uint32_t rank_in(SiteSubset super) const {
    if (!is_subset_of(super)) throw std::invalid_argument("rank_in: not a submask");
    std::uint32_t out = 0;
    int pos = 0;
    for (std::uint32_t b = super.bits_; b != 0; b &= b - 1, ++pos) {
      if (bits_ & (b & -b)) out |= 1u << pos;
    }
    return out;
  }

  /// Inverse of rank_in: expand `rank` bits onto the positions of `super`.
  static SiteSubset from_rank(std::uint32_t rank, SiteSubset super) {
    std::uint32_t out = 0;
    int pos = 0;
    for (std::uint32_t b = super.bits_; b != 0; b &= b - 1, ++pos) {
      if ((rank >> pos) & 1u) out |= b & -b;
    }
    return SiteSubset(out);
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int site : sites()) {
      if (!first) s += ",";
      s += std::to_string(site);
      first = false;
    }
    return s + "}";
  }

  auto operator<=>(const SiteSubset&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace qiit
