//  Copyright 2026 The latgraph Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "latgraph/element_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "latgraph/error.hpp"

namespace latgraph {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

ElementSet ElementSet::of(std::size_t universe,
                          std::initializer_list<Index> members) {
  return of(universe, std::span<const Index>(members.begin(), members.size()));
}

ElementSet ElementSet::of(std::size_t universe, std::span<const Index> members) {
  ElementSet s(universe);
  for (Index i : members) s.insert(i);
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) {
    throw Error(ErrorCode::InvalidArgument, "from_mask needs a carrier of at most 64");
  }
  if (universe < 64 && (mask >> universe) != 0) {
    throw Error(ErrorCode::InvalidArgument, "mask has bits outside the carrier");
  }
  ElementSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void ElementSet::insert(Index i) {
  if (i >= universe_) {
    throw Error(ErrorCode::InvalidArgument,
                "index " + std::to_string(i) + " outside carrier of size " +
                    std::to_string(universe_));
  }
  words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void ElementSet::erase(Index i) {
  if (i < universe_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & other.words_[k]) != 0) return true;
  }
  return false;
}

ElementSet ElementSet::complement() const { return full(universe_) - *this; }

Index ElementSet::next(Index from) const noexcept {
  if (from >= universe_) return universe_;
  std::size_t k = from >> 6;
  std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return (k << 6) + static_cast<Index>(std::countr_zero(w));
    if (++k == words_.size()) return universe_;
    w = words_[k];
  }
}

Index ElementSet::last() const noexcept {
  for (std::size_t k = words_.size(); k-- > 0;) {
    if (words_[k] != 0) {
      return (k << 6) + 63 - static_cast<Index>(std::countl_zero(words_[k]));
    }
  }
  return universe_;
}

std::uint64_t ElementSet::to_mask() const {
  if (universe_ > 64) {
    throw Error(ErrorCode::InvalidArgument, "to_mask needs a carrier of at most 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::vector<Index> ElementSet::indices() const {
  std::vector<Index> out;
  out.reserve(count());
  for (Index i : *this) out.push_back(i);
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t k = a.words_.size(); k-- > 0;) {
    if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t ElementSet::intersection_count(const ElementSet& a,
                                           const ElementSet& b) noexcept {
  assert(a.universe_ == b.universe_);
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
  }
  return c;
}

Index ElementSet::first_common(const ElementSet& a, const ElementSet& b) noexcept {
  assert(a.universe_ == b.universe_);
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    const std::uint64_t w = a.words_[k] & b.words_[k];
    if (w != 0) return (k << 6) + static_cast<Index>(std::countr_zero(w));
  }
  return a.universe_;
}

Index ElementSet::last_common(const ElementSet& a, const ElementSet& b) noexcept {
  assert(a.universe_ == b.universe_);
  for (std::size_t k = a.words_.size(); k-- > 0;) {
    const std::uint64_t w = a.words_[k] & b.words_[k];
    if (w != 0) return (k << 6) + 63 - static_cast<Index>(std::countl_zero(w));
  }
  return a.universe_;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace latgraph
