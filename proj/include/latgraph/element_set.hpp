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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace latgraph {

using Index = std::size_t;

/// A subset of the carrier {0, ..., universe-1}, stored as packed 64-bit words.
///
/// Sets over the same carrier compare as unsigned integers in which element i
/// has weight 2^i. Every enumeration in the library that promises a
/// deterministic "bitmask order" uses this comparison.
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Index;
    using difference_type = std::ptrdiff_t;
    using pointer = const Index*;
    using reference = Index;

    const_iterator() = default;
    const_iterator(const ElementSet* set, Index pos) : set_(set), pos_(pos) {}

    Index operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const ElementSet* set_ = nullptr;
    Index pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe, std::initializer_list<Index> members);
  static ElementSet of(std::size_t universe, std::span<const Index> members);
  /// Bit i of mask becomes element i. Requires universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Index i) const noexcept {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void insert(Index i);
  void erase(Index i);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects(const ElementSet& other) const noexcept;
  ElementSet complement() const;

  /// Smallest member at or after `from`; universe() when there is none.
  Index next(Index from) const noexcept;
  /// Largest member, or universe() for the empty set.
  Index last() const noexcept;
  Index front() const noexcept { return next(0); }

  /// Requires universe <= 64.
  std::uint64_t to_mask() const;
  std::vector<Index> indices() const;

  const_iterator begin() const { return {this, next(0)}; }
  const_iterator end() const { return {this, universe_}; }

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator-=(const ElementSet& other) noexcept;

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b) noexcept;

  /// |a ∩ b| without materializing the intersection.
  static std::size_t intersection_count(const ElementSet& a,
                                        const ElementSet& b) noexcept;
  /// Smallest (resp. largest) member of a ∩ b, or the universe size.
  static Index first_common(const ElementSet& a, const ElementSet& b) noexcept;
  static Index last_common(const ElementSet& a, const ElementSet& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace latgraph

template <>
struct std::hash<latgraph::ElementSet> {
  std::size_t operator()(const latgraph::ElementSet& s) const noexcept {
    return s.hash();
  }
};
