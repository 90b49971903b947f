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

#include <doctest.h>

#include <unordered_set>

#include "fixtures.hpp"

using latgraph::ElementSet;
using latgraph::ErrorCode;

TEST_CASE("element set membership and counting") {
  ElementSet s(10);
  CHECK(s.empty());
  s.insert(3);
  s.insert(7);
  s.insert(3);
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK_FALSE(s.contains(99));
  s.erase(3);
  CHECK(s.indices() == std::vector<latgraph::Index>{7});
  CHECK(fixtures::code_of([&] { s.insert(10); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("element set iteration follows index order across words") {
  const auto s = ElementSet::of(200, {150, 0, 64, 63, 199});
  std::vector<latgraph::Index> seen(s.begin(), s.end());
  CHECK(seen == std::vector<latgraph::Index>{0, 63, 64, 150, 199});
  CHECK(s.front() == 0);
  CHECK(s.last() == 199);
  CHECK(s.next(65) == 150);
  CHECK(s.next(200) == 200);
}

TEST_CASE("element set algebra") {
  const auto a = ElementSet::of(70, {1, 2, 66});
  const auto b = ElementSet::of(70, {2, 3, 66, 69});
  CHECK((a | b) == ElementSet::of(70, {1, 2, 3, 66, 69}));
  CHECK((a & b) == ElementSet::of(70, {2, 66}));
  CHECK((a - b) == ElementSet::of(70, {1}));
  CHECK(a.intersects(b));
  CHECK((a & b).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.complement().count() == 67);
  CHECK_FALSE(a.complement().contains(70));
  CHECK(ElementSet::full(70).count() == 70);
  CHECK(ElementSet::intersection_count(a, b) == 2);
  CHECK(ElementSet::first_common(a, b) == 2);
  CHECK(ElementSet::last_common(a, b) == 66);
}

TEST_CASE("element sets order by bitmask") {
  const auto lo = ElementSet::from_mask(3, 0b011);
  const auto hi = ElementSet::from_mask(3, 0b100);
  CHECK(lo < hi);
  CHECK(ElementSet(3) < lo);
  CHECK(lo.to_mask() == 0b011);
  CHECK(ElementSet::of(100, {99}) > ElementSet::of(100, {0, 1, 2, 98}));
}

TEST_CASE("equal element sets hash equally") {
  std::unordered_set<ElementSet> seen;
  seen.insert(ElementSet::of(80, {1, 79}));
  CHECK(seen.contains(ElementSet::of(80, {79, 1})));
  CHECK_FALSE(seen.contains(ElementSet::of(80, {1})));
}
