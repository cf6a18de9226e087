// Copyright 2026 The tabaug Authors. All Rights Reserved.
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

#include <algorithm>
#include <cstdint>
#include <string_view>

namespace tabaug {

/// Axis an operation works along. Column operations move pixels in x, row
/// operations in y; every axis-generic routine treats Row as the transpose
/// of Column.
enum class Axis { Column, Row };

constexpr Axis other(Axis a) { return a == Axis::Column ? Axis::Row : Axis::Column; }

constexpr std::string_view to_string(Axis a) { return a == Axis::Column ? "column" : "row"; }

/// Half-open pixel interval [lo, hi). Serialized as x1/x2 for columns and
/// y1/y2 for rows.
struct Band {
  int lo = 0;
  int hi = 0;

  constexpr int length() const { return hi - lo; }
  constexpr bool contains(int v) const { return lo <= v && v < hi; }
  friend constexpr bool operator==(const Band&, const Band&) = default;
};

using ColumnBox = Band;
using RowBox = Band;

/// Half-open pixel rectangle [x1, x2) x [y1, y2).
struct Rect {
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;

  constexpr int width() const { return x2 - x1; }
  constexpr int height() const { return y2 - y1; }
  constexpr std::int64_t area() const {
    return empty() ? 0 : std::int64_t{width()} * height();
  }
  constexpr bool empty() const { return x2 <= x1 || y2 <= y1; }

  constexpr int lo(Axis a) const { return a == Axis::Column ? x1 : y1; }
  constexpr int hi(Axis a) const { return a == Axis::Column ? x2 : y2; }
  constexpr void shift(Axis a, int delta) {
    if (a == Axis::Column) {
      x1 += delta;
      x2 += delta;
    } else {
      y1 += delta;
      y2 += delta;
    }
  }
  constexpr Rect transposed() const { return {y1, x1, y2, x2}; }

  friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

constexpr Rect intersect(const Rect& a, const Rect& b) {
  return {std::max(a.x1, b.x1), std::max(a.y1, b.y1), std::min(a.x2, b.x2),
          std::min(a.y2, b.y2)};
}

constexpr std::int64_t intersection_area(const Rect& a, const Rect& b) {
  return intersect(a, b).area();
}

}  // namespace tabaug
