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

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tabaug/image.hpp"
#include "tabaug/table.hpp"

namespace tabaug {

inline constexpr int kDefaultInkThreshold = 192;

/// 1 where the luma is below `threshold` (ink), else 0. Single channel.
inline Image binarize(const Image& img, int threshold = kDefaultInkThreshold) {
  Image gray = to_gray(img);
  for (auto& v : gray.pixels) v = v < threshold ? 1 : 0;
  return gray;
}

/// Per-line count of ink pixels along an axis: entry x of the Column
/// profile counts ink in pixel column x.
struct ForegroundProfile {
  Axis axis = Axis::Column;
  std::vector<int> counts;
};

inline ForegroundProfile foreground_profile(const Image& binary, Axis axis) {
  ForegroundProfile p{axis, std::vector<int>(static_cast<std::size_t>(binary.extent(axis)), 0)};
  for (int y = 0; y < binary.height; ++y) {
    for (int x = 0; x < binary.width; ++x) {
      if (binary.at(x, y) != 0) ++p.counts[axis == Axis::Column ? x : y];
    }
  }
  return p;
}

/// Separator ground truth along one axis: one band per internal boundary,
/// plus the rasterized mask (0/1, full extent of the other axis).
struct SeparatorMask {
  Axis axis = Axis::Column;
  std::vector<Band> bands;
  Image raster;
};

/// Bands around each internal boundary of one axis, from an ink profile.
///
/// The search window for boundary j runs from the midpoint with the
/// previous boundary (or the table edge) to the midpoint with the next one
/// (or the far edge). Within it the band reaches from just past the nearest
/// ink before the boundary to the nearest ink at or after it; a side with
/// no ink extends to the window edge. When ink sits on both pixels
/// adjacent to the boundary the band collapses to the single line at the
/// boundary.
inline std::vector<Band> separator_bands(const std::vector<Band>& segments, const std::vector<int>& profile) {
  const int extent = static_cast<int>(profile.size());
  std::vector<Band> out;
  if (segments.size() < 2) return out;
  std::vector<int> boundaries;
  for (std::size_t j = 0; j + 1 < segments.size(); ++j) boundaries.push_back(segments[j].hi);

  for (std::size_t j = 0; j < boundaries.size(); ++j) {
    const int b = boundaries[j];
    const int windowLo = j == 0 ? 0 : (boundaries[j - 1] + b) / 2;
    const int windowHi = j + 1 == boundaries.size() ? extent : (b + boundaries[j + 1]) / 2;
    int left = windowLo;
    for (int x = b - 1; x >= windowLo; --x) {
      if (profile[x] > 0) {
        left = x + 1;
        break;
      }
    }
    int right = windowHi;
    for (int x = b; x < windowHi; ++x) {
      if (profile[x] > 0) {
        right = x;
        break;
      }
    }
    if (right <= left) {
      left = b;
      right = b + 1;
    }
    out.push_back({left, right});
  }
  return out;
}

namespace detail {

inline SeparatorMask rasterize_bands(Axis axis, std::vector<Band> bands, int width, int height) {
  SeparatorMask m{axis, std::move(bands), Image(width, height, 1, 0)};
  for (const Band& band : m.bands) {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const int v = axis == Axis::Column ? x : y;
        if (band.contains(v)) m.raster.at(x, y) = 1;
      }
    }
  }
  return m;
}

}  // namespace detail

struct SeparatorMasks {
  SeparatorMask rows;
  SeparatorMask columns;
};

/// Expands every annotated separator to the nearest ink on either side,
/// horizontally for columns and vertically for rows.
inline SeparatorMasks expand_separators(const TableDocument& doc, const Image& binary) {
  if (binary.width != doc.width || binary.height != doc.height || binary.channels != 1) {
    throw std::invalid_argument("expand_separators: binary raster does not match table dimensions");
  }
  auto colBands = separator_bands(doc.columns, foreground_profile(binary, Axis::Column).counts);
  auto rowBands = separator_bands(doc.rows, foreground_profile(binary, Axis::Row).counts);
  return {detail::rasterize_bands(Axis::Row, std::move(rowBands), doc.width, doc.height),
          detail::rasterize_bands(Axis::Column, std::move(colBands), doc.width, doc.height)};
}

/// 0/1 mask to 0/255 for writing.
inline Image mask_to_8bit(const Image& mask) {
  Image out = mask;
  for (auto& v : out.pixels) v = v ? 255 : 0;
  return out;
}

}  // namespace tabaug
