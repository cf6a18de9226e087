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
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tabaug/image.hpp"
#include "tabaug/rng.hpp"
#include "tabaug/table.hpp"

namespace tabaug {

/// Parameters of the image-transform baseline (random crop + color jitter).
struct StandardAugmentParams {
  double cropFraction = 1.0;
  double brightnessJitter = 0.0;
  double hueJitter = 0.0;
  double saturationJitter = 0.0;
};

namespace detail {

inline std::uint8_t clamp_round(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

inline double draw_factor(Rng& rng, double jitter) {
  const double u = rng.uniform_real();
  return 1.0 + jitter * (2.0 * u - 1.0);
}

// Hue rotation about the gray axis, by `turns` of a full turn. The matrix
// is the standard one used for RGB hue rotation.
inline void rotate_hue(Image& img, double turns) {
  const double a = turns * 2.0 * 3.14159265358979323846;
  const double c = std::cos(a);
  const double s = std::sin(a);
  const double k = 1.0 / 3.0;
  const double q = std::sqrt(k);
  const double m0 = c + (1 - c) * k;
  const double m1 = k * (1 - c) - q * s;
  const double m2 = k * (1 - c) + q * s;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double r = img.at(x, y, 0), g = img.at(x, y, 1), b = img.at(x, y, 2);
      img.at(x, y, 0) = clamp_round(m0 * r + m1 * g + m2 * b);
      img.at(x, y, 1) = clamp_round(m2 * r + m0 * g + m1 * b);
      img.at(x, y, 2) = clamp_round(m1 * r + m2 * g + m0 * b);
    }
  }
}

}  // namespace detail

/// Random crop of cropFraction * (W, H) at a uniform offset, followed by
/// brightness, saturation and hue jitter. Each factor is drawn uniformly
/// from [1 - j, 1 + j], once per image. Saturation and hue are no-ops on
/// single-channel input. Annotations are not touched; pass `window` to
/// receive the crop rectangle and apply it with crop_document.
///
/// Draw order is fixed: x offset, y offset, brightness, saturation, hue.
inline Image standard_augment(const Image& in, const StandardAugmentParams& p, Rng& rng, Rect* window = nullptr) {
  if (in.empty()) throw std::invalid_argument("standard_augment: empty image");
  if (!(p.cropFraction > 0.0 && p.cropFraction <= 1.0)) {
    throw std::invalid_argument("standard_augment: cropFraction must be in (0, 1]");
  }
  const int cw = std::clamp(static_cast<int>(std::lround(p.cropFraction * in.width)), 1, in.width);
  const int ch = std::clamp(static_cast<int>(std::lround(p.cropFraction * in.height)), 1, in.height);
  const int ox = static_cast<int>(rng.uniform_int(0, in.width - cw));
  const int oy = static_cast<int>(rng.uniform_int(0, in.height - ch));
  Image out = crop(in, ox, oy, cw, ch);
  if (window) *window = {ox, oy, ox + cw, oy + ch};

  const double brightness = detail::draw_factor(rng, p.brightnessJitter);
  const double saturation = detail::draw_factor(rng, p.saturationJitter);
  const double hue = detail::draw_factor(rng, p.hueJitter);

  if (brightness != 1.0) {
    for (auto& v : out.pixels) v = detail::clamp_round(v * brightness);
  }
  if (out.channels == 3 && saturation != 1.0) {
    for (int y = 0; y < out.height; ++y) {
      for (int x = 0; x < out.width; ++x) {
        const double gray = 0.299 * out.at(x, y, 0) + 0.587 * out.at(x, y, 1) + 0.114 * out.at(x, y, 2);
        for (int c = 0; c < 3; ++c) out.at(x, y, c) = detail::clamp_round(gray + saturation * (out.at(x, y, c) - gray));
      }
    }
  }
  // A factor f rotates hue by (f - 1) half-turns, so j = 1 spans the full circle.
  if (out.channels == 3 && hue != 1.0) detail::rotate_hue(out, (hue - 1.0) * 0.5);
  return out;
}

/// Restricts a document to `window`, in table coordinates, and moves the
/// origin to its top-left corner. Bands are clipped and those left empty are
/// dropped; cells keep the surviving part of their span and cells with none
/// left are removed. Bounding boxes are clipped to the new cell region.
/// Pixels are cropped when present.
inline TableDocument crop_document(const TableDocument& doc, const Rect& window) {
  if (window.x1 < 0 || window.y1 < 0 || window.x2 > doc.width || window.y2 > doc.height || window.empty()) {
    throw std::invalid_argument("crop_document: window outside the table or empty");
  }
  TableDocument out;
  out.id = doc.id;
  out.width = window.width();
  out.height = window.height();

  // newIndex[i] is the index of band i after cropping, or -1 if it vanished.
  auto clip = [](const std::vector<Band>& bands, int lo, int hi, std::vector<Band>& kept) {
    std::vector<int> newIndex;
    for (const Band& b : bands) {
      const int a = std::max(b.lo, lo);
      const int z = std::min(b.hi, hi);
      if (z > a) {
        newIndex.push_back(static_cast<int>(kept.size()));
        kept.push_back({a - lo, z - lo});
      } else {
        newIndex.push_back(-1);
      }
    }
    return newIndex;
  };
  const auto colIndex = clip(doc.columns, window.x1, window.x2, out.columns);
  const auto rowIndex = clip(doc.rows, window.y1, window.y2, out.rows);

  auto surviving = [](const std::vector<int>& index, int first, int last) {
    std::pair<int, int> r{-1, -1};
    for (int i = first; i <= last; ++i) {
      if (index[i] < 0) continue;
      if (r.first < 0) r.first = index[i];
      r.second = index[i];
    }
    return r;
  };
  for (const Cell& c : doc.cells) {
    const auto [c0, c1] = surviving(colIndex, c.startCol, c.endCol);
    const auto [r0, r1] = surviving(rowIndex, c.startRow, c.endRow);
    if (c0 < 0 || r0 < 0) continue;
    Cell n = c;
    n.startCol = c0;
    n.endCol = c1;
    n.startRow = r0;
    n.endRow = r1;
    const Rect region{out.columns[c0].lo, out.rows[r0].lo, out.columns[c1].hi, out.rows[r1].hi};
    auto fit = [](int v, int lo, int hi) { return std::clamp(v, lo, hi); };
    n.bbox.x1 = fit(c.bbox.x1 - window.x1, region.x1, region.x2);
    n.bbox.x2 = fit(c.bbox.x2 - window.x1, n.bbox.x1, region.x2);
    n.bbox.y1 = fit(c.bbox.y1 - window.y1, region.y1, region.y2);
    n.bbox.y2 = fit(c.bbox.y2 - window.y1, n.bbox.y1, region.y2);
    out.cells.push_back(n);
  }
  if (doc.has_pixels()) out.image = crop(doc.image, window.x1, window.y1, window.width(), window.height());
  return out;
}

}  // namespace tabaug
