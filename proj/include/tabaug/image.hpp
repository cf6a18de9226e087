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
#include <cassert>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "tabaug/geometry.hpp"

namespace tabaug {

/// 8-bit raster, interleaved channels (1 = gray, 3 = RGB), row-major.
/// A default-constructed Image has no pixels; table documents use that state
/// when only the annotation is loaded.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;

  Image() = default;
  Image(int w, int h, int ch, std::uint8_t fill = 0)
      : width(w), height(h), channels(ch),
        pixels(static_cast<std::size_t>(w) * h * ch, fill) {
    if (w < 0 || h < 0 || (ch != 1 && ch != 3)) {
      throw std::invalid_argument("Image: bad dimensions or channel count");
    }
  }

  bool empty() const { return pixels.empty(); }
  std::size_t row_stride() const { return static_cast<std::size_t>(width) * channels; }

  std::uint8_t& at(int x, int y, int c = 0) {
    return pixels[static_cast<std::size_t>(y) * row_stride() + static_cast<std::size_t>(x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c = 0) const {
    return pixels[static_cast<std::size_t>(y) * row_stride() + static_cast<std::size_t>(x) * channels + c];
  }

  const std::uint8_t* ptr(int x, int y) const {
    return pixels.data() + static_cast<std::size_t>(y) * row_stride() + static_cast<std::size_t>(x) * channels;
  }
  std::uint8_t* ptr(int x, int y) {
    return pixels.data() + static_cast<std::size_t>(y) * row_stride() + static_cast<std::size_t>(x) * channels;
  }

  int extent(Axis a) const { return a == Axis::Column ? width : height; }

  friend bool operator==(const Image&, const Image&) = default;
};

/// Copy of the sub-rectangle [x, x+w) x [y, y+h).
inline Image crop(const Image& src, int x, int y, int w, int h) {
  if (x < 0 || y < 0 || w < 0 || h < 0 || x + w > src.width || y + h > src.height) {
    throw std::out_of_range("crop: rectangle outside image");
  }
  Image out(w, h, src.channels);
  const std::size_t bytes = static_cast<std::size_t>(w) * src.channels;
  for (int r = 0; r < h; ++r) {
    if (bytes == 0) break;
    std::memcpy(out.ptr(0, r), src.ptr(x, y + r), bytes);
  }
  return out;
}

/// Removes pixel lines [lo, hi) along the axis; everything past hi moves
/// back by hi - lo.
inline Image remove_range(const Image& src, Axis axis, int lo, int hi) {
  assert(0 <= lo && lo <= hi && hi <= src.extent(axis));
  const int cut = hi - lo;
  if (axis == Axis::Row) {
    Image out(src.width, src.height - cut, src.channels);
    const std::size_t stride = src.row_stride();
    auto dst = out.pixels.begin();
    dst = std::copy_n(src.pixels.begin(), stride * lo, dst);
    std::copy(src.pixels.begin() + static_cast<std::ptrdiff_t>(stride * hi), src.pixels.end(), dst);
    return out;
  }
  Image out(src.width - cut, src.height, src.channels);
  const auto ch = static_cast<std::size_t>(src.channels);
  for (int y = 0; y < src.height; ++y) {
    const std::uint8_t* row = &src.pixels[y * src.row_stride()];
    std::uint8_t* dst = out.pixels.data() + y * out.row_stride();
    std::memcpy(dst, row, ch * lo);
    std::memcpy(dst + ch * lo, row + ch * hi, ch * (src.width - hi));
  }
  return out;
}

/// Opens a gap at `dst` along the axis and fills it with a copy of the
/// ORIGINAL lines [lo, hi): result = src[0, dst) ++ src[lo, hi) ++ src[dst, end).
inline Image insert_copy(const Image& src, Axis axis, int lo, int hi, int dst) {
  assert(0 <= lo && lo <= hi && hi <= src.extent(axis));
  assert(0 <= dst && dst <= src.extent(axis));
  const int len = hi - lo;
  if (axis == Axis::Row) {
    Image out(src.width, src.height + len, src.channels);
    const std::size_t stride = src.row_stride();
    const auto base = src.pixels.begin();
    auto it = out.pixels.begin();
    it = std::copy(base, base + static_cast<std::ptrdiff_t>(stride * dst), it);
    it = std::copy(base + static_cast<std::ptrdiff_t>(stride * lo),
                   base + static_cast<std::ptrdiff_t>(stride * hi), it);
    std::copy(base + static_cast<std::ptrdiff_t>(stride * dst), src.pixels.end(), it);
    return out;
  }
  Image out(src.width + len, src.height, src.channels);
  const auto ch = static_cast<std::size_t>(src.channels);
  for (int y = 0; y < src.height; ++y) {
    const std::uint8_t* row = &src.pixels[y * src.row_stride()];
    std::uint8_t* o = out.pixels.data() + y * out.row_stride();
    std::memcpy(o, row, ch * dst);
    std::memcpy(o + ch * dst, row + ch * lo, ch * len);
    std::memcpy(o + ch * (dst + len), row + ch * dst, ch * (src.width - dst));
  }
  return out;
}

inline Image transpose(const Image& src) {
  if (src.empty()) return {};
  Image out(src.height, src.width, src.channels);
  for (int y = 0; y < src.height; ++y) {
    for (int x = 0; x < src.width; ++x) {
      for (int c = 0; c < src.channels; ++c) out.at(y, x, c) = src.at(x, y, c);
    }
  }
  return out;
}

/// ITU-R BT.601 luma with integer rounding; gray images pass through.
inline Image to_gray(const Image& src) {
  if (src.channels == 1) return src;
  Image out(src.width, src.height, 1);
  for (int y = 0; y < src.height; ++y) {
    for (int x = 0; x < src.width; ++x) {
      const int v = 299 * src.at(x, y, 0) + 587 * src.at(x, y, 1) + 114 * src.at(x, y, 2);
      out.at(x, y) = static_cast<std::uint8_t>((v + 500) / 1000);
    }
  }
  return out;
}

}  // namespace tabaug
