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

#include <gtest/gtest.h>

#include "support/synthetic.hpp"
#include "tabaug/pixel_gt.hpp"

namespace tabaug {
namespace {

TEST(Binarize, Examples) {
  Image white(5, 8, 1, 255), black(5, 8, 3, 0);
  for (auto v : binarize(white).pixels) EXPECT_EQ(v, 0);
  for (auto v : binarize(black).pixels) EXPECT_EQ(v, 1);
  EXPECT_EQ(binarize(black).channels, 1);

  Image one(5, 8, 1, 255);
  one.at(3, 7) = 0;
  const Image b = binarize(one, 128);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 5; ++x) EXPECT_EQ(b.at(x, y), (x == 3 && y == 7) ? 1 : 0);
  }
}

TEST(Binarize, ThresholdIsStrict) {
  Image img(3, 1, 1);
  img.at(0, 0) = 191;
  img.at(1, 0) = 192;
  img.at(2, 0) = 193;
  const Image b = binarize(img);
  EXPECT_EQ(b.at(0, 0), 1);
  EXPECT_EQ(b.at(1, 0), 0);
  EXPECT_EQ(b.at(2, 0), 0);
}

TEST(SeparatorBands, BlankImageSpansEverything) {
  const std::vector<Band> cols{{0, 30}, {30, 60}};
  EXPECT_EQ(separator_bands(cols, std::vector<int>(60, 0)), (std::vector<Band>{{0, 60}}));
}

TEST(SeparatorBands, NearestInkOnEachSide) {
  std::vector<int> profile(60, 0);
  for (int x = 10; x < 20; ++x) profile[x] = 3;
  for (int x = 40; x < 50; ++x) profile[x] = 3;
  EXPECT_EQ(separator_bands({{0, 30}, {30, 60}}, profile), (std::vector<Band>{{20, 40}}));
}

TEST(SeparatorBands, WindowsSplitAtMidpoints) {
  // Boundaries at 20 and 40 with no ink: windows meet at 30.
  const std::vector<Band> cols{{0, 20}, {20, 40}, {40, 60}};
  EXPECT_EQ(separator_bands(cols, std::vector<int>(60, 0)), (std::vector<Band>{{0, 30}, {30, 60}}));
}

TEST(SeparatorBands, InkAcrossBoundaryCollapses) {
  std::vector<int> profile(40, 0);
  for (int x = 15; x < 25; ++x) profile[x] = 1;
  EXPECT_EQ(separator_bands({{0, 20}, {20, 40}}, profile), (std::vector<Band>{{20, 21}}));
}

TEST(SeparatorBands, InkOnOneSideOnly) {
  std::vector<int> profile(40, 0);
  for (int x = 2; x < 8; ++x) profile[x] = 1;
  EXPECT_EQ(separator_bands({{0, 20}, {20, 40}}, profile), (std::vector<Band>{{8, 40}}));
}

TEST(SeparatorBands, SingleSegmentHasNoBands) {
  EXPECT_TRUE(separator_bands({{0, 10}}, std::vector<int>(10, 0)).empty());
}

TEST(ExpandSeparators, BlankTableMasksFullCanvas) {
  const TableDocument doc = testing::table_from_layout({"01", "23"}, 10);
  const SeparatorMasks m = expand_separators(doc, Image(20, 20, 1, 0));
  for (auto v : m.columns.raster.pixels) EXPECT_EQ(v, 1);
  for (auto v : m.rows.raster.pixels) EXPECT_EQ(v, 1);
  for (auto v : mask_to_8bit(m.rows.raster).pixels) EXPECT_EQ(v, 255);
}

TEST(ExpandSeparators, RejectsWrongSize) {
  const TableDocument doc = testing::table_from_layout({"01"}, 10);
  EXPECT_THROW(expand_separators(doc, Image(5, 5, 1)), std::invalid_argument);
}

TEST(ExpandSeparators, BandsAreStripsAndNeverCoverInk) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const TableDocument doc = testing::word_fixture(rng);
    const Image ink = binarize(doc.image);
    const SeparatorMasks m = expand_separators(doc, ink);
    ASSERT_EQ(m.columns.bands.size(), doc.columns.size() - 1);
    ASSERT_EQ(m.rows.bands.size(), doc.rows.size() - 1);
    for (const auto* mask : {&m.columns, &m.rows}) {
      for (std::size_t k = 0; k < mask->bands.size(); ++k) {
        EXPECT_LT(mask->bands[k].lo, mask->bands[k].hi);
        if (k > 0) EXPECT_LE(mask->bands[k - 1].hi, mask->bands[k].lo);
      }
    }
    for (int y = 0; y < doc.height; ++y) {
      for (int x = 0; x < doc.width; ++x) {
        const bool inCol = std::any_of(m.columns.bands.begin(), m.columns.bands.end(),
                                       [&](const Band& b) { return b.contains(x); });
        const bool inRow = std::any_of(m.rows.bands.begin(), m.rows.bands.end(),
                                       [&](const Band& b) { return b.contains(y); });
        ASSERT_EQ(m.columns.raster.at(x, y), inCol ? 1 : 0);
        ASSERT_EQ(m.rows.raster.at(x, y), inRow ? 1 : 0);
        if (ink.at(x, y)) {
          ASSERT_FALSE(inCol) << "seed " << seed << " x " << x;
          ASSERT_FALSE(inRow) << "seed " << seed << " y " << y;
        }
      }
    }
  }
}

TEST(ExpandSeparators, PaddingDoesNotMoveInnerBands) {
  // Ink in the first and last segment pins the outer windows, so padding
  // both sides only shifts the bands.
  std::vector<int> profile(60, 0);
  profile[3] = profile[25] = profile[33] = profile[57] = 1;
  const std::vector<Band> cols{{0, 20}, {20, 40}, {40, 60}};
  const auto bands = separator_bands(cols, profile);
  std::vector<int> padded(5, 0);
  padded.insert(padded.end(), profile.begin(), profile.end());
  padded.insert(padded.end(), 7, 0);
  const auto shifted = separator_bands({{0, 25}, {25, 45}, {45, 72}}, padded);
  ASSERT_EQ(shifted.size(), bands.size());
  for (std::size_t k = 0; k < bands.size(); ++k) {
    EXPECT_EQ(shifted[k].lo, bands[k].lo + 5);
    EXPECT_EQ(shifted[k].hi, bands[k].hi + 5);
  }
}

}  // namespace
}  // namespace tabaug
