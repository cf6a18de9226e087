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

#include <cmath>

#include "tabaug/categories.hpp"

namespace tabaug {
namespace {

TEST(Categorize, Anchors) {
  EXPECT_EQ(categorize(4, 5).name(), "B2");
  EXPECT_EQ(categorize(20, 12).name(), "E4");
  EXPECT_EQ(categorize(1, 1).name(), "A1");
  for (int rows = 15; rows < 40; ++rows) EXPECT_EQ(categorize(rows, 2).rowBin, 4);
  for (int cols = 11; cols < 40; ++cols) EXPECT_EQ(categorize(2, cols).colBin, 3);
}

TEST(Categorize, BinBoundaries) {
  EXPECT_EQ(categorize(3, 3).name(), "A1");
  EXPECT_EQ(categorize(6, 6).name(), "B2");
  EXPECT_EQ(categorize(7, 7).name(), "C3");
  EXPECT_EQ(categorize(9, 8).name(), "C3");
  EXPECT_EQ(categorize(10, 9).name(), "D4");
  EXPECT_EQ(categorize(12, 9).name(), "D4");
  EXPECT_EQ(categorize(13, 1).name(), "E1");
}

TEST(Categorize, TotalAndMonotone) {
  for (int r = 1; r <= 30; ++r) {
    for (int c = 1; c <= 30; ++c) {
      const Category cat = categorize(r, c);
      EXPECT_GE(cat.rowBin, 0);
      EXPECT_LT(cat.rowBin, kRowBins);
      EXPECT_GE(cat.colBin, 0);
      EXPECT_LT(cat.colBin, kColBins);
      EXPECT_LE(cat.rowBin, categorize(r + 1, c).rowBin);
      EXPECT_LE(cat.colBin, categorize(r, c + 1).colBin);
    }
  }
}

TEST(Categorize, RejectsEmptyTables) {
  EXPECT_THROW(categorize(0, 3), std::domain_error);
  EXPECT_THROW(categorize(3, 0), std::domain_error);
}

TEST(Categorize, NameRoundTrip) {
  for (int b = 0; b < kRowBins; ++b) {
    for (int j = 0; j < kColBins; ++j) EXPECT_EQ(parse_category(Category{b, j}.name()), (Category{b, j}));
  }
  EXPECT_FALSE(parse_category("F1"));
  EXPECT_FALSE(parse_category("A5"));
}

TEST(GaussianGrid, ModeAtCenter) {
  for (int b = 0; b < kRowBins; ++b) {
    for (int j = 0; j < kColBins; ++j) {
      const auto g = gaussian_grid({b, j}, 0.7);
      EXPECT_DOUBLE_EQ(g.at(b, j), 1.0);
      for (double v : g.values()) EXPECT_LE(v, 1.0);
    }
  }
}

TEST(GaussianGrid, FlatLimit) {
  const auto g = gaussian_grid({2, 1}, 1e6);
  for (double v : g.values()) EXPECT_NEAR(v, 1.0, 1e-6);
}

TEST(GaussianGrid, DiagonalNeighbour) {
  // Distance^2 = 2 from B2 to A1 at sigma 1: exp(-2 / 2).
  const auto g = gaussian_grid(*parse_category("B2"), 1.0);
  EXPECT_NEAR(g[*parse_category("A1")], std::exp(-1.0), 1e-15);
  EXPECT_NEAR(g[*parse_category("A1")], 0.3679, 5e-5);
}

TEST(GaussianGrid, RejectsNonPositiveSigma) {
  EXPECT_THROW(gaussian_grid({0, 0}, 0.0), std::domain_error);
  EXPECT_THROW(gaussian_grid({0, 0}, -1.0), std::domain_error);
}

CategoryGrid ones() {
  CategoryGrid g;
  for (int b = 0; b < kRowBins; ++b) {
    for (int j = 0; j < kColBins; ++j) g.at(b, j) = 1.0;
  }
  return g;
}

TEST(BuildDistribution, OneHotNodes) {
  CategoryGrid fi;
  fi[*parse_category("D3")] = 4.0;
  const auto p = build_distribution(ones(), ones(), fi);
  EXPECT_DOUBLE_EQ(p[*parse_category("D3")], 1.0);
  EXPECT_DOUBLE_EQ(p.sum(), 1.0);
}

TEST(BuildDistribution, HandNormalizedProduct) {
  CategoryGrid fg, fi;
  fg[*parse_category("B2")] = 2.0;
  fg[*parse_category("B3")] = 1.0;
  fi[*parse_category("B2")] = 1.0;
  fi[*parse_category("B3")] = 1.0;
  const auto p = build_distribution(ones(), fg, fi);
  EXPECT_NEAR(p[*parse_category("B2")], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(p[*parse_category("B3")], 1.0 / 3.0, 1e-15);
}

TEST(BuildDistribution, ZeroWhereNodesAbsentAndSumsToOne) {
  CategoryGrid fg = ones(), fi;
  fi.at(0, 0) = 3;
  fi.at(2, 1) = 1;
  fi.at(4, 3) = 7;
  const auto p = build_distribution(gaussian_grid({1, 1}, 1.3), fg, fi);
  EXPECT_NEAR(p.sum(), 1.0, 1e-12);
  for (int i = 0; i < CategoryGrid::kSize; ++i) {
    if (fi.values()[i] == 0.0) EXPECT_EQ(p.values()[i], 0.0);
  }
}

TEST(BuildDistribution, EmptyProductThrows) {
  CategoryGrid fg, fi;
  fg.at(0, 0) = 1;
  fi.at(1, 1) = 1;
  EXPECT_THROW(build_distribution(ones(), fg, fi), EmptyDistribution);
}

TEST(BuildDistribution, ScalingInvariance) {
  CategoryGrid fg, fi;
  for (int i = 0; i < CategoryGrid::kSize; ++i) {
    fg.at(i / kColBins, i % kColBins) = (i * 7) % 5;
    fi.at(i / kColBins, i % kColBins) = (i * 3) % 4;
  }
  const auto gauss = gaussian_grid({2, 2}, 0.8);
  const auto p = build_distribution(gauss, fg, fi);
  auto scaled = [](CategoryGrid g, double s) {
    for (int i = 0; i < CategoryGrid::kSize; ++i) g.at(i / kColBins, i % kColBins) *= s;
    return g;
  };
  for (double s : {0.001, 3.0, 1e6}) {
    for (const auto& q : {build_distribution(scaled(gauss, s), fg, fi), build_distribution(gauss, scaled(fg, s), fi),
                          build_distribution(gauss, fg, scaled(fi, s))}) {
      for (int i = 0; i < CategoryGrid::kSize; ++i) EXPECT_NEAR(q.values()[i], p.values()[i], 1e-12);
    }
  }
}

}  // namespace
}  // namespace tabaug
