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

#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tabaug {

inline constexpr int kRowBins = 5;  // A..E
inline constexpr int kColBins = 4;  // 1..4

/// Table category: row-count bin (0..4 for A..E) and column-count bin
/// (0..3 for 1..4).
struct Category {
  int rowBin = 0;
  int colBin = 0;

  std::string name() const {
    return std::string(1, static_cast<char>('A' + rowBin)) + static_cast<char>('1' + colBin);
  }
  friend constexpr bool operator==(const Category&, const Category&) = default;
};

/// Parses "B2" style names.
inline std::optional<Category> parse_category(std::string_view s) {
  if (s.size() != 2) return std::nullopt;
  const int r = s[0] - 'A';
  const int c = s[1] - '1';
  if (r < 0 || r >= kRowBins || c < 0 || c >= kColBins) return std::nullopt;
  return Category{r, c};
}

/// Inclusive upper bounds of every bin except the last, which is open-ended.
struct CategoryBins {
  std::array<int, kRowBins - 1> rowUpper{3, 6, 9, 12};
  std::array<int, kColBins - 1> colUpper{3, 6, 8};
};

/// Maps (rows, cols) to its grid cell. Throws std::domain_error for counts < 1.
inline Category categorize(int rowCount, int colCount, const CategoryBins& bins = {}) {
  if (rowCount < 1 || colCount < 1) throw std::domain_error("categorize: counts must be >= 1");
  auto bin_of = [](int v, const auto& upper) {
    int b = 0;
    while (b < static_cast<int>(upper.size()) && v > upper[b]) ++b;
    return b;
  };
  return {bin_of(rowCount, bins.rowUpper), bin_of(colCount, bins.colUpper)};
}

/// Fixed 5x4 grid of reals indexed by category. The tag keeps frequency
/// grids and probability grids from being mixed up.
template <typename Tag>
class BasicGrid {
public:
  static constexpr int kSize = kRowBins * kColBins;

  BasicGrid() { values_.fill(0.0); }

  double& operator[](Category c) { return values_[index(c)]; }
  double operator[](Category c) const { return values_[index(c)]; }
  double& at(int rowBin, int colBin) { return (*this)[Category{rowBin, colBin}]; }
  double at(int rowBin, int colBin) const { return (*this)[Category{rowBin, colBin}]; }

  double sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }
  const std::array<double, kSize>& values() const { return values_; }

  static Category category_at(int flatIndex) { return {flatIndex / kColBins, flatIndex % kColBins}; }

  friend bool operator==(const BasicGrid&, const BasicGrid&) = default;

private:
  static int index(Category c) {
    if (c.rowBin < 0 || c.rowBin >= kRowBins || c.colBin < 0 || c.colBin >= kColBins) {
      throw std::out_of_range("category outside 5x4 grid");
    }
    return c.rowBin * kColBins + c.colBin;
  }
  std::array<double, kSize> values_;
};

struct CategoryGridTag {};
struct ProbabilityGridTag {};

/// Non-negative weights over categories (frequencies, Gaussian kernels).
using CategoryGrid = BasicGrid<CategoryGridTag>;
/// Normalized distribution over categories.
using ProbabilityGrid = BasicGrid<ProbabilityGridTag>;

class EmptyDistribution : public std::runtime_error {
public:
  EmptyDistribution() : std::runtime_error("sampling distribution has no positive mass") {}
};

/// Unnormalized 2-D Gaussian over bin coordinates, 1 at `center`.
inline CategoryGrid gaussian_grid(Category center, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("gaussian_grid: sigma must be > 0");
  CategoryGrid g;
  for (int b = 0; b < kRowBins; ++b) {
    for (int j = 0; j < kColBins; ++j) {
      const double db = b - center.rowBin;
      const double dj = j - center.colBin;
      g.at(b, j) = std::exp(-(db * db + dj * dj) / (2.0 * sigma * sigma));
    }
  }
  return g;
}

/// Elementwise product of the three grids, normalized to sum 1.
/// Throws EmptyDistribution when the product is zero everywhere.
inline ProbabilityGrid build_distribution(const CategoryGrid& gauss, const CategoryGrid& global,
                                          const CategoryGrid& nodes) {
  ProbabilityGrid p;
  double total = 0.0;
  for (int i = 0; i < CategoryGrid::kSize; ++i) {
    const Category c = CategoryGrid::category_at(i);
    const double v = gauss[c] * global[c] * nodes[c];
    if (v < 0.0 || std::isnan(v)) throw std::domain_error("build_distribution: negative or NaN weight");
    p[c] = v;
    total += v;
  }
  if (!(total > 0.0)) throw EmptyDistribution();
  for (int i = 0; i < ProbabilityGrid::kSize; ++i) p[ProbabilityGrid::category_at(i)] /= total;
  return p;
}

}  // namespace tabaug
