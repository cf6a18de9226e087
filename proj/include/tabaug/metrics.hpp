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
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tabaug/geometry.hpp"
#include "tabaug/table.hpp"

namespace tabaug {

enum class SegmentKind { Row, Column, Cell };

constexpr std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::Row: return "row";
    case SegmentKind::Column: return "column";
    case SegmentKind::Cell: return "cell";
  }
  return "?";
}

inline constexpr std::array<SegmentKind, 3> kSegmentKinds{SegmentKind::Row, SegmentKind::Column, SegmentKind::Cell};

inline constexpr double kDefaultOverlapThreshold = 0.1;

/// Numbered rectangular segments over a common canvas.
struct SegmentSet {
  SegmentKind kind = SegmentKind::Row;
  int canvasWidth = 0;
  int canvasHeight = 0;
  std::vector<Rect> regions;

  std::vector<std::int64_t> areas() const {
    std::vector<std::int64_t> a;
    a.reserve(regions.size());
    for (const Rect& r : regions) a.push_back(r.area());
    return a;
  }
};

/// n x m pixel-overlap counts between GT segments (rows) and predicted
/// segments (columns).
class CorrespondenceMatrix {
public:
  CorrespondenceMatrix(std::size_t n, std::size_t m) : n_(n), m_(m), data_(n * m, 0) {}

  std::size_t gt_count() const { return n_; }
  std::size_t pred_count() const { return m_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * m_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }

  friend bool operator==(const CorrespondenceMatrix&, const CorrespondenceMatrix&) = default;

private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::int64_t> data_;
};

inline CorrespondenceMatrix correspondence(const SegmentSet& gt, const SegmentSet& pred) {
  if (gt.canvasWidth != pred.canvasWidth || gt.canvasHeight != pred.canvasHeight) {
    throw std::invalid_argument("correspondence: segment sets are on different canvases");
  }
  CorrespondenceMatrix m(gt.regions.size(), pred.regions.size());
  for (std::size_t i = 0; i < gt.regions.size(); ++i) {
    for (std::size_t j = 0; j < pred.regions.size(); ++j) m(i, j) = intersection_area(gt.regions[i], pred.regions[j]);
  }
  return m;
}

namespace detail {

inline double overlap_ratio(const CorrespondenceMatrix& m, const std::vector<std::int64_t>& gtAreas, std::size_t i,
                            std::size_t j) {
  return gtAreas[i] > 0 ? static_cast<double>(m(i, j)) / static_cast<double>(gtAreas[i]) : 0.0;
}

inline bool significant(double ratio, double t) { return t < ratio && ratio < 1.0 - t; }

inline void check_threshold(double t) {
  if (!(t > 0.0 && t < 0.5)) throw std::invalid_argument("overlap threshold must be in (0, 0.5)");
}

}  // namespace detail

/// GT segments with a major (> 1 - T) overlap with some prediction that
/// overlaps every other GT segment by less than T.
inline int correct_detections(const CorrespondenceMatrix& m, const std::vector<std::int64_t>& gtAreas, double t) {
  detail::check_threshold(t);
  int count = 0;
  for (std::size_t i = 0; i < m.gt_count(); ++i) {
    for (std::size_t j = 0; j < m.pred_count(); ++j) {
      if (!(detail::overlap_ratio(m, gtAreas, i, j) > 1.0 - t)) continue;
      bool exclusive = true;
      for (std::size_t k = 0; k < m.gt_count() && exclusive; ++k) {
        if (k != i && !(detail::overlap_ratio(m, gtAreas, k, j) < t)) exclusive = false;
      }
      if (exclusive) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// GT segments significantly overlapping (T < r < 1 - T) two or more predictions.
inline int over_segmentations(const CorrespondenceMatrix& m, const std::vector<std::int64_t>& gtAreas, double t) {
  detail::check_threshold(t);
  int count = 0;
  for (std::size_t i = 0; i < m.gt_count(); ++i) {
    int partners = 0;
    for (std::size_t j = 0; j < m.pred_count(); ++j) {
      if (detail::significant(detail::overlap_ratio(m, gtAreas, i, j), t)) ++partners;
    }
    if (partners >= 2) ++count;
  }
  return count;
}

/// Predictions significantly overlapping two or more GT segments. Ratios
/// are taken against the GT areas.
inline int under_segmentations(const CorrespondenceMatrix& m, const std::vector<std::int64_t>& gtAreas, double t) {
  detail::check_threshold(t);
  int count = 0;
  for (std::size_t j = 0; j < m.pred_count(); ++j) {
    int partners = 0;
    for (std::size_t i = 0; i < m.gt_count(); ++i) {
      if (detail::significant(detail::overlap_ratio(m, gtAreas, i, j), t)) ++partners;
    }
    if (partners >= 2) ++count;
  }
  return count;
}

struct KindScore {
  int gtCount = 0;
  int correct = 0;
  int overSeg = 0;
  int underSeg = 0;

  static double pct(int count, int total) {
    if (total == 0) return 0.0;
    return std::round(10000.0 * count / total) / 100.0;
  }
  double correct_pct() const { return pct(correct, gtCount); }
  double over_pct() const { return pct(overSeg, gtCount); }
  double under_pct() const { return pct(underSeg, gtCount); }

  KindScore& operator+=(const KindScore& o) {
    gtCount += o.gtCount;
    correct += o.correct;
    overSeg += o.overSeg;
    underSeg += o.underSeg;
    return *this;
  }
  friend bool operator==(const KindScore&, const KindScore&) = default;
};

/// Scores for rows, columns and cells. Percentages are normalized by the
/// GT segment count of each kind and rounded to two decimals.
struct SegmentationReport {
  KindScore row;
  KindScore column;
  KindScore cell;

  KindScore& operator[](SegmentKind k) { return k == SegmentKind::Row ? row : k == SegmentKind::Column ? column : cell; }
  const KindScore& operator[](SegmentKind k) const {
    return k == SegmentKind::Row ? row : k == SegmentKind::Column ? column : cell;
  }
  SegmentationReport& operator+=(const SegmentationReport& o) {
    row += o.row;
    column += o.column;
    cell += o.cell;
    return *this;
  }
  friend bool operator==(const SegmentationReport&, const SegmentationReport&) = default;
};

/// Row strips, column strips, or cell rectangles (spanned rows x spanned
/// columns) of a document.
inline SegmentSet segments_of(const TableDocument& doc, SegmentKind kind) {
  SegmentSet s{kind, doc.width, doc.height, {}};
  switch (kind) {
    case SegmentKind::Row:
      for (const Band& r : doc.rows) s.regions.push_back({0, r.lo, doc.width, r.hi});
      break;
    case SegmentKind::Column:
      for (const Band& c : doc.columns) s.regions.push_back({c.lo, 0, c.hi, doc.height});
      break;
    case SegmentKind::Cell:
      for (const Cell& c : doc.cells) {
        s.regions.push_back({doc.columns[c.startCol].lo, doc.rows[c.startRow].lo, doc.columns[c.endCol].hi,
                             doc.rows[c.endRow].hi});
      }
      break;
  }
  return s;
}

inline KindScore score(const SegmentSet& gt, const SegmentSet& pred, double t) {
  const auto m = correspondence(gt, pred);
  const auto areas = gt.areas();
  return {static_cast<int>(gt.regions.size()), correct_detections(m, areas, t), over_segmentations(m, areas, t),
          under_segmentations(m, areas, t)};
}

/// Throws std::invalid_argument when the canvases differ.
inline SegmentationReport evaluate(const TableDocument& gt, const TableDocument& pred,
                                   double t = kDefaultOverlapThreshold) {
  if (gt.width != pred.width || gt.height != pred.height) {
    throw std::invalid_argument("evaluate: ground truth and prediction differ in size");
  }
  SegmentationReport r;
  for (SegmentKind k : kSegmentKinds) r[k] = score(segments_of(gt, k), segments_of(pred, k), t);
  return r;
}

}  // namespace tabaug
