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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tabaug/geometry.hpp"
#include "tabaug/image.hpp"

namespace tabaug {

/// A logical cell. Span indices are inclusive and authoritative for
/// structure; bbox is the annotated content rectangle.
struct Cell {
  int startRow = 0;
  int endRow = 0;
  int startCol = 0;
  int endCol = 0;
  Rect bbox;
  bool empty = false;

  int start(Axis a) const { return a == Axis::Column ? startCol : startRow; }
  int end(Axis a) const { return a == Axis::Column ? endCol : endRow; }
  void shift_index(Axis a, int delta) {
    if (a == Axis::Column) {
      startCol += delta;
      endCol += delta;
    } else {
      startRow += delta;
      endRow += delta;
    }
  }
  bool covers(int r, int c) const {
    return startRow <= r && r <= endRow && startCol <= c && c <= endCol;
  }
  std::size_t position_count() const {
    return static_cast<std::size_t>(endRow - startRow + 1) * static_cast<std::size_t>(endCol - startCol + 1);
  }

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// One annotated table, cropped to the table region. Columns and rows tile
/// [0, width) and [0, height). `image` may be pixel-less when only the
/// annotation is needed; width/height are authoritative either way.
struct TableDocument {
  std::string id;
  int width = 0;
  int height = 0;
  std::vector<ColumnBox> columns;
  std::vector<RowBox> rows;
  std::vector<Cell> cells;
  Image image;

  int column_count() const { return static_cast<int>(columns.size()); }
  int row_count() const { return static_cast<int>(rows.size()); }

  const std::vector<Band>& bands(Axis a) const { return a == Axis::Column ? columns : rows; }
  std::vector<Band>& bands(Axis a) { return a == Axis::Column ? columns : rows; }
  int segment_count(Axis a) const { return static_cast<int>(bands(a).size()); }
  int extent(Axis a) const { return a == Axis::Column ? width : height; }
  void set_extent(Axis a, int v) { (a == Axis::Column ? width : height) = v; }

  bool has_pixels() const { return !image.empty(); }

  /// Copy carrying the annotation only.
  TableDocument geometry() const {
    TableDocument out;
    out.id = id;
    out.width = width;
    out.height = height;
    out.columns = columns;
    out.rows = rows;
    out.cells = cells;
    return out;
  }

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

enum class ViolationKind {
  NoColumns,
  NoRows,
  DegenerateBox,
  Unsorted,
  Overlap,
  Gap,
  NotAtOrigin,
  ExtentMismatch,
  ImageSizeMismatch,
  CellIndexOutOfRange,
  CellSpanInverted,
  DuplicateCoverage,
  UncoveredPosition,
  CellBBoxOutside,
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NoColumns: return "no columns";
    case ViolationKind::NoRows: return "no rows";
    case ViolationKind::DegenerateBox: return "degenerate box";
    case ViolationKind::Unsorted: return "boxes unsorted";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::Gap: return "gap";
    case ViolationKind::NotAtOrigin: return "not at origin";
    case ViolationKind::ExtentMismatch: return "extent mismatch";
    case ViolationKind::ImageSizeMismatch: return "image size mismatch";
    case ViolationKind::CellIndexOutOfRange: return "cell index out of range";
    case ViolationKind::CellSpanInverted: return "cell span inverted";
    case ViolationKind::DuplicateCoverage: return "duplicate coverage";
    case ViolationKind::UncoveredPosition: return "uncovered position";
    case ViolationKind::CellBBoxOutside: return "cell bbox outside span";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::optional<Axis> axis;  // set for box-level violations
  std::string detail;

  /// e.g. "columns overlap: columns 0 and 1 ([0,51) vs [50,100))"
  std::string message() const {
    std::string head;
    if (axis) head = std::string(*axis == Axis::Column ? "columns " : "rows ");
    head += to_string(kind);
    return detail.empty() ? head : head + ": " + detail;
  }
};

using ValidationReport = std::vector<Violation>;

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error(summarize(report)), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

private:
  static std::string summarize(const ValidationReport& r) {
    std::string s = "invalid table";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i == 0 ? ": " : "; ") + r[i].message();
    return s;
  }
  ValidationReport report_;
};

namespace detail {

inline std::string band_str(const Band& b) {
  return "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + ")";
}

inline void check_bands(const std::vector<Band>& bands, Axis axis, int extent, ValidationReport& out) {
  const char* noun = axis == Axis::Column ? "column " : "row ";
  if (bands.empty()) {
    out.push_back({axis == Axis::Column ? ViolationKind::NoColumns : ViolationKind::NoRows, std::nullopt, {}});
    return;
  }
  for (std::size_t j = 0; j < bands.size(); ++j) {
    if (bands[j].lo < 0 || bands[j].lo >= bands[j].hi) {
      out.push_back({ViolationKind::DegenerateBox, axis, noun + std::to_string(j) + " " + band_str(bands[j])});
    }
  }
  for (std::size_t j = 0; j + 1 < bands.size(); ++j) {
    const Band& a = bands[j];
    const Band& b = bands[j + 1];
    const std::string which = std::to_string(j) + " and " + std::to_string(j + 1) + " (" + band_str(a) + " vs " + band_str(b) + ")";
    if (a.lo > b.lo) {
      out.push_back({ViolationKind::Unsorted, axis, which});
    } else if (a.hi > b.lo) {
      out.push_back({ViolationKind::Overlap, axis, which});
    } else if (a.hi < b.lo) {
      out.push_back({ViolationKind::Gap, axis, which});
    }
  }
  if (bands.front().lo != 0) {
    out.push_back({ViolationKind::NotAtOrigin, axis, "first starts at " + std::to_string(bands.front().lo)});
  }
  if (bands.back().hi != extent) {
    out.push_back({ViolationKind::ExtentMismatch, axis,
                   "last ends at " + std::to_string(bands.back().hi) + ", table extent " + std::to_string(extent)});
  }
}

}  // namespace detail

/// Lists every violated structural invariant; an empty report means valid.
inline ValidationReport validate(const TableDocument& doc) {
  ValidationReport out;
  detail::check_bands(doc.columns, Axis::Column, doc.width, out);
  detail::check_bands(doc.rows, Axis::Row, doc.height, out);
  if (doc.has_pixels() && (doc.image.width != doc.width || doc.image.height != doc.height)) {
    out.push_back({ViolationKind::ImageSizeMismatch, std::nullopt,
                   std::to_string(doc.image.width) + "x" + std::to_string(doc.image.height) + " vs " +
                       std::to_string(doc.width) + "x" + std::to_string(doc.height)});
  }

  const int R = doc.row_count();
  const int C = doc.column_count();
  std::vector<int> owners(static_cast<std::size_t>(R) * C, 0);
  for (std::size_t k = 0; k < doc.cells.size(); ++k) {
    const Cell& cell = doc.cells[k];
    const std::string name = "cell " + std::to_string(k);
    if (cell.startRow > cell.endRow || cell.startCol > cell.endCol) {
      out.push_back({ViolationKind::CellSpanInverted, std::nullopt, name});
      continue;
    }
    if (cell.startRow < 0 || cell.startCol < 0 || cell.endRow >= R || cell.endCol >= C) {
      out.push_back({ViolationKind::CellIndexOutOfRange, std::nullopt, name});
      continue;
    }
    for (int r = cell.startRow; r <= cell.endRow; ++r) {
      for (int c = cell.startCol; c <= cell.endCol; ++c) ++owners[static_cast<std::size_t>(r) * C + c];
    }
    const Rect region{doc.columns[cell.startCol].lo, doc.rows[cell.startRow].lo, doc.columns[cell.endCol].hi,
                      doc.rows[cell.endRow].hi};
    const Rect& b = cell.bbox;
    if (b.x1 < region.x1 || b.y1 < region.y1 || b.x2 > region.x2 || b.y2 > region.y2 || b.x1 > b.x2 || b.y1 > b.y2) {
      out.push_back({ViolationKind::CellBBoxOutside, std::nullopt, name});
    }
  }
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) {
      const int n = owners[static_cast<std::size_t>(r) * C + c];
      const std::string pos = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (n > 1) out.push_back({ViolationKind::DuplicateCoverage, std::nullopt, pos});
      if (n == 0) out.push_back({ViolationKind::UncoveredPosition, std::nullopt, pos});
    }
  }
  return out;
}

inline bool is_valid(const TableDocument& doc) { return validate(doc).empty(); }

inline void require_valid(const TableDocument& doc) {
  if (auto report = validate(doc); !report.empty()) throw ValidationError(std::move(report));
}

/// R x C lookup from grid position to the index of the owning cell.
class CellGridIndex {
public:
  CellGridIndex(int rows, int cols, std::vector<std::size_t> owner)
      : rows_(rows), cols_(cols), owner_(std::move(owner)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t at(int r, int c) const { return owner_.at(static_cast<std::size_t>(r) * cols_ + c); }

  /// Owner at position `i` along the axis within line `line` of the other axis.
  std::size_t at(Axis a, int line, int i) const { return a == Axis::Column ? at(line, i) : at(i, line); }

private:
  int rows_;
  int cols_;
  std::vector<std::size_t> owner_;
};

/// Throws ValidationError when the document is invalid.
inline CellGridIndex grid_index(const TableDocument& doc) {
  require_valid(doc);
  const int R = doc.row_count();
  const int C = doc.column_count();
  std::vector<std::size_t> owner(static_cast<std::size_t>(R) * C);
  for (std::size_t k = 0; k < doc.cells.size(); ++k) {
    const Cell& cell = doc.cells[k];
    for (int r = cell.startRow; r <= cell.endRow; ++r) {
      for (int c = cell.startCol; c <= cell.endCol; ++c) owner[static_cast<std::size_t>(r) * C + c] = k;
    }
  }
  return {R, C, std::move(owner)};
}

/// Swaps x and y everywhere: columns become rows, spans and bboxes transpose.
inline TableDocument transpose(const TableDocument& doc) {
  TableDocument out;
  out.id = doc.id;
  out.width = doc.height;
  out.height = doc.width;
  out.columns = doc.rows;
  out.rows = doc.columns;
  out.cells.reserve(doc.cells.size());
  for (const Cell& c : doc.cells) {
    out.cells.push_back({c.startCol, c.endCol, c.startRow, c.endRow, c.bbox.transposed(), c.empty});
  }
  out.image = transpose(doc.image);
  return out;
}

}  // namespace tabaug
