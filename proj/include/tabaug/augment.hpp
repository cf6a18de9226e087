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
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "tabaug/rng.hpp"
#include "tabaug/table.hpp"

namespace tabaug {

enum class OpKind { RowDel, ColDel, RowRep, ColRep };

constexpr Axis axis_of(OpKind k) {
  return (k == OpKind::ColDel || k == OpKind::ColRep) ? Axis::Column : Axis::Row;
}
constexpr bool is_replication(OpKind k) { return k == OpKind::RowRep || k == OpKind::ColRep; }

constexpr std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::RowDel: return "RowDel";
    case OpKind::ColDel: return "ColDel";
    case OpKind::RowRep: return "RowRep";
    case OpKind::ColRep: return "ColRep";
  }
  return "?";
}

inline std::optional<OpKind> parse_op_kind(std::string_view s) {
  for (OpKind k : {OpKind::RowDel, OpKind::ColDel, OpKind::RowRep, OpKind::ColRep}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

enum class AbortReason { NonConvexSource, NonConvexTarget, TooFewSegments };

constexpr std::string_view to_string(AbortReason r) {
  switch (r) {
    case AbortReason::NonConvexSource: return "NonConvexSource";
    case AbortReason::NonConvexTarget: return "NonConvexTarget";
    case AbortReason::TooFewSegments: return "TooFewSegments";
  }
  return "?";
}

struct Aborted {
  AbortReason reason;
  friend bool operator==(const Aborted&, const Aborted&) = default;
};

/// Convex block of segments [cMin, cMax] along one axis and its pixel extent.
struct BlockSelection {
  Axis axis = Axis::Column;
  int cMin = 0;
  int cMax = 0;
  int xMin = 0;
  int xMax = 0;
  int w = 0;

  int count() const { return cMax - cMin + 1; }
  friend bool operator==(const BlockSelection&, const BlockSelection&) = default;
};

/// Insertion index d in [1, C] and the pixel coordinate where the copy lands.
struct TargetSelection {
  Axis axis = Axis::Column;
  int d = 1;
  int xDst = 0;
  friend bool operator==(const TargetSelection&, const TargetSelection&) = default;
};

/// What an executed operation did; enough to replay it on the same input.
struct OpRecord {
  OpKind kind = OpKind::ColDel;
  int cMin = 0;
  int cMax = 0;
  std::optional<int> d;  // replication only
  friend bool operator==(const OpRecord&, const OpRecord&) = default;
};

/// Result of a random operation: the new document and its record, or the
/// input unaltered with the abort reason.
struct OpOutcome {
  TableDocument doc;
  std::variant<OpRecord, Aborted> result;

  bool aborted() const { return std::holds_alternative<Aborted>(result); }
  const OpRecord& record() const { return std::get<OpRecord>(result); }
  AbortReason reason() const { return std::get<Aborted>(result).reason; }
};

// ---------------------------------------------------------------------------
// Span computation along an axis.

struct SpanRange {
  int min = 0;
  int max = 0;
};

/// Smallest start and largest end over the cells covering segment `c`
/// (every cell that intersects line c of the grid).
inline SpanRange span_at(const TableDocument& doc, Axis axis, int c) {
  SpanRange s{std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  for (const Cell& cell : doc.cells) {
    if (cell.start(axis) <= c && c <= cell.end(axis)) {
      s.min = std::min(s.min, cell.start(axis));
      s.max = std::max(s.max, cell.end(axis));
    }
  }
  return s;
}

/// True when no cell intersects [lo, hi] while extending outside it.
inline bool is_convex_block(const TableDocument& doc, Axis axis, int lo, int hi) {
  return std::none_of(doc.cells.begin(), doc.cells.end(), [&](const Cell& cell) {
    const bool intersects = cell.start(axis) <= hi && cell.end(axis) >= lo;
    return intersects && (cell.start(axis) < lo || cell.end(axis) > hi);
  });
}

/// True when some cell spans across the boundary in front of segment d,
/// i.e. covers both d-1 and d.
inline bool boundary_splits_cell(const TableDocument& doc, Axis axis, int d) {
  return std::any_of(doc.cells.begin(), doc.cells.end(), [&](const Cell& cell) {
    return cell.start(axis) < d && d <= cell.end(axis);
  });
}

// ---------------------------------------------------------------------------
// Deterministic selection steps. The random selectors below only draw the
// index and delegate here, which is also what replay uses.

/// Builds the selection for an explicit block, checking index range,
/// protection of segment 0 and convexity.
inline std::variant<BlockSelection, Aborted> make_block(const TableDocument& doc, Axis axis, int cMin, int cMax) {
  const auto& bands = doc.bands(axis);
  const int n = static_cast<int>(bands.size());
  if (n < 2) return Aborted{AbortReason::TooFewSegments};
  if (cMin < 1 || cMax < cMin || cMax > n - 1 || !is_convex_block(doc, axis, cMin, cMax)) {
    return Aborted{AbortReason::NonConvexSource};
  }
  const int xMin = bands[cMin].lo;
  const int xMax = bands[cMax].hi;
  return BlockSelection{axis, cMin, cMax, xMin, xMax, xMax - xMin};
}

/// Expands segment c to the block [span_min, span_max] of the cells covering
/// it, in a single pass; aborts when that block touches segment 0 or is
/// still not convex.
inline std::variant<BlockSelection, Aborted> expand_source(const TableDocument& doc, Axis axis, int c) {
  if (doc.segment_count(axis) < 2) return Aborted{AbortReason::TooFewSegments};
  const SpanRange s = span_at(doc, axis, c);
  if (s.min == 0) return Aborted{AbortReason::NonConvexSource};
  return make_block(doc, axis, s.min, s.max);
}

/// Target for an explicit, already-corrected index; aborts when it splits a cell.
inline std::variant<TargetSelection, Aborted> make_target(const TableDocument& doc, Axis axis, int d) {
  const auto& bands = doc.bands(axis);
  const int n = static_cast<int>(bands.size());
  if (d < 1 || d > n || boundary_splits_cell(doc, axis, d)) return Aborted{AbortReason::NonConvexTarget};
  return TargetSelection{axis, d, d == n ? bands[n - 1].hi : bands[d].lo};
}

/// Moves an insertion index off a spanning cell: to span_min when it is at
/// least as close as span_max and is not segment 0, otherwise past span_max.
/// Indices that split no cell are returned unchanged.
inline int correct_target_index(const TableDocument& doc, Axis axis, int d) {
  if (d >= doc.segment_count(axis) || !boundary_splits_cell(doc, axis, d)) return d;
  const SpanRange s = span_at(doc, axis, d);
  if (std::abs(d - s.min) <= std::abs(d - s.max) && s.min != 0) return s.min;
  return s.max + 1;
}

// ---------------------------------------------------------------------------
// Random selection.

/// Draws c uniformly from [1, C-1] and expands it to a convex block.
inline std::variant<BlockSelection, Aborted> select_source_block(const TableDocument& doc, Axis axis, Rng& rng) {
  const int n = doc.segment_count(axis);
  if (n < 2) return Aborted{AbortReason::TooFewSegments};
  const int c = static_cast<int>(rng.uniform_int(1, n - 1));
  return expand_source(doc, axis, c);
}

/// Draws d uniformly from [1, C] and corrects it off spanning cells.
inline std::variant<TargetSelection, Aborted> select_target_index(const TableDocument& doc, Axis axis, Rng& rng) {
  const int n = doc.segment_count(axis);
  if (n < 1) return Aborted{AbortReason::TooFewSegments};
  const int d = static_cast<int>(rng.uniform_int(1, n));
  return make_target(doc, axis, correct_target_index(doc, axis, d));
}

// ---------------------------------------------------------------------------
// Execution.

namespace detail {

inline void check_block(const TableDocument& doc, const BlockSelection& sel) {
  auto again = make_block(doc, sel.axis, sel.cMin, sel.cMax);
  if (const auto* b = std::get_if<BlockSelection>(&again); b == nullptr || !(*b == sel)) {
    throw std::invalid_argument("block selection does not match document");
  }
}

}  // namespace detail

/// Removes segments [cMin, cMax] with their cells; later segments, cells and
/// pixels move back by w and the canvas shrinks by w.
inline TableDocument delete_block(const TableDocument& doc, const BlockSelection& sel) {
  const Axis axis = sel.axis;
  const int n = doc.segment_count(axis);
  if (sel.count() >= n) throw std::invalid_argument("delete_block: deletion would leave no segments");
  detail::check_block(doc, sel);
  const int k = sel.count();

  TableDocument out;
  out.id = doc.id;
  out.width = doc.width;
  out.height = doc.height;
  out.set_extent(axis, doc.extent(axis) - sel.w);
  out.bands(other(axis)) = doc.bands(other(axis));

  auto& bands = out.bands(axis);
  bands.reserve(static_cast<std::size_t>(n - k));
  for (int j = 0; j < n; ++j) {
    Band b = doc.bands(axis)[j];
    if (j >= sel.cMin && j <= sel.cMax) continue;
    if (j > sel.cMax) {
      b.lo -= sel.w;
      b.hi -= sel.w;
    }
    bands.push_back(b);
  }

  out.cells.reserve(doc.cells.size());
  for (Cell cell : doc.cells) {
    if (cell.start(axis) >= sel.cMin && cell.end(axis) <= sel.cMax) continue;
    if (cell.start(axis) > sel.cMax) {
      cell.shift_index(axis, -k);
      cell.bbox.shift(axis, -sel.w);
    }
    out.cells.push_back(cell);
  }

  if (doc.has_pixels()) out.image = remove_range(doc.image, axis, sel.xMin, sel.xMax);
  return out;
}

/// Inserts a copy of block [cMin, cMax] in front of segment d. Segments at
/// index >= d move forward by w pixels and by the block size in index; the
/// copied pixels come from the original image.
inline TableDocument replicate_block(const TableDocument& doc, const BlockSelection& sel, const TargetSelection& tgt) {
  const Axis axis = sel.axis;
  if (tgt.axis != axis) throw std::invalid_argument("replicate_block: selection and target on different axes");
  detail::check_block(doc, sel);
  if (auto t = make_target(doc, axis, tgt.d); !std::holds_alternative<TargetSelection>(t) ||
                                               !(std::get<TargetSelection>(t) == tgt)) {
    throw std::invalid_argument("target selection does not match document");
  }
  const int n = doc.segment_count(axis);
  const int k = sel.count();
  const int offset = tgt.xDst - sel.xMin;
  const int indexOffset = tgt.d - sel.cMin;

  TableDocument out;
  out.id = doc.id;
  out.width = doc.width;
  out.height = doc.height;
  out.set_extent(axis, doc.extent(axis) + sel.w);
  out.bands(other(axis)) = doc.bands(other(axis));

  const auto& src = doc.bands(axis);
  auto& bands = out.bands(axis);
  bands.reserve(static_cast<std::size_t>(n + k));
  for (int j = 0; j < tgt.d; ++j) bands.push_back(src[j]);
  for (int j = sel.cMin; j <= sel.cMax; ++j) bands.push_back({src[j].lo + offset, src[j].hi + offset});
  for (int j = tgt.d; j < n; ++j) bands.push_back({src[j].lo + sel.w, src[j].hi + sel.w});

  out.cells.reserve(doc.cells.size() * 2);
  for (Cell cell : doc.cells) {
    if (cell.start(axis) >= tgt.d) {
      cell.shift_index(axis, k);
      cell.bbox.shift(axis, sel.w);
    }
    out.cells.push_back(cell);
  }
  for (Cell cell : doc.cells) {
    if (cell.start(axis) < sel.cMin || cell.end(axis) > sel.cMax) continue;
    cell.shift_index(axis, indexOffset);
    cell.bbox.shift(axis, offset);
    out.cells.push_back(cell);
  }

  if (doc.has_pixels()) out.image = insert_copy(doc.image, axis, sel.xMin, sel.xMax, tgt.xDst);
  return out;
}

/// Picks the parameters of one operation without executing it.
inline std::variant<OpRecord, Aborted> draw_op(const TableDocument& doc, Rng& rng,
                                                std::optional<OpKind> kind = std::nullopt) {
  const OpKind k = kind ? *kind : static_cast<OpKind>(rng.uniform_int(0, 3));
  const Axis axis = axis_of(k);
  auto src = select_source_block(doc, axis, rng);
  if (auto* a = std::get_if<Aborted>(&src)) return *a;
  const auto& sel = std::get<BlockSelection>(src);
  OpRecord rec{k, sel.cMin, sel.cMax, std::nullopt};
  if (is_replication(k)) {
    auto tgt = select_target_index(doc, axis, rng);
    if (auto* a = std::get_if<Aborted>(&tgt)) return *a;
    rec.d = std::get<TargetSelection>(tgt).d;
  }
  return rec;
}

/// Re-executes a recorded operation. Throws std::invalid_argument when the
/// record does not apply to `doc`.
inline TableDocument execute(const TableDocument& doc, const OpRecord& rec) {
  const Axis axis = axis_of(rec.kind);
  auto src = make_block(doc, axis, rec.cMin, rec.cMax);
  if (!std::holds_alternative<BlockSelection>(src)) {
    throw std::invalid_argument("execute: recorded block is not a valid selection");
  }
  const auto& sel = std::get<BlockSelection>(src);
  if (!is_replication(rec.kind)) return delete_block(doc, sel);
  if (!rec.d) throw std::invalid_argument("execute: replication record without target");
  auto tgt = make_target(doc, axis, *rec.d);
  if (!std::holds_alternative<TargetSelection>(tgt)) {
    throw std::invalid_argument("execute: recorded target splits a cell");
  }
  return replicate_block(doc, sel, std::get<TargetSelection>(tgt));
}

/// One random structural operation. When `kind` is absent it is drawn
/// uniformly from the four kinds.
inline OpOutcome apply_random_op(const TableDocument& doc, Rng& rng, std::optional<OpKind> kind = std::nullopt) {
  auto plan = draw_op(doc, rng, kind);
  if (auto* a = std::get_if<Aborted>(&plan)) return {doc, *a};
  const auto& rec = std::get<OpRecord>(plan);
  return {execute(doc, rec), rec};
}

/// Applies a recorded path in order.
template <typename Range>
TableDocument replay(TableDocument doc, const Range& path) {
  for (const OpRecord& rec : path) doc = execute(doc, rec);
  return doc;
}

}  // namespace tabaug
