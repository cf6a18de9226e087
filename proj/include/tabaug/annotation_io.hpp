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
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <nlohmann/json.hpp>

#include "tabaug/table.hpp"

namespace tabaug {

/// Malformed input. line/column are 1-based; 0 when not applicable.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                                : what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Boundaries of adjacent boxes closer than this are snapped together on import.
inline constexpr int kSnapTolerance = 2;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

/// Snaps near-touching neighbours to the floor of their midpoint, and the
/// outer edges to 0 / extent, when the mismatch is within tolerance.
inline void snap_bands(std::vector<Band>& bands, int extent) {
  if (bands.empty()) return;
  for (std::size_t j = 0; j + 1 < bands.size(); ++j) {
    Band& a = bands[j];
    Band& b = bands[j + 1];
    const int gap = b.lo - a.hi;
    if (gap != 0 && std::abs(gap) <= kSnapTolerance) {
      const int mid = (a.hi + b.lo) / 2;
      a.hi = mid;
      b.lo = mid;
    }
  }
  if (bands.front().lo != 0 && std::abs(bands.front().lo) <= kSnapTolerance) bands.front().lo = 0;
  if (bands.back().hi != extent && std::abs(bands.back().hi - extent) <= kSnapTolerance) bands.back().hi = extent;
}

/// Pulls a cell bbox back inside its spanned region when it sticks out by
/// no more than the snap tolerance.
inline void snap_bbox(TableDocument& doc) {
  const int R = doc.row_count();
  const int C = doc.column_count();
  for (Cell& cell : doc.cells) {
    if (cell.startCol < 0 || cell.endCol >= C || cell.startRow < 0 || cell.endRow >= R) continue;
    if (cell.startCol > cell.endCol || cell.startRow > cell.endRow) continue;
    const Rect region{doc.columns[cell.startCol].lo, doc.rows[cell.startRow].lo, doc.columns[cell.endCol].hi,
                      doc.rows[cell.endRow].hi};
    auto pull_lo = [](int& v, int lo) {
      if (v < lo && lo - v <= kSnapTolerance) v = lo;
    };
    auto pull_hi = [](int& v, int hi) {
      if (v > hi && v - hi <= kSnapTolerance) v = hi;
    };
    pull_lo(cell.bbox.x1, region.x1);
    pull_lo(cell.bbox.y1, region.y1);
    pull_hi(cell.bbox.x2, region.x2);
    pull_hi(cell.bbox.y2, region.y2);
  }
}

inline void normalize_import(TableDocument& doc) {
  snap_bands(doc.columns, doc.width);
  snap_bands(doc.rows, doc.height);
  snap_bbox(doc);
}

inline TableDocument from_json(const nlohmann::json& j) {
  TableDocument doc;
  doc.id = j.at("id").get<std::string>();
  doc.width = j.at("imageWidth").get<int>();
  doc.height = j.at("imageHeight").get<int>();
  for (const auto& c : j.at("columns")) doc.columns.push_back({c.at("x1").get<int>(), c.at("x2").get<int>()});
  for (const auto& r : j.at("rows")) doc.rows.push_back({r.at("y1").get<int>(), r.at("y2").get<int>()});
  for (const auto& c : j.at("cells")) {
    Cell cell;
    cell.startRow = c.at("startRow").get<int>();
    cell.endRow = c.at("endRow").get<int>();
    cell.startCol = c.at("startCol").get<int>();
    cell.endCol = c.at("endCol").get<int>();
    const auto& b = c.at("bbox");
    if (!b.is_array() || b.size() != 4) throw ParseError("cell bbox must be [x1,y1,x2,y2]");
    cell.bbox = {b[0].get<int>(), b[1].get<int>(), b[2].get<int>(), b[3].get<int>()};
    cell.empty = c.at("empty").get<bool>();
    doc.cells.push_back(cell);
  }
  return doc;
}

}  // namespace detail

/// Annotation as an ordered JSON object in canonical key order.
inline nlohmann::ordered_json annotation_to_json(const TableDocument& doc) {
  nlohmann::ordered_json j;
  j["id"] = doc.id;
  j["imageWidth"] = doc.width;
  j["imageHeight"] = doc.height;
  auto cols = nlohmann::ordered_json::array();
  for (const Band& c : doc.columns) cols.push_back({{"x1", c.lo}, {"x2", c.hi}});
  j["columns"] = std::move(cols);
  auto rows = nlohmann::ordered_json::array();
  for (const Band& r : doc.rows) rows.push_back({{"y1", r.lo}, {"y2", r.hi}});
  j["rows"] = std::move(rows);
  auto cells = nlohmann::ordered_json::array();
  for (const Cell& c : doc.cells) {
    nlohmann::ordered_json cj;
    cj["startRow"] = c.startRow;
    cj["endRow"] = c.endRow;
    cj["startCol"] = c.startCol;
    cj["endCol"] = c.endCol;
    cj["bbox"] = {c.bbox.x1, c.bbox.y1, c.bbox.x2, c.bbox.y2};
    cj["empty"] = c.empty;
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j;
}

/// Canonical JSON bytes. Throws ValidationError for invalid documents.
inline std::string serialize_annotation(const TableDocument& doc) {
  require_valid(doc);
  return annotation_to_json(doc).dump(2) + "\n";
}

/// Builds a document from an already-parsed JSON value in the canonical
/// schema, applying import normalization and validation.
inline TableDocument annotation_from_json(const nlohmann::json& j) {
  TableDocument doc;
  try {
    doc = detail::from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("annotation schema: ") + e.what());
  }
  detail::normalize_import(doc);
  require_valid(doc);
  return doc;
}

/// Imports one <Table> element of a T-Truth XML file. See docs/ttruth.md
/// for the element mapping.
inline TableDocument parse_ttruth(std::string_view xml, std::size_t tableIndex = 0) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("T-Truth XML: " + e.message(), e.line(), 0);
  }

  std::vector<const pt::ptree*> tables;
  auto collect = [&](auto&& self, const pt::ptree& node) -> void {
    for (const auto& [name, child] : node) {
      if (name == "Table") {
        tables.push_back(&child);
      } else if (name != "<xmlattr>") {
        self(self, child);
      }
    }
  };
  collect(collect, tree);
  if (tableIndex >= tables.size()) throw ParseError("T-Truth XML: no <Table> element at index " + std::to_string(tableIndex));
  const pt::ptree& table = *tables[tableIndex];

  try {
    const int tx0 = table.get<int>("<xmlattr>.x0");
    const int ty0 = table.get<int>("<xmlattr>.y0");
    const int tx1 = table.get<int>("<xmlattr>.x1");
    const int ty1 = table.get<int>("<xmlattr>.y1");

    TableDocument doc;
    doc.id = table.get<std::string>("<xmlattr>.id", "table" + std::to_string(tableIndex));
    doc.width = tx1 - tx0;
    doc.height = ty1 - ty0;

    std::vector<int> xs, ys;
    for (const auto& [name, child] : table) {
      if (name == "Column") xs.push_back(child.get<int>("<xmlattr>.x0") - tx0);
      if (name == "Row") ys.push_back(child.get<int>("<xmlattr>.y0") - ty0);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    auto tile = [](const std::vector<int>& seps, int extent) {
      std::vector<Band> bands;
      int lo = 0;
      for (int s : seps) {
        bands.push_back({lo, s});
        lo = s;
      }
      bands.push_back({lo, extent});
      return bands;
    };
    doc.columns = tile(xs, doc.width);
    doc.rows = tile(ys, doc.height);

    for (const auto& [name, child] : table) {
      if (name != "Cell") continue;
      Cell cell;
      cell.startRow = child.get<int>("<xmlattr>.startRow");
      cell.endRow = child.get<int>("<xmlattr>.endRow");
      cell.startCol = child.get<int>("<xmlattr>.startCol");
      cell.endCol = child.get<int>("<xmlattr>.endCol");
      cell.bbox = {child.get<int>("<xmlattr>.x0") - tx0, child.get<int>("<xmlattr>.y0") - ty0,
                   child.get<int>("<xmlattr>.x1") - tx0, child.get<int>("<xmlattr>.y1") - ty0};
      const std::string dontCare = child.get<std::string>("<xmlattr>.dontCare", "false");
      cell.empty = dontCare == "true" || dontCare == "True" || dontCare == "1";
      doc.cells.push_back(cell);
    }
    detail::normalize_import(doc);
    require_valid(doc);
    return doc;
  } catch (const pt::ptree_error& e) {
    throw ParseError(std::string("T-Truth XML: ") + e.what());
  }
}

/// Parses canonical JSON, or T-Truth XML when the first non-blank byte is '<'.
/// Throws ParseError for malformed input and ValidationError when the result
/// is structurally invalid after normalization.
inline TableDocument parse_annotation(std::string_view bytes) {
  const auto first = std::find_if(bytes.begin(), bytes.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != bytes.end() && *first == '<') return parse_ttruth(bytes);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_col(bytes, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("annotation JSON is malformed", line, col);
  }
  return annotation_from_json(j);
}

}  // namespace tabaug
