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

#include <algorithm>

#include "support/synthetic.hpp"
#include "tabaug/table.hpp"

namespace tabaug {
namespace {

TableDocument minimal_table() {
  TableDocument doc;
  doc.id = "t";
  doc.width = 40;
  doc.height = 20;
  doc.columns = {{0, 40}};
  doc.rows = {{0, 20}};
  doc.cells = {{0, 0, 0, 0, {2, 2, 38, 18}, false}};
  doc.image = Image(40, 20, 1, 255);
  return doc;
}

bool has_violation(const ValidationReport& r, std::string_view text) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.message().find(text) != std::string::npos; });
}

TEST(Validate, MinimalTableIsValid) { EXPECT_TRUE(validate(minimal_table()).empty()); }

TEST(Validate, OverlappingColumns) {
  TableDocument doc = testing::table_from_layout({"01"});
  doc.columns[0].hi = 11;
  EXPECT_TRUE(has_violation(validate(doc), "columns overlap"));
}

TEST(Validate, DuplicateCoverage) {
  TableDocument doc = testing::table_from_layout({"01", "23"});
  // A cell spanning both columns of row 0 on top of the two unit cells.
  doc.cells.push_back({0, 0, 0, 1, {0, 0, 20, 10}, false});
  const auto report = validate(doc);
  ASSERT_TRUE(has_violation(report, "duplicate coverage"));

  // Exhaustive scan: exactly the two positions of row 0 are doubly covered.
  int doubled = 0;
  for (int r = 0; r < doc.row_count(); ++r) {
    for (int c = 0; c < doc.column_count(); ++c) {
      const auto n = std::count_if(doc.cells.begin(), doc.cells.end(), [&](const Cell& cell) { return cell.covers(r, c); });
      if (n > 1) ++doubled;
    }
  }
  EXPECT_EQ(doubled, 2);
  EXPECT_EQ(std::count_if(report.begin(), report.end(),
                          [](const Violation& v) { return v.kind == ViolationKind::DuplicateCoverage; }),
            doubled);
}

TEST(Validate, GapUncoveredAndImageMismatch) {
  TableDocument doc = testing::table_from_layout({"01", "23"});
  doc.columns[1].lo = 12;
  doc.cells.pop_back();
  doc.image = Image(5, 5, 1);
  const auto report = validate(doc);
  EXPECT_TRUE(has_violation(report, "columns gap"));
  EXPECT_TRUE(has_violation(report, "uncovered position"));
  EXPECT_TRUE(has_violation(report, "image size mismatch"));
}

TEST(Validate, ExtentAndOrigin) {
  TableDocument doc = testing::table_from_layout({"0"});
  doc.rows[0] = {1, 10};
  doc.width = 11;
  const auto report = validate(doc);
  EXPECT_TRUE(has_violation(report, "rows not at origin"));
  EXPECT_TRUE(has_violation(report, "columns extent mismatch"));
}

TEST(Validate, CellProblems) {
  TableDocument doc = testing::table_from_layout({"01"});
  doc.cells[0].bbox.x2 = 15;
  EXPECT_TRUE(has_violation(validate(doc), "cell bbox outside span"));
  doc = testing::table_from_layout({"01"});
  doc.cells[1].endCol = 2;
  EXPECT_TRUE(has_violation(validate(doc), "cell index out of range"));
  doc = testing::table_from_layout({"01"});
  doc.cells[1].startCol = 2;
  EXPECT_TRUE(has_violation(validate(doc), "cell span inverted"));
}

TEST(Validate, NeverMutates) {
  TableDocument doc = testing::table_from_layout({"01", "21"});
  const TableDocument before = doc;
  (void)validate(doc);
  EXPECT_EQ(doc, before);
}

TEST(GridIndex, UnitCells) {
  const TableDocument doc = testing::table_from_layout({"01", "23"});
  const auto idx = grid_index(doc);
  std::set<std::size_t> owners{idx.at(0, 0), idx.at(0, 1), idx.at(1, 0), idx.at(1, 1)};
  EXPECT_EQ(owners.size(), 4u);
}

TEST(GridIndex, RowSpanningCell) {
  const auto idx = grid_index(testing::table_from_layout({"00", "12"}));
  EXPECT_EQ(idx.at(0, 0), idx.at(0, 1));
  EXPECT_NE(idx.at(1, 0), idx.at(1, 1));
}

TEST(GridIndex, CenterColumnSpan) {
  const TableDocument doc = testing::table_from_layout({"012", "345", "648"});
  const auto idx = grid_index(doc);
  EXPECT_EQ(idx.at(1, 1), idx.at(2, 1));
  // Brute-force: every position's owner covers it, and no other cell does.
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_TRUE(doc.cells[idx.at(r, c)].covers(r, c));
      for (std::size_t k = 0; k < doc.cells.size(); ++k) {
        if (k != idx.at(r, c)) {
          EXPECT_FALSE(doc.cells[k].covers(r, c));
        }
      }
    }
  }
}

TEST(GridIndex, InvalidDocumentThrows) {
  TableDocument doc = testing::table_from_layout({"01"});
  doc.cells.pop_back();
  try {
    (void)grid_index(doc);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    ASSERT_FALSE(e.report().empty());
    EXPECT_EQ(e.report().front().kind, ViolationKind::UncoveredPosition);
  }
}

TEST(TableProperties, SpannedPositionsSumToGrid) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const TableDocument doc = testing::random_table(rng, {.withPixels = false});
    ASSERT_TRUE(validate(doc).empty());
    std::size_t total = 0;
    for (const Cell& c : doc.cells) total += c.position_count();
    EXPECT_EQ(total, static_cast<std::size_t>(doc.row_count() * doc.column_count()));
  }
}

TEST(TableProperties, TransposeIsInvolution) {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const TableDocument doc = testing::random_table(rng);
    const TableDocument t = transpose(doc);
    EXPECT_TRUE(validate(t).empty());
    EXPECT_EQ(transpose(t), doc);
  }
}

}  // namespace
}  // namespace tabaug
