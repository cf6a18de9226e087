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
#include "tabaug/annotation_io.hpp"

namespace tabaug {
namespace {

std::string two_column_json(int secondLo) {
  return R"({"id": "t", "imageWidth": 100, "imageHeight": 20,
  "columns": [{"x1": 0, "x2": 50}, {"x1": )" +
         std::to_string(secondLo) + R"(, "x2": 100}],
  "rows": [{"y1": 0, "y2": 20}],
  "cells": [
    {"startRow": 0, "endRow": 0, "startCol": 0, "endCol": 0, "bbox": [2, 2, 48, 18], "empty": false},
    {"startRow": 0, "endRow": 0, "startCol": 1, "endCol": 1, "bbox": [55, 2, 98, 18], "empty": true}
  ]})";
}

TEST(ParseAnnotation, MinimalTable) {
  const TableDocument doc = parse_annotation(R"({"id": "m", "imageWidth": 5, "imageHeight": 4,
    "columns": [{"x1": 0, "x2": 5}], "rows": [{"y1": 0, "y2": 4}],
    "cells": [{"startRow": 0, "endRow": 0, "startCol": 0, "endCol": 0, "bbox": [0, 0, 5, 4], "empty": false}]})");
  EXPECT_EQ(doc.id, "m");
  EXPECT_EQ(doc.width, 5);
  EXPECT_EQ(doc.height, 4);
  EXPECT_EQ(doc.columns, (std::vector<Band>{{0, 5}}));
  ASSERT_EQ(doc.cells.size(), 1u);
  EXPECT_FALSE(doc.has_pixels());
}

TEST(ParseAnnotation, GapBeyondToleranceIsInvalid) {
  try {
    parse_annotation(two_column_json(53));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    ASSERT_FALSE(e.report().empty());
    EXPECT_EQ(e.report().front().kind, ViolationKind::Gap);
  }
}

TEST(ParseAnnotation, SmallGapSnapsToMidpoint) {
  const TableDocument doc = parse_annotation(two_column_json(51));
  EXPECT_EQ(doc.columns, (std::vector<Band>{{0, 50}, {50, 100}}));
  const TableDocument again = parse_annotation(serialize_annotation(doc));
  EXPECT_EQ(again, doc);
}

TEST(ParseAnnotation, SmallOverlapSnaps) {
  const TableDocument doc = parse_annotation(two_column_json(48));
  EXPECT_EQ(doc.columns, (std::vector<Band>{{0, 49}, {49, 100}}));
}

TEST(ParseAnnotation, MalformedJsonReportsPosition) {
  try {
    parse_annotation("{\n  \"id\": \"x\",\n  \"imageWidth\": ,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(ParseAnnotation, MissingFieldIsParseError) {
  EXPECT_THROW(parse_annotation(R"({"id": "x"})"), ParseError);
}

TEST(SerializeAnnotation, DeterministicAndFixpoint) {
  Rng rng(12);
  for (int k = 0; k < 30; ++k) {
    const TableDocument doc = testing::random_table(rng, {.withPixels = false});
    const std::string a = serialize_annotation(doc);
    EXPECT_EQ(a, serialize_annotation(doc));
    const TableDocument parsed = parse_annotation(a);
    EXPECT_EQ(parsed, doc);
    EXPECT_EQ(serialize_annotation(parsed), a);
  }
}

TEST(SerializeAnnotation, KeyOrderAndSpanningCell) {
  const TableDocument doc = testing::table_from_layout({"0112"}, 10);
  const std::string s = serialize_annotation(doc);
  EXPECT_LT(s.find("\"id\""), s.find("\"imageWidth\""));
  EXPECT_LT(s.find("\"imageHeight\""), s.find("\"columns\""));
  EXPECT_LT(s.find("\"rows\""), s.find("\"cells\""));
  const auto j = nlohmann::json::parse(s);
  EXPECT_EQ(j["cells"][1]["startCol"], 1);
  EXPECT_EQ(j["cells"][1]["endCol"], 2);
}

TEST(SerializeAnnotation, InvalidDocumentThrows) {
  TableDocument doc = testing::table_from_layout({"01"}, 10);
  doc.columns[1].lo = 12;
  EXPECT_THROW(serialize_annotation(doc), ValidationError);
}

constexpr const char* kTTruth = R"(<?xml version="1.0"?>
<Document>
  <Page number="1">
    <Table id="p1#0" x0="100" y0="200" x1="160" y1="230">
      <Column x0="120"/>
      <Column x0="141"/>
      <Row y0="215"/>
      <Cell startRow="0" endRow="0" startCol="0" endCol="1" x0="101" y0="201" x1="140" y1="214"/>
      <Cell startRow="0" endRow="0" startCol="2" endCol="2" x0="142" y0="201" x1="159" y1="214" dontCare="true"/>
      <Cell startRow="1" endRow="1" startCol="0" endCol="0" x0="101" y0="216" x1="119" y1="229"/>
      <Cell startRow="1" endRow="1" startCol="1" endCol="1" x0="121" y0="216" x1="140" y1="229"/>
      <Cell startRow="1" endRow="1" startCol="2" endCol="2" x0="142" y0="216" x1="159" y1="229"/>
    </Table>
    <Table id="p1#1" x0="0" y0="0" x1="10" y1="10">
      <Cell startRow="0" endRow="0" startCol="0" endCol="0" x0="0" y0="0" x1="10" y1="10"/>
    </Table>
  </Page>
</Document>
)";

TEST(TTruth, ImportsSeparatorsAndCells) {
  const TableDocument doc = parse_annotation(kTTruth);
  EXPECT_EQ(doc.id, "p1#0");
  EXPECT_EQ(doc.width, 60);
  EXPECT_EQ(doc.height, 30);
  EXPECT_EQ(doc.columns, (std::vector<Band>{{0, 20}, {20, 41}, {41, 60}}));
  EXPECT_EQ(doc.rows, (std::vector<Band>{{0, 15}, {15, 30}}));
  ASSERT_EQ(doc.cells.size(), 5u);
  EXPECT_EQ(doc.cells[0].endCol, 1);
  EXPECT_EQ(doc.cells[0].bbox, (Rect{1, 1, 40, 14}));
  EXPECT_TRUE(doc.cells[1].empty);
  EXPECT_FALSE(doc.cells[2].empty);
}

TEST(TTruth, SelectsTableByIndex) {
  const TableDocument doc = parse_ttruth(kTTruth, 1);
  EXPECT_EQ(doc.id, "p1#1");
  EXPECT_EQ(doc.column_count(), 1);
  EXPECT_THROW(parse_ttruth(kTTruth, 2), ParseError);
}

TEST(TTruth, MalformedXml) {
  EXPECT_THROW(parse_annotation("<Document><Table></Document>"), ParseError);
  EXPECT_THROW(parse_annotation("<Document><Table x0=\"0\"/></Document>"), ParseError);
}

}  // namespace
}  // namespace tabaug
