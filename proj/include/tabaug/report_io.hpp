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

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tabaug/metrics.hpp"

namespace tabaug {

inline nlohmann::ordered_json kind_score_to_json(const KindScore& s) {
  nlohmann::ordered_json j;
  j["gtCount"] = s.gtCount;
  j["correct"] = s.correct;
  j["overSeg"] = s.overSeg;
  j["underSeg"] = s.underSeg;
  j["correctPct"] = s.correct_pct();
  j["overPct"] = s.over_pct();
  j["underPct"] = s.under_pct();
  return j;
}

inline nlohmann::ordered_json report_to_json(const SegmentationReport& r) {
  nlohmann::ordered_json j;
  for (SegmentKind k : kSegmentKinds) j[std::string(to_string(k))] = kind_score_to_json(r[k]);
  return j;
}

/// Evaluation over a dataset: per-table reports plus segment counts pooled
/// across all tables.
struct DatasetReport {
  double threshold = kDefaultOverlapThreshold;
  std::vector<std::pair<std::string, SegmentationReport>> tables;
  std::vector<std::string> missing;

  SegmentationReport pooled() const {
    SegmentationReport total;
    for (const auto& [id, r] : tables) total += r;
    return total;
  }
};

inline nlohmann::ordered_json dataset_report_to_json(const DatasetReport& d) {
  nlohmann::ordered_json j;
  j["threshold"] = d.threshold;
  j["dataset"] = report_to_json(d.pooled());
  auto tables = nlohmann::ordered_json::array();
  for (const auto& [id, r] : d.tables) {
    nlohmann::ordered_json t;
    t["id"] = id;
    const auto kinds = report_to_json(r);
    for (const auto& [k, v] : kinds.items()) t[k] = v;
    tables.push_back(std::move(t));
  }
  j["tables"] = std::move(tables);
  j["missing"] = d.missing;
  return j;
}

/// One line per (scope, kind) with two-decimal percentages.
inline std::string dataset_report_to_csv(const DatasetReport& d) {
  std::string out = "scope,kind,gtCount,correct,overSeg,underSeg,correctPct,overPct,underPct\n";
  auto emit = [&out](const std::string& scope, const SegmentationReport& r) {
    for (SegmentKind k : kSegmentKinds) {
      const KindScore& s = r[k];
      char buf[160];
      std::snprintf(buf, sizeof buf, ",%d,%d,%d,%d,%.2f,%.2f,%.2f\n", s.gtCount, s.correct, s.overSeg, s.underSeg,
                    s.correct_pct(), s.over_pct(), s.under_pct());
      out += scope + "," + std::string(to_string(k)) + buf;
    }
  };
  emit("dataset", d.pooled());
  for (const auto& [id, r] : d.tables) emit(id, r);
  return out;
}

}  // namespace tabaug
