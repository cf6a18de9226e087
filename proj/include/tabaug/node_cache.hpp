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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tabaug/annotation_io.hpp"
#include "tabaug/augment.hpp"
#include "tabaug/categories.hpp"
#include "tabaug/dataset.hpp"
#include "tabaug/tree.hpp"

namespace tabaug {

/// On-disk form of a NodeSet: operation paths only. Documents are rebuilt
/// by replaying each path on the root.
struct NodeCache {
  struct Entry {
    std::vector<OpRecord> path;
    int depth = 0;
    Category category;
  };

  std::string rootId;
  std::uint64_t seed = 0;
  TreeConfig config;
  std::vector<Entry> nodes;
};

inline nlohmann::ordered_json op_record_to_json(const OpRecord& r) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(r.kind));
  j["cMin"] = r.cMin;
  j["cMax"] = r.cMax;
  if (r.d) j["d"] = *r.d;
  return j;
}

inline OpRecord op_record_from_json(const nlohmann::json& j) {
  OpRecord r;
  const auto kind = parse_op_kind(j.at("kind").get<std::string>());
  if (!kind) throw ParseError("unknown op kind '" + j.at("kind").get<std::string>() + "'");
  r.kind = *kind;
  r.cMin = j.at("cMin").get<int>();
  r.cMax = j.at("cMax").get<int>();
  if (j.contains("d")) r.d = j.at("d").get<int>();
  return r;
}

inline nlohmann::ordered_json tree_config_to_json(const TreeConfig& c) {
  nlohmann::ordered_json j;
  auto widths = nlohmann::ordered_json::object();
  for (const auto& [depth, width] : c.maxWidthByDepth) widths[std::to_string(depth)] = width;
  j["maxWidthByDepth"] = std::move(widths);
  j["keepDepthMin"] = c.keepDepthMin;
  j["keepDepthMax"] = c.keepDepthMax;
  j["sizeCapFactor"] = c.sizeCapFactor;
  j["attemptsPerSlot"] = c.attemptsPerSlot;
  return j;
}

inline TreeConfig tree_config_from_json(const nlohmann::json& j) {
  TreeConfig c;
  c.maxWidthByDepth.clear();
  for (const auto& [depth, width] : j.at("maxWidthByDepth").items()) c.maxWidthByDepth[std::stoi(depth)] = width.get<int>();
  c.keepDepthMin = j.at("keepDepthMin").get<int>();
  c.keepDepthMax = j.at("keepDepthMax").get<int>();
  c.sizeCapFactor = j.at("sizeCapFactor").get<double>();
  c.attemptsPerSlot = j.value("attemptsPerSlot", 3);
  return c;
}

inline nlohmann::ordered_json node_cache_to_json(const std::string& rootId, std::uint64_t seed, const TreeConfig& cfg,
                                                 const NodeSet& nodes) {
  nlohmann::ordered_json j;
  j["rootId"] = rootId;
  j["seed"] = seed;
  j["config"] = tree_config_to_json(cfg);
  j["empty"] = nodes.empty();
  auto arr = nlohmann::ordered_json::array();
  for (const AugNode& n : nodes) {
    nlohmann::ordered_json nj;
    auto path = nlohmann::ordered_json::array();
    for (const OpRecord& r : n.path) path.push_back(op_record_to_json(r));
    nj["path"] = std::move(path);
    nj["depth"] = n.depth;
    nj["category"] = n.category.name();
    arr.push_back(std::move(nj));
  }
  j["nodes"] = std::move(arr);
  return j;
}

inline NodeCache node_cache_from_json(const nlohmann::json& j) {
  NodeCache c;
  try {
    c.rootId = j.at("rootId").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.config = tree_config_from_json(j.at("config"));
    for (const auto& nj : j.at("nodes")) {
      NodeCache::Entry e;
      for (const auto& rj : nj.at("path")) e.path.push_back(op_record_from_json(rj));
      e.depth = nj.at("depth").get<int>();
      const auto cat = parse_category(nj.at("category").get<std::string>());
      if (!cat) throw ParseError("bad category '" + nj.at("category").get<std::string>() + "'");
      e.category = *cat;
      c.nodes.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("node cache schema: ") + e.what());
  }
  return c;
}

inline void save_node_cache(const std::filesystem::path& path, const std::string& rootId, std::uint64_t seed,
                            const TreeConfig& cfg, const NodeSet& nodes) {
  write_file(path, node_cache_to_json(rootId, seed, cfg, nodes).dump(2) + "\n");
}

inline NodeCache load_node_cache(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("node cache JSON is malformed: " + path.string(), line, col);
  }
  return node_cache_from_json(j);
}

/// Replays every cached path on the root's annotation. Throws ParseError
/// when a stored depth or category disagrees with the replayed document.
inline NodeSet rebuild_nodes(const TableDocument& root, const NodeCache& cache, const CategoryBins& bins = {}) {
  const TableDocument base = root.geometry();
  NodeSet out;
  out.reserve(cache.nodes.size());
  for (const auto& e : cache.nodes) {
    AugNode n{replay(base, e.path), e.path, e.depth, {}};
    n.category = categorize(n.doc.row_count(), n.doc.column_count(), bins);
    if (n.depth != static_cast<int>(n.path.size()) || !(n.category == e.category)) {
      throw ParseError("node cache for '" + cache.rootId + "' does not match its table");
    }
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace tabaug
