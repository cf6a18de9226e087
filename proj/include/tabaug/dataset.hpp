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
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tabaug/annotation_io.hpp"
#include "tabaug/png_io.hpp"
#include "tabaug/rng.hpp"
#include "tabaug/table.hpp"

namespace tabaug {

/// Bad user configuration (ratios, fractions, flags). The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Split { Train, Test, Val };

constexpr std::string_view to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Test: return "test";
    case Split::Val: return "val";
  }
  return "?";
}

inline std::optional<Split> parse_split(std::string_view s) {
  if (s == "train") return Split::Train;
  if (s == "test") return Split::Test;
  if (s == "val") return Split::Val;
  return std::nullopt;
}

struct ManifestEntry {
  std::string id;
  std::filesystem::path image;
  std::filesystem::path annotation;
  std::optional<Split> split;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Ordered list of tables. Relative paths are resolved against `baseDir`
/// (the manifest's directory when loaded from disk).
struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path baseDir;

  std::filesystem::path resolve(const std::filesystem::path& p) const { return p.is_absolute() ? p : baseDir / p; }

  std::vector<const ManifestEntry*> in_split(Split s) const {
    std::vector<const ManifestEntry*> out;
    for (const auto& e : entries) {
      if (e.split == s) out.push_back(&e);
    }
    return out;
  }

  /// Training entries; every entry when no split has been assigned yet.
  std::vector<const ManifestEntry*> training_entries() const {
    const bool anySplit = std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.split.has_value(); });
    if (anySplit) return in_split(Split::Train);
    std::vector<const ManifestEntry*> out;
    for (const auto& e : entries) out.push_back(&e);
    return out;
  }
};

/// Train / test / validation proportions and the shuffle seed.
struct SplitSpec {
  std::array<double, 3> ratios{0.72, 0.2, 0.08};
  std::uint64_t seed = 0;
};

/// Tables sharing a page prefix (the id up to its last '#') belong to the
/// same page; ids without '#' are their own page.
inline std::string page_key(std::string_view tableId) {
  const auto pos = tableId.rfind('#');
  return std::string(pos == std::string_view::npos ? tableId : tableId.substr(0, pos));
}

inline void check_manifest(const DatasetManifest& m) {
  std::set<std::string> seen;
  for (const auto& e : m.entries) {
    if (!seen.insert(e.id).second) throw ConfigError("manifest: duplicate table id '" + e.id + "'");
  }
}

/// Assigns every entry to train/test/val. Target sizes are round(N * ratio)
/// for test and val with the remainder going to train. Pages (sorted by
/// key, then shuffled with the seed) fill test, then val, then train, and a
/// page's tables never straddle splits.
inline DatasetManifest split_dataset(DatasetManifest manifest, const SplitSpec& spec) {
  if (manifest.entries.empty()) throw ConfigError("split: manifest is empty");
  for (double r : spec.ratios) {
    if (!(r >= 0.0)) throw ConfigError("split: ratios must be non-negative");
  }
  const double sum = spec.ratios[0] + spec.ratios[1] + spec.ratios[2];
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "split: ratios must sum to 1 (got " << sum << ")";
    throw ConfigError(os.str());
  }
  check_manifest(manifest);

  const auto n = static_cast<double>(manifest.entries.size());
  const int total = static_cast<int>(manifest.entries.size());
  int testTarget = static_cast<int>(std::lround(n * spec.ratios[1]));
  int valTarget = static_cast<int>(std::lround(n * spec.ratios[2]));
  testTarget = std::min(testTarget, total);
  valTarget = std::min(valTarget, total - testTarget);

  std::map<std::string, std::vector<std::size_t>> pages;
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) pages[page_key(manifest.entries[i].id)].push_back(i);
  std::vector<std::string> order;
  for (const auto& [key, members] : pages) order.push_back(key);
  Rng rng(spec.seed);
  rng.shuffle(order.begin(), order.end());

  int testCount = 0, valCount = 0;
  for (const auto& key : order) {
    const auto& members = pages[key];
    const int size = static_cast<int>(members.size());
    Split s = Split::Train;
    if (testCount + size <= testTarget) {
      s = Split::Test;
      testCount += size;
    } else if (valCount + size <= valTarget) {
      s = Split::Val;
      valCount += size;
    }
    for (std::size_t i : members) manifest.entries[i].split = s;
  }
  return manifest;
}

/// Keeps ceil(fraction * |train|) training entries, chosen by a seeded
/// shuffle of the sorted training ids. Test and val entries are untouched.
inline DatasetManifest training_fraction(DatasetManifest manifest, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw ConfigError("training fraction must be in (0, 1]");
  std::vector<std::string> train;
  for (const auto& e : manifest.entries) {
    if (e.split == Split::Train) train.push_back(e.id);
  }
  if (train.empty()) throw ConfigError("training fraction: manifest has no train split");
  std::sort(train.begin(), train.end());
  Rng rng(seed);
  rng.shuffle(train.begin(), train.end());
  // Guard against products like 0.7 * 10 = 7.000000000000001.
  const auto keep = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(train.size()) - 1e-9));
  const std::set<std::string> kept(train.begin(), train.begin() + static_cast<std::ptrdiff_t>(keep));
  std::erase_if(manifest.entries,
                [&](const ManifestEntry& e) { return e.split == Split::Train && !kept.contains(e.id); });
  return manifest;
}

// ---------------------------------------------------------------------------
// Files.

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::filesystem::path& p, std::string_view bytes) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + p.string());
}

inline nlohmann::ordered_json manifest_to_json(const DatasetManifest& m) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : m.entries) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["image"] = e.image.generic_string();
    j["annotation"] = e.annotation.generic_string();
    if (e.split) j["split"] = std::string(to_string(*e.split));
    arr.push_back(std::move(j));
  }
  return arr;
}

inline DatasetManifest manifest_from_json(const nlohmann::json& arr, std::filesystem::path baseDir = {}) {
  DatasetManifest m;
  m.baseDir = std::move(baseDir);
  if (!arr.is_array()) throw ParseError("manifest must be a JSON array");
  try {
    for (const auto& j : arr) {
      ManifestEntry e;
      e.id = j.at("id").get<std::string>();
      e.image = j.at("image").get<std::string>();
      e.annotation = j.at("annotation").get<std::string>();
      if (j.contains("split")) {
        e.split = parse_split(j.at("split").get<std::string>());
        if (!e.split) throw ParseError("manifest: unknown split '" + j.at("split").get<std::string>() + "'");
      }
      m.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest schema: ") + e.what());
  }
  check_manifest(m);
  return m;
}

inline DatasetManifest load_manifest(const std::filesystem::path& path) {
  nlohmann::json j;
  const std::string text = read_file(path);
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("manifest JSON is malformed: " + path.string(), line, col);
  }
  return manifest_from_json(j, path.parent_path());
}

inline void save_manifest(const std::filesystem::path& path, const DatasetManifest& m) {
  write_file(path, manifest_to_json(m).dump(2) + "\n");
}

inline TableDocument load_annotation(const std::filesystem::path& path) { return parse_annotation(read_file(path)); }

/// Annotation plus pixels; the image must match the annotated size.
inline TableDocument load_table(const DatasetManifest& m, const ManifestEntry& e) {
  TableDocument doc = load_annotation(m.resolve(e.annotation));
  doc.image = read_png(m.resolve(e.image));
  require_valid(doc);
  return doc;
}

}  // namespace tabaug
