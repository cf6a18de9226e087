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

// tabaug: batch front end for table structure augmentation.
//
// Commands: split, explore, sample, gtgen, evaluate, stats.
// Exit codes: 0 success, 1 runtime failure, 2 configuration error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tabaug/tabaug.hpp"

namespace fs = std::filesystem;
using namespace tabaug;

namespace {

struct RunConfig {
  std::string manifest;
  std::string out;
  std::string cacheDir;
  std::uint64_t seed = 0;
  int jobs = 0;
  double sigma = 1.0;
  double pAugment = 0.5;
  double threshold = kDefaultOverlapThreshold;

  std::vector<int> widths{8, 4, 2, 2, 2, 1, 1, 1, 1, 1};
  int keepDepthMin = 6;
  int keepDepthMax = 10;
  double sizeCap = 1.5;
  int attempts = 3;
  std::vector<int> rowBins{3, 6, 9, 12};
  std::vector<int> colBins{3, 6, 8};

  double cropFraction = 1.0;
  double brightness = 0.0;
  double hue = 0.0;
  double saturation = 0.0;

  // split
  std::vector<double> ratios{0.72, 0.2, 0.08};
  std::optional<double> fraction;
  // sample
  int count = 1;
  std::string mode = "tabaug";
  // gtgen
  int inkThreshold = kDefaultInkThreshold;
  // evaluate
  std::string predDir;
  std::string split;
};

int hardware_jobs() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

int effective_jobs(const RunConfig& c) { return c.jobs > 0 ? c.jobs : hardware_jobs(); }

/// File stem for a table id: anything outside [A-Za-z0-9._-] becomes '_'.
std::string safe_name(std::string_view id) {
  std::string s(id);
  for (char& ch : s) {
    const bool ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '_' || ch == '-';
    if (!ok) ch = '_';
  }
  return s;
}

TreeConfig tree_config(const RunConfig& c) {
  TreeConfig t;
  t.maxWidthByDepth.clear();
  for (std::size_t k = 0; k < c.widths.size(); ++k) t.maxWidthByDepth[static_cast<int>(k) + 1] = c.widths[k];
  t.keepDepthMin = c.keepDepthMin;
  t.keepDepthMax = c.keepDepthMax;
  t.sizeCapFactor = c.sizeCap;
  t.attemptsPerSlot = c.attempts;
  try {
    t.check();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return t;
}

CategoryBins category_bins(const RunConfig& c) {
  CategoryBins b;
  if (c.rowBins.size() != b.rowUpper.size() || c.colBins.size() != b.colUpper.size()) {
    throw ConfigError("--row-bins takes 4 upper bounds and --col-bins takes 3");
  }
  std::copy(c.rowBins.begin(), c.rowBins.end(), b.rowUpper.begin());
  std::copy(c.colBins.begin(), c.colBins.end(), b.colUpper.begin());
  auto increasing = [](const auto& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || (i > 0 && v[i] <= v[i - 1])) return false;
    }
    return true;
  };
  if (!increasing(b.rowUpper) || !increasing(b.colUpper)) {
    throw ConfigError("category bin bounds must be positive and strictly increasing");
  }
  return b;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

DatasetManifest open_manifest(const RunConfig& c) {
  require(!c.manifest.empty(), "--manifest is required");
  return load_manifest(c.manifest);
}

fs::path out_dir(const RunConfig& c) {
  require(!c.out.empty(), "--out is required");
  fs::create_directories(c.out);
  return c.out;
}

/// Runs fn(i) for i in [0, n) on `jobs` threads. The first exception (by
/// index) is rethrown after all workers finish.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs))));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string grid_text(const CategoryGrid& g) {
  std::ostringstream os;
  os << "     1      2      3      4\n";
  for (int b = 0; b < kRowBins; ++b) {
    os << static_cast<char>('A' + b);
    for (int j = 0; j < kColBins; ++j) {
      char buf[16];
      std::snprintf(buf, sizeof buf, " %6g", g.at(b, j));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json grid_json(const CategoryGrid& g) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (int i = 0; i < CategoryGrid::kSize; ++i) j[CategoryGrid::category_at(i).name()] = g.values()[i];
  return j;
}

std::string histogram_line(const CategoryGrid& g) {
  std::string s;
  for (int i = 0; i < CategoryGrid::kSize; ++i) {
    if (g.values()[i] == 0.0) continue;
    if (!s.empty()) s += ' ';
    s += CategoryGrid::category_at(i).name() + ":" + std::to_string(static_cast<long>(g.values()[i]));
  }
  return s.empty() ? "-" : s;
}

// ---------------------------------------------------------------------------

int cmd_split(const RunConfig& c) {
  require(c.ratios.size() == 3, "--ratios takes three values: train,test,val");
  DatasetManifest m = open_manifest(c);
  m = split_dataset(std::move(m), {{c.ratios[0], c.ratios[1], c.ratios[2]}, c.seed});
  if (c.fraction) m = training_fraction(std::move(m), *c.fraction, c.seed);
  const fs::path target = c.out.empty() ? fs::path(c.manifest) : fs::path(c.out);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  // Paths stay relative to the original manifest's directory.
  const fs::path base = fs::absolute(m.baseDir);
  const fs::path newBase = fs::absolute(target).parent_path();
  for (auto& e : m.entries) {
    if (e.image.is_relative()) e.image = fs::relative(base / e.image, newBase);
    if (e.annotation.is_relative()) e.annotation = fs::relative(base / e.annotation, newBase);
  }
  save_manifest(target, m);
  std::cout << "train " << m.in_split(Split::Train).size() << "\ntest " << m.in_split(Split::Test).size() << "\nval "
            << m.in_split(Split::Val).size() << "\nwrote " << target.generic_string() << "\n";
  return 0;
}

/// Training annotations (no pixels), or nullopt with a warning for entries
/// that fail to load.
std::vector<std::optional<TableDocument>> load_training_annotations(const DatasetManifest& m,
                                                                    const std::vector<const ManifestEntry*>& entries,
                                                                    int jobs, std::vector<std::string>& warnings) {
  std::vector<std::optional<TableDocument>> docs(entries.size());
  std::vector<std::string> errs(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i) {
    try {
      docs[i] = load_annotation(m.resolve(entries[i]->annotation));
    } catch (const std::exception& e) {
      errs[i] = entries[i]->id + ": " + e.what();
    }
  });
  for (auto& e : errs) {
    if (!e.empty()) warnings.push_back(std::move(e));
  }
  return docs;
}

CategoryGrid global_grid(const std::vector<std::optional<TableDocument>>& docs, const CategoryBins& bins) {
  std::vector<TableDocument> valid;
  for (const auto& d : docs) {
    if (d) valid.push_back(d->geometry());
  }
  return global_frequency(valid, bins);
}

int cmd_explore(const RunConfig& c) {
  const TreeConfig cfg = tree_config(c);
  const CategoryBins bins = category_bins(c);
  const DatasetManifest m = open_manifest(c);
  const fs::path dir = out_dir(c);
  const auto entries = m.training_entries();
  std::vector<std::string> warnings;
  const auto docs = load_training_annotations(m, entries, effective_jobs(c), warnings);

  std::vector<std::size_t> nodeCounts(entries.size(), 0);
  std::vector<CategoryGrid> hist(entries.size());
  parallel_for(entries.size(), effective_jobs(c), [&](std::size_t i) {
    if (!docs[i]) return;
    const std::uint64_t seed = derive_seed(c.seed, entries[i]->id);
    Rng rng(seed);
    const NodeSet nodes = explore_tree(*docs[i], cfg, rng, bins);
    save_node_cache(dir / (safe_name(entries[i]->id) + ".nodes.json"), entries[i]->id, seed, cfg, nodes);
    nodeCounts[i] = nodes.size();
    hist[i] = node_frequency(nodes);
  });

  const CategoryGrid global = global_grid(docs, bins);
  nlohmann::ordered_json gj;
  gj["tables"] = static_cast<int>(global.sum());
  gj["grid"] = grid_json(global);
  write_file(dir / "global_frequency.json", gj.dump(2) + "\n");

  for (const auto& w : warnings) std::cerr << "warning: skipped " << w << "\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!docs[i]) continue;
    std::cout << entries[i]->id << "\t" << categorize(docs[i]->row_count(), docs[i]->column_count(), bins).name() << "\t"
              << nodeCounts[i] << " nodes\t" << histogram_line(hist[i]) << "\n";
  }
  std::cout << "global frequency:\n" << grid_text(global);
  std::cout << "explored " << (entries.size() - warnings.size()) << " tables, skipped " << warnings.size() << "\n";
  return 0;
}

int cmd_sample(const RunConfig& c) {
  require(c.count >= 0, "--n must be >= 0");
  require(c.pAugment >= 0.0 && c.pAugment <= 1.0, "--p-augment must be in [0, 1]");
  require(c.sigma > 0.0, "--sigma must be > 0");
  require(c.mode == "tabaug" || c.mode == "standard", "--mode must be 'tabaug' or 'standard'");
  const CategoryBins bins = category_bins(c);
  const StandardAugmentParams baseline{c.cropFraction, c.brightness, c.hue, c.saturation};
  require(baseline.cropFraction > 0.0 && baseline.cropFraction <= 1.0, "--crop must be in (0, 1]");
  const bool structural = c.mode == "tabaug";
  const DatasetManifest m = open_manifest(c);
  const fs::path dir = out_dir(c);
  const fs::path cacheDir = c.cacheDir.empty() ? dir : fs::path(c.cacheDir);
  const auto entries = m.training_entries();

  std::vector<std::string> warnings;
  CategoryGrid global;
  if (structural) global = global_grid(load_training_annotations(m, entries, effective_jobs(c), warnings), bins);
  if (!warnings.empty()) {
    for (const auto& w : warnings) std::cerr << "error: " << w << "\n";
    return 1;
  }

  std::vector<std::vector<ManifestEntry>> produced(entries.size());
  std::vector<int> augmented(entries.size(), 0);
  parallel_for(entries.size(), effective_jobs(c), [&](std::size_t i) {
    const ManifestEntry& e = *entries[i];
    const std::string stem = safe_name(e.id);
    const fs::path annPath = m.resolve(e.annotation);
    const fs::path imgPath = m.resolve(e.image);
    if (c.count == 0) return;
    const TableDocument table = load_table(m, e);
    Rng rng(derive_seed(c.seed, e.id));

    std::optional<TrainingStream> stream;
    if (structural) {
      const fs::path cachePath = cacheDir / (stem + ".nodes.json");
      if (!fs::exists(cachePath)) {
        throw std::runtime_error("no node cache for '" + e.id + "' in " + cacheDir.generic_string() +
                                 "; run `tabaug explore` first");
      }
      const NodeCache cache = load_node_cache(cachePath);
      if (cache.rootId != e.id) throw std::runtime_error("node cache " + cachePath.string() + " belongs to '" + cache.rootId + "'");
      NodeSet nodes = rebuild_nodes(table, cache, bins);
      std::optional<ProbabilityGrid> p;
      if (!nodes.empty()) {
        try {
          p = table_distribution(table, nodes, global, c.sigma, bins);
        } catch (const EmptyDistribution&) {
        }
      }
      stream.emplace(table, std::move(nodes), p, rng, c.pAugment);
    }

    for (int k = 0; k < c.count; ++k) {
      const std::string name = stem + "_" + std::to_string(k);
      ManifestEntry out{e.id + "@" + std::to_string(k), {}, {}, Split::Train};
      std::optional<TableDocument> doc;
      if (structural) {
        auto draw = stream->next();
        if (draw.node) doc = std::move(draw.doc);
      } else if (rng.uniform_real() < c.pAugment) {
        Rect window;
        const Image img = standard_augment(table.image, baseline, rng, &window);
        out.image = name + ".png";
        out.annotation = name + ".json";
        write_png(dir / out.image, img);
        write_file(dir / out.annotation, serialize_annotation(crop_document(table.geometry(), window)));
        ++augmented[i];
        produced[i].push_back(std::move(out));
        continue;
      }
      if (doc) {
        out.image = name + ".png";
        out.annotation = name + ".json";
        write_png(dir / out.image, doc->image);
        write_file(dir / out.annotation, serialize_annotation(*doc));
        ++augmented[i];
      } else {
        out.image = name + imgPath.extension().string();
        out.annotation = name + annPath.extension().string();
        fs::copy_file(imgPath, dir / out.image, fs::copy_options::overwrite_existing);
        fs::copy_file(annPath, dir / out.annotation, fs::copy_options::overwrite_existing);
      }
      produced[i].push_back(std::move(out));
    }
  });

  DatasetManifest samples;
  int total = 0, aug = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (auto& e : produced[i]) samples.entries.push_back(std::move(e));
    aug += augmented[i];
  }
  total = static_cast<int>(samples.entries.size());
  save_manifest(dir / "samples.json", samples);
  std::cout << "wrote " << total << " samples (" << aug << " augmented, " << total - aug << " original) for "
            << entries.size() << " tables\n";
  return 0;
}

int cmd_gtgen(const RunConfig& c) {
  require(c.inkThreshold >= 0 && c.inkThreshold <= 255, "--ink-threshold must be in [0, 255]");
  const DatasetManifest m = open_manifest(c);
  const fs::path dir = out_dir(c);
  std::vector<std::pair<std::size_t, std::size_t>> counts(m.entries.size());
  parallel_for(m.entries.size(), effective_jobs(c), [&](std::size_t i) {
    const ManifestEntry& e = m.entries[i];
    const TableDocument doc = load_table(m, e);
    const SeparatorMasks masks = expand_separators(doc, binarize(doc.image, c.inkThreshold));
    write_png(dir / (safe_name(e.id) + ".row.png"), mask_to_8bit(masks.rows.raster));
    write_png(dir / (safe_name(e.id) + ".col.png"), mask_to_8bit(masks.columns.raster));
    counts[i] = {masks.rows.bands.size(), masks.columns.bands.size()};
  });
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    std::cout << m.entries[i].id << "\t" << counts[i].first << " row bands\t" << counts[i].second << " column bands\n";
  }
  return 0;
}

std::optional<fs::path> find_prediction(const fs::path& predDir, const std::string& id) {
  for (const char* ext : {".json", ".xml"}) {
    const fs::path p = predDir / (safe_name(id) + ext);
    if (fs::exists(p)) return p;
  }
  return std::nullopt;
}

int cmd_evaluate(const RunConfig& c) {
  require(c.threshold > 0.0 && c.threshold < 0.5, "--threshold must be in (0, 0.5)");
  require(!c.predDir.empty(), "--pred-dir is required");
  std::optional<Split> only;
  if (!c.split.empty()) {
    only = parse_split(c.split);
    require(only.has_value(), "--split must be train, test or val");
  }
  const DatasetManifest m = open_manifest(c);
  const fs::path dir = out_dir(c);

  std::vector<const ManifestEntry*> entries;
  for (const auto& e : m.entries) {
    if (!only || e.split == only) entries.push_back(&e);
  }
  std::vector<std::optional<SegmentationReport>> reports(entries.size());
  parallel_for(entries.size(), effective_jobs(c), [&](std::size_t i) {
    const auto predPath = find_prediction(c.predDir, entries[i]->id);
    if (!predPath) return;
    const TableDocument gt = load_annotation(m.resolve(entries[i]->annotation));
    const TableDocument pred = load_annotation(*predPath);
    reports[i] = evaluate(gt, pred, c.threshold);
  });

  DatasetReport report;
  report.threshold = c.threshold;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (reports[i]) {
      report.tables.emplace_back(entries[i]->id, *reports[i]);
    } else {
      report.missing.push_back(entries[i]->id);
    }
  }
  write_file(dir / "report.json", dataset_report_to_json(report).dump(2) + "\n");
  write_file(dir / "report.csv", dataset_report_to_csv(report));

  const SegmentationReport pooled = report.pooled();
  std::printf("%-7s %8s %9s %8s %8s\n", "kind", "segments", "correct%", "over%", "under%");
  for (SegmentKind k : kSegmentKinds) {
    const KindScore& s = pooled[k];
    std::printf("%-7s %8d %9.2f %8.2f %8.2f\n", std::string(to_string(k)).c_str(), s.gtCount, s.correct_pct(),
                s.over_pct(), s.under_pct());
  }
  std::printf("evaluated %zu tables, %zu missing\n", report.tables.size(), report.missing.size());
  for (const auto& id : report.missing) std::cerr << "missing prediction: " << id << "\n";
  return report.missing.empty() ? 0 : 1;
}

int cmd_stats(const RunConfig& c) {
  const CategoryBins bins = category_bins(c);
  const DatasetManifest m = open_manifest(c);
  std::vector<std::optional<TableDocument>> docs(m.entries.size());
  std::vector<std::string> errs(m.entries.size());
  parallel_for(m.entries.size(), effective_jobs(c), [&](std::size_t i) {
    try {
      docs[i] = load_annotation(m.resolve(m.entries[i].annotation));
    } catch (const std::exception& e) {
      errs[i] = e.what();
    }
  });

  std::map<std::string, int> splits;
  CategoryGrid all;
  long rows = 0, cols = 0, cells = 0, spanning = 0, empty = 0;
  std::set<std::string> pages;
  int valid = 0;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    const auto& e = m.entries[i];
    splits[e.split ? std::string(to_string(*e.split)) : "unassigned"]++;
    pages.insert(page_key(e.id));
    if (!docs[i]) continue;
    ++valid;
    const TableDocument& d = *docs[i];
    all[categorize(d.row_count(), d.column_count(), bins)] += 1.0;
    rows += d.row_count();
    cols += d.column_count();
    cells += static_cast<long>(d.cells.size());
    for (const Cell& cell : d.cells) {
      spanning += cell.position_count() > 1;
      empty += cell.empty;
    }
  }

  std::cout << "tables " << m.entries.size() << " (" << pages.size() << " pages)\n";
  for (const auto& [name, n] : splits) std::cout << "  " << name << " " << n << "\n";
  if (valid > 0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "mean rows %.2f, mean columns %.2f\n", static_cast<double>(rows) / valid,
                  static_cast<double>(cols) / valid);
    std::cout << buf;
  }
  std::cout << "cells " << cells << " (" << spanning << " spanning, " << empty << " empty)\n";
  std::cout << "categories:\n" << grid_text(all);
  int bad = 0;
  for (std::size_t i = 0; i < errs.size(); ++i) {
    if (!errs[i].empty()) {
      std::cerr << "invalid annotation " << m.entries[i].id << ": " << errs[i] << "\n";
      ++bad;
    }
  }
  if (!c.cacheDir.empty()) {
    CategoryGrid nodes;
    long total = 0;
    for (const auto& e : m.training_entries()) {
      const fs::path p = fs::path(c.cacheDir) / (safe_name(e->id) + ".nodes.json");
      if (!fs::exists(p)) continue;
      for (const auto& n : load_node_cache(p).nodes) {
        nodes[n.category] += 1.0;
        ++total;
      }
    }
    std::cout << "cached nodes " << total << ":\n" << grid_text(nodes);
  }
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Structural augmentation and evaluation for table structure recognition"};
  app.set_config("--config", "", "Configuration file (TOML/INI key = value); command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--manifest", c.manifest, "Dataset manifest (JSON list of {id, image, annotation, split?})");
  app.add_option("--out", c.out, "Output directory (split: output manifest path)");
  app.add_option("--cache-dir", c.cacheDir, "Directory holding node caches written by explore");
  app.add_option("--seed", c.seed, "Base random seed")->capture_default_str();
  app.add_option("--jobs", c.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--sigma", c.sigma, "Spread of the category Gaussian, in bins")->capture_default_str();
  app.add_option("--p-augment", c.pAugment, "Probability of drawing an augmented sample")->capture_default_str();
  app.add_option("--threshold", c.threshold, "Overlap threshold T for evaluation")->capture_default_str();
  app.add_option("--widths", c.widths, "Maximum children per node at depths 1..N")->delimiter(',')->capture_default_str();
  app.add_option("--keep-depth-min", c.keepDepthMin, "Shallowest retained depth")->capture_default_str();
  app.add_option("--keep-depth-max", c.keepDepthMax, "Deepest retained depth")->capture_default_str();
  app.add_option("--size-cap", c.sizeCap, "Discard variants larger than this factor times the root")->capture_default_str();
  app.add_option("--attempts", c.attempts, "Draws per child slot before it is forfeited")->capture_default_str();
  app.add_option("--row-bins", c.rowBins, "Upper row counts of bins A..D")->delimiter(',')->capture_default_str();
  app.add_option("--col-bins", c.colBins, "Upper column counts of bins 1..3")->delimiter(',')->capture_default_str();

  auto* split = app.add_subcommand("split", "Assign train/test/val splits by page");
  split->add_option("--ratios", c.ratios, "train,test,val proportions")->delimiter(',')->capture_default_str();
  split->add_option("--fraction", c.fraction, "Keep this fraction of the training split");

  auto* explore = app.add_subcommand("explore", "Build augmentation trees and write node caches");

  auto* sample = app.add_subcommand("sample", "Draw training samples from node caches");
  sample->add_option("--n", c.count, "Draws per table")->capture_default_str();
  sample->add_option("--mode", c.mode, "tabaug (structural) or standard (crop and color jitter)")->capture_default_str();
  sample->add_option("--crop", c.cropFraction, "Standard mode: crop size fraction")->capture_default_str();
  sample->add_option("--brightness", c.brightness, "Standard mode: brightness jitter")->capture_default_str();
  sample->add_option("--hue", c.hue, "Standard mode: hue jitter")->capture_default_str();
  sample->add_option("--saturation", c.saturation, "Standard mode: saturation jitter")->capture_default_str();

  auto* gtgen = app.add_subcommand("gtgen", "Render separator masks for split-style models");
  gtgen->add_option("--ink-threshold", c.inkThreshold, "Gray level below which a pixel is ink")->capture_default_str();

  auto* evaluate = app.add_subcommand("evaluate", "Score predicted annotations against the manifest");
  evaluate->add_option("--pred-dir", c.predDir, "Directory of predictions named <id>.json");
  evaluate->add_option("--split", c.split, "Only evaluate this split");

  auto* stats = app.add_subcommand("stats", "Summarize a dataset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    require(c.jobs >= 0, "--jobs must be >= 0");
    if (split->parsed()) return cmd_split(c);
    if (explore->parsed()) return cmd_explore(c);
    if (sample->parsed()) return cmd_sample(c);
    if (gtgen->parsed()) return cmd_gtgen(c);
    if (evaluate->parsed()) return cmd_evaluate(c);
    if (stats->parsed()) return cmd_stats(c);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
