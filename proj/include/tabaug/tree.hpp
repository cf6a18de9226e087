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
#include <map>
#include <stdexcept>
#include <vector>

#include "tabaug/augment.hpp"
#include "tabaug/categories.hpp"
#include "tabaug/rng.hpp"
#include "tabaug/table.hpp"

namespace tabaug {

/// Pruning limits for augmentation-tree exploration.
struct TreeConfig {
  std::map<int, int> maxWidthByDepth{{1, 8}, {2, 4}, {3, 2}, {4, 2}, {5, 2},
                                     {6, 1}, {7, 1}, {8, 1}, {9, 1}, {10, 1}};
  int keepDepthMin = 6;
  int keepDepthMax = 10;
  double sizeCapFactor = 1.5;
  int attemptsPerSlot = 3;

  int max_depth() const { return maxWidthByDepth.empty() ? 0 : maxWidthByDepth.rbegin()->first; }
  int width_at(int depth) const {
    auto it = maxWidthByDepth.find(depth);
    return it == maxWidthByDepth.end() ? 0 : it->second;
  }

  /// Throws std::invalid_argument naming the first broken constraint.
  void check() const {
    int expect = 1;
    for (const auto& [depth, width] : maxWidthByDepth) {
      if (depth != expect++) throw std::invalid_argument("TreeConfig: widths must cover depths 1..N contiguously");
      if (width < 1) throw std::invalid_argument("TreeConfig: widths must be positive");
    }
    if (keepDepthMin < 1 || keepDepthMin > keepDepthMax || keepDepthMax > max_depth()) {
      throw std::invalid_argument("TreeConfig: need 1 <= keepDepthMin <= keepDepthMax <= max depth");
    }
    if (!(sizeCapFactor > 0.0)) throw std::invalid_argument("TreeConfig: sizeCapFactor must be > 0");
    if (attemptsPerSlot < 1) throw std::invalid_argument("TreeConfig: attemptsPerSlot must be >= 1");
  }

  friend bool operator==(const TreeConfig&, const TreeConfig&) = default;
};

/// An augmented variant reachable from the root by `path`. `doc` carries
/// the annotation only; pixels are recovered by replaying `path` on the
/// full root (see materialize).
struct AugNode {
  TableDocument doc;
  std::vector<OpRecord> path;
  int depth = 0;
  Category category;
};

using NodeSet = std::vector<AugNode>;

/// Per-depth bookkeeping from one exploration, indexed by depth (index 0 is
/// the root level).
struct ExploreStats {
  std::vector<int> nodesAtDepth;
  std::vector<int> maxChildrenPerParent;
  int abortedAttempts = 0;
  int oversizeDiscards = 0;
};

/// Breadth-first exploration with per-depth width limits. Each surviving
/// node gets maxWidthByDepth[k] child slots; a slot makes up to
/// attemptsPerSlot draws and is forfeited if all abort or exceed the size
/// cap. Returns the nodes whose depth lies in [keepDepthMin, keepDepthMax].
inline NodeSet explore_tree(const TableDocument& root, const TreeConfig& cfg, Rng& rng,
                            const CategoryBins& bins = {}, ExploreStats* stats = nullptr) {
  cfg.check();
  require_valid(root);
  const double maxW = cfg.sizeCapFactor * root.width;
  const double maxH = cfg.sizeCapFactor * root.height;

  ExploreStats local;
  ExploreStats& st = stats ? *stats : local;
  st = {};
  st.nodesAtDepth.push_back(1);
  st.maxChildrenPerParent.push_back(0);

  NodeSet frontier;
  frontier.push_back({root.geometry(), {}, 0, categorize(root.row_count(), root.column_count(), bins)});
  NodeSet kept;

  for (int depth = 1; depth <= cfg.max_depth() && !frontier.empty(); ++depth) {
    const int width = cfg.width_at(depth);
    NodeSet next;
    int widest = 0;
    for (const AugNode& parent : frontier) {
      int children = 0;
      for (int slot = 0; slot < width; ++slot) {
        for (int attempt = 0; attempt < cfg.attemptsPerSlot; ++attempt) {
          auto plan = draw_op(parent.doc, rng);
          if (std::holds_alternative<Aborted>(plan)) {
            ++st.abortedAttempts;
            continue;
          }
          const OpRecord& rec = std::get<OpRecord>(plan);
          TableDocument child = execute(parent.doc, rec);
          if (child.width > maxW || child.height > maxH) {
            ++st.oversizeDiscards;
            continue;
          }
          AugNode node{std::move(child), parent.path, depth, {}};
          node.path.push_back(rec);
          node.category = categorize(node.doc.row_count(), node.doc.column_count(), bins);
          next.push_back(std::move(node));
          ++children;
          break;
        }
      }
      widest = std::max(widest, children);
    }
    st.nodesAtDepth.push_back(static_cast<int>(next.size()));
    st.maxChildrenPerParent.push_back(widest);
    if (depth >= cfg.keepDepthMin && depth <= cfg.keepDepthMax) kept.insert(kept.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return kept;
}

/// Full document (with pixels when the root has them) for a node.
inline TableDocument materialize(const TableDocument& root, const AugNode& node) {
  return replay(root, node.path);
}

/// Count of tables per category.
template <typename Range>
CategoryGrid global_frequency(const Range& tables, const CategoryBins& bins = {}) {
  CategoryGrid g;
  for (const TableDocument& t : tables) g[categorize(t.row_count(), t.column_count(), bins)] += 1.0;
  return g;
}

/// Count of nodes per category.
inline CategoryGrid node_frequency(const NodeSet& nodes) {
  CategoryGrid g;
  for (const AugNode& n : nodes) g[n.category] += 1.0;
  return g;
}

}  // namespace tabaug
