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
#include "tabaug/sampling.hpp"

namespace tabaug {
namespace {

using testing::random_table;
using testing::table_from_layout;

TableDocument grid_table(int rows, int cols, int size = 10, bool withPixels = false) {
  TableDocument doc = table_from_layout(std::vector<std::string>(rows, std::string(cols, 'x')), size, withPixels);
  std::vector<int> owner(rows * cols);
  for (int i = 0; i < rows * cols; ++i) owner[i] = i;
  doc.cells = testing::cells_from_owner(doc.columns, doc.rows, owner, rows, cols);
  return doc;
}

TEST(ExploreTree, SingleCellTableHasNoNodes) {
  Rng rng(1);
  ExploreStats stats;
  EXPECT_TRUE(explore_tree(grid_table(1, 1), {}, rng, {}, &stats).empty());
  EXPECT_GT(stats.abortedAttempts, 0);
}

TEST(ExploreTree, RespectsWidthsDepthsAndSizeCap) {
  const TreeConfig cfg;
  const std::vector<int> widths{8, 4, 2, 2, 2, 1, 1, 1, 1, 1};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng gen(seed);
    const TableDocument root = random_table(gen, {.withPixels = false, .minRows = 2, .minCols = 2});
    Rng rng(seed + 100);
    ExploreStats stats;
    const NodeSet nodes = explore_tree(root, cfg, rng, {}, &stats);
    ASSERT_EQ(stats.maxChildrenPerParent.size(), stats.nodesAtDepth.size());
    for (std::size_t k = 1; k < stats.maxChildrenPerParent.size(); ++k) {
      EXPECT_LE(stats.maxChildrenPerParent[k], widths[k - 1]);
      EXPECT_LE(stats.nodesAtDepth[k], stats.nodesAtDepth[k - 1] * widths[k - 1]);
    }
    for (const AugNode& n : nodes) {
      EXPECT_GE(n.depth, 6);
      EXPECT_LE(n.depth, 10);
      EXPECT_EQ(static_cast<int>(n.path.size()), n.depth);
      EXPECT_LE(n.doc.width, 1.5 * root.width);
      EXPECT_LE(n.doc.height, 1.5 * root.height);
      EXPECT_TRUE(is_valid(n.doc));
      EXPECT_EQ(n.category, categorize(n.doc.row_count(), n.doc.column_count()));
    }
  }
}

TEST(ExploreTree, FullTreeOnGenerousGrid) {
  Rng rng(7);
  ExploreStats stats;
  const NodeSet nodes = explore_tree(grid_table(8, 8), {}, rng, {}, &stats);
  // 8*4*2*2*2 = 256 nodes at depth 5, then one child each for depths 6..10.
  EXPECT_LE(nodes.size(), 5u * 256u);
  EXPECT_FALSE(nodes.empty());
}

TEST(ExploreTree, DeterministicForSeed) {
  const TableDocument root = grid_table(5, 6);
  Rng a(42), b(42);
  const NodeSet x = explore_tree(root, {}, a);
  const NodeSet y = explore_tree(root, {}, b);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].path, y[i].path);
    EXPECT_EQ(x[i].doc, y[i].doc);
  }
}

TEST(ExploreTree, MaterializeMatchesGeometryAndCarriesPixels) {
  const TableDocument root = grid_table(4, 4, 10, true);
  Rng rng(3);
  const NodeSet nodes = explore_tree(root, {}, rng);
  ASSERT_FALSE(nodes.empty());
  for (const AugNode& n : nodes) {
    const TableDocument full = materialize(root, n);
    EXPECT_TRUE(full.has_pixels());
    EXPECT_EQ(full.geometry(), n.doc);
    EXPECT_TRUE(is_valid(full));
  }
}

TEST(ExploreTree, RejectsBadConfig) {
  Rng rng(0);
  TreeConfig cfg;
  cfg.keepDepthMax = 11;
  EXPECT_THROW(explore_tree(grid_table(2, 2), cfg, rng), std::invalid_argument);
  cfg = {};
  cfg.maxWidthByDepth.erase(3);
  EXPECT_THROW(cfg.check(), std::invalid_argument);
}

TEST(Frequencies, CountsByCategory) {
  const std::vector<TableDocument> tables{grid_table(4, 5), grid_table(4, 5), grid_table(20, 12)};
  const CategoryGrid g = global_frequency(tables);
  EXPECT_EQ(g[*parse_category("B2")], 2.0);
  EXPECT_EQ(g[*parse_category("E4")], 1.0);
  EXPECT_EQ(g.sum(), 3.0);

  NodeSet nodes(3);
  nodes[0].category = *parse_category("A1");
  nodes[1].category = *parse_category("A1");
  nodes[2].category = *parse_category("C2");
  const CategoryGrid f = node_frequency(nodes);
  EXPECT_EQ(f[*parse_category("A1")], 2.0);
  EXPECT_EQ(f[*parse_category("C2")], 1.0);
}

NodeSet labelled(const std::vector<std::string>& names) {
  NodeSet nodes;
  for (const auto& n : names) {
    AugNode node;
    node.category = *parse_category(n);
    nodes.push_back(node);
  }
  return nodes;
}

TEST(SampleNode, SingleNodeAlwaysReturned) {
  const NodeSet nodes = labelled({"C3"});
  ProbabilityGrid p;
  p[nodes[0].category] = 1.0;
  Rng rng(1);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(&sample_node(nodes, p, rng), &nodes[0]);
}

TEST(SampleNode, UniformWithinCategory) {
  const NodeSet nodes = labelled({"B2", "B2", "B2", "B2"});
  ProbabilityGrid p;
  p[*parse_category("B2")] = 1.0;
  NodeSampler sampler(nodes, p);
  Rng rng(11);
  std::array<int, 4> hits{};
  const int draws = 30000;
  for (int i = 0; i < draws; ++i) ++hits[sampler.draw_index(rng)];
  for (int h : hits) EXPECT_NEAR(static_cast<double>(h) / draws, 0.25, 0.02);
}

TEST(SampleNode, MassOnEmptyCategoryIsAnError) {
  const NodeSet nodes = labelled({"A1"});
  ProbabilityGrid p;
  p[*parse_category("A1")] = 0.5;
  p[*parse_category("B1")] = 0.5;
  Rng rng(0);
  EXPECT_THROW(sample_node(nodes, p, rng), std::logic_error);
  EXPECT_THROW(sample_node({}, p, rng), std::invalid_argument);
}

TEST(TableDistribution, ZeroOutsideNodeCategories) {
  const TableDocument root = grid_table(5, 5);
  Rng rng(8);
  const NodeSet nodes = explore_tree(root, {}, rng);
  ASSERT_FALSE(nodes.empty());
  CategoryGrid global;
  for (int b = 0; b < kRowBins; ++b) {
    for (int j = 0; j < kColBins; ++j) global.at(b, j) = 1.0;
  }
  const ProbabilityGrid p = table_distribution(root, nodes, global, 1.0);
  const CategoryGrid fi = node_frequency(nodes);
  EXPECT_NEAR(p.sum(), 1.0, 1e-9);
  for (int i = 0; i < ProbabilityGrid::kSize; ++i) {
    if (fi.values()[i] == 0.0) EXPECT_EQ(p.values()[i], 0.0);
  }
}

TEST(TrainingStream, NeverAugmentsAtZeroProbability) {
  const NodeSet nodes = labelled({"A1"});
  ProbabilityGrid p;
  p[*parse_category("A1")] = 1.0;
  TrainingStream stream(grid_table(2, 2), nodes, p, Rng(3), 0.0);
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(stream.next_index());
}

TEST(TrainingStream, EmptyNodesYieldOriginal) {
  const TableDocument t = grid_table(1, 1, 10, true);
  TrainingStream stream(t, {}, std::nullopt, Rng(3), 1.0);
  for (int i = 0; i < 20; ++i) {
    const auto d = stream.next();
    EXPECT_FALSE(d.node);
    EXPECT_EQ(d.doc, t);
  }
}

TEST(TrainingStream, AugmentFractionMatchesProbability) {
  const NodeSet nodes = labelled({"A1", "A2"});
  ProbabilityGrid p;
  p[*parse_category("A1")] = 0.5;
  p[*parse_category("A2")] = 0.5;
  TrainingStream stream(grid_table(2, 2), nodes, p, Rng(17), 0.5);
  int augmented = 0;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) augmented += stream.next_index().has_value();
  EXPECT_NEAR(static_cast<double>(augmented) / draws, 0.5, 0.02);
}

TEST(TrainingStream, RejectsBadProbability) {
  EXPECT_THROW(TrainingStream(grid_table(1, 1), {}, std::nullopt, Rng(0), 1.5), std::invalid_argument);
}

}  // namespace
}  // namespace tabaug
