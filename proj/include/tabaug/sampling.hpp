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

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tabaug/categories.hpp"
#include "tabaug/rng.hpp"
#include "tabaug/tree.hpp"

namespace tabaug {

/// Two-stage sampler: category from P, then a uniform node within it.
class NodeSampler {
public:
  /// Throws std::logic_error when P puts mass on a category with no nodes.
  NodeSampler(const NodeSet& nodes, const ProbabilityGrid& p) : p_(p) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Category c = nodes[i].category;
      byCategory_[c.rowBin * kColBins + c.colBin].push_back(i);
    }
    for (int i = 0; i < ProbabilityGrid::kSize; ++i) {
      const double mass = p.values()[i];
      if (mass > 0.0 && byCategory_[i].empty()) {
        throw std::logic_error("sampling distribution puts mass on empty category " +
                               ProbabilityGrid::category_at(i).name());
      }
      if (mass > 0.0) lastPositive_ = i;
    }
    if (lastPositive_ < 0) throw EmptyDistribution();
  }

  Category draw_category(Rng& rng) const {
    const auto& v = p_.values();
    const double u = rng.uniform_real() * p_.sum();
    double acc = 0.0;
    for (int i = 0; i < ProbabilityGrid::kSize; ++i) {
      if (v[i] <= 0.0) continue;
      acc += v[i];
      if (u < acc) return ProbabilityGrid::category_at(i);
    }
    return ProbabilityGrid::category_at(lastPositive_);
  }

  /// Index into the NodeSet this sampler was built from.
  std::size_t draw_index(Rng& rng) const {
    const Category c = draw_category(rng);
    const auto& members = byCategory_[c.rowBin * kColBins + c.colBin];
    return members[rng.uniform_index(members.size())];
  }

private:
  ProbabilityGrid p_;
  std::array<std::vector<std::size_t>, ProbabilityGrid::kSize> byCategory_;
  int lastPositive_ = -1;
};

inline const AugNode& sample_node(const NodeSet& nodes, const ProbabilityGrid& p, Rng& rng) {
  if (nodes.empty()) throw std::invalid_argument("sample_node: empty NodeSet");
  return nodes[NodeSampler(nodes, p).draw_index(rng)];
}

/// Sampling distribution for one table: a Gaussian around the table's own
/// category times the global and per-table frequencies.
inline ProbabilityGrid table_distribution(const TableDocument& table, const NodeSet& nodes,
                                          const CategoryGrid& global, double sigma,
                                          const CategoryBins& bins = {}) {
  const Category center = categorize(table.row_count(), table.column_count(), bins);
  return build_distribution(gaussian_grid(center, sigma), global, node_frequency(nodes));
}

/// Endless stream of training samples for one table: the original with
/// probability 1 - pAugment, otherwise a sampled node materialized from
/// the original's pixels. Every draw consumes one uniform for the
/// augment/original decision, so streams with and without nodes stay
/// aligned.
class TrainingStream {
public:
  struct Draw {
    std::optional<std::size_t> node;  // empty for the original table
    TableDocument doc;
  };

  /// `p` may be empty (or nodes empty), in which case the stream always
  /// yields the original.
  TrainingStream(TableDocument table, NodeSet nodes, std::optional<ProbabilityGrid> p, Rng rng, double pAugment)
      : table_(std::make_shared<const TableDocument>(std::move(table))),
        nodes_(std::make_shared<const NodeSet>(std::move(nodes))),
        rng_(rng),
        pAugment_(pAugment) {
    if (!(pAugment >= 0.0 && pAugment <= 1.0)) throw std::invalid_argument("pAugment must be in [0, 1]");
    if (p && !nodes_->empty()) sampler_.emplace(*nodes_, *p);
  }

  /// Index of the next draw without materializing it.
  std::optional<std::size_t> next_index() {
    const double u = rng_.uniform_real();
    if (!sampler_ || !(u < pAugment_)) return std::nullopt;
    return sampler_->draw_index(rng_);
  }

  Draw next() {
    auto idx = next_index();
    if (!idx) return {std::nullopt, *table_};
    return {idx, materialize(*table_, (*nodes_)[*idx])};
  }

  const TableDocument& table() const { return *table_; }
  const NodeSet& nodes() const { return *nodes_; }

private:
  std::shared_ptr<const TableDocument> table_;
  std::shared_ptr<const NodeSet> nodes_;
  std::optional<NodeSampler> sampler_;
  Rng rng_;
  double pAugment_;
};

}  // namespace tabaug
