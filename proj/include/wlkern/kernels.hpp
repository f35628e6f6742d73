// Copyright 2026 The wlkern Authors
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
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "wlkern/refinement.hpp"

namespace wlkern {

/// Sparse histogram of feature codes (color ids for WL kernels, packed
/// structural codes for the baselines). Counts are strictly positive.
struct FeatureVector {
  std::map<std::uint64_t, std::int64_t> counts;
  std::int64_t total = 0;

  void add(std::uint64_t code, std::int64_t count = 1);

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// Histograms of iterations 0..h concatenated into one sparse vector; the
/// dictionary never reuses ids across iterations, so a single map realizes
/// the concatenation. The dictionary must be shared across every graph whose
/// features will be compared.
FeatureVector wl_feature_vector(const Graph& g, Algorithm algorithm,
                                std::uint32_t k, std::size_t iterations,
                                ColorDictionary& dict,
                                const RefineOptions& options = {});

/// Dataset-level variant: refines all graphs in lockstep per iteration
/// against the shared dictionary.
struct FeatureBatch {
  std::vector<FeatureVector> features;
  std::vector<std::uint64_t> neighbor_inspections;  // per step, all graphs
  std::uint64_t total_inspections() const;
};

FeatureBatch wl_feature_batch(std::span<const Graph> graphs,
                              Algorithm algorithm, std::uint32_t k,
                              std::size_t iterations, ColorDictionary& dict,
                              const RefineOptions& options = {});

/// Counts connected induced 3-vertex subgraphs (triangles and paths),
/// refined by vertex labels.
FeatureVector graphlet3_features(const Graph& g);

/// Counts unordered vertex pairs by (smaller endpoint label, larger endpoint
/// label, exact unweighted distance >= 1); pairs at infinite distance are
/// dropped.
FeatureVector shortest_path_features(const Graph& g);

/// Dense symmetric matrix of pairwise kernel values. Unnormalized entries
/// are exact 64-bit integer inner products; normalized entries are doubles
/// with unit diagonal.
struct GramMatrix {
  std::size_t size = 0;
  bool normalized = false;
  std::vector<std::int64_t> counts;  // row-major, when !normalized
  std::vector<double> values;        // row-major, when normalized

  std::int64_t count_at(std::size_t i, std::size_t j) const {
    return counts[i * size + j];
  }
  double at(std::size_t i, std::size_t j) const {
    return normalized ? values[i * size + j]
                      : static_cast<double>(counts[i * size + j]);
  }
};

/// Pairwise sparse inner products in exact integer arithmetic; throws
/// Overflow if a product or sum leaves 64 bits.
GramMatrix gram_matrix(std::span<const FeatureVector> features);

/// entry(i,j) / sqrt(entry(i,i) * entry(j,j)). A graph with an empty feature
/// vector gets 1 on the diagonal and 0 elsewhere.
GramMatrix normalize_gram(const GramMatrix& m);

/// Text format: first line N, then N lines of N space-separated values;
/// normalized matrices print 17 significant digits, unnormalized ones exact
/// integers.
void write_gram_matrix(std::ostream& out, const GramMatrix& m);
void write_gram_matrix(const std::filesystem::path& path, const GramMatrix& m);

/// One class label per line.
void write_class_labels(const std::filesystem::path& path,
                        std::span<const Label> labels);

/// One line per graph: "code:count" pairs sorted by code, space-separated.
void write_feature_dump(std::ostream& out,
                        std::span<const FeatureVector> features);
void write_feature_dump(const std::filesystem::path& path,
                        std::span<const FeatureVector> features);

}  // namespace wlkern
