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

#include "wlkern/kernels.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "wlkern/theory_oracle.hpp"

using namespace wlkern;
using namespace wlkern::testutil;

TEST_CASE("wl feature vector basics") {
  const Graph k2 = complete_graph(2);
  ColorDictionary dict;
  const FeatureVector f = wl_feature_vector(k2, Algorithm::WL1, 1, 0, dict);
  CHECK(f.counts.size() == 1);
  CHECK(f.counts.begin()->second == 2);
  CHECK(f.total == 2);
}

TEST_CASE("wl feature totals count every tuple once per iteration") {
  std::mt19937_64 rng(5);
  const Graph g = random_graph(6, 0.4, rng, 2);
  ColorDictionary dict;
  const FeatureVector f =
      wl_feature_vector(g, Algorithm::DKLWL, 2, 3, dict);
  CHECK(f.total == 4 * 36);  // (h+1) * n^k
  for (const auto& [code, count] : f.counts) CHECK(count > 0);
}

TEST_CASE("wl1 feature work is linear in iterations times edges") {
  std::mt19937_64 rng(7);
  const Graph g = random_graph(12, 0.3, rng);
  ColorDictionary dict;
  const Graph graphs[1] = {g};
  const FeatureBatch batch =
      wl_feature_batch({graphs, 1}, Algorithm::WL1, 1, 4, dict);
  REQUIRE(batch.neighbor_inspections.size() == 4);
  for (std::uint64_t i : batch.neighbor_inspections) {
    CHECK(i == 2 * g.num_edges());
  }
  CHECK(batch.total_inspections() == 4 * 2 * g.num_edges());
}

TEST_CASE("isomorphic graphs get identical feature vectors") {
  std::mt19937_64 rng(11);
  const Graph g = random_graph(7, 0.4, rng, 2);
  const Graph pg = permute_graph(g, random_permutation(7, rng));
  for (Algorithm alg :
       {Algorithm::WL1, Algorithm::KWL, Algorithm::DKWL, Algorithm::DKLWL}) {
    const std::uint32_t k = alg == Algorithm::WL1 ? 1 : 2;
    ColorDictionary dict;
    const FeatureVector a = wl_feature_vector(g, alg, k, 3, dict);
    const FeatureVector b = wl_feature_vector(pg, alg, k, 3, dict);
    CHECK(a == b);
  }
  CHECK(graphlet3_features(g) == graphlet3_features(pg));
  CHECK(shortest_path_features(g) == shortest_path_features(pg));
}

TEST_CASE("graphlet3 counts") {
  const FeatureVector k3 = graphlet3_features(complete_graph(3));
  CHECK(k3.total == 1);
  CHECK((k3.counts.begin()->first >> 60) == 1);  // one triangle

  const FeatureVector p3 = graphlet3_features(path_graph(3));
  CHECK(p3.total == 1);
  CHECK((p3.counts.begin()->first >> 60) == 0);  // one path

  const FeatureVector c6 = graphlet3_features(cycle_graph(6));
  CHECK(c6.total == 6);
  CHECK(c6.counts.size() == 1);
  CHECK((c6.counts.begin()->first >> 60) == 0);  // six paths, no triangle

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(8, 0.4, rng, trial % 2 ? 3 : 0);
    CHECK(graphlet3_features(g).counts == graphlet3_oracle_counts(g));
  }
  for (unsigned n = 3; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      CHECK(graphlet3_features(g).counts == graphlet3_oracle_counts(g));
    }
  }
}

TEST_CASE("shortest-path features") {
  const FeatureVector k2 = shortest_path_features(complete_graph(2));
  CHECK(k2.total == 1);
  CHECK(k2.counts.count((0ull << 44) | (0ull << 24) | 1) == 1);

  const FeatureVector p3 = shortest_path_features(path_graph(3));
  CHECK(p3.counts.at((0ull << 44) | (0ull << 24) | 1) == 2);
  CHECK(p3.counts.at((0ull << 44) | (0ull << 24) | 2) == 1);
  CHECK(p3.total == 3);

  const FeatureVector isolated =
      shortest_path_features(Graph::from_edge_list(2, {}));
  CHECK(isolated.total == 0);
  CHECK(isolated.counts.empty());

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(8, 0.3, rng, trial % 2 ? 2 : 0);
    CHECK(shortest_path_features(g).counts == shortest_path_oracle_counts(g));
  }
}

TEST_CASE("feature batches are identical at any worker count") {
  std::mt19937_64 rng(23);
  std::vector<Graph> graphs;
  for (int i = 0; i < 6; ++i) graphs.push_back(random_graph(9, 0.4, rng, 2));
  ColorDictionary d1, d2;
  RefineOptions parallel;
  parallel.workers = 3;
  const FeatureBatch serial =
      wl_feature_batch(graphs, Algorithm::DKWL, 2, 3, d1);
  const FeatureBatch threaded =
      wl_feature_batch(graphs, Algorithm::DKWL, 2, 3, d2, parallel);
  CHECK(serial.features == threaded.features);
  CHECK(serial.neighbor_inspections == threaded.neighbor_inspections);
}

TEST_CASE("gram matrix entries are exact sparse dot products") {
  FeatureVector a;
  a.add(7, 2);
  FeatureVector b;
  b.add(7, 2);
  FeatureVector c;
  c.add(9, 5);
  const FeatureVector features[3] = {a, b, c};
  const GramMatrix m = gram_matrix({features, 3});
  CHECK(m.count_at(0, 1) == 4);
  CHECK(m.count_at(0, 2) == 0);
  CHECK(m.count_at(2, 2) == 25);

  // Dense densify-and-multiply oracle on random graph features.
  std::mt19937_64 rng(19);
  std::vector<FeatureVector> fv;
  ColorDictionary dict;
  for (int i = 0; i < 3; ++i) {
    fv.push_back(wl_feature_vector(random_graph(6, 0.4, rng), Algorithm::WL1,
                                   1, 2, dict));
  }
  const GramMatrix gm = gram_matrix(fv);
  std::uint64_t max_code = 0;
  for (const auto& f : fv) {
    if (!f.counts.empty()) max_code = std::max(max_code, f.counts.rbegin()->first);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::int64_t dense = 0;
      for (std::uint64_t code = 0; code <= max_code; ++code) {
        const auto it1 = fv[i].counts.find(code);
        const auto it2 = fv[j].counts.find(code);
        if (it1 != fv[i].counts.end() && it2 != fv[j].counts.end()) {
          dense += it1->second * it2->second;
        }
      }
      CHECK(gm.count_at(i, j) == dense);
      CHECK(gm.count_at(i, j) == gm.count_at(j, i));
    }
  }
}

TEST_CASE("gram matrix detects 64-bit overflow") {
  FeatureVector huge;
  huge.add(1, std::int64_t{1} << 40);
  const FeatureVector features[2] = {huge, huge};
  CHECK_THROWS_AS(gram_matrix({features, 2}), Error);
}

TEST_CASE("normalization yields a unit diagonal and handles empty rows") {
  GramMatrix m;
  m.size = 2;
  m.counts = {4, 2, 2, 1};
  const GramMatrix n = normalize_gram(m);
  CHECK(n.at(0, 0) == 1.0);
  CHECK(n.at(1, 1) == 1.0);
  CHECK(n.at(0, 1) == doctest::Approx(1.0));
  CHECK(n.at(1, 0) == doctest::Approx(1.0));

  GramMatrix z;
  z.size = 2;
  z.counts = {9, 0, 0, 0};  // second graph has an empty feature vector
  const GramMatrix nz = normalize_gram(z);
  CHECK(nz.at(1, 1) == 1.0);
  CHECK(nz.at(0, 1) == 0.0);

  CHECK_THROWS_AS(normalize_gram(n), Error);
}

TEST_CASE("gram and feature dump text formats") {
  GramMatrix m;
  m.size = 2;
  m.counts = {4, 2, 2, 1};
  std::ostringstream raw;
  write_gram_matrix(raw, m);
  CHECK(raw.str() == "2\n4 2\n2 1\n");

  std::ostringstream norm;
  write_gram_matrix(norm, normalize_gram(m));
  CHECK(norm.str() == "2\n1 1\n1 1\n");

  FeatureVector f;
  f.add(3, 2);
  f.add(11, 1);
  const FeatureVector features[1] = {f};
  std::ostringstream dump;
  write_feature_dump(dump, {features, 1});
  CHECK(dump.str() == "3:2 11:1\n");
}
