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

#include "wlkern/graph.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace wlkern;
using namespace wlkern::testutil;

namespace {

// Independent oracle: the component map v_i -> w_i is an isomorphism of the
// ordered labeled induced subgraphs.
bool ordered_tuples_isomorphic(const Graph& g, const std::vector<Vertex>& a,
                               const Graph& h, const std::vector<Vertex>& b) {
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (g.vertex_label(a[i]) != h.vertex_label(b[i])) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
      if (a[i] == a[j]) continue;
      if (g.has_edge(a[i], a[j]) != h.has_edge(b[i], b[j])) return false;
      if (g.has_edge(a[i], a[j]) &&
          g.edge_label(a[i], a[j]) != h.edge_label(b[i], b[j])) {
        return false;
      }
    }
  }
  return true;
}

TupleIndex tuple(const Graph& g, std::initializer_list<Vertex> comps) {
  std::vector<Vertex> v(comps);
  return tuple_from_components(v, g.num_vertices());
}

}  // namespace

TEST_CASE("from_edge_list builds sorted symmetric adjacency") {
  const Graph p3 = path_graph(3);
  CHECK(p3.degree(0) == 1);
  CHECK(p3.degree(1) == 2);
  CHECK(p3.degree(2) == 1);
  CHECK(p3.num_edges() == 2);

  const Graph single = Graph::from_edge_list(1, {});
  CHECK(single.num_vertices() == 1);
  CHECK(single.degree(0) == 0);

  const Graph c6 = cycle_graph(6);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

  // Symmetry and strict sortedness.
  for (Vertex v = 0; v < 6; ++v) {
    auto nbrs = c6.neighbors(v);
    for (std::size_t i = 0; i + 1 < nbrs.size(); ++i) {
      CHECK(nbrs[i] < nbrs[i + 1]);
    }
    for (Vertex w : nbrs) CHECK(c6.has_edge(w, v));
  }
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), Error);
  try {
    Graph::from_edge_list(2, {{0, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRangeVertex);
  }
  try {
    Graph::from_edge_list(2, {{1, 1}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoop);
  }
  try {
    Graph::from_edge_list(2, {{0, 1}, {1, 0}}, {}, {7, 8});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConflictingEdgeLabel);
  }
  // Duplicates with agreeing labels collapse.
  const Graph g = Graph::from_edge_list(2, {{0, 1}, {1, 0}}, {}, {7, 7});
  CHECK(g.num_edges() == 1);
  CHECK(g.edge_label(0, 1) == 7);
}

TEST_CASE("tuple index round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = std::uniform_int_distribution<Vertex>(1, 9)(rng);
    const std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
    std::vector<Vertex> comps(k);
    for (Vertex& c : comps) {
      c = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    }
    const TupleIndex t = tuple_from_components(comps, n);
    CHECK(tuple_components(t) == comps);
    for (std::uint32_t j = 1; j <= k; ++j) {
      CHECK(tuple_component(t, j) == comps[j - 1]);
    }
  }
}

TEST_CASE("phi replaces a single component") {
  const Graph g = complete_graph(5);
  const TupleIndex t = tuple(g, {0, 1, 2});
  CHECK(tuple_components(phi(t, 3, 4)) == std::vector<Vertex>{0, 1, 4});
  CHECK(tuple_components(phi(t, 1, 4)) == std::vector<Vertex>{4, 1, 2});
  // Replacing a component with itself is the identity.
  const TupleIndex s = tuple(g, {3, 1});
  CHECK(phi(s, 1, 3) == s);
  CHECK(phi(s, 2, 1) == s);
}

TEST_CASE("atomic types separate exactly the ordered isomorphism classes") {
  const Graph k3 = complete_graph(3);
  CHECK(atomic_type(k3, tuple(k3, {0, 1})) == atomic_type(k3, tuple(k3, {1, 2})));

  const Graph p3 = path_graph(3);
  CHECK_FALSE(atomic_type(p3, tuple(p3, {0, 2})) ==
              atomic_type(p3, tuple(p3, {0, 1})));

  const Graph k3l = complete_graph(3, {1, 1, 2});
  CHECK_FALSE(atomic_type(k3l, tuple(k3l, {0, 1})) ==
              atomic_type(k3l, tuple(k3l, {0, 2})));

  // Oracle sweep: group every 2-tuple of a few graphs by the brute-force
  // ordered-isomorphism relation and compare with code equality.
  std::mt19937_64 rng(13);
  std::vector<Graph> graphs;
  graphs.push_back(k3l);
  graphs.push_back(path_graph(4));
  graphs.push_back(random_graph(5, 0.5, rng, 2));
  graphs.push_back(random_graph(6, 0.4, rng));
  for (const Graph& g : graphs) {
    const Vertex n = g.num_vertices();
    std::vector<std::vector<Vertex>> tuples;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) tuples.push_back({a, b});
    }
    for (const auto& a : tuples) {
      for (const auto& b : tuples) {
        const bool by_code =
            atomic_type(g, tuple_from_components(a, n)) ==
            atomic_type(g, tuple_from_components(b, n));
        CHECK(by_code == ordered_tuples_isomorphic(g, a, g, b));
      }
    }
  }
}

TEST_CASE("atomic types are invariant under relabeling") {
  std::mt19937_64 rng(99);
  const Graph g = random_graph(6, 0.5, rng, 2);
  const auto perm = random_permutation(6, rng);
  const Graph pg = permute_graph(g, perm);
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = 0; b < 6; ++b) {
      std::vector<Vertex> t{a, b};
      std::vector<Vertex> pt{perm[a], perm[b]};
      CHECK(atomic_type(g, tuple_from_components(t, 6)) ==
            atomic_type(pg, tuple_from_components(pt, 6)));
    }
  }
}

TEST_CASE("local neighbor flag is adjacency of the replaced component") {
  const Graph c6 = cycle_graph(6);
  const TupleIndex t = tuple(c6, {0, 1});
  CHECK(is_local_neighbor(c6, t, 1, 5) == NeighborFlag::Local);
  CHECK(is_local_neighbor(c6, t, 1, 3) == NeighborFlag::Global);
  // No self-loops: a component is never its own neighbor.
  CHECK(is_local_neighbor(c6, t, 1, 0) == NeighborFlag::Global);
  CHECK(is_local_neighbor(c6, t, 2, 1) == NeighborFlag::Global);
}
