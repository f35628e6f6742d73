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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "wlkern/graph.hpp"

namespace wlkern::testutil {

inline Graph path_graph(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, edges);
}

inline Graph complete_graph(Vertex n,
                            const std::vector<Label>& vertex_labels = {}) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges, vertex_labels);
}

inline Graph star_graph(Vertex leaves) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(leaves + 1, edges);
}

// Two disjoint triangles on six vertices.
inline Graph two_triangles() {
  return Graph::from_edge_list(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

inline std::vector<Vertex> random_permutation(Vertex n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph random_graph(Vertex n, double p, std::mt19937_64& rng,
                          unsigned label_alphabet = 0) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<Label> labels;
  if (label_alphabet > 0) {
    std::uniform_int_distribution<Label> pick(0, label_alphabet - 1);
    labels.resize(n);
    for (Label& l : labels) l = pick(rng);
  }
  return Graph::from_edge_list(n, edges, labels);
}

// Brute-force oracle: classify every 3-subset by its induced edges; codes
// match the graphlet3_features packing.
inline std::map<std::uint64_t, std::int64_t> graphlet3_oracle_counts(
    const Graph& g) {
  std::map<std::uint64_t, std::int64_t> out;
  const Vertex n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        const bool ab = g.has_edge(a, b);
        const bool ac = g.has_edge(a, c);
        const bool bc = g.has_edge(b, c);
        const int edges = ab + ac + bc;
        if (edges < 2) continue;
        if (edges == 3) {
          std::uint64_t l[3] = {static_cast<std::uint64_t>(g.vertex_label(a)),
                                static_cast<std::uint64_t>(g.vertex_label(b)),
                                static_cast<std::uint64_t>(g.vertex_label(c))};
          std::sort(l, l + 3);
          ++out[(std::uint64_t{1} << 60) | (l[0] << 40) | (l[1] << 20) | l[2]];
        } else {
          Vertex center = a, u = b, v = c;
          if (ab && bc) {
            center = b;
            u = a;
            v = c;
          } else if (ac && bc) {
            center = c;
            u = a;
            v = b;
          }
          std::uint64_t lu = static_cast<std::uint64_t>(g.vertex_label(u));
          std::uint64_t lv = static_cast<std::uint64_t>(g.vertex_label(v));
          if (lu > lv) std::swap(lu, lv);
          ++out[(static_cast<std::uint64_t>(g.vertex_label(center)) << 40) |
                (lu << 20) | lv];
        }
      }
    }
  }
  return out;
}

// Floyd-Warshall oracle matching the shortest_path_features packing.
inline std::map<std::uint64_t, std::int64_t> shortest_path_oracle_counts(
    const Graph& g) {
  const Vertex n = g.num_vertices();
  constexpr std::uint32_t inf = UINT32_MAX / 2;
  std::vector<std::uint32_t> dist(std::size_t{n} * n, inf);
  for (Vertex v = 0; v < n; ++v) dist[std::size_t{v} * n + v] = 0;
  for (auto [u, v] : g.edges()) {
    dist[std::size_t{u} * n + v] = 1;
    dist[std::size_t{v} * n + u] = 1;
  }
  for (Vertex m = 0; m < n; ++m) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        dist[std::size_t{u} * n + v] =
            std::min(dist[std::size_t{u} * n + v],
                     dist[std::size_t{u} * n + m] + dist[std::size_t{m} * n + v]);
      }
    }
  }
  std::map<std::uint64_t, std::int64_t> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist[std::size_t{u} * n + v] >= inf) continue;
      std::uint64_t lu = static_cast<std::uint64_t>(g.vertex_label(u));
      std::uint64_t lv = static_cast<std::uint64_t>(g.vertex_label(v));
      if (lu > lv) std::swap(lu, lv);
      ++out[(lu << 44) | (lv << 24) | dist[std::size_t{u} * n + v]];
    }
  }
  return out;
}

// Smallest eigenvalue of a dense symmetric matrix by cyclic Jacobi sweeps.
inline double smallest_eigenvalue_symmetric(std::vector<double> a,
                                            std::size_t n) {
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    }
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::fabs(apq) < 1e-300) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = a[p * n + i];
          const double aqi = a[q * n + i];
          a[p * n + i] = c * api - s * aqi;
          a[q * n + i] = s * api + c * aqi;
        }
      }
    }
  }
  double min_ev = a[0];
  for (std::size_t i = 1; i < n; ++i) min_ev = std::min(min_ev, a[i * n + i]);
  return min_ev;
}

}  // namespace wlkern::testutil
