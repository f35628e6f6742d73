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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <numeric>
#include <string>

namespace wlkern {

namespace {

constexpr std::uint64_t kMaxPackedLabel = std::uint64_t{1} << 20;

std::uint64_t packed_label(const Graph& g, Vertex v) {
  const Label l = g.vertex_label(v);
  if (l < 0 || static_cast<std::uint64_t>(l) >= kMaxPackedLabel) {
    throw Error(ErrorCode::InvalidArgument,
                "baseline kernels require dense labels in [0, 2^20): got " +
                    std::to_string(l));
  }
  return static_cast<std::uint64_t>(l);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::MissingFile,
                "cannot open " + path.string() + " for writing");
  }
  return out;
}

}  // namespace

void FeatureVector::add(std::uint64_t code, std::int64_t count) {
  if (count == 0) return;
  counts[code] += count;
  total += count;
}

std::uint64_t FeatureBatch::total_inspections() const {
  return std::accumulate(neighbor_inspections.begin(),
                         neighbor_inspections.end(), std::uint64_t{0});
}

FeatureBatch wl_feature_batch(std::span<const Graph> graphs,
                              Algorithm algorithm, std::uint32_t k,
                              std::size_t iterations, ColorDictionary& dict,
                              const RefineOptions& options) {
  FeatureBatch batch;
  batch.features.resize(graphs.size());
  std::vector<const Graph*> ptrs;
  ptrs.reserve(graphs.size());
  for (const Graph& g : graphs) ptrs.push_back(&g);
  // Exactly iterations+1 histograms per graph, stable or not: a graph that
  // stabilized early keeps receiving fresh per-iteration ids, consistently
  // with the rest of the dataset.
  //
  // Ids grow monotonically across iterations, so sorted per-iteration runs
  // append at the end of each graph's histogram.
  std::vector<ColorId> scratch;
  LockstepResult res = refine_lockstep(
      ptrs, algorithm, k, iterations, /*stop_when_stable=*/false, dict,
      options,
      [&batch, &scratch](std::size_t, std::size_t gi,
                         std::span<const ColorId> colors) {
        scratch.assign(colors.begin(), colors.end());
        std::sort(scratch.begin(), scratch.end());
        FeatureVector& f = batch.features[gi];
        for (std::size_t i = 0; i < scratch.size();) {
          std::size_t j = i;
          while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
          f.counts.emplace_hint(f.counts.end(), scratch[i],
                                static_cast<std::int64_t>(j - i));
          i = j;
        }
        f.total += static_cast<std::int64_t>(colors.size());
      });
  batch.neighbor_inspections = std::move(res.neighbor_inspections);
  return batch;
}

FeatureVector wl_feature_vector(const Graph& g, Algorithm algorithm,
                                std::uint32_t k, std::size_t iterations,
                                ColorDictionary& dict,
                                const RefineOptions& options) {
  FeatureBatch batch = wl_feature_batch({&g, 1}, algorithm, k, iterations,
                                        dict, options);
  return std::move(batch.features.front());
}

FeatureVector graphlet3_features(const Graph& g) {
  // Every connected 3-set is either a path (counted once, at its center) or
  // a triangle (seen from all three centers, divided out below).
  FeatureVector triangles;
  FeatureVector out;
  const Vertex n = g.num_vertices();
  for (Vertex center = 0; center < n; ++center) {
    const auto nbrs = g.neighbors(center);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        const Vertex u = nbrs[a];
        const Vertex v = nbrs[b];
        if (g.has_edge(u, v)) {
          std::uint64_t l[3] = {packed_label(g, center), packed_label(g, u),
                                packed_label(g, v)};
          std::sort(l, l + 3);
          triangles.add((std::uint64_t{1} << 60) | (l[0] << 40) | (l[1] << 20) |
                        l[2]);
        } else {
          const std::uint64_t lc = packed_label(g, center);
          std::uint64_t lu = packed_label(g, u);
          std::uint64_t lv = packed_label(g, v);
          if (lu > lv) std::swap(lu, lv);
          out.add((lc << 40) | (lu << 20) | lv);
        }
      }
    }
  }
  for (const auto& [code, count] : triangles.counts) {
    out.add(code, count / 3);
  }
  return out;
}

FeatureVector shortest_path_features(const Graph& g) {
  FeatureVector out;
  const Vertex n = g.num_vertices();
  std::vector<std::uint32_t> dist(n);
  std::deque<Vertex> queue;
  constexpr std::uint32_t kUnreached = UINT32_MAX;
  for (Vertex source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[source] = 0;
    queue.clear();
    queue.push_back(source);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex v = source + 1; v < n; ++v) {
      if (dist[v] == kUnreached) continue;
      std::uint64_t lu = packed_label(g, source);
      std::uint64_t lv = packed_label(g, v);
      if (lu > lv) std::swap(lu, lv);
      out.add((lu << 44) | (lv << 24) | dist[v]);
    }
  }
  return out;
}

GramMatrix gram_matrix(std::span<const FeatureVector> features) {
  GramMatrix m;
  m.size = features.size();
  m.normalized = false;
  m.counts.assign(m.size * m.size, 0);
  for (std::size_t i = 0; i < m.size; ++i) {
    for (std::size_t j = i; j < m.size; ++j) {
      std::int64_t dot = 0;
      auto a = features[i].counts.begin();
      const auto a_end = features[i].counts.end();
      auto b = features[j].counts.begin();
      const auto b_end = features[j].counts.end();
      while (a != a_end && b != b_end) {
        if (a->first < b->first) {
          ++a;
        } else if (b->first < a->first) {
          ++b;
        } else {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(a->second, b->second, &prod) ||
              __builtin_add_overflow(dot, prod, &dot)) {
            throw Error(ErrorCode::Overflow, "gram entry exceeds 64 bits");
          }
          ++a;
          ++b;
        }
      }
      m.counts[i * m.size + j] = dot;
      m.counts[j * m.size + i] = dot;
    }
  }
  return m;
}

GramMatrix normalize_gram(const GramMatrix& m) {
  if (m.normalized) {
    throw Error(ErrorCode::InvalidArgument, "matrix is already normalized");
  }
  GramMatrix out;
  out.size = m.size;
  out.normalized = true;
  out.values.assign(m.size * m.size, 0.0);
  for (std::size_t i = 0; i < m.size; ++i) {
    for (std::size_t j = 0; j < m.size; ++j) {
      if (i == j) {
        out.values[i * m.size + j] = 1.0;
        continue;
      }
      const std::int64_t di = m.count_at(i, i);
      const std::int64_t dj = m.count_at(j, j);
      if (di == 0 || dj == 0) continue;  // empty feature vector row
      out.values[i * m.size + j] =
          static_cast<double>(m.count_at(i, j)) /
          std::sqrt(static_cast<double>(di) * static_cast<double>(dj));
    }
  }
  return out;
}

void write_gram_matrix(std::ostream& out, const GramMatrix& m) {
  out << m.size << '\n';
  char buf[64];
  for (std::size_t i = 0; i < m.size; ++i) {
    for (std::size_t j = 0; j < m.size; ++j) {
      if (j) out << ' ';
      if (m.normalized) {
        std::snprintf(buf, sizeof buf, "%.17g", m.values[i * m.size + j]);
        out << buf;
      } else {
        out << m.counts[i * m.size + j];
      }
    }
    out << '\n';
  }
}

void write_gram_matrix(const std::filesystem::path& path,
                       const GramMatrix& m) {
  auto out = open_for_write(path);
  write_gram_matrix(out, m);
}

void write_class_labels(const std::filesystem::path& path,
                        std::span<const Label> labels) {
  auto out = open_for_write(path);
  for (Label l : labels) out << l << '\n';
}

void write_feature_dump(std::ostream& out,
                        std::span<const FeatureVector> features) {
  for (const FeatureVector& f : features) {
    bool first = true;
    for (const auto& [code, count] : f.counts) {
      if (!first) out << ' ';
      out << code << ':' << count;
      first = false;
    }
    out << '\n';
  }
}

void write_feature_dump(const std::filesystem::path& path,
                        std::span<const FeatureVector> features) {
  auto out = open_for_write(path);
  write_feature_dump(out, features);
}

}  // namespace wlkern
