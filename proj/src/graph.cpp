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

#include <algorithm>
#include <bit>
#include <string>

namespace wlkern {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::from_edge_list(Vertex n,
                            const std::vector<std::pair<Vertex, Vertex>>& edges,
                            const std::vector<Label>& vertex_labels,
                            const std::vector<Label>& edge_labels) {
  if (!vertex_labels.empty() && vertex_labels.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex label list does not cover all vertices");
  }
  if (!edge_labels.empty() && edge_labels.size() != edges.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "edge label list does not match edge list length");
  }

  Graph g;
  g.n_ = n;
  g.adjacency_.resize(n);
  g.vertex_labels_ = vertex_labels;

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      throw Error(ErrorCode::OutOfRangeVertex,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") with n = " + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    }
    const std::uint64_t key = edge_key(u, v);
    if (!edge_labels.empty()) {
      auto [it, inserted] = g.edge_labels_.emplace(key, edge_labels[i]);
      if (!inserted && it->second != edge_labels[i]) {
        throw Error(ErrorCode::ConflictingEdgeLabel,
                    "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") labeled " + std::to_string(it->second) + " and " +
                        std::to_string(edge_labels[i]));
      }
      if (!inserted) continue;
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }

  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.num_edges_ += list.size();
  }
  g.num_edges_ /= 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Label Graph::edge_label(Vertex u, Vertex v) const {
  if (edge_labels_.empty()) return 0;
  auto it = edge_labels_.find(edge_key(u, v));
  return it == edge_labels_.end() ? 0 : it->second;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n_;
}

Graph permute_graph(const Graph& g, std::span<const Vertex> perm) {
  const Vertex n = g.num_vertices();
  if (perm.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Label> edge_labels;
  edges.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(perm[u], perm[v]);
    if (g.has_edge_labels()) edge_labels.push_back(g.edge_label(u, v));
  }
  std::vector<Label> vertex_labels;
  if (g.has_vertex_labels()) {
    vertex_labels.resize(n);
    for (Vertex v = 0; v < n; ++v) vertex_labels[perm[v]] = g.vertex_label(v);
  }
  return Graph::from_edge_list(n, edges, vertex_labels, edge_labels);
}

std::uint64_t tuple_space_size(std::uint64_t n, std::uint32_t k) {
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (n != 0 && size > UINT64_MAX / n) {
      throw Error(ErrorCode::SizeLimitExceeded,
                  "n^k does not fit 64 bits (n = " + std::to_string(n) +
                      ", k = " + std::to_string(k) + ")");
    }
    size *= n;
  }
  return size;
}

TupleIndex tuple_from_components(std::span<const Vertex> components, Vertex n) {
  TupleIndex t;
  t.k = static_cast<std::uint32_t>(components.size());
  t.n = n;
  std::uint64_t base = 1;
  for (Vertex c : components) {
    if (c >= n) throw Error(ErrorCode::OutOfRangeVertex, std::to_string(c));
    t.value += c * base;
    base *= n;
  }
  return t;
}

std::vector<Vertex> tuple_components(const TupleIndex& t) {
  std::vector<Vertex> out(t.k);
  std::uint64_t v = t.value;
  for (std::uint32_t i = 0; i < t.k; ++i) {
    out[i] = static_cast<Vertex>(v % t.n);
    v /= t.n;
  }
  return out;
}

Vertex tuple_component(const TupleIndex& t, std::uint32_t position) {
  if (position < 1 || position > t.k) {
    throw Error(ErrorCode::InvalidArgument,
                "tuple position " + std::to_string(position));
  }
  std::uint64_t v = t.value;
  for (std::uint32_t i = 1; i < position; ++i) v /= t.n;
  return static_cast<Vertex>(v % t.n);
}

TupleIndex phi(const TupleIndex& t, std::uint32_t position, Vertex w) {
  if (w >= t.n) throw Error(ErrorCode::OutOfRangeVertex, std::to_string(w));
  const Vertex old = tuple_component(t, position);
  std::uint64_t base = 1;
  for (std::uint32_t i = 1; i < position; ++i) base *= t.n;
  TupleIndex out = t;
  out.value = t.value + (static_cast<std::int64_t>(w) - old) * base;
  return out;
}

void append_atomic_code(const Graph& g, const TupleIndex& t,
                        std::vector<std::uint64_t>& out) {
  const auto comps = tuple_components(t);
  const std::uint32_t k = t.k;
  out.push_back(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    out.push_back(std::bit_cast<std::uint64_t>(g.vertex_label(comps[i])));
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = i + 1; j < k; ++j) {
      const bool equal = comps[i] == comps[j];
      const bool adjacent = !equal && g.has_edge(comps[i], comps[j]);
      out.push_back((equal ? 2u : 0u) | (adjacent ? 1u : 0u));
      out.push_back(adjacent ? std::bit_cast<std::uint64_t>(
                                   g.edge_label(comps[i], comps[j]))
                             : 0);
    }
  }
}

AtomicType atomic_type(const Graph& g, const TupleIndex& t) {
  AtomicType type;
  type.code.reserve(1 + t.k + t.k * (t.k - 1));
  append_atomic_code(g, t, type.code);
  return type;
}

NeighborFlag is_local_neighbor(const Graph& g, const TupleIndex& t,
                               std::uint32_t position, Vertex w) {
  return g.has_edge(tuple_component(t, position), w) ? NeighborFlag::Local
                                                     : NeighborFlag::Global;
}

}  // namespace wlkern
