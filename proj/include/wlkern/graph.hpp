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
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wlkern/error.hpp"

namespace wlkern {

using Vertex = std::uint32_t;
using Label = std::int64_t;

/// Undirected labeled graph with strictly sorted adjacency lists.
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges collapse; a duplicate
  /// that carries a conflicting edge label is rejected. Vertex labels, when
  /// given, must cover all `n` vertices; edge labels, when given, must cover
  /// all edges.
  static Graph from_edge_list(Vertex n,
                              const std::vector<std::pair<Vertex, Vertex>>& edges,
                              const std::vector<Label>& vertex_labels = {},
                              const std::vector<Label>& edge_labels = {});

  Vertex num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  bool has_vertex_labels() const noexcept { return !vertex_labels_.empty(); }
  bool has_edge_labels() const noexcept { return !edge_labels_.empty(); }

  /// Label of `v`; 0 for unlabeled graphs (single sentinel letter).
  Label vertex_label(Vertex v) const {
    return vertex_labels_.empty() ? 0 : vertex_labels_[v];
  }
  /// Label of edge {u,v}; 0 when the graph carries no edge labels.
  Label edge_label(Vertex u, Vertex v) const;

  /// Edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_connected() const;

 private:
  Graph() = default;

  Vertex n_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Label> vertex_labels_;
  std::unordered_map<std::uint64_t, Label> edge_labels_;  // key: min<<32|max
};

/// Relabels vertices: vertex v of `g` becomes perm[v] in the result.
Graph permute_graph(const Graph& g, std::span<const Vertex> perm);

/// An ordered k-tuple of vertices encoded little-endian in base n:
/// component j (1-based) is (value / n^(j-1)) mod n.
struct TupleIndex {
  std::uint64_t value = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;

  friend bool operator==(const TupleIndex&, const TupleIndex&) = default;
};

/// n^k with overflow check (throws SizeLimitExceeded).
std::uint64_t tuple_space_size(std::uint64_t n, std::uint32_t k);

TupleIndex tuple_from_components(std::span<const Vertex> components, Vertex n);
std::vector<Vertex> tuple_components(const TupleIndex& t);
Vertex tuple_component(const TupleIndex& t, std::uint32_t position);

/// phi_j: replaces component `position` (1-based) of `t` with vertex `w`.
TupleIndex phi(const TupleIndex& t, std::uint32_t position, Vertex w);

/// Canonical encoding of the ordered labeled subgraph induced by a tuple.
/// Two tuples get equal codes exactly when mapping i-th component to i-th
/// component is a label- and edge-preserving isomorphism of the induced
/// ordered subgraphs.
struct AtomicType {
  std::vector<std::uint64_t> code;

  friend bool operator==(const AtomicType&, const AtomicType&) = default;
};

AtomicType atomic_type(const Graph& g, const TupleIndex& t);

/// Appends the atomic-type words for tuple `t` to `out` without allocating
/// an AtomicType. Used on the refinement hot path.
void append_atomic_code(const Graph& g, const TupleIndex& t,
                        std::vector<std::uint64_t>& out);

enum class NeighborFlag : std::uint8_t { Local, Global };

/// 1_delta((v_j, w)): Local iff w is adjacent to the j-th component of t.
NeighborFlag is_local_neighbor(const Graph& g, const TupleIndex& t,
                               std::uint32_t position, Vertex w);

}  // namespace wlkern
