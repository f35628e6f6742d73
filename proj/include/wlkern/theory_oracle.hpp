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
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wlkern/refinement.hpp"

namespace wlkern {

/// Exhaustive search for a label- and edge-preserving bijection, pruned by
/// degree and label histograms. Guarded to graphs with at most 10 vertices.
bool brute_force_isomorphic(const Graph& g, const Graph& h);

/// Directed multigraph over all k-tuples: an edge per (position, witness)
/// replacement, labeled with the position, the local/global flag, and the
/// exchanged vertex. Local mode keeps only local replacements.
struct TupleGraphEdge {
  std::uint64_t target = 0;
  std::uint8_t position = 1;  // 1-based
  NeighborFlag flag = NeighborFlag::Global;
  Vertex witness = 0;
};

struct TupleGraph {
  std::uint32_t k = 0;
  Vertex base_n = 0;
  bool local_only = false;
  std::vector<AtomicType> vertex_type;
  std::vector<std::vector<TupleGraphEdge>> out_edges;  // witness-sorted

  std::uint64_t num_vertices() const { return vertex_type.size(); }
};

TupleGraph build_tuple_graph(const Graph& g, std::uint32_t k, bool local_only,
                             std::uint64_t max_tuple_vertices = 10000);

/// Breadth-layered tree of all walks of length <= depth from the root.
struct UnrolledNode {
  std::uint64_t origin = 0;  // tuple-graph vertex this node came from
  std::int64_t parent = -1;
  TupleGraphEdge via;  // edge from parent (meaningless at the root)
};

struct UnrolledTree {
  std::uint64_t root = 0;
  std::vector<UnrolledNode> nodes;          // BFS order
  std::vector<std::size_t> level_offsets;   // size depth+2; level d in
                                            // [offsets[d], offsets[d+1])
};

UnrolledTree unroll(const TupleGraph& tg, std::uint64_t root,
                    std::size_t depth, std::size_t node_budget = 1 << 20);

/// The 1-WL variant that simulates delta-k-WL on the tuple graph: per
/// witness, the set of (neighbor color, position, flag) triples over the
/// out-edges exchanged at that witness; the multiset of those sets over all
/// witnesses is the aggregate. Witnesses without out-edges contribute
/// nothing.
RefinementTrace wl1_star_refine(const TupleGraph& tg,
                                std::size_t max_iterations,
                                ColorDictionary& dict,
                                bool stop_when_stable = true);

/// codes[d][v]: canonical code of the depth-d unrolled tree around vertex v,
/// for d = 0..max_depth. Two vertices get equal codes at depth d exactly
/// when their depth-d trees admit a root-fixing isomorphism that preserves
/// node labels, edge (position, flag) labels, and the grouping of each
/// node's children by exchanged witness.
std::vector<std::vector<ColorId>> unrolled_tree_codes(const TupleGraph& tg,
                                                      std::size_t max_depth);

/// Explicit backtracking matcher for the same isomorphism notion; used to
/// cross-check the canonical codes on small instances.
bool ex_respecting_isomorphic(const TupleGraph& tg_a, const UnrolledTree& a,
                              const TupleGraph& tg_b, const UnrolledTree& b);

struct CheckReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Per iteration 0..h: the delta-k-WL partition of V(G)^k must equal the
/// wl1_star partition of the k-tuple graph, and delta-k-LWL the wl1_star
/// partition of the local k-tuple graph.
CheckReport check_tuple_graph_simulation(const Graph& g, std::uint32_t k, std::size_t h);

/// Per depth 0..max_depth: color equality of tuple pairs must coincide with
/// unrolled-tree code equality, for the global and the local construction.
CheckReport check_unrolled_tree_codes(const Graph& g, std::uint32_t k,
                         std::size_t max_depth);

/// For every pair: delta-k-LWL distinguishes at stability iff delta-k-WL
/// does; k-WL distinguishing implies both.
CheckReport check_local_global_equivalence(
    std::span<const std::pair<const Graph*, const Graph*>> pairs,
    std::uint32_t k);

/// Rooted directed trees, children-multiset 1-WL: distinguishes exactly the
/// non-isomorphic pairs.
struct RootedTree {
  /// children[v] lists the children of v. Vertex 0 is the root and every
  /// child index exceeds its parent's.
  std::vector<std::vector<std::uint32_t>> children;
  std::size_t size() const { return children.size(); }
};

CheckReport check_tree_isomorphism(
    std::span<const std::pair<const RootedTree*, const RootedTree*>> pairs);

bool rooted_trees_isomorphic(const RootedTree& a, const RootedTree& b);
bool wl1_distinguishes_rooted_trees(const RootedTree& a, const RootedTree& b);

/// All graphs on exactly n vertices up to isomorphism, by edge-subset
/// enumeration with brute-force rejection. n <= 7.
std::vector<Graph> enumerate_graphs(unsigned n, bool connected_only);

/// All rooted trees with exactly n vertices up to isomorphism.
std::vector<RootedTree> enumerate_rooted_trees(unsigned n);

/// Uniform random graph with exactly num_edges edges, resampled until
/// connected.
Graph random_connected_graph(unsigned n, unsigned num_edges,
                             std::mt19937_64& rng);

/// The built-in verification suite behind the `verify` command.
struct VerificationSummary {
  std::vector<CheckReport> reports;
  bool all_passed() const;
};

VerificationSummary run_verification(unsigned max_n, std::uint64_t seed,
                                     std::ostream* progress = nullptr);

}  // namespace wlkern
