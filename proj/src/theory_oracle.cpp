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

#include "wlkern/theory_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace wlkern {

namespace {

std::string describe_graph(const Graph& g) {
  std::ostringstream out;
  out << "{n=" << g.num_vertices() << "; edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out << ',';
    out << u << '-' << v;
    first = false;
  }
  if (g.has_vertex_labels()) {
    out << "; labels=";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (v) out << ',';
      out << g.vertex_label(v);
    }
  }
  out << '}';
  return out.str();
}

std::vector<std::pair<Label, std::size_t>> label_degree_signature(
    const Graph& g) {
  std::vector<std::pair<Label, std::size_t>> sig;
  sig.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    sig.emplace_back(g.vertex_label(v), g.degree(v));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool extend_isomorphism(const Graph& g, const Graph& h,
                        std::vector<Vertex>& image, std::vector<bool>& used,
                        Vertex next) {
  const Vertex n = g.num_vertices();
  if (next == n) return true;
  for (Vertex w = 0; w < n; ++w) {
    if (used[w]) continue;
    if (g.vertex_label(next) != h.vertex_label(w)) continue;
    if (g.degree(next) != h.degree(w)) continue;
    bool consistent = true;
    for (Vertex prev = 0; prev < next && consistent; ++prev) {
      const bool eg = g.has_edge(prev, next);
      const bool eh = h.has_edge(image[prev], w);
      if (eg != eh) {
        consistent = false;
      } else if (eg && g.edge_label(prev, next) != h.edge_label(image[prev], w)) {
        consistent = false;
      }
    }
    if (!consistent) continue;
    image[next] = w;
    used[w] = true;
    if (extend_isomorphism(g, h, image, used, next + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.num_vertices() > 10 || h.num_vertices() > 10) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "brute-force isomorphism is guarded to 10 vertices");
  }
  if (g.num_vertices() != h.num_vertices()) return false;
  if (g.num_edges() != h.num_edges()) return false;
  if (label_degree_signature(g) != label_degree_signature(h)) return false;
  std::vector<Vertex> image(g.num_vertices());
  std::vector<bool> used(g.num_vertices(), false);
  return extend_isomorphism(g, h, image, used, 0);
}

TupleGraph build_tuple_graph(const Graph& g, std::uint32_t k, bool local_only,
                             std::uint64_t max_tuple_vertices) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k >= 1 required");
  const std::uint64_t count = tuple_space_size(g.num_vertices(), k);
  if (count > max_tuple_vertices) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(count) + " tuple vertices exceed the limit of " +
                    std::to_string(max_tuple_vertices));
  }
  TupleGraph tg;
  tg.k = k;
  tg.base_n = g.num_vertices();
  tg.local_only = local_only;
  tg.vertex_type.reserve(count);
  tg.out_edges.resize(count);

  std::vector<std::uint64_t> pow(k);
  std::uint64_t p = 1;
  for (std::uint32_t j = 0; j < k; ++j, p *= g.num_vertices()) pow[j] = p;

  for (std::uint64_t t = 0; t < count; ++t) {
    const TupleIndex idx{t, k, g.num_vertices()};
    tg.vertex_type.push_back(atomic_type(g, idx));
    const auto comps = tuple_components(idx);
    auto& edges = tg.out_edges[t];
    // Witness-major order keeps the lists witness-sorted.
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
      for (std::uint32_t j = 0; j < k; ++j) {
        const bool local = g.has_edge(comps[j], w);
        if (local_only && !local) continue;
        TupleGraphEdge e;
        e.target = t + (static_cast<std::int64_t>(w) - comps[j]) *
                           static_cast<std::int64_t>(pow[j]);
        e.position = static_cast<std::uint8_t>(j + 1);
        e.flag = local ? NeighborFlag::Local : NeighborFlag::Global;
        e.witness = w;
        edges.push_back(e);
      }
    }
  }
  return tg;
}

UnrolledTree unroll(const TupleGraph& tg, std::uint64_t root,
                    std::size_t depth, std::size_t node_budget) {
  UnrolledTree tree;
  tree.root = root;
  tree.nodes.push_back(UnrolledNode{root, -1, {}});
  tree.level_offsets = {0, 1};
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t level_begin = tree.level_offsets[d];
    const std::size_t level_end = tree.level_offsets[d + 1];
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const std::uint64_t origin = tree.nodes[i].origin;
      for (const TupleGraphEdge& e : tg.out_edges[origin]) {
        if (tree.nodes.size() >= node_budget) {
          throw Error(ErrorCode::NodeBudgetExceeded,
                      "unrolled tree exceeds " + std::to_string(node_budget) +
                          " nodes");
        }
        tree.nodes.push_back(
            UnrolledNode{e.target, static_cast<std::int64_t>(i), e});
      }
    }
    tree.level_offsets.push_back(tree.nodes.size());
  }
  return tree;
}

namespace {

std::uint64_t pack_star_entry(ColorId color, std::uint8_t position,
                              NeighborFlag flag) {
  return (std::uint64_t{color} << 9) | (std::uint64_t{position} << 1) |
         (flag == NeighborFlag::Local ? 1u : 0u);
}

// Appends the witness-grouped aggregate of `edges` to `key`, reading
// neighbor values through `value_of`. Chunks are length-prefixed and sorted.
template <typename ValueFn>
void append_witness_chunks(const std::vector<TupleGraphEdge>& edges,
                           ValueFn&& value_of,
                           std::vector<std::uint64_t>& chunk_words,
                           std::vector<std::pair<std::uint32_t, std::uint32_t>>& chunks,
                           std::vector<std::uint64_t>& key) {
  chunk_words.clear();
  chunks.clear();
  std::size_t p = 0;
  while (p < edges.size()) {
    const Vertex w = edges[p].witness;
    const std::size_t start = chunk_words.size();
    chunk_words.push_back(0);
    while (p < edges.size() && edges[p].witness == w) {
      chunk_words.push_back(value_of(edges[p]));
      ++p;
    }
    auto first = chunk_words.begin() + start + 1;
    std::sort(first, chunk_words.end());
    chunk_words.erase(std::unique(first, chunk_words.end()),
                      chunk_words.end());
    chunk_words[start] = chunk_words.size() - start - 1;
    chunks.emplace_back(static_cast<std::uint32_t>(start),
                        static_cast<std::uint32_t>(chunk_words.size() - start));
  }
  const auto* base = chunk_words.data();
  std::sort(chunks.begin(), chunks.end(),
            [base](const auto& a, const auto& b) {
              return std::lexicographical_compare(
                  base + a.first, base + a.first + a.second, base + b.first,
                  base + b.first + b.second);
            });
  for (const auto& [off, len] : chunks) {
    key.insert(key.end(), base + off, base + off + len);
  }
}

}  // namespace

RefinementTrace wl1_star_refine(const TupleGraph& tg,
                                std::size_t max_iterations,
                                ColorDictionary& dict, bool stop_when_stable) {
  dict.bind(Algorithm::WL1Star, tg.k);
  const std::uint64_t count = tg.num_vertices();

  RefinementTrace trace;
  trace.algorithm = Algorithm::WL1Star;
  trace.k = tg.k;

  std::vector<ColorId> colors(count);
  std::vector<ColorId> next(count);
  std::vector<std::uint64_t> key;
  for (std::uint64_t v = 0; v < count; ++v) {
    key.clear();
    key.push_back(0);
    key.insert(key.end(), tg.vertex_type[v].code.begin(),
               tg.vertex_type[v].code.end());
    colors[v] = dict.intern(key);
  }
  trace.colorings.push_back(
      Coloring{0, colors, count_color_classes(colors)});

  std::vector<std::uint64_t> chunk_words;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chunks;
  for (std::size_t step = 0; step < max_iterations; ++step) {
    std::uint64_t inspections = 0;
    for (std::uint64_t v = 0; v < count; ++v) {
      key.clear();
      key.push_back(step + 1);
      key.push_back(colors[v]);
      inspections += tg.out_edges[v].size();
      append_witness_chunks(
          tg.out_edges[v],
          [&colors](const TupleGraphEdge& e) {
            return pack_star_entry(colors[e.target], e.position, e.flag);
          },
          chunk_words, chunks, key);
      next[v] = dict.intern(key);
    }
    trace.neighbor_inspections.push_back(inspections);
    const bool stable =
        !trace.stable_at && partitions_equal(colors, next);
    colors.swap(next);
    trace.colorings.push_back(
        Coloring{step + 1, colors, count_color_classes(colors)});
    if (stable) {
      trace.stable_at = step;
      if (stop_when_stable) break;
    }
  }
  return trace;
}

std::vector<std::vector<ColorId>> unrolled_tree_codes(const TupleGraph& tg,
                                                      std::size_t max_depth) {
  const std::uint64_t count = tg.num_vertices();
  ColorDictionary interner;
  std::vector<std::vector<ColorId>> codes(max_depth + 1);

  std::vector<std::uint64_t> key;
  codes[0].resize(count);
  for (std::uint64_t v = 0; v < count; ++v) {
    key.clear();
    key.push_back(0);
    key.insert(key.end(), tg.vertex_type[v].code.begin(),
               tg.vertex_type[v].code.end());
    codes[0][v] = interner.intern(key);
  }

  std::vector<std::uint64_t> chunk_words;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chunks;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    codes[d].resize(count);
    const auto& prev = codes[d - 1];
    for (std::uint64_t v = 0; v < count; ++v) {
      key.clear();
      key.push_back(d);
      key.insert(key.end(), tg.vertex_type[v].code.begin(),
                 tg.vertex_type[v].code.end());
      append_witness_chunks(
          tg.out_edges[v],
          [&prev](const TupleGraphEdge& e) {
            return pack_star_entry(prev[e.target], e.position, e.flag);
          },
          chunk_words, chunks, key);
      codes[d][v] = interner.intern(key);
    }
  }
  return codes;
}

namespace {

struct TreeView {
  const TupleGraph* tg;
  const UnrolledTree* tree;
  std::vector<std::vector<std::size_t>> children;

  TreeView(const TupleGraph& g, const UnrolledTree& t) : tg(&g), tree(&t) {
    children.resize(t.nodes.size());
    for (std::size_t i = 1; i < t.nodes.size(); ++i) {
      children[t.nodes[i].parent].push_back(i);
    }
  }

  const AtomicType& label(std::size_t node) const {
    return tg->vertex_type[tree->nodes[node].origin];
  }
};

using WitnessGroup = std::vector<std::size_t>;  // child node indices

std::vector<WitnessGroup> witness_groups(const TreeView& view,
                                         std::size_t node) {
  std::map<Vertex, WitnessGroup> by_witness;
  for (std::size_t child : view.children[node]) {
    by_witness[view.tree->nodes[child].via.witness].push_back(child);
  }
  std::vector<WitnessGroup> groups;
  groups.reserve(by_witness.size());
  for (auto& [w, g] : by_witness) groups.push_back(std::move(g));
  return groups;
}

bool match_nodes(const TreeView& a, std::size_t na, const TreeView& b,
                 std::size_t nb);

// Tries to biject the children of one witness group onto another, matching
// (position, flag) edge labels and subtrees.
bool match_groups(const TreeView& a, const WitnessGroup& ga, const TreeView& b,
                  const WitnessGroup& gb, std::vector<bool>& used,
                  std::size_t i) {
  if (i == ga.size()) return true;
  const auto& ea = a.tree->nodes[ga[i]].via;
  for (std::size_t j = 0; j < gb.size(); ++j) {
    if (used[j]) continue;
    const auto& eb = b.tree->nodes[gb[j]].via;
    if (ea.position != eb.position || ea.flag != eb.flag) continue;
    if (!match_nodes(a, ga[i], b, gb[j])) continue;
    used[j] = true;
    if (match_groups(a, ga, b, gb, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

bool match_group_assignment(const TreeView& a,
                            const std::vector<WitnessGroup>& gas,
                            const TreeView& b,
                            const std::vector<WitnessGroup>& gbs,
                            std::vector<bool>& used, std::size_t i) {
  if (i == gas.size()) return true;
  for (std::size_t j = 0; j < gbs.size(); ++j) {
    if (used[j]) continue;
    if (gas[i].size() != gbs[j].size()) continue;
    std::vector<bool> child_used(gbs[j].size(), false);
    if (!match_groups(a, gas[i], b, gbs[j], child_used, 0)) continue;
    used[j] = true;
    if (match_group_assignment(a, gas, b, gbs, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

bool match_nodes(const TreeView& a, std::size_t na, const TreeView& b,
                 std::size_t nb) {
  if (!(a.label(na) == b.label(nb))) return false;
  const auto gas = witness_groups(a, na);
  const auto gbs = witness_groups(b, nb);
  if (gas.size() != gbs.size()) return false;
  std::vector<bool> used(gbs.size(), false);
  return match_group_assignment(a, gas, b, gbs, used, 0);
}

}  // namespace

bool ex_respecting_isomorphic(const TupleGraph& tg_a, const UnrolledTree& a,
                              const TupleGraph& tg_b, const UnrolledTree& b) {
  TreeView va(tg_a, a);
  TreeView vb(tg_b, b);
  return match_nodes(va, 0, vb, 0);
}

namespace {

// Exact-iteration colorings (no early stop) of the base graph.
std::vector<std::vector<ColorId>> exact_colorings(const Graph& g,
                                                  Algorithm alg,
                                                  std::uint32_t k,
                                                  std::size_t h) {
  std::vector<std::vector<ColorId>> out;
  ColorDictionary dict;
  const Graph* arr[1] = {&g};
  refine_lockstep({arr, 1}, alg, k, h, /*stop_when_stable=*/false, dict, {},
                  [&out](std::size_t, std::size_t,
                         std::span<const ColorId> colors) {
                    out.emplace_back(colors.begin(), colors.end());
                  });
  return out;
}

std::string partition_counterexample(std::span<const ColorId> a,
                                     std::span<const ColorId> b) {
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (std::size_t t = s + 1; t < a.size(); ++t) {
      if ((a[s] == a[t]) != (b[s] == b[t])) {
        return "tuples " + std::to_string(s) + " and " + std::to_string(t);
      }
    }
  }
  return "size mismatch";
}

}  // namespace

CheckReport check_tuple_graph_simulation(const Graph& g, std::uint32_t k, std::size_t h) {
  CheckReport report;
  report.name = "tuple-graph-simulation";
  for (const bool local : {false, true}) {
    const Algorithm alg = local ? Algorithm::DKLWL : Algorithm::DKWL;
    const auto base = exact_colorings(g, alg, k, h);
    const TupleGraph tg = build_tuple_graph(g, k, local);
    ColorDictionary star_dict;
    const RefinementTrace star =
        wl1_star_refine(tg, h, star_dict, /*stop_when_stable=*/false);
    for (std::size_t i = 0; i <= h; ++i) {
      ++report.checks;
      const auto& a = base[i];
      const auto& b = star.colorings[i].colors;
      if (!partitions_equal(a, b)) {
        report.violations.push_back(
            std::string(local ? "local" : "global") + " iteration " +
            std::to_string(i) + " on " + describe_graph(g) + ": " +
            partition_counterexample(a, b));
      }
    }
  }
  return report;
}

CheckReport check_unrolled_tree_codes(const Graph& g, std::uint32_t k,
                         std::size_t max_depth) {
  CheckReport report;
  report.name = "unrolled-tree-codes";
  for (const bool local : {false, true}) {
    const Algorithm alg = local ? Algorithm::DKLWL : Algorithm::DKWL;
    const auto base = exact_colorings(g, alg, k, max_depth);
    const TupleGraph tg = build_tuple_graph(g, k, local);
    const auto codes = unrolled_tree_codes(tg, max_depth);
    for (std::size_t d = 0; d <= max_depth; ++d) {
      ++report.checks;
      if (!partitions_equal(base[d], codes[d])) {
        report.violations.push_back(
            std::string(local ? "local" : "global") + " depth " +
            std::to_string(d) + " on " + describe_graph(g) + ": " +
            partition_counterexample(base[d], codes[d]));
      }
    }
  }
  return report;
}

CheckReport check_local_global_equivalence(
    std::span<const std::pair<const Graph*, const Graph*>> pairs,
    std::uint32_t k) {
  CheckReport report;
  report.name = "local-global-equivalence";
  for (const auto& [g, h] : pairs) {
    ++report.checks;
    const bool by_local = distinguishes(*g, *h, Algorithm::DKLWL, k);
    const bool by_delta = distinguishes(*g, *h, Algorithm::DKWL, k);
    const bool by_kwl = distinguishes(*g, *h, Algorithm::KWL, k);
    if (by_local != by_delta) {
      report.violations.push_back(
          "dklwl/dkwl disagree (" + std::to_string(by_local) + "/" +
          std::to_string(by_delta) + ") on " + describe_graph(*g) + " vs " +
          describe_graph(*h));
    }
    if (by_kwl && !by_delta) {
      report.violations.push_back("kwl distinguishes but dkwl does not on " +
                                  describe_graph(*g) + " vs " +
                                  describe_graph(*h));
    }
    if (by_kwl && !by_local) {
      report.violations.push_back("kwl distinguishes but dklwl does not on " +
                                  describe_graph(*g) + " vs " +
                                  describe_graph(*h));
    }
  }
  return report;
}

bool rooted_trees_isomorphic(const RootedTree& a, const RootedTree& b) {
  if (a.size() != b.size()) return false;

  // Subtree sizes for pruning.
  const auto subtree_sizes = [](const RootedTree& t) {
    std::vector<std::size_t> size(t.size(), 1);
    for (std::size_t v = t.size(); v-- > 0;) {
      for (std::uint32_t c : t.children[v]) size[v] += size[c];
    }
    return size;
  };
  // Children always have larger indices than their parent (trees are built
  // root-first), so the reverse scan above is well-founded.
  const auto sa = subtree_sizes(a);
  const auto sb = subtree_sizes(b);

  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> memo;
  const std::function<bool(std::uint32_t, std::uint32_t)> iso =
      [&](std::uint32_t u, std::uint32_t v) -> bool {
    if (sa[u] != sb[v]) return false;
    const auto memo_key = std::make_pair(u, v);
    if (auto it = memo.find(memo_key); it != memo.end()) return it->second;
    const auto& cu = a.children[u];
    const auto& cv = b.children[v];
    bool result = false;
    if (cu.size() == cv.size()) {
      std::vector<bool> used(cv.size(), false);
      const std::function<bool(std::size_t)> assign =
          [&](std::size_t i) -> bool {
        if (i == cu.size()) return true;
        for (std::size_t j = 0; j < cv.size(); ++j) {
          if (used[j] || !iso(cu[i], cv[j])) continue;
          used[j] = true;
          if (assign(i + 1)) return true;
          used[j] = false;
        }
        return false;
      };
      result = assign(0);
    }
    memo[memo_key] = result;
    return result;
  };
  return iso(0, 0);
}

bool wl1_distinguishes_rooted_trees(const RootedTree& a, const RootedTree& b) {
  ColorDictionary dict;
  std::vector<ColorId> ca(a.size()), cb(b.size());
  std::vector<std::uint64_t> key{0};
  const ColorId init = dict.intern(key);
  std::fill(ca.begin(), ca.end(), init);
  std::fill(cb.begin(), cb.end(), init);

  const auto step = [&dict](const RootedTree& t, std::vector<ColorId>& colors,
                            std::size_t iteration) {
    std::vector<ColorId> next(t.size());
    std::vector<std::uint64_t> key;
    std::vector<std::uint64_t> child_colors;
    for (std::size_t v = 0; v < t.size(); ++v) {
      key.clear();
      key.push_back(iteration);
      key.push_back(colors[v]);
      child_colors.clear();
      for (std::uint32_t c : t.children[v]) child_colors.push_back(colors[c]);
      std::sort(child_colors.begin(), child_colors.end());
      key.insert(key.end(), child_colors.begin(), child_colors.end());
      next[v] = dict.intern(key);
    }
    colors.swap(next);
  };

  const std::size_t bound = a.size() + b.size() + 1;
  std::vector<ColorId> joint_prev, joint_next;
  for (std::size_t i = 1; i <= bound; ++i) {
    joint_prev.assign(ca.begin(), ca.end());
    joint_prev.insert(joint_prev.end(), cb.begin(), cb.end());
    step(a, ca, i);
    step(b, cb, i);
    joint_next.assign(ca.begin(), ca.end());
    joint_next.insert(joint_next.end(), cb.begin(), cb.end());
    if (partitions_equal(joint_prev, joint_next)) break;
  }

  std::unordered_map<ColorId, std::int64_t> delta;
  for (ColorId c : ca) ++delta[c];
  for (ColorId c : cb) --delta[c];
  for (const auto& [c, d] : delta) {
    if (d != 0) return true;
  }
  return false;
}

CheckReport check_tree_isomorphism(
    std::span<const std::pair<const RootedTree*, const RootedTree*>> pairs) {
  CheckReport report;
  report.name = "tree-isomorphism";
  for (const auto& [a, b] : pairs) {
    ++report.checks;
    const bool distinguished = wl1_distinguishes_rooted_trees(*a, *b);
    const bool isomorphic = rooted_trees_isomorphic(*a, *b);
    if (distinguished == isomorphic) {
      report.violations.push_back(
          "trees of sizes " + std::to_string(a->size()) + "/" +
          std::to_string(b->size()) + ": distinguished=" +
          std::to_string(distinguished) + " isomorphic=" +
          std::to_string(isomorphic));
    }
  }
  return report;
}

std::vector<Graph> enumerate_graphs(unsigned n, bool connected_only) {
  if (n > 7) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "edge-subset enumeration is guarded to 7 vertices");
  }
  std::vector<std::pair<Vertex, Vertex>> all_pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  }
  std::vector<Graph> kept;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  const std::uint32_t masks = 1u << all_pairs.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < all_pairs.size(); ++i) {
      if (mask & (1u << i)) edges.push_back(all_pairs[i]);
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (connected_only && !g.is_connected()) continue;
    std::vector<std::size_t> degrees(n);
    for (Vertex v = 0; v < n; ++v) degrees[v] = g.degree(v);
    std::sort(degrees.begin(), degrees.end());
    auto& bucket = buckets[degrees];
    bool fresh = true;
    for (std::size_t idx : bucket) {
      if (brute_force_isomorphic(g, kept[idx])) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(kept.size());
      kept.push_back(std::move(g));
    }
  }
  return kept;
}

namespace {

RootedTree compose_tree(const std::vector<const RootedTree*>& subtrees) {
  RootedTree t;
  t.children.emplace_back();
  for (const RootedTree* sub : subtrees) {
    const std::uint32_t offset = static_cast<std::uint32_t>(t.children.size());
    t.children[0].push_back(offset);
    for (const auto& kids : sub->children) {
      std::vector<std::uint32_t> shifted;
      shifted.reserve(kids.size());
      for (std::uint32_t c : kids) shifted.push_back(c + offset);
      t.children.push_back(std::move(shifted));
    }
  }
  return t;
}

// Appends child subtrees in non-increasing (size, index) order so every
// multiset appears exactly once.
void fill_children(const std::vector<std::vector<RootedTree>>& by_size,
                   unsigned remaining, unsigned max_size,
                   std::size_t max_index,
                   std::vector<const RootedTree*>& current,
                   std::vector<RootedTree>& out) {
  if (remaining == 0) {
    out.push_back(compose_tree(current));
    return;
  }
  for (unsigned s = std::min(remaining, max_size); s >= 1; --s) {
    const auto& pool = by_size[s];
    const std::size_t start =
        (s == max_size) ? std::min(max_index, pool.size() - 1)
                        : pool.size() - 1;
    for (std::size_t i = start + 1; i-- > 0;) {
      current.push_back(&pool[i]);
      fill_children(by_size, remaining - s, s, i, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<RootedTree> enumerate_rooted_trees(unsigned n) {
  if (n == 0) return {};
  std::vector<std::vector<RootedTree>> by_size(n + 1);
  by_size[1].push_back(RootedTree{{{}}});
  for (unsigned s = 2; s <= n; ++s) {
    std::vector<const RootedTree*> current;
    fill_children(by_size, s - 1, s - 1, SIZE_MAX, current, by_size[s]);
  }
  return by_size[n];
}

Graph random_connected_graph(unsigned n, unsigned num_edges,
                             std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> all_pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  }
  if (num_edges < (n > 0 ? n - 1 : 0) || num_edges > all_pairs.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "no connected graph with " + std::to_string(num_edges) +
                    " edges on " + std::to_string(n) + " vertices");
  }
  while (true) {
    // Partial Fisher-Yates: the first num_edges entries are the sample.
    for (unsigned i = 0; i < num_edges; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, all_pairs.size() - 1);
      std::swap(all_pairs[i], all_pairs[pick(rng)]);
    }
    Graph g = Graph::from_edge_list(
        n, {all_pairs.begin(), all_pairs.begin() + num_edges});
    if (g.is_connected()) return g;
  }
}

bool VerificationSummary::all_passed() const {
  for (const CheckReport& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

namespace {

CheckReport merge_reports(std::string name, std::vector<CheckReport> parts) {
  CheckReport merged;
  merged.name = std::move(name);
  for (CheckReport& part : parts) {
    merged.checks += part.checks;
    for (std::string& v : part.violations) {
      merged.violations.push_back(std::move(v));
    }
  }
  return merged;
}

void emit(std::ostream* progress, const CheckReport& report) {
  if (!progress) return;
  if (report.passed()) {
    *progress << "PASS " << report.name << " (" << report.checks
              << " checks)\n";
  } else {
    *progress << "FAIL " << report.name << " (" << report.violations.size()
              << " of " << report.checks << " checks)\n";
    for (const std::string& v : report.violations) {
      *progress << "  " << v << '\n';
    }
  }
  progress->flush();
}

Graph with_random_labels(const Graph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Label> coin(0, 1);
  std::vector<Label> labels(g.num_vertices());
  for (Label& l : labels) l = coin(rng);
  std::vector<Label> edge_labels;
  return Graph::from_edge_list(g.num_vertices(), g.edges(), labels,
                               edge_labels);
}

}  // namespace

VerificationSummary run_verification(unsigned max_n, std::uint64_t seed,
                                     std::ostream* progress) {
  VerificationSummary summary;
  std::mt19937_64 rng(seed);

  std::vector<std::vector<Graph>> connected(std::max(max_n, 4u) + 1);
  for (unsigned n = 1; n <= std::max(max_n, 4u); ++n) {
    connected[n] = enumerate_graphs(n, /*connected_only=*/true);
  }

  {
    std::vector<CheckReport> parts;
    for (unsigned n = 1; n <= std::min(max_n, 5u); ++n) {
      for (const Graph& g : connected[n]) {
        parts.push_back(check_tuple_graph_simulation(g, 2, 3));
      }
    }
    summary.reports.push_back(merge_reports(
        "tuple-graph-simulation (connected graphs n<=" +
            std::to_string(std::min(max_n, 5u)) + ", k=2, h=3)",
        std::move(parts)));
    emit(progress, summary.reports.back());
  }

  {
    std::vector<CheckReport> parts;
    for (unsigned n = 1; n <= std::min(max_n, 4u); ++n) {
      for (const Graph& g : enumerate_graphs(n, /*connected_only=*/false)) {
        parts.push_back(check_unrolled_tree_codes(g, 2, 2));
      }
    }
    summary.reports.push_back(merge_reports(
        "unrolled-tree-codes (all graphs n<=" +
            std::to_string(std::min(max_n, 4u)) + ", k=2, depth<=2)",
        std::move(parts)));
    emit(progress, summary.reports.back());
  }

  {
    // The canonical tree codes against the explicit backtracking matcher.
    CheckReport report;
    report.name = "tree-codes-crosscheck (backtracking matcher)";
    for (unsigned n = 2; n <= 3; ++n) {
      for (const Graph& g : enumerate_graphs(n, false)) {
        for (const bool local : {false, true}) {
          const TupleGraph tg = build_tuple_graph(g, 2, local);
          const auto codes = unrolled_tree_codes(tg, 2);
          std::vector<UnrolledTree> trees;
          for (std::uint64_t v = 0; v < tg.num_vertices(); ++v) {
            trees.push_back(unroll(tg, v, 2));
          }
          for (std::uint64_t s = 0; s < tg.num_vertices(); ++s) {
            for (std::uint64_t t = s; t < tg.num_vertices(); ++t) {
              ++report.checks;
              const bool by_code = codes[2][s] == codes[2][t];
              const bool by_match =
                  ex_respecting_isomorphic(tg, trees[s], tg, trees[t]);
              if (by_code != by_match) {
                report.violations.push_back(
                    "codes/matcher disagree on tuples " + std::to_string(s) +
                    "," + std::to_string(t) + " of " + describe_graph(g));
              }
            }
          }
        }
      }
    }
    summary.reports.push_back(std::move(report));
    emit(progress, summary.reports.back());
  }

  {
    std::vector<const Graph*> corpus;
    for (unsigned n = 1; n <= max_n; ++n) {
      for (const Graph& g : connected[n]) corpus.push_back(&g);
    }
    std::vector<Graph> labeled;
    for (const Graph* g : corpus) {
      labeled.push_back(with_random_labels(*g, rng));
    }
    std::vector<std::pair<const Graph*, const Graph*>> pairs;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        pairs.emplace_back(corpus[i], corpus[j]);
        pairs.emplace_back(&labeled[i], &labeled[j]);
      }
    }
    CheckReport report = check_local_global_equivalence(pairs, 2);
    report.name = "local-global-equivalence (connected pairs n<=" +
                  std::to_string(max_n) + ", k=2)";
    summary.reports.push_back(std::move(report));
    emit(progress, summary.reports.back());
  }

  {
    std::vector<Graph> randoms;
    for (int i = 0; i < 1000; ++i) {
      randoms.push_back(random_connected_graph(8, 10, rng));
    }
    std::vector<std::pair<const Graph*, const Graph*>> pairs;
    for (int i = 0; i < 500; ++i) {
      pairs.emplace_back(&randoms[2 * i], &randoms[2 * i + 1]);
    }
    CheckReport report = check_local_global_equivalence(pairs, 2);
    report.name = "local-global-equivalence (random connected pairs, n=8, k=2)";
    summary.reports.push_back(std::move(report));
    emit(progress, summary.reports.back());
  }

  {
    std::vector<RootedTree> trees;
    for (unsigned n = 1; n <= 8; ++n) {
      for (RootedTree& t : enumerate_rooted_trees(n)) {
        trees.push_back(std::move(t));
      }
    }
    std::vector<std::pair<const RootedTree*, const RootedTree*>> pairs;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i + 1; j < trees.size(); ++j) {
        pairs.emplace_back(&trees[i], &trees[j]);
      }
    }
    CheckReport report = check_tree_isomorphism(pairs);
    report.name = "tree-isomorphism (rooted trees n<=8)";
    summary.reports.push_back(std::move(report));
    emit(progress, summary.reports.back());
  }

  return summary;
}

}  // namespace wlkern
