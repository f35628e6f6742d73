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
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "wlkern/graph.hpp"

namespace wlkern {

enum class Algorithm : std::uint8_t { WL1, KWL, DKWL, DKLWL, WL1Star };

const char* algorithm_name(Algorithm a) noexcept;

using ColorId = std::uint32_t;

/// Injective compression of structured refinement keys into dense ids.
///
/// Ids are assigned in first-encounter order, so two runs that intern the
/// same key sequence produce identical ids. Every key is prefixed with its
/// iteration index by the callers, which keeps ids from distinct iterations
/// distinct. A dictionary binds to one (algorithm, arity) pair on first use;
/// mixing algorithms or arities in one dictionary is an error.
///
/// Keys live in one arena and the table is open-addressed; a full word
/// compare backs every hit, so distinct keys never share an id.
class ColorDictionary {
 public:
  ColorId intern(std::span<const std::uint64_t> key);
  std::size_t size() const noexcept { return count_; }

  void bind(Algorithm algorithm, std::uint32_t arity);

 private:
  struct Slot {
    std::uint64_t hash = 0;
    std::uint64_t offset = 0;
    std::uint32_t length = 0;  // 0 marks an empty slot
    ColorId id = 0;
  };

  void grow();

  std::vector<std::uint64_t> arena_;
  std::vector<Slot> slots_;
  std::size_t count_ = 0;
  std::optional<std::pair<Algorithm, std::uint32_t>> binding_;
};

/// One iteration's coloring of V(G)^k (or V(G) for arity 1), indexed by
/// TupleIndex value.
struct Coloring {
  std::size_t iteration = 0;
  std::vector<ColorId> colors;
  std::size_t class_count = 0;
};

struct RefinementTrace {
  Algorithm algorithm = Algorithm::WL1;
  std::uint32_t k = 1;
  std::vector<Coloring> colorings;
  /// First iteration i whose partition equals the one at i + 1, when that
  /// was witnessed within the computed range.
  std::optional<std::size_t> stable_at;
  /// neighbor_inspections[i] counts the neighbor-color reads of the step
  /// from iteration i to i + 1.
  std::vector<std::uint64_t> neighbor_inspections;

  const Coloring& final_coloring() const { return colorings.back(); }
  std::uint64_t total_inspections() const;
};

struct RefineOptions {
  /// Cap on one coloring array: count * sizeof(ColorId) must stay below.
  std::size_t memory_cap_bytes = std::size_t{2} * 1024 * 1024 * 1024;
  /// Workers for the aggregate phase; dictionary assignment stays
  /// single-threaded and results are identical for any worker count.
  unsigned workers = 1;
};

/// Classical 1-WL: iteration 0 colors by vertex label, then neighbor-color
/// multisets. Stops at min(max_iterations, stabilization).
RefinementTrace wl1_refine(const Graph& g, std::size_t max_iterations,
                           ColorDictionary& dict,
                           const RefineOptions& options = {});

/// k-WL over ordered k-tuples, aggregate over all witnesses w in V(G).
RefinementTrace kwl_refine(const Graph& g, std::uint32_t k,
                           std::size_t max_iterations, ColorDictionary& dict,
                           const RefineOptions& options = {});

/// delta-k-WL: as k-WL with each neighbor color paired with its local/global
/// flag.
RefinementTrace delta_kwl_refine(const Graph& g, std::uint32_t k,
                                 std::size_t max_iterations,
                                 ColorDictionary& dict,
                                 const RefineOptions& options = {});

/// Local delta-k-WL: aggregates only local j-neighbors, grouped per witness;
/// per-iteration work is bounded by the degrees of the tuple components.
RefinementTrace delta_klwl_refine(const Graph& g, std::uint32_t k,
                                  std::size_t max_iterations,
                                  ColorDictionary& dict,
                                  const RefineOptions& options = {});

/// Runs until the partition stops changing. Terminates within n^k steps.
RefinementTrace refine_to_stable(const Graph& g, Algorithm algorithm,
                                 std::uint32_t k, ColorDictionary& dict,
                                 const RefineOptions& options = {});

/// Parallel run on both graphs with a shared dictionary, lockstep per
/// iteration, until the joint partition is stable. True iff some stable
/// color has different multiplicity in the two graphs; true certifies
/// non-isomorphism. Both graphs must use the same label alphabet.
bool distinguishes(const Graph& g, const Graph& h, Algorithm algorithm,
                   std::uint32_t k, const RefineOptions& options = {});

/// Lockstep refinement of several graphs against one dictionary: iteration i
/// completes on every graph before iteration i + 1 starts anywhere. `visit`
/// is called after each iteration's dictionary pass, per graph in order.
/// With stop_when_stable the run ends once the joint partition is stable,
/// otherwise after exactly max_iterations steps.
struct LockstepResult {
  /// Only tracked when stop_when_stable is set.
  std::optional<std::size_t> stable_at;
  std::size_t iterations_run = 0;
  std::vector<std::uint64_t> neighbor_inspections;  // per step, all graphs
};

using ColoringVisitor = std::function<void(
    std::size_t iteration, std::size_t graph_index, std::span<const ColorId>)>;

LockstepResult refine_lockstep(std::span<const Graph* const> graphs,
                               Algorithm algorithm, std::uint32_t k,
                               std::size_t max_iterations,
                               bool stop_when_stable, ColorDictionary& dict,
                               const RefineOptions& options,
                               const ColoringVisitor& visit);

/// True iff the two color arrays induce the same partition of the index
/// space (checked as an exact bijection between color classes).
bool partitions_equal(std::span<const ColorId> a, std::span<const ColorId> b);

std::size_t count_color_classes(std::span<const ColorId> colors);

}  // namespace wlkern
