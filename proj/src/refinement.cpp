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

#include "wlkern/refinement.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

namespace wlkern {

const char* algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::WL1: return "wl1";
    case Algorithm::KWL: return "kwl";
    case Algorithm::DKWL: return "dkwl";
    case Algorithm::DKLWL: return "dklwl";
    case Algorithm::WL1Star: return "wl1star";
  }
  return "?";
}

namespace {

std::uint64_t hash_key(std::span<const std::uint64_t> key) noexcept {
  // splitmix64-style word mixing.
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ key.size();
  for (std::uint64_t w : key) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    std::uint64_t z = h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h = z ^ (z >> 31);
  }
  return h;
}

}  // namespace

void ColorDictionary::grow() {
  const std::size_t capacity = slots_.empty() ? 1024 : slots_.size() * 2;
  std::vector<Slot> next(capacity);
  const std::size_t mask = capacity - 1;
  for (const Slot& slot : slots_) {
    if (slot.length == 0) continue;
    std::size_t idx = slot.hash & mask;
    while (next[idx].length != 0) idx = (idx + 1) & mask;
    next[idx] = slot;
  }
  slots_ = std::move(next);
}

ColorId ColorDictionary::intern(std::span<const std::uint64_t> key) {
  if (slots_.empty() || count_ * 8 >= slots_.size() * 7) grow();
  const std::uint64_t hash = hash_key(key);
  const std::size_t mask = slots_.size() - 1;
  std::size_t idx = hash & mask;
  while (slots_[idx].length != 0) {
    const Slot& slot = slots_[idx];
    if (slot.hash == hash && slot.length == key.size() &&
        std::equal(key.begin(), key.end(), arena_.begin() + slot.offset)) {
      return slot.id;
    }
    idx = (idx + 1) & mask;
  }
  if (count_ > std::numeric_limits<ColorId>::max()) {
    throw Error(ErrorCode::Overflow, "color id space exhausted");
  }
  const ColorId id = static_cast<ColorId>(count_++);
  slots_[idx] = Slot{hash, arena_.size(), static_cast<std::uint32_t>(key.size()),
                     id};
  arena_.insert(arena_.end(), key.begin(), key.end());
  return id;
}

void ColorDictionary::bind(Algorithm algorithm, std::uint32_t arity) {
  if (!binding_) {
    binding_ = {algorithm, arity};
    return;
  }
  if (binding_->first != algorithm || binding_->second != arity) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("dictionary already bound to ") +
                    algorithm_name(binding_->first) + "/k=" +
                    std::to_string(binding_->second) + ", reused with " +
                    algorithm_name(algorithm) + "/k=" + std::to_string(arity));
  }
}

std::uint64_t RefinementTrace::total_inspections() const {
  return std::accumulate(neighbor_inspections.begin(),
                         neighbor_inspections.end(), std::uint64_t{0});
}

bool partitions_equal(std::span<const ColorId> a, std::span<const ColorId> b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<ColorId, ColorId> fwd, bwd;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it, inserted] = fwd.try_emplace(a[i], b[i]);
    if (!inserted && it->second != b[i]) return false;
    auto [it2, inserted2] = bwd.try_emplace(b[i], a[i]);
    if (!inserted2 && it2->second != a[i]) return false;
  }
  return true;
}

std::size_t count_color_classes(std::span<const ColorId> colors) {
  std::unordered_set<ColorId> seen(colors.begin(), colors.end());
  return seen.size();
}

namespace {

struct Universe {
  const Graph* g = nullptr;
  std::uint32_t k = 1;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> pow;       // n^j for j in [0, k)
  std::vector<std::uint64_t> adj_mask;  // bitset rows when n <= 64
  std::vector<ColorId> colors;
  std::vector<ColorId> next;

  Vertex n() const { return g->num_vertices(); }

  bool local(Vertex a, Vertex b) const {
    if (!adj_mask.empty()) return (adj_mask[a] >> b) & 1u;
    return g->has_edge(a, b);
  }
};

Universe make_universe(const Graph& g, Algorithm alg, std::uint32_t k,
                       const RefineOptions& options) {
  Universe u;
  u.g = &g;
  u.k = alg == Algorithm::WL1 ? 1 : k;
  u.count = tuple_space_size(g.num_vertices(), u.k);
  if (u.count * sizeof(ColorId) > options.memory_cap_bytes) {
    throw Error(ErrorCode::MemoryBudgetExceeded,
                "coloring of " + std::to_string(u.count) + " tuples needs " +
                    std::to_string(u.count * sizeof(ColorId)) +
                    " bytes, cap is " +
                    std::to_string(options.memory_cap_bytes));
  }
  u.pow.resize(u.k);
  std::uint64_t p = 1;
  for (std::uint32_t j = 0; j < u.k; ++j, p *= g.num_vertices()) u.pow[j] = p;
  if (g.num_vertices() <= 64) {
    u.adj_mask.assign(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (Vertex w : g.neighbors(v)) u.adj_mask[v] |= std::uint64_t{1} << w;
    }
  }
  u.colors.resize(u.count);
  u.next.resize(u.count);
  return u;
}

// Mixed-radix counter over tuple components; avoids a division per tuple.
struct Odometer {
  std::vector<Vertex> comps;
  Vertex n = 0;

  void init(std::uint64_t value, std::uint32_t k, Vertex base) {
    n = base;
    comps.assign(k, 0);
    for (std::uint32_t j = 0; j < k; ++j) {
      comps[j] = static_cast<Vertex>(value % base);
      value /= base;
    }
  }

  void advance() {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (++comps[j] < n) return;
      comps[j] = 0;
    }
  }
};

// Scratch buffers reused across tuples by one worker.
struct Scratch {
  std::vector<std::uint64_t> entries;
  std::vector<std::uint32_t> order;
  std::vector<std::uint64_t> pairs;
  std::vector<std::uint64_t> chunk_words;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chunks;  // offset, len
  // Fixed-width witness chunks for k <= 3: [len, entries..., pad]. The pad
  // never affects the order because lengths compare first.
  std::vector<std::array<std::uint64_t, 4>> fixed_chunks;
};

void build_init_keys(const Universe& u, std::uint64_t lo, std::uint64_t hi,
                     std::vector<std::uint64_t>& words,
                     std::vector<std::uint32_t>& lens) {
  words.clear();
  lens.clear();
  if (u.k == 1) {
    for (std::uint64_t v = lo; v < hi; ++v) {
      words.push_back(0);
      words.push_back(std::bit_cast<std::uint64_t>(
          u.g->vertex_label(static_cast<Vertex>(v))));
      lens.push_back(2);
    }
    return;
  }
  for (std::uint64_t t = lo; t < hi; ++t) {
    const std::size_t before = words.size();
    words.push_back(0);
    append_atomic_code(*u.g, TupleIndex{t, u.k, u.n()}, words);
    lens.push_back(static_cast<std::uint32_t>(words.size() - before));
  }
}

void build_step_keys(const Universe& u, Algorithm alg, std::size_t iteration,
                     std::uint64_t lo, std::uint64_t hi,
                     std::vector<std::uint64_t>& words,
                     std::vector<std::uint32_t>& lens, Scratch& scratch,
                     std::uint64_t& inspections) {
  words.clear();
  lens.clear();
  const std::uint64_t iter_word = iteration;
  const Graph& g = *u.g;
  const Vertex n = u.n();
  const std::uint32_t k = u.k;

  if (alg == Algorithm::WL1) {
    for (std::uint64_t t = lo; t < hi; ++t) {
      const Vertex v = static_cast<Vertex>(t);
      const std::size_t before = words.size();
      words.push_back(iter_word);
      words.push_back(u.colors[v]);
      scratch.entries.clear();
      for (Vertex w : g.neighbors(v)) scratch.entries.push_back(u.colors[w]);
      inspections += scratch.entries.size();
      std::sort(scratch.entries.begin(), scratch.entries.end());
      words.insert(words.end(), scratch.entries.begin(), scratch.entries.end());
      lens.push_back(static_cast<std::uint32_t>(words.size() - before));
    }
    return;
  }

  Odometer odo;
  odo.init(lo, k, n);

  if (alg == Algorithm::KWL || alg == Algorithm::DKWL) {
    const bool flagged = alg == Algorithm::DKWL;
    for (std::uint64_t t = lo; t < hi; ++t, odo.advance()) {
      const std::size_t before = words.size();
      words.push_back(iter_word);
      words.push_back(u.colors[t]);
      scratch.entries.resize(static_cast<std::size_t>(n) * k);
      for (Vertex w = 0; w < n; ++w) {
        for (std::uint32_t j = 0; j < k; ++j) {
          const std::uint64_t idx =
              t + (static_cast<std::int64_t>(w) - odo.comps[j]) *
                      static_cast<std::int64_t>(u.pow[j]);
          std::uint64_t e = u.colors[idx];
          if (flagged) e = (e << 1) | (u.local(odo.comps[j], w) ? 1u : 0u);
          scratch.entries[static_cast<std::size_t>(w) * k + j] = e;
        }
      }
      inspections += static_cast<std::uint64_t>(n) * k;
      scratch.order.resize(n);
      std::iota(scratch.order.begin(), scratch.order.end(), 0u);
      const auto* base = scratch.entries.data();
      std::sort(scratch.order.begin(), scratch.order.end(),
                [base, k](std::uint32_t a, std::uint32_t b) {
                  return std::lexicographical_compare(
                      base + std::size_t{a} * k, base + std::size_t{a} * k + k,
                      base + std::size_t{b} * k, base + std::size_t{b} * k + k);
                });
      for (std::uint32_t w : scratch.order) {
        words.insert(words.end(), base + std::size_t{w} * k,
                     base + std::size_t{w} * k + k);
      }
      lens.push_back(static_cast<std::uint32_t>(words.size() - before));
    }
    return;
  }

  // DKLWL: scan the union of the component adjacency lists grouped by
  // witness instead of all of V(G).
  for (std::uint64_t t = lo; t < hi; ++t, odo.advance()) {
    const std::size_t before = words.size();
    words.push_back(iter_word);
    words.push_back(u.colors[t]);

    scratch.pairs.clear();
    for (std::uint32_t j = 0; j < k; ++j) {
      for (Vertex w : g.neighbors(odo.comps[j])) {
        scratch.pairs.push_back((std::uint64_t{w} << 8) | j);
      }
    }
    inspections += scratch.pairs.size();
    std::sort(scratch.pairs.begin(), scratch.pairs.end());

    if (k <= 3) {
      scratch.fixed_chunks.clear();
      std::size_t p = 0;
      while (p < scratch.pairs.size()) {
        const std::uint64_t w = scratch.pairs[p] >> 8;
        std::array<std::uint64_t, 4> chunk{0, UINT64_MAX, UINT64_MAX,
                                           UINT64_MAX};
        std::uint64_t len = 0;
        while (p < scratch.pairs.size() && (scratch.pairs[p] >> 8) == w) {
          const std::uint32_t j =
              static_cast<std::uint32_t>(scratch.pairs[p] & 0xff);
          const std::uint64_t idx =
              t + (static_cast<std::int64_t>(w) - odo.comps[j]) *
                      static_cast<std::int64_t>(u.pow[j]);
          chunk[1 + len++] = (std::uint64_t{u.colors[idx]} << 8) | j;
          ++p;
        }
        // s_delta is a set of (color, position) pairs.
        if (len >= 2 && chunk[1] > chunk[2]) std::swap(chunk[1], chunk[2]);
        if (len == 3) {
          if (chunk[2] > chunk[3]) std::swap(chunk[2], chunk[3]);
          if (chunk[1] > chunk[2]) std::swap(chunk[1], chunk[2]);
        }
        for (std::uint64_t i = 1; i < len; ++i) {
          if (chunk[i] == chunk[i + 1]) {
            for (std::uint64_t m = i + 1; m < len; ++m) chunk[m] = chunk[m + 1];
            chunk[len--] = UINT64_MAX;
            --i;
          }
        }
        chunk[0] = len;
        scratch.fixed_chunks.push_back(chunk);
      }
      std::sort(scratch.fixed_chunks.begin(), scratch.fixed_chunks.end());
      for (const auto& chunk : scratch.fixed_chunks) {
        words.insert(words.end(), chunk.begin(), chunk.begin() + 1 + chunk[0]);
      }
    } else {
      scratch.chunk_words.clear();
      scratch.chunks.clear();
      std::size_t p = 0;
      while (p < scratch.pairs.size()) {
        const std::uint64_t w = scratch.pairs[p] >> 8;
        const std::size_t start = scratch.chunk_words.size();
        scratch.chunk_words.push_back(0);  // length, patched below
        while (p < scratch.pairs.size() && (scratch.pairs[p] >> 8) == w) {
          const std::uint32_t j =
              static_cast<std::uint32_t>(scratch.pairs[p] & 0xff);
          const std::uint64_t idx =
              t + (static_cast<std::int64_t>(w) - odo.comps[j]) *
                      static_cast<std::int64_t>(u.pow[j]);
          scratch.chunk_words.push_back((std::uint64_t{u.colors[idx]} << 8) |
                                        j);
          ++p;
        }
        auto first = scratch.chunk_words.begin() + start + 1;
        std::sort(first, scratch.chunk_words.end());
        scratch.chunk_words.erase(
            std::unique(first, scratch.chunk_words.end()),
            scratch.chunk_words.end());
        scratch.chunk_words[start] = scratch.chunk_words.size() - start - 1;
        scratch.chunks.emplace_back(
            static_cast<std::uint32_t>(start),
            static_cast<std::uint32_t>(scratch.chunk_words.size() - start));
      }
      const auto* cbase = scratch.chunk_words.data();
      std::sort(scratch.chunks.begin(), scratch.chunks.end(),
                [cbase](const auto& a, const auto& b) {
                  return std::lexicographical_compare(
                      cbase + a.first, cbase + a.first + a.second,
                      cbase + b.first, cbase + b.first + b.second);
                });
      for (const auto& [off, len] : scratch.chunks) {
        words.insert(words.end(), cbase + off, cbase + off + len);
      }
    }
    lens.push_back(static_cast<std::uint32_t>(words.size() - before));
  }
}

// Builds keys for [lo, hi) with the configured worker count, then interns
// them in tuple order. Returns via u.next.
class BlockRunner {
 public:
  BlockRunner(unsigned workers) : workers_(std::max(1u, workers)) {
    words_.resize(workers_);
    lens_.resize(workers_);
    scratch_.resize(workers_);
  }

  void run(Universe& u, Algorithm alg, std::size_t iteration, bool init,
           ColorDictionary& dict, std::uint64_t& inspections) {
    const std::uint64_t block = block_size(u, alg);
    for (std::uint64_t lo = 0; lo < u.count; lo += block) {
      const std::uint64_t hi = std::min(u.count, lo + block);
      build_block(u, alg, iteration, init, lo, hi, inspections);
      intern_block(u, dict, lo);
    }
  }

 private:
  std::uint64_t block_size(const Universe& u, Algorithm alg) const {
    std::uint64_t est = 2;
    if (alg == Algorithm::KWL || alg == Algorithm::DKWL) {
      est += std::uint64_t{u.n()} * u.k;
    } else if (alg == Algorithm::DKLWL) {
      est += 3 * std::uint64_t{u.k} * (u.g->num_edges() * 2 / std::max<std::uint64_t>(1, u.n()) + 1);
    } else {
      est += u.g->num_edges() * 2 / std::max<std::uint64_t>(1, u.n()) + 1;
    }
    const std::uint64_t budget_words = std::uint64_t{1} << 23;
    return std::clamp<std::uint64_t>(budget_words / est, 256, 8192);
  }

  void build_block(Universe& u, Algorithm alg, std::size_t iteration,
                   bool init, std::uint64_t lo, std::uint64_t hi,
                   std::uint64_t& inspections) {
    const std::uint64_t span = hi - lo;
    const unsigned used =
        static_cast<unsigned>(std::min<std::uint64_t>(workers_, span));
    if (used <= 1) {
      std::uint64_t insp = 0;
      if (init) {
        build_init_keys(u, lo, hi, words_[0], lens_[0]);
      } else {
        build_step_keys(u, alg, iteration, lo, hi, words_[0], lens_[0],
                        scratch_[0], insp);
      }
      inspections += insp;
      used_workers_ = 1;
      return;
    }
    std::vector<std::thread> threads;
    std::vector<std::uint64_t> insp(used, 0);
    std::vector<std::exception_ptr> errors(used);
    const std::uint64_t chunk = (span + used - 1) / used;
    for (unsigned w = 0; w < used; ++w) {
      const std::uint64_t wlo = lo + w * chunk;
      const std::uint64_t whi = std::min(hi, wlo + chunk);
      threads.emplace_back([&, w, wlo, whi] {
        try {
          if (init) {
            build_init_keys(u, wlo, whi, words_[w], lens_[w]);
          } else {
            build_step_keys(u, alg, iteration, wlo, whi, words_[w], lens_[w],
                            scratch_[w], insp[w]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (std::uint64_t v : insp) inspections += v;
    used_workers_ = used;
  }

  void intern_block(Universe& u, ColorDictionary& dict, std::uint64_t lo) {
    std::uint64_t t = lo;
    for (unsigned w = 0; w < used_workers_; ++w) {
      std::size_t off = 0;
      for (std::uint32_t len : lens_[w]) {
        u.next[t++] = dict.intern({words_[w].data() + off, len});
        off += len;
      }
    }
  }

  unsigned workers_;
  unsigned used_workers_ = 1;
  std::vector<std::vector<std::uint64_t>> words_;
  std::vector<std::vector<std::uint32_t>> lens_;
  std::vector<Scratch> scratch_;
};

bool joint_partitions_equal(const std::vector<Universe>& universes) {
  std::unordered_map<ColorId, ColorId> fwd, bwd;
  for (const Universe& u : universes) {
    for (std::uint64_t i = 0; i < u.count; ++i) {
      const ColorId a = u.colors[i];
      const ColorId b = u.next[i];
      auto [it, inserted] = fwd.try_emplace(a, b);
      if (!inserted && it->second != b) return false;
      auto [it2, inserted2] = bwd.try_emplace(b, a);
      if (!inserted2 && it2->second != a) return false;
    }
  }
  return true;
}

void validate_arity(Algorithm alg, std::uint32_t k) {
  // WL1 runs over vertices; the arity argument is ignored for it.
  if (alg != Algorithm::WL1 && k < 2) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(algorithm_name(alg)) + " requires k >= 2");
  }
}

}  // namespace

LockstepResult refine_lockstep(std::span<const Graph* const> graphs,
                               Algorithm algorithm, std::uint32_t k,
                               std::size_t max_iterations,
                               bool stop_when_stable, ColorDictionary& dict,
                               const RefineOptions& options,
                               const ColoringVisitor& visit) {
  validate_arity(algorithm, k);
  dict.bind(algorithm, algorithm == Algorithm::WL1 ? 1 : k);

  std::vector<Universe> universes;
  universes.reserve(graphs.size());
  for (const Graph* g : graphs) {
    universes.push_back(make_universe(*g, algorithm, k, options));
  }

  LockstepResult result;
  BlockRunner runner(options.workers);

  // Iteration 0: vertex labels for arity 1, atomic types otherwise.
  for (Universe& u : universes) {
    std::uint64_t ignored = 0;
    runner.run(u, algorithm, 0, /*init=*/true, dict, ignored);
    u.colors.swap(u.next);
  }
  if (visit) {
    for (std::size_t gi = 0; gi < universes.size(); ++gi) {
      visit(0, gi, universes[gi].colors);
    }
  }

  for (std::size_t step = 0; step < max_iterations; ++step) {
    std::uint64_t inspections = 0;
    for (Universe& u : universes) {
      runner.run(u, algorithm, step + 1, /*init=*/false, dict, inspections);
    }
    result.neighbor_inspections.push_back(inspections);
    // Stability is only tracked when the caller can stop on it; exact-h
    // runs skip the partition comparison.
    const bool stable = stop_when_stable && !result.stable_at &&
                        joint_partitions_equal(universes);
    for (Universe& u : universes) u.colors.swap(u.next);
    result.iterations_run = step + 1;
    if (visit) {
      for (std::size_t gi = 0; gi < universes.size(); ++gi) {
        visit(step + 1, gi, universes[gi].colors);
      }
    }
    if (stable) {
      result.stable_at = step;
      if (stop_when_stable) break;
    }
  }
  return result;
}

namespace {

RefinementTrace run_single(const Graph& g, Algorithm alg, std::uint32_t k,
                           std::size_t max_iterations, bool stop_when_stable,
                           ColorDictionary& dict,
                           const RefineOptions& options) {
  RefinementTrace trace;
  trace.algorithm = alg;
  trace.k = alg == Algorithm::WL1 ? 1 : k;
  const Graph* arr[1] = {&g};
  LockstepResult res = refine_lockstep(
      {arr, 1}, alg, k, max_iterations, stop_when_stable, dict, options,
      [&trace](std::size_t iteration, std::size_t,
               std::span<const ColorId> colors) {
        trace.colorings.push_back(Coloring{
            iteration,
            std::vector<ColorId>(colors.begin(), colors.end()),
            count_color_classes(colors)});
      });
  trace.stable_at = res.stable_at;
  trace.neighbor_inspections = std::move(res.neighbor_inspections);
  return trace;
}

}  // namespace

RefinementTrace wl1_refine(const Graph& g, std::size_t max_iterations,
                           ColorDictionary& dict,
                           const RefineOptions& options) {
  return run_single(g, Algorithm::WL1, 1, max_iterations, true, dict, options);
}

RefinementTrace kwl_refine(const Graph& g, std::uint32_t k,
                           std::size_t max_iterations, ColorDictionary& dict,
                           const RefineOptions& options) {
  return run_single(g, Algorithm::KWL, k, max_iterations, true, dict, options);
}

RefinementTrace delta_kwl_refine(const Graph& g, std::uint32_t k,
                                 std::size_t max_iterations,
                                 ColorDictionary& dict,
                                 const RefineOptions& options) {
  return run_single(g, Algorithm::DKWL, k, max_iterations, true, dict,
                    options);
}

RefinementTrace delta_klwl_refine(const Graph& g, std::uint32_t k,
                                  std::size_t max_iterations,
                                  ColorDictionary& dict,
                                  const RefineOptions& options) {
  return run_single(g, Algorithm::DKLWL, k, max_iterations, true, dict,
                    options);
}

RefinementTrace refine_to_stable(const Graph& g, Algorithm algorithm,
                                 std::uint32_t k, ColorDictionary& dict,
                                 const RefineOptions& options) {
  const std::uint64_t count = tuple_space_size(
      g.num_vertices(), algorithm == Algorithm::WL1 ? 1 : k);
  return run_single(g, algorithm, k, count + 1, true, dict, options);
}

bool distinguishes(const Graph& g, const Graph& h, Algorithm algorithm,
                   std::uint32_t k, const RefineOptions& options) {
  ColorDictionary dict;
  std::vector<std::vector<ColorId>> last(2);
  const Graph* arr[2] = {&g, &h};
  const std::uint64_t bound =
      tuple_space_size(g.num_vertices(), algorithm == Algorithm::WL1 ? 1 : k) +
      tuple_space_size(h.num_vertices(), algorithm == Algorithm::WL1 ? 1 : k);
  refine_lockstep({arr, 2}, algorithm, k, bound + 1, true, dict, options,
                  [&last](std::size_t, std::size_t gi,
                          std::span<const ColorId> colors) {
                    last[gi].assign(colors.begin(), colors.end());
                  });
  std::unordered_map<ColorId, std::int64_t> delta;
  for (ColorId c : last[0]) ++delta[c];
  for (ColorId c : last[1]) --delta[c];
  for (const auto& [c, d] : delta) {
    if (d != 0) return true;
  }
  return false;
}

}  // namespace wlkern
