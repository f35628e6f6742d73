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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wlkern/dataset_io.hpp"
#include "wlkern/kernels.hpp"
#include "wlkern/theory_oracle.hpp"

namespace {

using namespace wlkern;

constexpr int kExitFailure = 1;
constexpr int kExitOom = 3;

struct RunConfig {
  std::string dataset;
  std::string name;
  std::string kernel = "dklwl";
  std::uint32_t k = 2;
  std::optional<std::size_t> iterations;
  bool normalize = false;
  std::string output;
  std::uint64_t seed = 1;
  std::size_t memory_cap = RefineOptions{}.memory_cap_bytes;
  unsigned workers = 1;
  unsigned max_n = 6;
};

bool is_wl_kernel(const std::string& kernel) {
  return kernel == "wl1" || kernel == "kwl" || kernel == "dkwl" ||
         kernel == "dklwl";
}

Algorithm algorithm_from_name(const std::string& kernel) {
  if (kernel == "wl1") return Algorithm::WL1;
  if (kernel == "kwl") return Algorithm::KWL;
  if (kernel == "dkwl") return Algorithm::DKWL;
  if (kernel == "dklwl") return Algorithm::DKLWL;
  throw Error(ErrorCode::InvalidArgument, "unknown kernel " + kernel);
}

void validate_kernel_arity(const RunConfig& cfg) {
  if (is_wl_kernel(cfg.kernel) && cfg.kernel != "wl1" && cfg.k < 2) {
    throw Error(ErrorCode::InvalidArgument,
                cfg.kernel + " requires --k >= 2");
  }
}

RefineOptions refine_options(const RunConfig& cfg) {
  RefineOptions opts;
  opts.memory_cap_bytes = cfg.memory_cap;
  opts.workers = cfg.workers;
  return opts;
}

Dataset load(const RunConfig& cfg) {
  Dataset d = load_tu_dataset(cfg.dataset, cfg.name);
  std::cout << "loaded " << d.name << ": " << d.stats.graph_count
            << " graphs\n";
  return d;
}

std::string output_base(const RunConfig& cfg, const Dataset& d) {
  if (!cfg.output.empty()) return cfg.output;
  return d.name + "_" + cfg.kernel;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::vector<FeatureVector> baseline_features(const Dataset& d,
                                             const std::string& kernel) {
  std::vector<FeatureVector> features;
  features.reserve(d.graphs.size());
  for (const Graph& g : d.graphs) {
    features.push_back(kernel == "graphlet3" ? graphlet3_features(g)
                                             : shortest_path_features(g));
  }
  return features;
}

int cmd_stats(const RunConfig& cfg) {
  const Dataset d = load_tu_dataset(cfg.dataset, cfg.name);
  const DatasetStats& s = d.stats;
  std::printf("dataset        %s\n", d.name.c_str());
  std::printf("graphs         %zu\n", s.graph_count);
  std::printf("classes        %zu\n", s.class_count);
  std::printf("mean vertices  %.1f\n", s.mean_vertices);
  std::printf("mean edges     %.1f\n", s.mean_edges);
  std::printf("vertex labels  %s\n", s.has_vertex_labels ? "yes" : "no");
  return 0;
}

int cmd_colors(const RunConfig& cfg) {
  validate_kernel_arity(cfg);
  const Dataset d = load(cfg);
  std::vector<FeatureVector> features;
  if (is_wl_kernel(cfg.kernel)) {
    ColorDictionary dict;
    features = wl_feature_batch(d.graphs, algorithm_from_name(cfg.kernel),
                                cfg.k, cfg.iterations.value_or(3), dict,
                                refine_options(cfg))
                   .features;
  } else {
    features = baseline_features(d, cfg.kernel);
  }
  const std::string path = output_base(cfg, d) + ".features";
  write_feature_dump(std::filesystem::path(path), features);
  std::cout << "wrote " << path << '\n';
  return 0;
}

void write_gram_files(const std::string& base, const std::string& suffix,
                      const Dataset& d, std::vector<FeatureVector>& features,
                      bool normalize, double feature_seconds) {
  const auto gram_start = std::chrono::steady_clock::now();
  GramMatrix m = gram_matrix(features);
  if (normalize) m = normalize_gram(m);
  const double gram_seconds = seconds_since(gram_start);
  const std::string path = base + suffix + ".gram";
  write_gram_matrix(std::filesystem::path(path), m);
  std::cout << "wrote " << path << "  (features " << feature_seconds
            << " s + gram " << gram_seconds << " s = "
            << feature_seconds + gram_seconds << " s)\n";
}

int cmd_gram(const RunConfig& cfg) {
  validate_kernel_arity(cfg);
  const Dataset d = load(cfg);
  const std::string base = output_base(cfg, d);

  if (is_wl_kernel(cfg.kernel)) {
    const Algorithm alg = algorithm_from_name(cfg.kernel);
    std::vector<std::size_t> sweep;
    if (cfg.iterations) {
      sweep.push_back(*cfg.iterations);
    } else {
      for (std::size_t h = 0; h <= 5; ++h) sweep.push_back(h);
    }
    for (std::size_t h : sweep) {
      ColorDictionary dict;
      const auto start = std::chrono::steady_clock::now();
      FeatureBatch batch =
          wl_feature_batch(d.graphs, alg, cfg.k, h, dict, refine_options(cfg));
      const double feature_seconds = seconds_since(start);
      const std::string suffix =
          cfg.iterations ? "" : "_h" + std::to_string(h);
      write_gram_files(base, suffix, d, batch.features, cfg.normalize,
                       feature_seconds);
    }
  } else {
    const auto start = std::chrono::steady_clock::now();
    std::vector<FeatureVector> features = baseline_features(d, cfg.kernel);
    const double feature_seconds = seconds_since(start);
    write_gram_files(base, "", d, features, cfg.normalize, feature_seconds);
  }

  const std::string labels_path = base + ".labels";
  write_class_labels(std::filesystem::path(labels_path), d.class_labels);
  std::cout << "wrote " << labels_path << '\n';
  return 0;
}

int cmd_bench(const RunConfig& cfg) {
  const Dataset d = load(cfg);
  const std::size_t h = cfg.iterations.value_or(3);
  struct Row {
    std::string name;
    double seconds;
    std::uint64_t inspections;
  };
  std::vector<Row> rows;
  const auto run = [&](const std::string& name, Algorithm alg,
                       std::uint32_t k) {
    ColorDictionary dict;
    const auto start = std::chrono::steady_clock::now();
    FeatureBatch batch =
        wl_feature_batch(d.graphs, alg, k, h, dict, refine_options(cfg));
    rows.push_back(Row{name, seconds_since(start),
                       batch.total_inspections()});
  };
  run("wl1", Algorithm::WL1, 1);
  run("kwl(k=" + std::to_string(cfg.k) + ")", Algorithm::KWL, cfg.k);
  run("dkwl(k=" + std::to_string(cfg.k) + ")", Algorithm::DKWL, cfg.k);
  run("dklwl(k=" + std::to_string(cfg.k) + ")", Algorithm::DKLWL, cfg.k);

  std::printf("%-12s %12s %16s   (h = %zu)\n", "kernel", "seconds",
              "inspections", h);
  for (const Row& r : rows) {
    std::printf("%-12s %12.3f %16llu\n", r.name.c_str(), r.seconds,
                static_cast<unsigned long long>(r.inspections));
  }
  const Row& dkwl = rows[2];
  const Row& dklwl = rows[3];
  if (dklwl.seconds > 0 && dklwl.inspections > 0) {
    std::printf("dkwl : dklwl time ratio        %.2f\n",
                dkwl.seconds / dklwl.seconds);
    std::printf("dkwl : dklwl inspection ratio  %.2f\n",
                static_cast<double>(dkwl.inspections) /
                    static_cast<double>(dklwl.inspections));
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const VerificationSummary summary =
      run_verification(cfg.max_n, cfg.seed, &std::cout);
  if (!summary.all_passed()) {
    std::cout << "verification FAILED\n";
    return kExitFailure;
  }
  std::cout << "verification passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weisfeiler-Leman refinement kernels"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* cap = std::getenv("WLKERN_MEMORY_CAP_BYTES")) {
    cfg.memory_cap = std::strtoull(cap, nullptr, 10);
  }

  const auto add_dataset = [&cfg](CLI::App* cmd) {
    cmd->add_option("dataset", cfg.dataset, "TU dataset directory")
        ->required();
    cmd->add_option("--name", cfg.name,
                    "dataset name (default: directory name)");
  };
  const auto add_kernel = [&cfg](CLI::App* cmd) {
    cmd->add_option("--kernel", cfg.kernel,
                    "wl1|kwl|dkwl|dklwl|graphlet3|sp")
        ->check(CLI::IsMember(
            {"wl1", "kwl", "dkwl", "dklwl", "graphlet3", "sp"}));
    cmd->add_option("--k", cfg.k, "tuple arity (kwl/dkwl/dklwl)");
    cmd->add_option("--iterations", cfg.iterations, "refinement iterations");
    cmd->add_option("--memory-cap", cfg.memory_cap,
                    "color storage cap in bytes "
                    "(env WLKERN_MEMORY_CAP_BYTES)");
    cmd->add_option("--workers", cfg.workers, "aggregate-phase workers");
  };

  CLI::App* stats = app.add_subcommand("stats", "dataset statistics");
  add_dataset(stats);

  CLI::App* colors =
      app.add_subcommand("colors", "per-graph feature-vector dump");
  add_dataset(colors);
  add_kernel(colors);
  colors->add_option("--output,-o", cfg.output, "output base path");

  CLI::App* gram = app.add_subcommand(
      "gram", "gram matrix + labels files (sweeps h=0..5 when --iterations "
              "is not given)");
  add_dataset(gram);
  add_kernel(gram);
  gram->add_flag("--normalize", cfg.normalize, "unit-diagonal normalization");
  gram->add_option("--output,-o", cfg.output, "output base path");

  CLI::App* bench = app.add_subcommand(
      "bench", "whole-dataset timing and inspection counters");
  add_dataset(bench);
  add_kernel(bench);

  CLI::App* verify =
      app.add_subcommand("verify", "run the built-in theorem checks");
  verify->add_option("--max-n", cfg.max_n, "largest corpus graph size");
  verify->add_option("--seed", cfg.seed, "randomized corpus seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stats->parsed()) return cmd_stats(cfg);
    if (colors->parsed()) return cmd_colors(cfg);
    if (gram->parsed()) return cmd_gram(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MemoryBudgetExceeded) {
      std::cerr << "OOM: " << e.what() << '\n';
      return kExitOom;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
