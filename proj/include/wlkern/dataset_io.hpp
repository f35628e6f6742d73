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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "wlkern/graph.hpp"

namespace wlkern {

struct DatasetStats {
  std::size_t graph_count = 0;
  std::size_t class_count = 0;
  double mean_vertices = 0.0;
  double mean_edges = 0.0;
  bool has_vertex_labels = false;
};

struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<Label> class_labels;  // one per graph, as found on disk
  DatasetStats stats;
  // Original label value -> dense code, when label files were present.
  std::map<Label, Label> vertex_label_codes;
  std::map<Label, Label> edge_label_codes;
};

/// Loads a dataset in the TU benchmark directory format: `<name>_A.txt`
/// (1-indexed global vertex pairs, comma-separated, normally listed in both
/// directions), `<name>_graph_indicator.txt`, `<name>_graph_labels.txt`,
/// plus optional `<name>_node_labels.txt` and `<name>_edge_labels.txt`.
/// Node and edge label alphabets are remapped to dense 0-based codes.
/// When `name` is empty it is taken from the directory name.
Dataset load_tu_dataset(const std::filesystem::path& directory,
                        const std::string& name = "");

/// Recomputes the statistics from the loaded graphs.
DatasetStats dataset_stats(const Dataset& d);

/// Writes the dataset back in TU format (both edge directions, original
/// label values). Reloading the result reproduces the dataset exactly.
void write_tu_dataset(const Dataset& d, const std::filesystem::path& directory);

}  // namespace wlkern
