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

#include "wlkern/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <unordered_map>

namespace wlkern {

namespace {

struct LineReader {
  std::ifstream stream;
  std::string path;
  std::size_t line_number = 0;

  explicit LineReader(const std::filesystem::path& p) : path(p.string()) {
    stream.open(p);
  }

  bool ok() const { return stream.is_open(); }

  bool next(std::string& line) {
    if (!std::getline(stream, line)) return false;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::MalformedLine,
                path + ":" + std::to_string(line_number) + ": " + what);
  }
};

std::int64_t parse_int(LineReader& reader, std::string_view field) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end != begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) {
    reader.fail("expected integer, got '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::int64_t> read_int_column(const std::filesystem::path& path) {
  LineReader reader(path);
  if (!reader.ok()) {
    throw Error(ErrorCode::MissingFile, path.string());
  }
  std::vector<std::int64_t> values;
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    values.push_back(parse_int(reader, line));
  }
  return values;
}

// Sorted distinct originals get codes 0, 1, ... so the remap is independent
// of file order.
std::map<Label, Label> dense_codes(const std::vector<std::int64_t>& values) {
  std::set<std::int64_t> distinct(values.begin(), values.end());
  std::map<Label, Label> codes;
  Label next = 0;
  for (std::int64_t v : distinct) codes[v] = next++;
  return codes;
}

}  // namespace

Dataset load_tu_dataset(const std::filesystem::path& directory,
                        const std::string& name_arg) {
  Dataset d;
  d.name = name_arg.empty() ? directory.filename().string() : name_arg;
  const auto file = [&](const char* suffix) {
    return directory / (d.name + suffix);
  };

  // Graph indicator: 1-indexed graph id per global vertex, contiguous.
  const auto indicator = read_int_column(file("_graph_indicator.txt"));
  std::size_t num_graphs = 0;
  std::vector<std::size_t> first_global;  // per graph, 0-based
  std::vector<Vertex> graph_sizes;
  for (std::size_t i = 0; i < indicator.size(); ++i) {
    const std::int64_t gid = indicator[i];
    if (gid < 1 || static_cast<std::size_t>(gid) > num_graphs + 1 ||
        (i > 0 && gid < indicator[i - 1])) {
      throw Error(ErrorCode::IndicatorNotContiguous,
                  "graph indicator value " + std::to_string(gid) +
                      " at vertex " + std::to_string(i + 1));
    }
    if (static_cast<std::size_t>(gid) == num_graphs + 1) {
      ++num_graphs;
      first_global.push_back(i);
      graph_sizes.push_back(0);
    }
    ++graph_sizes[gid - 1];
  }

  const auto class_labels = read_int_column(file("_graph_labels.txt"));
  if (class_labels.size() != num_graphs) {
    throw Error(ErrorCode::MalformedLine,
                file("_graph_labels.txt").string() + ": " +
                    std::to_string(class_labels.size()) + " labels for " +
                    std::to_string(num_graphs) + " graphs");
  }
  d.class_labels = class_labels;

  std::vector<std::int64_t> node_labels_raw;
  const auto node_label_path = file("_node_labels.txt");
  if (std::filesystem::exists(node_label_path)) {
    node_labels_raw = read_int_column(node_label_path);
    if (node_labels_raw.size() != indicator.size()) {
      throw Error(ErrorCode::MalformedLine,
                  node_label_path.string() + ": one label per vertex expected");
    }
    d.vertex_label_codes = dense_codes(node_labels_raw);
  }

  // Edge list, with optional per-line edge labels.
  LineReader edges_reader(file("_A.txt"));
  if (!edges_reader.ok()) {
    throw Error(ErrorCode::MissingFile, file("_A.txt").string());
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> raw_edges;
  std::string line;
  while (edges_reader.next(line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      edges_reader.fail("expected 'u, v'");
    }
    const std::int64_t u = parse_int(edges_reader, {line.data(), comma});
    const std::int64_t v = parse_int(
        edges_reader, {line.data() + comma + 1, line.size() - comma - 1});
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > indicator.size() ||
        static_cast<std::size_t>(v) > indicator.size()) {
      throw Error(ErrorCode::OutOfRangeVertex,
                  edges_reader.path + ":" +
                      std::to_string(edges_reader.line_number) + ": (" +
                      std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    raw_edges.emplace_back(u, v);
  }

  std::vector<std::int64_t> edge_labels_raw;
  const auto edge_label_path = file("_edge_labels.txt");
  if (std::filesystem::exists(edge_label_path)) {
    edge_labels_raw = read_int_column(edge_label_path);
    if (edge_labels_raw.size() != raw_edges.size()) {
      throw Error(ErrorCode::MalformedLine,
                  edge_label_path.string() + ": one label per _A.txt line expected");
    }
    d.edge_label_codes = dense_codes(edge_labels_raw);
  }

  // Collapse directed entries into undirected per-graph edges.
  struct PerGraph {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Label> edge_labels;
    std::vector<std::uint32_t> directions;
    std::unordered_map<std::uint64_t, std::size_t> seen;  // edge -> index
  };
  std::vector<PerGraph> per_graph(num_graphs);

  for (std::size_t e = 0; e < raw_edges.size(); ++e) {
    const auto [gu, gv] = raw_edges[e];
    const std::int64_t graph_u = indicator[gu - 1];
    const std::int64_t graph_v = indicator[gv - 1];
    if (graph_u != graph_v) {
      throw Error(ErrorCode::EdgeAcrossGraphs,
                  "edge (" + std::to_string(gu) + ", " + std::to_string(gv) +
                      ") joins graphs " + std::to_string(graph_u) + " and " +
                      std::to_string(graph_v));
    }
    const std::size_t gi = graph_u - 1;
    const Vertex lu = static_cast<Vertex>(gu - 1 - first_global[gi]);
    const Vertex lv = static_cast<Vertex>(gv - 1 - first_global[gi]);
    if (lu == lv) {
      throw Error(ErrorCode::SelfLoop, "global vertex " + std::to_string(gu));
    }
    const Vertex a = std::min(lu, lv);
    const Vertex b = std::max(lu, lv);
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    PerGraph& pg = per_graph[gi];
    auto [it, inserted] = pg.seen.emplace(key, pg.edges.size());
    if (inserted) {
      pg.edges.emplace_back(a, b);
      pg.directions.push_back(1);
      if (!edge_labels_raw.empty()) {
        pg.edge_labels.push_back(d.edge_label_codes.at(edge_labels_raw[e]));
      }
    } else {
      ++pg.directions[it->second];
      if (!edge_labels_raw.empty() &&
          pg.edge_labels[it->second] !=
              d.edge_label_codes.at(edge_labels_raw[e])) {
        throw Error(ErrorCode::ConflictingEdgeLabel,
                    "edge (" + std::to_string(gu) + ", " + std::to_string(gv) +
                        ")");
      }
    }
  }
  bool symmetrized_warning = false;
  for (const PerGraph& pg : per_graph) {
    for (std::uint32_t c : pg.directions) {
      if (c == 1 && !symmetrized_warning) {
        std::cerr << "warning: " << d.name
                  << "_A.txt lists some edges in one direction only; "
                     "symmetrizing\n";
        symmetrized_warning = true;
      }
    }
  }

  for (std::size_t gi = 0; gi < num_graphs; ++gi) {
    std::vector<Label> vlabels;
    if (!node_labels_raw.empty()) {
      vlabels.reserve(graph_sizes[gi]);
      for (Vertex v = 0; v < graph_sizes[gi]; ++v) {
        vlabels.push_back(
            d.vertex_label_codes.at(node_labels_raw[first_global[gi] + v]));
      }
    }
    d.graphs.push_back(Graph::from_edge_list(graph_sizes[gi],
                                             per_graph[gi].edges, vlabels,
                                             per_graph[gi].edge_labels));
  }

  d.stats = dataset_stats(d);
  return d;
}

DatasetStats dataset_stats(const Dataset& d) {
  DatasetStats s;
  s.graph_count = d.graphs.size();
  std::set<Label> classes(d.class_labels.begin(), d.class_labels.end());
  s.class_count = classes.size();
  std::size_t vertices = 0;
  std::size_t edges = 0;
  for (const Graph& g : d.graphs) {
    vertices += g.num_vertices();
    edges += g.num_edges();
    s.has_vertex_labels = s.has_vertex_labels || g.has_vertex_labels();
  }
  if (!d.graphs.empty()) {
    s.mean_vertices = static_cast<double>(vertices) / d.graphs.size();
    s.mean_edges = static_cast<double>(edges) / d.graphs.size();
  }
  return s;
}

void write_tu_dataset(const Dataset& d,
                      const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  const auto file = [&](const char* suffix) {
    return directory / (d.name + suffix);
  };
  std::ofstream a(file("_A.txt"));
  std::ofstream indicator(file("_graph_indicator.txt"));
  std::ofstream labels(file("_graph_labels.txt"));
  if (!a || !indicator || !labels) {
    throw Error(ErrorCode::MissingFile,
                "cannot write dataset to " + directory.string());
  }

  std::map<Label, Label> vertex_decode;
  for (const auto& [orig, code] : d.vertex_label_codes) {
    vertex_decode[code] = orig;
  }
  std::map<Label, Label> edge_decode;
  for (const auto& [orig, code] : d.edge_label_codes) edge_decode[code] = orig;

  const bool node_labels = !d.vertex_label_codes.empty();
  const bool edge_labels = !d.edge_label_codes.empty();
  std::ofstream nodes;
  std::ofstream edge_label_out;
  if (node_labels) nodes.open(file("_node_labels.txt"));
  if (edge_labels) edge_label_out.open(file("_edge_labels.txt"));

  std::size_t offset = 0;
  for (std::size_t gi = 0; gi < d.graphs.size(); ++gi) {
    const Graph& g = d.graphs[gi];
    labels << d.class_labels[gi] << '\n';
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      indicator << gi + 1 << '\n';
      if (node_labels) nodes << vertex_decode.at(g.vertex_label(v)) << '\n';
    }
    for (auto [u, v] : g.edges()) {
      a << offset + u + 1 << ", " << offset + v + 1 << '\n';
      a << offset + v + 1 << ", " << offset + u + 1 << '\n';
      if (edge_labels) {
        const Label l = edge_decode.at(g.edge_label(u, v));
        edge_label_out << l << '\n' << l << '\n';
      }
    }
    offset += g.num_vertices();
  }
}

}  // namespace wlkern
