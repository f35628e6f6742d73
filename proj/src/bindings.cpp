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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "wlkern/dataset_io.hpp"
#include "wlkern/kernels.hpp"
#include "wlkern/theory_oracle.hpp"

namespace py = pybind11;
using namespace wlkern;

namespace {

std::vector<std::vector<double>> gram_rows(const GramMatrix& m) {
  std::vector<std::vector<double>> rows(m.size,
                                        std::vector<double>(m.size, 0.0));
  for (std::size_t i = 0; i < m.size; ++i) {
    for (std::size_t j = 0; j < m.size; ++j) rows[i][j] = m.at(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weisfeiler-Leman refinement kernels";

  py::enum_<Algorithm>(m, "Algorithm")
      .value("WL1", Algorithm::WL1)
      .value("KWL", Algorithm::KWL)
      .value("DKWL", Algorithm::DKWL)
      .value("DKLWL", Algorithm::DKLWL);

  py::class_<Graph>(m, "Graph")
      .def_static("from_edge_list", &Graph::from_edge_list, py::arg("n"),
                  py::arg("edges"), py::arg("vertex_labels") = std::vector<Label>{},
                  py::arg("edge_labels") = std::vector<Label>{})
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto span = g.neighbors(v);
             return std::vector<Vertex>(span.begin(), span.end());
           })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("vertex_label", &Graph::vertex_label)
      .def("edge_label", &Graph::edge_label)
      .def("edges", &Graph::edges)
      .def("is_connected", &Graph::is_connected)
      .def_property_readonly("has_vertex_labels", &Graph::has_vertex_labels)
      .def_property_readonly("has_edge_labels", &Graph::has_edge_labels);

  m.def("permute_graph",
        [](const Graph& g, const std::vector<Vertex>& perm) {
          return permute_graph(g, perm);
        },
        py::arg("graph"), py::arg("perm"));

  py::class_<ColorDictionary>(m, "ColorDictionary")
      .def(py::init<>())
      .def_property_readonly("size", &ColorDictionary::size);

  py::class_<Coloring>(m, "Coloring")
      .def_readonly("iteration", &Coloring::iteration)
      .def_readonly("colors", &Coloring::colors)
      .def_readonly("class_count", &Coloring::class_count);

  py::class_<RefinementTrace>(m, "RefinementTrace")
      .def_readonly("algorithm", &RefinementTrace::algorithm)
      .def_readonly("k", &RefinementTrace::k)
      .def_readonly("colorings", &RefinementTrace::colorings)
      .def_readonly("stable_at", &RefinementTrace::stable_at)
      .def_readonly("neighbor_inspections",
                    &RefinementTrace::neighbor_inspections)
      .def("class_counts", [](const RefinementTrace& t) {
        std::vector<std::size_t> counts;
        for (const Coloring& c : t.colorings) counts.push_back(c.class_count);
        return counts;
      });

  m.def("wl1_refine",
        [](const Graph& g, std::size_t h, ColorDictionary& dict) {
          return wl1_refine(g, h, dict);
        },
        py::arg("graph"), py::arg("iterations"), py::arg("dict"));
  m.def("kwl_refine",
        [](const Graph& g, std::uint32_t k, std::size_t h,
           ColorDictionary& dict) { return kwl_refine(g, k, h, dict); },
        py::arg("graph"), py::arg("k"), py::arg("iterations"),
        py::arg("dict"));
  m.def("delta_kwl_refine",
        [](const Graph& g, std::uint32_t k, std::size_t h,
           ColorDictionary& dict) { return delta_kwl_refine(g, k, h, dict); },
        py::arg("graph"), py::arg("k"), py::arg("iterations"),
        py::arg("dict"));
  m.def("delta_klwl_refine",
        [](const Graph& g, std::uint32_t k, std::size_t h,
           ColorDictionary& dict) { return delta_klwl_refine(g, k, h, dict); },
        py::arg("graph"), py::arg("k"), py::arg("iterations"),
        py::arg("dict"));
  m.def("refine_to_stable",
        [](const Graph& g, Algorithm a, std::uint32_t k,
           ColorDictionary& dict) { return refine_to_stable(g, a, k, dict); },
        py::arg("graph"), py::arg("algorithm"), py::arg("k"), py::arg("dict"));
  m.def("distinguishes",
        [](const Graph& g, const Graph& h, Algorithm a, std::uint32_t k) {
          return distinguishes(g, h, a, k);
        },
        py::arg("g"), py::arg("h"), py::arg("algorithm"), py::arg("k"));

  py::class_<FeatureVector>(m, "FeatureVector")
      .def_readonly("counts", &FeatureVector::counts)
      .def_readonly("total", &FeatureVector::total)
      .def("__eq__", [](const FeatureVector& a, const FeatureVector& b) {
        return a == b;
      });

  m.def("wl_feature_vector",
        [](const Graph& g, Algorithm a, std::uint32_t k, std::size_t h,
           ColorDictionary& dict) {
          return wl_feature_vector(g, a, k, h, dict);
        },
        py::arg("graph"), py::arg("algorithm"), py::arg("k"),
        py::arg("iterations"), py::arg("dict"));
  m.def("wl_feature_vectors",
        [](const std::vector<Graph>& graphs, Algorithm a, std::uint32_t k,
           std::size_t h, ColorDictionary& dict) {
          return wl_feature_batch(graphs, a, k, h, dict).features;
        },
        py::arg("graphs"), py::arg("algorithm"), py::arg("k"),
        py::arg("iterations"), py::arg("dict"));
  m.def("graphlet3_features", &graphlet3_features, py::arg("graph"));
  m.def("shortest_path_features", &shortest_path_features, py::arg("graph"));

  py::class_<GramMatrix>(m, "GramMatrix")
      .def_readonly("size", &GramMatrix::size)
      .def_readonly("normalized", &GramMatrix::normalized)
      .def("at", &GramMatrix::at, py::arg("i"), py::arg("j"))
      .def("rows", &gram_rows);

  m.def("gram_matrix",
        [](const std::vector<FeatureVector>& features) {
          return gram_matrix(features);
        },
        py::arg("features"));
  m.def("normalize_gram", &normalize_gram, py::arg("matrix"));
  m.def("write_gram_matrix",
        [](const std::filesystem::path& path, const GramMatrix& gm) {
          write_gram_matrix(path, gm);
        },
        py::arg("path"), py::arg("matrix"));
  m.def("write_class_labels",
        [](const std::filesystem::path& path,
           const std::vector<Label>& labels) {
          write_class_labels(path, labels);
        },
        py::arg("path"), py::arg("labels"));

  py::class_<DatasetStats>(m, "DatasetStats")
      .def_readonly("graph_count", &DatasetStats::graph_count)
      .def_readonly("class_count", &DatasetStats::class_count)
      .def_readonly("mean_vertices", &DatasetStats::mean_vertices)
      .def_readonly("mean_edges", &DatasetStats::mean_edges)
      .def_readonly("has_vertex_labels", &DatasetStats::has_vertex_labels);

  py::class_<Dataset>(m, "Dataset")
      .def_readonly("name", &Dataset::name)
      .def_readonly("graphs", &Dataset::graphs)
      .def_readonly("class_labels", &Dataset::class_labels)
      .def_readonly("stats", &Dataset::stats);

  m.def("load_tu_dataset",
        [](const std::filesystem::path& dir, const std::string& name) {
          return load_tu_dataset(dir, name);
        },
        py::arg("directory"), py::arg("name") = "");
  m.def("dataset_stats", &dataset_stats, py::arg("dataset"));
  m.def("write_tu_dataset", &write_tu_dataset, py::arg("dataset"),
        py::arg("directory"));

  m.def("brute_force_isomorphic", &brute_force_isomorphic, py::arg("g"),
        py::arg("h"));

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("name", &CheckReport::name)
      .def_readonly("checks", &CheckReport::checks)
      .def_readonly("violations", &CheckReport::violations)
      .def("passed", &CheckReport::passed);

  m.def("run_verification",
        [](unsigned max_n, std::uint64_t seed) {
          const VerificationSummary summary = run_verification(max_n, seed);
          return std::make_pair(summary.all_passed(), summary.reports);
        },
        py::arg("max_n") = 6, py::arg("seed") = 1);
}
