# Copyright 2026 The wlkern Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
from pathlib import Path

import pytest

import wlkern

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def path3():
    return wlkern.Graph.from_edge_list(3, [(0, 1), (1, 2)])


def cycle(n):
    return wlkern.Graph.from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def two_triangles():
    return wlkern.Graph.from_edge_list(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )


def test_graph_basics():
    g = path3()
    assert g.num_vertices == 3
    assert g.num_edges == 2
    assert g.neighbors(1) == [0, 2]
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    with pytest.raises(RuntimeError):
        wlkern.Graph.from_edge_list(2, [(0, 0)])


def test_wl1_trace():
    trace = wlkern.wl1_refine(path3(), 10, wlkern.ColorDictionary())
    assert trace.class_counts() == [1, 2, 2]
    assert trace.stable_at == 1
    colors = trace.colorings[-1].colors
    assert colors[0] == colors[2] != colors[1]


def test_distinguishes():
    c6, cc3 = cycle(6), two_triangles()
    assert not wlkern.distinguishes(c6, cc3, wlkern.Algorithm.WL1, 1)
    assert wlkern.distinguishes(c6, cc3, wlkern.Algorithm.KWL, 2)
    assert wlkern.distinguishes(c6, cc3, wlkern.Algorithm.DKWL, 2)


def test_brute_force_isomorphic():
    c6 = cycle(6)
    perm = [2, 4, 0, 5, 1, 3]
    assert wlkern.brute_force_isomorphic(c6, wlkern.permute_graph(c6, perm))
    assert not wlkern.brute_force_isomorphic(c6, two_triangles())


def test_normalized_gram():
    dictionary = wlkern.ColorDictionary()
    features = wlkern.wl_feature_vectors(
        [cycle(6), path3(), two_triangles()],
        wlkern.Algorithm.DKLWL,
        2,
        2,
        dictionary,
    )
    gram = wlkern.normalize_gram(wlkern.gram_matrix(features))
    assert gram.size == 3
    assert gram.normalized
    for i in range(3):
        assert gram.at(i, i) == 1.0
        for j in range(3):
            assert gram.at(i, j) == gram.at(j, i)
            assert abs(gram.at(i, j)) <= 1.0 + 1e-12


def test_feature_vector_counts():
    dictionary = wlkern.ColorDictionary()
    f = wlkern.wl_feature_vector(path3(), wlkern.Algorithm.WL1, 1, 1, dictionary)
    assert f.total == 6  # (h+1) * n
    assert sum(f.counts.values()) == 6


def test_tu_dataset(tmp_path):
    dataset = wlkern.load_tu_dataset(FIXTURES / "TINY")
    assert dataset.stats.graph_count == 3
    assert dataset.stats.class_count == 2
    assert dataset.class_labels == [1, 2, 1]
    assert dataset.graphs[2].num_edges == 3

    wlkern.write_tu_dataset(dataset, tmp_path / "TINY")
    reloaded = wlkern.load_tu_dataset(tmp_path / "TINY", "TINY")
    assert reloaded.stats.graph_count == 3
    assert math.isclose(reloaded.stats.mean_edges, dataset.stats.mean_edges)


def test_gram_file_export(tmp_path):
    dictionary = wlkern.ColorDictionary()
    features = wlkern.wl_feature_vectors(
        [cycle(5), cycle(6)], wlkern.Algorithm.WL1, 1, 1, dictionary
    )
    gram = wlkern.gram_matrix(features)
    out = tmp_path / "pair.gram"
    wlkern.write_gram_matrix(out, gram)
    lines = out.read_text().splitlines()
    assert lines[0] == "2"
    assert len(lines) == 3
