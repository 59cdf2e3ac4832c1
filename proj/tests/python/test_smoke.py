# Copyright 2026 The crkit Authors
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

from fractions import Fraction

import pytest

import crkit


def c3_plus_c4():
    return crkit.disjoint_union(crkit.cycle(3), crkit.cycle(4))


def test_graph_roundtrip():
    g = crkit.Graph(4, [(0, 1), (1, 2), (2, 3)], colors=[0, 0, 1, 1])
    assert g.n == 4
    assert g.num_edges == 3
    assert g.colors == [0, 0, 1, 1]
    assert crkit.load(g.to_text()) == g
    assert g.edges() == [(0, 1, 1), (1, 2, 1), (2, 3, 1)]


def test_parse_error():
    with pytest.raises(crkit.ParseError):
        crkit.load("p cgraph 2 1\ne 0 0\n")
    with pytest.raises(ValueError):
        crkit.Graph(2, [(0, 0)])


def test_refinement():
    assert crkit.stable_partition(crkit.cycle(7)) == [[0, 1, 2, 3, 4, 5, 6]]
    assert len(crkit.stable_partition(crkit.path(5))) == 3
    assert crkit.cr_equivalent(c3_plus_c4(), crkit.cycle(7))
    assert not crkit.is_discrete(crkit.cycle(7))


def test_amenability():
    assert crkit.is_amenable(crkit.complete(5))["amenable"]
    v = crkit.is_amenable(crkit.cycle(7))
    assert not v["amenable"]
    assert v["violation"]["condition"] == "A"
    assert crkit.check_cdef(crkit.cycle(7))["amenable"] is False
    assert crkit.amenable_bruteforce(crkit.cycle(5))


def test_tinhofer():
    r = crkit.tinhofer_iso(c3_plus_c4(), crkit.cycle(7))
    assert not r["isomorphic"]
    assert r["reason"] == "histogram"
    g = crkit.named_graph("petersen")
    h = g.permute([3, 1, 4, 0, 5, 9, 2, 6, 8, 7])
    r = crkit.tinhofer_iso(g, h, policy="rand", seed=5)
    assert r["isomorphic"]
    assert crkit.replay(g, h, r["transcript"])
    assert crkit.canonical_form(g)[1] == crkit.canonical_form(h)[1]


def test_oracles():
    assert len(crkit.automorphisms(crkit.cycle(5))) == 10
    assert crkit.isomorphic(c3_plus_c4(), crkit.cycle(7)) is None
    assert crkit.is_godsil(crkit.named_graph("petersen"))


def test_fractional():
    assert crkit.is_fractionally_isomorphic(c3_plus_c4(), crkit.cycle(7))
    r = crkit.compact_probe(c3_plus_c4(), trials=200)
    w = r["witness"]
    assert w is not None
    assert all(sum(row) == 1 for row in w)
    assert any(x.denominator > 1 for row in w for x in row)
    terms = crkit.birkhoff_decompose([["1/2", "1/2"], ["1/2", "1/2"]])
    assert [t[0] for t in terms] == [Fraction(1, 2), Fraction(1, 2)]


def test_mcvp():
    text = "g 0 const1\ng 1 const1\ng 2 and 0 1\nout 2\n"
    assert crkit.evaluate_circuit(text)
    g = crkit.reduce_circuit(text, "Gpp")
    assert g.n == 20
    assert crkit.is_discrete(g)


def test_sweep():
    r = crkit.sweep(4)
    assert r["iso_classes"] == 11
    assert r["violations"] == []
