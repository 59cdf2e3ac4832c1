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

"""Color refinement toolkit: amenability, Tinhofer isomorphism, fractional LP."""

from ._crkit import (
    BudgetExceeded,
    Graph,
    ParseError,
    amenable_bruteforce,
    automorphisms,
    birkhoff_decompose,
    canonical_form,
    check_cdef,
    compact_probe,
    cr_equivalent,
    describe_cell_graph,
    disjoint_union,
    evaluate_circuit,
    is_amenable,
    is_discrete,
    is_fractionally_isomorphic,
    is_godsil,
    is_refinable,
    is_tinhofer,
    isomorphic,
    load,
    load_file,
    named_graph,
    orbit_partition,
    reduce_circuit,
    refinement_trace,
    replay,
    stable_partition,
    sweep,
    tinhofer_iso,
)

__version__ = "0.1.0"


def cycle(n):
    return named_graph("cycle", [n])


def path(n):
    return named_graph("path", [n])


def complete(n):
    return named_graph("complete", [n])
