// Copyright 2026 The crkit Authors
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

#include "crkit/amenability.hpp"
#include "crkit/fractional_lp.hpp"
#include "crkit/mcvp.hpp"
#include "crkit/oracles.hpp"
#include "crkit/refinement.hpp"
#include "crkit/tinhofer.hpp"

namespace py = pybind11;
using namespace crkit;

namespace {

using EdgeList = std::vector<std::tuple<Vertex, Vertex, unsigned>>;

ColoredGraph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        const std::vector<Color>& colors) {
  GraphBuilder b(n);
  if (!colors.empty()) {
    if (colors.size() != n) throw InvalidArgument("need one color per vertex");
    for (Vertex v = 0; v < n; ++v) b.set_color(v, colors[v]);
  }
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

EdgeList edge_list(const ColoredGraph& g) {
  EdgeList out;
  for (Vertex u = 0; u < g.n(); ++u)
    for (const Neighbor& nb : g.neighbors(u))
      if (u < nb.v) out.emplace_back(u, nb.v, nb.mult);
  return out;
}

std::vector<std::vector<Vertex>> classes(const Partition& p) {
  std::vector<std::vector<Vertex>> out;
  for (const VertexSet& c : p.classes) out.emplace_back(c.begin(), c.end());
  return out;
}

// Rationals cross the boundary as fractions.Fraction.
py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::list matrix(const RatMatrix& x) {
  py::list rows;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < x.cols(); ++j) row.append(fraction(x.at(i, j)));
    rows.append(row);
  }
  return rows;
}

py::object violation(const std::optional<Violation>& v) {
  if (!v) return py::none();
  py::dict d;
  d["condition"] = std::string(1, v->condition);
  d["kind"] = v->kind;
  d["cells"] = v->cells;
  d["cycle"] = v->cycle;
  d["description"] = describe(*v);
  return d;
}

py::dict verdict(const AmenabilityVerdict& v) {
  py::dict d;
  d["amenable"] = v.amenable;
  d["violation"] = violation(v.violation);
  return d;
}

py::list transcript(const std::vector<IndividualizationStep>& steps) {
  py::list out;
  for (const auto& s : steps) out.append(py::make_tuple(s.round, s.cls, s.u, s.v));
  return out;
}

std::vector<IndividualizationStep> steps_from(const std::vector<std::tuple<std::size_t, ClassId, Vertex, Vertex>>& in) {
  std::vector<IndividualizationStep> out;
  for (auto [r, c, u, v] : in) out.push_back({r, c, u, v});
  return out;
}

TinhoferPolicy policy(const std::string& kind, std::uint64_t seed) {
  if (kind == "det") return {Policy::Deterministic, seed};
  if (kind == "rand") return {Policy::SeededRandom, seed};
  throw InvalidArgument("policy must be 'det' or 'rand'");
}

}  // namespace

PYBIND11_MODULE(_crkit, m) {
  m.doc() = "Color refinement, amenability and fractional isomorphism";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<ColoredGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{},
           py::arg("colors") = std::vector<Color>{})
      .def_property_readonly("n", &ColoredGraph::n)
      .def_property_readonly("num_edges", &ColoredGraph::num_edges)
      .def_property_readonly("colors", [](const ColoredGraph& g) {
        return std::vector<Color>(g.colors().begin(), g.colors().end());
      })
      .def("edges", &edge_list, "(u, v, multiplicity) with u < v")
      .def("degree", &ColoredGraph::degree)
      .def("adjacent", &ColoredGraph::adjacent)
      .def("to_text", [](const ColoredGraph& g) { return save(g); })
      .def("permute", [](const ColoredGraph& g, const std::vector<Vertex>& p) { return permute(g, p); })
      .def("complement", [](const ColoredGraph& g) { return complement(g); })
      .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; })
      .def("__repr__", [](const ColoredGraph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("load", [](const std::string& text) { return load(text); });
  m.def("load_file", &load_file);
  m.def("disjoint_union", &disjoint_union);
  m.def("named_graph", [](const std::string& name, const std::vector<std::int64_t>& params,
                          std::uint64_t seed) { return graphs::by_name(name, params, seed); },
        py::arg("name"), py::arg("params") = std::vector<std::int64_t>{}, py::arg("seed") = 0);

  m.def("stable_partition", [](const ColoredGraph& g) {
    return classes(stable_partition(g).partition);
  });
  m.def("refinement_trace", [](const ColoredGraph& g) {
    return stable_partition(g, {Engine::Rounds, true}).trace.sizes;
  });
  m.def("cr_equivalent", &cr_equivalent);
  m.def("is_discrete", py::overload_cast<const ColoredGraph&>(&is_discrete));

  m.def("is_amenable", [](const ColoredGraph& g) { return verdict(is_amenable(g)); });
  m.def("check_cdef", [](const ColoredGraph& g) { return verdict(check_cdef(g)); });
  m.def("amenable_bruteforce", &amenable_bruteforce, py::arg("g"), py::arg("n_budget") = 7);
  m.def("describe_cell_graph", [](const ColoredGraph& g) { return describe(build_cell_graph(g)); });

  m.def("tinhofer_iso", [](const ColoredGraph& g, const ColoredGraph& h, const std::string& kind,
                           std::uint64_t seed) {
    const IsoResult r = tinhofer_iso(g, h, policy(kind, seed));
    py::dict d;
    d["isomorphic"] = r.isomorphic;
    d["mapping"] = r.mapping;
    d["transcript"] = transcript(r.transcript);
    d["reason"] = r.reason;
    return d;
  }, py::arg("g"), py::arg("h"), py::arg("policy") = "det", py::arg("seed") = 0);
  m.def("replay", [](const ColoredGraph& g, const ColoredGraph& h,
                     const std::vector<std::tuple<std::size_t, ClassId, Vertex, Vertex>>& steps) {
    return replay(g, h, steps_from(steps)).isomorphic;
  });
  m.def("canonical_form", [](const ColoredGraph& g, const std::string& kind, std::uint64_t seed) {
    const CanonicalForm c = canonical_form(g, policy(kind, seed));
    return py::make_tuple(c.order, c.graph, c.hash);
  }, py::arg("g"), py::arg("policy") = "det", py::arg("seed") = 0);

  m.def("automorphisms", [](const ColoredGraph& g, std::size_t max_elements) {
    return automorphisms(g, max_elements).elements;
  }, py::arg("g"), py::arg("max_elements") = 1'000'000);
  m.def("isomorphic", [](const ColoredGraph& g, const ColoredGraph& h) { return isomorphic(g, h); });
  m.def("orbit_partition", [](const ColoredGraph& g) { return classes(orbit_partition(g)); });
  m.def("is_refinable", [](const ColoredGraph& g) { return is_refinable(g); });
  m.def("is_godsil", [](const ColoredGraph& g) { return is_godsil(g); });
  m.def("is_tinhofer", [](const ColoredGraph& g) { return is_tinhofer_bruteforce(g).tinhofer; });
  m.def("sweep", [](std::size_t n, std::size_t probe_trials, std::uint64_t seed) {
    const SweepReport r = sweep(n, probe_trials, seed);
    py::dict d;
    d["n"] = r.n;
    d["labeled"] = r.labeled;
    d["iso_classes"] = r.iso_classes;
    d["discrete"] = r.discrete;
    d["amenable"] = r.amenable;
    d["amenable_bruteforce"] = r.amenable_bruteforce;
    d["godsil"] = r.godsil;
    d["tinhofer"] = r.tinhofer;
    d["refinable"] = r.refinable;
    d["probe_noncompact"] = r.probe_noncompact;
    d["violations"] = r.violations;
    return d;
  }, py::arg("n"), py::arg("probe_trials") = 0, py::arg("seed") = 0);

  m.def("is_fractionally_isomorphic", &is_fractionally_isomorphic);
  m.def("compact_probe", [](const ColoredGraph& g, std::size_t trials, std::uint64_t seed) {
    const CompactProbeResult r = compact_probe(g, trials, seed);
    py::dict d;
    d["trials_run"] = r.trials_run;
    d["witness"] = r.witness ? py::object(matrix(*r.witness)) : py::none();
    d["witness_seed"] = r.witness ? py::object(py::int_(r.witness_seed)) : py::none();
    return d;
  }, py::arg("g"), py::arg("trials") = 100, py::arg("seed") = 0);
  m.def("birkhoff_decompose", [](const std::vector<std::vector<std::string>>& rows) {
    const std::size_t n = rows.size();
    RatMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw InvalidArgument("matrix must be square");
      for (std::size_t j = 0; j < n; ++j) {
        x.at(i, j) = Rational(rows[i][j]);
        x.at(i, j).canonicalize();
      }
    }
    py::list out;
    for (const BirkhoffTerm& t : birkhoff_decompose(x))
      out.append(py::make_tuple(fraction(t.coefficient), t.permutation));
    return out;
  }, "Entries are strings such as '1/2'.");

  m.def("evaluate_circuit", [](const std::string& text) { return evaluate(parse_circuit(text)); });
  m.def("reduce_circuit", [](const std::string& text, const std::string& variant) {
    return reduce(parse_circuit(text), parse_variant(variant)).graph;
  }, py::arg("text"), py::arg("variant") = "Gpp");
}
