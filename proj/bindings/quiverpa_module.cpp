#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverpa/commands.hpp"
#include "quiverpa/group.hpp"
#include "quiverpa/instance.hpp"
#include "quiverpa/pathalg.hpp"
#include "quiverpa/quiver.hpp"
#include "quiverpa/quiver_paction.hpp"

namespace py = pybind11;
using namespace qpa;

namespace {

Subquiver subquiver_of(const Quiver& q, const std::vector<std::string>& vs,
                       const std::vector<std::string>& as) {
  return Subquiver::of(q, vs, as);
}

QuiverPartialAction make_partial_action(
    const FiniteGroup& group, const Quiver& quiver,
    const std::map<std::string,
                   std::pair<std::vector<std::string>,
                             std::vector<std::string>>>& domains,
    const std::map<std::string, std::map<std::string, std::string>>&
        vertex_maps,
    const std::map<std::string, std::map<std::string, std::string>>&
        arrow_maps) {
  QuiverPartialAction a;
  a.group = group;
  a.quiver = quiver;
  const int m = group.size();
  a.domains.resize(m);
  a.vertex_maps.resize(m);
  a.arrow_maps.resize(m);
  for (int g = 0; g < m; ++g) a.domains[g].parent = quiver;

  bool identity_given = false;
  for (const auto& [name, content] : domains) {
    int g = group.index(name);
    if (g == group.identity()) identity_given = true;
    a.domains[g] = subquiver_of(quiver, content.first, content.second);
  }
  auto resolve = [&](const std::string& name, bool vertex) {
    int idx = vertex ? quiver.vertex_index(name) : quiver.arrow_index(name);
    if (idx < 0)
      throw std::invalid_argument("unknown identifier '" + name + "'");
    return idx;
  };
  for (const auto& [name, mapping] : vertex_maps) {
    int g = group.index(name);
    if (g == group.identity()) identity_given = true;
    for (const auto& [from, to] : mapping)
      a.vertex_maps[g].emplace(resolve(from, true), resolve(to, true));
  }
  for (const auto& [name, mapping] : arrow_maps) {
    int g = group.index(name);
    if (g == group.identity()) identity_given = true;
    for (const auto& [from, to] : mapping)
      a.arrow_maps[g].emplace(resolve(from, false), resolve(to, false));
  }
  if (!identity_given) {
    const int e = group.identity();
    a.domains[e] = Subquiver::full(quiver);
    for (int v = 0; v < quiver.n_vertices(); ++v) a.vertex_maps[e].emplace(v, v);
    for (int x = 0; x < quiver.n_arrows(); ++x) a.arrow_maps[e].emplace(x, x);
  }
  return a;
}

py::dict morphism_vertex_map(const QuiverMorphism& f) {
  py::dict out;
  for (int v = 0; v < f.source().n_vertices(); ++v)
    out[py::str(f.source().vertex_name(v))] =
        f.target().vertex_name(f.apply_vertex(v));
  return out;
}

py::dict morphism_arrow_map(const QuiverMorphism& f) {
  py::dict out;
  for (int a = 0; a < f.source().n_arrows(); ++a)
    out[py::str(f.source().arrow(a).id)] = f.target().arrow(f.apply_arrow(a)).id;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact partial group actions on quivers and path algebras";
  m.attr("__version__") = "0.1.0";

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_property_readonly("valid", &ValidationReport::valid)
      .def_property_readonly("items",
                             [](const ValidationReport& r) {
                               std::vector<std::pair<std::string, std::string>>
                                   items;
                               for (const auto& item : r.items)
                                 items.emplace_back(item.clause, item.message);
                               return items;
                             })
      .def("__bool__", &ValidationReport::valid)
      .def("__repr__", [](const ValidationReport& r) {
        return r.valid() ? std::string("<valid>") : r.to_string();
      });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("cyclic", &FiniteGroup::cyclic, py::arg("n"))
      .def_static("from_permutations", &FiniteGroup::from_permutations,
                  py::arg("generators"), py::arg("max_elements") = 10000)
      .def_property_readonly("elements", &FiniteGroup::elements)
      .def_property_readonly("identity",
                             [](const FiniteGroup& g) {
                               return g.name(g.identity());
                             })
      .def("__len__", &FiniteGroup::size)
      .def("mul",
           py::overload_cast<const std::string&, const std::string&>(
               &FiniteGroup::mul, py::const_),
           py::arg("a"), py::arg("b"))
      .def("inv",
           py::overload_cast<const std::string&>(&FiniteGroup::inv, py::const_),
           py::arg("a"))
      .def("validate", &FiniteGroup::validate)
      .def("__eq__", [](const FiniteGroup& a, const FiniteGroup& b) {
        return a == b;
      });

  py::class_<Quiver>(m, "Quiver")
      .def(py::init([](const std::vector<std::string>& vertices,
                       const std::vector<std::tuple<std::string, std::string,
                                                    std::string>>& arrows) {
             std::vector<Arrow> as;
             for (const auto& [id, src, tgt] : arrows)
               as.push_back(Arrow{id, src, tgt});
             return Quiver(vertices, std::move(as));
           }),
           py::arg("vertices"), py::arg("arrows"))
      .def_property_readonly("vertices", &Quiver::vertices)
      .def_property_readonly(
          "arrows",
          [](const Quiver& q) {
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& a : q.arrows())
              out.emplace_back(a.id, a.source, a.target);
            return out;
          })
      .def("validate", &Quiver::validate)
      .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
      .def("__repr__", [](const Quiver& q) {
        return "<Quiver with " + std::to_string(q.n_vertices()) +
               " vertices, " + std::to_string(q.n_arrows()) + " arrows>";
      });

  py::class_<QuiverMorphism>(m, "QuiverMorphism")
      .def_property_readonly("vertex_map", &morphism_vertex_map)
      .def_property_readonly("arrow_map", &morphism_arrow_map)
      .def("is_isomorphism", &QuiverMorphism::is_isomorphism);

  py::class_<GlobalQuiverAction>(m, "GlobalQuiverAction")
      .def_property_readonly("group",
                             [](const GlobalQuiverAction& b) { return b.group; })
      .def_property_readonly(
          "quiver", [](const GlobalQuiverAction& b) { return b.quiver; })
      .def("beta",
           [](const GlobalQuiverAction& b, const std::string& element) {
             return b.beta(b.group.index(element));
           },
           py::arg("element"))
      .def("validate", &GlobalQuiverAction::validate);

  py::class_<QuiverPartialAction>(m, "QuiverPartialAction")
      .def(py::init(&make_partial_action), py::arg("group"), py::arg("quiver"),
           py::arg("domains"), py::arg("vertex_maps"), py::arg("arrow_maps"))
      .def_property_readonly(
          "group", [](const QuiverPartialAction& a) { return a.group; })
      .def_property_readonly(
          "quiver", [](const QuiverPartialAction& a) { return a.quiver; })
      .def("domain",
           [](const QuiverPartialAction& a, const std::string& element) {
             int g = a.group.index(element);
             std::vector<std::string> vs, as;
             for (int v : a.domains[g].vertices)
               vs.push_back(a.quiver.vertex_name(v));
             for (int x : a.domains[g].arrows)
               as.push_back(a.quiver.arrow(x).id);
             return std::make_pair(vs, as);
           },
           py::arg("element"))
      .def("check",
           [](const QuiverPartialAction& a) {
             return check_quiver_partial_action(a);
           })
      .def("__eq__", [](const QuiverPartialAction& a,
                        const QuiverPartialAction& b) { return a == b; });

  py::class_<EnvelopingQuiverAction>(m, "EnvelopingQuiverAction")
      .def_property_readonly(
          "quiver",
          [](const EnvelopingQuiverAction& e) { return e.global.quiver; })
      .def_property_readonly(
          "global_action",
          [](const EnvelopingQuiverAction& e) { return e.global; })
      .def_property_readonly(
          "embedding",
          [](const EnvelopingQuiverAction& e) { return e.embedding; })
      .def_property_readonly(
          "original",
          [](const EnvelopingQuiverAction& e) { return e.original; })
      .def("check",
           [](const EnvelopingQuiverAction& e) { return check_enveloping(e); });

  m.def("check_quiver_partial_action", &check_quiver_partial_action,
        py::arg("action"));
  m.def(
      "restrict_global_action",
      [](const GlobalQuiverAction& b, const std::vector<std::string>& vertices,
         const std::vector<std::string>& arrows) {
        return restrict_global_action(b, subquiver_of(b.quiver, vertices,
                                                      arrows));
      },
      py::arg("action"), py::arg("vertices"), py::arg("arrows"));
  m.def(
      "envelope",
      [](const QuiverPartialAction& a, std::optional<std::uint64_t> seed) {
        GlobalizeOptions opts;
        opts.shuffle_seed = seed;
        return envelope_quiver_action(a, opts);
      },
      py::arg("action"), py::arg("shuffle_seed") = std::nullopt);
  m.def("enveloping_isomorphism", &enveloping_isomorphism, py::arg("first"),
        py::arg("second"));
  m.def(
      "automorphisms",
      [](const Quiver& q, std::size_t cap) { return automorphisms(q, cap); },
      py::arg("quiver"), py::arg("cap") = 100000);
  m.def(
      "export_dot",
      [](const Quiver& q, const std::vector<std::string>& highlight_vertices,
         const std::vector<std::string>& highlight_arrows) {
        if (highlight_vertices.empty() && highlight_arrows.empty())
          return export_dot(q);
        return export_dot(
            q, subquiver_of(q, highlight_vertices, highlight_arrows));
      },
      py::arg("quiver"),
      py::arg("highlight_vertices") = std::vector<std::string>{},
      py::arg("highlight_arrows") = std::vector<std::string>{});
  m.def("truncated_dimension", &truncated_dimension, py::arg("quiver"),
        py::arg("max_len"));

  m.def(
      "check_induced_action",
      [](const QuiverPartialAction& a, int max_len) {
        return check_subalgebra_partial_action(induced_partial_action(a),
                                               max_len);
      },
      py::arg("action"), py::arg("max_len") = 4);
  m.def(
      "sum_of_translates_dimension",
      [](const EnvelopingQuiverAction& e, int max_len) {
        return sum_of_translates(e, max_len).dimension(max_len);
      },
      py::arg("envelope"), py::arg("max_len"));
  m.def(
      "generated_subalgebra_dimension",
      [](const EnvelopingQuiverAction& e, int max_len) {
        return generated_subalgebra(e, max_len).dimension(max_len);
      },
      py::arg("envelope"), py::arg("max_len"));
  m.def(
      "not_ideal_witness",
      [](const QuiverPartialAction& a, const std::string& element,
         int max_len) -> std::optional<std::string> {
        auto induced = induced_partial_action(a);
        auto witness = check_not_ideal(
            induced.domain_span(induced.group.index(element)), max_len);
        if (!witness) return std::nullopt;
        return witness->to_string(*induced.quiver);
      },
      py::arg("action"), py::arg("element"), py::arg("max_len") = 4);
  m.def(
      "check_algebra_globalization",
      [](const EnvelopingQuiverAction& e, int max_len) {
        return check_algebra_globalization(e, max_len);
      },
      py::arg("envelope"), py::arg("max_len") = 4);
  m.def(
      "canonical_algebra_isomorphism",
      [](const EnvelopingQuiverAction& e1, const EnvelopingQuiverAction& e2,
         int max_len) {
        auto eta = canonical_algebra_isomorphism(e1, e2, max_len);
        std::map<std::string, std::string> out;
        for (const auto& [p, image] : eta.images)
          out.emplace(p.to_string(*eta.source), image.to_string(*eta.target));
        return out;
      },
      py::arg("first"), py::arg("second"), py::arg("max_len") = 3);

  m.def(
      "run_command",
      [](const std::string& verb, const std::string& text, int truncate,
         bool structured) {
        CommandOptions opts;
        opts.truncate = truncate;
        opts.structured = structured;
        auto result = run_command(verb, text, opts);
        return std::make_pair(result.exit_code, result.output);
      },
      py::arg("verb"), py::arg("text"), py::arg("truncate") = -1,
      py::arg("structured") = false);
}
