// Label-based Python view of the library: elements go in and come out as
// their string labels, never as indices.

#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posetprune/families.hpp"
#include "posetprune/io.hpp"
#include "posetprune/irreducibles.hpp"
#include "posetprune/pruning.hpp"
#include "posetprune/theorems.hpp"
#include "posetprune/veins.hpp"

namespace py = pybind11;
namespace pp = posetprune;

namespace {

using Labels = std::vector<std::string>;

pp::Mode to_mode(const std::string& m) {
  if (m == "fast") return pp::Mode::fast;
  if (m == "oracle") return pp::Mode::oracle;
  throw py::value_error("mode must be 'fast' or 'oracle'");
}

std::vector<Labels> chains(const pp::Poset& p, const std::vector<pp::Chain>& cs) {
  std::vector<Labels> out;
  for (const auto& c : cs) out.push_back(p.labels_of(c));
  return out;
}

std::vector<pp::LabelPair> pairs(const pp::Poset& p, const std::vector<pp::ElementPair>& ps) {
  std::vector<pp::LabelPair> out;
  for (const auto& [x, y] : ps) out.emplace_back(p.label(x), p.label(y));
  return out;
}

pp::Chain chain_of(const pp::Poset& p, const Labels& labels) {
  pp::Chain c;
  for (const auto& l : labels) c.push_back(p.at(l));
  std::sort(c.begin(), c.end(), [&](pp::Element a, pp::Element b) { return p.less(a, b); });
  return c;
}

py::object witness(const pp::Poset& p, const std::optional<pp::PruneWitness>& w) {
  if (!w) return py::none();
  return py::cast(p.labels_of(w->chain));
}

py::dict profile_dict(const pp::Poset& p, const std::vector<pp::IrreducibilityProfile>& profiles) {
  py::dict d;
  for (const auto& prof : profiles) {
    py::dict row;
    row["irreducible"] = prof.irreducible;
    row["coirreducible"] = prof.coirreducible;
    row["doubly"] = prof.doubly;
    d[py::str(p.label(prof.element))] = row;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite posets, veins and the pruning order.";

  static py::exception<pp::PosetError> poset_error(m, "PosetError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const pp::PosetError& e) {
      py::object exc = py::handle(poset_error.ptr())(py::str(e.what()));
      exc.attr("code") = py::str(std::string(pp::to_string(e.code())));
      if (const auto* ce = dynamic_cast<const pp::CycleError*>(&e)) exc.attr("cycle") = py::cast(ce->cycle());
      if (const auto* pe = dynamic_cast<const pp::ParseError*>(&e)) exc.attr("line") = pe->line();
      PyErr_SetObject(poset_error.ptr(), exc.ptr());
    }
  });

  py::class_<pp::Poset>(m, "Poset")
      .def(py::init([](const Labels& elements, const std::vector<pp::LabelPair>& relations) {
             return pp::Poset::from_relations(elements, relations);
           }),
           py::arg("elements"), py::arg("relations") = std::vector<pp::LabelPair>{})
      .def_static("parse", [](const std::string& s) { return pp::read_poset(s); }, py::arg("source"),
                  "Text or JSON document.")
      .def("__len__", &pp::Poset::size)
      .def("__eq__", [](const pp::Poset& a, const pp::Poset& b) { return a == b; })
      .def("__repr__", [](const pp::Poset& p) {
        return "<Poset " + std::to_string(p.size()) + " elements, " + std::to_string(p.cover_pairs().size()) +
               " covers>";
      })
      .def_property_readonly("elements", &pp::Poset::labels)
      .def("covers", [](const pp::Poset& p) { return pairs(p, p.cover_pairs()); })
      .def("relations", [](const pp::Poset& p) { return pairs(p, p.relations()); })
      .def("leq", [](const pp::Poset& p, const std::string& a, const std::string& b) { return p.leq(p.at(a), p.at(b)); })
      .def("less", [](const pp::Poset& p, const std::string& a, const std::string& b) { return p.less(p.at(a), p.at(b)); })
      .def("minimal", [](const pp::Poset& p) { return p.labels_of(p.minimal_elements()); })
      .def("maximal", [](const pp::Poset& p) { return p.labels_of(p.maximal_elements()); })
      .def("maximal_chains", [](const pp::Poset& p) { return chains(p, p.maximal_chains()); })
      .def("is_conditionally_complete", &pp::Poset::is_conditionally_complete)
      .def("opposite", &pp::Poset::opposite)
      .def("to_text", [](const pp::Poset& p) { return pp::emit_text(p); })
      .def("to_json", [](const pp::Poset& p) { return pp::emit_json(pp::to_document(p)); })
      .def("to_dot", [](const pp::Poset& p) { return pp::emit_dot(p); });

  m.def("strict_veins", [](const pp::Poset& p, const std::string& mode) { return chains(p, pp::strict_veins(p, to_mode(mode))); },
        py::arg("poset"), py::arg("mode") = "fast");
  m.def("all_veins", [](const pp::Poset& p, const std::string& mode) { return chains(p, pp::all_veins(p, to_mode(mode))); },
        py::arg("poset"), py::arg("mode") = "fast");
  m.def("maximal_veins", [](const pp::Poset& p) { return chains(p, pp::maximal_veins(p)); });
  m.def("bridge_edges", [](const pp::Poset& p) { return pairs(p, pp::bridge_edges(p)); });
  m.def("is_vein", [](const pp::Poset& p, const Labels& c) { return pp::is_vein(p, p.set_of(c)); });
  m.def("is_irreducible_chain", [](const pp::Poset& p, const Labels& c) { return pp::is_irreducible_chain(p, p.set_of(c)); });

  m.def(
      "pruning_leq",
      [](const pp::Poset& p, const std::string& x, const std::string& y, const std::string& mode) {
        auto r = pp::pruning_leq(p, p.at(x), p.at(y), to_mode(mode));
        return py::make_tuple(r.holds, witness(p, r.witness));
      },
      py::arg("poset"), py::arg("x"), py::arg("y"), py::arg("mode") = "fast");
  m.def(
      "pruned_poset", [](const pp::Poset& p, const std::string& mode) { return pp::pruned_poset(p, to_mode(mode)); },
      py::arg("poset"), py::arg("mode") = "fast");
  m.def(
      "prune",
      [](const pp::Poset& p, const std::string& mode) {
        auto r = pp::prune(p, to_mode(mode));
        py::dict w;
        for (const auto& [pair, wit] : r.witnesses)
          w[py::make_tuple(p.label(pair.first), p.label(pair.second))] = p.labels_of(wit.chain);
        py::dict d;
        d["pruned"] = r.pruned;
        d["removed_relations"] = r.removed_relations;
        d["witnesses"] = w;
        d["fixpoint_reached_after"] = r.fixpoint_reached_after;
        return d;
      },
      py::arg("poset"), py::arg("mode") = "fast");
  m.def(
      "iterate_prune",
      [](const pp::Poset& p, std::size_t max_iters, const std::string& mode) {
        auto r = pp::iterate_prune(p, max_iters, to_mode(mode));
        return py::make_tuple(r.sequence, r.fixpoint_index);
      },
      py::arg("poset"), py::arg("max_iters") = pp::default_max_prune_iterations, py::arg("mode") = "fast");
  m.def("star_chain_check", [](const pp::Poset& p, const std::string& x, const std::string& y, const Labels& chain,
                               const std::string& mode) {
    return pp::star_chain_check(p, p.at(x), p.at(y), chain_of(p, chain), to_mode(mode));
  }, py::arg("poset"), py::arg("x"), py::arg("y"), py::arg("chain"), py::arg("mode") = "fast");
  m.def("cover_inheritance_check", [](const pp::Poset& p, const std::string& x, const std::string& y,
                                      const std::string& mode) {
    return pp::cover_inheritance_check(p, p.at(x), p.at(y), to_mode(mode));
  }, py::arg("poset"), py::arg("x"), py::arg("y"), py::arg("mode") = "fast");

  m.def("irreducibles", [](const pp::Poset& p) { return p.labels_of(pp::irreducibles(p)); });
  m.def("coirreducibles", [](const pp::Poset& p) { return p.labels_of(pp::coirreducibles(p)); });
  m.def("doubly_irreducibles", [](const pp::Poset& p) { return p.labels_of(pp::doubly_irreducibles(p)); });
  m.def("is_irreducible_via_meet", [](const pp::Poset& p, const std::string& x) { return pp::is_irreducible_via_meet(p, p.at(x)); });
  m.def("profiles", [](const pp::Poset& p) { return profile_dict(p, pp::profiles(p)); });
  m.def(
      "preservation_report",
      [](const pp::Poset& p, const std::string& mode, bool require_hypothesis) {
        auto r = pp::preservation_report(p, to_mode(mode), require_hypothesis);
        py::dict d;
        d["hypothesis_met"] = r.hypothesis_met;
        d["preserved"] = r.preserved;
        d["original"] = profile_dict(p, r.original);
        d["pruned"] = profile_dict(p, r.pruned);
        return d;
      },
      py::arg("poset"), py::arg("mode") = "fast", py::arg("require_hypothesis") = true);

  m.def(
      "generate",
      [](const std::string& kind, std::size_t size, std::uint64_t seed, std::optional<double> edge_prob,
         const std::string& name) {
        auto k = pp::parse_gen_kind(kind);
        if (!k) throw pp::PosetError(pp::ErrorCode::invalid_spec, "unknown kind '" + kind + "'");
        return pp::generate({*k, size, seed, edge_prob, name});
      },
      py::arg("kind"), py::arg("size") = 1, py::arg("seed") = 0, py::arg("edge_prob") = py::none(),
      py::arg("name") = "");
  m.def("fixtures", &pp::fixtures);

  m.def(
      "check",
      [](std::uint64_t seed, std::size_t count, std::size_t max_size) {
        pp::CheckSummary s;
        {
          py::gil_scoped_release release;
          s = pp::run_theorem_suite({seed, count, max_size});
        }
        py::list failures;
        for (const auto& f : s.failures)
          failures.append(py::make_tuple(f.property, f.message, pp::emit_text(f.counterexample)));
        py::dict d;
        d["posets_checked"] = s.posets_checked;
        d["property_runs"] = s.property_runs;
        d["failures"] = failures;
        return d;
      },
      py::arg("seed") = 42, py::arg("count") = 100, py::arg("max_size") = 10);
}
