// Python bindings: structures are loaded from the same JSON documents the
// command line tool reads, and names are used wherever an element is passed.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tightforge/corpus.hpp"
#include "tightforge/error.hpp"
#include "tightforge/fsp.hpp"
#include "tightforge/gpd.hpp"
#include "tightforge/hom.hpp"
#include "tightforge/io.hpp"
#include "tightforge/suite.hpp"
#include "tightforge/tlk.hpp"

namespace py = pybind11;
namespace tf = tightforge;

namespace {

struct Semilattice {
  tf::SemilatticePtr E;
};

struct InverseSemigroup {
  tf::InverseSemigroupPtr S;
};

int index_of(const std::vector<std::string>& names, const std::string& label) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == label) return static_cast<int>(i);
  throw tf::InputError(label, "unknown element");
}

std::vector<std::string> names_of(const std::vector<std::string>& names, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(names[i]);
  return out;
}

tf::io::Document parse(const std::string& text) { return tf::io::parse_document_text(text, tf::Limits::from_env()); }

Semilattice semilattice_from_json(const std::string& text) {
  const auto doc = parse(text);
  if (auto E = std::get_if<tf::SemilatticePtr>(&doc)) return {*E};
  throw tf::InputError("kind", "expected a semilattice with zero");
}

InverseSemigroup semigroup_from_json(const std::string& text) {
  const auto doc = parse(text);
  if (auto S = std::get_if<tf::InverseSemigroupPtr>(&doc)) return {*S};
  if (auto P = std::get_if<tf::io::PartialBijections>(&doc)) return {P->closure};
  if (auto E = std::get_if<tf::SemilatticePtr>(&doc))
    return {std::make_shared<const tf::FiniteInverseSemigroup>(tf::FiniteInverseSemigroup::from_semilattice(**E))};
  throw tf::InputError("kind", "expected an inverse semigroup, partial bijections or semilattice");
}

py::dict hom_report(const std::string& text) {
  const auto doc = parse(text);
  py::dict d;
  if (auto h = std::get_if<tf::SemilatticeHom>(&doc)) {
    const auto r = tf::is_tight_hom(*h);
    d["tight"] = r.tight();
    d["tightly_injective"] = tf::is_tightly_injective(*h);
    d["tightly_surjective"] = tf::is_tightly_surjective(*h);
    d["consonance"] = tf::check_consonance(*h).is_consonance;
    if (r.tight()) {
      const auto dual = tf::dual_map(*h);
      d["dual_surjective"] = dual.surjective;
      d["dual_injective"] = dual.injective;
    }
    return d;
  }
  if (auto h = std::get_if<tf::SemigroupHom>(&doc)) {
    const auto c = tf::check_consonance(*h);
    d["tightly_injective"] = c.injective.holds;
    d["tightly_surjective"] = c.surjective.holds;
    d["consonance"] = c.is_consonance;
    return d;
  }
  throw tf::InputError("kind", "expected a homomorphism");
}

py::dict space_duality_report(const std::string& text) {
  const auto doc = parse(text);
  const auto* X = std::get_if<tf::FiniteOrderedSpace>(&doc);
  if (!X) throw tf::InputError("kind", "expected an ordered space");
  const auto r = tf::check_tight_like_space(*X);
  py::dict d;
  d["tight_like"] = r.tight_like();
  if (r.tight_like()) {
    const auto dual = tf::space_duality(*X);
    d["ok"] = dual.ok;
    d["upsets"] = dual.upsets.lattice->size();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_tightforge, m) {
  m.doc() = "Tight spectra, tight groupoids and consonance of finite inverse semigroups";

  static py::exception<tf::Error> error(m, "Error");
  static py::exception<tf::InputError> input_error(m, "InputError", error.ptr());
  static py::exception<tf::InvalidStructure> invalid(m, "InvalidStructure", error.ptr());
  static py::exception<tf::SizeCapExceeded> size_cap(m, "SizeCapExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tf::InputError& e) {
      input_error(e.what());
    } catch (const tf::InvalidStructure& e) {
      invalid(e.what());
    } catch (const tf::SizeCapExceeded& e) {
      size_cap(e.what());
    } catch (const tf::Error& e) {
      error(e.what());
    }
  });

  py::class_<Semilattice>(m, "Semilattice")
      .def_static("from_json", &semilattice_from_json, py::arg("text"))
      .def_property_readonly("size", [](const Semilattice& s) { return s.E->size(); })
      .def_property_readonly("names", [](const Semilattice& s) { return s.E->names(); })
      .def("leq", [](const Semilattice& s, const std::string& e, const std::string& f) {
        return s.E->leq(index_of(s.E->names(), e), index_of(s.E->names(), f));
      })
      .def("tight_leq", [](const Semilattice& s, const std::string& e, const std::string& f) {
        return tf::tight_leq(*s.E, index_of(s.E->names(), e), index_of(s.E->names(), f));
      })
      .def("is_cover", [](const Semilattice& s, const std::vector<std::string>& C, const std::string& f) {
        std::vector<int> idx;
        for (const auto& c : C) idx.push_back(index_of(s.E->names(), c));
        return tf::is_cover(*s.E, idx, index_of(s.E->names(), f));
      })
      .def("tight_spectrum",
           [](const Semilattice& s) {
             std::vector<std::vector<std::string>> out;
             for (const auto& xi : tf::tight_spectrum(*s.E).points) out.push_back(names_of(s.E->names(), xi.members));
             return out;
           },
           "Members of each tight filter")
      .def("to_json", [](const Semilattice& s) { return tf::io::to_json(*s.E).dump(); });

  py::class_<InverseSemigroup>(m, "InverseSemigroup")
      .def_static("from_json", &semigroup_from_json, py::arg("text"))
      .def_static(
          "from_partial_bijections",
          [](int degree, const std::vector<std::vector<int>>& generators) {
            std::vector<tf::PartialMap> gens;
            for (const auto& g : generators) {
              tf::PartialMap m;
              for (int y : g) m.push_back(y - 1);
              gens.push_back(m);
            }
            return InverseSemigroup{std::make_shared<const tf::FiniteInverseSemigroup>(
                tf::from_partial_bijections(degree, gens, tf::Limits::from_env().max_elements))};
          },
          py::arg("degree"), py::arg("generators"), "Generators as 1-based image lists, 0 for undefined")
      .def_property_readonly("size", [](const InverseSemigroup& s) { return s.S->size(); })
      .def_property_readonly("names", [](const InverseSemigroup& s) { return s.S->names(); })
      .def("tight_leq", [](const InverseSemigroup& s, const std::string& a, const std::string& b) {
        return tf::tight_leq_s(*s.S, index_of(s.S->names(), a), index_of(s.S->names(), b));
      })
      .def("groupoid_size",
           [](const InverseSemigroup& s) {
             const auto T = tf::tight_groupoid(s.S);
             return py::make_tuple(T.groupoid().size(), T.groupoid().units().size());
           },
           "(arrows, units) of the tight groupoid")
      .def("groupoid_dot", [](const InverseSemigroup& s) {
        const auto T = tf::tight_groupoid(s.S);
        return tf::io::export_dot(T.groupoid());
      })
      .def("envelope", [](const InverseSemigroup& s) {
        return InverseSemigroup{tf::tight_envelope(s.S, tf::Limits::from_env()).cpl.semigroup};
      })
      .def("quotient", [](const InverseSemigroup& s) { return InverseSemigroup{tf::tight_quotient(s.S).quotient}; })
      .def("classify",
           [](const InverseSemigroup& s) {
             const auto c = tf::classify(*s.S, tf::Limits::from_env());
             py::dict d;
             d["flat"] = c.flat;
             d["finite_joins"] = c.has_finite_joins;
             d["distributive"] = c.distributive;
             return d;
           })
      .def("isomorphic", [](const InverseSemigroup& s, const InverseSemigroup& t) { return tf::isomorphic(*s.S, *t.S); })
      .def("to_json", [](const InverseSemigroup& s) { return tf::io::to_json(*s.S).dump(); });

  m.def("chain", [](int n) { return Semilattice{tf::corpus::chain(n)}; });
  m.def("diamond", [] { return Semilattice{tf::corpus::diamond()}; });
  m.def("symmetric_inverse_monoid",
        [](int n) { return InverseSemigroup{tf::corpus::symmetric_inverse_monoid(n, tf::Limits::from_env().max_elements)}; });
  m.def("brandt", [](int n) { return InverseSemigroup{tf::corpus::brandt(n)}; });
  m.def("cyclic_with_zero", [](int n) { return InverseSemigroup{tf::corpus::cyclic_with_zero(n)}; });

  m.def(
      "consonant",
      [](const InverseSemigroup& a, const InverseSemigroup& b) {
        const auto v = tf::decide_consonant(a.S, b.S, tf::Limits::from_env());
        return py::make_tuple(v.consonant, v.reason);
      },
      "(verdict, reason) for two inverse semigroups");
  m.def("check_hom", &hom_report, py::arg("text"), "Tightness report for a homomorphism document");
  m.def("space_duality", &space_duality_report, py::arg("text"));
  m.def(
      "run_suite",
      [](std::uint64_t seed) {
        const auto ctx = tf::suite::make_context(seed, tf::Limits::from_env());
        return tf::suite::format_report(tf::suite::run_all(ctx));
      },
      py::arg("seed") = 7);
}
