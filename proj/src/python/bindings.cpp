#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "syntaft/cli.hpp"
#include "syntaft/io.hpp"

namespace py = pybind11;
using namespace syntaft;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

Rational rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list fractions(const Vector& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

Vector vector_of(const py::iterable& items) {
  Vector v;
  for (const auto& x : items) v.push_back(rational(x));
  return v;
}

Word word_of(const py::object& w, const std::vector<Symbol>& alphabet) {
  if (py::isinstance<py::str>(w)) return parse_word(w.cast<std::string>(), alphabet);
  return w.cast<Word>();
}

}  // namespace

PYBIND11_MODULE(_syntaft, m) {
  m.doc() = "Exact syntactic algebras, weighted automata, lattice TFT state sums and weighted MSO.";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(parse_error.ptr())(e.what());
      exc.attr("code") = std::string(error_code_name(e.code()));
      exc.attr("line") = e.line();
      exc.attr("column") = e.column();
      PyErr_SetObject(parse_error.ptr(), exc.ptr());
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(error_code_name(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<LinearFunctional>(m, "Functional")
      .def(py::init([](const py::iterable& c) { return LinearFunctional(vector_of(c)); }))
      .def_property_readonly("coefficients", [](const LinearFunctional& f) { return fractions(f.coefficients()); })
      .def("__call__", [](const LinearFunctional& f, const py::iterable& v) { return fraction(f(vector_of(v))); })
      .def("__eq__", [](const LinearFunctional& a, const LinearFunctional& b) { return a == b; });

  py::class_<FinAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &FinAlgebra::dim)
      .def_property_readonly("basis", &FinAlgebra::basis_names)
      .def_property_readonly("unit", [](const FinAlgebra& a) { return fractions(a.unit()); })
      .def("multiply", [](const FinAlgebra& a, const py::iterable& x, const py::iterable& y) {
        return fractions(multiply(a, vector_of(x), vector_of(y)));
      })
      .def("__eq__", [](const FinAlgebra& a, const FinAlgebra& b) { return a == b; });

  m.def("field_algebra", &field_algebra);
  m.def("diagonal_algebra", &diagonal_algebra, py::arg("copies"));
  m.def("matrix_algebra", &matrix_algebra, py::arg("n"));
  m.def("dual_numbers", &dual_numbers);
  m.def("upper_triangular_algebra", &upper_triangular_algebra);
  m.def("validate", [](const FinAlgebra& a) { return py::make_tuple(validate(a).ok, validate(a).message); });
  m.def("is_commutative", &is_commutative);
  m.def("is_semisimple", &is_semisimple);
  m.def("is_frobenius", &is_frobenius);
  m.def("is_symmetric", &is_symmetric);
  m.def("is_syntactic_hyperplane", &is_syntactic_hyperplane);
  m.def("canonical_form", &canonical_form);
  m.def("center_dim", [](const FinAlgebra& a) { return center(a).subspace.dim(); });
  m.def("block_sizes", [](const FinAlgebra& a) { return split_blocks(a).matrix_sizes; });

  py::class_<LinearRepresentation>(m, "Wfa")
      .def_property_readonly("alphabet", &LinearRepresentation::alphabet)
      .def_property_readonly("dim", &LinearRepresentation::dim)
      .def("__call__", [](const LinearRepresentation& r, const py::object& w) {
        return fraction(evaluate(r, word_of(w, r.alphabet())));
      });
  m.def("minimize", &minimize);
  m.def("equivalent", &equivalent);
  m.def("is_exchangeable", &is_exchangeable);
  m.def("series_from_algebra", &series_from_algebra);
  m.def("syntactic_algebra", [](const LinearRepresentation& r) {
    SyntacticPresentation p = syntactic_algebra(r);
    return py::make_tuple(p.algebra, p.functional);
  });

  py::class_<Dfa>(m, "Dfa")
      .def_property_readonly("states", &Dfa::states)
      .def_property_readonly("alphabet", &Dfa::alphabet)
      .def("accepts", [](const Dfa& d, const py::object& w) { return d.accepts(word_of(w, d.alphabet())); });
  m.def("char_series", &char_series);

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("names", &FiniteGroup::names);
  m.def("catalog", &catalog, py::arg("name"), py::arg("parameter") = 0);
  m.def("group_algebra", [](const FiniteGroup& g, const std::string& norm) {
    if (norm != "delta" && norm != "dw") throw Error(ErrorCode::UnknownCatalogEntry, "normalization is delta or dw");
    return group_algebra(g, norm == "dw" ? Normalization::DijkgraafWitten : Normalization::Delta);
  }, py::arg("group"), py::arg("normalization") = "delta");
  m.def("count_surface_homs", [](const FiniteGroup& g, std::size_t genus) { return count_surface_homs(g, genus); });

  py::class_<FiniteLanguage>(m, "Language")
      .def_property_readonly("words", &FiniteLanguage::words);
  m.def("is_code", &is_code);
  m.def("is_biprefix", &is_biprefix_finite);
  m.def("group_code_dfa", &group_code_dfa);
  m.def("verify_group_code", [](const FiniteGroup& g) {
    const GroupCodeReport r = verify_group_code(g);
    py::dict d;
    d["biprefix"] = r.biprefix;
    d["algebra_dim"] = r.algebra_dim;
    d["dimension_matches"] = r.dimension_matches;
    d["letter_isomorphism"] = r.letter_isomorphism;
    d["semisimple"] = r.semisimple;
    d["all_pass"] = r.all_pass();
    return d;
  });

  py::class_<Triangulation>(m, "Triangulation")
      .def_property_readonly("triangle_count", &Triangulation::triangle_count);
  m.def("standard_triangulation", &standard_triangulation, py::arg("genus"));
  m.def("analyze", [](const Triangulation& t) {
    const SurfaceInvariantReport r = analyze(t);
    py::dict d;
    d["euler_characteristic"] = r.euler_characteristic;
    d["genus"] = r.genus;
    d["vertices"] = r.vertex_count;
    d["edges"] = r.edge_count;
    d["faces"] = r.face_count;
    return d;
  });
  m.def("random_moves", [](const Triangulation& t, std::size_t count, std::uint64_t seed) {
    return apply_moves(t, random_moves(t, count, seed));
  }, py::arg("triangulation"), py::arg("count"), py::arg("seed"));
  m.def("state_sum", [](const FinAlgebra& a, const Triangulation& t, std::uint64_t budget) {
    return fraction(state_sum(a, t, budget));
  }, py::arg("algebra"), py::arg("triangulation"), py::arg("budget") = kDefaultContractionBudget);
  m.def("closed_invariant", [](const FinAlgebra& a, const LinearFunctional& f, std::size_t genus) {
    return fraction(closed_invariant(a, f, genus));
  });

  py::class_<FormulaNode, std::shared_ptr<FormulaNode>>(m, "Formula")
      .def("__str__", [](const std::shared_ptr<FormulaNode>& f) { return to_string(Formula(f)); });
  m.def("parse_formula", [](const std::string& text) { return std::const_pointer_cast<FormulaNode>(parse_formula(text)); });
  m.def("is_restricted", [](const std::shared_ptr<FormulaNode>& f) { return is_restricted(f); });
  m.def("evaluate_formula", [](const std::shared_ptr<FormulaNode>& f, const py::object& w,
                               const std::vector<Symbol>& alphabet) {
    if (alphabet.empty() && py::isinstance<py::str>(w)) {
      Word letters;
      for (char c : w.cast<std::string>())
        if (c != ' ') letters.emplace_back(1, c);
      return fraction(evaluate_formula(f, letters));
    }
    return fraction(evaluate_formula(f, word_of(w, alphabet)));
  }, py::arg("formula"), py::arg("word"), py::arg("alphabet") = std::vector<Symbol>{});
  m.def("wfa_to_formula", [](const LinearRepresentation& r) {
    return std::const_pointer_cast<FormulaNode>(wfa_to_formula(r));
  });

  m.def("load", [](const std::string& text) -> py::object {
    switch (detect_kind(text)) {
      case FileKind::Algebra: return py::cast(read_algebra(text));
      case FileKind::Functional: return py::cast(read_functional(text));
      case FileKind::Group: return py::cast(read_group(text));
      case FileKind::Wfa: return py::cast(read_wfa(text));
      case FileKind::Dfa: return py::cast(read_dfa(text));
      case FileKind::Language: return py::cast(read_language(text));
      case FileKind::Triangulation: return py::cast(read_triangulation(text));
      case FileKind::Formula: return py::cast(std::const_pointer_cast<FormulaNode>(read_formula_file(text).formula));
      case FileKind::Moves: break;
    }
    throw Error(ErrorCode::ParseError, "moves files need a starting triangulation");
  }, py::arg("text"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"syntaft"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
