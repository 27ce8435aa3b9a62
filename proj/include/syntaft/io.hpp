#pragma once

// Text formats. Every file starts with a header line "syntaft-<kind> v1";
// blank lines and '#' comments are ignored. The writers emit the canonical
// form, so write(read(text)) == text for canonical files.

#include <string>
#include <string_view>
#include <vector>

#include "syntaft/algebra.hpp"
#include "syntaft/codes.hpp"
#include "syntaft/dfa.hpp"
#include "syntaft/groups.hpp"
#include "syntaft/mso.hpp"
#include "syntaft/tft.hpp"
#include "syntaft/wfa.hpp"

namespace syntaft {

enum class FileKind { Algebra, Functional, Group, Wfa, Dfa, Language, Triangulation, Formula, Moves };

std::string_view file_kind_name(FileKind kind);
/// Kind named by the header line. Throws ParseError.
FileKind detect_kind(std::string_view text);

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// syntaft-alg v1
//   dim n / basis names... / unit coords... / constants m / m lines "i j k p/q"
FinAlgebra read_algebra(std::string_view text);
std::string write_algebra(const FinAlgebra& alg);

// syntaft-functional v1
//   dim n / coeffs c_1 ... c_n
LinearFunctional read_functional(std::string_view text);
std::string write_functional(const LinearFunctional& f);

// syntaft-group v1
//   order n / names ... / table / n rows of element names. The identity is
//   the element whose row reproduces the names.
FiniteGroup read_group(std::string_view text);
std::string write_group(const FiniteGroup& g);

// syntaft-wfa v1
//   alphabet ... / dim n / initial row / per symbol "matrix <sym>" and n rows /
//   final column entries on one line
LinearRepresentation read_wfa(std::string_view text);
std::string write_wfa(const LinearRepresentation& rep);

// syntaft-dfa v1
//   states n / alphabet ... / start q / accepting q... / transitions / n rows,
//   "-" marks a missing transition
Dfa read_dfa(std::string_view text);
std::string write_dfa(const Dfa& dfa);

// syntaft-lang v1
//   alphabet ... / words m / m words
FiniteLanguage read_language(std::string_view text);
std::string write_language(const FiniteLanguage& lang);

// syntaft-tri v1
//   triangles F / lines "pair s t" or "pair s t twisted"
Triangulation read_triangulation(std::string_view text);
std::string write_triangulation(const Triangulation& t);

struct FormulaFile {
  Formula formula;
  /// Optional; words are read against it when present.
  std::vector<Symbol> alphabet;
};

// syntaft-formula v1
//   optional "alphabet ..." line, then the formula text
FormulaFile read_formula_file(std::string_view text);
std::string write_formula_file(const FormulaFile& file);

// syntaft-moves v1
//   lines "13 <triangle>", "22 <slot>" or "random <count> <seed>"; random
//   lines are expanded against the triangulation reached so far.
std::vector<Move> read_moves(std::string_view text, const Triangulation& start);
std::string write_moves(const std::vector<Move>& moves);

}  // namespace syntaft
