#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <variant>

#include "syntaft/error.hpp"
#include "syntaft/io.hpp"

namespace syntaft {

/// Objects loaded from files, keyed by path. Each path is read once and the
/// stored object is never modified.
class Workspace {
 public:
  using Object = std::variant<FinAlgebra, LinearFunctional, FiniteGroup, LinearRepresentation, Dfa,
                              FiniteLanguage, Triangulation, FormulaFile>;

  const FinAlgebra& algebra(const std::string& path) { return fetch<FinAlgebra>(path, read_algebra); }
  const LinearFunctional& functional(const std::string& path) {
    return fetch<LinearFunctional>(path, read_functional);
  }
  const FiniteGroup& group(const std::string& path) { return fetch<FiniteGroup>(path, read_group); }
  const LinearRepresentation& wfa(const std::string& path) {
    return fetch<LinearRepresentation>(path, read_wfa);
  }
  const Dfa& dfa(const std::string& path) { return fetch<Dfa>(path, read_dfa); }
  const FiniteLanguage& language(const std::string& path) {
    return fetch<FiniteLanguage>(path, read_language);
  }
  const Triangulation& triangulation(const std::string& path) {
    return fetch<Triangulation>(path, read_triangulation);
  }
  const FormulaFile& formula(const std::string& path) { return fetch<FormulaFile>(path, read_formula_file); }

  std::size_t size() const noexcept { return objects_.size(); }

 private:
  template <class T, class Reader>
  const T& fetch(const std::string& path, Reader reader) {
    auto it = objects_.find(path);
    if (it == objects_.end()) it = objects_.emplace(path, Object(reader(read_file(path)))).first;
    if (const T* obj = std::get_if<T>(&it->second)) return *obj;
    throw ParseError(ErrorCode::ParseError, 0, 0, "'" + path + "' was loaded as a different kind of object");
  }

  std::map<std::string, Object> objects_;
};

/// Exit codes: 0 all verdicts pass, 1 a verdict fails or a precondition is
/// violated, 2 usage or parse error, 3 budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace syntaft
