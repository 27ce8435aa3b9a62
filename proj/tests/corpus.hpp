#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library code paths they are compared against.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "syntaft/algebra.hpp"
#include "syntaft/codes.hpp"
#include "syntaft/groups.hpp"
#include "syntaft/wfa.hpp"

namespace corpus {

using namespace syntaft;

struct Pair {
  std::string name;
  FinAlgebra alg;
  LinearFunctional f;
};

inline LinearFunctional functional(std::initializer_list<long> coeffs) {
  Vector v;
  for (long c : coeffs) v.emplace_back(c);
  return LinearFunctional(v);
}

inline FinAlgebra group_alg(const std::string& name, std::size_t param = 0) {
  return group_algebra(catalog(name, param), Normalization::Delta).first;
}

inline LinearFunctional trace_m2() { return functional({1, 0, 0, 1}); }

struct NamedAlgebra {
  std::string name;
  FinAlgebra alg;
};

inline std::vector<NamedAlgebra> semisimple_algebras() {
  return {{"Q", field_algebra()},
          {"QxQ", diagonal_algebra(2)},
          {"QxQxQ", diagonal_algebra(3)},
          {"M2", matrix_algebra(2)},
          {"Q[Z/2]", group_alg("cyclic", 2)},
          {"Q[Z/3]", group_alg("cyclic", 3)},
          {"Q[klein]", group_alg("klein")},
          {"Q[S3]", group_alg("symmetric", 3)}};
}

// Redundant 3-state representation of the constant series 1 over {a,b}.
inline LinearRepresentation constant_one() {
  Matrix m{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Matrix shuffle{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  return LinearRepresentation({"a", "b"}, {Rational(1, 2), Rational(1, 2), 0}, {m, shuffle},
                              {1, 1, 5});
}

// S(w) = number of a's in w.
inline LinearRepresentation a_counting() {
  Matrix a{{1, 1}, {0, 1}};
  Matrix b{{1, 0}, {0, 1}};
  return LinearRepresentation({"a", "b"}, {1, 0}, {a, b}, {0, 1});
}

// S(w) = number of occurrences of the factor ab; not exchangeable.
inline LinearRepresentation ab_counting() {
  Matrix a{{1, 1, 0}, {0, 0, 0}, {0, 0, 1}};
  Matrix b{{1, 0, 0}, {0, 0, 1}, {0, 0, 1}};
  return LinearRepresentation({"a", "b"}, {1, 0, 0}, {a, b}, {0, 0, 1});
}

// Words with an even number of a's.
inline Dfa even_a() { return Dfa(2, {"a", "b"}, {1, 0, 0, 1}, 0, {0}); }

// ---- oracles ----

/// Rank of the Hankel block H[u][v] = S(uv) over all u, v of length <= len,
/// by fraction-free Bareiss-style elimination written out here.
inline std::size_t hankel_rank(const LinearRepresentation& rep, std::size_t len) {
  const auto words = words_up_to(rep.alphabet(), len);
  std::vector<std::vector<Rational>> h;
  for (const auto& u : words) {
    std::vector<Rational> row;
    for (const auto& v : words) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      // Evaluate by direct vector-matrix products.
      Vector x = rep.initial();
      for (const auto& s : uv) {
        const Matrix& m = rep.transition(rep.symbol_index(s));
        Vector y(x.size(), Rational(0));
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < x.size(); ++j) y[j] += x[i] * m(i, j);
        x = y;
      }
      Rational s(0);
      for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * rep.final_weights()[i];
      row.push_back(s);
    }
    h.push_back(row);
  }
  std::size_t r = 0;
  const std::size_t cols = words.size();
  for (std::size_t c = 0; c < cols && r < h.size(); ++c) {
    std::size_t p = r;
    while (p < h.size() && h[p][c] == 0) ++p;
    if (p == h.size()) continue;
    std::swap(h[p], h[r]);
    for (std::size_t i = r + 1; i < h.size(); ++i) {
      if (h[i][c] == 0) continue;
      const Rational factor = h[i][c] / h[r][c];
      for (std::size_t j = c; j < cols; ++j) h[i][j] -= factor * h[r][j];
    }
    ++r;
  }
  return r;
}

/// Series equality on all words up to len, pure brute force.
inline bool agree_up_to(const LinearRepresentation& a, const LinearRepresentation& b, std::size_t len) {
  for (const auto& w : words_up_to(a.alphabet(), len)) {
    if (evaluate(a, w) != evaluate(b, w)) return false;
  }
  return true;
}

/// Exchangeability by definition: words with equal letter multisets agree.
inline bool exchangeable_by_definition(const LinearRepresentation& rep, std::size_t len) {
  std::map<std::vector<Symbol>, Rational> seen;
  for (const auto& w : words_up_to(rep.alphabet(), len)) {
    Word key = w;
    std::sort(key.begin(), key.end());
    const Rational v = evaluate(rep, w);
    auto [it, inserted] = seen.emplace(key, v);
    if (!inserted && it->second != v) return false;
  }
  return true;
}

/// Unique decipherability by enumerating factorizations of all words up to
/// `max_total` letters.
inline bool is_code_brute_force(const std::vector<std::string>& words, std::size_t max_total) {
  std::map<std::string, std::set<std::vector<std::size_t>>> factorizations;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> frontier{{"", {}}};
  while (!frontier.empty()) {
    std::vector<std::pair<std::string, std::vector<std::size_t>>> next;
    for (const auto& [s, f] : frontier) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        std::string t = s + words[i];
        if (t.size() > max_total) continue;
        std::vector<std::size_t> g = f;
        g.push_back(i);
        auto& known = factorizations[t];
        known.insert(g);
        if (known.size() > 1) return false;
        next.emplace_back(t, g);
      }
    }
    frontier = std::move(next);
  }
  return true;
}

/// Image in `target` of the product of the basis elements named by `w`.
inline Vector word_product(const FinAlgebra& target, const Word& w) {
  Vector x = target.unit();
  for (const auto& s : w) {
    const auto& names = target.basis_names();
    const std::size_t i = static_cast<std::size_t>(std::find(names.begin(), names.end(), s) - names.begin());
    x = multiply(target, x, unit_vector(target.dim(), i));
  }
  return x;
}

/// Homomorphisms from the genus-g surface group, counted by brute force over
/// all 2g-tuples.
inline std::uint64_t surface_homs_brute_force(const FiniteGroup& g, std::size_t genus) {
  const std::size_t n = g.order();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < 2 * genus; ++i) tuples *= n;
  std::uint64_t count = 0;
  for (std::size_t code = 0; code < tuples; ++code) {
    std::size_t rest = code;
    std::size_t acc = g.identity();
    for (std::size_t k = 0; k < genus; ++k) {
      const std::size_t a = rest % n;
      rest /= n;
      const std::size_t b = rest % n;
      rest /= n;
      std::size_t ainv = 0, binv = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (g.product(a, x) == g.identity()) ainv = x;
        if (g.product(b, x) == g.identity()) binv = x;
      }
      acc = g.product(acc, g.product(g.product(g.product(a, b), ainv), binv));
    }
    if (acc == g.identity()) ++count;
  }
  return count;
}

}  // namespace corpus
