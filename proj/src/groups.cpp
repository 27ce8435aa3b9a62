#include "syntaft/groups.hpp"

#include <algorithm>
#include <numeric>

#include "syntaft/error.hpp"

namespace syntaft {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::size_t> table,
                         std::size_t identity)
    : names_(std::move(names)), table_(std::move(table)), identity_(identity) {
  if (names_.empty()) fail(ErrorCode::InvalidGroup, "a group has at least one element");
  if (table_.size() != order() * order()) fail(ErrorCode::InvalidGroup, "table must be order x order");
  if (identity_ >= order()) fail(ErrorCode::InvalidGroup, "identity index out of range");
  for (std::size_t x : table_) {
    if (x >= order()) fail(ErrorCode::InvalidGroup, "table entry out of range");
  }
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b) {
    if (product(a, b) == identity_) return b;
  }
  fail(ErrorCode::InvalidGroup, "element " + names_[a] + " has no inverse");
}

Verdict validate_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto& names = g.names();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false);
    std::vector<bool> col_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = g.product(i, j);
      const std::size_t c = g.product(j, i);
      if (row_seen[r]) {
        return {false, "row " + names[i] + " repeats " + names[r] + " (not a Latin square)"};
      }
      if (col_seen[c]) {
        return {false, "column " + names[i] + " repeats " + names[c] + " (not a Latin square)"};
      }
      row_seen[r] = col_seen[c] = true;
    }
  }
  const std::size_t e = g.identity();
  for (std::size_t i = 0; i < n; ++i) {
    if (g.product(e, i) != i || g.product(i, e) != i) {
      return {false, names[e] + " is not an identity for " + names[i]};
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.product(g.product(a, b), c) != g.product(a, g.product(b, c))) {
          return {false, "associativity fails for (" + names[a] + ", " + names[b] + ", " +
                             names[c] + ")"};
        }
  // A Latin square with an identity gives every element a right inverse; check
  // it is two-sided.
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t b = g.inverse(a);
    if (g.product(b, a) != e) return {false, names[a] + " has no two-sided inverse"};
  }
  return {};
}

namespace {

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : i == 1 ? "s" : "s" + std::to_string(i));
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return FiniteGroup(std::move(names), std::move(table), 0);
}

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& perm : perms) {
    std::string s = "p";
    for (std::size_t x : perm) s += std::to_string(x + 1);
    names.push_back(s);
  }
  const std::size_t order = perms.size();
  std::vector<std::size_t> table(order * order);
  // (a * b)(x) = a(b(x)): apply b first.
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      std::vector<std::size_t> composed(n);
      for (std::size_t x = 0; x < n; ++x) composed[x] = perms[i][perms[j][x]];
      table[i * order + j] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), composed) - perms.begin());
    }
  }
  return FiniteGroup(std::move(names), std::move(table), 0);
}

FiniteGroup klein_group() {
  std::vector<std::string> names{"e", "a", "b", "c"};
  std::vector<std::size_t> table(16);
  // Z/2 x Z/2 with a = (1,0), b = (0,1), c = (1,1): product is xor.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) table[i * 4 + j] = i ^ j;
  return FiniteGroup(std::move(names), std::move(table), 0);
}

}  // namespace

FiniteGroup catalog(const std::string& name, std::size_t parameter) {
  if (name == "cyclic") {
    if (parameter == 0) fail(ErrorCode::ParameterTooLarge, "cyclic group needs order >= 1");
    if (parameter > 4096) fail(ErrorCode::ParameterTooLarge, "cyclic group order above 4096");
    return cyclic_group(parameter);
  }
  if (name == "symmetric") {
    if (parameter == 0 || parameter > 4) {
      fail(ErrorCode::ParameterTooLarge, "symmetric groups are available for 1 <= n <= 4");
    }
    return symmetric_group(parameter);
  }
  if (name == "klein") return klein_group();
  fail(ErrorCode::UnknownCatalogEntry, "no catalog group named '" + name + "'");
}

std::pair<FinAlgebra, LinearFunctional> group_algebra(const FiniteGroup& g, Normalization norm) {
  if (Verdict v = validate_group(g); !v) fail(ErrorCode::InvalidGroup, v.message);
  const std::size_t n = g.order();
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i * n + j) * n + g.product(i, j)] = 1;
  FinAlgebra alg(g.names(), std::move(c), unit_vector(n, g.identity()));
  Vector coeffs = zero_vector(n);
  coeffs[g.identity()] = norm == Normalization::Delta ? Rational(1) : Rational(1, n);
  coeffs[g.identity()].canonicalize();
  return {std::move(alg), LinearFunctional(std::move(coeffs))};
}

namespace {

// Counts completions of a partial tuple whose commutator product so far is
// `acc`, with `remaining` commutator pairs still to choose.
std::uint64_t count_from(const FiniteGroup& g, const std::vector<std::size_t>& inverses,
                         std::size_t acc, std::size_t remaining) {
  if (remaining == 0) return acc == g.identity() ? 1 : 0;
  std::uint64_t total = 0;
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // [a, b] = a b a^-1 b^-1
      const std::size_t comm =
          g.product(g.product(g.product(a, b), inverses[a]), inverses[b]);
      total += count_from(g, inverses, g.product(acc, comm), remaining - 1);
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_surface_homs(const FiniteGroup& g, std::size_t genus, std::uint64_t budget) {
  if (Verdict v = validate_group(g); !v) fail(ErrorCode::InvalidGroup, v.message);
  if (genus == 0) return 1;
  // |G|^(2 genus) tuples are visited.
  std::uint64_t cost = 1;
  for (std::size_t i = 0; i < 2 * genus; ++i) {
    if (cost > budget / g.order()) {
      fail(ErrorCode::BudgetExceeded, "enumeration of |G|^(2g) tuples exceeds the budget of " +
                                          std::to_string(budget));
    }
    cost *= g.order();
  }
  if (cost > budget) fail(ErrorCode::BudgetExceeded, "enumeration exceeds the budget");
  std::vector<std::size_t> inverses(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) inverses[a] = g.inverse(a);
  return count_from(g, inverses, g.identity(), genus);
}

std::size_t conjugacy_class_count(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++classes;
    for (std::size_t h = 0; h < n; ++h) seen[g.product(g.product(h, x), g.inverse(h))] = true;
  }
  return classes;
}

bool is_abelian(const FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.product(a, b) != g.product(b, a)) return false;
  return true;
}

}  // namespace syntaft
