#include "syntaft/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "syntaft/error.hpp"

namespace syntaft {

FinAlgebra::FinAlgebra(std::vector<std::string> basis_names,
                       std::vector<Rational> structure_constants, Vector unit)
    : names_(std::move(basis_names)),
      constants_(std::move(structure_constants)),
      unit_(std::move(unit)) {
  const std::size_t n = names_.size();
  if (constants_.size() != n * n * n) {
    fail(ErrorCode::DimensionMismatch, "structure constant table must have dim^3 entries");
  }
  if (unit_.size() != n) fail(ErrorCode::DimensionMismatch, "unit vector length differs from dim");
}

Vector FinAlgebra::basis_product(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  const auto first = constants_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n);
  return Vector(first, first + static_cast<std::ptrdiff_t>(n));
}

namespace {

// Assembles an algebra from a product rule on basis indices.
template <typename ProductFn>
FinAlgebra build(std::vector<std::string> names, ProductFn&& product, Vector unit) {
  const std::size_t n = names.size();
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector p = product(i, j);
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = p[k];
    }
  }
  return FinAlgebra(std::move(names), std::move(c), std::move(unit));
}

void check_length(const FinAlgebra& alg, const Vector& v, const char* what) {
  if (v.size() != alg.dim()) {
    fail(ErrorCode::DimensionMismatch, std::string(what) + " has length " +
                                           std::to_string(v.size()) + ", algebra has dim " +
                                           std::to_string(alg.dim()));
  }
}

void check_length(const FinAlgebra& alg, const LinearFunctional& f) {
  if (f.size() != alg.dim()) {
    fail(ErrorCode::DimensionMismatch, "functional length " + std::to_string(f.size()) +
                                           " differs from algebra dim " +
                                           std::to_string(alg.dim()));
  }
}

}  // namespace

FinAlgebra field_algebra() {
  return build({"1"}, [](std::size_t, std::size_t) { return Vector{Rational(1)}; }, Vector{1});
}

FinAlgebra diagonal_algebra(std::size_t copies) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < copies; ++i) names.push_back("p" + std::to_string(i + 1));
  return build(
      std::move(names),
      [copies](std::size_t i, std::size_t j) {
        Vector v = zero_vector(copies);
        if (i == j) v[i] = 1;
        return v;
      },
      Vector(copies, Rational(1)));
}

FinAlgebra matrix_algebra(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      names.push_back("E" + std::to_string(r + 1) + (n > 9 ? "_" : "") + std::to_string(c + 1));
  Vector unit = zero_vector(n * n);
  for (std::size_t r = 0; r < n; ++r) unit[r * n + r] = 1;
  // E_ab E_cd = [b == c] E_ad
  return build(
      std::move(names),
      [n](std::size_t i, std::size_t j) {
        Vector v = zero_vector(n * n);
        if (i % n == j / n) v[(i / n) * n + j % n] = 1;
        return v;
      },
      std::move(unit));
}

FinAlgebra dual_numbers() {
  return build(
      {"1", "x"},
      [](std::size_t i, std::size_t j) {
        Vector v = zero_vector(2);
        if (i + j < 2) v[i + j] = 1;
        return v;
      },
      Vector{1, 0});
}

FinAlgebra upper_triangular_algebra() {
  // Basis E11, E12, E22 stored as (row, col) pairs.
  static constexpr std::pair<int, int> kUnits[] = {{1, 1}, {1, 2}, {2, 2}};
  return build(
      {"E11", "E12", "E22"},
      [](std::size_t i, std::size_t j) {
        Vector v = zero_vector(3);
        if (kUnits[i].second != kUnits[j].first) return v;
        const std::pair<int, int> target{kUnits[i].first, kUnits[j].second};
        for (std::size_t k = 0; k < 3; ++k)
          if (kUnits[k] == target) v[k] = 1;
        return v;
      },
      Vector{1, 0, 1});
}

FinAlgebra product_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool clash = false;
  for (const auto& s : a.basis_names()) seen.insert(s);
  for (const auto& s : b.basis_names()) clash = clash || seen.count(s) > 0;
  for (const auto& s : a.basis_names()) names.push_back(clash ? s + "_L" : s);
  for (const auto& s : b.basis_names()) names.push_back(clash ? s + "_R" : s);
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return build(
      std::move(names),
      [&](std::size_t i, std::size_t j) {
        Vector v = zero_vector(na + nb);
        if (i < na && j < na) {
          Vector p = a.basis_product(i, j);
          std::copy(p.begin(), p.end(), v.begin());
        } else if (i >= na && j >= na) {
          Vector p = b.basis_product(i - na, j - na);
          std::copy(p.begin(), p.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
        }
        return v;
      },
      std::move(unit));
}

Vector multiply(const FinAlgebra& alg, const Vector& a, const Vector& b) {
  check_length(alg, a, "left factor");
  check_length(alg, b, "right factor");
  const std::size_t n = alg.dim();
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      Rational s = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = alg.constant(i, j, k);
        if (c != 0) out[k] += s * c;
      }
    }
  }
  return out;
}

Verdict validate(const FinAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto& names = alg.basis_names();
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(n, i);
    if (multiply(alg, alg.unit(), e) != e) {
      return {false, "unit law fails: 1*" + names[i] + " != " + names[i]};
    }
    if (multiply(alg, e, alg.unit()) != e) {
      return {false, "unit law fails: " + names[i] + "*1 != " + names[i]};
    }
  }
  std::vector<Vector> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = alg.basis_product(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = zero_vector(n);  // (e_i e_j) e_k
        Vector rhs = zero_vector(n);  // e_i (e_j e_k)
        for (std::size_t m = 0; m < n; ++m) {
          axpy(alg.constant(i, j, m), products[m * n + k], lhs);
          axpy(alg.constant(j, k, m), products[i * n + m], rhs);
        }
        if (lhs != rhs) {
          return {false, "associativity fails for (" + names[i] + ", " + names[j] + ", " +
                             names[k] + ")"};
        }
      }
    }
  }
  return {};
}

bool is_commutative(const FinAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (alg.constant(i, j, k) != alg.constant(j, i, k)) return false;
  return true;
}

Matrix left_regular(const FinAlgebra& alg, const Vector& a) {
  check_length(alg, a, "element");
  const std::size_t n = alg.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = multiply(alg, a, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix right_regular(const FinAlgebra& alg, const Vector& a) {
  check_length(alg, a, "element");
  const std::size_t n = alg.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = multiply(alg, unit_vector(n, j), a);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix gram_matrix(const FinAlgebra& alg, const LinearFunctional& f) {
  check_length(alg, f);
  const std::size_t n = alg.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = f(alg.basis_product(i, j));
  return g;
}

LinearFunctional canonical_form(const FinAlgebra& alg) {
  const std::size_t n = alg.dim();
  Vector coeffs = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) coeffs[i] += alg.constant(i, k, k);
  return LinearFunctional(std::move(coeffs));
}

Matrix trace_form(const FinAlgebra& alg) { return gram_matrix(alg, canonical_form(alg)); }

Subspace largest_ideal_in_kernel(const FinAlgebra& alg, const LinearFunctional& f, Side side) {
  check_length(alg, f);
  const std::size_t n = alg.dim();
  const Matrix g = gram_matrix(alg, f);
  if (side == Side::Left) return kernel(g);               // f(e_i a) = 0
  if (side == Side::Right) return kernel(g.transpose());  // f(a e_i) = 0
  // f(e_i a e_j) = sum_k c[i][m][k] g[k][j] for a = e_m.
  Matrix constraints(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = alg.constant(i, m, k);
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j) constraints(i * n + j, m) += c * g(k, j);
      }
    }
  }
  return kernel(constraints);
}

bool is_frobenius(const FinAlgebra& alg, const LinearFunctional& f) {
  return largest_ideal_in_kernel(alg, f, Side::Left).dim() == 0 &&
         largest_ideal_in_kernel(alg, f, Side::Right).dim() == 0;
}

bool is_symmetric(const FinAlgebra& alg, const LinearFunctional& f) {
  const Matrix g = gram_matrix(alg, f);
  return g == g.transpose();
}

bool is_syntactic_hyperplane(const FinAlgebra& alg, const LinearFunctional& f) {
  check_length(alg, f);
  if (f.is_zero()) fail(ErrorCode::ZeroFunctional, "the zero functional has no hyperplane kernel");
  return largest_ideal_in_kernel(alg, f, Side::TwoSided).dim() == 0;
}

bool is_semisimple(const FinAlgebra& alg) { return rank(trace_form(alg)) == alg.dim(); }

CenterData center(const FinAlgebra& alg) {
  const std::size_t n = alg.dim();
  // Row (i, k), column m: coefficient of e_k in e_m e_i - e_i e_m.
  Matrix constraints(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k)
        constraints(i * n + k, m) = alg.constant(m, i, k) - alg.constant(i, m, k);
  Subspace z = kernel(constraints);
  const std::size_t d = z.dim();
  std::vector<std::string> names;
  for (std::size_t p = 0; p < d; ++p) names.push_back("z" + std::to_string(p));
  std::vector<Rational> c(d * d * d, Rational(0));
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      auto coords = z.coordinates(multiply(alg, z.basis_vector(p), z.basis_vector(q)));
      for (std::size_t r = 0; r < d; ++r) c[(p * d + q) * d + r] = (*coords)[r];
    }
  }
  auto unit = z.coordinates(alg.unit());
  if (!unit) fail(ErrorCode::InvalidAlgebra, "unit is not central");
  FinAlgebra zalg(std::move(names), std::move(c), *unit);
  return {std::move(z), std::move(zalg)};
}

LinearFunctional restrict_functional(const LinearFunctional& f, const Subspace& subspace) {
  if (f.size() != subspace.ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "functional and subspace live in different spaces");
  }
  Vector coeffs(subspace.dim());
  for (std::size_t p = 0; p < subspace.dim(); ++p) coeffs[p] = f(subspace.basis_vector(p));
  return LinearFunctional(std::move(coeffs));
}

namespace {

// Polynomials with rational coefficients, lowest degree first.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational evaluate_poly(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(evaluate_poly(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a squarefree integer polynomial inside (lo, hi].
void integer_roots(const Poly& p, const std::vector<Poly>& seq, const mpz_class& lo,
                   const mpz_class& hi, int count, std::vector<mpz_class>& roots,
                   bool& non_integer) {
  if (count <= 0) return;
  if (hi - lo == 1) {
    if (evaluate_poly(p, Rational(hi)) == 0) {
      roots.push_back(hi);
      if (count > 1) non_integer = true;
    } else {
      non_integer = true;
    }
    return;
  }
  mpz_class mid = lo + (hi - lo) / 2;
  const int left = sign_changes(seq, Rational(lo)) - sign_changes(seq, Rational(mid));
  integer_roots(p, seq, lo, mid, left, roots, non_integer);
  integer_roots(p, seq, mid, hi, count - left, roots, non_integer);
}

// Rational roots of a monic squarefree polynomial; nullopt when some root is
// irrational or non-real.
std::optional<std::vector<Rational>> rational_roots(const Poly& monic) {
  const std::size_t d = monic.size() - 1;
  mpz_class denominator_lcm = 1;
  for (const auto& c : monic) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  // x = y / D turns the polynomial into a monic integer one.
  Poly scaled(d + 1);
  mpz_class bound = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), denominator_lcm.get_mpz_t(), static_cast<unsigned long>(d - i));
    scaled[i] = monic[i] * power;
    mpz_class a = abs(scaled[i].get_num());
    if (a > bound) bound = a;
  }
  bound += 1;
  const auto seq = sturm_sequence(scaled);
  const mpz_class lo = -bound - 1;
  const int real_count = sign_changes(seq, Rational(lo)) - sign_changes(seq, Rational(bound));
  if (real_count != static_cast<int>(d)) return std::nullopt;
  std::vector<mpz_class> ys;
  bool non_integer = false;
  integer_roots(scaled, seq, lo, bound, real_count, ys, non_integer);
  if (non_integer || ys.size() != d) return std::nullopt;
  std::vector<Rational> roots;
  for (const auto& y : ys) {
    Rational r(y, denominator_lcm);
    r.canonicalize();
    roots.push_back(r);
  }
  return roots;
}

// Minimal polynomial of `z` (monic, lowest degree first).
Poly minimal_polynomial(const FinAlgebra& alg, const Vector& z) {
  SpanBuilder powers(alg.dim());
  Vector p = alg.unit();
  while (powers.try_add(p)) p = multiply(alg, p, z);
  Vector coords = *powers.coordinates(p);
  Poly poly;
  for (const auto& c : coords) poly.push_back(-c);
  poly.push_back(Rational(1));
  return poly;
}

std::size_t exact_sqrt(std::size_t v) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

BlockData split_blocks(const FinAlgebra& alg) {
  if (!is_semisimple(alg)) fail(ErrorCode::NotSemisimple, "trace form is degenerate");
  const CenterData z = center(alg);
  const std::size_t d = z.subspace.dim();

  // z(t) = sum_i t^i z_i. Two distinct characters agree on z(t) for at most
  // d - 1 values of t, so a separating element appears within this many tries.
  const std::size_t attempts = 1 + (d * (d - 1) / 2) * (d > 0 ? d - 1 : 0) + 1;
  Vector separating;
  Poly minpoly;
  for (std::size_t t = 1; t <= attempts; ++t) {
    Vector candidate = zero_vector(alg.dim());
    Rational power = 1;
    for (std::size_t i = 0; i < d; ++i) {
      axpy(power, z.subspace.basis_vector(i), candidate);
      power *= static_cast<long>(t);
    }
    Poly m = minimal_polynomial(alg, candidate);
    if (m.size() == d + 1) {
      separating = std::move(candidate);
      minpoly = std::move(m);
      break;
    }
  }
  if (minpoly.empty()) fail(ErrorCode::NotSplitOverQ, "no separating central element found");

  auto roots = rational_roots(minpoly);
  if (!roots) {
    fail(ErrorCode::NotSplitOverQ, "minimal polynomial of a separating central element has an "
                                   "irreducible factor of degree > 1");
  }

  struct Block {
    std::size_t size;
    Rational root;
    std::size_t dim;
    Vector idempotent;
  };
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < d; ++j) {
    Vector p = alg.unit();
    for (std::size_t k = 0; k < d; ++k) {
      if (k == j) continue;
      Vector factor = separating;
      axpy(-(*roots)[k], alg.unit(), factor);
      p = scale(1 / ((*roots)[j] - (*roots)[k]), multiply(alg, p, factor));
    }
    const std::size_t block_dim = rank(left_regular(alg, p));
    const std::size_t size = exact_sqrt(block_dim);
    if (size * size != block_dim) {
      fail(ErrorCode::NonSquareBlock,
           "simple block of dimension " + std::to_string(block_dim) + " is not split over Q");
    }
    blocks.push_back({size, (*roots)[j], block_dim, std::move(p)});
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return std::tie(a.size, a.root) < std::tie(b.size, b.root);
  });
  BlockData out;
  for (auto& b : blocks) {
    out.idempotents.push_back(std::move(b.idempotent));
    out.block_dims.push_back(b.dim);
    out.matrix_sizes.push_back(b.size);
  }
  return out;
}

bool letter_isomorphism_check(const FinAlgebra& alg, const FinAlgebra& target,
                              const std::vector<Vector>& images) {
  const std::size_t n = alg.dim();
  if (images.size() != n) {
    fail(ErrorCode::DimensionMismatch, "need one image per basis element");
  }
  for (const auto& v : images) check_length(target, v, "image vector");
  if (target.dim() != n) return false;
  auto image_of = [&](const Vector& a) {
    Vector out = zero_vector(target.dim());
    for (std::size_t i = 0; i < n; ++i) axpy(a[i], images[i], out);
    return out;
  };
  if (rank(Matrix::from_rows(images, target.dim())) != n) return false;
  if (image_of(alg.unit()) != target.unit()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (image_of(alg.basis_product(i, j)) != multiply(target, images[i], images[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace syntaft
