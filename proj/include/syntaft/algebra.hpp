#pragma once

// Finite-dimensional associative unital algebras given by structure
// constants, and the predicates on (algebra, functional) pairs.

#include <cstddef>
#include <string>
#include <vector>

#include "syntaft/exactla.hpp"

namespace syntaft {

/// Outcome of a structural check; `message` names the first violation.
struct Verdict {
  bool ok = true;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

/// e_i * e_j = sum_k c[i][j][k] e_k. Construction only checks shapes;
/// associativity and the unit laws are checked by validate().
class FinAlgebra {
 public:
  FinAlgebra() = default;
  FinAlgebra(std::vector<std::string> basis_names, std::vector<Rational> structure_constants,
             Vector unit);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const std::vector<Rational>& structure_constants() const noexcept { return constants_; }
  const Vector& unit() const noexcept { return unit_; }

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }
  /// Coordinates of e_i * e_j.
  Vector basis_product(std::size_t i, std::size_t j) const;

  friend bool operator==(const FinAlgebra&, const FinAlgebra&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> constants_;
  Vector unit_;
};

class LinearFunctional {
 public:
  LinearFunctional() = default;
  explicit LinearFunctional(Vector coefficients) : coefficients_(std::move(coefficients)) {}

  std::size_t size() const noexcept { return coefficients_.size(); }
  const Vector& coefficients() const noexcept { return coefficients_; }
  bool is_zero() const { return syntaft::is_zero(coefficients_); }
  Rational operator()(const Vector& element) const { return dot(coefficients_, element); }

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  Vector coefficients_;
};

/// Central orthogonal idempotents of a split semisimple algebra together with
/// block dimensions d_i = n_i^2.
struct BlockData {
  std::vector<Vector> idempotents;
  std::vector<std::size_t> block_dims;
  std::vector<std::size_t> matrix_sizes;
};

enum class Side { Left, Right, TwoSided };

/// Algebra together with its coordinates inside a larger algebra.
struct CenterData {
  Subspace subspace;
  FinAlgebra algebra;
};

// Builders for the standard examples.
FinAlgebra field_algebra();
FinAlgebra diagonal_algebra(std::size_t copies);
FinAlgebra matrix_algebra(std::size_t n);
FinAlgebra dual_numbers();
/// Upper-triangular 2x2 matrices, basis E11, E12, E22.
FinAlgebra upper_triangular_algebra();
FinAlgebra product_algebra(const FinAlgebra& a, const FinAlgebra& b);

Verdict validate(const FinAlgebra& alg);
bool is_commutative(const FinAlgebra& alg);

Vector multiply(const FinAlgebra& alg, const Vector& a, const Vector& b);
/// Matrix of x -> a*x on coordinate columns.
Matrix left_regular(const FinAlgebra& alg, const Vector& a);
/// Matrix of x -> x*a on coordinate columns.
Matrix right_regular(const FinAlgebra& alg, const Vector& a);

/// g[i][j] = f(e_i * e_j).
Matrix gram_matrix(const FinAlgebra& alg, const LinearFunctional& f);
/// T[i][j] = trace(L(e_i * e_j)).
Matrix trace_form(const FinAlgebra& alg);

/// The largest ideal of the given sidedness contained in ker f.
Subspace largest_ideal_in_kernel(const FinAlgebra& alg, const LinearFunctional& f, Side side);
bool is_frobenius(const FinAlgebra& alg, const LinearFunctional& f);
bool is_symmetric(const FinAlgebra& alg, const LinearFunctional& f);
/// Throws ZeroFunctional for f = 0.
bool is_syntactic_hyperplane(const FinAlgebra& alg, const LinearFunctional& f);
/// Dickson's criterion: the regular trace form is nondegenerate.
bool is_semisimple(const FinAlgebra& alg);

CenterData center(const FinAlgebra& alg);
/// a -> trace(L(a)).
LinearFunctional canonical_form(const FinAlgebra& alg);
/// Restriction of f to the subspace, in the subspace's rref basis.
LinearFunctional restrict_functional(const LinearFunctional& f, const Subspace& subspace);

/// Central idempotents from a separating central element whose minimal
/// polynomial splits over Q. Throws NotSemisimple, NotSplitOverQ, NonSquareBlock.
BlockData split_blocks(const FinAlgebra& alg);

/// images[i] is the image of e_i in `target`. True iff the linear extension
/// is a unital algebra isomorphism.
bool letter_isomorphism_check(const FinAlgebra& alg, const FinAlgebra& target,
                              const std::vector<Vector>& images);

}  // namespace syntaft
