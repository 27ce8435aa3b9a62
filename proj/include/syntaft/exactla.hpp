#pragma once

// Exact rational scalars and dense linear algebra over them.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syntaft {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q" with q > 0. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& v);
void axpy(const Rational& s, const Vector& x, Vector& y);  // y += s*x

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix row_vector(const Vector& v);
  static Matrix column_vector(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Vector operator*(const Vector& row, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& column);

/// Vertical concatenation; column counts must agree.
Matrix stack(const Matrix& top, const Matrix& bottom);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Reduced row echelon form (same shape, zero rows at the bottom).
Matrix rref(const Matrix& m);
/// Pivot column per nonzero row of an rref matrix.
std::vector<std::size_t> pivot_columns(const Matrix& reduced);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// A linear subspace of Q^n held as the nonzero rows of its rref basis, so
/// that equal subspaces compare equal member by member.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  /// Row space of `generators`.
  static Subspace span(const Matrix& generators);
  static Subspace span(const std::vector<Vector>& generators, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the rref basis, or nullopt when v is not a member.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// {x : <x, b> = 0 for every basis vector b}.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Incrementally grown linearly independent family that keeps the insertion
/// order, so coordinates are expressed in terms of the vectors as inserted.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return originals_.size(); }
  const Vector& vector(std::size_t i) const { return originals_[i]; }

  /// Appends v when it is independent of the current family.
  bool try_add(const Vector& v);
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  // Reduces v against the echelon rows; `coeffs` collects the combination of
  // originals that was subtracted.
  void reduce(Vector& v, Vector& coeffs) const;

  std::size_t ambient_dim_;
  std::vector<Vector> originals_;
  std::vector<Vector> echelon_;        // echelon_[i] = sum_j combo_[i][j] * originals_[j]
  std::vector<Vector> combo_;
  std::vector<std::size_t> pivots_;
};

}  // namespace syntaft
