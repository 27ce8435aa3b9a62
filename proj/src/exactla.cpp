#include "syntaft/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "syntaft/error.hpp"

namespace syntaft {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::ZeroFunctional: return "ZeroFunctional";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotSplitOverQ: return "NotSplitOverQ";
    case ErrorCode::NonSquareBlock: return "NonSquareBlock";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::ParameterTooLarge: return "ParameterTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidLanguage: return "InvalidLanguage";
    case ErrorCode::IncompleteAutomaton: return "IncompleteAutomaton";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotOriented: return "NotOriented";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidMoveSite: return "InvalidMoveSite";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnassignedVariable: return "UnassignedVariable";
    case ErrorCode::NotRestricted: return "NotRestricted";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&](const std::string& why) -> ParseError {
    return ParseError(ErrorCode::ParseError, 0, 0,
                      "malformed rational '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t num_end = digits(i);
  if (num_end == i) throw bad("expected digits");
  std::string numerator(text.substr(0, num_end));
  if (numerator.front() == '+') numerator.erase(0, 1);
  std::string denominator = "1";
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw bad("unexpected character");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1) throw bad("expected denominator digits");
    if (den_end != text.size()) throw bad("trailing characters");
    denominator = std::string(text.substr(num_end + 1));
  }
  mpz_class den(denominator);
  if (den == 0) throw bad("zero denominator");
  Rational r(mpz_class(numerator), den);
  r.canonicalize();
  return r;
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sum of unequal lengths");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector scale(const Rational& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void axpy(const Rational& s, const Vector& x, Vector& y) {
  if (x.size() != y.size()) fail(ErrorCode::DimensionMismatch, "axpy of unequal lengths");
  if (s == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) y[i] += s * x[i];
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    fail(ErrorCode::DimensionMismatch, "matrix entry count does not match shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::row_vector(const Vector& v) { return Matrix(1, v.size(), v); }

Matrix Matrix::column_vector(const Vector& v) { return Matrix(v.size(), 1, v); }

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return syntaft::is_zero(entries_); }

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

Vector operator*(const Vector& row, const Matrix& m) {
  if (row.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "row vector times matrix");
  Vector out(m.cols(), Rational(0));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (row[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(k, j) != 0) out[j] += row[k] * m(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& m, const Vector& column) {
  if (column.size() != m.cols()) fail(ErrorCode::DimensionMismatch, "matrix times column vector");
  Vector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m(i, k) != 0 && column[k] != 0) out[i] += m(i, k) * column[k];
    }
  }
  return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) fail(ErrorCode::DimensionMismatch, "stack column mismatch");
  std::vector<Rational> e = top.entries();
  e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.rows() + bottom.rows(), top.cols(), std::move(e));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Matrix rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(lead, j));
    }
    Rational inv = 1 / a(lead, c);
    for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (a(lead, j) != 0) a(r, j) -= f * a(lead, j);
      }
    }
    ++lead;
  }
  return a;
}

std::vector<std::size_t> pivot_columns(const Matrix& reduced) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    std::size_t c = 0;
    while (c < reduced.cols() && reduced(r, c) == 0) ++c;
    if (c == reduced.cols()) break;
    pivots.push_back(c);
  }
  return pivots;
}

std::size_t rank(const Matrix& m) { return pivot_columns(rref(m)).size(); }

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Matrix r = rref(aug);
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (r(i, i) != 1) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  }
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span(Matrix::identity(ambient_dim));
}

Subspace Subspace::span(const Matrix& generators) {
  Subspace s(generators.cols());
  Matrix r = rref(generators);
  s.pivots_ = pivot_columns(r);
  const std::size_t k = s.pivots_.size();
  std::vector<Rational> e(r.entries().begin(),
                          r.entries().begin() + static_cast<std::ptrdiff_t>(k * r.cols()));
  s.basis_ = Matrix(k, r.cols(), std::move(e));
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& generators, std::size_t ambient_dim) {
  return span(Matrix::from_rows(generators, ambient_dim));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) fail(ErrorCode::DimensionMismatch, "vector outside ambient space");
  Vector coords(pivots_.size());
  Vector residual = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    coords[i] = v[pivots_[i]];
    axpy(-coords[i], basis_.row(i), residual);
  }
  if (!syntaft::is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) {
    fail(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  Matrix r = rref(m);
  std::vector<std::size_t> pivots = pivot_columns(r);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> generators;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    generators.push_back(std::move(v));
  }
  return Subspace::span(generators, n);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "intersecting subspaces of different ambient spaces");
  }
  // a ∩ b is cut out by the equations of both.
  Matrix equations = stack(a.annihilator().basis(), b.annihilator().basis());
  return kernel(equations);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "adding subspaces of different ambient spaces");
  }
  return Subspace::span(stack(a.basis(), b.basis()));
}

void SpanBuilder::reduce(Vector& v, Vector& coeffs) const {
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const Rational& x = v[pivots_[i]];
    if (x == 0) continue;
    Rational f = x / echelon_[i][pivots_[i]];
    axpy(-f, echelon_[i], v);
    axpy(f, combo_[i], coeffs);
  }
}

bool SpanBuilder::try_add(const Vector& v) {
  if (v.size() != ambient_dim_) fail(ErrorCode::DimensionMismatch, "vector outside ambient space");
  Vector residual = v;
  Vector coeffs = zero_vector(originals_.size());
  reduce(residual, coeffs);
  auto pivot = std::find_if(residual.begin(), residual.end(),
                            [](const Rational& x) { return x != 0; });
  if (pivot == residual.end()) return false;
  const auto pivot_index = static_cast<std::size_t>(pivot - residual.begin());
  // residual = v - sum_j coeffs_j originals_j
  for (auto& c : coeffs) c = -c;
  coeffs.push_back(Rational(1));
  for (auto& c : combo_) c.push_back(Rational(0));
  originals_.push_back(v);
  echelon_.push_back(std::move(residual));
  combo_.push_back(std::move(coeffs));
  pivots_.push_back(pivot_index);
  return true;
}

std::optional<Vector> SpanBuilder::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) fail(ErrorCode::DimensionMismatch, "vector outside ambient space");
  Vector residual = v;
  Vector coeffs = zero_vector(originals_.size());
  reduce(residual, coeffs);
  if (!syntaft::is_zero(residual)) return std::nullopt;
  return coeffs;
}

}  // namespace syntaft
