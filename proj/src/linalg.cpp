#include "fdnoma/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fdnoma/errors.hpp"

namespace fdnoma {

namespace {

void require_finite(std::span<const Complex> values, const char* what) {
  for (const auto& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError(std::string(what) + ": non-finite entry");
    }
  }
}

void require_same_size(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) {
    throw ValidationError("dimension mismatch: " + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()));
  }
}

// Relative threshold below which a Gram-Schmidt residual counts as dependent.
constexpr double kDeflationTol = 1e-12;

}  // namespace

ComplexVector::ComplexVector(std::size_t n) : data_(n) {
  if (n == 0) throw ValidationError("ComplexVector: dimension must be positive");
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
  if (data_.empty()) throw ValidationError("ComplexVector: dimension must be positive");
  require_finite(data_, "ComplexVector");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {}

double ComplexVector::squared_norm() const {
  double acc = 0.0;
  for (const auto& z : data_) acc += std::norm(z);
  return acc;
}

double ComplexVector::norm() const { return std::sqrt(squared_norm()); }

bool ComplexVector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return z == Complex{}; });
}

ComplexVector ComplexVector::conj() const {
  ComplexVector out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexVector ComplexVector::scaled(Complex factor) const {
  ComplexVector out(*this);
  for (auto& z : out.data_) z *= factor;
  return out;
}

ComplexVector ComplexVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ValidationError("cannot normalize a zero vector");
  return scaled(1.0 / n);
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  require_same_size(a, b);
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

Complex bilinear(const ComplexVector& a, const ComplexVector& b) {
  require_same_size(a, b);
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw ValidationError("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw ValidationError("ComplexMatrix: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw ValidationError("ComplexMatrix: entry count does not match dimensions");
  }
  require_finite(data_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(const ComplexVector& v) {
  return ComplexMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  }
  return m;
}

ComplexVector ComplexMatrix::column_vector(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ComplexVector ComplexMatrix::as_vector() const {
  if (rows_ != 1 && cols_ != 1) {
    throw ValidationError("ComplexMatrix::as_vector: not a row or column");
  }
  return ComplexVector(data_);
}

ComplexVector ComplexMatrix::operator*(const ComplexVector& x) const {
  if (x.size() != cols_) throw ValidationError("matrix-vector dimension mismatch");
  ComplexVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) throw ValidationError("matrix-matrix dimension mismatch");
  ComplexMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < other.cols_; ++c) {
      Complex acc{};
      for (std::size_t k = 0; k < cols_; ++k) acc += (*this)(r, k) * other(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ValidationError("matrix sum dimension mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix ComplexMatrix::scaled(double factor) const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z *= factor;
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  double scale = 0.0;
  for (const auto& z : data_) scale = std::max(scale, std::abs(z));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol * std::max(scale, 1.0)) {
        return false;
      }
    }
  }
  return true;
}

ComplexVector project_onto_complement(const ComplexVector& v,
                                      std::span<const ComplexVector> basis) {
  const std::size_t n = v.size();
  std::vector<ComplexVector> orthonormal;
  orthonormal.reserve(basis.size());
  for (const auto& b : basis) {
    require_same_size(v, b);
    const double original = b.norm();
    if (original == 0.0) continue;
    ComplexVector r = b;
    // Two passes of modified Gram-Schmidt keep the residual orthogonal to
    // working precision even for nearly dependent inputs.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : orthonormal) r -= q.scaled(inner(q, r));
    }
    const double residual = r.norm();
    if (residual <= kDeflationTol * original) continue;
    orthonormal.push_back(r.scaled(1.0 / residual));
  }
  if (orthonormal.size() >= n) {
    throw NumericError(NumericErrorKind::kNullSpaceExhausted,
                       "null space exhausted: basis rank " +
                           std::to_string(orthonormal.size()) + " in dimension " +
                           std::to_string(n));
  }
  ComplexVector out = v;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : orthonormal) out -= q.scaled(inner(q, out));
  }
  return out;
}

ComplexVector hermitian_solve(const ComplexMatrix& a, const ComplexVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw ValidationError("hermitian_solve: dimension mismatch");
  }
  if (!a.is_hermitian(1e-12)) throw ValidationError("hermitian_solve: matrix is not Hermitian");

  // A = L L^H, L lower triangular with real positive diagonal.
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) pivot -= std::norm(l(j, k));
    if (!(pivot > 0.0)) {
      throw NumericError(NumericErrorKind::kNotPositiveDefinite,
                         "not positive definite: pivot " + std::to_string(pivot) +
                             " at column " + std::to_string(j));
    }
    const double diag = std::sqrt(pivot);
    l(j, j) = diag;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex acc = a(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
      l(i, j) = acc / diag;
    }
  }

  ComplexVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = b[i];
    for (std::size_t k = 0; k < i; ++k) acc -= l(i, k) * y[k];
    y[i] = acc / l(i, i);
  }
  ComplexVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Complex acc = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) acc -= std::conj(l(k, ii)) * x[k];
    x[ii] = acc / l(ii, ii);
  }
  return x;
}

}  // namespace fdnoma
