#pragma once

// Dense complex kernels for the handful of antennas (<= 4) the scenarios use.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fdnoma {

using Complex = std::complex<double>;

class ComplexVector {
 public:
  /// Zero vector of dimension n (n >= 1).
  explicit ComplexVector(std::size_t n);
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  std::size_t size() const noexcept { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  double norm() const;
  double squared_norm() const;
  bool is_zero() const;

  ComplexVector conj() const;
  ComplexVector scaled(Complex factor) const;
  ComplexVector normalized() const;

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);

 private:
  std::vector<Complex> data_;
};

ComplexVector operator+(ComplexVector a, const ComplexVector& b);
ComplexVector operator-(ComplexVector a, const ComplexVector& b);

/// Hermitian inner product a^H b.
Complex inner(const ComplexVector& a, const ComplexVector& b);
/// Plain bilinear product a^T b (transmit-side channel application).
Complex bilinear(const ComplexVector& a, const ComplexVector& b);

/// Row-major dense matrix.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix column(const ComplexVector& v);
  /// v v^H.
  static ComplexMatrix outer(const ComplexVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexVector column_vector(std::size_t c) const;
  /// Flattens an n x 1 or 1 x n matrix.
  ComplexVector as_vector() const;

  ComplexVector operator*(const ComplexVector& x) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix scaled(double factor) const;
  ComplexMatrix adjoint() const;

  bool is_hermitian(double tol) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// Component of v orthogonal to span(basis). The basis is orthonormalized
/// with modified Gram-Schmidt; numerically dependent members are dropped.
/// Throws NumericError(kNullSpaceExhausted) when the surviving rank reaches
/// dim(v).
ComplexVector project_onto_complement(const ComplexVector& v,
                                      std::span<const ComplexVector> basis);

/// Solves A x = b for Hermitian positive definite A via Cholesky.
ComplexVector hermitian_solve(const ComplexMatrix& a, const ComplexVector& b);

}  // namespace fdnoma
