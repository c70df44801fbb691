#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "fdnoma/errors.hpp"
#include "fdnoma/linalg.hpp"
#include "fdnoma/random.hpp"

using namespace fdnoma;

namespace {

bool close(const ComplexVector& a, const ComplexVector& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("vectors reject empty or non-finite entries") {
  CHECK_THROWS_AS(ComplexVector(std::vector<Complex>{}), ValidationError);
  CHECK_THROWS_AS(ComplexVector({Complex(std::numeric_limits<double>::infinity(), 0)}),
                  ValidationError);
  CHECK_THROWS_AS(ComplexMatrix(0, 2), ValidationError);
  ComplexVector z(3);
  CHECK(z.is_zero());
  CHECK_THROWS(z.normalized());
}

TEST_CASE("inner is conjugate-linear in the first argument, bilinear is not") {
  const ComplexVector a{Complex(0, 1), Complex(2, 0)};
  const ComplexVector b{Complex(1, 0), Complex(0, 1)};
  CHECK(inner(a, b) == Complex(0, -1) + Complex(0, 2));
  CHECK(bilinear(a, b) == Complex(0, 1) + Complex(0, 2));
}

TEST_CASE("matrix products and adjoint") {
  const ComplexMatrix m(2, 2, {Complex(1, 1), 2.0, 0.0, Complex(0, -1)});
  const ComplexVector x{1.0, Complex(0, 1)};
  const ComplexVector y = m * x;
  CHECK(y[0] == Complex(1, 3));
  CHECK(y[1] == Complex(1, 0));
  const ComplexMatrix a = m.adjoint();
  CHECK(a(0, 0) == Complex(1, -1));
  CHECK(a(1, 0) == Complex(2, 0));
  CHECK(a(1, 1) == Complex(0, 1));
  CHECK((m * ComplexMatrix::identity(2)).entries()[1] == Complex(2, 0));
  CHECK(ComplexMatrix::outer(x).is_hermitian(0.0));
}

TEST_CASE("projection onto the complement of a basis") {
  const std::vector<ComplexVector> b1{ComplexVector{0.0, 1.0}};
  CHECK(close(project_onto_complement(ComplexVector{1.0, 0.0}, b1), ComplexVector{1.0, 0.0},
              1e-15));

  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<ComplexVector> b2{ComplexVector{s, s}};
  CHECK(close(project_onto_complement(ComplexVector{1.0, 0.0}, b2), ComplexVector{0.5, -0.5},
              1e-15));

  const std::vector<ComplexVector> full{ComplexVector{1.0, 0.0}, ComplexVector{0.0, 1.0}};
  try {
    project_onto_complement(ComplexVector{1.0, 0.0}, full);
    FAIL("expected null space exhaustion");
  } catch (const NumericError& e) {
    CHECK(e.kind() == NumericErrorKind::kNullSpaceExhausted);
  }
}

TEST_CASE("rank-deficient bases are deflated") {
  const std::vector<ComplexVector> dup{ComplexVector{1.0, 1.0, 0.0},
                                       ComplexVector{Complex(0, 2), Complex(0, 2), 0.0},
                                       ComplexVector(3)};
  const ComplexVector p = project_onto_complement(ComplexVector{1.0, 0.0, 1.0}, dup);
  CHECK(close(p, ComplexVector{0.5, -0.5, 1.0}, 1e-14));
}

TEST_CASE("projection is orthogonal to the basis and idempotent") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    RngStream rng(11, trial);
    const std::size_t n = 2 + trial % 3;
    const std::size_t k = trial % n;
    std::vector<ComplexVector> basis;
    for (std::size_t j = 0; j < k; ++j) basis.push_back(complex_gaussian_vector(n, 1.0, rng));
    const ComplexVector v = complex_gaussian_vector(n, 1.0, rng);
    const ComplexVector p = project_onto_complement(v, basis);
    for (const auto& b : basis) CHECK(std::abs(inner(b, p)) < 1e-10 * v.norm());
    const ComplexVector pp = project_onto_complement(p, basis);
    CHECK(close(pp, p, 1e-12));
  }
}

TEST_CASE("hermitian solve on small systems") {
  const ComplexVector b{2.0, Complex(0, 3)};
  CHECK(close(hermitian_solve(ComplexMatrix::identity(2), b), b, 1e-15));

  const std::vector<double> d{2.0, 4.0};
  CHECK(close(hermitian_solve(ComplexMatrix::diagonal(d), ComplexVector{2.0, 4.0}),
              ComplexVector{1.0, 1.0}, 1e-15));

  const ComplexMatrix indefinite(2, 2, {1.0, 0.0, 0.0, -1.0});
  try {
    hermitian_solve(indefinite, b);
    FAIL("expected a pivot failure");
  } catch (const NumericError& e) {
    CHECK(e.kind() == NumericErrorKind::kNotPositiveDefinite);
  }
  const ComplexMatrix skew(2, 2, {1.0, Complex(0, 1), Complex(0, 1), 1.0});
  CHECK_THROWS_AS(hermitian_solve(skew, b), ValidationError);
}

TEST_CASE("hermitian solve recovers a planted solution") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    RngStream rng(5, trial);
    // A = B B^H + 0.1 I is Hermitian positive definite.
    ComplexMatrix bmat(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) bmat(r, c) = rng.next_complex_gaussian(1.0);
    }
    ComplexMatrix a = bmat * bmat.adjoint();
    a += ComplexMatrix::identity(3).scaled(0.1);
    const ComplexVector x = complex_gaussian_vector(3, 1.0, rng);
    const ComplexVector b = a * x;
    const ComplexVector solved = hermitian_solve(a, b);
    CHECK(close(solved, x, 1e-9));
    CHECK((a * solved - b).norm() <= 1e-10 * b.norm());
  }
}
