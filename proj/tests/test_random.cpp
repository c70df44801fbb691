#include <cmath>
#include <limits>

#include "doctest.h"
#include "fdnoma/errors.hpp"
#include "fdnoma/random.hpp"

using namespace fdnoma;

TEST_CASE("zero variance gives the zero vector") {
  RngStream rng(1, 0);
  CHECK(complex_gaussian_vector(3, 0.0, rng).is_zero());
}

TEST_CASE("streams are reproducible and independent of draw order") {
  RngStream a(42, 7);
  RngStream b(42, 7);
  CHECK(a.next_complex_gaussian(1.0) == b.next_complex_gaussian(1.0));

  RngStream other(42, 8);
  for (int i = 0; i < 10; ++i) other.next_u64();
  RngStream c(42, 7);
  RngStream d(42, 7);
  for (int i = 0; i < 50; ++i) CHECK(c.next_u64() == d.next_u64());

  RngStream e(42, 7);
  RngStream f(43, 7);
  RngStream g(42, 9);
  const auto x = e.next_u64();
  CHECK(x != f.next_u64());
  CHECK(x != g.next_u64());
}

TEST_CASE("uniform draws stay in (0, 1]") {
  RngStream rng(3, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next_uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
  }
}

TEST_CASE("variance is rejected when not finite or negative") {
  RngStream rng(1, 0);
  CHECK_THROWS_AS(complex_gaussian_vector(2, -1.0, rng), ValidationError);
  CHECK_THROWS_AS(complex_gaussian_vector(2, std::numeric_limits<double>::infinity(), rng),
                  ValidationError);
}

TEST_CASE("sample power matches the variance") {
  RngStream rng(2024, 0);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += std::norm(rng.next_complex_gaussian(0.5));
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("empirical covariance of 2-vectors is near identity") {
  const int n = 100000;
  Complex c00 = 0.0, c01 = 0.0, c11 = 0.0, m0 = 0.0, m1 = 0.0, pseudo = 0.0;
  for (int t = 0; t < n; ++t) {
    RngStream rng(99, static_cast<std::uint64_t>(t));
    const ComplexVector v = complex_gaussian_vector(2, 1.0, rng);
    c00 += v[0] * std::conj(v[0]);
    c01 += v[0] * std::conj(v[1]);
    c11 += v[1] * std::conj(v[1]);
    m0 += v[0];
    m1 += v[1];
    pseudo += v[0] * v[0];
  }
  const double dn = n;
  CHECK(std::abs(c00 / dn - 1.0) < 0.02);
  CHECK(std::abs(c11 / dn - 1.0) < 0.02);
  CHECK(std::abs(c01 / dn) < 0.02);
  CHECK(std::abs(m0 / dn) < 0.02);
  CHECK(std::abs(m1 / dn) < 0.02);
  CHECK(std::abs(pseudo / dn) < 0.02);
}
