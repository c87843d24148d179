#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "geomlie/integer.hpp"

using namespace geomlie;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("checked arithmetic throws instead of wrapping") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_sub(-big - 1, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  IntMatrix m{{big, 0}, {0, 1}};
  CHECK_THROWS_AS(m + m, OverflowError);
  CHECK_THROWS_AS(m * m, OverflowError);
}

TEST_CASE("basic matrix algebra") {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a.apply(IntVector{1, 1}) == IntVector{3, 7});
  CHECK(a.power(0).is_identity());
  CHECK(a.power(3) == a * a * a);
  CHECK(b.order() == 2);
  CHECK(IntMatrix{{1, 1}, {0, 1}}.order() == 0);  // unipotent, infinite order
  CHECK(a.determinant() == -2);
  CHECK_THROWS_AS(a * IntMatrix(3, 3), DimensionError);
  CHECK_THROWS_AS(a.apply(IntVector{1, 2, 3}), DimensionError);
}

TEST_CASE("unimodular inverse") {
  const IntMatrix u{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
  REQUIRE(u.determinant() == 1);
  CHECK((u * u.unimodular_inverse()).is_identity());
  CHECK((u.unimodular_inverse() * u).is_identity());
  CHECK_THROWS_AS(IntMatrix({{2, 0}, {0, 1}}).unimodular_inverse(), Error);
}

TEST_CASE("positive definiteness by leading minors") {
  CHECK(IntMatrix{{2, -1}, {-1, 2}}.is_positive_definite());
  CHECK_FALSE(IntMatrix{{2, -2}, {-2, 2}}.is_positive_definite());
  CHECK_FALSE(IntMatrix{{-1}}.is_positive_definite());
}

TEST_CASE("exact determinant agrees with Bareiss on random matrices") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const IntMatrix m = random_matrix(rng, n, -9, 9);
    CHECK(exact_determinant(m) == BigInt(m.determinant()));
  }
}

TEST_CASE("exact determinant beyond 64 bits") {
  // det(diag(1000, ..., 1000)) = 10^120
  const std::size_t n = 40;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1000;
  BigInt want = 1;
  for (std::size_t i = 0; i < n; ++i) want *= 1000;
  CHECK(exact_determinant(m) == want);
  // a sign flip and a row swap
  m(0, 0) = -1000;
  CHECK(exact_determinant(m) == -want);
  IntMatrix z(3, 3);
  CHECK(exact_determinant(z) == 0);
}

TEST_CASE("determinant is multiplicative (property)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 4, -5, 5), b = random_matrix(rng, 4, -5, 5);
    CHECK(exact_determinant(a * b) == exact_determinant(a) * exact_determinant(b));
  }
}
