#include <doctest.h>

#include <limits>

#include "steinobd/error.hpp"
#include "steinobd/lattice.hpp"
#include "support/generators.hpp"
#include "support/lattice_oracle.hpp"

using namespace steinobd;

TEST_SUITE("integer_lattice") {

TEST_CASE("gcd_nonneg") {
  CHECK(gcd_nonneg(IntVector{0, 0, 0}) == 0);
  CHECK(gcd_nonneg(IntVector{0, 3}) == 3);
  CHECK(gcd_nonneg(IntVector{6, -4, 10}) == 2);
  CHECK(gcd_nonneg(IntVector{-7}) == 7);
  CHECK(gcd_nonneg(IntVector{}) == 0);
}

TEST_CASE("extended_gcd") {
  for (int64_t a = -30; a <= 30; ++a)
    for (int64_t b = -30; b <= 30; ++b) {
      auto eg = extended_gcd(a, b);
      CHECK(eg.g == oracle::euclid_gcd({a, b}));
      CHECK(eg.x * a + eg.y * b == eg.g);
    }
}

TEST_CASE("determinant agrees with Laplace expansion") {
  gen::Rng rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gen::uniform(rng, -9, 9);
    // Force some singular and some zero-pivot cases.
    if (trial % 7 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(1, j) = m(0, j);
    if (trial % 5 == 0) m(0, 0) = 0;
    CAPTURE(to_string(m));
    CHECK(static_cast<__int128>(determinant(m)) == oracle::laplace_det(m));
  }
}

TEST_CASE("UnimodularMatrix checks its determinant") {
  CHECK_NOTHROW(UnimodularMatrix(IntMatrix{{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(UnimodularMatrix(IntMatrix{{2, 0}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(UnimodularMatrix(IntMatrix{{1, 2}, {2, 4}}), ValidationError);
  CHECK_THROWS_AS(UnimodularMatrix(IntMatrix(2, 3)), ValidationError);
}

TEST_CASE("inverse of unimodular matrices") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
    auto u = gen::random_unimodular(rng, n, 10);
    auto prod = u * u.inverse();
    CHECK(prod.matrix() == IntMatrix::identity(n));
  }
}

TEST_CASE("reduce_to_gcd fixtures") {
  SUBCASE("(1, 0, 0) gives the identity") {
    auto red = reduce_to_gcd(IntVector{1, 0, 0});
    CHECK(red.gcd == 1);
    CHECK(red.transform.matrix() == IntMatrix::identity(3));
  }
  SUBCASE("zero vector gives the identity and 0") {
    auto red = reduce_to_gcd(IntVector{0, 0, 0});
    CHECK(red.gcd == 0);
    CHECK(red.transform.matrix() == IntMatrix::identity(3));
  }
  SUBCASE("(4, 6) goes to (2, 0)") {
    auto red = reduce_to_gcd(IntVector{4, 6});
    CHECK(red.gcd == 2);
    CHECK(oracle::multiply(red.transform.matrix(), {4, 6}) == std::vector<int64_t>{2, 0});
    auto det = oracle::laplace_det(red.transform.matrix());
    CHECK((det == 1 || det == -1));
  }
  SUBCASE("negative single entry") {
    auto red = reduce_to_gcd(IntVector{-5});
    CHECK(red.gcd == 5);
    CHECK(red.transform * IntVector{-5} == IntVector{5});
  }
  CHECK_THROWS_AS(reduce_to_gcd(IntVector{}), ValidationError);
}

TEST_CASE("automorphism_mapping fixtures") {
  SUBCASE("v == w") {
    auto a = automorphism_mapping({3, 0}, {3, 0});
    CHECK(a * IntVector{3, 0} == IntVector{3, 0});
  }
  SUBCASE("(0, 3) to (3, 0)") {
    auto a = automorphism_mapping({0, 3}, {3, 0});
    CHECK(oracle::multiply(a.matrix(), {0, 3}) == std::vector<int64_t>{3, 0});
    auto det = oracle::laplace_det(a.matrix());
    CHECK((det == 1 || det == -1));
  }
  SUBCASE("(2, 4) to (6, 2)") {
    auto a = automorphism_mapping({2, 4}, {6, 2});
    CHECK(oracle::multiply(a.matrix(), {2, 4}) == std::vector<int64_t>{6, 2});
    auto det = oracle::laplace_det(a.matrix());
    CHECK((det == 1 || det == -1));
  }
  CHECK_THROWS_AS(automorphism_mapping({2, 4}, {3, 0}), MismatchError);
  CHECK_THROWS_AS(automorphism_mapping({2, 4}, {2, 4, 0}), MismatchError);
}

TEST_CASE("overflow fails loudly") {
  const int64_t big = std::numeric_limits<int64_t>::max() / 2 + 1;
  IntMatrix m{{big, 0}, {0, 1}};
  CHECK_THROWS_AS((m * IntMatrix{{2, 0}, {0, 1}}), OverflowError);
  CHECK_THROWS_AS(gcd_nonneg(IntVector{std::numeric_limits<int64_t>::min()}), OverflowError);
}

TEST_CASE("property: reduce_to_gcd, automorphism_mapping, gcd invariance") {
  gen::Rng rng(0x1a77);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
    auto v = gen::random_vector(rng, n, 50);
    CAPTURE(to_string(v));
    const auto g = oracle::euclid_gcd(v.values());
    CHECK(gcd_nonneg(v) == g);

    auto red = reduce_to_gcd(v);
    CHECK(red.gcd == g);
    std::vector<int64_t> target(n, 0);
    target[0] = g;
    CHECK(oracle::multiply(red.transform.matrix(), v.values()) == target);
    auto det = oracle::laplace_det(red.transform.matrix());
    CHECK((det == 1 || det == -1));

    auto u = gen::random_unimodular(rng, n);
    CHECK(gcd_nonneg(u * v) == g);

    // Image of v under a unimodular map always has the same gcd.
    auto w = u * v;
    auto a = automorphism_mapping(v, w);
    CHECK(oracle::multiply(a.matrix(), v.values()) == w.values());
    auto da = oracle::laplace_det(a.matrix());
    CHECK((da == 1 || da == -1));

    auto other = gen::random_vector(rng, n, 50);
    if (oracle::euclid_gcd(other.values()) != g)
      CHECK_THROWS_AS(automorphism_mapping(v, other), MismatchError);
    else
      CHECK(automorphism_mapping(v, other) * v == other);

    CHECK(gcd_nonneg(concat(v, other)) ==
          oracle::euclid_gcd({gcd_nonneg(v), gcd_nonneg(other)}));
  }
}

} // TEST_SUITE
