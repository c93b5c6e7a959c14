#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "siegel/numtheory.hpp"

using namespace siegel;
using nt::QuadCharacter;

namespace {
Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }
}  // namespace

TEST_CASE("bernoulli: examples and Akiyama-Tanigawa oracle") {
  CHECK(nt::bernoulli(0) == q(1));
  CHECK(nt::bernoulli(1) == q(-1, 2));
  CHECK(nt::bernoulli(6) == q(1, 42));
  CHECK(nt::bernoulli(12) == q(-691, 2730));
  for (int n = 0; n <= 40; ++n) CHECK(nt::bernoulli(n) == oracle::bernoulli(n));
  for (int n = 3; n <= 41; n += 2) CHECK(nt::bernoulli(n).is_zero());
}

TEST_CASE("kronecker: examples") {
  CHECK(nt::kronecker(-3, 1) == 1);
  CHECK(nt::kronecker(-3, 2) == -1);
  CHECK(nt::kronecker(-4, 3) == -1);
  CHECK(nt::kronecker(-4, 2) == 0);
  CHECK(nt::kronecker(5, 0) == 0);
  CHECK(nt::kronecker(1, 0) == 1);
}

TEST_CASE("kronecker: agrees with the brute-force Legendre oracle") {
  for (std::int64_t D = -200; D <= 200; ++D) {
    if (!oracle::is_fundamental_bf(D)) continue;
    for (std::int64_t m = 1; m <= 150; ++m) {
      CAPTURE(D);
      CAPTURE(m);
      CHECK(nt::kronecker(D, m) == oracle::kronecker_bf(D, m));
    }
  }
}

TEST_CASE("kronecker: total multiplicativity on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dd(-500, 500), mm(1, 400);
  int tested = 0;
  while (tested < 2000) {
    const std::int64_t D = dd(rng);
    if (!nt::is_fundamental_discriminant(D)) continue;
    const std::int64_t a = mm(rng), b = mm(rng);
    CHECK(nt::kronecker(D, a * b) == nt::kronecker(D, a) * nt::kronecker(D, b));
    ++tested;
  }
}

TEST_CASE("QuadCharacter rejects non-fundamental discriminants") {
  CHECK_THROWS_AS(QuadCharacter(-12), std::invalid_argument);
  CHECK_THROWS_AS(QuadCharacter(0), std::invalid_argument);
  CHECK_THROWS_AS(QuadCharacter(2), std::invalid_argument);
  CHECK_NOTHROW(QuadCharacter(1));
  CHECK_NOTHROW(QuadCharacter(-8));
  CHECK_NOTHROW(QuadCharacter(12));
}

TEST_CASE("gen_bernoulli: examples") {
  CHECK(nt::gen_bernoulli(1, QuadCharacter(-4)) == q(-1, 2));
  CHECK(nt::gen_bernoulli(1, QuadCharacter(-3)) == q(-1, 3));
  CHECK(nt::gen_bernoulli(6, QuadCharacter(1)) == q(1, 42));
}

TEST_CASE("gen_bernoulli: power-series oracle for n <= 12, |D| <= 24") {
  for (std::int64_t D = -24; D <= 24; ++D) {
    if (!oracle::is_fundamental_bf(D)) continue;
    for (int n = 1; n <= 12; ++n) {
      CAPTURE(D);
      CAPTURE(n);
      CHECK(nt::gen_bernoulli(n, QuadCharacter(D)) == oracle::gen_bernoulli_series(n, D));
    }
  }
}

TEST_CASE("fundamental_decomposition") {
  auto check = [](int r, std::int64_t N, std::int64_t D, std::int64_t f) {
    const auto got = nt::fundamental_decomposition(r, N);
    CHECK(got.fundamental == D);
    CHECK(got.conductor == f);
  };
  check(1, 3, -3, 1);
  check(1, 4, -4, 1);
  check(1, 12, -3, 2);
  check(1, 32, -8, 2);
  check(0, 9, 1, 3);
  CHECK_THROWS_AS(nt::fundamental_decomposition(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(nt::fundamental_decomposition(0, 2), std::invalid_argument);

  // oracle: the unique f with f^2 | s and s / f^2 fundamental
  for (int r = 0; r <= 1; ++r) {
    for (std::int64_t N = 1; N <= 600; ++N) {
      const std::int64_t s = r == 0 ? N : -N;
      if (oracle::posmod(s, 4) > 1) continue;
      std::int64_t found = 0;
      for (std::int64_t f = 1; f * f <= N; ++f) {
        if (s % (f * f) == 0 && oracle::is_fundamental_bf(s / (f * f))) {
          CHECK(found == 0);
          found = f;
        }
      }
      const auto got = nt::fundamental_decomposition(r, N);
      CHECK(got.conductor == found);
      CHECK(got.fundamental * found * found == s);
    }
  }
}

TEST_CASE("divisor_sigma and moebius") {
  CHECK(nt::divisor_sigma(3, 1) == 1);
  CHECK(nt::divisor_sigma(3, 2) == 9);
  BigInt expected = 1 + BigInt(512) + BigInt(19683) + BigInt(10077696);
  CHECK(nt::divisor_sigma(9, 6) == expected);
  CHECK(nt::divisor_sigma(0, 12) == 6);
  CHECK(nt::moebius(1) == 1);
  CHECK(nt::moebius(4) == 0);
  CHECK(nt::moebius(6) == 1);
  CHECK(nt::moebius(30) == -1);
}

TEST_CASE("cohen_h: examples") {
  CHECK(nt::cohen_h(1, 1) == q(0));
  CHECK(nt::cohen_h(1, 3) == q(1, 3));
  CHECK(nt::cohen_h(3, 0) == q(-1, 252));
  CHECK(nt::cohen_h(1, 0) == q(-1, 12));
  CHECK(nt::cohen_h(3, 3) == q(-2, 9));
  CHECK(nt::cohen_h(3, 4) == q(-1, 2));
}

TEST_CASE("cohen_h vanishes when (-1)^r N is 2 or 3 mod 4") {
  for (int r = 1; r <= 11; ++r) {
    for (std::int64_t N = 1; N <= 80; ++N) {
      const std::int64_t s = r % 2 == 0 ? N : -N;
      if (oracle::posmod(s, 4) >= 2) CHECK(nt::cohen_h(r, N).is_zero());
    }
  }
}

TEST_CASE("cohen_h(1, N) equals the Hurwitz class number for N <= 200") {
  for (std::int64_t N = 1; N <= 200; ++N) {
    if (N % 4 != 0 && N % 4 != 3) continue;
    CAPTURE(N);
    CHECK(nt::cohen_h(1, N) == oracle::hurwitz_class_number(N));
  }
}

TEST_CASE("CohenHTable memoizes identical values") {
  const nt::CohenHTable table(9);
  for (std::int64_t N = 0; N <= 60; ++N) {
    const Rational first = table(N);
    CHECK(first == nt::cohen_h(9, N));
    CHECK(table(N) == first);
  }
}
