#pragma once

// Exact number-theoretic kernel for Siegel-Eisenstein coefficients:
// Bernoulli numbers, Kronecker symbols, generalized Bernoulli numbers of
// quadratic characters and Cohen's function H(r, N).

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "siegel/rational.hpp"

namespace siegel::nt {

// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Positive divisors of n > 0 in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(int n);

// Bernoulli polynomial B_n(x).
Rational bernoulli_poly(int n, const Rational& x);

// Kronecker symbol (D/m).
int kronecker(std::int64_t D, std::int64_t m);

bool is_fundamental_discriminant(std::int64_t D);

// Quadratic character chi_D(m) = (D/m) for a fundamental discriminant D.
class QuadCharacter {
 public:
  // Throws std::invalid_argument unless D is fundamental.
  explicit QuadCharacter(std::int64_t discriminant);

  std::int64_t discriminant() const { return D_; }
  std::int64_t conductor() const { return D_ < 0 ? -D_ : D_; }
  int operator()(std::int64_t m) const { return kronecker(D_, m); }

 private:
  std::int64_t D_;
};

// B_{n,chi} = f^{n-1} * sum_{a=1..f} chi(a) B_n(a/f), f = |D|.
Rational gen_bernoulli(int n, const QuadCharacter& chi);

struct Discriminant {
  std::int64_t fundamental;  // D
  std::int64_t conductor;    // f with (-1)^r N = D f^2
};

// Splits (-1)^r_parity * N = D * f^2 with D fundamental. Throws
// std::invalid_argument if (-1)^r N is 2 or 3 mod 4 or N <= 0.
Discriminant fundamental_decomposition(int r_parity, std::int64_t N);

BigInt divisor_sigma(unsigned k, std::int64_t n);

int moebius(std::int64_t n);

// Cohen's H(r, N); see CohenHTable for the memoizing variant.
Rational cohen_h(int r, std::int64_t N);

// Memoized H(r, .) for fixed r. Safe for concurrent callers.
class CohenHTable {
 public:
  explicit CohenHTable(int r);

  int r() const { return r_; }
  Rational operator()(std::int64_t N) const;

 private:
  int r_;
  mutable std::mutex mu_;
  mutable std::map<std::int64_t, Rational> cache_;
};

}  // namespace siegel::nt
