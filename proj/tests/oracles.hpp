#pragma once

// Independent brute-force oracles. None of these call into the library's
// number-theory or convolution code paths.

#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "siegel/qexp.hpp"

namespace oracle {

using siegel::BigInt;
using siegel::Rational;

// Akiyama-Tanigawa; yields B_n with B_1 = +1/2, so flip the sign at n = 1.
inline Rational bernoulli(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(BigInt(1), BigInt(m + 1));
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] =
          Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
  }
  return n == 1 ? -a[0] : a[0];
}

inline std::int64_t posmod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Legendre symbol by counting squares mod an odd prime.
inline int legendre_bf(std::int64_t a, std::int64_t p) {
  a = posmod(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

// (D/m) for m >= 1 from the prime factorization of m, with the
// definitional value at 2 for discriminants.
inline int kronecker_bf(std::int64_t D, std::int64_t m) {
  int out = 1;
  for (std::int64_t p = 2; m > 1; ++p) {
    while (m % p == 0) {
      m /= p;
      if (p == 2) {
        if (D % 2 == 0) return 0;
        const std::int64_t r = posmod(D, 8);
        out *= (r == 1 || r == 7) ? 1 : -1;
      } else {
        out *= legendre_bf(D, p);
      }
    }
  }
  return out;
}

// Weighted count of reduced forms ax^2 + bxy + cy^2 of discriminant -N
// (Hurwitz class number), N > 0.
inline Rational hurwitz_class_number(std::int64_t N) {
  Rational total;
  for (std::int64_t a = 1; 3 * a * a <= N; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      const std::int64_t num = b * b + N;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (-b == a || a == c)) continue;
      if (a == c && b == 0) {
        total += Rational(BigInt(1), BigInt(2));
      } else if (a == b && b == c) {
        total += Rational(BigInt(1), BigInt(3));
      } else {
        total += Rational(1);
      }
    }
  }
  return total;
}

// B_{n,chi} from the power series of sum_a chi(a) t e^{at} / (e^{ft} - 1).
inline Rational gen_bernoulli_series(int n, std::int64_t D) {
  const std::int64_t f = D < 0 ? -D : D;
  const int len = n + 1;
  std::vector<Rational> fact(static_cast<std::size_t>(len + 2), Rational(1));
  for (int i = 1; i < len + 2; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * Rational(i);
  // (e^{ft} - 1) / t = sum_i f^{i+1} t^i / (i+1)!
  std::vector<Rational> denom(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    denom[static_cast<std::size_t>(i)] = siegel::pow(Rational(f), static_cast<unsigned long>(i + 1)) / fact[static_cast<std::size_t>(i + 1)];
  }
  std::vector<Rational> inv(static_cast<std::size_t>(len));
  inv[0] = Rational(1) / denom[0];
  for (int i = 1; i < len; ++i) {
    Rational acc;
    for (int j = 1; j <= i; ++j) acc += denom[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(i - j)];
    inv[static_cast<std::size_t>(i)] = -acc / denom[0];
  }
  std::vector<Rational> num(static_cast<std::size_t>(len));
  for (std::int64_t a = 1; a <= f; ++a) {
    const int c = f == 1 ? 1 : kronecker_bf(D, a);
    if (c == 0) continue;
    for (int i = 0; i < len; ++i) {
      num[static_cast<std::size_t>(i)] += Rational(c) * siegel::pow(Rational(a), static_cast<unsigned long>(i)) / fact[static_cast<std::size_t>(i)];
    }
  }
  Rational coeff;
  for (int i = 0; i <= n; ++i) coeff += num[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(n - i)];
  return coeff * fact[static_cast<std::size_t>(n)];
}

inline bool is_fundamental_bf(std::int64_t D) {
  auto squarefree = [](std::int64_t v) {
    v = v < 0 ? -v : v;
    for (std::int64_t d = 2; d * d <= v; ++d) {
      if (v % (d * d) == 0) return false;
    }
    return true;
  };
  if (posmod(D, 4) == 1) return D != 0 && squarefree(D);
  if (posmod(D, 4) != 0) return false;
  const std::int64_t m = D / 4;
  return (posmod(m, 4) == 2 || posmod(m, 4) == 3) && squarefree(m);
}

using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
using Sparse = std::map<Key, Rational>;

inline Sparse to_sparse(const siegel::QExpansion& f) {
  Sparse out;
  for (std::size_t i = 0; i < f.layout().size(); ++i) {
    if (f.at_position(i).is_zero()) continue;
    const auto& t = f.layout().at(i);
    out[{t.m, t.n, t.r}] = f.at_position(i);
  }
  return out;
}

// Double sum over both supports, kept where the sum has trace <= bound.
inline Sparse convolve_bf(const Sparse& f, const Sparse& g, std::int64_t bound) {
  Sparse out;
  for (const auto& [s, a] : f) {
    for (const auto& [u, b] : g) {
      const Key t{std::get<0>(s) + std::get<0>(u), std::get<1>(s) + std::get<1>(u),
                  std::get<2>(s) + std::get<2>(u)};
      if (std::get<0>(t) + std::get<1>(t) > bound) continue;
      out[t] += a * b;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

// Random sparse rational expansion with small entries.
inline siegel::QExpansion random_expansion(std::mt19937_64& rng, int weight, std::int64_t bound,
                                           double density, bool fractions = false) {
  siegel::QExpansion f(weight, bound);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (std::size_t i = 0; i < f.layout().size(); ++i) {
    if (coin(rng) > density) continue;
    f.at_position(i) = fractions ? Rational(BigInt(val(rng)), BigInt(den(rng))) : Rational(val(rng));
  }
  return f;
}

inline siegel::TIndex random_index(std::mt19937_64& rng, std::int64_t max_trace) {
  const auto layout = siegel::IndexLayout::get(max_trace);
  std::uniform_int_distribution<std::size_t> pick(0, layout->size() - 1);
  return layout->at(pick(rng));
}

// GL2(Z)-reduced form (|r| <= m <= n) of a positive definite T.
inline siegel::TIndex reduce_form(siegel::TIndex t) {
  for (;;) {
    if (t.m > t.n) {
      t = {t.n, t.m, t.r};
      continue;
    }
    if (t.r > t.m || t.r < -t.m) {
      // shift r by multiples of 2m: (m, n, r) -> (m, n - k r + k^2 m, r - 2 k m)
      const std::int64_t k = (t.r + t.m) >= 0 ? (t.r + t.m) / (2 * t.m) : -((-(t.r + t.m) + 2 * t.m - 1) / (2 * t.m));
      t = {t.m, t.n - k * t.r + k * k * t.m, t.r - 2 * k * t.m};
      continue;
    }
    return t;
  }
}

}  // namespace oracle
