#include "siegel/numtheory.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace siegel::nt {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::mutex g_bernoulli_mu;
std::vector<Rational> g_bernoulli{Rational(1)};

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  std::lock_guard lock(g_bernoulli_mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (static_cast<int>(g_bernoulli.size()) <= n) {
    int m = static_cast<int>(g_bernoulli.size());
    Rational acc;
    for (int j = 0; j < m; ++j) acc.add_product(Rational(binomial(m + 1, j)), g_bernoulli[j]);
    g_bernoulli.push_back(-acc / Rational(m + 1));
  }
  return g_bernoulli[n];
}

Rational bernoulli_poly(int n, const Rational& x) {
  Rational acc;
  Rational xp(1);  // x^(n-j) built from j = n downwards
  for (int j = n; j >= 0; --j) {
    acc.add_product(Rational(binomial(n, j)) * bernoulli(j), xp);
    xp *= x;
  }
  return acc;
}

int kronecker(std::int64_t a, std::int64_t b) {
  static constexpr int kTab[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (b & 1) == 0) return 0;
  int v = 0;
  while ((b & 1) == 0) {
    ++v;
    b /= 2;
  }
  int k = (v % 2 == 0) ? 1 : kTab[a & 7];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  for (;;) {
    if (a == 0) return b > 1 ? 0 : k;
    v = 0;
    while ((a & 1) == 0) {
      ++v;
      a /= 2;
    }
    if (v % 2 == 1) k *= kTab[b & 7];
    if ((a & b & 2) != 0) k = -k;
    std::int64_t r = std::llabs(a);
    a = b % r;
    b = r;
  }
}

namespace {

bool squarefree(std::int64_t n) {
  for (const auto& [p, e] : factorize(std::llabs(n))) {
    if (e > 1) return false;
  }
  return true;
}

std::int64_t mod4(std::int64_t v) { return ((v % 4) + 4) % 4; }

}  // namespace

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0) return false;
  if (mod4(D) == 1) return squarefree(D);
  if (mod4(D) != 0) return false;
  std::int64_t m = D / 4;
  return (mod4(m) == 2 || mod4(m) == 3) && squarefree(m);
}

QuadCharacter::QuadCharacter(std::int64_t discriminant) : D_(discriminant) {
  if (!is_fundamental_discriminant(discriminant)) {
    throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(discriminant));
  }
}

Rational gen_bernoulli(int n, const QuadCharacter& chi) {
  if (n < 1) throw std::invalid_argument("gen_bernoulli: n must be >= 1");
  const std::int64_t f = chi.conductor();
  Rational acc;
  for (std::int64_t a = 1; a <= f; ++a) {
    int c = chi(a);
    if (c == 0) continue;
    Rational term = bernoulli_poly(n, Rational(BigInt(a), BigInt(f)));
    if (c > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc * pow(Rational(f), static_cast<unsigned long>(n - 1));
}

Discriminant fundamental_decomposition(int r_parity, std::int64_t N) {
  if (N <= 0) throw std::invalid_argument("fundamental_decomposition: N must be positive");
  const std::int64_t s = (r_parity % 2 == 0) ? N : -N;
  if (mod4(s) == 2 || mod4(s) == 3) {
    throw std::invalid_argument("(-1)^r N = " + std::to_string(s) + " is 2 or 3 mod 4");
  }
  std::int64_t core = s < 0 ? -1 : 1;
  std::int64_t square_root = 1;
  for (const auto& [p, e] : factorize(std::llabs(s))) {
    if (e % 2 == 1) core *= p;
    for (int i = 0; i < e / 2; ++i) square_root *= p;
  }
  if (mod4(core) == 1) return {core, square_root};
  // core is 2 or 3 mod 4, so 4 | s / core and the square part carries a 2
  return {4 * core, square_root / 2};
}

BigInt divisor_sigma(unsigned k, std::int64_t n) {
  BigInt acc = 0;
  for (std::int64_t d : divisors(n)) {
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k);
    acc += t;
  }
  return acc;
}

int moebius(std::int64_t n) {
  int out = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    out = -out;
  }
  return out;
}

Rational cohen_h(int r, std::int64_t N) {
  if (r < 1) throw std::invalid_argument("cohen_h: r must be positive");
  if (N < 0) throw std::invalid_argument("cohen_h: N must be non-negative");
  if (N == 0) return -bernoulli(2 * r) / Rational(2 * r);
  const std::int64_t s = (r % 2 == 0) ? N : -N;
  if (mod4(s) == 2 || mod4(s) == 3) return Rational(0);

  const auto [D, f] = fundamental_decomposition(r, N);
  const QuadCharacter chi(D);
  const Rational l_value = -gen_bernoulli(r, chi) / Rational(r);
  Rational sum;
  for (std::int64_t d : divisors(f)) {
    const int mu = moebius(d);
    const int c = chi(d);
    if (mu == 0 || c == 0) continue;
    BigInt dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r - 1));
    BigInt term = dp * divisor_sigma(static_cast<unsigned>(2 * r - 1), f / d);
    if (mu * c < 0) term = -term;
    sum += Rational(term);
  }
  return l_value * sum;
}

CohenHTable::CohenHTable(int r) : r_(r) {
  if (r < 1) throw std::invalid_argument("CohenHTable: r must be positive");
}

Rational CohenHTable::operator()(std::int64_t N) const {
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(N);
    if (it != cache_.end()) return it->second;
  }
  Rational value = cohen_h(r_, N);
  std::lock_guard lock(mu_);
  return cache_.emplace(N, std::move(value)).first->second;
}

}  // namespace siegel::nt
