#include <stdexcept>

#include "siegel/modp.hpp"
#include "siegel/rational.hpp"

namespace siegel {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

void Rational::add_product(const Rational& b, const Rational& c) {
  if (b.is_integer() && c.is_integer() && is_integer()) {
    mpz_addmul(v_.get_num_mpz_t(), b.v_.get_num_mpz_t(), c.v_.get_num_mpz_t());
    return;
  }
  mpq_class t;
  mpq_mul(t.get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
  v_ += t;
}

Rational pow(const Rational& base, unsigned long e) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(n, d);
}

std::int64_t mod_residue(const BigInt& v, std::int64_t m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModP::ModP(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus > (std::int64_t{1} << 31)) {
    throw std::invalid_argument("modulus out of range: " + std::to_string(modulus));
  }
  residue_ = value % modulus;
  if (residue_ < 0) residue_ += modulus;
}

ModP& ModP::operator+=(const ModP& o) {
  check_same(o);
  residue_ += o.residue_;
  if (residue_ >= modulus_) residue_ -= modulus_;
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  check_same(o);
  residue_ -= o.residue_;
  if (residue_ < 0) residue_ += modulus_;
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  check_same(o);
  residue_ = (residue_ * o.residue_) % modulus_;
  return *this;
}

ModP ModP::inverse() const {
  if (residue_ == 0) throw std::domain_error("inverse of 0 mod " + std::to_string(modulus_));
  // extended Euclid
  std::int64_t a = residue_, b = modulus_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw std::domain_error("non-invertible residue");
  return ModP(x0, modulus_);
}

}  // namespace siegel
