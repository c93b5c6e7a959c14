#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "siegel/errors.hpp"

namespace siegel {

bool is_prime(std::int64_t n);

// Residue class in Z/pZ. Arithmetic between different moduli throws.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::int64_t modulus);

  std::int64_t residue() const { return residue_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  ModP operator-() const { return ModP(modulus_ - residue_, modulus_); }
  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }

  void add_product(const ModP& b, const ModP& c) { *this += b * c; }

  // Throws std::domain_error for the zero residue.
  ModP inverse() const;

  friend bool operator==(const ModP& a, const ModP& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_;
  }

  std::string to_string() const { return std::to_string(residue_); }
  friend std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.residue_; }

 private:
  void check_same(const ModP& o) const {
    if (o.modulus_ != modulus_) {
      throw DomainMismatch("mod " + std::to_string(modulus_) + " vs mod " +
                           std::to_string(o.modulus_));
    }
  }

  std::int64_t residue_ = 0;
  std::int64_t modulus_ = 0;
};

}  // namespace siegel
