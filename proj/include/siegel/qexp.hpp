#pragma once

// Trace-truncated Fourier expansions of degree-2 Siegel modular forms,
//   F = sum_{T in L_2, tr(T) <= N} a(T; F) q^T,
// over the exact rationals or a prime field.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/modp.hpp"
#include "siegel/rational.hpp"
#include "siegel/tindex.hpp"

namespace siegel {

// Coefficient domain: prime == 0 means Q, otherwise F_prime.
struct Domain {
  std::int64_t prime = 0;

  bool is_rational() const { return prime == 0; }
  std::string name() const { return prime == 0 ? "Q" : "F" + std::to_string(prime); }
  friend bool operator==(const Domain&, const Domain&) = default;
};

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational from_int(std::int64_t v, const Domain&) { return Rational(static_cast<long>(v)); }
};

template <>
struct ScalarOps<ModP> {
  static ModP from_int(std::int64_t v, const Domain& d) { return ModP(v, d.prime); }
};

template <class S>
class Expansion {
 public:
  // The zero expansion of the given weight and trace bound.
  Expansion(int weight, std::int64_t bound, Domain domain = {});

  // c * q^0
  static Expansion constant(const S& c, int weight, std::int64_t bound, Domain domain = {});

  int weight() const { return weight_; }
  std::int64_t trace_bound() const { return layout_->bound(); }
  const Domain& domain() const { return domain_; }
  // False for derivative / theta intermediates over Q that are not modular forms.
  bool modular() const { return modular_; }
  const IndexLayout& layout() const { return *layout_; }

  // Zero outside L_2; throws InsufficientBound when trace(t) exceeds the bound.
  const S& coeff(const TIndex& t) const;
  void set(const TIndex& t, S value);

  const std::vector<S>& coefficients() const { return coeffs_; }
  const S& at_position(std::size_t pos) const { return coeffs_[pos]; }
  S& at_position(std::size_t pos) { return coeffs_[pos]; }

  bool is_zero() const;
  std::size_t support_size() const;

  Expansion truncated(std::int64_t bound) const;
  Expansion with_weight(int weight, bool modular = true) const;

  friend bool operator==(const Expansion& a, const Expansion& b) {
    return a.weight_ == b.weight_ && a.domain_ == b.domain_ && a.modular_ == b.modular_ &&
           a.trace_bound() == b.trace_bound() && a.coeffs_ == b.coeffs_;
  }

 private:
  int weight_;
  Domain domain_;
  bool modular_ = true;
  std::shared_ptr<const IndexLayout> layout_;
  std::vector<S> coeffs_;
  S zero_;
};

using QExpansion = Expansion<Rational>;
using ModPExpansion = Expansion<ModP>;

template <class S>
Expansion<S> add(const Expansion<S>& f, const Expansion<S>& g);
template <class S>
Expansion<S> sub(const Expansion<S>& f, const Expansion<S>& g);
template <class S>
Expansion<S> scale(const S& c, const Expansion<S>& f);

// Full convolution over S + S' = T, exact up to min of the two bounds.
template <class S>
Expansion<S> mul(const Expansion<S>& f, const Expansion<S>& g);

// f^e by repeated squaring; f^0 is the constant 1 of weight 0.
template <class S>
Expansion<S> power(const Expansion<S>& f, unsigned e);

enum class Axis { D11, D12, D22 };

// Normalized partial derivative (2 pi i)^{-1} d/dz_jk: multiplies a(T) by
// m, r or n. The weight is left unchanged and the result is marked as a
// non-modular intermediate.
template <class S>
Expansion<S> derivative(const Expansion<S>& f, Axis axis);

// a(T) -> det(T) a(T). Over Q the result keeps weight k and is marked
// non-modular. Over F_p (p odd) the result is given weight k + p + 1, the
// weight of the cusp form it is congruent to; p = 2 throws.
template <class S>
Expansion<S> theta_op(const Expansion<S>& f);

// m -> a((m, 0, 0)) for 0 <= m <= trace bound.
template <class S>
std::vector<S> phi_op(const Expansion<S>& f);

// Throws NotPIntegral naming the first offending index (in order).
ModPExpansion reduce_mod_p(const QExpansion& f, std::int64_t p);

struct SymmetryViolation {
  TIndex index;
  TIndex image;
  std::string transform;
};

// Checks a(T) = det(U)^k a(U^t T U) for U in {swap, r-negation, shears}
// wherever both T and its image lie inside the bound.
template <class S>
std::vector<SymmetryViolation> symmetry_check(const Expansion<S>& f);

// Line format: a header "qexp weight=<k> bound=<N> domain=<Q|Fp>[ intermediate]"
// followed by "m n r num den" (Q) or "m n r residue" (F_p) for every
// nonzero coefficient in increasing order.
template <class S>
std::string serialize(const Expansion<S>& f);

using AnyExpansion = std::variant<QExpansion, ModPExpansion>;

// Strict inverse of serialize(): rejects unsorted, duplicate, zero or
// non-reduced entries, so serialize(parse(s)) == s for every accepted s.
AnyExpansion parse_expansion(const std::string& text);
QExpansion parse_q_expansion(const std::string& text);

// Worker threads used by mul; 0 selects hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

}  // namespace siegel
