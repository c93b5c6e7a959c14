#pragma once

// Exact q-expansions of the degree-2 Siegel-Eisenstein series and of
// Igusa's generators X4, X6, X10, X12, X35, normalized by
//   a((0,0,0); X4) = a((0,0,0); X6) = 1,
//   a((1,1,1); X10) = a((1,1,1); X12) = 1,
//   a((2,3,-1); X35) = 1.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "siegel/qexp.hpp"

namespace siegel {
class ExpansionCache;
}

namespace siegel::igusa {

// Bumped whenever a construction convention changes; part of cache keys.
inline constexpr const char* kFormulaVersion = "v1";

inline constexpr int kEisensteinWeights[] = {4, 6, 8, 10, 12};

// 1 at q^0, (-2k / B_k) sigma_{k-1}(n) at q^n, for 0 <= n <= bound.
std::vector<Rational> genus1_eisenstein(int k, std::int64_t bound);

// Degree-2 Siegel-Eisenstein series of weight k in {4, 6, 8, 10, 12}:
//   a(T) = 2 / (zeta(1-k) zeta(3-2k)) * sum_{d | content(T)} d^{k-1} H(k-1, 4det(T)/d^2).
QExpansion siegel_eisenstein(int k, std::int64_t bound);

// Throws ConstructionError unless phi(E_k) equals the genus-1 series for
// every supplied weight and E4^2 == E8 (when both are supplied).
void validate_eisenstein(const std::map<int, QExpansion>& series);

std::pair<QExpansion, QExpansion> build_X4_X6(std::int64_t bound);

// Cusp projections: X10 from {E4 E6, E10}, X12 from {E4^3, E6^2, E12}.
std::pair<QExpansion, QExpansion> build_X10_X12(const std::map<int, QExpansion>& series);
std::pair<QExpansion, QExpansion> build_X10_X12(std::int64_t bound);

// Determinant of the rows (k_j X_j), D11 X_j, D12 X_j, D22 X_j over
// j = 4, 6, 10, 12, normalized at (2,3,-1).
QExpansion build_X35(const QExpansion& x4, const QExpansion& x6, const QExpansion& x10,
                     const QExpansion& x12);

struct GeneratorSet {
  std::int64_t trace_bound = 0;
  QExpansion X4, X6, X10, X12, X35;
  std::map<int, QExpansion> eisenstein;  // E4 ... E12

  // "X4".."X35" or "E4".."E12"; throws std::out_of_range otherwise.
  const QExpansion& by_name(const std::string& name) const;
  static std::vector<std::string> names();
};

// Builds everything to the given trace bound (>= 5). With a cache, stored
// artifacts keyed by (name, bound, formula version) are reused and missing
// ones persisted.
GeneratorSet build_generators(std::int64_t bound, ExpansionCache* cache = nullptr);

struct IntegralityViolation {
  std::string form;
  TIndex index;
  Rational value;
};

std::vector<IntegralityViolation> integrality_check(const std::string& name, const QExpansion& f);
std::vector<IntegralityViolation> integrality_check(const GeneratorSet& gen);

// Nonzero coefficients of X35 with trace <= 9, in increasing index order.
const std::vector<std::pair<TIndex, std::int64_t>>& x35_reference_coefficients();

}  // namespace siegel::igusa
