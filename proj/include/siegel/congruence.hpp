#pragma once

// p-minimum matrices, Sturm-type vanishing criteria for even and odd
// weight, and the end-to-end verification of the mod-23 congruence
//   det(T) != 0 mod 23  =>  a(T; X35) == 0 mod 23.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "siegel/igusa.hpp"
#include "siegel/qexp.hpp"

namespace siegel::cong {

// m_p(F): the order-least index with a nonzero residue, or infinity when
// every residue up to the examined trace bound vanishes.
struct MinMatrixResult {
  std::optional<TIndex> value;
  std::int64_t prime = 0;
  int weight = 0;
  std::int64_t trace_bound_examined = 0;

  bool is_infinity() const { return !value.has_value(); }
  std::string to_string() const;
};

MinMatrixResult min_matrix(const ModPExpansion& f);

enum class BoundKind { EvenThm, OddProp };

struct SturmBound {
  BoundKind kind;
  int weight;
  std::int64_t prime;
  TIndex bound;
  std::int64_t r0;
};

// Even k: bound ([k/10], [k/10], r0), r0 = 2 [k/10].
// Odd k >= 35: bound ([(k-35)/10] + 2, [(k-35)/10] + 3, r0 - 1), r0 = 2 [(k-35)/10].
// Throws std::invalid_argument for p < 5 or a weight of the wrong kind.
SturmBound sturm_bound(BoundKind kind, int k, std::int64_t p);

enum class Outcome { Pass, Fail, Insufficient };
enum class Verdict { Certified, Refuted, Insufficient };

const char* to_string(Outcome o);
const char* to_string(Verdict v);

struct HypothesisCheck {
  std::string name;
  Outcome outcome;
  std::string detail;
  std::optional<TIndex> witness;
};

struct Certificate {
  std::string claim;
  std::int64_t prime = 0;
  int weight = 0;
  std::string region;
  std::vector<HypothesisCheck> checks;
  std::vector<std::string> assumptions;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  Verdict verdict = Verdict::Insufficient;
  std::optional<TIndex> witness;

  void add_check(HypothesisCheck check);
  // Recomputes verdict and witness from the checks: any Insufficient wins,
  // then the first Fail (with its witness), else Certified.
  void finalize();
  // Key-value text with a fixed field order.
  std::string serialize() const;
};

// Even-weight criterion: vanishing on {m, n <= [k/10]} and, equivalently
// via the inclusion of index sets, m_p(F) > ([k/10], [k/10], r0).
Certificate sturm_even(const ModPExpansion& f, int k, std::vector<std::string> assumptions = {});

// Odd-weight criterion: m_p(F) beyond the odd-weight bound matrix.
Certificate sturm_odd(const ModPExpansion& f, int k, std::vector<std::string> assumptions = {});

struct InclusionReport {
  bool superset = false;        // {T <= B} contains {m, n <= k/10}
  bool strictness_witness = true;  // ([k/10]+1, 0, 0) < B; only checked for k >= 20
  std::size_t order_set_size = 0;
  std::size_t box_set_size = 0;
};

InclusionReport inclusion_report(int k);
bool inclusion_check(int k);

// m_p(F G) == m_p(F) + m_p(G). Throws InsufficientBound when the sum lies
// beyond the product's trace bound and std::invalid_argument if either
// factor vanishes mod p within its bound.
bool minmat_additivity_test(const ModPExpansion& f, const ModPExpansion& g);

// Nonzero-residue indices of X35 must have 4 det(T) == 0 mod 23, both via
// Theta(X35) mod 23 on trace <= 9 with the weight-59 odd Sturm bound, and
// by a direct scan of every index with trace <= scan_bound.
Certificate verify_x35_mod23(const igusa::GeneratorSet& gen, std::int64_t scan_bound);

// Theta(X6) == 4 X12 mod 5: Sturm certificate at weight 12 plus a direct
// comparison up to scan_bound.
Certificate verify_theta_example(const igusa::GeneratorSet& gen, std::int64_t scan_bound);

// Compares X35 against the published trace <= 9 coefficients.
HypothesisCheck reference_expansion_check(const QExpansion& x35);

}  // namespace siegel::cong
