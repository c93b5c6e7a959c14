#include "siegel/congruence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace siegel::cong {

namespace {

const char* const kThetaAssumption =
    "theta operator: for p >= 5 and F in M_k(Gamma_2) over Z_(p) there is a cusp form G of "
    "weight k+p+1 over Z_(p) with Theta(F) == G mod p";
const char* const kEvenSturmAssumption =
    "even-weight Sturm criterion: F in M_k(Gamma_2) over Z_(p), p >= 5, k even, vanishing mod p "
    "on m, n <= k/10 implies F == 0 mod p";
const char* const kOddSturmAssumption =
    "odd-weight reduction: M_k(Gamma_2) over Z_(p) = X35 * M_{k-35}(Gamma_2) over Z_(p) for odd k, "
    "m_p(X35) = (2,3,-1) and m_p is additive, so the even-weight criterion applies to the cofactor";

// First index T <= upto (in order) with a nonzero residue.
std::optional<TIndex> first_nonzero_upto(const ModPExpansion& f, const TIndex& upto) {
  const IndexLayout& l = f.layout();
  const std::size_t last = l.position(upto);
  for (std::size_t i = 0; i <= last; ++i) {
    if (!f.at_position(i).is_zero()) return l.at(i);
  }
  return std::nullopt;
}

std::string weight_name(int k) { return std::to_string(k); }

void require_prime_at_least_5(std::int64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("Sturm criteria need a prime p >= 5, got " + std::to_string(p));
  }
}

}  // namespace

std::string MinMatrixResult::to_string() const {
  return value ? value->to_string() : "(infinity)";
}

MinMatrixResult min_matrix(const ModPExpansion& f) {
  MinMatrixResult out{std::nullopt, f.domain().prime, f.weight(), f.trace_bound()};
  const IndexLayout& l = f.layout();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!f.at_position(i).is_zero()) {
      out.value = l.at(i);
      break;
    }
  }
  return out;
}

SturmBound sturm_bound(BoundKind kind, int k, std::int64_t p) {
  require_prime_at_least_5(p);
  if (kind == BoundKind::EvenThm) {
    if (k % 2 != 0 || k <= 0) throw std::invalid_argument("even Sturm bound needs even k > 0");
    const std::int64_t t = k / 10;
    return {kind, k, p, TIndex{t, t, 2 * t}, 2 * t};
  }
  if (k % 2 == 0 || k < 35) throw std::invalid_argument("odd Sturm bound needs odd k >= 35");
  const std::int64_t t = (k - 35) / 10;
  const std::int64_t r0 = 2 * t;
  return {kind, k, p, TIndex{t + 2, t + 3, r0 - 1}, r0};
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Insufficient: return "insufficient";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Insufficient: return "Insufficient";
  }
  return "?";
}

void Certificate::add_check(HypothesisCheck check) { checks.push_back(std::move(check)); }

void Certificate::finalize() {
  witness.reset();
  verdict = Verdict::Certified;
  for (const auto& c : checks) {
    if (c.outcome == Outcome::Insufficient) {
      verdict = Verdict::Insufficient;
      return;
    }
  }
  for (const auto& c : checks) {
    if (c.outcome == Outcome::Fail) {
      verdict = Verdict::Refuted;
      witness = c.witness;
      return;
    }
  }
}

std::string Certificate::serialize() const {
  std::ostringstream os;
  os << "claim: " << claim << '\n';
  os << "prime: " << prime << '\n';
  os << "weight: " << weight << '\n';
  os << "region: " << region << '\n';
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    os << "check." << i + 1 << ": " << c.name << " | " << to_string(c.outcome);
    if (!c.detail.empty()) os << " | " << c.detail;
    if (c.witness) os << " | witness " << c.witness->to_string();
    os << '\n';
  }
  for (std::size_t i = 0; i < assumptions.size(); ++i) {
    os << "assumption." << i + 1 << ": " << assumptions[i] << '\n';
  }
  for (const auto& [key, value] : counts) os << "count." << key << ": " << value << '\n';
  os << "verdict: " << to_string(verdict) << '\n';
  os << "witness: " << (witness ? witness->to_string() : "none") << '\n';
  return os.str();
}

Certificate sturm_even(const ModPExpansion& f, int k, std::vector<std::string> assumptions) {
  const std::int64_t p = f.domain().prime;
  const SturmBound b = sturm_bound(BoundKind::EvenThm, k, p);
  const std::int64_t t = b.bound.m;

  Certificate cert;
  cert.claim = "F == 0 mod " + std::to_string(p) + " (weight " + weight_name(k) + ")";
  cert.prime = p;
  cert.weight = k;
  cert.region = "m, n <= " + std::to_string(t) + "; T <= " + b.bound.to_string();
  cert.assumptions = std::move(assumptions);
  cert.assumptions.push_back(kEvenSturmAssumption);

  if (f.trace_bound() < b.bound.trace()) {
    const std::string why = "trace bound " + std::to_string(f.trace_bound()) + " < " +
                            std::to_string(b.bound.trace());
    cert.add_check({"vanishing on m, n <= k/10", Outcome::Insufficient, why, std::nullopt});
    cert.add_check({"m_p(F) > " + b.bound.to_string(), Outcome::Insufficient, why, std::nullopt});
    cert.finalize();
    return cert;
  }

  std::optional<TIndex> box_witness;
  std::int64_t box_count = 0;
  const IndexLayout& l = f.layout();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const TIndex& idx = l.at(i);
    if (idx.m > t || idx.n > t) continue;
    ++box_count;
    if (!box_witness && !f.at_position(i).is_zero()) box_witness = idx;
  }
  cert.add_check({"vanishing on m, n <= k/10", box_witness ? Outcome::Fail : Outcome::Pass,
                  std::to_string(box_count) + " indices", box_witness});

  const auto order_witness = first_nonzero_upto(f, b.bound);
  cert.add_check({"m_p(F) > " + b.bound.to_string(), order_witness ? Outcome::Fail : Outcome::Pass,
                  std::to_string(l.position(b.bound) + 1) + " indices", order_witness});
  cert.counts.emplace_back("box_indices", box_count);
  cert.counts.emplace_back("order_indices", static_cast<std::int64_t>(l.position(b.bound) + 1));
  cert.finalize();
  return cert;
}

Certificate sturm_odd(const ModPExpansion& f, int k, std::vector<std::string> assumptions) {
  const std::int64_t p = f.domain().prime;
  const SturmBound b = sturm_bound(BoundKind::OddProp, k, p);

  Certificate cert;
  cert.claim = "F == 0 mod " + std::to_string(p) + " (weight " + weight_name(k) + ")";
  cert.prime = p;
  cert.weight = k;
  cert.region = "T <= " + b.bound.to_string() + " (r0 = " + std::to_string(b.r0) + ")";
  cert.assumptions = std::move(assumptions);
  cert.assumptions.push_back(kOddSturmAssumption);
  cert.assumptions.push_back(kEvenSturmAssumption);

  const std::string name = "m_p(F) > " + b.bound.to_string();
  if (f.trace_bound() < b.bound.trace()) {
    cert.add_check({name, Outcome::Insufficient,
                    "trace bound " + std::to_string(f.trace_bound()) + " < " +
                        std::to_string(b.bound.trace()),
                    std::nullopt});
    cert.finalize();
    return cert;
  }
  const auto witness = first_nonzero_upto(f, b.bound);
  const auto examined = static_cast<std::int64_t>(f.layout().position(b.bound) + 1);
  cert.add_check({name, witness ? Outcome::Fail : Outcome::Pass,
                  std::to_string(examined) + " indices", witness});
  cert.counts.emplace_back("order_indices", examined);
  cert.finalize();
  return cert;
}

InclusionReport inclusion_report(int k) {
  if (k < 10) throw std::invalid_argument("inclusion_check needs k >= 10");
  const std::int64_t t = k / 10;
  const TIndex bound{t, t, 2 * t};
  const auto layout = IndexLayout::get(2 * t + 1);

  std::set<std::size_t> order_set, box_set;
  for (std::size_t i = 0; i < layout->size(); ++i) {
    const TIndex& idx = layout->at(i);
    if (order_cmp(idx, bound) <= 0) order_set.insert(i);
    // 10 m <= k  <=>  m <= k/10 over the reals
    if (10 * idx.m <= k && 10 * idx.n <= k) box_set.insert(i);
  }
  InclusionReport out;
  out.order_set_size = order_set.size();
  out.box_set_size = box_set.size();
  out.superset = std::includes(order_set.begin(), order_set.end(), box_set.begin(), box_set.end());
  if (k >= 20) {
    const TIndex w{t + 1, 0, 0};
    out.strictness_witness = order_less(w, bound) && !(10 * w.m <= k);
  }
  return out;
}

bool inclusion_check(int k) {
  const InclusionReport r = inclusion_report(k);
  return r.superset && r.strictness_witness;
}

bool minmat_additivity_test(const ModPExpansion& f, const ModPExpansion& g) {
  const MinMatrixResult mf = min_matrix(f);
  const MinMatrixResult mg = min_matrix(g);
  if (mf.is_infinity() || mg.is_infinity()) {
    throw std::invalid_argument("min-matrix additivity needs both factors nonzero mod p");
  }
  const TIndex sum = *mf.value + *mg.value;
  const ModPExpansion prod = mul(f, g);
  if (sum.trace() > prod.trace_bound()) {
    throw InsufficientBound("m_p(F) + m_p(G) = " + sum.to_string() + " beyond product bound " +
                            std::to_string(prod.trace_bound()));
  }
  const MinMatrixResult mp = min_matrix(prod);
  return mp.value && *mp.value == sum;
}

Certificate verify_x35_mod23(const igusa::GeneratorSet& gen, std::int64_t scan_bound) {
  constexpr std::int64_t p = 23;
  constexpr std::int64_t kPipelineTrace = 9;
  Certificate cert;
  cert.claim = "4 det(T) != 0 mod 23 implies a(T; X35) == 0 mod 23; equivalently Theta(X35) == 0 mod 23";
  cert.prime = p;
  cert.weight = 35;
  cert.region = "trace <= 9 (theta pipeline at weight 59); trace <= " + std::to_string(scan_bound) +
                " (direct scan)";
  cert.assumptions = {kThetaAssumption,
                      "Theta(X35) mod 23 is taken as the reduction of a cusp form of weight 59 = 35 + 23 + 1"};

  const std::int64_t have = gen.X35.trace_bound();
  if (have < std::max(kPipelineTrace, scan_bound)) {
    cert.add_check({"generator bound", Outcome::Insufficient,
                    "X35 built to trace " + std::to_string(have) + ", need " +
                        std::to_string(std::max(kPipelineTrace, scan_bound)),
                    std::nullopt});
    cert.finalize();
    return cert;
  }

  ModPExpansion x35 = [&] {
    try {
      return reduce_mod_p(gen.X35, p);
    } catch (const NotPIntegral& e) {
      throw ConstructionError(std::string("X35 not 23-integral: ") + e.what());
    }
  }();

  // (a) Theta(X35) mod 23 on trace <= 9, then the odd-weight bound at weight 59.
  const ModPExpansion theta = theta_op(x35.truncated(kPipelineTrace));
  std::optional<TIndex> theta_witness;
  for (std::size_t i = 0; i < theta.layout().size(); ++i) {
    if (!theta.at_position(i).is_zero()) {
      theta_witness = theta.layout().at(i);
      break;
    }
  }
  cert.add_check({"Theta(X35) == 0 mod 23 on trace <= 9",
                  theta_witness ? Outcome::Fail : Outcome::Pass,
                  std::to_string(theta.layout().size()) + " indices", theta_witness});

  const Certificate odd = sturm_odd(theta, theta.weight());
  for (const auto& c : odd.checks) {
    cert.add_check({"odd Sturm bound at weight " + std::to_string(theta.weight()) + ": " + c.name,
                    c.outcome, c.detail + ", region " + odd.region, c.witness});
  }
  for (const auto& a : odd.assumptions) cert.assumptions.push_back(a);

  // (b) direct scan
  std::int64_t indices = 0, unit_class = 0, zero_class = 0, nonzero = 0, violations = 0,
               converse_zero = 0;
  std::optional<TIndex> scan_witness;
  const ModPExpansion scan = x35.truncated(scan_bound);
  for (std::size_t i = 0; i < scan.layout().size(); ++i) {
    const TIndex& t = scan.layout().at(i);
    const bool residue_zero = scan.at_position(i).is_zero();
    ++indices;
    if (!residue_zero) ++nonzero;
    if (t.fourdet() % p != 0) {
      ++unit_class;
      if (!residue_zero) {
        ++violations;
        if (!scan_witness) scan_witness = t;
      }
    } else {
      ++zero_class;
      if (residue_zero) ++converse_zero;
    }
  }
  cert.add_check({"direct scan: 4det(T) != 0 mod 23 => a(T) == 0 mod 23 on trace <= " +
                      std::to_string(scan_bound),
                  scan_witness ? Outcome::Fail : Outcome::Pass,
                  std::to_string(unit_class) + " indices with 4det(T) != 0 mod 23", scan_witness});

  cert.counts = {{"scan.trace_bound", scan_bound},
                 {"scan.indices", indices},
                 {"scan.fourdet_nonzero_mod_p", unit_class},
                 {"scan.fourdet_zero_mod_p", zero_class},
                 {"scan.nonzero_residues", nonzero},
                 {"scan.violations", violations},
                 {"scan.fourdet_zero_with_zero_residue", converse_zero},
                 {"theta.indices", static_cast<std::int64_t>(theta.layout().size())}};
  cert.finalize();
  return cert;
}

Certificate verify_theta_example(const igusa::GeneratorSet& gen, std::int64_t scan_bound) {
  constexpr std::int64_t p = 5;
  const std::int64_t have = std::min(gen.X6.trace_bound(), gen.X12.trace_bound());
  if (have < scan_bound) {
    Certificate cert;
    cert.claim = "Theta(X6) == 4 X12 mod 5";
    cert.prime = p;
    cert.weight = 12;
    cert.add_check({"generator bound", Outcome::Insufficient,
                    "built to trace " + std::to_string(have) + ", need " + std::to_string(scan_bound),
                    std::nullopt});
    cert.finalize();
    return cert;
  }
  const ModPExpansion x6 = reduce_mod_p(gen.X6.truncated(scan_bound), p);
  const ModPExpansion x12 = reduce_mod_p(gen.X12.truncated(scan_bound), p);
  const ModPExpansion diff = sub(theta_op(x6), scale(ModP(4, p), x12));

  Certificate cert = sturm_even(diff, 12, {kThetaAssumption});
  cert.claim = "Theta(X6) == 4 X12 mod 5";
  std::optional<TIndex> witness;
  for (std::size_t i = 0; i < diff.layout().size(); ++i) {
    if (!diff.at_position(i).is_zero()) {
      witness = diff.layout().at(i);
      break;
    }
  }
  cert.add_check({"direct comparison on trace <= " + std::to_string(scan_bound),
                  witness ? Outcome::Fail : Outcome::Pass,
                  std::to_string(diff.layout().size()) + " indices", witness});
  cert.counts.emplace_back("scan.trace_bound", scan_bound);
  cert.finalize();
  return cert;
}

HypothesisCheck reference_expansion_check(const QExpansion& x35) {
  constexpr std::int64_t kTrace = 9;
  if (x35.trace_bound() < kTrace) {
    return {"reference expansion on trace <= 9", Outcome::Insufficient,
            "X35 built to trace " + std::to_string(x35.trace_bound()), std::nullopt};
  }
  const auto& table = igusa::x35_reference_coefficients();
  std::size_t next = 0;
  const IndexLayout& l = x35.layout();
  std::size_t compared = 0;
  for (std::size_t i = 0; i < l.size() && l.at(i).trace() <= kTrace; ++i) {
    const TIndex& t = l.at(i);
    Rational expected;
    if (next < table.size() && table[next].first == t) expected = Rational(static_cast<long>(table[next++].second));
    ++compared;
    if (!(x35.at_position(i) == expected)) {
      return {"reference expansion on trace <= 9", Outcome::Fail,
              "a" + t.to_string() + " = " + x35.at_position(i).to_string() + ", expected " +
                  expected.to_string(),
              t};
    }
  }
  return {"reference expansion on trace <= 9", Outcome::Pass,
          std::to_string(compared) + " coefficients, " + std::to_string(table.size()) + " nonzero",
          std::nullopt};
}

}  // namespace siegel::cong
