#include "siegel/igusa.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "siegel/cache.hpp"
#include "siegel/numtheory.hpp"

namespace siegel::igusa {

namespace {

void check_eisenstein_weight(int k) {
  if (std::find(std::begin(kEisensteinWeights), std::end(kEisensteinWeights), k) ==
      std::end(kEisensteinWeights)) {
    throw std::invalid_argument("Siegel-Eisenstein weight " + std::to_string(k) +
                                " not in {4,6,8,10,12}");
  }
}

// Solves A x = b exactly; throws ConstructionError when A is singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw ConstructionError("singular normalization system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// sum_j c_j F_j, all F_j of the same weight
QExpansion combine(const std::vector<Rational>& c, const std::vector<const QExpansion*>& f) {
  QExpansion out = scale(c[0], *f[0]);
  for (std::size_t j = 1; j < f.size(); ++j) out = add(out, scale(c[j], *f[j]));
  return out;
}

// Cusp form in span(basis) with prescribed values at the given indices.
QExpansion project(const std::vector<const QExpansion*>& basis, const std::vector<TIndex>& at,
                   const std::vector<Rational>& values) {
  std::vector<std::vector<Rational>> a(at.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < at.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) a[i][j] = basis[j]->coeff(at[i]);
  }
  return combine(solve(std::move(a), values), basis);
}

void require_cusp(const std::string& name, const QExpansion& f) {
  for (const Rational& c : phi_op(f)) {
    if (!c.is_zero()) throw ConstructionError(name + " is not cuspidal: nonzero Phi image");
  }
}

const QExpansion& need(const std::map<int, QExpansion>& series, int k) {
  auto it = series.find(k);
  if (it == series.end()) throw std::invalid_argument("missing E" + std::to_string(k));
  return it->second;
}

}  // namespace

std::vector<Rational> genus1_eisenstein(int k, std::int64_t bound) {
  if (k < 4 || k % 2 != 0) {
    throw std::invalid_argument("genus-1 Eisenstein weight must be even and >= 4, got " +
                                std::to_string(k));
  }
  const Rational factor = Rational(-2 * k) / nt::bernoulli(k);
  std::vector<Rational> out{Rational(1)};
  for (std::int64_t n = 1; n <= bound; ++n) {
    out.push_back(factor * Rational(nt::divisor_sigma(static_cast<unsigned>(k - 1), n)));
  }
  return out;
}

QExpansion siegel_eisenstein(int k, std::int64_t bound) {
  check_eisenstein_weight(k);
  const Rational zeta_1mk = -nt::bernoulli(k) / Rational(k);
  const Rational zeta_3m2k = -nt::bernoulli(2 * k - 2) / Rational(2 * k - 2);
  const Rational factor = Rational(2) / (zeta_1mk * zeta_3m2k);
  const nt::CohenHTable h(k - 1);

  QExpansion out = QExpansion::constant(Rational(1), k, bound);
  const IndexLayout& layout = out.layout();
  for (std::size_t pos = 1; pos < layout.size(); ++pos) {
    const TIndex& t = layout.at(pos);
    const std::int64_t content = t.content();
    const std::int64_t fourdet = t.fourdet();
    Rational sum;
    for (std::int64_t d : nt::divisors(content)) {
      sum.add_product(pow(Rational(d), static_cast<unsigned long>(k - 1)), h(fourdet / (d * d)));
    }
    out.at_position(pos) = factor * sum;
  }
  return out;
}

void validate_eisenstein(const std::map<int, QExpansion>& series) {
  for (const auto& [k, e] : series) {
    if (phi_op(e) != genus1_eisenstein(k, e.trace_bound())) {
      throw ConstructionError("Phi(E" + std::to_string(k) + ") differs from the genus-1 series");
    }
    if (!symmetry_check(e).empty()) {
      throw ConstructionError("E" + std::to_string(k) + " fails GL2(Z) invariance");
    }
  }
  auto e4 = series.find(4);
  auto e8 = series.find(8);
  if (e4 != series.end() && e8 != series.end()) {
    const QExpansion sq = mul(e4->second, e4->second);
    if (sq != e8->second.truncated(sq.trace_bound())) {
      throw ConstructionError("E4^2 != E8");
    }
  }
}

std::pair<QExpansion, QExpansion> build_X4_X6(std::int64_t bound) {
  return {siegel_eisenstein(4, bound), siegel_eisenstein(6, bound)};
}

std::pair<QExpansion, QExpansion> build_X10_X12(const std::map<int, QExpansion>& series) {
  const QExpansion& e4 = need(series, 4);
  const QExpansion& e6 = need(series, 6);
  const QExpansion& e10 = need(series, 10);
  const QExpansion& e12 = need(series, 12);
  if (e4.trace_bound() < 2) throw InsufficientBound("X10/X12 need trace bound >= 2");

  const TIndex zero{0, 0, 0}, rank1{1, 0, 0}, unit{1, 1, 1};
  const QExpansion e4e6 = mul(e4, e6);
  QExpansion x10 = project({&e4e6, &e10}, {zero, unit}, {Rational(0), Rational(1)});

  const QExpansion e4_cubed = power(e4, 3);
  const QExpansion e6_squared = mul(e6, e6);
  QExpansion x12 = project({&e4_cubed, &e6_squared, &e12}, {zero, rank1, unit},
                           {Rational(0), Rational(0), Rational(1)});

  require_cusp("X10", x10);
  require_cusp("X12", x12);
  return {std::move(x10), std::move(x12)};
}

std::pair<QExpansion, QExpansion> build_X10_X12(std::int64_t bound) {
  std::map<int, QExpansion> series;
  for (int k : {4, 6, 10, 12}) series.emplace(k, siegel_eisenstein(k, bound));
  return build_X10_X12(series);
}

QExpansion build_X35(const QExpansion& x4, const QExpansion& x6, const QExpansion& x10,
                     const QExpansion& x12) {
  const TIndex anchor{2, 3, -1};
  const std::int64_t bound =
      std::min({x4.trace_bound(), x6.trace_bound(), x10.trace_bound(), x12.trace_bound()});
  if (bound < anchor.trace()) {
    throw InsufficientBound("X35 needs trace bound >= 5 (normalization at (2,3,-1)), got " +
                            std::to_string(bound));
  }
  const QExpansion* cols[4] = {&x4, &x6, &x10, &x12};
  const int weights[4] = {4, 6, 10, 12};

  std::vector<QExpansion> d11, d12, d22;
  for (const QExpansion* c : cols) {
    d11.push_back(derivative(*c, Axis::D11));
    d12.push_back(derivative(*c, Axis::D12));
    d22.push_back(derivative(*c, Axis::D22));
  }

  // Laplace expansion along the first row, reusing 2x2 minors of the last two rows.
  auto minor2 = [&](int a, int b) { return sub(mul(d12[a], d22[b]), mul(d12[b], d22[a])); };
  std::optional<QExpansion> m2[4][4];
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) m2[a][b] = minor2(a, b);
  }
  auto minor3 = [&](int skip) {
    int c[3], i = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != skip) c[i++] = j;
    }
    QExpansion acc = mul(d11[c[0]], *m2[c[1]][c[2]]);
    acc = sub(acc, mul(d11[c[1]], *m2[c[0]][c[2]]));
    return add(acc, mul(d11[c[2]], *m2[c[0]][c[1]]));
  };
  QExpansion w = scale(Rational(weights[0]), mul(*cols[0], minor3(0)));
  for (int j = 1; j < 4; ++j) {
    QExpansion term = scale(Rational(weights[j]), mul(*cols[j], minor3(j)));
    w = (j % 2 == 0) ? add(w, term) : sub(w, term);
  }

  const Rational lead = w.coeff(anchor);
  if (lead.is_zero()) throw ConstructionError("Wronskian vanishes at (2,3,-1)");
  return scale(Rational(1) / lead, w).with_weight(35, true);
}

const QExpansion& GeneratorSet::by_name(const std::string& name) const {
  if (name == "X4") return X4;
  if (name == "X6") return X6;
  if (name == "X10") return X10;
  if (name == "X12") return X12;
  if (name == "X35") return X35;
  if (name.size() > 1 && name[0] == 'E') {
    try {
      auto it = eisenstein.find(std::stoi(name.substr(1)));
      if (it != eisenstein.end()) return it->second;
    } catch (const std::exception&) {
    }
  }
  throw std::out_of_range("unknown form '" + name + "'");
}

std::vector<std::string> GeneratorSet::names() {
  return {"X4", "X6", "X10", "X12", "X35", "E4", "E6", "E8", "E10", "E12"};
}

GeneratorSet build_generators(std::int64_t bound, ExpansionCache* cache) {
  if (bound < 5) {
    throw InsufficientBound("generator build needs trace bound >= 5 (X35 is normalized at (2,3,-1)), got " +
                            std::to_string(bound));
  }
  auto cached = [&](const std::string& name, auto&& compute) -> QExpansion {
    if (cache != nullptr) {
      if (auto hit = cache->load(name, bound)) return std::move(*hit);
    }
    QExpansion f = compute();
    if (cache != nullptr) cache->store(name, f);
    return f;
  };

  GeneratorSet gen{bound, QExpansion(0, 0), QExpansion(0, 0), QExpansion(0, 0), QExpansion(0, 0),
                   QExpansion(0, 0), {}};
  bool fresh_series = false;
  for (int k : kEisensteinWeights) {
    gen.eisenstein.emplace(k, cached("E" + std::to_string(k), [&] {
      fresh_series = true;
      return siegel_eisenstein(k, bound);
    }));
  }
  if (fresh_series) validate_eisenstein(gen.eisenstein);

  gen.X4 = cached("X4", [&] { return gen.eisenstein.at(4); });
  gen.X6 = cached("X6", [&] { return gen.eisenstein.at(6); });
  std::optional<std::pair<QExpansion, QExpansion>> cusp;
  auto cusp_forms = [&]() -> std::pair<QExpansion, QExpansion>& {
    if (!cusp) cusp = build_X10_X12(gen.eisenstein);
    return *cusp;
  };
  gen.X10 = cached("X10", [&] { return cusp_forms().first; });
  gen.X12 = cached("X12", [&] { return cusp_forms().second; });
  gen.X35 = cached("X35", [&] { return build_X35(gen.X4, gen.X6, gen.X10, gen.X12); });
  return gen;
}

std::vector<IntegralityViolation> integrality_check(const std::string& name, const QExpansion& f) {
  std::vector<IntegralityViolation> out;
  const IndexLayout& l = f.layout();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!f.at_position(i).is_integer()) out.push_back({name, l.at(i), f.at_position(i)});
  }
  return out;
}

std::vector<IntegralityViolation> integrality_check(const GeneratorSet& gen) {
  std::vector<IntegralityViolation> out;
  for (const char* name : {"X4", "X6", "X10", "X12", "X35"}) {
    auto v = integrality_check(name, gen.by_name(name));
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace siegel::igusa
