#include "siegel/qexp.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace siegel {

namespace {

std::atomic<unsigned> g_threads{0};

void check_domain(const Domain& d) {
  if (d.prime != 0 && !is_prime(d.prime)) {
    throw std::invalid_argument("domain modulus is not prime: " + std::to_string(d.prime));
  }
}

template <class S>
void check_compatible(const Expansion<S>& f, const Expansion<S>& g) {
  if (!(f.domain() == g.domain())) {
    throw DomainMismatch("domain " + f.domain().name() + " vs " + g.domain().name());
  }
}

template <class S>
void check_same_weight(const Expansion<S>& f, const Expansion<S>& g) {
  check_compatible(f, g);
  if (f.weight() != g.weight()) {
    throw WeightMismatch("weight " + std::to_string(f.weight()) + " vs " +
                         std::to_string(g.weight()));
  }
}

// Runs body(trace) for every trace in [0, bound], spread over worker threads.
template <class Fn>
void for_each_trace(std::int64_t bound, Fn&& body) {
  const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(bound + 1));
  if (workers <= 1) {
    for (std::int64_t t = bound; t >= 0; --t) body(t);
    return;
  }
  // Largest slices first; each trace is written by exactly one worker.
  std::atomic<std::int64_t> next{bound};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t t = next--; t >= 0; t = next--) body(t);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

void set_thread_count(unsigned n) { g_threads = n; }

unsigned thread_count() {
  unsigned n = g_threads.load();
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

template <class S>
Expansion<S>::Expansion(int weight, std::int64_t bound, Domain domain)
    : weight_(weight),
      domain_(domain),
      layout_(IndexLayout::get(bound)),
      zero_((check_domain(domain), ScalarOps<S>::from_int(0, domain))) {
  if constexpr (std::is_same_v<S, Rational>) {
    if (!domain.is_rational()) throw DomainMismatch("rational expansion with domain " + domain.name());
  } else {
    if (domain.is_rational()) throw DomainMismatch("mod-p expansion needs a prime");
  }
  coeffs_.assign(layout_->size(), zero_);
}

template <class S>
Expansion<S> Expansion<S>::constant(const S& c, int weight, std::int64_t bound, Domain domain) {
  Expansion out(weight, bound, domain);
  out.coeffs_[0] = c;
  return out;
}

template <class S>
const S& Expansion<S>::coeff(const TIndex& t) const {
  if (t.trace() > trace_bound()) {
    throw InsufficientBound("index " + t.to_string() + " beyond trace bound " +
                            std::to_string(trace_bound()));
  }
  if (!t.is_semipositive()) return zero_;
  return coeffs_[layout_->position(t)];
}

template <class S>
void Expansion<S>::set(const TIndex& t, S value) {
  if (!layout_->contains(t)) {
    throw std::out_of_range("index " + t.to_string() + " not in L_2 within trace bound " +
                            std::to_string(trace_bound()));
  }
  coeffs_[layout_->position(t)] = std::move(value);
}

template <class S>
bool Expansion<S>::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const S& c) { return c.is_zero(); });
}

template <class S>
std::size_t Expansion<S>::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const S& c) { return !c.is_zero(); }));
}

template <class S>
Expansion<S> Expansion<S>::truncated(std::int64_t bound) const {
  if (bound > trace_bound()) {
    throw InsufficientBound("cannot extend bound " + std::to_string(trace_bound()) + " to " +
                            std::to_string(bound));
  }
  Expansion out(weight_, bound, domain_);
  out.modular_ = modular_;
  // the smaller layout is a prefix of this one
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

template <class S>
Expansion<S> Expansion<S>::with_weight(int weight, bool modular) const {
  Expansion out = *this;
  out.weight_ = weight;
  out.modular_ = modular;
  return out;
}

template <class S>
Expansion<S> add(const Expansion<S>& f, const Expansion<S>& g) {
  check_same_weight(f, g);
  const std::int64_t bound = std::min(f.trace_bound(), g.trace_bound());
  Expansion<S> out = f.trace_bound() == bound ? f : f.truncated(bound);
  for (std::size_t i = 0; i < out.coefficients().size(); ++i) out.at_position(i) += g.at_position(i);
  if (!g.modular()) out = out.with_weight(out.weight(), false);
  return out;
}

template <class S>
Expansion<S> sub(const Expansion<S>& f, const Expansion<S>& g) {
  check_same_weight(f, g);
  const std::int64_t bound = std::min(f.trace_bound(), g.trace_bound());
  Expansion<S> out = f.trace_bound() == bound ? f : f.truncated(bound);
  for (std::size_t i = 0; i < out.coefficients().size(); ++i) out.at_position(i) -= g.at_position(i);
  if (!g.modular()) out = out.with_weight(out.weight(), false);
  return out;
}

template <class S>
Expansion<S> scale(const S& c, const Expansion<S>& f) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (c.modulus() != f.domain().prime) throw DomainMismatch("scalar modulus differs from expansion");
  }
  Expansion<S> out = f;
  for (std::size_t i = 0; i < out.coefficients().size(); ++i) out.at_position(i) *= c;
  return out;
}

template <class S>
Expansion<S> mul(const Expansion<S>& f, const Expansion<S>& g) {
  check_compatible(f, g);
  const std::int64_t bound = std::min(f.trace_bound(), g.trace_bound());
  Expansion<S> out(f.weight() + g.weight(), bound, f.domain());
  if (!f.modular() || !g.modular()) out = out.with_weight(out.weight(), false);

  const IndexLayout& fl = f.layout();
  const IndexLayout& gl = g.layout();
  const IndexLayout& ol = out.layout();
  const S zero = ScalarOps<S>::from_int(0, f.domain());

  for_each_trace(bound, [&](std::int64_t trace) {
    for (std::size_t pos = ol.slice_begin(trace); pos < ol.slice_end(trace); ++pos) {
      const TIndex t = ol.at(pos);
      S acc = zero;
      for (std::int64_t ms = 0; ms <= t.m; ++ms) {
        for (std::int64_t ns = 0; ns <= t.n; ++ns) {
          const std::int64_t r1 = max_r(ms, ns);
          const std::int64_t r2 = max_r(t.m - ms, t.n - ns);
          const std::int64_t lo = std::max(-r1, t.r - r2);
          const std::int64_t hi = std::min(r1, t.r + r2);
          if (lo > hi) continue;
          // S = (ms, ns, rs) walks up its row while T - S walks down.
          std::size_t fp = fl.position({ms, ns, lo});
          std::size_t gp = gl.position({t.m - ms, t.n - ns, t.r - lo});
          for (std::int64_t rs = lo; rs <= hi; ++rs, ++fp, --gp) {
            const S& a = f.at_position(fp);
            if (a.is_zero()) continue;
            const S& b = g.at_position(gp);
            if (b.is_zero()) continue;
            acc.add_product(a, b);
          }
        }
      }
      out.at_position(pos) = std::move(acc);
    }
  });
  return out;
}

template <class S>
Expansion<S> power(const Expansion<S>& f, unsigned e) {
  Expansion<S> result =
      Expansion<S>::constant(ScalarOps<S>::from_int(1, f.domain()), 0, f.trace_bound(), f.domain());
  Expansion<S> base = f;
  bool first = true;
  while (e > 0) {
    if (e & 1u) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1u;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

template <class S>
Expansion<S> derivative(const Expansion<S>& f, Axis axis) {
  Expansion<S> out = f.with_weight(f.weight(), false);
  const IndexLayout& l = f.layout();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const TIndex& t = l.at(i);
    const std::int64_t factor = axis == Axis::D11 ? t.m : axis == Axis::D12 ? t.r : t.n;
    out.at_position(i) *= ScalarOps<S>::from_int(factor, f.domain());
  }
  return out;
}

template <class S>
Expansion<S> theta_op(const Expansion<S>& f) {
  const IndexLayout& l = f.layout();
  if constexpr (std::is_same_v<S, Rational>) {
    Expansion<S> out = f.with_weight(f.weight(), false);
    for (std::size_t i = 0; i < l.size(); ++i) {
      out.at_position(i) *= Rational(BigInt(l.at(i).fourdet()), BigInt(4));
    }
    return out;
  } else {
    const std::int64_t p = f.domain().prime;
    if (p == 2) throw std::invalid_argument("theta operator mod 2: 4 is not invertible");
    Expansion<S> out = f.with_weight(f.weight() + static_cast<int>(p) + 1, f.modular());
    const ModP inv4 = ModP(4, p).inverse();
    for (std::size_t i = 0; i < l.size(); ++i) {
      out.at_position(i) *= ModP(l.at(i).fourdet(), p) * inv4;
    }
    return out;
  }
}

template <class S>
std::vector<S> phi_op(const Expansion<S>& f) {
  std::vector<S> out;
  for (std::int64_t m = 0; m <= f.trace_bound(); ++m) out.push_back(f.coeff({m, 0, 0}));
  return out;
}

ModPExpansion reduce_mod_p(const QExpansion& f, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_mod_p: " + std::to_string(p) + " is not prime");
  ModPExpansion out(f.weight(), f.trace_bound(), Domain{p});
  if (!f.modular()) out = out.with_weight(f.weight(), false);
  const IndexLayout& l = f.layout();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const Rational& c = f.at_position(i);
    if (c.is_zero()) continue;
    const std::int64_t den = mod_residue(c.den(), p);
    if (den == 0) {
      throw NotPIntegral("coefficient " + c.to_string() + " at " + l.at(i).to_string() +
                         " is not " + std::to_string(p) + "-integral");
    }
    out.at_position(i) = ModP(mod_residue(c.num(), p), p) / ModP(den, p);
  }
  return out;
}

template <class S>
std::vector<SymmetryViolation> symmetry_check(const Expansion<S>& f) {
  struct Move {
    const char* name;
    bool orientation_reversing;
    TIndex (*apply)(const TIndex&);
  };
  static const Move kMoves[] = {
      {"swap", true, [](const TIndex& t) { return TIndex{t.n, t.m, t.r}; }},
      {"negate-r", true, [](const TIndex& t) { return TIndex{t.m, t.n, -t.r}; }},
      {"shear+", false, [](const TIndex& t) { return TIndex{t.m, t.m + t.n + t.r, t.r + 2 * t.m}; }},
      {"shear-", false, [](const TIndex& t) { return TIndex{t.m, t.m + t.n - t.r, t.r - 2 * t.m}; }},
  };
  const bool odd = (f.weight() % 2) != 0;
  std::vector<SymmetryViolation> out;
  const IndexLayout& l = f.layout();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const TIndex& t = l.at(i);
    for (const Move& mv : kMoves) {
      const TIndex u = mv.apply(t);
      if (!l.contains(u)) continue;
      S expected = f.coeff(u);
      if (mv.orientation_reversing && odd) expected = -expected;
      if (!(f.at_position(i) == expected)) out.push_back({t, u, mv.name});
    }
  }
  return out;
}

template <class S>
std::string serialize(const Expansion<S>& f) {
  std::ostringstream os;
  os << "qexp weight=" << f.weight() << " bound=" << f.trace_bound()
     << " domain=" << f.domain().name();
  if (!f.modular()) os << " intermediate";
  os << '\n';
  const IndexLayout& l = f.layout();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const S& c = f.at_position(i);
    if (c.is_zero()) continue;
    const TIndex& t = l.at(i);
    os << t.m << ' ' << t.n << ' ' << t.r << ' ';
    if constexpr (std::is_same_v<S, Rational>) {
      os << c.num().get_str() << ' ' << c.den().get_str();
    } else {
      os << c.residue();
    }
    os << '\n';
  }
  return os.str();
}

namespace {

struct Header {
  int weight = 0;
  std::int64_t bound = 0;
  Domain domain;
  bool modular = true;
};

[[noreturn]] void bad_format(std::size_t line, const std::string& why) {
  throw ParseError("expansion format: " + why + " (line " + std::to_string(line) + ")", line);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool canonical_int(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  if (s[i] == '0' && s.size() > i + 1) return false;
  if (s == "-0") return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::int64_t to_i64(const std::string& s, std::size_t line) {
  if (!canonical_int(s) || s.size() > 18) bad_format(line, "bad integer '" + s + "'");
  return std::stoll(s);
}

Header parse_header(const std::string& first) {
  const auto words = split_ws(first);
  if (words.size() < 4 || words.size() > 5 || words[0] != "qexp") bad_format(1, "bad header");
  auto value = [&](const std::string& w, const std::string& key) {
    if (w.rfind(key + "=", 0) != 0) bad_format(1, "expected " + key);
    return w.substr(key.size() + 1);
  };
  Header h;
  h.weight = static_cast<int>(to_i64(value(words[1], "weight"), 1));
  h.bound = to_i64(value(words[2], "bound"), 1);
  if (h.bound < 0) bad_format(1, "negative bound");
  const std::string dom = value(words[3], "domain");
  if (dom == "Q") {
    h.domain = Domain{0};
  } else if (dom.size() > 1 && dom[0] == 'F') {
    h.domain = Domain{to_i64(dom.substr(1), 1)};
    if (!is_prime(h.domain.prime)) bad_format(1, "domain modulus not prime");
  } else {
    bad_format(1, "unknown domain '" + dom + "'");
  }
  if (words.size() == 5) {
    if (words[4] != "intermediate") bad_format(1, "unexpected token '" + words[4] + "'");
    h.modular = false;
  }
  return h;
}

template <class S>
Expansion<S> parse_body(const Header& h, std::istringstream& is) {
  Expansion<S> out(h.weight, h.bound, h.domain);
  if (!h.modular) out = out.with_weight(h.weight, false);
  std::optional<TIndex> prev;
  std::size_t line_no = 1;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    const auto w = split_ws(line);
    const std::size_t expected = std::is_same_v<S, Rational> ? 5 : 4;
    if (w.size() != expected) bad_format(line_no, "expected " + std::to_string(expected) + " fields");
    const TIndex t{to_i64(w[0], line_no), to_i64(w[1], line_no), to_i64(w[2], line_no)};
    if (!out.layout().contains(t)) bad_format(line_no, "index " + t.to_string() + " outside L_2 or bound");
    if (prev && order_cmp(*prev, t) >= 0) bad_format(line_no, "entries not strictly increasing");
    prev = t;
    if constexpr (std::is_same_v<S, Rational>) {
      if (!canonical_int(w[3]) || !canonical_int(w[4])) bad_format(line_no, "bad fraction");
      const BigInt num(w[3]), den(w[4]);
      if (num == 0 || den <= 0) bad_format(line_no, "zero numerator or non-positive denominator");
      BigInt g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) bad_format(line_no, "fraction not reduced");
      out.set(t, Rational(num, den));
    } else {
      const std::int64_t v = to_i64(w[3], line_no);
      if (v <= 0 || v >= h.domain.prime) bad_format(line_no, "residue out of range");
      out.set(t, ModP(v, h.domain.prime));
    }
  }
  return out;
}

}  // namespace

AnyExpansion parse_expansion(const std::string& text) {
  std::istringstream is(text);
  std::string first;
  if (!std::getline(is, first)) bad_format(1, "empty input");
  const Header h = parse_header(first);
  if (h.domain.is_rational()) return parse_body<Rational>(h, is);
  return parse_body<ModP>(h, is);
}

QExpansion parse_q_expansion(const std::string& text) {
  auto any = parse_expansion(text);
  if (auto* q = std::get_if<QExpansion>(&any)) return std::move(*q);
  throw DomainMismatch("expected a rational expansion");
}

#define SIEGEL_INSTANTIATE(S)                                                          \
  template class Expansion<S>;                                                         \
  template Expansion<S> add(const Expansion<S>&, const Expansion<S>&);                 \
  template Expansion<S> sub(const Expansion<S>&, const Expansion<S>&);                 \
  template Expansion<S> scale(const S&, const Expansion<S>&);                          \
  template Expansion<S> mul(const Expansion<S>&, const Expansion<S>&);                 \
  template Expansion<S> power(const Expansion<S>&, unsigned);                          \
  template Expansion<S> derivative(const Expansion<S>&, Axis);                         \
  template Expansion<S> theta_op(const Expansion<S>&);                                 \
  template std::vector<S> phi_op(const Expansion<S>&);                                 \
  template std::vector<SymmetryViolation> symmetry_check(const Expansion<S>&);         \
  template std::string serialize(const Expansion<S>&);

SIEGEL_INSTANTIATE(Rational)
SIEGEL_INSTANTIATE(ModP)

#undef SIEGEL_INSTANTIATE

}  // namespace siegel
