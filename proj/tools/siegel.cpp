// siegel: build, query and certify degree-2 Siegel modular form expansions.
//
// Exit status: 0 success / certified, 1 refuted (a witness is printed),
// 2 usage error, parse error or insufficient trace bound, 3 other failures.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "siegel/cache.hpp"
#include "siegel/congruence.hpp"
#include "siegel/expr.hpp"
#include "siegel/igusa.hpp"

namespace fs = std::filesystem;
using namespace siegel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

const char* const kExprHelp =
    "Expressions are homogeneous polynomials in X4 X6 X10 X12 X35 E4 E6 E8 E10 E12 with\n"
    "integer or rational literals, + - * ^ and parentheses, e.g. \"X4^3 - X6^2\".";

struct Config {
  std::int64_t trace_bound = 12;
  std::int64_t prime = 23;
  bool prime_given = false;
  std::string cache_dir;
  std::string format = "table";
  unsigned threads = 0;
};

fs::path default_cache_dir() {
  if (const char* env = std::getenv("SIEGEL_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return fs::path(xdg) / "siegel";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "siegel";
  }
  return ".siegel-cache";
}

ExpansionCache open_cache(const Config& cfg) {
  return ExpansionCache(cfg.cache_dir.empty() ? default_cache_dir() : fs::path(cfg.cache_dir),
                        igusa::kFormulaVersion);
}

int exit_for(cong::Verdict v) {
  switch (v) {
    case cong::Verdict::Certified: return kExitOk;
    case cong::Verdict::Refuted: return kExitRefuted;
    case cong::Verdict::Insufficient: return kExitUsage;
  }
  return kExitFailure;
}

TIndex parse_index(const std::string& text) {
  std::string s = text;
  for (char& c : s) {
    if (c == ',' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream is(s);
  TIndex t;
  if (!(is >> t.m >> t.n >> t.r) || !(is >> std::ws).eof()) {
    throw CLI::ValidationError("--index", "expected m,n,r but got '" + text + "'");
  }
  return t;
}

template <class S>
void print_table(const Expansion<S>& f, std::ostream& os) {
  os << "# weight " << f.weight() << ", trace <= " << f.trace_bound() << ", domain "
     << f.domain().name() << '\n';
  os << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(5) << "r" << "  a(T)\n";
  const IndexLayout& l = f.layout();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (f.at_position(i).is_zero()) continue;
    const TIndex& t = l.at(i);
    os << std::setw(4) << t.m << std::setw(4) << t.n << std::setw(5) << t.r << "  "
       << f.at_position(i) << '\n';
  }
}

template <class S>
void emit(const Expansion<S>& f, const Config& cfg) {
  if (cfg.format == "lines") {
    std::cout << serialize(f);
  } else {
    print_table(f, std::cout);
  }
}

int cmd_build(const Config& cfg) {
  ExpansionCache cache = open_cache(cfg);
  std::vector<std::pair<std::string, bool>> status;
  for (const auto& name : igusa::GeneratorSet::names()) {
    status.emplace_back(name, fs::exists(cache.path_for(name, cfg.trace_bound)));
  }
  const igusa::GeneratorSet gen = igusa::build_generators(cfg.trace_bound, &cache);
  for (const auto& [name, existed] : status) {
    std::cout << std::left << std::setw(4) << name << ' ' << (existed ? "cached" : "built ") << ' '
              << std::right << std::setw(6) << gen.by_name(name).support_size() << " terms  "
              << cache.path_for(name, cfg.trace_bound).string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Config& cfg, bool theta_example) {
  ExpansionCache cache = open_cache(cfg);
  const std::int64_t prime = cfg.prime_given ? cfg.prime : (theta_example ? 5 : 23);
  if (theta_example && prime != 5) {
    std::cerr << "--theta-example checks Theta(X6) == 4 X12 mod 5; use --prime 5\n";
    return kExitUsage;
  }
  if (!theta_example && prime != 23) {
    std::cerr << "verify certifies the mod-23 congruence of X35; --prime must be 23 "
                 "(or pass --theta-example with --prime 5)\n";
    return kExitUsage;
  }
  const igusa::GeneratorSet gen = igusa::build_generators(cfg.trace_bound, &cache);
  cong::Certificate cert;
  if (theta_example) {
    cert = cong::verify_theta_example(gen, cfg.trace_bound);
  } else {
    cert = cong::verify_x35_mod23(gen, cfg.trace_bound);
    cert.add_check(cong::reference_expansion_check(gen.X35));
    cert.finalize();
  }
  std::cout << cert.serialize();
  return exit_for(cert.verdict);
}

int cmd_query(const Config& cfg, const std::string& sub, const std::string& source,
              const std::string& index_text, int weight_override) {
  const expr::FormExpr e = expr::parse(source);
  ExpansionCache cache = open_cache(cfg);
  const igusa::GeneratorSet gen = igusa::build_generators(cfg.trace_bound, &cache);

  if (sub == "coeff") {
    if (index_text.empty()) throw CLI::RequiredError("--index");
    const TIndex t = parse_index(index_text);
    if (cfg.prime_given) {
      std::cout << eval_mod_p(e, gen, cfg.prime, t.trace()).coeff(t) << '\n';
    } else {
      std::cout << eval(e, gen, t.trace()).coeff(t) << '\n';
    }
    return kExitOk;
  }
  if (sub == "dump") {
    if (cfg.prime_given) {
      emit(eval_mod_p(e, gen, cfg.prime), cfg);
    } else {
      emit(eval(e, gen), cfg);
    }
    return kExitOk;
  }
  if (sub == "theta") {
    if (cfg.prime_given) {
      emit(theta_op(eval_mod_p(e, gen, cfg.prime)), cfg);
    } else {
      emit(theta_op(eval(e, gen)), cfg);
    }
    return kExitOk;
  }
  const ModPExpansion f = eval_mod_p(e, gen, cfg.prime);
  if (sub == "minmat") {
    std::cout << cong::min_matrix(f).to_string() << '\n';
    return kExitOk;
  }
  // sturm
  const int k = weight_override != 0 ? weight_override : e.weight();
  const cong::Certificate cert = (k % 2 == 0) ? cong::sturm_even(f, k) : cong::sturm_odd(f, k);
  std::cout << cert.serialize();
  return exit_for(cert.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier expansions of degree-2 Siegel modular forms (Igusa generators)"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("-N,--trace-bound", cfg.trace_bound, "Trace bound of all expansions")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{40}));
  auto* prime_opt = app.add_option("-p,--prime", cfg.prime, "Prime for reductions")
                        ->capture_default_str()
                        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 31));
  app.add_option("--cache-dir", cfg.cache_dir,
                 "Cache directory (default: $SIEGEL_CACHE_DIR, else ~/.cache/siegel)");
  app.add_option("--format", cfg.format, "Output format for expansions")
      ->check(CLI::IsMember({"table", "lines"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* build = app.add_subcommand("build", "Build and cache E4..E12 and X4, X6, X10, X12, X35");

  bool theta_example = false;
  auto* verify = app.add_subcommand("verify", "Certify Theta(X35) == 0 mod 23 and check the reference expansion");
  verify->add_flag("--theta-example", theta_example, "Certify Theta(X6) == 4 X12 mod 5 instead");

  auto* query = app.add_subcommand("query", std::string("Evaluate an expression.\n") + kExprHelp);
  std::string sub, source, index_text;
  int weight_override = 0;
  query->add_option("what", sub, "coeff | minmat | theta | sturm | dump")
      ->required()
      ->check(CLI::IsMember({"coeff", "minmat", "theta", "sturm", "dump"}));
  query->add_option("expr", source, "Expression, e.g. \"X4^2 - E8\"")->required();
  query->add_option("-T,--index", index_text, "Index m,n,r for coeff");
  query->add_option("--weight", weight_override, "Weight for sturm (default: inferred)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.prime_given = prime_opt->count() > 0;
  set_thread_count(cfg.threads);

  try {
    if (*build) {
      if (cfg.trace_bound < 5) {
        std::cerr << "X35 is normalized at (2,3,-1) of trace 5; --trace-bound must be >= 5\n";
        return kExitUsage;
      }
      return cmd_build(cfg);
    }
    if (*verify) return cmd_verify(cfg, theta_example);
    return cmd_query(cfg, sub, source, index_text, weight_override);
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InsufficientBound& e) {
    std::cerr << "insufficient trace bound: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
