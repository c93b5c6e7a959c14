#include "siegel/expr.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace siegel::expr {

namespace {

using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr binary(Node::Kind kind, NodePtr lhs, NodePtr rhs, std::size_t at) {
    Node n;
    n.kind = kind;
    if (kind == Node::Kind::Mul) {
      n.weight = lhs->weight + rhs->weight;
    } else {
      if (lhs->weight != rhs->weight) {
        throw ParseError("weight mismatch (" + std::to_string(lhs->weight) + " vs " +
                             std::to_string(rhs->weight) + ")",
                         at);
      }
      n.weight = lhs->weight;
    }
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    return make(std::move(n));
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Node::Kind::Add, lhs, term(), at);
      } else if (accept('-')) {
        lhs = binary(Node::Kind::Sub, lhs, term(), at);
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = binary(Node::Kind::Mul, lhs, factor(), at);
    }
  }

  NodePtr factor() {
    if (accept('-')) {
      NodePtr inner = factor();
      Node n;
      n.kind = Node::Kind::Neg;
      n.weight = inner->weight;
      n.lhs = std::move(inner);
      return make(std::move(n));
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::string digits = integer_token();
    if (digits.empty()) fail("expected a non-negative integer exponent");
    if (digits.size() > 4) fail("exponent too large");
    Node n;
    n.kind = Node::Kind::Pow;
    n.exponent = static_cast<unsigned>(std::stoul(digits));
    n.weight = base->weight * static_cast<int>(n.exponent);
    n.lhs = std::move(base);
    return make(std::move(n));
  }

  std::string integer_token() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = integer_token();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const std::size_t den_at = pos_;
        const std::string den = integer_token();
        if (den.empty()) fail("expected denominator");
        if (BigInt(den) == 0) throw ParseError("zero denominator", den_at);
        text += "/" + den;
      }
      Node n;
      n.kind = Node::Kind::Literal;
      n.literal = Rational::parse(text);
      return make(std::move(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      const int w = atom_weight(name);
      if (w < 0) throw ParseError("unknown atom '" + name + "'", start);
      Node n;
      n.kind = Node::Kind::Atom;
      n.atom = name;
      n.weight = w;
      return make(std::move(n));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Add:
    case Node::Kind::Sub: return 1;
    case Node::Kind::Mul: return 2;
    case Node::Kind::Neg: return 3;
    case Node::Kind::Pow: return 4;
    case Node::Kind::Literal: return n.literal.is_integer() ? 5 : 4;
    case Node::Kind::Atom: return 5;
  }
  return 0;
}

void print(const Node& n, int min_prec, std::string& out) {
  const bool parens = precedence(n) < min_prec;
  if (parens) out += '(';
  switch (n.kind) {
    case Node::Kind::Atom: out += n.atom; break;
    case Node::Kind::Literal: out += n.literal.to_string(); break;
    case Node::Kind::Add:
    case Node::Kind::Sub:
      print(*n.lhs, 1, out);
      out += n.kind == Node::Kind::Add ? " + " : " - ";
      print(*n.rhs, 2, out);
      break;
    case Node::Kind::Mul:
      print(*n.lhs, 2, out);
      out += '*';
      print(*n.rhs, 3, out);
      break;
    case Node::Kind::Neg:
      out += '-';
      print(*n.lhs, 3, out);
      break;
    case Node::Kind::Pow:
      print(*n.lhs, 5, out);
      out += '^' + std::to_string(n.exponent);
      break;
  }
  if (parens) out += ')';
}

bool equal(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.weight != b.weight) return false;
  switch (a.kind) {
    case Node::Kind::Atom: return a.atom == b.atom;
    case Node::Kind::Literal: return a.literal == b.literal;
    case Node::Kind::Neg: return equal(*a.lhs, *b.lhs);
    case Node::Kind::Pow: return a.exponent == b.exponent && equal(*a.lhs, *b.lhs);
    default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

template <class S>
Expansion<S> evaluate(const Node& n, const std::function<Expansion<S>(const std::string&)>& atom,
                      const std::function<S(const Rational&)>& scalar, std::int64_t bound,
                      const Domain& domain) {
  auto rec = [&](const Node& c) { return evaluate<S>(c, atom, scalar, bound, domain); };
  switch (n.kind) {
    case Node::Kind::Atom: return atom(n.atom);
    case Node::Kind::Literal: return Expansion<S>::constant(scalar(n.literal), 0, bound, domain);
    case Node::Kind::Add: return add(rec(*n.lhs), rec(*n.rhs));
    case Node::Kind::Sub: return sub(rec(*n.lhs), rec(*n.rhs));
    case Node::Kind::Neg: return scale(scalar(Rational(-1)), rec(*n.lhs));
    case Node::Kind::Pow: return power(rec(*n.lhs), n.exponent);
    case Node::Kind::Mul:
      // scalar factors scale instead of convolving
      if (n.lhs->kind == Node::Kind::Literal) {
        return scale(scalar(n.lhs->literal), rec(*n.rhs)).with_weight(n.weight);
      }
      if (n.rhs->kind == Node::Kind::Literal) {
        return scale(scalar(n.rhs->literal), rec(*n.lhs)).with_weight(n.weight);
      }
      return mul(rec(*n.lhs), rec(*n.rhs));
  }
  throw std::logic_error("unreachable");
}

std::int64_t effective_bound(const igusa::GeneratorSet& gen, std::int64_t bound) {
  if (bound < 0) return gen.trace_bound;
  if (bound > gen.trace_bound) {
    throw InsufficientBound("generators built to trace " + std::to_string(gen.trace_bound) +
                            ", requested " + std::to_string(bound));
  }
  return bound;
}

}  // namespace

int atom_weight(std::string_view name) {
  static const std::pair<std::string_view, int> kAtoms[] = {
      {"X4", 4},  {"X6", 6},  {"X10", 10}, {"X12", 12}, {"X35", 35},
      {"E4", 4},  {"E6", 6},  {"E8", 8},   {"E10", 10}, {"E12", 12}};
  for (const auto& [n, w] : kAtoms) {
    if (n == name) return w;
  }
  return -1;
}

std::string FormExpr::to_string() const {
  std::string out;
  print(*root_, 0, out);
  return out;
}

bool operator==(const FormExpr& a, const FormExpr& b) { return equal(*a.root_, *b.root_); }

FormExpr parse(std::string_view src) { return FormExpr(Parser(src).parse_all()); }

QExpansion eval(const FormExpr& e, const igusa::GeneratorSet& gen, std::int64_t bound) {
  const std::int64_t n = effective_bound(gen, bound);
  return evaluate<Rational>(
      e.root(), [&](const std::string& name) { return gen.by_name(name).truncated(n); },
      [](const Rational& q) { return q; }, n, Domain{});
}

ModPExpansion eval_mod_p(const FormExpr& e, const igusa::GeneratorSet& gen, std::int64_t p,
                         std::int64_t bound) {
  const std::int64_t n = effective_bound(gen, bound);
  return evaluate<ModP>(
      e.root(),
      [&](const std::string& name) { return reduce_mod_p(gen.by_name(name).truncated(n), p); },
      [&](const Rational& q) {
        const std::int64_t den = mod_residue(q.den(), p);
        if (den == 0) throw NotPIntegral("literal " + q.to_string() + " is not p-integral");
        return ModP(mod_residue(q.num(), p), p) / ModP(den, p);
      },
      n, Domain{p});
}

}  // namespace siegel::expr
