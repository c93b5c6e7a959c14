#pragma once

// Homogeneous polynomial expressions in X4, X6, X10, X12, X35 and
// E4, E6, E8, E10, E12, e.g. "X4^3 - X6^2" or "2*(X10*X12)".
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | atom | '(' expr ')'
//
// Weights are inferred while parsing; a sum of different weights is a
// ParseError, so every FormExpr is homogeneous.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "siegel/igusa.hpp"
#include "siegel/qexp.hpp"

namespace siegel::expr {

struct Node {
  enum class Kind { Atom, Literal, Add, Sub, Mul, Neg, Pow };

  Kind kind = Kind::Literal;
  int weight = 0;
  std::string atom;     // Atom
  Rational literal;     // Literal
  unsigned exponent = 0;  // Pow
  std::shared_ptr<const Node> lhs, rhs;  // rhs unused for Neg and Pow
};

class FormExpr {
 public:
  explicit FormExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }
  int weight() const { return root_->weight; }
  // Canonical text; parse(e.to_string()) == e.
  std::string to_string() const;

  friend bool operator==(const FormExpr& a, const FormExpr& b);

 private:
  std::shared_ptr<const Node> root_;
};

// Weight of a named atom, -1 for unknown names.
int atom_weight(std::string_view name);

FormExpr parse(std::string_view src);

// Evaluates at min(bound, gen.trace_bound); bound < 0 means the full bound.
QExpansion eval(const FormExpr& e, const igusa::GeneratorSet& gen, std::int64_t bound = -1);
ModPExpansion eval_mod_p(const FormExpr& e, const igusa::GeneratorSet& gen, std::int64_t p,
                         std::int64_t bound = -1);

}  // namespace siegel::expr
