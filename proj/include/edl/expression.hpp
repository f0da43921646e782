#pragma once

#include "edl/numeric.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace edl {

// Arithmetic expressions in the catalog parameters (n, p, q and the period
// index i): integers, + - * / ^, parentheses, sqrt(), pi.  Exact rational
// evaluation refuses sqrt/pi; numeric evaluation allows them.
class Expr {
 public:
  Expr() = default;
  static Expr parse(std::string_view text);

  bool empty() const { return root_ == nullptr; }
  const std::string& text() const { return text_; }

  Rat eval_exact(const std::map<char, Int>& vars) const;
  Int eval_int(const std::map<char, Int>& vars) const;  // must come out integral
  double eval_numeric(const std::map<char, Int>& vars) const;
  // true if every variable used is bound
  bool evaluable(const std::map<char, Int>& vars) const;

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// Conjunction of comparisons "lhs OP rhs" with OP in {=, <, >, <=, >=} plus
// even(e)/odd(e), separated by '&'.  Empty text is always true.
class Condition {
 public:
  Condition() = default;
  static Condition parse(std::string_view text);
  bool eval(const std::map<char, Int>& vars) const;
  const std::string& text() const { return text_; }

 private:
  struct Clause {
    enum Kind { cmp, even, odd } kind = cmp;
    Expr lhs, rhs;
    std::string op;
  };
  std::vector<Clause> clauses_;
  std::string text_;
};

}  // namespace edl
