#include "edl/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstring>

namespace edl {

struct Expr::Node {
  enum Kind { number, variable, add, sub, mul, div, pow, neg, sqrt_fn, pi_const } kind;
  Rat value;
  char var = 0;
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("expression parse error at '" + std::string(s.substr(pos)) +
                                "': " + what);
  }

  NodePtr make(Node n) { return std::make_shared<Node>(std::move(n)); }

  // recursive parses are hoisted into locals before the node is built, so an
  // exception cannot fire mid-aggregate
  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      Node::Kind op;
      if (eat('+')) op = Node::add;
      else if (eat('-')) op = Node::sub;
      else return lhs;
      NodePtr rhs = parse_term();
      lhs = make({op, 0, 0, std::move(lhs), std::move(rhs)});
    }
  }
  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      Node::Kind op;
      if (eat('*')) op = Node::mul;
      else if (eat('/')) op = Node::div;
      else return lhs;
      NodePtr rhs = parse_factor();
      lhs = make({op, 0, 0, std::move(lhs), std::move(rhs)});
    }
  }
  NodePtr parse_factor() {
    NodePtr base = parse_unary();
    if (!eat('^')) return base;
    NodePtr exponent = parse_factor();
    return make({Node::pow, 0, 0, std::move(base), std::move(exponent)});
  }
  NodePtr parse_unary() {
    if (eat('-')) {
      NodePtr arg = parse_unary();
      return make({Node::neg, 0, 0, std::move(arg), nullptr});
    }
    return parse_atom();
  }
  NodePtr parse_atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return make({Node::number, Rat(Int(std::string(s.substr(start, pos - start)))), 0,
                   nullptr, nullptr});
    }
    if (s.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      NodePtr arg = parse_expr();
      if (!eat(')')) fail("missing ')' after sqrt");
      return make({Node::sqrt_fn, 0, 0, std::move(arg), nullptr});
    }
    if (s.compare(pos, 2, "pi") == 0 &&
        (pos + 2 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 2])))) {
      pos += 2;
      return make({Node::pi_const, 0, 0, nullptr, nullptr});
    }
    if (c == 'n' || c == 'p' || c == 'q' || c == 'i') {
      ++pos;
      return make({Node::variable, 0, c, nullptr, nullptr});
    }
    if (eat('(')) {
      NodePtr e = parse_expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    fail("unexpected character");
  }
};

Rat eval_rat(const Node& n, const std::map<char, Int>& vars) {
  switch (n.kind) {
    case Node::number: return n.value;
    case Node::variable: {
      auto it = vars.find(n.var);
      if (it == vars.end())
        throw std::domain_error(std::string("unbound parameter '") + n.var + "'");
      return Rat(it->second);
    }
    case Node::add: return eval_rat(*n.a, vars) + eval_rat(*n.b, vars);
    case Node::sub: return eval_rat(*n.a, vars) - eval_rat(*n.b, vars);
    case Node::mul: return eval_rat(*n.a, vars) * eval_rat(*n.b, vars);
    case Node::div: {
      Rat d = eval_rat(*n.b, vars);
      if (d == 0) throw std::domain_error("division by zero in catalog expression");
      return eval_rat(*n.a, vars) / d;
    }
    case Node::pow: {
      Rat base = eval_rat(*n.a, vars);
      Int e = to_integer(eval_rat(*n.b, vars));
      if (e < 0) throw std::domain_error("negative exponent in exact expression");
      Rat r = 1;
      for (Int i = 0; i < e; ++i) r *= base;
      return r;
    }
    case Node::neg: return -eval_rat(*n.a, vars);
    case Node::sqrt_fn:
    case Node::pi_const:
      throw std::domain_error("sqrt/pi are not exact; use numeric evaluation");
  }
  throw std::logic_error("bad expression node");
}

double eval_num(const Node& n, const std::map<char, Int>& vars) {
  switch (n.kind) {
    case Node::sqrt_fn: return std::sqrt(eval_num(*n.a, vars));
    case Node::pi_const: return std::acos(-1.0);
    case Node::add: return eval_num(*n.a, vars) + eval_num(*n.b, vars);
    case Node::sub: return eval_num(*n.a, vars) - eval_num(*n.b, vars);
    case Node::mul: return eval_num(*n.a, vars) * eval_num(*n.b, vars);
    case Node::div: return eval_num(*n.a, vars) / eval_num(*n.b, vars);
    case Node::pow: return std::pow(eval_num(*n.a, vars), eval_num(*n.b, vars));
    case Node::neg: return -eval_num(*n.a, vars);
    default: return to_double(eval_rat(n, vars));
  }
}

bool vars_bound(const Node& n, const std::map<char, Int>& vars) {
  switch (n.kind) {
    case Node::variable: return vars.count(n.var) > 0;
    case Node::number:
    case Node::pi_const: return true;
    case Node::neg:
    case Node::sqrt_fn: return vars_bound(*n.a, vars);
    default: return (!n.a || vars_bound(*n.a, vars)) && (!n.b || vars_bound(*n.b, vars));
  }
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Parser p{text};
  Expr e;
  e.root_ = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  e.text_ = std::string(text);
  return e;
}

Rat Expr::eval_exact(const std::map<char, Int>& vars) const {
  if (!root_) throw std::logic_error("empty expression");
  return eval_rat(*root_, vars);
}

Int Expr::eval_int(const std::map<char, Int>& vars) const {
  return to_integer(eval_exact(vars));
}

double Expr::eval_numeric(const std::map<char, Int>& vars) const {
  if (!root_) throw std::logic_error("empty expression");
  return eval_num(*root_, vars);
}

bool Expr::evaluable(const std::map<char, Int>& vars) const {
  return root_ && vars_bound(*root_, vars);
}

Condition Condition::parse(std::string_view text) {
  Condition c;
  c.text_ = std::string(text);
  size_t start = 0;
  while (start <= text.size()) {
    size_t amp = text.find('&', start);
    std::string_view part = text.substr(start, amp == std::string_view::npos ? amp : amp - start);
    // trim
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (!part.empty()) {
      Clause cl;
      if (part.substr(0, 5) == "even(" || part.substr(0, 4) == "odd(") {
        bool is_even = part[0] == 'e';
        size_t open = part.find('(');
        if (part.back() != ')') throw std::invalid_argument("condition: missing ')'");
        cl.kind = is_even ? Clause::even : Clause::odd;
        cl.lhs = Expr::parse(part.substr(open + 1, part.size() - open - 2));
      } else {
        size_t op_pos = std::string_view::npos;
        std::string op;
        for (const char* cand : {"<=", ">=", "==", "<", ">", "="}) {
          size_t p = part.find(cand);
          if (p != std::string_view::npos) { op_pos = p; op = cand; break; }
        }
        if (op_pos == std::string_view::npos)
          throw std::invalid_argument("condition: no comparison in '" + std::string(part) + "'");
        cl.kind = Clause::cmp;
        cl.op = op == "==" ? "=" : op;
        cl.lhs = Expr::parse(part.substr(0, op_pos));
        cl.rhs = Expr::parse(part.substr(op_pos + op.size()));
      }
      c.clauses_.push_back(std::move(cl));
    }
    if (amp == std::string_view::npos) break;
    start = amp + 1;
  }
  return c;
}

bool Condition::eval(const std::map<char, Int>& vars) const {
  for (const auto& cl : clauses_) {
    if (cl.kind == Clause::even || cl.kind == Clause::odd) {
      Int v = cl.lhs.eval_int(vars);
      bool even = (v % 2) == 0;
      if ((cl.kind == Clause::even) != even) return false;
      continue;
    }
    Rat l = cl.lhs.eval_exact(vars), r = cl.rhs.eval_exact(vars);
    bool ok = cl.op == "=" ? l == r
            : cl.op == "<" ? l < r
            : cl.op == ">" ? l > r
            : cl.op == "<=" ? l <= r
            : l >= r;
    if (!ok) return false;
  }
  return true;
}

}  // namespace edl
