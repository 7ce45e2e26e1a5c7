// SPDX-License-Identifier: Apache-2.0
#include "drinmod/io.hpp"

#include <cctype>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

namespace drinmod {
namespace {

using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// Tokenizer / AST

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  i64 ival = 0;
  std::string name;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      i64 v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > (i64(1) << 50)) throw ParseError("integer literal too large");
        ++i;
      }
      out.push_back({Token::Int, v, {}});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      out.push_back({Token::Ident, 0, std::string(1, c)});
      ++i;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Plus, 0, {}}); break;
      case '-': out.push_back({Token::Minus, 0, {}}); break;
      case '*': out.push_back({Token::Star, 0, {}}); break;
      case '^': out.push_back({Token::Caret, 0, {}}); break;
      case '(': out.push_back({Token::LParen, 0, {}}); break;
      case ')': out.push_back({Token::RParen, 0, {}}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c +
                         "' in polynomial string");
    }
    ++i;
  }
  out.push_back({Token::End, 0, {}});
  return out;
}

struct Node {
  enum Kind { Int, Var, Add, Sub, Neg, Mul, Pow } kind;
  i64 ival = 0;
  std::string name;
  std::unique_ptr<Node> a, b;
  i64 exponent = 0;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  explicit Parser(const std::string& s) : toks_(tokenize(s)) {}
  NodePtr parse() {
    NodePtr e = expr();
    if (cur().kind != Token::End) throw ParseError("trailing input");
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  NodePtr expr() {
    NodePtr left;
    if (cur().kind == Token::Minus) {
      advance();
      left = std::make_unique<Node>();
      left->kind = Node::Neg;
      left->a = term();
    } else {
      if (cur().kind == Token::Plus) advance();
      left = term();
    }
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      bool sub = cur().kind == Token::Minus;
      advance();
      auto n = std::make_unique<Node>();
      n->kind = sub ? Node::Sub : Node::Add;
      n->a = std::move(left);
      n->b = term();
      left = std::move(n);
    }
    return left;
  }

  NodePtr term() {
    NodePtr left = factor();
    for (;;) {
      if (cur().kind == Token::Star) {
        advance();
      } else if (cur().kind != Token::Int && cur().kind != Token::Ident &&
                 cur().kind != Token::LParen) {
        break;  // no implicit multiplication possible
      }
      auto n = std::make_unique<Node>();
      n->kind = Node::Mul;
      n->a = std::move(left);
      n->b = factor();
      left = std::move(n);
    }
    return left;
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (cur().kind == Token::Caret) {
      advance();
      if (cur().kind != Token::Int)
        throw ParseError("exponent must be a nonnegative integer");
      auto n = std::make_unique<Node>();
      n->kind = Node::Pow;
      n->a = std::move(base);
      n->exponent = cur().ival;
      advance();
      return n;
    }
    return base;
  }

  NodePtr atom() {
    if (cur().kind == Token::Int) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Int;
      n->ival = cur().ival;
      advance();
      return n;
    }
    if (cur().kind == Token::Ident) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Var;
      n->name = cur().name;
      advance();
      return n;
    }
    if (cur().kind == Token::LParen) {
      advance();
      NodePtr e = expr();
      if (cur().kind != Token::RParen) throw ParseError("missing ')'");
      advance();
      return e;
    }
    throw ParseError("expected integer, variable, or '('");
  }
};

template <class R, class Ctx>
R eval_node(const Node& n, const Ctx& ctx) {
  switch (n.kind) {
    case Node::Int: return ctx.from_int(n.ival);
    case Node::Var: return ctx.var(n.name);
    case Node::Add: return eval_node<R>(*n.a, ctx) + eval_node<R>(*n.b, ctx);
    case Node::Sub: return eval_node<R>(*n.a, ctx) - eval_node<R>(*n.b, ctx);
    case Node::Neg: return -eval_node<R>(*n.a, ctx);
    case Node::Mul: return eval_node<R>(*n.a, ctx) * eval_node<R>(*n.b, ctx);
    case Node::Pow: return eval_node<R>(*n.a, ctx).pow(n.exponent);
  }
  throw ParseError("corrupt expression");
}

template <class R>
struct VarCtx {
  std::map<std::string, R> vars;
  const FieldPtr* intfield = nullptr;
  R (*mk_int)(const FieldPtr&, i64) = nullptr;
  R from_int(i64 v) const { return mk_int(*intfield, v); }
  R var(const std::string& name) const {
    auto it = vars.find(name);
    if (it == vars.end())
      throw ParseError("unknown variable '" + name + "'");
    return it->second;
  }
};

// Tower variables of k, each bound through `wrap`.
template <class R, class F>
void bind_tower_vars(std::map<std::string, R>& vars, const FieldPtr& k,
                     const F& wrap) {
  FieldPtr lvl = k;
  while (lvl && !lvl->is_prime_level()) {
    if (!lvl->var().empty()) vars.emplace(lvl->var(), wrap(lvl->gen()));
    lvl = lvl->base();
  }
}

// ---------------------------------------------------------------------------
// Printing helpers

bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if ((c == '+' || (c == '-' && i > 0)) && depth == 0) return true;
  }
  return false;
}

std::string format_terms(
    const std::vector<std::pair<std::string, int>>& terms,
    const std::string& var) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [cs, pow] : terms) {
    if (!first) os << "+";
    first = false;
    if (pow == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") {
      if (needs_parens(cs)) os << "(" << cs << ")";
      else os << cs;
    }
    os << var;
    if (pow > 1) os << "^" << pow;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Parse entry points

FieldElem parse_element(const FieldPtr& k, const std::string& s,
                        const std::map<std::string, FieldElem>& aliases) {
  VarCtx<FieldElem> ctx;
  ctx.intfield = &k;
  ctx.mk_int = [](const FieldPtr& f, i64 v) { return f->from_int(v); };
  bind_tower_vars(ctx.vars, k, [&](const FieldElem& g) { return k->embed(g); });
  for (const auto& [name, val] : aliases) ctx.vars[name] = k->embed(val);
  NodePtr ast = Parser(s).parse();
  return eval_node<FieldElem>(*ast, ctx);
}

Poly parse_poly(const FieldPtr& k, const std::string& s,
                const std::string& var) {
  VarCtx<Poly> ctx;
  ctx.intfield = &k;
  ctx.mk_int = [](const FieldPtr& f, i64 v) {
    return Poly::constant(f->from_int(v));
  };
  bind_tower_vars(ctx.vars, k, [&](const FieldElem& g) {
    return Poly::constant(k->embed(g));
  });
  if (ctx.vars.count(var))
    throw ParseError("polynomial variable collides with a tower variable");
  ctx.vars.emplace(var, Poly::gen(k));
  NodePtr ast = Parser(s).parse();
  return eval_node<Poly>(*ast, ctx);
}

XPoly parse_xpoly(const FieldPtr& fq, const std::string& s) {
  VarCtx<XPoly> ctx;
  ctx.intfield = &fq;
  ctx.mk_int = [](const FieldPtr& f, i64 v) {
    return XPoly::constant(Poly::constant(f->from_int(v)));
  };
  bind_tower_vars(ctx.vars, fq, [&](const FieldElem& g) {
    return XPoly::constant(Poly::constant(fq->embed(g)));
  });
  ctx.vars.emplace("T", XPoly::constant(Poly::gen(fq)));
  ctx.vars.emplace("x", XPoly::gen(fq));
  NodePtr ast = Parser(s).parse();
  return eval_node<XPoly>(*ast, ctx);
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const FieldElem& x) {
  const FieldPtr& k = x.field();
  if (!k) return "<detached>";
  if (k->is_prime_level()) return std::to_string(x.prime_value());
  std::vector<std::pair<std::string, int>> terms;
  const auto& c = x.coeffs();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (!c[i].is_zero()) terms.emplace_back(to_string(c[i]), i);
  return format_terms(terms, k->var());
}

std::string to_string(const Poly& a, const std::string& var) {
  if (!a.valid()) return "<detached>";
  std::vector<std::pair<std::string, int>> terms;
  for (int i = a.degree(); i >= 0; --i)
    if (!a.coeff(i).is_zero()) terms.emplace_back(to_string(a.coeff(i)), i);
  return format_terms(terms, var);
}

std::string to_string(const XPoly& a, const std::string& xvar,
                      const std::string& tvar) {
  if (!a.field()) return "<detached>";
  std::vector<std::pair<std::string, int>> terms;
  for (int i = a.degree(); i >= 0; --i)
    if (!a.coeff(i).is_zero())
      terms.emplace_back(to_string(a.coeff(i), tvar), i);
  return format_terms(terms, xvar);
}

std::string to_string(const Frac& a, const std::string& var) {
  if (a.is_integral()) return to_string(a.num(), var);
  std::string n = to_string(a.num(), var), d = to_string(a.den(), var);
  std::string r = needs_parens(n) ? "(" + n + ")" : n;
  r += "/";
  r += needs_parens(d) ? "(" + d + ")" : d;
  return r;
}

std::string to_string(const SkewPoly& u, const std::string& tauvar) {
  if (!u.field()) return "<detached>";
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = u.degree(); i >= 0; --i) {
    FieldElem c = u.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = to_string(c);
    if (i == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") {
      bool plain_int = cs.find_first_not_of("0123456789") == std::string::npos;
      if (plain_int) os << cs;
      else os << "(" << cs << ")";
    }
    os << tauvar;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace drinmod
