#include "pweyl/expr.hpp"

#include <cctype>

namespace pweyl {

namespace {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Integer integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos) throw parse_error(pos, "expected digits");
    return Integer(src.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
    return src.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;

  ExprPtr make(std::size_t off, auto&& node) {
    auto p = std::make_unique<ExprNode>();
    p->node = std::forward<decltype(node)>(node);
    p->offset = off;
    return p;
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (true) {
      std::size_t off = lex.pos;
      if (lex.eat('+')) {
        lhs = make(off, ExprNode::Bin{'+', std::move(lhs), parse_product()});
      } else if (lex.eat('-')) {
        lhs = make(off, ExprNode::Bin{'-', std::move(lhs), parse_product()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_unary();
    while (true) {
      std::size_t off = lex.pos;
      if (lex.eat('*')) {
        lhs = make(off, ExprNode::Bin{'*', std::move(lhs), parse_unary()});
      } else if (lex.eat('/')) {
        lhs = make(off, ExprNode::Bin{'/', std::move(lhs), parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_unary() {
    std::size_t off = lex.pos;
    if (lex.eat('-')) return make(off, ExprNode::Neg{parse_unary()});
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    std::size_t off = lex.pos;
    if (!lex.eat('^')) return base;
    bool neg = lex.eat('-');
    lex.skip_ws();
    std::size_t doff = lex.pos;
    Integer e = lex.integer();
    if (e > Integer(1000000)) throw parse_error(doff, "exponent too large");
    long long exp = e.convert_to<long long>();
    return make(off, ExprNode::Pow{std::move(base), neg ? -exp : exp});
  }

  ExprPtr parse_atom() {
    lex.skip_ws();
    std::size_t off = lex.pos;
    char c = lex.peek();
    if (c == '(') {
      lex.eat('(');
      ExprPtr e = parse_sum();
      if (!lex.eat(')')) throw parse_error(lex.pos, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = lex.integer();
      return make(off, ExprNode::Num{Rational(n)});
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = lex.ident();
      if (id == "zeta") {
        if (!lex.eat('(')) throw parse_error(lex.pos, "expected '(' after zeta");
        Integer m = lex.integer();
        if (!lex.eat(')')) throw parse_error(lex.pos, "expected ')' after zeta argument");
        if (m <= 0 || m > Integer(conductor_limit()))
          throw parse_error(off, "zeta argument out of range");
        return make(off, ExprNode::Zeta{m.convert_to<unsigned>()});
      }
      if (id == "x" || id == "y") {
        lex.skip_ws();
        if (lex.pos >= lex.src.size() ||
            !std::isdigit(static_cast<unsigned char>(lex.src[lex.pos])))
          throw parse_error(lex.pos, "expected variable index after '" + id + "'");
        Integer idx = lex.integer();
        if (idx <= 0 || idx > Integer(kMaxVars / 2))
          throw parse_error(off, "variable index out of range");
        VarIndex v = id == "x" ? VarIndex::x(idx.convert_to<unsigned>())
                               : VarIndex::y(idx.convert_to<unsigned>());
        return make(off, ExprNode::Var{v});
      }
      throw parse_error(off, "unknown identifier '" + id + "'");
    }
    throw parse_error(off, "unexpected character");
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& src) {
  Parser p{Lexer{src}};
  ExprPtr e = p.parse_sum();
  if (!p.lex.done()) throw parse_error(p.lex.pos, "trailing characters");
  return e;
}

RatFn lower(const ExprNode& ast, unsigned rank) {
  return std::visit(
      [&](const auto& node) -> RatFn {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ExprNode::Num>) {
          return RatFn::constant(rank, Cyc(node.value));
        } else if constexpr (std::is_same_v<T, ExprNode::Zeta>) {
          return RatFn::constant(rank, Cyc::root_of_unity(node.m));
        } else if constexpr (std::is_same_v<T, ExprNode::Var>) {
          if (node.v.index > rank)
            throw parse_error(ast.offset, "variable " + node.v.to_string() +
                                              " exceeds rank " + std::to_string(rank));
          return RatFn::variable(rank, node.v);
        } else if constexpr (std::is_same_v<T, ExprNode::Neg>) {
          return -lower(*node.operand, rank);
        } else if constexpr (std::is_same_v<T, ExprNode::Bin>) {
          RatFn l = lower(*node.lhs, rank);
          RatFn r = lower(*node.rhs, rank);
          switch (node.op) {
            case '+': return l + r;
            case '-': return l - r;
            case '*': return l * r;
            case '/':
              if (r.is_zero())
                throw division_by_zero("division by zero in expression");
              return l / r;
          }
          throw std::logic_error("unreachable");
        } else {
          static_assert(std::is_same_v<T, ExprNode::Pow>);
          RatFn b = lower(*node.base, rank);
          if (node.exponent < 0 && b.is_zero())
            throw division_by_zero("zero raised to a negative power");
          return b.pow(node.exponent);
        }
      },
      ast.node);
}

RatFn parse_ratfn(const std::string& src, unsigned rank) {
  ExprPtr ast = parse_expr(src);
  return lower(*ast, rank);
}

}  // namespace pweyl
