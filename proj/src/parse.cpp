#include "qpdo/parse.hpp"

#include <cctype>
#include <numeric>
#include <optional>

namespace qpdo {

namespace {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen,
              LBracket, RBracket, Comma, End } kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }
  const Token& cur() const { return cur_; }
  void advance() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_])))
      ++at_;
    size_t start = at_;
    if (at_ >= src_.size()) {
      cur_ = {Token::End, "", start};
      return;
    }
    char c = src_[at_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_])))
        ++at_;
      cur_ = {Token::Int, src_.substr(start, at_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++at_;
      cur_ = {Token::Ident, std::string(1, c), start};
      return;
    }
    ++at_;
    switch (c) {
      case '+': cur_ = {Token::Plus, "+", start}; return;
      case '-': cur_ = {Token::Minus, "-", start}; return;
      case '*': cur_ = {Token::Star, "*", start}; return;
      case '/': cur_ = {Token::Slash, "/", start}; return;
      case '^': cur_ = {Token::Caret, "^", start}; return;
      case '(': cur_ = {Token::LParen, "(", start}; return;
      case ')': cur_ = {Token::RParen, ")", start}; return;
      case '[': cur_ = {Token::LBracket, "[", start}; return;
      case ']': cur_ = {Token::RBracket, "]", start}; return;
      case ',': cur_ = {Token::Comma, ",", start}; return;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  const std::string& src_;
  size_t at_ = 0;
  Token cur_{Token::End, "", 0};
};

struct Mode {
  bool allow_div = false;     // scalar syntax
  bool allow_ops = true;      // z, T, E atoms
  bool allow_vector = false;  // e[p] atoms
};

class Parser {
 public:
  Parser(const std::string& src, int N, Mode mode)
      : lex_(src), N_(N), mode_(mode) {}

  ExprAST parse() {
    ExprAST e = expr();
    if (lex_.cur().kind != Token::End)
      throw ParseError(lex_.cur().pos, "unexpected trailing input");
    return e;
  }

 private:
  Lexer lex_;
  int N_;
  Mode mode_;

  static ExprAST node(ExprNode::Kind kind, size_t pos) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->pos = pos;
    return n;
  }

  long parse_int_token(bool allow_sign) {
    bool neg = false;
    if (allow_sign && lex_.cur().kind == Token::Minus) {
      neg = true;
      lex_.advance();
    }
    if (lex_.cur().kind != Token::Int)
      throw ParseError(lex_.cur().pos, "expected an integer");
    long value = std::stol(lex_.cur().text);
    lex_.advance();
    return neg ? -value : value;
  }

  ExprAST expr() {
    ExprAST lhs = term();
    while (lex_.cur().kind == Token::Plus || lex_.cur().kind == Token::Minus) {
      bool plus = lex_.cur().kind == Token::Plus;
      size_t pos = lex_.cur().pos;
      lex_.advance();
      ExprAST rhs = term();
      ExprAST n = node(plus ? ExprNode::Add : ExprNode::Sub, pos);
      n->child.push_back(std::move(lhs));
      n->child.push_back(std::move(rhs));
      lhs = std::move(n);
    }
    return lhs;
  }

  ExprAST term() {
    ExprAST lhs = factor();
    while (lex_.cur().kind == Token::Star ||
           (mode_.allow_div && lex_.cur().kind == Token::Slash)) {
      bool mul = lex_.cur().kind == Token::Star;
      size_t pos = lex_.cur().pos;
      lex_.advance();
      ExprAST rhs = factor();
      ExprAST n = node(mul ? ExprNode::Mul : ExprNode::Div, pos);
      n->child.push_back(std::move(lhs));
      n->child.push_back(std::move(rhs));
      lhs = std::move(n);
    }
    return lhs;
  }

  ExprAST factor() {
    if (lex_.cur().kind == Token::Minus) {
      size_t pos = lex_.cur().pos;
      lex_.advance();
      ExprAST inner = factor_tail();
      ExprAST n = node(ExprNode::Neg, pos);
      n->child.push_back(std::move(inner));
      return n;
    }
    return factor_tail();
  }

  ExprAST factor_tail() {
    ExprAST a = atom();
    if (lex_.cur().kind == Token::Caret) {
      size_t pos = lex_.cur().pos;
      lex_.advance();
      long e = parse_int_token(true);
      ExprAST n = node(ExprNode::Pow, pos);
      n->power = e;
      n->child.push_back(std::move(a));
      return n;
    }
    return a;
  }

  ExprAST atom() {
    const Token& t = lex_.cur();
    switch (t.kind) {
      case Token::Int: {
        ExprAST n = node(ExprNode::IntLit, t.pos);
        n->text = t.text;
        lex_.advance();
        return n;
      }
      case Token::LParen: {
        lex_.advance();
        ExprAST inner = expr();
        if (lex_.cur().kind != Token::RParen)
          throw ParseError(lex_.cur().pos, "expected ')'");
        lex_.advance();
        return inner;
      }
      case Token::Ident: {
        size_t pos = t.pos;
        std::string id = t.text;
        if (id == "q") { lex_.advance(); return node(ExprNode::ScalarQ, pos); }
        if (id == "v") { lex_.advance(); return node(ExprNode::ScalarV, pos); }
        if (mode_.allow_ops && id == "z") { lex_.advance(); return node(ExprNode::ZAtom, pos); }
        if (mode_.allow_ops && id == "T") { lex_.advance(); return node(ExprNode::TAtom, pos); }
        if (mode_.allow_ops && id == "E") {
          lex_.advance();
          if (lex_.cur().kind != Token::LBracket)
            throw ParseError(lex_.cur().pos, "expected '[' after E");
          lex_.advance();
          long i = parse_int_token(false);
          if (lex_.cur().kind != Token::Comma)
            throw ParseError(lex_.cur().pos, "expected ',' in E[i,j]");
          lex_.advance();
          long j = parse_int_token(false);
          if (lex_.cur().kind != Token::RBracket)
            throw ParseError(lex_.cur().pos, "expected ']' in E[i,j]");
          lex_.advance();
          if (i < 1 || i > N_ || j < 1 || j > N_)
            throw ParseError(pos, "index out of range");
          ExprAST n = node(ExprNode::MatrixUnit, pos);
          n->i = static_cast<int>(i);
          n->j = static_cast<int>(j);
          return n;
        }
        if (mode_.allow_vector && id == "e") {
          lex_.advance();
          if (lex_.cur().kind != Token::LBracket)
            throw ParseError(lex_.cur().pos, "expected '[' after e");
          lex_.advance();
          long pcomp = parse_int_token(false);
          if (lex_.cur().kind != Token::RBracket)
            throw ParseError(lex_.cur().pos, "expected ']' in e[p]");
          lex_.advance();
          if (pcomp < 1 || pcomp > N_)
            throw ParseError(pos, "index out of range");
          ExprAST n = node(ExprNode::VectorUnit, pos);
          n->i = static_cast<int>(pcomp);
          return n;
        }
        throw ParseError(pos, "unknown symbol '" + id + "'");
      }
      default:
        throw ParseError(t.pos, "expected an atom");
    }
  }
};

// Evaluation value: an operator, a vector, or (scalar mode) a field element.
struct Value {
  std::optional<Element> op;
  std::optional<VectorElement> vec;
  std::optional<FieldElement> scalar;
};

Value eval_node(const ExprNode& n, int N, bool scalar_mode) {
  auto as_op = [&](const Value& val, size_t pos) -> const Element& {
    if (!val.op) throw ParseError(pos, "expected an operator expression");
    return *val.op;
  };
  switch (n.kind) {
    case ExprNode::IntLit: {
      FieldElement c(Poly(Int(n.text)));
      if (scalar_mode) return {.op = {}, .vec = {}, .scalar = c};
      return {.op = Element::scalar(N, c), .vec = {}, .scalar = {}};
    }
    case ExprNode::ScalarQ:
      if (scalar_mode) return {.op = {}, .vec = {}, .scalar = FieldElement::q()};
      return {.op = Element::scalar(N, FieldElement::q()), .vec = {}, .scalar = {}};
    case ExprNode::ScalarV:
      if (scalar_mode) return {.op = {}, .vec = {}, .scalar = FieldElement::v()};
      return {.op = Element::scalar(N, FieldElement::v()), .vec = {}, .scalar = {}};
    case ExprNode::ZAtom:
      return {.op = Element::scalar_op(N, FieldElement(1), 1, 0), .vec = {}, .scalar = {}};
    case ExprNode::TAtom:
      return {.op = Element::scalar_op(N, FieldElement(1), 0, 1), .vec = {}, .scalar = {}};
    case ExprNode::MatrixUnit:
      return {.op = Element::matrix_unit(N, n.i, n.j), .vec = {}, .scalar = {}};
    case ExprNode::VectorUnit:
      return {.op = {}, .vec = VectorElement::basis(N, 0, n.i), .scalar = {}};
    case ExprNode::Neg: {
      Value v = eval_node(*n.child[0], N, scalar_mode);
      if (v.scalar) return {.op = {}, .vec = {}, .scalar = -*v.scalar};
      if (v.vec) return {.op = {}, .vec = -*v.vec, .scalar = {}};
      return {.op = -*v.op, .vec = {}, .scalar = {}};
    }
    case ExprNode::Pow: {
      // z^k and T^m build exponents directly; everything else goes through
      // Element/FieldElement powers.
      const ExprNode& base = *n.child[0];
      if (!scalar_mode && base.kind == ExprNode::ZAtom)
        return {.op = Element::scalar_op(N, FieldElement(1), n.power, 0), .vec = {}, .scalar = {}};
      if (!scalar_mode && base.kind == ExprNode::TAtom)
        return {.op = Element::scalar_op(N, FieldElement(1), 0, n.power), .vec = {}, .scalar = {}};
      Value v = eval_node(base, N, scalar_mode);
      if (v.scalar) return {.op = {}, .vec = {}, .scalar = v.scalar->pow(n.power)};
      if (v.vec) throw ParseError(n.pos, "cannot raise a vector to a power");
      try {
        return {.op = v.op->pow(n.power), .vec = {}, .scalar = {}};
      } catch (const std::exception& e) {
        throw ParseError(n.pos, e.what());
      }
    }
    case ExprNode::Mul: {
      Value a = eval_node(*n.child[0], N, scalar_mode);
      Value b = eval_node(*n.child[1], N, scalar_mode);
      if (scalar_mode) return {.op = {}, .vec = {}, .scalar = *a.scalar * *b.scalar};
      if (a.vec) throw ParseError(n.pos, "vectors multiply only from the right");
      if (b.vec)
        return {.op = {}, .vec = act(as_op(a, n.pos), *b.vec), .scalar = {}};
      return {.op = multiply(as_op(a, n.pos), as_op(b, n.pos)), .vec = {}, .scalar = {}};
    }
    case ExprNode::Div: {
      Value a = eval_node(*n.child[0], N, scalar_mode);
      Value b = eval_node(*n.child[1], N, scalar_mode);
      if (!scalar_mode || !a.scalar || !b.scalar)
        throw ParseError(n.pos, "'/' is scalar-only syntax");
      if (b.scalar->is_zero()) throw ParseError(n.pos, "division by zero");
      return {.op = {}, .vec = {}, .scalar = *a.scalar / *b.scalar};
    }
    case ExprNode::Add:
    case ExprNode::Sub: {
      Value a = eval_node(*n.child[0], N, scalar_mode);
      Value b = eval_node(*n.child[1], N, scalar_mode);
      bool add = n.kind == ExprNode::Add;
      if (scalar_mode)
        return {.op = {}, .vec = {}, .scalar = add ? *a.scalar + *b.scalar : *a.scalar - *b.scalar};
      if (a.vec && b.vec)
        return {.op = {}, .vec = add ? *a.vec + *b.vec : *a.vec - *b.vec, .scalar = {}};
      if (a.vec || b.vec)
        throw ParseError(n.pos, "cannot mix vector and operator terms");
      return {.op = add ? *a.op + *b.op : *a.op - *b.op, .vec = {}, .scalar = {}};
    }
  }
  throw ParseError(n.pos, "malformed expression tree");
}

}  // namespace

ExprAST parse_expr(const std::string& src, int N) {
  return Parser(src, N, Mode{false, true, false}).parse();
}

Element eval_expr(const ExprAST& ast, int N) {
  Value v = eval_node(*ast, N, false);
  if (!v.op) throw ParseError(ast->pos, "expected an operator expression");
  return *v.op;
}

Element parse_element(const std::string& src, int N) {
  return eval_expr(parse_expr(src, N), N);
}

FieldElement parse_scalar(const std::string& src) {
  ExprAST ast = Parser(src, 1, Mode{true, false, false}).parse();
  Value v = eval_node(*ast, 1, true);
  return *v.scalar;
}

VectorElement parse_vector(const std::string& src, int N) {
  ExprAST ast = Parser(src, N, Mode{false, true, true}).parse();
  Value v = eval_node(*ast, N, false);
  if (!v.vec) throw ParseError(ast->pos, "expected a vector expression");
  return *v.vec;
}

long parse_half_integer(const std::string& src) {
  size_t slash = src.find('/');
  auto to_long = [&](const std::string& s, size_t at) {
    try {
      size_t used = 0;
      long val = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
      return val;
    } catch (...) {
      throw ParseError(at, "expected an integer");
    }
  };
  if (slash == std::string::npos) return 2 * to_long(src, 0);
  long num = to_long(src.substr(0, slash), 0);
  long den = to_long(src.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError(slash + 1, "zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 0) { num /= g; den /= g; }
  if (den == 1) return 2 * num;
  if (den == 2) return num;
  throw ParseError(0, "exponent is not a half-integer");
}

}  // namespace qpdo
