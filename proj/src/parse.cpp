#include "skewpbw/parse.hpp"

#include <cctype>
#include <regex>

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

struct Token {
  enum class Kind { Int, Ident, Op, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.column = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Int;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t.text += s[i++];
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) t.text += s[i++];
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Op;
      t.text = c;
      ++i;
    } else {
      throw Error("SyntaxError", "column " + std::to_string(i + 1) + ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.column = s.size() + 1;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::unique_ptr<Expr> parse() {
    auto e = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("SyntaxError", "column " + std::to_string(peek().column) + ": " + what);
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t column) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->column = column;
    return e;
  }

  static std::unique_ptr<Expr> binary(Expr::Kind k, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b,
                                      std::size_t column) {
    auto e = node(k, column);
    e->args.push_back(std::move(a));
    e->args.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    std::unique_ptr<Expr> lhs;
    if (is_op("+")) {
      ++pos_;
      lhs = term();
    } else if (is_op("-")) {
      const std::size_t col = peek().column;
      ++pos_;
      auto e = node(Expr::Kind::Neg, col);
      e->args.push_back(term());
      lhs = std::move(e);
    } else {
      lhs = term();
    }
    while (is_op("+") || is_op("-")) {
      const Expr::Kind k = is_op("+") ? Expr::Kind::Add : Expr::Kind::Sub;
      const std::size_t col = peek().column;
      ++pos_;
      lhs = binary(k, std::move(lhs), term(), col);
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    while (is_op("*") || is_op("/")) {
      const Expr::Kind k = is_op("*") ? Expr::Kind::Mul : Expr::Kind::Div;
      const std::size_t col = peek().column;
      ++pos_;
      lhs = binary(k, std::move(lhs), unary(), col);
    }
    return lhs;
  }

  std::unique_ptr<Expr> unary() {
    if (is_op("-")) {
      const std::size_t col = peek().column;
      ++pos_;
      auto e = node(Expr::Kind::Neg, col);
      e->args.push_back(unary());
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = primary();
    if (!is_op("^")) return base;
    const std::size_t col = peek().column;
    ++pos_;
    bool negative = false;
    if (is_op("-")) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Token::Kind::Int) fail("expected an integer exponent");
    const Integer k(peek().text);
    if (!k.fits_slong_p()) fail("exponent out of range");
    ++pos_;
    auto e = node(Expr::Kind::Pow, col);
    e->exponent = negative ? -k.get_si() : k.get_si();
    e->args.push_back(std::move(base));
    return e;
  }

  std::unique_ptr<Expr> primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      auto e = node(Expr::Kind::Number, t.column);
      e->number = Integer(t.text);
      ++pos_;
      return e;
    }
    if (t.kind == Token::Kind::Ident) {
      auto e = node(Expr::Kind::Ident, t.column);
      e->name = t.text;
      ++pos_;
      return e;
    }
    if (is_op("(")) {
      ++pos_;
      auto e = expr();
      if (!is_op(")")) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (t.kind == Token::Kind::End) fail("unexpected end of input");
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// Generator index (0-based) for "x<k>", or -1.
long generator_index(const std::string& name) {
  static const std::regex pattern("x([0-9]+)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) return -1;
  if (m[1].length() > 9) return 1000000000;
  return std::stol(m[1]) - 1;
}

std::string at_column(const Expr& e) { return "column " + std::to_string(e.column) + ": "; }

Element eval_element(const Expr& e, const PresentationPtr& p) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Element::constant(p, p->field.from_integer(e.number));
    case Expr::Kind::Ident: {
      const long g = generator_index(e.name);
      if (g >= 0) {
        if (static_cast<std::size_t>(g) >= p->n) {
          throw Error("UnknownGenerator", at_column(e) + e.name + " in a ring with n = " + std::to_string(p->n));
        }
        return Element::generator(p, static_cast<std::size_t>(g));
      }
      const auto& names = p->field.params();
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k] == e.name) return Element::constant(p, p->field.parameter(k));
      }
      throw Error("UnknownIdentifier", at_column(e) + e.name);
    }
    case Expr::Kind::Neg:
      return -eval_element(*e.args[0], p);
    case Expr::Kind::Add:
      return eval_element(*e.args[0], p) + eval_element(*e.args[1], p);
    case Expr::Kind::Sub:
      return eval_element(*e.args[0], p) - eval_element(*e.args[1], p);
    case Expr::Kind::Mul:
      return eval_element(*e.args[0], p) * eval_element(*e.args[1], p);
    case Expr::Kind::Div: {
      const Element num = eval_element(*e.args[0], p);
      const Element den = eval_element(*e.args[1], p);
      if (den.is_zero()) throw Error("DivisionByZero", at_column(e) + "division by 0");
      if (den.terms().size() != 1) throw Error("NotInvertible", at_column(e) + "division by a sum of monomials");
      return num * invert_monomial(den);
    }
    case Expr::Kind::Pow: {
      const Element base = eval_element(*e.args[0], p);
      if (e.exponent < 0 && base.is_zero()) throw Error("DivisionByZero", at_column(e) + "negative power of 0");
      if (e.exponent < 0 && base.terms().size() != 1) {
        throw Error("NotInvertible", at_column(e) + "negative power of a sum of monomials");
      }
      return power(base, e.exponent);
    }
  }
  throw Error("SyntaxError", "bad expression node");
}

FieldElement eval_coefficient(const Expr& e, const Field& field) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return field.from_integer(e.number);
    case Expr::Kind::Ident: {
      const auto& names = field.params();
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k] == e.name) return field.parameter(k);
      }
      throw Error("UnknownIdentifier", at_column(e) + e.name + " is not a parameter of " + field.kind_name());
    }
    case Expr::Kind::Neg:
      return -eval_coefficient(*e.args[0], field);
    case Expr::Kind::Add:
      return eval_coefficient(*e.args[0], field) + eval_coefficient(*e.args[1], field);
    case Expr::Kind::Sub:
      return eval_coefficient(*e.args[0], field) - eval_coefficient(*e.args[1], field);
    case Expr::Kind::Mul:
      return eval_coefficient(*e.args[0], field) * eval_coefficient(*e.args[1], field);
    case Expr::Kind::Div:
      return eval_coefficient(*e.args[0], field) / eval_coefficient(*e.args[1], field);
    case Expr::Kind::Pow:
      return eval_coefficient(*e.args[0], field).pow(e.exponent);
  }
  throw Error("SyntaxError", "bad expression node");
}

/// Minimal reader for nested bracket lists of integers and fractions.
class MatrixReader {
 public:
  explicit MatrixReader(std::string_view s) : s_(s) {}

  std::vector<std::vector<Rational>> read() {
    std::vector<std::vector<Rational>> rows;
    expect('[');
    do {
      rows.push_back(row());
    } while (accept(','));
    expect(']');
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return rows;
  }

 private:
  std::vector<Rational> row() {
    std::vector<Rational> out;
    expect('[');
    do {
      out.push_back(number());
    } while (accept(','));
    expect(']');
    return out;
  }

  Rational number() {
    skip();
    std::string text;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) text += s_[pos_++];
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
      text += s_[pos_++];
    }
    if (text.empty() || text == "-" || text == "+") fail("expected a number");
    if (text[0] == '+') text.erase(0, 1);
    Rational r;
    if (r.set_str(text, 10) != 0 || (text.find('/') != std::string::npos && text.back() == '/')) {
      fail("bad number '" + text + "'");
    }
    if (r.get_den() == 0) fail("zero denominator");
    r.canonicalize();
    return r;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("SyntaxError", "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text) { return Parser(tokenize(text)).parse(); }

Element parse_element(std::string_view text, const PresentationPtr& p) { return eval_element(*parse_expression(text), p); }

FieldElement parse_coefficient(std::string_view text, const Field& field) {
  return eval_coefficient(*parse_expression(text), field);
}

MonomialOrder parse_order(std::string_view text, std::size_t n) {
  std::string s(text);
  static const std::regex lex_pattern("lex([0-9]*)");
  std::smatch m;
  if (std::regex_match(s, m, lex_pattern)) {
    std::size_t dim = n;
    if (m[1].length() > 0) {
      dim = std::stoul(m[1]);
      if (n > 0 && dim != n) {
        throw Error("DimensionMismatch", s + " is an order on Z^" + std::to_string(dim) + " but n = " + std::to_string(n));
      }
    }
    if (dim == 0) throw Error("DimensionMismatch", "\"lex\" needs a dimension: use lexK or a presentation");
    return MonomialOrder::lex(dim);
  }
  MonomialOrder order = MonomialOrder::from_matrix(MatrixReader(text).read());
  if (n > 0 && order.dimension() != n) {
    throw Error("DimensionMismatch", "order on Z^" + std::to_string(order.dimension()) + " but n = " + std::to_string(n));
  }
  return order;
}

ExponentVector parse_exponent(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto rows = MatrixReader("[[" + s + "]]").read();
  IntegerVector out;
  for (const auto& x : rows[0]) {
    if (x.get_den() != 1) throw Error("SyntaxError", "exponents are integers: " + std::string(text));
    out.push_back(x.get_num());
  }
  return ExponentVector(std::move(out));
}

IntegerMatrix parse_integer_matrix(std::string_view text) {
  IntegerMatrix out;
  for (const auto& row : MatrixReader(text).read()) {
    IntegerVector r;
    for (const auto& x : row) {
      if (x.get_den() != 1) throw Error("SyntaxError", "integer matrix expected: " + std::string(text));
      r.push_back(x.get_num());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace skewpbw
