#include "idexp/parse.hpp"

#include <cctype>

namespace idexp {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const Field& field;
  const VarSplitPtr& split;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw input_error("parse error at position " + std::to_string(pos) + ": " + msg +
                      " in \"" + s + "\"");
  }

  BigInt integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return BigInt(s.substr(start, pos - start));
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    if (pos >= s.size() ||
        !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      fail("expected identifier");
    ++pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(field, split, Scalar(field, Rat(integer())));
    }
    std::string name = identifier();
    auto idx = split->index_of(name);
    if (!idx) fail("unknown variable '" + name + "'");
    return Poly::variable(field, split, *idx);
  }

  Poly factor() {
    if (eat('-')) return -factor();
    Poly base = atom();
    if (eat('^')) {
      BigInt k = integer();
      if (k > 100000) fail("exponent too large");
      return base.pow(static_cast<int>(k));
    }
    return base;
  }

  Poly term() {
    Poly out = factor();
    while (eat('*')) out = out * factor();
    return out;
  }

  Poly expr() {
    bool neg = false;
    if (peek() == '-') {
      eat('-');
      neg = true;
    }
    Poly out = term();
    if (neg) out = -out;
    while (true) {
      char c = peek();
      if (c == '+') {
        eat('+');
        out = out + term();
      } else if (c == '-') {
        eat('-');
        out = out - term();
      } else {
        break;
      }
    }
    return out;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const Field& field, const VarSplitPtr& split) {
  Parser p{text, 0, field, split};
  Poly out = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

namespace {

BigInt parse_bigint(const std::string& text) {
  size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw input_error("malformed integer \"" + text + "\"");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw input_error("malformed integer \"" + text + "\"");
  }
  return BigInt(text);
}

}  // namespace

Rat parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den <= 0) throw input_error("rational with nonpositive denominator: " + text);
  return Rat(num, den);
}

}  // namespace idexp
