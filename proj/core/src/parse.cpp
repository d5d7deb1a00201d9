#include "hdeg/parse.hpp"

#include <cctype>

namespace hdeg {

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text, std::size_t pos) : ring_(ring), s_(text), pos_(pos) {}

  Polynomial expr() {
    skip();
    Polynomial acc(ring_);
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = neg ? -t : t;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial u = term();
      acc = c == '+' ? acc + u : acc - u;
    }
    return acc;
  }

  std::size_t pos() const { return pos_; }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        Polynomial d = power();
        if (d.is_zero()) throw ParseError(at, "division by zero");
        if (d.terms().size() != 1 || !d.lead().mon.is_one()) throw ParseError(at, "can only divide by a constant");
        acc = acc.scaled(d.lead().coef.inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      long long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > 255) throw ParseError(at, "exponent too large");
      }
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-' || c == '+') {
      ++pos_;
      Polynomial p = power();
      return c == '-' ? -p : p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, ring_->field().from_rational(mpq_class(z)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) throw ParseError(start, "unknown variable '" + name + "'");
      return Polynomial::variable(ring_, idx);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_;
};

}  // namespace

Polynomial parse_polynomial_at(const RingPtr& ring, std::string_view text, std::size_t& pos) {
  PolyParser p(ring, text, pos);
  Polynomial r = p.expr();
  pos = p.pos();
  return r;
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  std::size_t pos = 0;
  Polynomial r = parse_polynomial_at(ring, text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError(pos, "unexpected trailing input");
  return r;
}

}  // namespace hdeg
