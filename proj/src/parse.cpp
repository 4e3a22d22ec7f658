#include "toro/parse.hpp"

#include <cctype>

namespace toro {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      i++;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(i) + " in \"" + s +
                     "\"");
  }

  mpz_class integer() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) i++;
    if (i == start) fail("expected integer");
    return mpz_class(s.substr(start, i - start));
  }

  int exponent() {
    mpz_class e = integer();
    if (e < 0 || e > 1000) fail("exponent out of range");
    return (int)e.get_si();
  }

  Poly2 atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      i++;
      Poly2 p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x' || c == 'y') {
      if (i + 1 >= s.size() || (s[i + 1] != '1' && s[i + 1] != '2'))
        fail("expected variable x1, x2, y1 or y2");
      int axis = s[i + 1] - '0';
      i += 2;
      return Poly2::var(axis);
    }
    if (std::isdigit((unsigned char)c)) {
      mpz_class n = integer();
      // rational literal a/b
      size_t save = i;
      if (eat('/')) {
        skip();
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
          mpz_class d = integer();
          if (d == 0) fail("zero denominator in rational literal");
          Rat r(n, d);
          r.canonicalize();
          return Poly2{r};
        }
        i = save;  // '/' not followed by an integer: not part of a literal
        fail("'/' is only allowed in rational literals");
      }
      return Poly2{Rat(n)};
    }
    fail("unexpected character");
  }

  Poly2 power() {
    Poly2 base = atom();
    if (eat('^')) return base.pow(exponent());
    return base;
  }

  Poly2 factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    return power();
  }

  Poly2 term() {
    Poly2 p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly2 expr() {
    Poly2 p = term();
    for (;;) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        return p;
    }
  }
};

}  // namespace

Poly2 parse_poly(const std::string& text) {
  Parser p(text);
  Poly2 r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace toro
