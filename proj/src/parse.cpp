#include "uinf/parse.hpp"

#include <cctype>
#include <string>

namespace uinf {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(&text) {}

  void skip_ws() {
    while (pos_ < text().size() && std::isspace(static_cast<unsigned char>(text()[pos_]))) {
      if (text()[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text().size();
  }

  char peek() {
    skip_ws();
    return pos_ < text().size() ? text()[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  bool accept_str(const char* s) {
    skip_ws();
    std::size_t n = std::string(s).size();
    if (text().compare(pos_, n, s) != 0) return false;
    for (std::size_t i = 0; i < n; ++i) advance();
    return true;
  }

  long long number() {
    skip_ws();
    if (pos_ >= text().size() || !std::isdigit(static_cast<unsigned char>(text()[pos_])))
      fail("expected a number");
    long long v = 0;
    while (pos_ < text().size() && std::isdigit(static_cast<unsigned char>(text()[pos_]))) {
      v = v * 10 + (text()[pos_] - '0');
      advance();
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, line_, col_); }

 private:
  const std::string& text() const { return *text_; }

  void advance() {
    if (text()[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string* text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

Rational rational(Cursor& c) {
  bool negative = c.accept('-');
  long long num = c.number();
  long long den = 1;
  if (c.accept('/')) den = c.number();
  if (den == 0) c.fail("zero denominator");
  Rational r(num, den);
  return negative ? -r : r;
}

// term = [rational "*"] 1*osc "|0>" / rational "*" "|0>" / "|0>"
FockVector term(Cursor& c) {
  Rational coeff(1);
  if (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '-') {
    coeff = rational(c);
    c.expect('*', "'*' after coefficient");
  }
  std::vector<int> parts;
  while (c.peek() == 'a') {
    c.expect('a', "'a'");
    c.expect('(', "'(' in oscillator");
    c.expect('-', "'-' in oscillator (creation modes only)");
    long long part = c.number();
    if (part <= 0) c.fail("oscillator index must be positive");
    c.expect(')', "')' in oscillator");
    parts.push_back(static_cast<int>(part));
  }
  if (!c.accept_str("|0>")) c.fail("expected '|0>'");
  return FockVector::basis(Partition(parts), LambdaPoly(coeff));
}

bool zero_literal(Cursor& c) {
  // A lone "0" is the zero element ("0 * ..." is an ordinary term).
  if (c.peek() != '0') return false;
  Cursor probe = c;
  probe.expect('0', "'0'");
  char next = probe.peek();
  if (next == '\0' || next == ']') {
    c = probe;
    return true;
  }
  return false;
}

FockVector vector(Cursor& c) {
  FockVector v;
  if (zero_literal(c)) return v;
  v += term(c);
  for (;;) {
    if (c.accept('+')) {
      v += term(c);
    } else if (c.peek() == '-') {
      // separator form "x - y": peek past '-' to distinguish from "+ -2 * x"
      c.expect('-', "'-'");
      FockVector t = term(c);
      v -= t;
    } else {
      break;
    }
  }
  return v;
}

UElement uelement(Cursor& c) {
  UElement a;
  if (zero_literal(c)) return a;
  auto group = [&c]() {
    c.expect('[', "'['");
    FockVector v = vector(c);
    c.expect(']', "']'");
    c.expect('{', "'{'");
    long long k = c.number();
    c.expect(',', "','");
    long long l = c.number();
    c.expect('}', "'}'");
    return UElement::single(v, static_cast<unsigned>(k), static_cast<unsigned>(l));
  };
  a += group();
  for (;;) {
    if (c.accept('+')) {
      a += group();
    } else if (c.accept('-')) {
      a -= group();
    } else {
      break;
    }
  }
  return a;
}

}  // namespace

FockVector parse_fock(const std::string& text) {
  Cursor c(text);
  FockVector v = vector(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return v;
}

UElement parse_uelement(const std::string& text) {
  Cursor c(text);
  UElement a = uelement(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return a;
}

Element parse_element(const std::string& text) {
  Cursor probe(text);
  if (probe.peek() == '[') return parse_uelement(text);
  return parse_fock(text);
}

}  // namespace uinf
