#include "qtrsk/expr.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "qtrsk/error.hpp"

namespace qtrsk {

namespace {

struct AlphaVal {
  AlphaRational v;
  static AlphaVal constant(const BigRational& c) { return {AlphaRational(UniPoly::constant(c), UniPoly::constant(1))}; }
  AlphaVal operator+(const AlphaVal& o) const { return {v + o.v}; }
  AlphaVal operator-(const AlphaVal& o) const { return {v - o.v}; }
  AlphaVal operator*(const AlphaVal& o) const { return {v * o.v}; }
  AlphaVal operator/(const AlphaVal& o) const { return {v / o.v}; }
};

template <class V, class Var>
class Parser {
 public:
  Parser(std::string_view s, Var var) : s_(s), var_(var) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  std::string_view s_;
  Var var_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  static bool starts_atom(char c) {
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  V expr() {
    V v = peek() == '-' ? (++pos_, V::constant(0) - term()) : term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      v = c == '+' ? v + term() : v - term();
    }
    return v;
  }

  V term() {
    V v = power();
    while (true) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        v = c == '*' ? v * power() : v / power();
      } else if (starts_atom(c)) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  V power() {
    V b = atom();
    if (peek() != '^') return b;
    ++pos_;
    skip();
    bool neg = pos_ < s_.size() && s_[pos_] == '-';
    if (neg) ++pos_;
    int e = integer();
    V r = V::constant(1);
    for (int i = 0; i < e; ++i) r = r * b;
    return neg ? V::constant(1) / r : r;
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  V atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (peek() != ')') fail("expected )");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return V::constant(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_++;
      if (auto v = var_(c)) return *v;
      pos_ = at;
      fail(std::string("unknown variable '") + c + "'");
    }
    fail("unexpected character");
  }
};

template <class V, class Var>
V parse_with(std::string_view s, Var var) {
  return Parser<V, Var>(s, var).parse();
}

}  // namespace

RationalQT RationalQT::operator/(const RationalQT& o) const {
  if (o.num.is_zero()) throw Error(Errc::DivideByZero, "division by zero in expression");
  return {num * o.den, den * o.num};
}

RationalQT to_rational(const QTFactored& x) {
  auto e = qt_expand(x);
  return {e.num, e.den};
}

RationalQT to_rational(const QTSum& s) {
  auto e = s.expand();
  return {e.num, e.den};
}

RationalQT parse_qt_expression(std::string_view text) {
  return parse_with<RationalQT>(text, [](char c) -> std::optional<RationalQT> {
    if (c == 'q') return RationalQT{LaurentPoly2::monomial({1, 0}), LaurentPoly2::constant(1)};
    if (c == 't') return RationalQT{LaurentPoly2::monomial({0, 1}), LaurentPoly2::constant(1)};
    return std::nullopt;
  });
}

AlphaRational parse_alpha_expression(std::string_view text) {
  return parse_with<AlphaVal>(text, [](char c) -> std::optional<AlphaVal> {
           if (c == 'a') return AlphaVal{AlphaRational::alpha()};
           return std::nullopt;
         }).v;
}

}  // namespace qtrsk
