#pragma once

#include <string_view>

#include "qtrsk/alpha.hpp"
#include "qtrsk/laurent.hpp"
#include "qtrsk/qt_sum.hpp"

namespace qtrsk {

// num/den in Laurent polynomials; equality by cross-multiplication.
struct RationalQT {
  LaurentPoly2 num = LaurentPoly2::constant(0);
  LaurentPoly2 den = LaurentPoly2::constant(1);

  static RationalQT constant(const BigRational& c) { return {LaurentPoly2::constant(c), LaurentPoly2::constant(1)}; }
  RationalQT operator+(const RationalQT& o) const { return {num * o.den + o.num * den, den * o.den}; }
  RationalQT operator-(const RationalQT& o) const { return {num * o.den - o.num * den, den * o.den}; }
  RationalQT operator*(const RationalQT& o) const { return {num * o.num, den * o.den}; }
  RationalQT operator/(const RationalQT& o) const;
  bool operator==(const RationalQT& o) const { return num * o.den == o.num * den; }
};

RationalQT to_rational(const QTFactored& x);
RationalQT to_rational(const QTSum& s);

// Arithmetic expressions over integers and q, t (or a for alpha): + - * / ^,
// parentheses and juxtaposition, e.g. "t(1-q^2)/(1-q^2 t)". Throws ParseError.
RationalQT parse_qt_expression(std::string_view text);
AlphaRational parse_alpha_expression(std::string_view text);

}  // namespace qtrsk
