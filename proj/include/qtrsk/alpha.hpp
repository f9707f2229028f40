#pragma once

#include <string>
#include <vector>

#include "qtrsk/rational.hpp"

namespace qtrsk {

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs);
  static UniPoly constant(const BigRational& c);
  static UniPoly linear(const BigRational& a, const BigRational& b);  // a*x + b

  const std::vector<BigRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const BigRational& lead() const { return c_.back(); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const BigRational& s) const;
  // Euclidean division; throws DivideByZero for a zero divisor.
  void divmod(const UniPoly& d, UniPoly& quot, UniPoly& rem) const;
  BigRational eval(const BigRational& x) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<BigRational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, or zero
std::string to_string(const UniPoly& p, char var = 'a');

// Element of Q(alpha) in lowest terms: gcd(num, den) = 1 and den is a
// primitive integer polynomial with positive leading coefficient, so the
// representation is unique.
class AlphaRational {
 public:
  AlphaRational() : num_(), den_(UniPoly::constant(1)) {}
  AlphaRational(const BigRational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}  // NOLINT
  AlphaRational(UniPoly num, UniPoly den);
  static AlphaRational alpha();

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  AlphaRational operator+(const AlphaRational& o) const;
  AlphaRational operator-(const AlphaRational& o) const;
  AlphaRational operator*(const AlphaRational& o) const;
  AlphaRational operator/(const AlphaRational& o) const;
  AlphaRational& operator+=(const AlphaRational& o) { return *this = *this + o; }
  AlphaRational& operator*=(const AlphaRational& o) { return *this = *this * o; }

  BigRational eval(const BigRational& x) const;
  // Limit as the variable tends to +infinity; throws LimitDiverges.
  BigRational limit_at_infinity() const;

  friend bool operator==(const AlphaRational&, const AlphaRational&) = default;

 private:
  UniPoly num_;
  UniPoly den_;
};

AlphaRational alpha_add(const AlphaRational& x, const AlphaRational& y);
AlphaRational alpha_mul(const AlphaRational& x, const AlphaRational& y);
AlphaRational alpha_div(const AlphaRational& x, const AlphaRational& y);
bool alpha_equals(const AlphaRational& x, const AlphaRational& y);

std::string to_string(const AlphaRational& r);

}  // namespace qtrsk
