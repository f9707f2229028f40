#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qtrsk/alpha.hpp"
#include "qtrsk/laurent.hpp"
#include "qtrsk/rational.hpp"

namespace qtrsk {

// (a,b) stands for the binomial 1 - q^a t^b, with a,b >= 0 and (a,b) != (0,0).
using FactorKey = std::pair<int, int>;
using FactorMap = std::map<FactorKey, int>;

// coeff * q^x t^y * prod (1 - q^a t^b)^e. The binomials are multiplicatively
// independent, so the canonical form is unique and == is value equality.
class QTFactored {
 public:
  QTFactored() : QTFactored(BigRational(1)) {}
  QTFactored(const BigRational& c);  // NOLINT: constants convert implicitly
  QTFactored(BigRational coeff, MonomialQT mono, FactorMap factors);

  static QTFactored zero();
  static QTFactored monomial(const MonomialQT& m, const BigRational& c = 1);
  static QTFactored binomial(int a, int b, int exponent = 1);

  bool is_zero() const { return zero_; }
  const BigRational& coeff() const { return coeff_; }
  const MonomialQT& mono() const { return mono_; }
  const FactorMap& factors() const { return factors_; }
  int numerator_factor_count() const;
  int denominator_factor_count() const;

  QTFactored operator*(const QTFactored& o) const;
  QTFactored operator/(const QTFactored& o) const;
  QTFactored operator-() const;
  QTFactored& operator*=(const QTFactored& o) { return *this = *this * o; }
  QTFactored& operator/=(const QTFactored& o) { return *this = *this / o; }
  QTFactored pow(int e) const;

  friend bool operator==(const QTFactored&, const QTFactored&) = default;

 private:
  bool zero_ = false;
  BigRational coeff_ = 1;
  MonomialQT mono_{};
  FactorMap factors_;
};

struct Expanded {
  LaurentPoly2 num;
  LaurentPoly2 den;
};

enum class Limit { TToZero, QToZero, TToInfinity, QToInfinity };

// p1 - p2 for comparable points; throws EqualPoints / IncomparablePoints.
QTFactored qt_from_point_difference(const MonomialQT& p1, const MonomialQT& p2);

QTFactored qt_mul(const QTFactored& x, const QTFactored& y);
QTFactored qt_div(const QTFactored& x, const QTFactored& y);
QTFactored qt_inv(const QTFactored& x);

// num/den without any polynomial division; den is the product of the
// negative-exponent binomials.
Expanded qt_expand(const QTFactored& x);

// Exact test of sum(xs) == target by expansion over a common denominator.
bool qt_sum_equals(const std::vector<QTFactored>& xs, const QTFactored& target);
// Exact test of sum(terms) == 0.
bool qt_sum_is_zero(const std::vector<QTFactored>& terms);
// sum(terms) as num/den over the common denominator, with binomials common to
// every term cancelled at the factor level.
Expanded qt_sum_expand(const std::vector<QTFactored>& terms);

BigRational qt_eval(const QTFactored& x, const BigRational& q0, const BigRational& t0);

// q -> 1/q, t -> 1/t
QTFactored qt_substitute_inverse(const QTFactored& x);
// q <-> t
QTFactored qt_swap(const QTFactored& x);

QTFactored qt_limit(const QTFactored& x, Limit which);

// q = t^alpha, t -> 1. Throws JackLimitUndefined unless binomial counts balance.
AlphaRational qt_jack_limit(const QTFactored& x);

std::string to_string(const QTFactored& x);
nlohmann::json to_json(const QTFactored& x);

}  // namespace qtrsk
