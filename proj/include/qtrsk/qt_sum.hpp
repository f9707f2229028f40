#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtrsk/qt_factored.hpp"

namespace qtrsk {

// Exact sum of factored terms. Terms with the same monomial and factors are
// merged by adding coefficients; equality goes through expansion.
class QTSum {
 public:
  QTSum() = default;
  QTSum(const QTFactored& x) { add(x); }  // NOLINT

  void add(const QTFactored& x);
  void add(const QTSum& s);
  const std::vector<QTFactored>& terms() const { return terms_; }
  bool syntactically_zero() const { return terms_.empty(); }

  QTSum operator+(const QTSum& o) const;
  QTSum operator-(const QTSum& o) const;
  QTSum operator*(const QTFactored& x) const;
  QTSum operator-() const;
  QTSum& operator+=(const QTSum& o) { add(o); return *this; }

  Expanded expand() const { return qt_sum_expand(terms_); }
  bool is_zero() const { return qt_sum_is_zero(terms_); }
  bool equals(const QTSum& o) const { return (*this - o).is_zero(); }
  bool equals(const QTFactored& x) const { return qt_sum_equals(terms_, x); }

 private:
  std::vector<QTFactored> terms_;
};

BigRational qt_eval(const QTSum& s, const BigRational& q0, const BigRational& t0);
QTSum qt_substitute_inverse(const QTSum& s);
QTSum qt_swap(const QTSum& s);
// Termwise limit; each term must have a finite limit.
QTSum qt_limit(const QTSum& s, Limit which);
// Termwise Jack limit; each term must be balanced.
AlphaRational qt_jack_limit(const QTSum& s);

std::string to_string(const QTSum& s);
nlohmann::json to_json(const QTSum& s);

}  // namespace qtrsk
