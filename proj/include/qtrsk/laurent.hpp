#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qtrsk/rational.hpp"

namespace qtrsk {

// q^eq t^et
struct MonomialQT {
  int eq = 0;
  int et = 0;

  friend bool operator==(const MonomialQT&, const MonomialQT&) = default;
  friend auto operator<=>(const MonomialQT&, const MonomialQT&) = default;

  MonomialQT operator*(const MonomialQT& o) const { return {eq + o.eq, et + o.et}; }
  MonomialQT operator/(const MonomialQT& o) const { return {eq - o.eq, et - o.et}; }
  MonomialQT pow(int e) const { return {eq * e, et * e}; }
  bool is_one() const { return eq == 0 && et == 0; }
  // Product order: q^x t^y <= q^x' t^y' iff x <= x' and y <= y'.
  bool leq(const MonomialQT& o) const { return eq <= o.eq && et <= o.et; }
};

std::string to_string(const MonomialQT& m);

// Sparse Laurent polynomial in q, t with rational coefficients. Terms are
// kept sorted lexicographically by (e_q, e_t) and never store zero.
class LaurentPoly2 {
 public:
  using Term = std::pair<MonomialQT, BigRational>;

  LaurentPoly2() = default;
  static LaurentPoly2 constant(const BigRational& c);
  static LaurentPoly2 monomial(const MonomialQT& m, const BigRational& c = 1);
  static LaurentPoly2 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 scaled(const BigRational& c, const MonomialQT& m = {}) const;
  // self * (1 - q^a t^b)
  LaurentPoly2 times_binomial(int a, int b) const;

  BigRational eval(const BigRational& q0, const BigRational& t0) const;

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

std::string to_string(const LaurentPoly2& p);

}  // namespace qtrsk
