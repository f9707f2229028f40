#include "qtrsk/laurent.hpp"

#include <algorithm>
#include <map>

namespace qtrsk {

std::string to_string(const MonomialQT& m) {
  std::string out;
  auto var = [&](char v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  };
  var('q', m.eq);
  var('t', m.et);
  return out.empty() ? "1" : out;
}

LaurentPoly2 LaurentPoly2::constant(const BigRational& c) { return monomial({}, c); }

LaurentPoly2 LaurentPoly2::monomial(const MonomialQT& m, const BigRational& c) {
  LaurentPoly2 p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

LaurentPoly2 LaurentPoly2::from_terms(std::vector<Term> terms) {
  std::map<MonomialQT, BigRational> acc;
  for (auto& [m, c] : terms) acc[m] += c;
  LaurentPoly2 p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

namespace {

// Merge two sorted term lists, b scaled by sign.
std::vector<LaurentPoly2::Term> merge(const std::vector<LaurentPoly2::Term>& a,
                                      const std::vector<LaurentPoly2::Term>& b, int sign) {
  std::vector<LaurentPoly2::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : BigRational(-b[j].second));
      ++j;
    } else {
      BigRational c = sign > 0 ? BigRational(a[i].second + b[j].second) : BigRational(a[i].second - b[j].second);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 p;
  p.terms_ = merge(terms_, o.terms_, +1);
  return p;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 p;
  p.terms_ = merge(terms_, o.terms_, -1);
  return p;
}

LaurentPoly2 LaurentPoly2::operator-() const { return scaled(-1); }

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) all.emplace_back(ma * mb, ca * cb);
  return from_terms(std::move(all));
}

LaurentPoly2 LaurentPoly2::scaled(const BigRational& c, const MonomialQT& m) const {
  LaurentPoly2 p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) p.terms_.emplace_back(mm * m, cc * c);
  return p;
}

LaurentPoly2 LaurentPoly2::times_binomial(int a, int b) const {
  // Shifting every exponent by (a,b) preserves lex order, so this is one merge.
  LaurentPoly2 shifted = scaled(1, MonomialQT{a, b});
  return *this - shifted;
}

BigRational LaurentPoly2::eval(const BigRational& q0, const BigRational& t0) const {
  BigRational sum = 0;
  for (const auto& [m, c] : terms_) sum += c * pow(q0, m.eq) * pow(t0, m.et);
  return sum;
}

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace qtrsk
