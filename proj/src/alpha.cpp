#include "qtrsk/alpha.hpp"

#include <algorithm>
#include <utility>

#include "qtrsk/error.hpp"

namespace qtrsk {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly({c}); }

UniPoly UniPoly::linear(const BigRational& a, const BigRational& b) { return UniPoly({b, a}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<BigRational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(-1); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const BigRational& s) const {
  std::vector<BigRational> r = c_;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

void UniPoly::divmod(const UniPoly& d, UniPoly& quot, UniPoly& rem) const {
  if (d.is_zero()) throw Error(Errc::DivideByZero, "polynomial division by zero");
  std::vector<BigRational> r = c_;
  std::vector<BigRational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
  const int dd = d.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (r[k] == 0) continue;
    BigRational f = r[k] / d.lead();
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
  }
  quot = UniPoly(std::move(q));
  rem = UniPoly(std::move(r));
}

BigRational UniPoly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly q, r;
    x.divmod(y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(1 / BigRational(x.lead()));
}

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigRational& c = p.coeffs()[k];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    first = false;
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

AlphaRational::AlphaRational(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw Error(Errc::DivideByZero, "zero denominator in Q(alpha)");
  if (num.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  UniPoly g = gcd(num, den);
  UniPoly q, r;
  num.divmod(g, q, r);
  num = std::move(q);
  den.divmod(g, q, r);
  den = std::move(q);
  // Make den a primitive integer polynomial with positive leading coefficient.
  BigInt l = 1, c = 0;
  for (const auto& x : den.coeffs()) {
    if (x == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  for (const auto& x : den.coeffs()) {
    if (x == 0) continue;
    BigInt v = x.get_num() * (l / x.get_den());
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
  }
  BigRational s(l, c);
  s.canonicalize();
  if (den.lead() < 0) s = -s;
  num_ = num.scaled(s);
  den_ = den.scaled(s);
}

AlphaRational AlphaRational::alpha() { return AlphaRational(UniPoly::linear(1, 0), UniPoly::constant(1)); }

AlphaRational AlphaRational::operator+(const AlphaRational& o) const {
  return AlphaRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

AlphaRational AlphaRational::operator-(const AlphaRational& o) const {
  return AlphaRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

AlphaRational AlphaRational::operator*(const AlphaRational& o) const {
  return AlphaRational(num_ * o.num_, den_ * o.den_);
}

AlphaRational AlphaRational::operator/(const AlphaRational& o) const {
  if (o.is_zero()) throw Error(Errc::DivideByZero, "division by zero in Q(alpha)");
  return AlphaRational(num_ * o.den_, den_ * o.num_);
}

BigRational AlphaRational::eval(const BigRational& x) const {
  BigRational d = den_.eval(x);
  if (d == 0) throw Error(Errc::PoleAtPoint, "pole of " + to_string(*this) + " at " + to_string(x));
  return num_.eval(x) / d;
}

BigRational AlphaRational::limit_at_infinity() const {
  if (num_.is_zero() || num_.degree() < den_.degree()) return 0;
  if (num_.degree() > den_.degree()) throw Error(Errc::LimitDiverges, to_string(*this) + " at infinity");
  return num_.lead() / den_.lead();
}

AlphaRational alpha_add(const AlphaRational& x, const AlphaRational& y) { return x + y; }
AlphaRational alpha_mul(const AlphaRational& x, const AlphaRational& y) { return x * y; }
AlphaRational alpha_div(const AlphaRational& x, const AlphaRational& y) { return x / y; }
bool alpha_equals(const AlphaRational& x, const AlphaRational& y) { return x == y; }

std::string to_string(const AlphaRational& r) {
  std::string n = to_string(r.num());
  if (r.den() == UniPoly::constant(1)) return n;
  const auto& nc = r.num().coeffs();
  bool simple_num = std::count_if(nc.begin(), nc.end(), [](const BigRational& c) { return c != 0; }) <= 1;
  if (!simple_num) n = "(" + n + ")";
  return n + "/(" + to_string(r.den()) + ")";
}

}  // namespace qtrsk
