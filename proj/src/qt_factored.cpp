#include "qtrsk/qt_factored.hpp"

#include <algorithm>
#include <cstdint>

#include "qtrsk/error.hpp"

namespace qtrsk {

QTFactored::QTFactored(const BigRational& c) : zero_(c == 0), coeff_(c == 0 ? BigRational(1) : c) {}

QTFactored::QTFactored(BigRational coeff, MonomialQT mono, FactorMap factors)
    : coeff_(std::move(coeff)), mono_(mono), factors_(std::move(factors)) {
  if (coeff_ == 0) {
    *this = zero();
    return;
  }
  for (auto it = factors_.begin(); it != factors_.end();) {
    auto [a, b] = it->first;
    if (a < 0 || b < 0 || (a == 0 && b == 0))
      throw Error(Errc::InvalidArgument, "binomial key (" + std::to_string(a) + "," + std::to_string(b) + ")");
    it = it->second == 0 ? factors_.erase(it) : std::next(it);
  }
}

QTFactored QTFactored::zero() {
  QTFactored z;
  z.zero_ = true;
  return z;
}

QTFactored QTFactored::monomial(const MonomialQT& m, const BigRational& c) { return QTFactored(c, m, {}); }

QTFactored QTFactored::binomial(int a, int b, int exponent) { return QTFactored(1, {}, {{{a, b}, exponent}}); }

int QTFactored::numerator_factor_count() const {
  int n = 0;
  for (const auto& [k, e] : factors_)
    if (e > 0) n += e;
  return n;
}

int QTFactored::denominator_factor_count() const {
  int n = 0;
  for (const auto& [k, e] : factors_)
    if (e < 0) n -= e;
  return n;
}

QTFactored QTFactored::operator*(const QTFactored& o) const {
  if (zero_ || o.zero_) return zero();
  QTFactored r = *this;
  r.coeff_ *= o.coeff_;
  r.mono_ = mono_ * o.mono_;
  for (const auto& [k, e] : o.factors_) {
    int& slot = r.factors_[k];
    slot += e;
    if (slot == 0) r.factors_.erase(k);
  }
  return r;
}

QTFactored QTFactored::operator/(const QTFactored& o) const { return *this * qt_inv(o); }

QTFactored QTFactored::operator-() const {
  if (zero_) return *this;
  QTFactored r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

QTFactored QTFactored::pow(int e) const {
  if (e < 0) return qt_inv(*this).pow(-e);
  if (zero_) return e == 0 ? QTFactored(1) : zero();
  QTFactored r = *this;
  r.coeff_ = qtrsk::pow(coeff_, e);
  r.mono_ = mono_.pow(e);
  for (auto& [k, x] : r.factors_) x *= e;
  if (e == 0) r.factors_.clear();
  return r;
}

QTFactored qt_from_point_difference(const MonomialQT& p1, const MonomialQT& p2) {
  if (p1 == p2) throw Error(Errc::EqualPoints, to_string(p1));
  if (p1.leq(p2)) {
    MonomialQT d = p2 / p1;
    return QTFactored(1, p1, {{{d.eq, d.et}, 1}});
  }
  if (p2.leq(p1)) {
    MonomialQT d = p1 / p2;
    return QTFactored(-1, p2, {{{d.eq, d.et}, 1}});
  }
  throw Error(Errc::IncomparablePoints, to_string(p1) + " vs " + to_string(p2));
}

QTFactored qt_mul(const QTFactored& x, const QTFactored& y) { return x * y; }

QTFactored qt_div(const QTFactored& x, const QTFactored& y) { return x * qt_inv(y); }

QTFactored qt_inv(const QTFactored& x) {
  if (x.is_zero()) throw Error(Errc::DivideByZero, "inverse of zero");
  FactorMap f = x.factors();
  for (auto& [k, e] : f) e = -e;
  return QTFactored(1 / x.coeff(), MonomialQT{-x.mono().eq, -x.mono().et}, std::move(f));
}

Expanded qt_expand(const QTFactored& x) {
  if (x.is_zero()) return {LaurentPoly2(), LaurentPoly2::constant(1)};
  LaurentPoly2 num = LaurentPoly2::monomial(x.mono(), x.coeff());
  LaurentPoly2 den = LaurentPoly2::constant(1);
  for (const auto& [k, e] : x.factors()) {
    for (int i = 0; i < std::abs(e); ++i) {
      if (e > 0)
        num = num.times_binomial(k.first, k.second);
      else
        den = den.times_binomial(k.first, k.second);
    }
  }
  return {num, den};
}

// ---------------------------------------------------------------------------
// Sum kernel. Every term is brought over the common denominator; binomials
// shared by all numerators are cancelled before expanding. Exponent pairs are
// packed into one int64 so that shifts preserve the sort order, and the
// expansion runs in int64 with overflow checks, falling back to GMP integers.

namespace {

using Key = std::int64_t;
constexpr std::int64_t kBias = std::int64_t{1} << 30;

Key encode(const MonomialQT& m) { return ((m.eq + kBias) << 32) | (m.et + kBias); }
MonomialQT decode(Key k) {
  return {static_cast<int>((k >> 32) - kBias), static_cast<int>((k & 0xffffffffLL) - kBias)};
}
Key shift_of(int a, int b) { return (std::int64_t{a} << 32) + b; }

struct Overflow {};

template <class C>
struct Arith;
template <>
struct Arith<std::int64_t> {
  static std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t neg(std::int64_t x) { return sub(0, x); }
  static std::int64_t from(const BigInt& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    return z.get_si();
  }
  static BigInt to_big(std::int64_t x) { return BigInt(static_cast<long>(x)); }
};
template <>
struct Arith<BigInt> {
  static BigInt add(const BigInt& x, const BigInt& y) { return x + y; }
  static BigInt sub(const BigInt& x, const BigInt& y) { return x - y; }
  static BigInt neg(const BigInt& x) { return -x; }
  static BigInt from(const BigInt& z) { return z; }
  static BigInt to_big(const BigInt& x) { return x; }
};

template <class C>
using IPoly = std::vector<std::pair<Key, C>>;

// x + sign * (y shifted by s)
template <class C>
IPoly<C> merge(const IPoly<C>& x, const IPoly<C>& y, bool subtract, Key s) {
  using A = Arith<C>;
  IPoly<C> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    Key ky = j < y.size() ? y[j].first + s : 0;
    if (j == y.size() || (i < x.size() && x[i].first < ky)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || ky < x[i].first) {
      out.emplace_back(ky, subtract ? A::neg(y[j].second) : y[j].second);
      ++j;
    } else {
      C c = subtract ? A::sub(x[i].second, y[j].second) : A::add(x[i].second, y[j].second);
      if (c != 0) out.emplace_back(x[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

struct Prepared {
  struct Term {
    BigInt coeff;
    MonomialQT mono;
    std::vector<std::pair<FactorKey, int>> factors;  // positive counts
  };
  std::vector<Term> terms;
  FactorMap den;   // common denominator after cancellation
  BigInt scale;    // integer coefficients are true coefficients times scale
};

Prepared prepare(const std::vector<QTFactored>& xs, bool cancel_all_common) {
  Prepared p;
  std::vector<const QTFactored*> live;
  for (const auto& x : xs)
    if (!x.is_zero()) live.push_back(&x);

  FactorMap den;
  for (const auto* x : live)
    for (const auto& [k, e] : x->factors())
      if (e < 0) den[k] = std::max(den[k], -e);

  std::vector<FactorMap> nums;
  nums.reserve(live.size());
  for (const auto* x : live) {
    FactorMap n;
    for (const auto& [k, e] : x->factors())
      if (e > 0) n[k] += e;
    for (const auto& [k, e] : den) {
      auto it = x->factors().find(k);
      int have = (it != x->factors().end() && it->second < 0) ? -it->second : 0;
      if (e - have > 0) n[k] += e - have;
    }
    nums.push_back(std::move(n));
  }

  // Binomials present in every numerator.
  FactorMap common;
  if (!nums.empty()) {
    common = nums[0];
    for (std::size_t i = 1; i < nums.size(); ++i) {
      for (auto it = common.begin(); it != common.end();) {
        auto f = nums[i].find(it->first);
        int m = f == nums[i].end() ? 0 : std::min(it->second, f->second);
        if (m == 0) {
          it = common.erase(it);
        } else {
          it->second = m;
          ++it;
        }
      }
    }
  }
  if (!cancel_all_common) {
    for (auto it = common.begin(); it != common.end();) {
      auto f = den.find(it->first);
      int m = f == den.end() ? 0 : std::min(it->second, f->second);
      if (m == 0) {
        it = common.erase(it);
      } else {
        it->second = m;
        ++it;
      }
    }
  }
  for (auto& n : nums)
    for (const auto& [k, e] : common) n[k] -= e;
  for (const auto& [k, e] : common) {
    auto f = den.find(k);
    if (f != den.end()) f->second = std::max(0, f->second - e);
  }
  std::erase_if(den, [](const auto& kv) { return kv.second == 0; });
  p.den = std::move(den);

  BigInt l = 1;
  for (const auto* x : live) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x->coeff().get_den_mpz_t());
  p.scale = l;
  for (std::size_t i = 0; i < live.size(); ++i) {
    Prepared::Term t;
    t.coeff = live[i]->coeff().get_num() * (l / live[i]->coeff().get_den());
    t.mono = live[i]->mono();
    for (const auto& [k, e] : nums[i])
      if (e > 0) t.factors.emplace_back(k, e);
    p.terms.push_back(std::move(t));
  }
  return p;
}

template <class C>
IPoly<C> expand_sum(const Prepared& p) {
  IPoly<C> sum;
  for (const auto& t : p.terms) {
    IPoly<C> cur{{encode(t.mono), Arith<C>::from(t.coeff)}};
    for (const auto& [k, e] : t.factors)
      for (int r = 0; r < e; ++r) cur = merge(cur, cur, true, shift_of(k.first, k.second));
    sum = merge(sum, cur, false, 0);
  }
  return sum;
}

std::vector<std::pair<Key, BigInt>> expand_sum_exact(const Prepared& p) {
  try {
    auto small = expand_sum<std::int64_t>(p);
    std::vector<std::pair<Key, BigInt>> out;
    out.reserve(small.size());
    for (auto& [k, c] : small) out.emplace_back(k, Arith<std::int64_t>::to_big(c));
    return out;
  } catch (const Overflow&) {
    return expand_sum<BigInt>(p);
  }
}

}  // namespace

bool qt_sum_is_zero(const std::vector<QTFactored>& terms) {
  Prepared p = prepare(terms, true);
  if (p.terms.empty()) return true;
  try {
    return expand_sum<std::int64_t>(p).empty();
  } catch (const Overflow&) {
    return expand_sum<BigInt>(p).empty();
  }
}

bool qt_sum_equals(const std::vector<QTFactored>& xs, const QTFactored& target) {
  std::vector<QTFactored> all;
  all.reserve(xs.size() + 1);
  all.insert(all.end(), xs.begin(), xs.end());
  all.push_back(-target);
  return qt_sum_is_zero(all);
}

Expanded qt_sum_expand(const std::vector<QTFactored>& terms) {
  Prepared p = prepare(terms, false);
  Expanded out{LaurentPoly2(), LaurentPoly2::constant(1)};
  if (p.terms.empty()) return out;
  std::vector<LaurentPoly2::Term> num;
  for (auto& [k, c] : expand_sum_exact(p)) num.emplace_back(decode(k), BigRational(c, p.scale));
  for (auto& [m, c] : num) c.canonicalize();
  out.num = LaurentPoly2::from_terms(std::move(num));
  if (out.num.is_zero()) return out;
  for (const auto& [k, e] : p.den)
    for (int r = 0; r < e; ++r) out.den = out.den.times_binomial(k.first, k.second);
  return out;
}

BigRational qt_eval(const QTFactored& x, const BigRational& q0, const BigRational& t0) {
  if (x.is_zero()) return 0;
  auto pole = [&]() {
    return Error(Errc::PoleAtPoint, to_string(x) + " at (" + to_string(q0) + "," + to_string(t0) + ")");
  };
  if ((q0 == 0 && x.mono().eq < 0) || (t0 == 0 && x.mono().et < 0)) throw pole();
  BigRational num = x.coeff() * pow(q0, x.mono().eq) * pow(t0, x.mono().et);
  BigRational den = 1;
  for (const auto& [k, e] : x.factors()) {
    BigRational v = 1 - pow(q0, k.first) * pow(t0, k.second);
    if (v == 0 && e < 0) throw pole();
    if (e > 0)
      num *= pow(v, e);
    else
      den *= pow(v, -e);
  }
  return num / den;
}

QTFactored qt_substitute_inverse(const QTFactored& x) {
  if (x.is_zero()) return x;
  // 1 - q^-a t^-b = -q^-a t^-b (1 - q^a t^b)
  int sign_exp = 0;
  MonomialQT mono{-x.mono().eq, -x.mono().et};
  for (const auto& [k, e] : x.factors()) {
    sign_exp += e;
    mono = mono * MonomialQT{-k.first * e, -k.second * e};
  }
  BigRational c = x.coeff();
  if (sign_exp % 2 != 0) c = -c;
  return QTFactored(c, mono, x.factors());
}

QTFactored qt_swap(const QTFactored& x) {
  if (x.is_zero()) return x;
  FactorMap f;
  for (const auto& [k, e] : x.factors()) f[{k.second, k.first}] = e;
  return QTFactored(x.coeff(), {x.mono().et, x.mono().eq}, std::move(f));
}

namespace {

QTFactored limit_t_to_zero(const QTFactored& x) {
  if (x.is_zero()) return x;
  if (x.mono().et > 0) return QTFactored::zero();
  if (x.mono().et < 0) throw Error(Errc::LimitDiverges, to_string(x) + " as t->0");
  FactorMap kept;
  for (const auto& [k, e] : x.factors())
    if (k.second == 0) kept[k] = e;
  return QTFactored(x.coeff(), {x.mono().eq, 0}, std::move(kept));
}

}  // namespace

QTFactored qt_limit(const QTFactored& x, Limit which) {
  switch (which) {
    case Limit::TToZero: return limit_t_to_zero(x);
    case Limit::QToZero: return qt_swap(limit_t_to_zero(qt_swap(x)));
    case Limit::TToInfinity: return qt_substitute_inverse(limit_t_to_zero(qt_substitute_inverse(x)));
    case Limit::QToInfinity:
      return qt_substitute_inverse(qt_swap(limit_t_to_zero(qt_swap(qt_substitute_inverse(x)))));
  }
  return x;
}

AlphaRational qt_jack_limit(const QTFactored& x) {
  if (x.is_zero()) return AlphaRational();
  if (x.numerator_factor_count() != x.denominator_factor_count())
    throw Error(Errc::JackLimitUndefined, to_string(x));
  // 1 - t^(a*alpha + b) ~ (a*alpha + b)(1 - t) as t -> 1
  UniPoly num = UniPoly::constant(x.coeff());
  UniPoly den = UniPoly::constant(1);
  for (const auto& [k, e] : x.factors()) {
    UniPoly lin = UniPoly::linear(k.first, k.second);
    for (int i = 0; i < std::abs(e); ++i) {
      if (e > 0)
        num = num * lin;
      else
        den = den * lin;
    }
  }
  return AlphaRational(std::move(num), std::move(den));
}

std::string to_string(const QTFactored& x) {
  if (x.is_zero()) return "0";
  std::string out = to_string(x.coeff());
  if (!x.mono().is_one()) out += " * " + to_string(x.mono());
  for (const auto& [k, e] : x.factors()) {
    out += " * (1-" + to_string(MonomialQT{k.first, k.second}) + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

nlohmann::json to_json(const QTFactored& x) {
  nlohmann::json j;
  if (x.is_zero()) {
    j["coeff"] = "0";
    j["mono"] = {0, 0};
    j["factors"] = nlohmann::json::array();
    return j;
  }
  j["coeff"] = to_string(x.coeff());
  j["mono"] = {x.mono().eq, x.mono().et};
  j["factors"] = nlohmann::json::array();
  for (const auto& [k, e] : x.factors()) j["factors"].push_back({k.first, k.second, e});
  return j;
}

}  // namespace qtrsk
