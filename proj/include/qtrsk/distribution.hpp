#pragma once

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "qtrsk/alpha.hpp"
#include "qtrsk/error.hpp"
#include "qtrsk/qt_sum.hpp"

namespace qtrsk {

enum class ValueMode { QtExact, Alpha, Numeric };

// How probabilities are evaluated: exactly in q,t, in the Jack limit, or at a point.
struct Mode {
  ValueMode kind = ValueMode::QtExact;
  BigRational q0 = 0, t0 = 0;

  static Mode qt() { return {}; }
  static Mode alpha() { return {ValueMode::Alpha, 0, 0}; }
  static Mode numeric(const BigRational& q, const BigRational& t) { return {ValueMode::Numeric, q, t}; }
};

std::string_view mode_name(ValueMode m);

class Value {
 public:
  explicit Value(const Mode& m = Mode::qt());
  Value(const QTFactored& x, const Mode& m);
  explicit Value(QTSum s) : v_(std::move(s)) {}
  explicit Value(AlphaRational a) : v_(std::move(a)) {}

  ValueMode kind() const;
  const QTSum& qt() const { return std::get<QTSum>(v_); }
  const AlphaRational& alpha() const { return std::get<AlphaRational>(v_); }
  const BigRational& numeric() const { return std::get<BigRational>(v_); }

  Value& operator+=(const Value& o);
  Value operator+(const Value& o) const { return Value(*this) += o; }

  bool is_zero() const;
  bool is_one() const;
  // Exact comparison in the common mode.
  bool equals(const Value& o) const;
  bool equals(const QTFactored& x) const;
  bool equals(const AlphaRational& x) const;

 private:
  std::variant<QTSum, AlphaRational, BigRational> v_;
};

std::string to_string(const Value& v);
nlohmann::json to_json(const Value& v);

// Outcome -> value, summing repeated outcomes.
template <class O>
class Distribution {
 public:
  explicit Distribution(const Mode& m = Mode::qt()) : mode_(m) {}

  const Mode& mode() const { return mode_; }
  void add(const O& o, const QTFactored& x) { add(o, Value(x, mode_)); }
  void add(const O& o, const Value& v) {
    auto [it, fresh] = support_.try_emplace(o, mode_);
    it->second += v;
  }

  const std::map<O, Value>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  Value at(const O& o) const {
    auto it = support_.find(o);
    return it == support_.end() ? Value(mode_) : it->second;
  }
  Value total() const {
    Value s(mode_);
    for (const auto& [o, v] : support_) s += v;
    return s;
  }
  bool sums_to_one() const { return total().is_one(); }
  // Throws NotNormalized unless the values sum to 1.
  void check_normalized(const std::string& what) const {
    if (!sums_to_one()) throw Error(Errc::NotNormalized, what + " does not sum to 1");
  }

  template <class F>
  auto map_outcomes(F&& f) const -> Distribution<decltype(f(std::declval<const O&>()))> {
    Distribution<decltype(f(std::declval<const O&>()))> out(mode_);
    for (const auto& [o, v] : support_) out.add(f(o), v);
    return out;
  }

 private:
  Mode mode_;
  std::map<O, Value> support_;
};

// Same support (ignoring zero values) and equal values.
template <class O>
bool same_distribution(const Distribution<O>& a, const Distribution<O>& b) {
  for (const auto& [o, v] : a.support())
    if (!v.equals(b.at(o))) return false;
  for (const auto& [o, v] : b.support())
    if (!v.equals(a.at(o))) return false;
  return true;
}

}  // namespace qtrsk
