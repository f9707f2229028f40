#include "qtrsk/qt_sum.hpp"

namespace qtrsk {

void QTSum::add(const QTFactored& x) {
  if (x.is_zero()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->mono() != x.mono() || it->factors() != x.factors()) continue;
    BigRational c = it->coeff() + x.coeff();
    if (c == 0)
      terms_.erase(it);
    else
      *it = QTFactored(c, x.mono(), x.factors());
    return;
  }
  terms_.push_back(x);
}

void QTSum::add(const QTSum& s) {
  for (const auto& x : s.terms_) add(x);
}

QTSum QTSum::operator+(const QTSum& o) const {
  QTSum r = *this;
  r.add(o);
  return r;
}

QTSum QTSum::operator-(const QTSum& o) const { return *this + (-o); }

QTSum QTSum::operator*(const QTFactored& x) const {
  QTSum r;
  for (const auto& y : terms_) r.add(y * x);
  return r;
}

QTSum QTSum::operator-() const {
  QTSum r;
  for (const auto& y : terms_) r.terms_.push_back(-y);
  return r;
}

BigRational qt_eval(const QTSum& s, const BigRational& q0, const BigRational& t0) {
  BigRational acc = 0;
  for (const auto& x : s.terms()) acc += qt_eval(x, q0, t0);
  return acc;
}

QTSum qt_substitute_inverse(const QTSum& s) {
  QTSum r;
  for (const auto& x : s.terms()) r.add(qt_substitute_inverse(x));
  return r;
}

QTSum qt_swap(const QTSum& s) {
  QTSum r;
  for (const auto& x : s.terms()) r.add(qt_swap(x));
  return r;
}

QTSum qt_limit(const QTSum& s, Limit which) {
  QTSum r;
  for (const auto& x : s.terms()) r.add(qt_limit(x, which));
  return r;
}

AlphaRational qt_jack_limit(const QTSum& s) {
  AlphaRational acc;
  for (const auto& x : s.terms()) acc = acc + qt_jack_limit(x);
  return acc;
}

std::string to_string(const QTSum& s) {
  if (s.terms().empty()) return "0";
  std::string out;
  for (const auto& x : s.terms()) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(x) + "]";
  }
  return out;
}

nlohmann::json to_json(const QTSum& s) {
  auto arr = nlohmann::json::array();
  for (const auto& x : s.terms()) arr.push_back(to_json(x));
  return arr;
}

}  // namespace qtrsk
