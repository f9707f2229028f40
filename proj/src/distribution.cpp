#include "qtrsk/distribution.hpp"

namespace qtrsk {

std::string_view mode_name(ValueMode m) {
  switch (m) {
    case ValueMode::QtExact: return "qt";
    case ValueMode::Alpha: return "alpha";
    case ValueMode::Numeric: return "numeric";
  }
  return "?";
}

Value::Value(const Mode& m) {
  switch (m.kind) {
    case ValueMode::QtExact: v_ = QTSum(); break;
    case ValueMode::Alpha: v_ = AlphaRational(); break;
    case ValueMode::Numeric: v_ = BigRational(0); break;
  }
}

Value::Value(const QTFactored& x, const Mode& m) {
  switch (m.kind) {
    case ValueMode::QtExact: v_ = QTSum(x); break;
    case ValueMode::Alpha: v_ = qt_jack_limit(x); break;
    case ValueMode::Numeric: v_ = qt_eval(x, m.q0, m.t0); break;
  }
}

ValueMode Value::kind() const {
  switch (v_.index()) {
    case 0: return ValueMode::QtExact;
    case 1: return ValueMode::Alpha;
    default: return ValueMode::Numeric;
  }
}

Value& Value::operator+=(const Value& o) {
  if (kind() != o.kind()) throw Error(Errc::InvalidArgument, "adding values of different modes");
  switch (kind()) {
    case ValueMode::QtExact: std::get<QTSum>(v_) += o.qt(); break;
    case ValueMode::Alpha: std::get<AlphaRational>(v_) = alpha() + o.alpha(); break;
    case ValueMode::Numeric: std::get<BigRational>(v_) += o.numeric(); break;
  }
  return *this;
}

bool Value::is_zero() const {
  switch (kind()) {
    case ValueMode::QtExact: return qt().is_zero();
    case ValueMode::Alpha: return alpha().is_zero();
    default: return numeric() == 0;
  }
}

bool Value::is_one() const {
  switch (kind()) {
    case ValueMode::QtExact: return qt().equals(QTFactored(1));
    case ValueMode::Alpha: return alpha() == AlphaRational(1);
    default: return numeric() == 1;
  }
}

bool Value::equals(const Value& o) const {
  if (kind() != o.kind()) throw Error(Errc::InvalidArgument, "comparing values of different modes");
  switch (kind()) {
    case ValueMode::QtExact: return qt().equals(o.qt());
    case ValueMode::Alpha: return alpha() == o.alpha();
    default: return numeric() == o.numeric();
  }
}

bool Value::equals(const QTFactored& x) const {
  if (kind() != ValueMode::QtExact) throw Error(Errc::InvalidArgument, "value is not in qt mode");
  return qt().equals(x);
}

bool Value::equals(const AlphaRational& x) const {
  if (kind() != ValueMode::Alpha) throw Error(Errc::InvalidArgument, "value is not in alpha mode");
  return alpha() == x;
}

std::string to_string(const Value& v) {
  switch (v.kind()) {
    case ValueMode::QtExact: return to_string(v.qt());
    case ValueMode::Alpha: return to_string(v.alpha());
    default: return to_string(v.numeric());
  }
}

nlohmann::json to_json(const Value& v) {
  switch (v.kind()) {
    case ValueMode::QtExact: return to_json(v.qt());
    default: return to_string(v);
  }
}

}  // namespace qtrsk
