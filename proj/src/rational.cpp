#include "qtrsk/rational.hpp"

#include <cctype>

#include "qtrsk/error.hpp"

namespace qtrsk {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::IncomparablePoints: return "IncomparablePoints";
    case Errc::DivideByZero: return "DivideByZero";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::LimitDiverges: return "LimitDiverges";
    case Errc::JackLimitUndefined: return "JackLimitUndefined";
    case Errc::CellOutsideShape: return "CellOutsideShape";
    case Errc::NotContained: return "NotContained";
    case Errc::IncompatiblePair: return "IncompatiblePair";
    case Errc::NotHorizontalStrip: return "NotHorizontalStrip";
    case Errc::NotVerticalStrip: return "NotVerticalStrip";
    case Errc::NotDecomposable: return "NotDecomposable";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BoundaryMismatch: return "BoundaryMismatch";
    case Errc::ColumnConstraintViolated: return "ColumnConstraintViolated";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotNormalized: return "NotNormalized";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error(Errc::ParseError, "bad rational literal '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  BigInt d(std::string(den), 10);
  if (d == 0) throw Error(Errc::DivideByZero, "zero denominator in '" + std::string(text) + "'");
  BigRational r(BigInt(n, 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& r) { return r.get_str(); }

BigRational pow(const BigRational& r, long e) {
  if (e == 0) return 1;
  if (r == 0) {
    if (e < 0) throw Error(Errc::DivideByZero, "0 raised to a negative power");
    return 0;
  }
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), n);
  BigRational out = e < 0 ? BigRational(den, num) : BigRational(num, den);
  out.canonicalize();
  return out;
}

}  // namespace qtrsk
