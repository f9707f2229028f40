#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtrsk {

enum class Errc {
  EqualPoints,
  IncomparablePoints,
  DivideByZero,
  PoleAtPoint,
  LimitDiverges,
  JackLimitUndefined,
  CellOutsideShape,
  NotContained,
  IncompatiblePair,
  NotHorizontalStrip,
  NotVerticalStrip,
  NotDecomposable,
  ShapeMismatch,
  BoundaryMismatch,
  ColumnConstraintViolated,
  ParameterOutOfRange,
  ParseError,
  UnknownSuite,
  InvalidArgument,
  NotNormalized,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qtrsk
