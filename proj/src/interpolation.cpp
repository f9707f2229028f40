#include "qtrsk/interpolation.hpp"

#include <algorithm>

#include "qtrsk/error.hpp"

namespace qtrsk {

namespace {

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

BigRational weight(const std::vector<int>& R, const std::vector<int>& S, const std::vector<BigRational>& a,
                   const std::vector<BigRational>& b, bool drop_b0) {
  if (a.size() != b.size() || a.empty()) throw Error(Errc::InvalidArgument, "a and b must have length d+1");
  const int d = static_cast<int>(a.size()) - 1;
  BigRational num = 1, den = 1;
  for (int i = drop_b0 ? 1 : 0; i <= d; ++i) {
    if (has(R, i)) continue;
    for (int j : S) num *= a[j] - b[i];
    for (int j : R)
      if (!(drop_b0 && j == 0)) den *= b[j] - b[i];
  }
  for (int i = 0; i <= d; ++i) {
    if (has(S, i)) continue;
    for (int j : R)
      if (!(drop_b0 && j == 0)) num *= b[j] - a[i];
    for (int j : S) den *= a[j] - a[i];
  }
  if (den == 0) throw Error(Errc::DivideByZero, "interpolation nodes are not distinct");
  return num / den;
}

}  // namespace

BigRational interpolation_weight(const std::vector<int>& R, const std::vector<int>& S, const std::vector<BigRational>& a,
                                 const std::vector<BigRational>& b) {
  return weight(R, S, a, b, false);
}

BigRational interpolation_weight_limit(const std::vector<int>& R, const std::vector<int>& S,
                                       const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
  return weight(R, S, a, b, true);
}

}  // namespace qtrsk
