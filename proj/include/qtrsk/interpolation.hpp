#pragma once

#include <vector>

#include "qtrsk/rational.hpp"

namespace qtrsk {

// p'_{R,S}(a, b) for R, S subsets of {0..d} of equal size; a, b of length d+1
// with pairwise distinct entries.
BigRational interpolation_weight(const std::vector<int>& R, const std::vector<int>& S, const std::vector<BigRational>& a,
                                 const std::vector<BigRational>& b);
// Its limit as b_0 -> infinity; b_0 is ignored.
BigRational interpolation_weight_limit(const std::vector<int>& R, const std::vector<int>& S,
                                       const std::vector<BigRational>& a, const std::vector<BigRational>& b);

}  // namespace qtrsk
