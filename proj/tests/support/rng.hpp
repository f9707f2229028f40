#pragma once

// Seeded generators for property tests.

#include <ostream>
#include <random>
#include <vector>

#include "qtrsk/partition.hpp"
#include "qtrsk/qt_factored.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }

inline qtrsk::BigRational fraction(long n, long d) {
  qtrsk::BigRational x(n, d);
  x.canonicalize();
  return x;
}

inline qtrsk::BigRational rational(Rng& r, int lo_num, int hi_num, int max_den) {
  return fraction(uniform(r, lo_num, hi_num), uniform(r, 1, max_den));
}

// Rational strictly between 0 and 1.
inline qtrsk::BigRational unit_rational(Rng& r) {
  int den = uniform(r, 2, 40);
  return fraction(uniform(r, 1, den - 1), den);
}

inline qtrsk::MonomialQT monomial(Rng& r, int lo, int hi) { return {uniform(r, lo, hi), uniform(r, lo, hi)}; }

inline qtrsk::QTFactored factored(Rng& r, int max_factors = 5) {
  qtrsk::FactorMap f;
  int n = uniform(r, 0, max_factors);
  for (int i = 0; i < n; ++i) {
    int a = uniform(r, 0, 3), b = uniform(r, 0, 3);
    if (a == 0 && b == 0) b = 1;
    f[{a, b}] += uniform(r, 0, 1) ? 1 : -1;
  }
  int c = uniform(r, -4, 4);
  if (c == 0) c = 1;
  return qtrsk::QTFactored(c, monomial(r, -2, 2), f);
}

inline qtrsk::Partition partition(Rng& r, int max_size) {
  auto all = qtrsk::partitions_of(uniform(r, 0, max_size));
  return all[uniform(r, 0, static_cast<int>(all.size()) - 1)];
}

}  // namespace gen

namespace qtrsk {
inline void PrintTo(const Partition& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Cell& c, std::ostream* os) { *os << to_string(c); }
inline void PrintTo(const QTFactored& x, std::ostream* os) { *os << to_string(x); }
}  // namespace qtrsk
