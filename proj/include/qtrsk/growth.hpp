#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qtrsk/distribution.hpp"
#include "qtrsk/local_rules.hpp"
#include "qtrsk/matrix.hpp"
#include "qtrsk/tableau.hpp"

namespace qtrsk {

// Partitions on the vertices (i, j), 0 <= i <= m, 0 <= j <= n, in matrix
// coordinates. Going down a column adds a horizontal strip, going right along
// a row adds a vertical strip.
struct DualGrowth {
  Matrix01 source;
  std::vector<std::vector<Partition>> grid;

  const Partition& at(int i, int j) const { return grid[i][j]; }
  int rows() const { return source.rows(); }
  int cols() const { return source.cols(); }
  // Right column read downwards, as an SSYT with entries <= m.
  Tableau P() const;
  // Bottom row read left to right, as a dual SSYT with entries <= n.
  Tableau Q() const;
  std::vector<Partition> right_column() const;
  std::vector<Partition> bottom_row() const;
};

// Checks the strip conditions and that every square is a valid local configuration
// for its matrix entry (|nu| - |lambda u rho| = |lambda n rho| - |mu| + A_ij).
bool is_dual_growth(const DualGrowth& g);

enum class GrowthRule { Qt, FRow, FCol };

// Local choices for the square with top-left mu, bottom-left lambda, top-right rho
// and entry a: each nu with its forward probability (1 for the classical rules).
// Sorted by nu.
std::vector<std::pair<Partition, QTFactored>> local_forward_choices(GrowthRule rule, const Partition& mu,
                                                                    const Partition& lambda, const Partition& rho,
                                                                    int a);
// Backward choices for the square with nu known: each (mu, a) with its backward probability.
struct BackwardChoice {
  Partition mu;
  int a = 0;
  QTFactored prob;
};
std::vector<BackwardChoice> local_backward_choices(const Partition& lambda, const Partition& rho, const Partition& nu);

// Visits every growth of A with the given north-west boundary (left column chain of
// length m+1 and top row chain of length n+1 sharing their first shape), filling
// squares in row-major order. The probability passed along is the product of the
// rule's local probabilities.
void for_each_growth(const Matrix01& a, const std::vector<Partition>& left, const std::vector<Partition>& top,
                     GrowthRule rule, const std::function<void(const DualGrowth&, const QTFactored&)>& visit);

std::vector<DualGrowth> enumerate_growths(const Matrix01& a);
// The unique growth under a deterministic rule.
DualGrowth classical_growth(const Matrix01& a, GrowthRule rule);

QTFactored growth_prob(const DualGrowth& g, Direction dir);

using TableauPair = std::pair<Tableau, Tableau>;

Distribution<TableauPair> forward_distribution(const Matrix01& a, const Mode& mode = Mode::qt());
// Pairs (P, Q) with P an SSYT with entries <= m and Q a dual SSYT with entries <= n
// of the same shape. Throws ShapeMismatch.
Distribution<Matrix01> backward_distribution(const Tableau& p, const Tableau& q, int m, int n,
                                             const Mode& mode = Mode::qt());
// Every growth ending at (P, Q), visited from the south-east corner.
void for_each_backward_growth(const Tableau& p, const Tableau& q, int m, int n,
                              const std::function<void(const DualGrowth&, const QTFactored&)>& visit);

// Outcome of a skew growth: the right column and the bottom row.
using ChainPair = std::pair<std::vector<Partition>, std::vector<Partition>>;
// Throws BoundaryMismatch if the chains do not fit the matrix or each other.
Distribution<ChainPair> skew_forward_distribution(const Matrix01& a, const std::vector<Partition>& left,
                                                  const std::vector<Partition>& top, const Mode& mode = Mode::qt());

// Conjugates every shape and swaps SSYT and dual SSYT.
Tableau transpose(const Tableau& t);
bool transpose_symmetry_check(const Matrix01& a);

// Distribution of the P-tableau alone.
Distribution<Tableau> p_marginal(const Matrix01& a, const Mode& mode);
// Compares the alpha-mode P-marginals of A and A with columns k, k+1 swapped.
// Throws ColumnConstraintViolated if A has a column with two 1s, unless
// enforce_column_constraint is false.
bool jack_swap_check(const Matrix01& a, int k, bool enforce_column_constraint = true);

// Two-column configurations used for the Jack swap argument: mu < rho by one cell,
// mu < lambda a horizontal strip. In I the 1s sit at (top, left) and (bottom, right),
// in II at (top, right) and (bottom, left). Returns the distribution of the bottom-right nu.
Distribution<Partition> two_column_distribution(const Partition& mu, const Partition& lambda, const Partition& rho,
                                                bool configuration_one, const Mode& mode);

}  // namespace qtrsk
