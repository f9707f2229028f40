#pragma once

#include <set>
#include <vector>

#include <json.hpp>

#include "qtrsk/partition.hpp"
#include "qtrsk/qt_factored.hpp"

namespace qtrsk {

// Corner points of a compatible pair (lambda, rho) as monomials q^x t^y.
// A cell (c, r) has lower-right point q^(W-c+1) t^(r-1) and upper-left point
// q^(W-c) t^r with W = (lambda u rho)_1 + 1.
class CornerFrame {
 public:
  CornerFrame(const Partition& lambda, const Partition& rho);

  const Partition& lambda() const { return lambda_; }
  const Partition& rho() const { return rho_; }
  int d() const { return static_cast<int>(removable_.size()); }
  // 1-based, bottom to top
  const Cell& removable(int i) const { return removable_.at(i - 1); }
  // 0-based, bottom to top
  const Cell& addable(int j) const { return addable_.at(j); }

  MonomialQT R(int i) const { return r_.at(i - 1); }
  MonomialQT I(int i) const { return R(i) * MonomialQT{-1, 1}; }
  MonomialQT S(int j) const { return s_.at(j); }
  MonomialQT O(int j) const { return S(j); }
  MonomialQT Sbar(int j) const { return S(j) * MonomialQT{-1, 1}; }

 private:
  Partition lambda_, rho_;
  std::vector<Cell> removable_, addable_;
  std::vector<MonomialQT> r_, s_;
};

CornerFrame corner_frame(const Partition& lambda, const Partition& rho);
nlohmann::json to_json(const CornerFrame& f);

// R within 1..d, S within 0..d, both sorted.
struct SubsetPair {
  std::vector<int> R;
  std::vector<int> S;
  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

Partition mu_of(const CornerFrame& f, const std::vector<int>& R);
Partition nu_of(const CornerFrame& f, const std::vector<int>& S);
std::vector<int> rset_of(const CornerFrame& f, const Partition& mu);  // NotDecomposable
std::vector<int> sset_of(const CornerFrame& f, const Partition& nu);  // NotDecomposable

QTFactored forward_prob(const CornerFrame& f, const SubsetPair& p);
QTFactored backward_prob(const CornerFrame& f, const SubsetPair& p);

// Heights along the two lattice paths through D_0 U_1 D_1 ... U_d D_d.
struct PathHeights {
  std::vector<int> u;  // u[i] for i in 1..d (index 0 unused): start height of U_i
  std::vector<int> d;  // d[j] for j in 0..d: end height of D_j
};
PathHeights path_heights(int d, const SubsetPair& p);
// tau including its sign, as a signed monomial.
QTFactored tau(const CornerFrame& f, const SubsetPair& p);
MonomialQT tau_monomial(const CornerFrame& f, const SubsetPair& p);

enum class Direction { Forward, Backward };

// Hook-length form tau * alpha beta / gamma.
QTFactored alpha_beta_gamma_prob(const CornerFrame& f, const SubsetPair& p, Direction dir);

// omega(mu) / omega-bar(nu) from the branching coefficients.
QTFactored weight_ratio(const Partition& mu, const Partition& lambda, const Partition& rho, const Partition& nu);
// The same ratio reorganized around the skew shapes (lambda n rho)/mu and nu/(lambda u rho).
QTFactored weight_ratio_regrouped(const Partition& mu, const Partition& lambda, const Partition& rho,
                                  const Partition& nu);

// Row or column type of a cell: which of the four skew shapes share its row/column.
struct CellType {
  bool lambda = false;  // lambda / (lambda n rho)
  bool rho = false;     // rho / (lambda n rho)
  bool minus = false;   // (lambda n rho) / mu
  bool plus = false;    // nu / (lambda u rho)
  friend bool operator==(const CellType&, const CellType&) = default;
};
std::pair<CellType, CellType> cell_type(const Partition& mu, const Partition& lambda, const Partition& rho,
                                        const Partition& nu, const Cell& c);
QTFactored cell_weight_table(const Partition& mu, const Partition& lambda, const Partition& rho, const Partition& nu,
                             const Cell& c);

// Closed forms at t = 0 and q = 0.
std::vector<int> shift_set(const std::vector<int>& R, const std::vector<int>& S, int d);
QTFactored forward_prob_qwhittaker(const CornerFrame& f, const SubsetPair& p);
QTFactored forward_prob_hall_littlewood(const CornerFrame& f, const SubsetPair& p);

// Classical deterministic rules on subsets: the S chosen for a given R and k.
std::vector<int> f_row_subset(const CornerFrame& f, const std::vector<int>& R, int k);
std::vector<int> f_col_subset(const CornerFrame& f, const std::vector<int>& R, int k);
Partition f_row(const Partition& lambda, const Partition& rho, int k, const Partition& mu);
Partition f_col(const Partition& lambda, const Partition& rho, int k, const Partition& mu);

AlphaRational jack_forward_prob(const CornerFrame& f, const SubsetPair& p);

// Probabilities of a single growth square mu (top-left), rho (top-right),
// lambda (bottom-left), nu (bottom-right).
QTFactored square_forward(const Partition& mu, const Partition& lambda, const Partition& rho, const Partition& nu);
QTFactored square_backward(const Partition& mu, const Partition& lambda, const Partition& rho, const Partition& nu);

// Substituting q = t = x and letting x -> 0 (or x -> infinity).
QTFactored qt_diagonal_limit(const QTFactored& x, bool to_infinity);

// All subsets of {lo..hi} of size k, in lexicographic order.
std::vector<std::vector<int>> k_subsets(int lo, int hi, int k);

}  // namespace qtrsk
