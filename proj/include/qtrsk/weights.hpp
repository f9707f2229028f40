#pragma once

#include <map>
#include <vector>

#include "qtrsk/partition.hpp"
#include "qtrsk/qt_sum.hpp"
#include "qtrsk/tableau.hpp"

namespace qtrsk {

// prod over R - C of b_mu / b_lambda; mu < lambda horizontal.
QTFactored psi(const Partition& lambda, const Partition& mu);
// prod over C - R of b_rho / b_mu; mu <' rho vertical.
QTFactored phi_star(const Partition& rho, const Partition& mu);
// prod over C of b_lambda / b_mu; mu contained in lambda.
QTFactored phi(const Partition& lambda, const Partition& mu);

enum class WeightKind { Psi, PhiStar, Phi };

QTFactored tableau_weight(const Tableau& t, WeightKind kind);

// Finite-variable monomial expansions, keyed by content vector of length m.
//   P      : sum over SSYT(lambda) of psi_T
//   Q      : sum over SSYT(lambda) of phi_T
//   PDual  : P_{lambda'}(x; t, q) as a sum over dual SSYT(lambda) of phi*_T
enum class MacdonaldKind { P, Q, PDual };

using Content = std::vector<int>;

std::map<Content, QTSum> macdonald_expanded(MacdonaldKind kind, const Partition& lambda, int m);
std::map<Content, BigRational> macdonald_eval(MacdonaldKind kind, const Partition& lambda, int m,
                                              const BigRational& q0, const BigRational& t0);

}  // namespace qtrsk
