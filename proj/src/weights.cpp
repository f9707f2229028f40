#include "qtrsk/weights.hpp"

#include "qtrsk/error.hpp"

namespace qtrsk {

QTFactored psi(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(mu, lambda))
    throw Error(Errc::NotHorizontalStrip, to_string(lambda) + " / " + to_string(mu));
  auto s = skew_cell_sets(lambda, mu);
  QTFactored r;
  for (const Cell& c : s.r_cells)
    if (!s.c_cells.count(c)) r *= b_ratio(mu, c) / b_ratio(lambda, c);
  return r;
}

QTFactored phi_star(const Partition& rho, const Partition& mu) {
  if (!is_vertical_strip(mu, rho)) throw Error(Errc::NotVerticalStrip, to_string(rho) + " / " + to_string(mu));
  auto s = skew_cell_sets(rho, mu);
  QTFactored r;
  for (const Cell& c : s.c_cells)
    if (!s.r_cells.count(c)) r *= b_ratio(rho, c) / b_ratio(mu, c);
  return r;
}

QTFactored phi(const Partition& lambda, const Partition& mu) {
  auto s = skew_cell_sets(lambda, mu);
  QTFactored r;
  for (const Cell& c : s.c_cells) r *= b_ratio(lambda, c) / b_ratio(mu, c);
  return r;
}

QTFactored tableau_weight(const Tableau& t, WeightKind kind) {
  const auto& ch = t.chain();
  QTFactored r;
  for (std::size_t i = 1; i < ch.size(); ++i) {
    switch (kind) {
      case WeightKind::Psi: r *= psi(ch[i], ch[i - 1]); break;
      case WeightKind::PhiStar: r *= phi_star(ch[i], ch[i - 1]); break;
      case WeightKind::Phi: r *= phi(ch[i], ch[i - 1]); break;
    }
  }
  return r;
}

namespace {

template <class F>
void for_each_weighted(MacdonaldKind kind, const Partition& lambda, int m, F&& f) {
  Flavor flavor = kind == MacdonaldKind::PDual ? Flavor::DualSsyt : Flavor::Ssyt;
  WeightKind wk = kind == MacdonaldKind::P ? WeightKind::Psi : kind == MacdonaldKind::Q ? WeightKind::Phi : WeightKind::PhiStar;
  for (const auto& t : enumerate_tableaux(lambda, m, flavor)) f(t.content(), tableau_weight(t, wk));
}

}  // namespace

std::map<Content, QTSum> macdonald_expanded(MacdonaldKind kind, const Partition& lambda, int m) {
  std::map<Content, QTSum> out;
  for_each_weighted(kind, lambda, m, [&](const Content& c, const QTFactored& w) { out[c].add(w); });
  return out;
}

std::map<Content, BigRational> macdonald_eval(MacdonaldKind kind, const Partition& lambda, int m,
                                              const BigRational& q0, const BigRational& t0) {
  std::map<Content, BigRational> out;
  for_each_weighted(kind, lambda, m, [&](const Content& c, const QTFactored& w) { out[c] += qt_eval(w, q0, t0); });
  return out;
}

}  // namespace qtrsk
