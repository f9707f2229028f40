#include "qtrsk/growth.hpp"

#include <algorithm>

namespace qtrsk {

namespace {

bool is_single_cell_step(const Partition& mu, const Partition& rho) {
  return contains(rho, mu) && rho.size() == mu.size() + 1;
}

void check_chain(const std::vector<Partition>& chain, bool horizontal, const char* what) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    bool ok = horizontal ? is_horizontal_strip(chain[i - 1], chain[i]) : is_vertical_strip(chain[i - 1], chain[i]);
    if (!ok)
      throw Error(Errc::BoundaryMismatch, std::string(what) + " step " + std::to_string(i) + " is not a " +
                                              (horizontal ? "horizontal" : "vertical") + " strip");
  }
}

}  // namespace

std::vector<Partition> DualGrowth::right_column() const {
  std::vector<Partition> out;
  for (int i = 0; i <= rows(); ++i) out.push_back(at(i, cols()));
  return out;
}

std::vector<Partition> DualGrowth::bottom_row() const {
  return grid[rows()];
}

Tableau DualGrowth::P() const { return Tableau(right_column(), Flavor::Ssyt); }
Tableau DualGrowth::Q() const { return Tableau(bottom_row(), Flavor::DualSsyt); }

bool is_dual_growth(const DualGrowth& g) {
  const int m = g.rows(), n = g.cols();
  if (static_cast<int>(g.grid.size()) != m + 1) return false;
  for (const auto& row : g.grid)
    if (static_cast<int>(row.size()) != n + 1) return false;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i < m && !is_horizontal_strip(g.at(i, j), g.at(i + 1, j))) return false;
      if (j < n && !is_vertical_strip(g.at(i, j), g.at(i, j + 1))) return false;
    }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      const Partition &mu = g.at(i - 1, j - 1), &la = g.at(i, j - 1), &rho = g.at(i - 1, j), &nu = g.at(i, j);
      int lhs = nu.size() - join(la, rho).size();
      int rhs = meet(la, rho).size() - mu.size() + g.source.at(i, j);
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<std::pair<Partition, QTFactored>> local_forward_choices(GrowthRule rule, const Partition& mu,
                                                                    const Partition& lambda, const Partition& rho,
                                                                    int a) {
  CornerFrame f(lambda, rho);
  std::vector<int> R = rset_of(f, mu);
  const int k = static_cast<int>(R.size()) + a;
  std::vector<std::pair<Partition, QTFactored>> out;
  if (k > f.d() + 1) return out;
  switch (rule) {
    case GrowthRule::Qt:
      for (auto& S : k_subsets(0, f.d(), k)) out.emplace_back(nu_of(f, S), forward_prob(f, {R, S}));
      break;
    case GrowthRule::FRow: out.emplace_back(nu_of(f, f_row_subset(f, R, k)), QTFactored()); break;
    case GrowthRule::FCol: out.emplace_back(nu_of(f, f_col_subset(f, R, k)), QTFactored()); break;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<BackwardChoice> local_backward_choices(const Partition& lambda, const Partition& rho,
                                                   const Partition& nu) {
  CornerFrame f(lambda, rho);
  std::vector<int> S = sset_of(f, nu);
  const int k = static_cast<int>(S.size());
  std::vector<BackwardChoice> out;
  for (int nr : {k, k - 1}) {
    if (nr < 0) continue;
    for (auto& R : k_subsets(1, f.d(), nr)) out.push_back({mu_of(f, R), k - nr, backward_prob(f, {R, S})});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.mu < y.mu; });
  return out;
}

void for_each_growth(const Matrix01& a, const std::vector<Partition>& left, const std::vector<Partition>& top,
                     GrowthRule rule, const std::function<void(const DualGrowth&, const QTFactored&)>& visit) {
  const int m = a.rows(), n = a.cols();
  if (static_cast<int>(left.size()) != m + 1 || static_cast<int>(top.size()) != n + 1)
    throw Error(Errc::BoundaryMismatch, "boundary chains must have lengths m+1 and n+1");
  if (left[0] != top[0]) throw Error(Errc::BoundaryMismatch, "boundary chains must share their first shape");
  check_chain(left, true, "left boundary");
  check_chain(top, false, "top boundary");

  DualGrowth g{a, std::vector<std::vector<Partition>>(m + 1, std::vector<Partition>(n + 1))};
  for (int i = 0; i <= m; ++i) g.grid[i][0] = left[i];
  for (int j = 0; j <= n; ++j) g.grid[0][j] = top[j];

  std::function<void(int, const QTFactored&)> rec = [&](int s, const QTFactored& prob) {
    if (s == m * n) {
      visit(g, prob);
      return;
    }
    const int i = s / n + 1, j = s % n + 1;
    for (auto& [nu, p] : local_forward_choices(rule, g.grid[i - 1][j - 1], g.grid[i][j - 1], g.grid[i - 1][j], a.at(i, j))) {
      g.grid[i][j] = nu;
      rec(s + 1, prob * p);
    }
  };
  rec(0, QTFactored());
}

std::vector<DualGrowth> enumerate_growths(const Matrix01& a) {
  std::vector<DualGrowth> out;
  for_each_growth(a, std::vector<Partition>(a.rows() + 1), std::vector<Partition>(a.cols() + 1), GrowthRule::Qt,
                  [&](const DualGrowth& g, const QTFactored&) { out.push_back(g); });
  return out;
}

DualGrowth classical_growth(const Matrix01& a, GrowthRule rule) {
  if (rule == GrowthRule::Qt) throw Error(Errc::InvalidArgument, "the qt rule is not deterministic");
  std::vector<DualGrowth> out;
  for_each_growth(a, std::vector<Partition>(a.rows() + 1), std::vector<Partition>(a.cols() + 1), rule,
                  [&](const DualGrowth& g, const QTFactored&) { out.push_back(g); });
  return out.at(0);
}

QTFactored growth_prob(const DualGrowth& g, Direction dir) {
  QTFactored p;
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j) {
      const Partition &mu = g.at(i - 1, j - 1), &la = g.at(i, j - 1), &rho = g.at(i - 1, j), &nu = g.at(i, j);
      p *= dir == Direction::Forward ? square_forward(mu, la, rho, nu) : square_backward(mu, la, rho, nu);
    }
  return p;
}

Distribution<TableauPair> forward_distribution(const Matrix01& a, const Mode& mode) {
  Distribution<TableauPair> d(mode);
  for_each_growth(a, std::vector<Partition>(a.rows() + 1), std::vector<Partition>(a.cols() + 1), GrowthRule::Qt,
                  [&](const DualGrowth& g, const QTFactored& p) { d.add({g.P(), g.Q()}, p); });
  d.check_normalized("forward distribution of " + to_string(a));
  return d;
}

void for_each_backward_growth(const Tableau& p, const Tableau& q, int m, int n,
                              const std::function<void(const DualGrowth&, const QTFactored&)>& visit) {
  if (p.flavor() != Flavor::Ssyt || q.flavor() != Flavor::DualSsyt)
    throw Error(Errc::InvalidArgument, "expected an SSYT P and a dual SSYT Q");
  if (p.shape() != q.shape())
    throw Error(Errc::ShapeMismatch, "P has shape " + to_string(p.shape()) + ", Q has " + to_string(q.shape()));
  Tableau pp = p.with_max_entry(m), qq = q.with_max_entry(n);
  if (pp.max_entry() != m || qq.max_entry() != n)
    throw Error(Errc::InvalidArgument, "tableau entries exceed the matrix dimensions");

  DualGrowth g{Matrix01(m, n), std::vector<std::vector<Partition>>(m + 1, std::vector<Partition>(n + 1))};
  for (int i = 0; i <= m; ++i) g.grid[i][n] = pp.chain()[i];
  for (int j = 0; j <= n; ++j) g.grid[m][j] = qq.chain()[j];

  std::function<void(int, const QTFactored&)> rec = [&](int s, const QTFactored& prob) {
    if (s < 0) {
      visit(g, prob);
      return;
    }
    const int i = s / n + 1, j = s % n + 1;
    for (auto& c : local_backward_choices(g.grid[i][j - 1], g.grid[i - 1][j], g.grid[i][j])) {
      if ((i == 1 || j == 1) && !c.mu.empty()) continue;
      g.grid[i - 1][j - 1] = c.mu;
      g.source.set(i, j, c.a);
      rec(s - 1, prob * c.prob);
    }
  };
  rec(m * n - 1, QTFactored());
}

Distribution<Matrix01> backward_distribution(const Tableau& p, const Tableau& q, int m, int n, const Mode& mode) {
  Distribution<Matrix01> d(mode);
  for_each_backward_growth(p, q, m, n, [&](const DualGrowth& g, const QTFactored& x) { d.add(g.source, x); });
  d.check_normalized("backward distribution of (" + to_string(p) + ", " + to_string(q) + ")");
  return d;
}

Distribution<ChainPair> skew_forward_distribution(const Matrix01& a, const std::vector<Partition>& left,
                                                  const std::vector<Partition>& top, const Mode& mode) {
  Distribution<ChainPair> d(mode);
  for_each_growth(a, left, top, GrowthRule::Qt,
                  [&](const DualGrowth& g, const QTFactored& p) { d.add({g.right_column(), g.bottom_row()}, p); });
  d.check_normalized("skew forward distribution of " + to_string(a));
  return d;
}

Tableau transpose(const Tableau& t) {
  std::vector<Partition> chain;
  for (const auto& s : t.chain()) chain.push_back(conjugate(s));
  Flavor f = t.flavor() == Flavor::Ssyt ? Flavor::DualSsyt : t.flavor() == Flavor::DualSsyt ? Flavor::Ssyt : t.flavor();
  return Tableau(chain, f);
}

bool transpose_symmetry_check(const Matrix01& a) {
  auto da = forward_distribution(a);
  auto dt = forward_distribution(a.transpose());
  Distribution<TableauPair> mapped;
  for (const auto& [pq, v] : da.support())
    mapped.add({transpose(pq.second), transpose(pq.first)}, Value(qt_substitute_inverse(qt_swap(v.qt()))));
  return same_distribution(mapped, dt);
}

Distribution<Tableau> p_marginal(const Matrix01& a, const Mode& mode) {
  return forward_distribution(a, mode).map_outcomes([](const TableauPair& pq) { return pq.first; });
}

bool jack_swap_check(const Matrix01& a, int k, bool enforce_column_constraint) {
  if (enforce_column_constraint && !a.at_most_one_per_column())
    throw Error(Errc::ColumnConstraintViolated, to_string(a) + " has a column with more than one 1");
  return same_distribution(p_marginal(a, Mode::alpha()), p_marginal(a.swap_columns(k), Mode::alpha()));
}

Distribution<Partition> two_column_distribution(const Partition& mu, const Partition& lambda, const Partition& rho,
                                                bool configuration_one, const Mode& mode) {
  if (!is_single_cell_step(mu, rho)) throw Error(Errc::InvalidArgument, "rho must add one cell to mu");
  if (!is_horizontal_strip(mu, lambda)) throw Error(Errc::NotHorizontalStrip, "lambda/mu must be a horizontal strip");
  Matrix01 a(1, 2);
  a.set(1, configuration_one ? 2 : 1, 1);
  std::vector<Partition> top = configuration_one ? std::vector<Partition>{mu, rho, rho} : std::vector<Partition>{mu, mu, rho};
  return skew_forward_distribution(a, {mu, lambda}, top, mode).map_outcomes([](const ChainPair& c) {
    return c.second.back();
  });
}

}  // namespace qtrsk
