#include "qtrsk/local_rules.hpp"

#include <algorithm>

#include "qtrsk/error.hpp"
#include "qtrsk/weights.hpp"

namespace qtrsk {

namespace {

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

QTFactored diff(const MonomialQT& a, const MonomialQT& b) { return qt_from_point_difference(a, b); }

// 1 - m
QTFactored one_minus(const MonomialQT& m) { return qt_from_point_difference(MonomialQT{}, m); }

void check_pair(const CornerFrame& f, const SubsetPair& p) {
  auto sorted_unique = [](const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end()) && std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!sorted_unique(p.R) || !sorted_unique(p.S)) throw Error(Errc::InvalidArgument, "subsets must be sorted sets");
  for (int r : p.R)
    if (r < 1 || r > f.d()) throw Error(Errc::InvalidArgument, "R index out of range");
  for (int s : p.S)
    if (s < 0 || s > f.d()) throw Error(Errc::InvalidArgument, "S index out of range");
  if (p.S.size() != p.R.size() && p.S.size() != p.R.size() + 1)
    throw Error(Errc::InvalidArgument, "need |S| = |R| or |R| + 1");
}

std::set<Cell> minus(const std::set<Cell>& a, const std::set<Cell>& b) {
  std::set<Cell> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<Cell> intersect(const std::set<Cell>& a, const std::set<Cell>& b) {
  std::set<Cell> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

template <class F>
QTFactored prod_over(const std::set<Cell>& cells, F&& f) {
  QTFactored r;
  for (const Cell& c : cells) r *= f(c);
  return r;
}

}  // namespace

CornerFrame::CornerFrame(const Partition& lambda, const Partition& rho)
    : lambda_(lambda), rho_(rho), removable_(removable_inner_corners(lambda, rho)),
      addable_(addable_outer_corners(lambda, rho)) {
  const int w = join(lambda, rho).row(1) + 1;
  auto lower_right = [w](const Cell& c) { return MonomialQT{w - c.x + 1, c.y - 1}; };
  for (const Cell& c : removable_) r_.push_back(lower_right(c));
  for (const Cell& c : addable_) s_.push_back(lower_right(c));
}

CornerFrame corner_frame(const Partition& lambda, const Partition& rho) { return CornerFrame(lambda, rho); }

nlohmann::json to_json(const CornerFrame& f) {
  auto pts = [](auto get, int lo, int hi) {
    auto a = nlohmann::json::array();
    for (int i = lo; i <= hi; ++i) {
      MonomialQT m = get(i);
      a.push_back({m.eq, m.et});
    }
    return a;
  };
  nlohmann::json j;
  j["lambda"] = to_string(f.lambda());
  j["rho"] = to_string(f.rho());
  j["d"] = f.d();
  j["R"] = pts([&](int i) { return f.R(i); }, 1, f.d());
  j["I"] = pts([&](int i) { return f.I(i); }, 1, f.d());
  j["S"] = pts([&](int i) { return f.S(i); }, 0, f.d());
  j["O"] = pts([&](int i) { return f.O(i); }, 0, f.d());
  j["Sbar"] = pts([&](int i) { return f.Sbar(i); }, 0, f.d());
  j["Rbar"] = j["I"];
  return j;
}

Partition mu_of(const CornerFrame& f, const std::vector<int>& R) {
  Partition m = meet(f.lambda(), f.rho());
  for (int i : R) m = remove_cell(m, f.removable(i));
  return m;
}

Partition nu_of(const CornerFrame& f, const std::vector<int>& S) {
  Partition n = join(f.lambda(), f.rho());
  for (int j : S) n = add_cell(n, f.addable(j));
  return n;
}

std::vector<int> rset_of(const CornerFrame& f, const Partition& mu) {
  Partition m = meet(f.lambda(), f.rho());
  if (!contains(m, mu)) throw Error(Errc::NotDecomposable, to_string(mu) + " not inside " + to_string(m));
  std::vector<int> out;
  for (const Cell& c : skew_cells(m, mu)) {
    int found = 0;
    for (int i = 1; i <= f.d(); ++i)
      if (f.removable(i) == c) found = i;
    if (!found) throw Error(Errc::NotDecomposable, to_string(c) + " is not a removable corner");
    out.push_back(found);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> sset_of(const CornerFrame& f, const Partition& nu) {
  Partition j = join(f.lambda(), f.rho());
  if (!contains(nu, j)) throw Error(Errc::NotDecomposable, to_string(nu) + " does not contain " + to_string(j));
  std::vector<int> out;
  for (const Cell& c : skew_cells(nu, j)) {
    int found = -1;
    for (int i = 0; i <= f.d(); ++i)
      if (f.addable(i) == c) found = i;
    if (found < 0) throw Error(Errc::NotDecomposable, to_string(c) + " is not an addable corner");
    out.push_back(found);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

QTFactored prob_impl(const CornerFrame& f, const SubsetPair& p, Direction dir) {
  check_pair(f, p);
  const int d = f.d();
  QTFactored r;
  for (int s : p.S) {
    MonomialQT x = dir == Direction::Forward ? f.S(s) : f.Sbar(s);
    for (int i = 1; i <= d; ++i)
      if (!has(p.R, i)) r *= diff(x, f.I(i));
    for (int j = 0; j <= d; ++j)
      if (!has(p.S, j)) r /= diff(x, f.O(j));
  }
  for (int rr : p.R) {
    MonomialQT x = dir == Direction::Forward ? f.R(rr) : f.I(rr);
    for (int j = 0; j <= d; ++j)
      if (!has(p.S, j)) r *= diff(x, f.O(j));
    for (int i = 1; i <= d; ++i)
      if (!has(p.R, i)) r /= diff(x, f.I(i));
  }
  return r;
}

}  // namespace

QTFactored forward_prob(const CornerFrame& f, const SubsetPair& p) { return prob_impl(f, p, Direction::Forward); }
QTFactored backward_prob(const CornerFrame& f, const SubsetPair& p) { return prob_impl(f, p, Direction::Backward); }

PathHeights path_heights(int d, const SubsetPair& p) {
  PathHeights h;
  h.u.assign(d + 1, 0);
  h.d.assign(d + 1, 0);
  const int nr = static_cast<int>(p.R.size()), ns = static_cast<int>(p.S.size());
  // Start heights chosen so both paths end at height 0.
  int h1 = ns - nr;
  int h2 = (d + 1 - ns) - (d - nr);
  for (int j = 0; j <= d; ++j) {
    if (j >= 1) {
      int& cur = has(p.R, j) ? h1 : h2;
      h.u[j] = cur;
      ++cur;
    }
    int& cur = has(p.S, j) ? h1 : h2;
    --cur;
    h.d[j] = cur;
  }
  return h;
}

QTFactored tau(const CornerFrame& f, const SubsetPair& p) {
  check_pair(f, p);
  PathHeights h = path_heights(f.d(), p);
  MonomialQT m;
  int sign = 0;
  for (int j = 0; j <= f.d(); ++j) {
    if (has(p.S, j)) {
      m = m * f.S(j).pow(h.d[j]);
    } else {
      m = m * f.O(j).pow(h.d[j]);
      sign += h.d[j];
    }
  }
  for (int i = 1; i <= f.d(); ++i) {
    if (has(p.R, i)) {
      m = m * f.R(i).pow(-h.u[i]);
    } else {
      m = m * f.I(i).pow(-h.u[i]);
      sign -= h.u[i];
    }
  }
  return QTFactored::monomial(m, sign % 2 == 0 ? 1 : -1);
}

MonomialQT tau_monomial(const CornerFrame& f, const SubsetPair& p) { return tau(f, p).mono(); }

QTFactored alpha_beta_gamma_prob(const CornerFrame& f, const SubsetPair& p, Direction dir) {
  check_pair(f, p);
  const Partition& la = f.lambda();
  const Partition& rho = f.rho();
  Partition mu = mu_of(f, p.R), nu = nu_of(f, p.S);
  Partition M = meet(la, rho), J = join(la, rho);
  auto nuJ = skew_cell_sets(nu, J), Jrho = skew_cell_sets(J, rho), Jla = skew_cell_sets(J, la);
  auto Mmu = skew_cell_sets(M, mu), laM = skew_cell_sets(la, M), rhoM = skew_cell_sets(rho, M);
  bool fw = dir == Direction::Forward;
  auto lo = [&](const Partition& k, const Cell& c) { return fw ? hook_lower(k, c) : hook_upper(k, c); };
  auto up = [&](const Partition& k, const Cell& c) { return fw ? hook_upper(k, c) : hook_lower(k, c); };

  QTFactored alpha = prod_over(minus(nuJ.r_cells, Jrho.c_cells), [&](const Cell& c) { return lo(la, c) / lo(nu, c); }) *
                     prod_over(minus(nuJ.c_cells, Jla.r_cells), [&](const Cell& c) { return up(rho, c) / up(nu, c); });
  QTFactored beta = prod_over(minus(Mmu.r_cells, laM.c_cells), [&](const Cell& c) { return lo(rho, c) / lo(mu, c); }) *
                    prod_over(minus(Mmu.c_cells, rhoM.r_cells), [&](const Cell& c) { return up(la, c) / up(mu, c); });
  auto both = [](const Partition& k, const Cell& c) { return hook_lower(k, c) * hook_upper(k, c); };
  QTFactored gamma =
      prod_over(intersect(nuJ.r_cells, Mmu.c_cells), [&](const Cell& c) { return both(la, c); }) *
      prod_over(intersect(nuJ.c_cells, Mmu.r_cells), [&](const Cell& c) { return both(rho, c); }) /
      (prod_over(intersect(nuJ.r_cells, nuJ.c_cells), [&](const Cell& c) { return both(nu, c); }) *
       prod_over(intersect(Mmu.r_cells, Mmu.c_cells), [&](const Cell& c) { return both(mu, c); }));
  return tau(f, p) * alpha * beta / gamma;
}

QTFactored weight_ratio(const Partition& mu, const Partition& lambda, const Partition& rho, const Partition& nu) {
  return psi(lambda, mu) * phi_star(rho, mu) / (psi(nu, rho) * phi_star(nu, lambda));
}

QTFactored weight_ratio_regrouped(const Partition& mu, const Partition& lambda, const Partition& rho,
                                  const Partition& nu) {
  Partition M = meet(lambda, rho), J = join(lambda, rho);
  auto Mmu = skew_cell_sets(M, mu), laM = skew_cell_sets(lambda, M), rhoM = skew_cell_sets(rho, M);
  auto nuJ = skew_cell_sets(nu, J), Jrho = skew_cell_sets(J, rho), Jla = skew_cell_sets(J, lambda);
  return prod_over(minus(Mmu.r_cells, laM.c_cells), [&](const Cell& c) { return b_ratio(mu, c) / b_ratio(rho, c); }) *
         prod_over(minus(Mmu.c_cells, rhoM.r_cells), [&](const Cell& c) { return b_ratio(lambda, c) / b_ratio(mu, c); }) *
         prod_over(minus(nuJ.r_cells, Jrho.c_cells), [&](const Cell& c) { return b_ratio(nu, c) / b_ratio(lambda, c); }) *
         prod_over(minus(nuJ.c_cells, Jla.r_cells), [&](const Cell& c) { return b_ratio(rho, c) / b_ratio(nu, c); });
}

std::pair<CellType, CellType> cell_type(const Partition& mu, const Partition& lambda, const Partition& rho,
                                        const Partition& nu, const Cell& c) {
  Partition M = meet(lambda, rho), J = join(lambda, rho);
  CellType row, col;
  auto mark = [&](const std::vector<Cell>& cells, bool CellType::*field) {
    for (const Cell& x : cells) {
      if (x.y == c.y) row.*field = true;
      if (x.x == c.x) col.*field = true;
    }
  };
  mark(skew_cells(lambda, M), &CellType::lambda);
  mark(skew_cells(rho, M), &CellType::rho);
  mark(skew_cells(M, mu), &CellType::minus);
  mark(skew_cells(nu, J), &CellType::plus);
  return {row, col};
}

QTFactored cell_weight_table(const Partition& mu, const Partition& lambda, const Partition& rho, const Partition& nu,
                             const Cell& c) {
  if (!nu.contains(c)) throw Error(Errc::CellOutsideShape, to_string(c));
  auto [row, col] = cell_type(mu, lambda, rho, nu, c);
  if (row == CellType{false, true, false, false} || col == CellType{true, false, false, false}) return QTFactored();
  QTFactored w;
  if (row.minus) w *= b_ratio(mu, c) / b_ratio(rho, c);
  if (row.plus) w *= b_ratio(nu, c) / b_ratio(lambda, c);
  if (col.minus) w *= b_ratio(lambda, c) / b_ratio(mu, c);
  if (col.plus) w *= b_ratio(rho, c) / b_ratio(nu, c);
  return w;
}

std::vector<int> shift_set(const std::vector<int>& R, const std::vector<int>& S, int d) {
  std::vector<int> out;
  for (int i = 0; i < d; ++i) {
    int cr = 0, cs = 0;
    for (int r : R) cr += r > i;
    for (int s : S) cs += s > i;
    if (cr > cs) out.push_back(i);
  }
  return out;
}

QTFactored forward_prob_qwhittaker(const CornerFrame& f, const SubsetPair& p) {
  check_pair(f, p);
  const int d = f.d();
  std::vector<int> alpha;
  for (int i = 0; i < d; ++i) {
    if (!has(p.R, i + 1)) continue;
    MonomialQT r = f.R(i + 1) / f.S(i);
    if (r.et == 0 && r.eq > 0) alpha.push_back(i);
  }
  // The shift condition only controls the pairs on the first path; the other
  // path may still leave a power of t in tau.
  if (tau_monomial(f, p).et > 0) return QTFactored::zero();
  auto sh = shift_set(p.R, p.S, d);
  for (int i : sh)
    if (i != 0 && !has(alpha, i)) return QTFactored::zero();
  QTFactored v;
  for (int i : p.S)
    if (i != 0 && !has(p.R, i)) v *= one_minus(f.S(i) / f.I(i));
  for (int i : alpha) {
    if (!has(p.S, i)) v *= one_minus(f.R(i + 1) / f.O(i));
    if (i != 0 && !has(p.R, i)) v /= one_minus(f.R(i + 1) / f.I(i));
  }
  for (int i : sh) v *= QTFactored::monomial(f.R(i + 1) / f.S(i));
  return qt_limit(v, Limit::TToZero);
}

QTFactored forward_prob_hall_littlewood(const CornerFrame& f, const SubsetPair& p) {
  check_pair(f, p);
  const int d = f.d();
  std::vector<int> Rc, Sc, beta;
  for (int i = 1; i <= d; ++i)
    if (!has(p.R, i)) Rc.push_back(i);
  for (int j = 0; j <= d; ++j)
    if (!has(p.S, j)) Sc.push_back(j);
  for (int i = 0; i < d; ++i) {
    if (has(p.R, i + 1)) continue;
    MonomialQT r = f.I(i + 1) / f.O(i);
    if (r.eq == 0 && r.et > 0) beta.push_back(i);
  }
  if (tau_monomial(f, p).eq > 0) return QTFactored::zero();
  auto sh = shift_set(Rc, Sc, d);
  for (int i : sh)
    if (!has(beta, i)) return QTFactored::zero();
  QTFactored v;
  for (int i : beta) {
    if (has(p.S, i)) v *= one_minus(f.I(i + 1) / f.S(i));
    if (has(p.R, i)) v /= one_minus(f.I(i + 1) / f.R(i));
  }
  for (int i : p.R)
    if (!has(p.S, i)) v *= one_minus(f.O(i) / f.R(i));
  for (int i : sh) v *= QTFactored::monomial(f.I(i + 1) / f.O(i));
  return qt_limit(v, Limit::QToZero);
}

std::vector<int> f_row_subset(const CornerFrame& f, const std::vector<int>& R, int k) {
  (void)f;
  int n = static_cast<int>(R.size());
  if (n == k) return R;
  if (n != k - 1) throw Error(Errc::InvalidArgument, "need |R| in {k-1, k}");
  std::vector<int> S{0};
  S.insert(S.end(), R.begin(), R.end());
  return S;
}

std::vector<int> f_col_subset(const CornerFrame& f, const std::vector<int>& R, int k) {
  int n = static_cast<int>(R.size());
  if (n != k && n != k - 1) throw Error(Errc::InvalidArgument, "need |R| in {k-1, k}");
  std::vector<int> S;
  for (int r : R) S.push_back(r - 1);
  if (n == k - 1) S.push_back(f.d());
  return S;
}

Partition f_row(const Partition& lambda, const Partition& rho, int k, const Partition& mu) {
  CornerFrame f(lambda, rho);
  return nu_of(f, f_row_subset(f, rset_of(f, mu), k));
}

Partition f_col(const Partition& lambda, const Partition& rho, int k, const Partition& mu) {
  CornerFrame f(lambda, rho);
  return nu_of(f, f_col_subset(f, rset_of(f, mu), k));
}

AlphaRational jack_forward_prob(const CornerFrame& f, const SubsetPair& p) { return qt_jack_limit(forward_prob(f, p)); }

namespace {

SubsetPair square_pair(const CornerFrame& f, const Partition& mu, const Partition& nu) {
  return {rset_of(f, mu), sset_of(f, nu)};
}

}  // namespace

QTFactored square_forward(const Partition& mu, const Partition& lambda, const Partition& rho, const Partition& nu) {
  CornerFrame f(lambda, rho);
  return forward_prob(f, square_pair(f, mu, nu));
}

QTFactored square_backward(const Partition& mu, const Partition& lambda, const Partition& rho, const Partition& nu) {
  CornerFrame f(lambda, rho);
  return backward_prob(f, square_pair(f, mu, nu));
}

QTFactored qt_diagonal_limit(const QTFactored& x, bool to_infinity) {
  QTFactored y = to_infinity ? qt_substitute_inverse(x) : x;
  if (y.is_zero()) return y;
  int deg = y.mono().eq + y.mono().et;
  if (deg > 0) return QTFactored::zero();
  if (deg < 0) throw Error(Errc::LimitDiverges, to_string(x) + " along q = t");
  return y.coeff();
}

std::vector<std::vector<int>> k_subsets(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  int n = hi - lo + 1;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= hi; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

}  // namespace qtrsk
