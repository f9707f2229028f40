#include <gtest/gtest.h>

#include "qtrsk/error.hpp"
#include "qtrsk/interpolation.hpp"
#include "qtrsk/local_rules.hpp"
#include "qtrsk/weights.hpp"
#include "support/expr.hpp"
#include "support/frames.hpp"
#include "support/rng.hpp"

using namespace qtrsk;

namespace {

const Partition kP21{2, 1};

bool product_leq(const MonomialQT& a, const MonomialQT& b) { return a.leq(b) && a != b; }

Partition staircase(int n) {
  std::vector<int> p;
  for (int i = n; i >= 1; --i) p.push_back(i);
  return Partition(p);
}

}  // namespace

TEST(Frame, SmallExample) {
  CornerFrame f(kP21, kP21);
  ASSERT_EQ(f.d(), 2);
  EXPECT_EQ(f.S(0), (MonomialQT{1, 0}));
  EXPECT_EQ(f.S(1), (MonomialQT{2, 1}));
  EXPECT_EQ(f.S(2), (MonomialQT{3, 2}));
  EXPECT_EQ(f.R(1), (MonomialQT{2, 0}));
  EXPECT_EQ(f.R(2), (MonomialQT{3, 1}));
  EXPECT_EQ(f.I(1), (MonomialQT{1, 1}));
  EXPECT_EQ(f.I(2), (MonomialQT{2, 2}));
  EXPECT_EQ(f.Sbar(0), (MonomialQT{0, 1}));
  CornerFrame e{Partition(), Partition()};
  EXPECT_EQ(e.d(), 0);
  EXPECT_EQ(e.addable(0), (Cell{1, 1}));
  EXPECT_THROW(CornerFrame(Partition({1, 1}), Partition()), Error);
  auto j = to_json(f);
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["S"].size(), 3u);
}

TEST(Frame, ChainProperty) {
  for (auto& [la, rho] : gen::compatible_pairs(8)) {
    CornerFrame f(la, rho);
    for (int i = 1; i <= f.d(); ++i) {
      // I may become R, or O may become Sbar, one substitution family at a time.
      for (auto x : {f.I(i), f.R(i)}) {
        EXPECT_TRUE(product_leq(f.O(i - 1), x));
        EXPECT_TRUE(product_leq(x, f.O(i)));
      }
      EXPECT_TRUE(product_leq(f.Sbar(i - 1), f.I(i)));
      EXPECT_TRUE(product_leq(f.I(i), f.Sbar(i)));
      EXPECT_TRUE(product_leq(f.O(i - 1), f.I(i)));
    }
  }
}

TEST(Frame, SubsetsToShapes) {
  CornerFrame f(kP21, kP21);
  EXPECT_EQ(mu_of(f, {2}), Partition({2}));
  EXPECT_EQ(nu_of(f, {0, 1}), Partition({3, 2}));
  EXPECT_EQ(mu_of(f, {}), kP21);
  EXPECT_EQ(rset_of(f, Partition({1, 1})), std::vector<int>{1});
  EXPECT_EQ(rset_of(f, Partition({1})), (std::vector<int>{1, 2}));
  EXPECT_EQ(sset_of(f, Partition({2, 1, 1})), std::vector<int>{2});
  try {
    rset_of(f, Partition());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDecomposable);
  }
  EXPECT_THROW(sset_of(f, Partition({4, 1})), Error);
}

TEST(Forward, WorkedExample) {
  CornerFrame f(kP21, kP21);
  EXPECT_TRUE(oracle::same(forward_prob(f, {{2}, {0, 1}}), "q(1-t)^2(1-q)/((1-q^2 t^2)(1-q t)(1-q^2))"));
  EXPECT_TRUE(oracle::same(forward_prob(f, {{2}, {1, 2}}), "t(1-q)(1-q^2 t)^2/((1-q t)(1-q^2 t^2)(1-q^2))"));
  EXPECT_TRUE(oracle::same(forward_prob(f, {{2}, {0, 2}}), "(1-t)(1-q^2 t)(1-q)/((1-q t)^2 (1-q^2))"));
  EXPECT_THROW(forward_prob(f, {{1, 2}, {0}}), Error);
  EXPECT_THROW(forward_prob(f, {{3}, {0}}), Error);
}

TEST(Backward, SmallCases) {
  CornerFrame e{Partition(), Partition()};
  EXPECT_EQ(backward_prob(e, {{}, {0}}), QTFactored(1));
  EXPECT_EQ(forward_prob(e, {{}, {}}), QTFactored(1));
  CornerFrame f(kP21, kP21);
  SubsetPair p{{2}, {0, 1}};
  auto lhs = weight_ratio(Partition({2}), kP21, kP21, Partition({3, 2})) * forward_prob(f, p);
  EXPECT_EQ(lhs, backward_prob(f, p));
}

TEST(Forward, SumToOneProperty) {
  for (auto& [la, rho] : gen::compatible_pairs(7)) {
    CornerFrame f(la, rho);
    const int d = f.d();
    for (int k = 0; k <= d + 1; ++k) {
      for (int nr : {k - 1, k})
        for (auto& R : k_subsets(1, d, nr)) {
          std::vector<QTFactored> xs;
          for (auto& S : k_subsets(0, d, k)) xs.push_back(forward_prob(f, {R, S}));
          EXPECT_TRUE(qt_sum_equals(xs, QTFactored(1))) << to_string(la) << " " << to_string(rho) << " k=" << k;
        }
      for (auto& S : k_subsets(0, d, k)) {
        std::vector<QTFactored> xs;
        for (int nr : {k - 1, k})
          for (auto& R : k_subsets(1, d, nr)) xs.push_back(backward_prob(f, {R, S}));
        EXPECT_TRUE(qt_sum_equals(xs, QTFactored(1))) << to_string(la) << " " << to_string(rho) << " k=" << k;
      }
    }
  }
}

TEST(Forward, CompatibilityAndOracleProperty) {
  for (auto& [la, rho] : gen::compatible_pairs(8)) {
    CornerFrame f(la, rho);
    for (auto& p : gen::all_subset_pairs(f.d())) {
      Partition mu = mu_of(f, p.R), nu = nu_of(f, p.S);
      QTFactored fw = forward_prob(f, p), bw = backward_prob(f, p);
      QTFactored ratio = weight_ratio(mu, la, rho, nu);
      EXPECT_EQ(ratio * fw, bw);
      EXPECT_EQ(ratio, weight_ratio_regrouped(mu, la, rho, nu));
      EXPECT_EQ(alpha_beta_gamma_prob(f, p, Direction::Forward), fw);
      EXPECT_EQ(alpha_beta_gamma_prob(f, p, Direction::Backward), bw);
      EXPECT_EQ(square_forward(mu, la, rho, nu), fw);
    }
  }
}

TEST(Forward, InversionSymmetryProperty) {
  for (auto& [la, rho] : gen::compatible_pairs(7)) {
    CornerFrame f(la, rho);
    for (auto& p : gen::all_subset_pairs(f.d())) {
      Partition mu = mu_of(f, p.R), nu = nu_of(f, p.S);
      Partition lc = conjugate(la), rc = conjugate(rho), mc = conjugate(mu), nc = conjugate(nu);
      EXPECT_EQ(qt_substitute_inverse(forward_prob(f, p)), qt_swap(square_forward(mc, rc, lc, nc)));
      EXPECT_EQ(qt_substitute_inverse(backward_prob(f, p)), qt_swap(square_backward(mc, rc, lc, nc)));
    }
  }
}

TEST(Tau, LatticePathExample) {
  CornerFrame f(staircase(8), staircase(8));
  ASSERT_EQ(f.d(), 8);
  SubsetPair p{{1, 4, 8}, {2, 4, 5, 7}};
  auto h = path_heights(8, p);
  EXPECT_EQ(std::vector<int>(h.u.begin() + 1, h.u.end()), (std::vector<int>{1, -2, -1, 1, -1, 0, 0, -1}));
  EXPECT_EQ(h.d, (std::vector<int>{-1, -2, 1, -1, 1, 0, 0, -1, 0}));
  MonomialQT expect = (f.S(2) / f.R(1)) * (f.S(4) / f.R(4)) * (f.S(7) / f.R(8)).pow(-1) * (f.O(0) / f.I(3)).pow(-1) *
                      (f.O(1) / f.I(2)).pow(-2) * (f.O(3) / f.I(5)).pow(-1);
  EXPECT_EQ(tau_monomial(f, p), expect);
  EXPECT_EQ(tau(f, p).coeff(), 1);
  EXPECT_EQ(tau_monomial(f, {{1, 4, 8}, {1, 4, 8}}), MonomialQT{});
  EXPECT_EQ(tau_monomial(f, {{1, 4, 8}, {0, 1, 4, 8}}), MonomialQT{});
}

TEST(Tau, FactorizationProperty) {
  for (auto& [la, rho] : gen::compatible_pairs(8)) {
    CornerFrame f(la, rho);
    for (auto& p : gen::all_subset_pairs(f.d())) {
      QTFactored fw = forward_prob(f, p), bw = backward_prob(f, p);
      MonomialQT m = tau_monomial(f, p);
      EXPECT_EQ(fw.mono(), m);
      EXPECT_EQ(bw.mono(), m);
      EXPECT_EQ(fw.coeff(), 1);
      EXPECT_EQ(bw.coeff(), 1);
      EXPECT_GE(m.eq, 0);
      EXPECT_GE(m.et, 0);
      std::vector<int> r0{0};
      r0.insert(r0.end(), p.R.begin(), p.R.end());
      bool trivial = p.S == p.R || p.S == r0;
      EXPECT_EQ(m.is_one(), trivial);
    }
  }
}

TEST(Forward, PositivityProperty) {
  gen::Rng rng(2024);
  std::vector<std::pair<BigRational, BigRational>> pts;
  for (int i = 0; i < 20; ++i) pts.push_back({gen::unit_rational(rng), gen::unit_rational(rng)});
  for (int i = 0; i < 20; ++i)
    pts.push_back({1 + gen::unit_rational(rng) * gen::uniform(rng, 1, 9), 1 + gen::unit_rational(rng) * gen::uniform(rng, 1, 9)});
  for (auto& [la, rho] : gen::compatible_pairs(6)) {
    CornerFrame f(la, rho);
    for (auto& p : gen::all_subset_pairs(f.d())) {
      QTFactored fw = forward_prob(f, p);
      for (auto& [q0, t0] : pts) {
        BigRational v = qt_eval(fw, q0, t0);
        EXPECT_GE(v, 0);
        EXPECT_LE(v, 1);
      }
    }
  }
}

TEST(Specializations, ClosedFormsMatchLimits) {
  for (auto& [la, rho] : gen::compatible_pairs(8)) {
    CornerFrame f(la, rho);
    for (auto& p : gen::all_subset_pairs(f.d())) {
      QTFactored fw = forward_prob(f, p);
      EXPECT_EQ(forward_prob_qwhittaker(f, p), qt_limit(fw, Limit::TToZero))
          << to_string(la) << " " << to_string(rho) << " " << to_string(fw);
      EXPECT_EQ(forward_prob_hall_littlewood(f, p), qt_limit(fw, Limit::QToZero))
          << to_string(la) << " " << to_string(rho) << " " << to_string(fw);
    }
  }
}

TEST(Specializations, WorkedValues) {
  CornerFrame f(kP21, kP21);
  EXPECT_TRUE(oracle::same(forward_prob_qwhittaker(f, {{2}, {0, 2}}), "(1-q)/(1-q^2)"));
  EXPECT_TRUE(oracle::same(forward_prob_hall_littlewood(f, {{2}, {1, 2}}), "t"));
  CornerFrame e{Partition(), Partition()};
  EXPECT_EQ(forward_prob_hall_littlewood(e, {{}, {0}}), QTFactored(1));
  EXPECT_EQ(forward_prob_qwhittaker(e, {{}, {}}), QTFactored(1));
}

TEST(Specializations, ClassicalLimitsAreIndicators) {
  for (auto& [la, rho] : gen::compatible_pairs(8)) {
    CornerFrame f(la, rho);
    const int d = f.d();
    for (int k = 0; k <= d + 1; ++k)
      for (int nr : {k - 1, k})
        for (auto& R : k_subsets(1, d, nr)) {
          auto srow = f_row_subset(f, R, k), scol = f_col_subset(f, R, k);
          for (auto& S : k_subsets(0, d, k)) {
            QTFactored fw = forward_prob(f, {R, S});
            EXPECT_EQ(qt_diagonal_limit(fw, false), QTFactored(S == srow ? 1 : 0).is_zero() ? QTFactored::zero() : QTFactored(1));
            EXPECT_EQ(qt_limit(qt_limit(fw, Limit::TToZero), Limit::QToZero), S == srow ? QTFactored(1) : QTFactored::zero());
            EXPECT_EQ(qt_diagonal_limit(fw, true), S == scol ? QTFactored(1) : QTFactored::zero());
          }
        }
  }
}

TEST(Specializations, ClassicalSubsetsOnLargePair) {
  Partition la{9, 9, 7, 5, 5, 4, 2}, rho{10, 7, 7, 6, 6, 2, 2, 1};
  CornerFrame f(la, rho);
  ASSERT_EQ(f.d(), 2);
  EXPECT_EQ(f_row_subset(f, {1}, 1), std::vector<int>{1});
  EXPECT_EQ(f_row_subset(f, {2}, 1), std::vector<int>{2});
  EXPECT_EQ(f_row_subset(f, {}, 1), std::vector<int>{0});
  EXPECT_EQ(f_col_subset(f, {1}, 1), std::vector<int>{0});
  EXPECT_EQ(f_col_subset(f, {2}, 1), std::vector<int>{1});
  EXPECT_EQ(f_col_subset(f, {}, 1), std::vector<int>{2});
  EXPECT_EQ(f_row(la, rho, 1, meet(la, rho)), add_cell(join(la, rho), f.addable(0)));
  CornerFrame e{Partition(), Partition()};
  EXPECT_EQ(f_row(Partition(), Partition(), 1, Partition()), Partition({1}));
  EXPECT_EQ(f_col(Partition(), Partition(), 1, Partition()), Partition({1}));
}

TEST(CellWeights, TableEntries) {
  // Square with a cell of (lambda n rho)/mu only in its column: mu=(1), lambda=rho=(2)?
  // lambda = (2,1), rho = (2,1), mu = (2) removes corner (1,2); nu = (3,2) adds (3,1),(2,2).
  Partition mu{2}, la{2, 1}, rho{2, 1}, nu{3, 2};
  auto [row, col] = cell_type(mu, la, rho, nu, {1, 1});
  EXPECT_EQ(row, (CellType{false, false, false, true}));
  EXPECT_EQ(col, (CellType{false, false, true, false}));
  EXPECT_EQ(cell_weight_table(mu, la, rho, nu, {1, 1}), b_ratio(nu, {1, 1}) / b_ratio(mu, {1, 1}));
  auto t2 = cell_type(mu, la, rho, nu, {1, 2});
  EXPECT_EQ(t2.first, (CellType{false, false, true, true}));
  EXPECT_THROW(cell_weight_table(mu, la, rho, nu, {4, 1}), Error);
}

TEST(CellWeights, ProductAndCellContributionProperty) {
  int type_zero_minus = 0, type_full = 0;
  for (auto& [la, rho] : gen::compatible_pairs(7)) {
    CornerFrame f(la, rho);
    for (auto& p : gen::all_subset_pairs(f.d())) {
      Partition mu = mu_of(f, p.R), nu = nu_of(f, p.S);
      auto sl = skew_cell_sets(la, mu), sr = skew_cell_sets(rho, mu), snr = skew_cell_sets(nu, rho),
           snl = skew_cell_sets(nu, la);
      QTFactored total;
      for (const Cell& c : nu.cells()) {
        // Contribution of c to psi_{la/mu} phi*_{rho/mu} / (psi_{nu/rho} phi*_{nu/la}).
        QTFactored direct;
        if (sl.r_cells.count(c) && !sl.c_cells.count(c)) direct *= b_ratio(mu, c) / b_ratio(la, c);
        if (sr.c_cells.count(c) && !sr.r_cells.count(c)) direct *= b_ratio(rho, c) / b_ratio(mu, c);
        if (snr.r_cells.count(c) && !snr.c_cells.count(c)) direct *= b_ratio(nu, c) / b_ratio(rho, c);
        if (snl.c_cells.count(c) && !snl.r_cells.count(c)) direct *= b_ratio(la, c) / b_ratio(nu, c);
        QTFactored w = cell_weight_table(mu, la, rho, nu, c);
        EXPECT_EQ(w, direct) << to_string(la) << " " << to_string(rho) << " " << to_string(c);
        auto [row, col] = cell_type(mu, la, rho, nu, c);
        if (!row.lambda && !row.rho && !row.minus && !row.plus && col == CellType{false, false, true, false}) {
          ++type_zero_minus;
          EXPECT_EQ(w, b_ratio(la, c) / b_ratio(mu, c));
          EXPECT_EQ(w, b_ratio(rho, c) / b_ratio(mu, c));
        }
        if (row.minus && row.plus && col.minus && col.plus) {
          ++type_full;
          EXPECT_EQ(w, QTFactored(1));
        }
        total *= w;
      }
      EXPECT_EQ(total, weight_ratio(mu, la, rho, nu));
    }
  }
  EXPECT_GT(type_zero_minus, 0);
}

TEST(Jack, SumsToOneProperty) {
  for (auto& [la, rho] : gen::compatible_pairs(6)) {
    CornerFrame f(la, rho);
    const int d = f.d();
    for (int k = 0; k <= d + 1; ++k)
      for (int nr : {k - 1, k})
        for (auto& R : k_subsets(1, d, nr)) {
          AlphaRational s;
          for (auto& S : k_subsets(0, d, k)) s = s + jack_forward_prob(f, {R, S});
          EXPECT_EQ(s, AlphaRational(1));
        }
  }
}

TEST(Interpolation, SumToOneProperty) {
  gen::Rng rng(77);
  for (int d = 0; d <= 4; ++d)
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<BigRational> a, b;
      std::set<BigRational> used;
      auto fresh = [&] {
        BigRational x;
        do x = gen::rational(rng, -40, 40, 7);
        while (used.count(x));
        used.insert(x);
        return x;
      };
      for (int i = 0; i <= d; ++i) a.push_back(fresh());
      for (int i = 0; i <= d; ++i) b.push_back(fresh());
      for (int k = 0; k <= d + 1; ++k) {
        for (auto& R : k_subsets(0, d, k)) {
          BigRational s = 0, sl = 0;
          for (auto& S : k_subsets(0, d, k)) {
            s += interpolation_weight(R, S, a, b);
            sl += interpolation_weight_limit(R, S, a, b);
          }
          EXPECT_EQ(s, 1);
          EXPECT_EQ(sl, 1);
        }
      }
    }
}

TEST(Interpolation, LimitFormReproducesForward) {
  BigRational q0(2, 7), t0(3, 5);
  auto val = [&](const MonomialQT& m) -> BigRational { return pow(q0, m.eq) * pow(t0, m.et); };
  for (auto& [la, rho] : gen::compatible_pairs(6)) {
    CornerFrame f(la, rho);
    const int d = f.d();
    for (auto& p : gen::all_subset_pairs(d)) {
      std::vector<BigRational> a(d + 1), b(d + 1, 0);
      for (int j = 0; j <= d; ++j) a[j] = val(f.O(j));
      std::vector<int> R = p.R;
      for (int i = 1; i <= d; ++i) b[i] = std::count(R.begin(), R.end(), i) ? val(f.R(i)) : val(f.I(i));
      if (R.size() < p.S.size()) R.insert(R.begin(), 0);
      EXPECT_EQ(interpolation_weight_limit(R, p.S, a, b), qt_eval(forward_prob(f, p), q0, t0));
      // a large b_0 approaches the limit form
      b[0] = BigRational(1000000000);
      BigRational gap = interpolation_weight(R, p.S, a, b) - interpolation_weight_limit(R, p.S, a, b);
      EXPECT_LT(abs(gap), BigRational(1, 1000));
    }
  }
}
