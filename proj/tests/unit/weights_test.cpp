#include <gtest/gtest.h>

#include <algorithm>

#include "qtrsk/error.hpp"
#include "qtrsk/weights.hpp"
#include "support/expr.hpp"
#include "support/rng.hpp"

using namespace qtrsk;

namespace {

// q <-> t on an oracle value.
oracle::RatQT swap_qt(const QTFactored& x) { return oracle::from_factored(qt_swap(x)); }

std::vector<std::pair<Partition, Partition>> compatible_pairs(int max_union) {
  std::vector<std::pair<Partition, Partition>> out;
  auto all = partitions_up_to(max_union);
  for (auto& l : all)
    for (auto& r : all)
      if (join(l, r).size() <= max_union && is_compatible_pair(l, r)) out.push_back({l, r});
  return out;
}

}  // namespace

TEST(Tableau, ParseRoundTrip) {
  auto t = parse_tableau("1,1,2,3;2,4;3", Flavor::Ssyt);
  EXPECT_EQ(t.shape(), Partition({4, 2, 1}));
  EXPECT_EQ(to_string(t), "1,1,2,3;2,4;3");
  EXPECT_EQ(t.content(), (std::vector<int>{2, 2, 2, 1}));
  EXPECT_EQ(t.chain()[2], Partition({3, 1}));
  EXPECT_EQ(to_string(parse_tableau("-", Flavor::Ssyt)), "-");
  EXPECT_THROW(parse_tableau("1,1;1", Flavor::Ssyt), Error);
  EXPECT_THROW(parse_tableau("1,1;2", Flavor::DualSsyt), Error);
  EXPECT_NO_THROW(parse_tableau("1,2;3", Flavor::DualSsyt));
  EXPECT_NO_THROW(parse_tableau("1,3;2", Flavor::DualSsyt));
  EXPECT_THROW(parse_tableau("1,x", Flavor::Ssyt), Error);
  EXPECT_THROW(parse_tableau("2,1", Flavor::Ssyt), Error);
  EXPECT_THROW(parse_tableau("1,2;2", Flavor::PartialSyt), Error);
}

TEST(Tableau, PaddingIgnoredByEquality) {
  auto t = parse_tableau("1,1;2", Flavor::Ssyt);
  auto u = t.with_max_entry(4);
  EXPECT_EQ(u.max_entry(), 4);
  EXPECT_EQ(t, u);
  EXPECT_EQ(u.with_max_entry(2).chain(), t.chain());
  EXPECT_THROW(t.with_max_entry(1), Error);
}

TEST(Tableau, EnumerationCounts) {
  // Kostka-style counts: SSYT of shape (2,1) with entries <= 3 is 8.
  EXPECT_EQ(enumerate_tableaux(Partition({2, 1}), 3, Flavor::Ssyt).size(), 8u);
  EXPECT_EQ(enumerate_tableaux(Partition({2, 1}), 3, Flavor::DualSsyt).size(), 8u);
  // Conjugate shapes swap SSYT and dual SSYT.
  for (auto& p : partitions_up_to(5))
    for (int m = 1; m <= 3; ++m)
      EXPECT_EQ(enumerate_tableaux(p, m, Flavor::Ssyt).size(), enumerate_tableaux(conjugate(p), m, Flavor::DualSsyt).size());
  // Partial SYT of shape (2,1) with entries <= 4: 2 standard fillings times C(4,3).
  EXPECT_EQ(enumerate_tableaux(Partition({2, 1}), 4, Flavor::PartialSyt).size(), 8u);
}

TEST(Psi, HorizontalStrip) {
  Partition la{6, 5, 3, 2}, mu{6, 4, 3, 1};
  EXPECT_TRUE(oracle::same(psi(la, mu),
                           "(1-t)^2 (1-q^2)^2 (1-q t^2)(1-q^3 t)(1-q^3 t^3)(1-q^5 t^2) / "
                           "((1-q)^2 (1-q t)^2 (1-q^2 t)(1-q^2 t^2)(1-q^4 t^2)(1-q^4 t^3))"));
  EXPECT_EQ(psi(la, la), QTFactored(1));
  EXPECT_THROW(psi(Partition({1, 1}), Partition()), Error);
}

TEST(PhiStar, HorizontalStrip) {
  Partition la{6, 5, 3, 2}, mu{6, 4, 3, 1};
  EXPECT_TRUE(oracle::same(phi_star(la, mu),
                           "(1-q^2)^2 (1-q t^2)^2 (1-q^5 t^2)(1-q^4 t^4) / "
                           "((1-q t)^2 (1-q^2 t)^2 (1-q^4 t^3)(1-q^5 t^3))"));
  EXPECT_EQ(phi_star(la, la), QTFactored(1));
  EXPECT_THROW(phi_star(Partition({2}), Partition()), Error);
}

TEST(Phi, SingleCellRelation) {
  EXPECT_TRUE(oracle::same(phi(Partition({1}), Partition()), "(1-t)/(1-q)"));
  EXPECT_EQ(phi_star(Partition({1}), Partition()), QTFactored(1));
  EXPECT_EQ(phi(Partition({3, 1}), Partition({3, 1})), QTFactored(1));
  EXPECT_THROW(phi(Partition({1}), Partition({2})), Error);
  QTFactored conv = QTFactored::binomial(0, 1) / QTFactored::binomial(1, 0);
  for (auto& rho : partitions_up_to(8))
    for (auto& c : inner_corners(rho)) {
      Partition mu = remove_cell(rho, c);
      if (!is_horizontal_strip(mu, rho)) continue;
      EXPECT_EQ(phi(rho, mu), conv * phi_star(rho, mu)) << to_string(rho);
    }
}

TEST(Weights, AlmostRectangularExample) {
  // h = 8, v = 4
  Partition la{8, 8, 8, 8, 1}, rho{9, 8, 8, 8};
  std::vector<oracle::RatQT> down, up;
  for (int k : {0, 1})
    for (auto& mu : D_k(la, rho, k)) down.push_back(oracle::from_factored(psi(la, mu) * phi_star(rho, mu)));
  for (auto& nu : U_k(la, rho, 1)) up.push_back(oracle::from_factored(psi(nu, rho) * phi_star(nu, la)));
  ASSERT_EQ(down.size(), 2u);
  ASSERT_EQ(up.size(), 2u);
  auto has = [](const std::vector<oracle::RatQT>& v, const oracle::RatQT& x) {
    return std::any_of(v.begin(), v.end(), [&](auto& y) { return y == x; });
  };
  EXPECT_TRUE(has(down, oracle::qt("1")));
  EXPECT_TRUE(has(down, oracle::qt("(1-t^3)(1-q^7)/((1-q t^2)(1-q^6 t))")));
  EXPECT_TRUE(has(up, oracle::qt("(1-t^3)(1-q^8 t^2)/((1-q t^2)(1-q^7 t^3))")));
  EXPECT_TRUE(has(up, oracle::qt("(1-q^6 t^4)(1-q^7)/((1-q^6 t)(1-q^7 t^3))")));
}

TEST(Weights, TableColumnWeights) {
  auto w = [](const char* p, const char* q) {
    return tableau_weight(parse_tableau(p, Flavor::Ssyt), WeightKind::Psi) *
           tableau_weight(parse_tableau(q, Flavor::DualSsyt), WeightKind::PhiStar);
  };
  EXPECT_TRUE(oracle::same(w("1,1;2", "1,2;3"), "(1-q^2)(1-q t^2)/((1-q t)(1-q^2 t))"));
  EXPECT_TRUE(oracle::same(w("1,1;2", "1,3;2"), "(1-q)(1-t^2)/((1-t)(1-q t))"));
  EXPECT_TRUE(oracle::same(w("1,1,2", "1,2,3"), "(1-t)(1-q^3)/((1-q)(1-q^2 t))"));
  EXPECT_EQ(tableau_weight(parse_tableau("1,1,1", Flavor::Ssyt), WeightKind::Psi), QTFactored(1));
}

TEST(Weights, PartialSytIsProductOfCells) {
  auto t = parse_tableau("1,3;4", Flavor::PartialSyt).with_max_entry(5);
  QTFactored expect;
  for (std::size_t i = 1; i < t.chain().size(); ++i) expect *= psi(t.chain()[i], t.chain()[i - 1]);
  EXPECT_EQ(tableau_weight(t, WeightKind::Psi), expect);
}

TEST(Weights, ConjugateSwapProperty) {
  for (auto& kappa : partitions_up_to(8))
    for (auto& rho : subpartitions(kappa)) {
      if (!is_vertical_strip(rho, kappa)) continue;
      EXPECT_TRUE(oracle::from_factored(phi_star(kappa, rho)) == swap_qt(psi(conjugate(kappa), conjugate(rho))));
    }
}

TEST(Macdonald, SmallExpansions) {
  auto p1 = macdonald_expanded(MacdonaldKind::P, Partition({1}), 2);
  ASSERT_EQ(p1.size(), 2u);
  EXPECT_TRUE(p1[(Content{1, 0})].equals(QTFactored(1)));
  EXPECT_TRUE(p1[(Content{0, 1})].equals(QTFactored(1)));
  auto p21 = macdonald_expanded(MacdonaldKind::P, Partition({2, 1}), 2);
  ASSERT_EQ(p21.count(Content{2, 1}), 1u);
  EXPECT_EQ(p21[(Content{2, 1})].terms().size(), 1u);
  EXPECT_TRUE(p21[(Content{2, 1})].equals(QTFactored(1)));
}

TEST(Macdonald, SymmetryProperty) {
  gen::Rng rng(101);
  for (auto kind : {MacdonaldKind::P, MacdonaldKind::Q, MacdonaldKind::PDual})
    for (auto& la : partitions_up_to(5)) {
      BigRational q0 = gen::unit_rational(rng), t0 = gen::unit_rational(rng);
      auto coeffs = macdonald_eval(kind, la, 3, q0, t0);
      for (auto& [c, v] : coeffs) {
        Content s = c;
        std::sort(s.begin(), s.end());
        do {
          auto it = coeffs.find(s);
          ASSERT_NE(it, coeffs.end());
          EXPECT_EQ(it->second, v);
        } while (std::next_permutation(s.begin(), s.end()));
      }
    }
}

TEST(Macdonald, DualPieriProperty) {
  // P_mu e_r = sum over vertical strips lambda/mu of size r of phi*_{lambda/mu} P_lambda, in 3 variables.
  const int m = 3;
  std::vector<std::pair<BigRational, BigRational>> points{{BigRational(1, 3), BigRational(2, 5)},
                                                          {BigRational(3, 7), BigRational(1, 9)},
                                                          {BigRational(5, 2), BigRational(4, 3)}};
  auto e_r = [&](int r) {
    std::map<Content, BigRational> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
      if (__builtin_popcount(mask) != r) continue;
      Content c(m);
      for (int i = 0; i < m; ++i) c[i] = (mask >> i) & 1;
      out[c] = 1;
    }
    return out;
  };
  for (auto& [q0, t0] : points)
    for (auto& mu : partitions_up_to(5))
      for (int r = 0; r <= 3; ++r) {
        std::map<Content, BigRational> lhs, rhs;
        for (auto& [a, x] : macdonald_eval(MacdonaldKind::P, mu, m, q0, t0))
          for (auto& [b, y] : e_r(r)) {
            Content c(m);
            for (int i = 0; i < m; ++i) c[i] = a[i] + b[i];
            lhs[c] += x * y;
          }
        for (auto& la : add_vertical_strips(mu, r)) {
          BigRational w = qt_eval(phi_star(la, mu), q0, t0);
          for (auto& [c, v] : macdonald_eval(MacdonaldKind::P, la, m, q0, t0)) rhs[c] += w * v;
        }
        std::erase_if(lhs, [](auto& kv) { return kv.second == 0; });
        std::erase_if(rhs, [](auto& kv) { return kv.second == 0; });
        EXPECT_EQ(lhs, rhs) << to_string(mu) << " r=" << r;
      }
}

TEST(Commutation, DualDownUpProperty) {
  for (auto& [la, rho] : compatible_pairs(8)) {
    int d = static_cast<int>(removable_inner_corners(la, rho).size());
    for (int k = 0; k <= d + 1; ++k) {
      QTSum lhs, rhs;
      for (int kk : {k, k - 1}) {
        if (kk < 0) continue;
        for (auto& mu : D_k(la, rho, kk)) lhs.add(psi(la, mu) * phi_star(rho, mu));
      }
      for (auto& nu : U_k(la, rho, k)) rhs.add(psi(nu, rho) * phi_star(nu, la));
      EXPECT_TRUE(lhs.equals(rhs)) << to_string(la) << " " << to_string(rho) << " k=" << k;
    }
  }
}

TEST(Commutation, RestrictedDownProperty) {
  QTFactored conv = QTFactored::binomial(0, 1) / QTFactored::binomial(1, 0);
  auto all = partitions_up_to(6);
  for (auto& la : all)
    for (auto& rho : all) {
      if (join(la, rho).size() > 7) continue;
      for (int k = 0; k <= 3; ++k) {
        QTSum lhs, rhs;
        for (auto& nu : U_kl(la, rho, k + 1, 1)) lhs.add(psi(nu, rho) * phi(nu, la));
        for (auto& mu : D_kl(la, rho, k + 1, 1)) rhs.add(psi(la, mu) * phi(rho, mu));
        for (auto& mu : D_kl(la, rho, k, 0)) rhs.add(conv * psi(la, mu) * phi(rho, mu));
        EXPECT_TRUE(lhs.equals(rhs)) << to_string(la) << " " << to_string(rho) << " k=" << k;
      }
    }
}
