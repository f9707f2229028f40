#include "qtrsk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "qtrsk/expr.hpp"
#include "qtrsk/insertion.hpp"
#include "qtrsk/interpolation.hpp"
#include "qtrsk/sampler.hpp"
#include "qtrsk/weights.hpp"

namespace qtrsk {

namespace {

struct Run {
  const VerifyOptions& opts;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  int cells(int def) const { return opts.max_cells.value_or(def); }
  int rows(int def) const { return opts.rows.value_or(def); }
  int cols(int def) const { return opts.cols.value_or(def); }

  void expect(bool ok, std::string input, std::string expected, std::string actual) {
    ++instances;
    if (!ok) failures.push_back({std::move(input), std::move(expected), std::move(actual)});
  }
  // Runs a guarded check; an exception is recorded as a failure.
  void guarded(const std::string& input, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++instances;
      failures.push_back({input, "no exception", e.what()});
    }
  }
  void absorb(std::size_t n, std::vector<Failure> fs) {
    instances += n;
    failures.insert(failures.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
  }
};

using Pair = std::pair<Partition, Partition>;

std::string frame_label(const Partition& la, const Partition& rho) {
  return "lambda=" + to_string(la) + " rho=" + to_string(rho);
}

bool same_qt(const QTSum& x, std::string_view expected) { return to_rational(x) == parse_qt_expression(expected); }
bool same_qt(const QTFactored& x, std::string_view expected) {
  return to_rational(x) == parse_qt_expression(expected);
}

std::vector<Matrix01> matrices_up_to(int rows, int cols) {
  std::vector<Matrix01> out;
  for (int m = 1; m <= rows; ++m)
    for (int n = 1; n <= cols; ++n) {
      auto all = all_matrices(m, n);
      out.insert(out.end(), all.begin(), all.end());
    }
  return out;
}

// Frame sweeps: one check per compatible pair.
template <class F>
void frame_sweep(Run& run, int max_cells, F&& check) {
  auto pairs = compatible_pairs(max_cells);
  run.absorb(pairs.size(), sweep_items(
                               pairs, [&](const Pair& p, std::vector<Failure>& out) { check(p.first, p.second, out); },
                               [](const Pair& p) { return frame_label(p.first, p.second); }, run.opts.execution));
}

template <class F>
void matrix_sweep(Run& run, const std::vector<Matrix01>& ms, F&& check) {
  run.absorb(ms.size(), sweep_items(ms, check, [](const Matrix01& a) { return to_string(a); }, run.opts.execution));
}

QTFactored pair_weight(const Tableau& p, const Tableau& q) {
  return tableau_weight(p, WeightKind::Psi) * tableau_weight(q, WeightKind::PhiStar);
}

Tableau ssyt(std::string_view s) { return parse_tableau(s, Flavor::Ssyt); }
Tableau dual(std::string_view s) { return parse_tableau(s, Flavor::DualSsyt); }

// Seeded rationals in (0,1) with small denominators.
std::vector<std::pair<BigRational, BigRational>> eval_points(const VerifyOptions& o, int count) {
  if (o.eval) return {*o.eval};
  SplitMix64 rng(o.seed);
  auto unit = [&] {
    long den = 3 + static_cast<long>(rng.next() % 29);
    long num = 1 + static_cast<long>(rng.next() % static_cast<unsigned long>(den - 1));
    BigRational x(num, den);
    x.canonicalize();
    return x;
  };
  std::vector<std::pair<BigRational, BigRational>> out;
  for (int i = 0; i < count; ++i) out.push_back({unit(), unit()});
  return out;
}

std::string point_label(const std::pair<BigRational, BigRational>& p) {
  return "(q,t)=(" + p.first.get_str() + "," + p.second.get_str() + ")";
}

// ---------------------------------------------------------------- tables

struct TableRow {
  const char* matrix;
  const char* qt[3];
  const char* jack[3];
};

const std::pair<const char*, const char*> kTablePairs[3] = {{"1,1;2", "1,2;3"}, {"1,1;2", "1,3;2"}, {"1,1,2", "1,2,3"}};
const TableRow kTable[3] = {
    {"110;001", {"t(1-q^2)/(1-q^2 t)", "0", "(1-t)/(1-q^2 t)"}, {"2a/(2a+1)", "0", "1/(2a+1)"}},
    {"101;010",
     {"(1-q)(1-t)/((1-q t)(1-q^2 t))", "t(1-q)/(1-q t)", "q(1-t)/(1-q^2 t)"},
     {"a/((a+1)(2a+1))", "a/(a+1)", "1/(2a+1)"}},
    {"011;100",
     {"q(1-q)(1-t)/((1-q t)(1-q^2 t))", "(1-q)/(1-q t)", "q^2(1-t)/(1-q^2 t)"},
     {"a/((a+1)(2a+1))", "a/(a+1)", "1/(2a+1)"}},
};
const char* kTableWeights[3] = {"(1-q^2)(1-q t^2)/((1-q t)(1-q^2 t))", "(1-q)(1-t^2)/((1-t)(1-q t))",
                                "(1-t)(1-q^3)/((1-q)(1-q^2 t))"};

TableauPair table_pair(int c) { return {ssyt(kTablePairs[c].first), dual(kTablePairs[c].second)}; }
std::string pair_label(const TableauPair& pq) { return "P=" + to_string(pq.first) + " Q=" + to_string(pq.second); }

void suite_table1(Run& run) {
  std::vector<QTSum> column(3);
  for (const auto& row : kTable) {
    Matrix01 a = parse_matrix(row.matrix);
    run.guarded(row.matrix, [&] {
      auto d = forward_distribution(a);
      for (int c = 0; c < 3; ++c) {
        Value v = d.at(table_pair(c));
        run.expect(same_qt(v.qt(), row.qt[c]), std::string(row.matrix) + " -> " + pair_label(table_pair(c)), row.qt[c],
                   to_string(v));
        column[c] += v.qt();
      }
    });
  }
  for (int c = 0; c < 3; ++c) {
    auto [p, q] = table_pair(c);
    QTFactored w = pair_weight(p, q);
    run.expect(same_qt(w, kTableWeights[c]), "weight " + pair_label(table_pair(c)), kTableWeights[c], to_string(w));
    run.expect(column[c].equals(w), "column sum " + pair_label(table_pair(c)), to_string(w), to_string(column[c]));
  }
}

void suite_table2(Run& run) {
  for (const auto& row : kTable) {
    run.guarded(row.matrix, [&] {
      auto d = forward_distribution(parse_matrix(row.matrix), Mode::alpha());
      AlphaRational sum;
      for (int c = 0; c < 3; ++c) {
        Value v = d.at(table_pair(c));
        run.expect(v.alpha() == parse_alpha_expression(row.jack[c]),
                   std::string(row.matrix) + " -> " + pair_label(table_pair(c)), row.jack[c], to_string(v));
        sum += v.alpha();
      }
      run.expect(sum == AlphaRational(1), std::string(row.matrix) + " row sum", "1", to_string(sum));
    });
  }
}

// ---------------------------------------------------------------- worked examples

void suite_example_4_2(Run& run) {
  CornerFrame f(Partition{2, 1}, Partition{2, 1});
  const std::pair<SubsetPair, const char*> cases[] = {
      {{{2}, {0, 1}}, "q(1-t)^2(1-q)/((1-q^2 t^2)(1-q t)(1-q^2))"},
      {{{2}, {1, 2}}, "t(1-q)(1-q^2 t)^2/((1-q t)(1-q^2 t^2)(1-q^2))"},
      {{{2}, {0, 2}}, "(1-t)(1-q^2 t)(1-q)/((1-q t)^2 (1-q^2))"},
  };
  for (const auto& [p, expected] : cases) {
    QTFactored v = forward_prob(f, p);
    run.expect(same_qt(v, expected), "lambda=rho=(2,1) " + to_string(p), expected, to_string(v));
  }
  run.expect(mu_of(f, {2}) == Partition{2}, "mu of R={2}", "(2)", to_string(mu_of(f, {2})));
  run.expect(nu_of(f, {0, 1}) == Partition({3, 2}), "nu of S={0,1}", "(3,2)", to_string(nu_of(f, {0, 1})));
}

void suite_example_3_5(Run& run) {
  const int max_h = std::max(3, run.cells(8));
  for (int h = 3; h <= max_h; ++h)
    for (int v = 2; v <= 5; ++v) {
      std::string label = "h=" + std::to_string(h) + " v=" + std::to_string(v);
      run.guarded(label, [&] {
        std::vector<int> lp(v, h), rp(v, h);
        lp.push_back(1);
        rp[0] = h + 1;
        Partition la(lp), rho(rp);
        auto sub = [&](std::string s) {
          auto rep = [&](const std::string& from, int x) {
            for (std::size_t at; (at = s.find(from)) != std::string::npos;) s.replace(at, from.size(), std::to_string(x));
          };
          rep("H2", h - 2), rep("H1", h - 1), rep("H0", h), rep("V2", v - 2), rep("V1", v - 1), rep("V0", v);
          return s;
        };
        std::vector<std::string> down_expected{"1", sub("(1-t^V1)(1-q^H1)/((1-q t^V2)(1-q^H2 t))")};
        std::vector<std::string> up_expected{sub("(1-t^V1)(1-q^H0 t^V2)/((1-q t^V2)(1-q^H1 t^V1))"),
                                             sub("(1-q^H2 t^V0)(1-q^H1)/((1-q^H2 t)(1-q^H1 t^V1))")};
        std::vector<QTFactored> down, up;
        for (int k : {0, 1})
          for (auto& mu : D_k(la, rho, k)) down.push_back(psi(la, mu) * phi_star(rho, mu));
        for (auto& nu : U_k(la, rho, 1)) up.push_back(psi(nu, rho) * phi_star(nu, la));
        auto match = [&](const std::vector<QTFactored>& got, const std::vector<std::string>& want, const char* side) {
          std::string shown;
          for (auto& g : got) shown += to_string(g) + "; ";
          bool ok = got.size() == want.size();
          for (auto& w : want)
            ok = ok && std::any_of(got.begin(), got.end(), [&](const QTFactored& g) { return same_qt(g, w); });
          run.expect(ok, label + " " + side, want[0] + "; " + want[1], shown);
        };
        match(down, down_expected, "down weights");
        match(up, up_expected, "up weights");
      });
    }
}

void suite_example_4_14(Run& run) {
  const std::pair<const char*, const char*> expected[] = {
      {"1,2,2;3,3", "(1-q t)/(1-q^2 t)"},
      {"1,2,3;2,3", "q^2 t(1-q)^2(1-t)^2/((1-q t)(1-q^2)(1-q^2 t)(1-q^2 t^2))"},
      {"1,2;2,3;3", "q t^2(1-q)^2(1-q^2 t)/((1-q t)(1-q^2)(1-q^2 t^2))"},
      {"1,2,3;2;3", "q t(1-q)^2(1-t)/((1-q^2)(1-q t)^2)"},
  };
  run.guarded("insert 2,3 into 1,2;3", [&] {
    auto d = growth_insert(ssyt("1,2;3"), {2, 3}, GrowthRule::Qt);
    run.expect(d.size() == 4, "outcome count", "4", std::to_string(d.size()));
    for (auto& [t, e] : expected) {
      Value v = d.at(ssyt(t));
      run.expect(same_qt(v.qt(), e), std::string("insert 2,3 into 1,2;3 -> ") + t, e, to_string(v));
    }
  });
}

// Composes word insertion over the columns of A, recording the new cell of each step.
Distribution<TableauPair> word_composition(const Matrix01& a) {
  struct State {
    Tableau p;
    std::vector<Partition> q;
    QTSum prob;
  };
  std::vector<State> states{{Tableau(), {Partition()}, QTSum(QTFactored())}};
  for (int j = 1; j <= a.cols(); ++j) {
    std::vector<State> next;
    for (auto& s : states) {
      auto col = a.column_support(j);
      if (col.empty()) {
        s.q.push_back(s.q.back());
        next.push_back(std::move(s));
        continue;
      }
      auto step = qrst_word_insert(s.p, col.at(0));
      for (auto& [p, v] : step.support()) {
        if (v.is_zero()) continue;
        State n{p, s.q, QTSum()};
        n.q.push_back(p.shape());
        for (auto& term : v.qt().terms())
          for (auto& old : s.prob.terms()) n.prob.add(term * old);
        next.push_back(std::move(n));
      }
    }
    states = std::move(next);
  }
  Distribution<TableauPair> d;
  for (auto& s : states)
    d.add({s.p.with_max_entry(a.rows()), Tableau(s.q, Flavor::DualSsyt)}, Value(s.prob));
  return d;
}

void suite_example_words(Run& run) {
  const std::pair<const char*, const char*> expected[] = {
      {"1,1,2,3;2,2", "q t(1-q)/(1-q^2 t)"},
      {"1,1,2,2,3;2", "q(1-q^3 t^2)^2/((1+q t)(1-q^3 t)(1-q^4 t^2))"},
      {"1,1,2,2;2,3", "(1-q)(1-t)(1-q^3 t^2)/((1-q^2 t)(1-q^2 t^2)(1-q^3 t))"},
      {"1,1,2,2;2;3", "t(1-q)^2/((1-q^2 t^2)(1-q^4 t^2))"},
  };
  run.guarded("insert 2 into 1,1,2,3;2", [&] {
    auto d = qrst_word_insert(ssyt("1,1,2,3;2"), 2);
    run.expect(d.size() == 4, "outcome count", "4", std::to_string(d.size()));
    for (auto& [t, e] : expected) {
      Value v = d.at(ssyt(t));
      run.expect(same_qt(v.qt(), e), std::string("insert 2 into 1,1,2,3;2 -> ") + t, e, to_string(v));
    }
  });

  // Normalization and agreement with single-value queue insertion.
  const int max_entry = 5;
  std::vector<std::pair<Tableau, int>> inputs;
  for (auto& shape : partitions_up_to(run.cells(6)))
    if (shape.length() <= max_entry)
      for (auto& t : enumerate_tableaux(shape, max_entry, Flavor::Ssyt))
        for (int i = 1; i <= max_entry; ++i) inputs.push_back({t, i});
  run.absorb(inputs.size(),
             sweep_items(
                 inputs,
                 [](const std::pair<Tableau, int>& in, std::vector<Failure>& out) {
                   auto w = qrst_word_insert(in.first, in.second);
                   auto g = growth_insert(in.first, {in.second}, GrowthRule::Qt);
                   if (!same_distribution(w, g))
                     out.push_back({"insert " + std::to_string(in.second) + " into " + to_string(in.first),
                                    "queue insertion distribution", "differs"});
                 },
                 [](const std::pair<Tableau, int>& in) {
                   return "insert " + std::to_string(in.second) + " into " + to_string(in.first);
                 },
                 run.opts.execution));

  // Word matrices: the growth distribution is the composition of word insertions.
  std::vector<Matrix01> words;
  for (auto& a : matrices_up_to(run.rows(3), run.cols(3)))
    if (a.at_most_one_per_column()) words.push_back(a);
  matrix_sweep(run, words, [](const Matrix01& a, std::vector<Failure>& out) {
    if (!same_distribution(forward_distribution(a), word_composition(a)))
      out.push_back({to_string(a), "composition of word insertions", "differs"});
  });
}

void suite_dual_rsk(Run& run) {
  Matrix01 a = parse_matrix("10001;11010;01100");
  auto [p, q] = classical_dual_rsk(a, DualRskVariant::Column);
  run.expect(p == ssyt("1,1,2,2;2,3;3"), "P of 10001;11010;01100", "1,1,2,2;2,3;3", to_string(p));
  run.expect(q == dual("1,2,4,5;1,3;2"), "Q of 10001;11010;01100", "1,2,4,5;1,3;2", to_string(q));
  DualGrowth g = classical_growth(a, GrowthRule::FCol);
  run.expect(g.P() == p && g.Q() == q, "F^col growth of 10001;11010;01100", to_string(p) + " | " + to_string(q),
             to_string(g.P()) + " | " + to_string(g.Q()));
  run.expect(is_dual_growth(g), "F^col growth is a dual growth", "true", "false");

  // Insertion sequence: single F^col insertions replay the column insertions.
  Tableau t;
  for (int j = 1; j <= a.cols(); ++j)
    for (int i : a.column_support(j)) {
      Tableau by_growth = growth_insert_deterministic(t, {i}, GrowthRule::FCol);
      Tableau by_bumping = column_insert(t, i);
      run.expect(by_growth == by_bumping, "insert " + std::to_string(i) + " into " + to_string(t), to_string(by_bumping),
                 to_string(by_growth));
      t = by_bumping;
    }
  run.expect(t == p, "sequential insertion result", to_string(p), to_string(t));

  auto growths = enumerate_growths(parse_matrix("010;101;111"));
  run.expect(growths.size() == 3, "growths of 010;101;111", "3", std::to_string(growths.size()));

  // Classical growths agree with the bumping algorithms.
  matrix_sweep(run, matrices_up_to(run.rows(3), run.cols(4)), [](const Matrix01& m, std::vector<Failure>& out) {
    for (auto [variant, rule] : {std::pair{DualRskVariant::Column, GrowthRule::FCol},
                                 std::pair{DualRskVariant::Row, GrowthRule::FRow}}) {
      auto pq = classical_dual_rsk(m, variant);
      DualGrowth cg = classical_growth(m, rule);
      if (!(pq.first == cg.P() && pq.second == cg.Q()))
        out.push_back({to_string(m) + (rule == GrowthRule::FCol ? " column" : " row"),
                       to_string(pq.first) + " | " + to_string(pq.second),
                       to_string(cg.P()) + " | " + to_string(cg.Q())});
    }
  });

  // Traceability: simultaneous insertion equals sequential insertion, ascending
  // by column insertion and descending by row insertion.
  const int max_entry = 4;
  std::vector<Tableau> ts;
  for (auto& shape : partitions_up_to(run.cells(5)))
    if (shape.length() <= max_entry)
      for (auto& x : enumerate_tableaux(shape, max_entry, Flavor::Ssyt)) ts.push_back(x);
  run.absorb(ts.size(), sweep_items(
                            ts,
                            [&](const Tableau& x, std::vector<Failure>& out) {
                              for (int mask = 1; mask < (1 << max_entry); ++mask) {
                                std::vector<int> vals;
                                for (int v = 1; v <= max_entry; ++v)
                                  if (mask >> (v - 1) & 1) vals.push_back(v);
                                Tableau col = x, row = x;
                                for (int v : vals) col = column_insert(col, v);
                                for (auto it = vals.rbegin(); it != vals.rend(); ++it) row = row_insert(row, *it);
                                std::string in = " of " + std::to_string(mask) + " into " + to_string(x);
                                Tableau gc = growth_insert_deterministic(x, vals, GrowthRule::FCol);
                                Tableau gr = growth_insert_deterministic(x, vals, GrowthRule::FRow);
                                if (!(gc == col)) out.push_back({"F^col insertion" + in, to_string(col), to_string(gc)});
                                if (!(gr == row)) out.push_back({"F^row insertion" + in, to_string(row), to_string(gr)});
                              }
                            },
                            [](const Tableau& x) { return to_string(x); }, run.opts.execution));
}

// ---------------------------------------------------------------- local identities

void suite_sum_to_one(Run& run) {
  frame_sweep(run, run.cells(8), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    CornerFrame f(la, rho);
    const int d = f.d();
    auto show = [](const std::vector<QTFactored>& xs) {
      QTSum s;
      for (auto& x : xs) s.add(x);
      return to_string(s);
    };
    for (int k = 0; k <= d + 1; ++k) {
      for (int nr : {k - 1, k})
        for (auto& R : k_subsets(1, d, nr)) {
          std::vector<QTFactored> xs;
          for (auto& S : k_subsets(0, d, k)) xs.push_back(forward_prob(f, {R, S}));
          if (!qt_sum_equals(xs, QTFactored(1)))
            out.push_back({frame_label(la, rho) + " forward k=" + std::to_string(k) + " " + to_string(SubsetPair{R, {}}),
                           "1", show(xs)});
        }
      for (auto& S : k_subsets(0, d, k)) {
        std::vector<QTFactored> xs;
        for (int nr : {k - 1, k})
          for (auto& R : k_subsets(1, d, nr)) xs.push_back(backward_prob(f, {R, S}));
        if (!qt_sum_equals(xs, QTFactored(1)))
          out.push_back({frame_label(la, rho) + " backward " + to_string(SubsetPair{{}, S}), "1", show(xs)});
      }
    }
  });
}

void suite_compatibility(Run& run) {
  frame_sweep(run, run.cells(8), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    CornerFrame f(la, rho);
    for (auto& p : subset_pairs(f.d())) {
      Partition mu = mu_of(f, p.R), nu = nu_of(f, p.S);
      QTFactored ratio = weight_ratio(mu, la, rho, nu);
      QTFactored fw = forward_prob(f, p), bw = backward_prob(f, p);
      if (!(ratio * fw == bw))
        out.push_back({frame_label(la, rho) + " " + to_string(p), to_string(bw), to_string(ratio * fw)});
      QTFactored regrouped = weight_ratio_regrouped(mu, la, rho, nu);
      if (!(ratio == regrouped))
        out.push_back({frame_label(la, rho) + " " + to_string(p) + " regrouped ratio", to_string(ratio), to_string(regrouped)});
    }
  });
  // Growth level: P(growth) = Pbar(growth) psi_P phi*_Q, the x and y monomials agreeing.
  matrix_sweep(run, matrices_up_to(run.rows(3), run.cols(3)), [](const Matrix01& a, std::vector<Failure>& out) {
    for_each_growth(a, std::vector<Partition>(a.rows() + 1), std::vector<Partition>(a.cols() + 1), GrowthRule::Qt,
                    [&](const DualGrowth& g, const QTFactored& fw) {
                      Tableau p = g.P(), q = g.Q();
                      QTFactored rhs = growth_prob(g, Direction::Backward) * pair_weight(p, q);
                      std::string in = to_string(a) + " -> " + to_string(p) + " | " + to_string(q);
                      if (!(fw == rhs)) out.push_back({in, to_string(rhs), to_string(fw)});
                      if (!(fw == growth_prob(g, Direction::Forward)))
                        out.push_back({in + " product of squares", to_string(fw), to_string(growth_prob(g, Direction::Forward))});
                      std::vector<int> rs(a.rows()), cs(a.cols());
                      for (int i = 1; i <= a.rows(); ++i)
                        for (int j = 1; j <= a.cols(); ++j) rs[i - 1] += a.at(i, j), cs[j - 1] += a.at(i, j);
                      if (p.content() != rs || q.content() != cs) out.push_back({in + " contents", "row and column sums", "differ"});
                      if (!is_dual_growth(g)) out.push_back({in, "a dual growth", "invalid grid"});
                    });
  });
}

void suite_commutation(Run& run) {
  frame_sweep(run, run.cells(8), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    const int d = CornerFrame(la, rho).d();
    for (int k = 0; k <= d + 2; ++k) {
      QTSum down, up;
      for (int j : {k, k - 1})
        if (j >= 0)
          for (auto& mu : D_k(la, rho, j)) down.add(psi(la, mu) * phi_star(rho, mu));
      for (auto& nu : U_k(la, rho, k)) up.add(psi(nu, rho) * phi_star(nu, la));
      if (!down.equals(up)) out.push_back({frame_label(la, rho) + " k=" + std::to_string(k), to_string(up), to_string(down)});
    }
  });
}

void suite_commutation_words(Run& run) {
  const int n = run.cells(8);
  std::vector<Pair> pairs;
  auto all = partitions_up_to(n);
  for (auto& l : all)
    for (auto& r : all)
      if (l.size() >= r.size() && join(l, r).size() <= n) pairs.push_back({l, r});
  const QTFactored conv = QTFactored::binomial(0, 1) / QTFactored::binomial(1, 0);
  run.absorb(pairs.size(), sweep_items(
                               pairs,
                               [&](const Pair& p, std::vector<Failure>& out) {
                                 const Partition &la = p.first, &rho = p.second;
                                 const int k = la.size() - rho.size();
                                 QTSum up, down;
                                 for (auto& nu : U_kl(la, rho, k + 1, 1)) up.add(psi(nu, rho) * phi(nu, la));
                                 for (auto& mu : D_kl(la, rho, k + 1, 1)) down.add(psi(la, mu) * phi(rho, mu));
                                 for (auto& mu : D_kl(la, rho, k, 0)) down.add(conv * psi(la, mu) * phi(rho, mu));
                                 if (!up.equals(down))
                                   out.push_back({frame_label(la, rho) + " k=" + std::to_string(k), to_string(down), to_string(up)});
                               },
                               [](const Pair& p) { return frame_label(p.first, p.second); }, run.opts.execution));
}

// ---------------------------------------------------------------- Cauchy and Pieri

void suite_cauchy(Run& run) {
  const auto points = eval_points(run.opts, 3);
  for (int m = 1; m <= run.rows(3); ++m)
    for (int n = 1; n <= run.cols(3); ++n) {
      const std::string size = std::to_string(m) + "x" + std::to_string(n);
      auto ms = all_matrices(m, n);

      // Row sums and the column sums of the forward probabilities.
      std::vector<std::optional<Distribution<TableauPair>>> fwd(ms.size());
      run.absorb(ms.size(), sweep(
                                ms.size(),
                                [&](std::size_t i, std::vector<Failure>& out) {
                                  try {
                                    fwd[i] = forward_distribution(ms[i]);
                                  } catch (const std::exception& e) {
                                    out.push_back({to_string(ms[i]) + " forward row sum", "1", e.what()});
                                  }
                                },
                                run.opts.execution));
      std::map<TableauPair, QTSum> colsum;
      for (auto& d : fwd)
        if (d)
          for (auto& [pq, v] : d->support()) colsum[pq] += v.qt();

      // All pairs with shape in the m x n box.
      std::vector<TableauPair> pairs;
      for (auto& shape : partitions_up_to(m * n)) {
        if (shape.length() > m || (shape.length() && shape.row(1) > n)) continue;
        auto ps = enumerate_tableaux(shape, m, Flavor::Ssyt);
        auto qs = enumerate_tableaux(shape, n, Flavor::DualSsyt);
        for (auto& p : ps)
          for (auto& q : qs) pairs.push_back({p, q});
      }
      run.expect(pairs.size() == ms.size(), size + " pair count", std::to_string(ms.size()), std::to_string(pairs.size()));

      std::vector<std::optional<Distribution<Matrix01>>> bwd(pairs.size());
      run.absorb(pairs.size(), sweep(
                                   pairs.size(),
                                   [&](std::size_t i, std::vector<Failure>& out) {
                                     const auto& [p, q] = pairs[i];
                                     try {
                                       bwd[i] = backward_distribution(p, q, m, n);
                                     } catch (const std::exception& e) {
                                       out.push_back({pair_label(pairs[i]) + " backward column sum", "1", e.what()});
                                     }
                                     QTFactored w = pair_weight(p, q);
                                     auto it = colsum.find(pairs[i]);
                                     QTSum got = it == colsum.end() ? QTSum() : it->second;
                                     if (!got.equals(w))
                                       out.push_back({size + " sum over A for " + pair_label(pairs[i]), to_string(w), to_string(got)});
                                   },
                                   run.opts.execution));
      std::map<Matrix01, QTSum> rowsum;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (bwd[i]) {
          QTFactored w = pair_weight(pairs[i].first, pairs[i].second);
          for (auto& [a, v] : bwd[i]->support()) rowsum[a] += v.qt() * w;
        }
      for (auto& a : ms) {
        QTSum got = rowsum.count(a) ? rowsum[a] : QTSum();
        run.expect(got.equals(QTFactored(1)), size + " weighted backward sum for " + to_string(a), "1", to_string(got));
      }

      // Coefficientwise dual Cauchy identity at points.
      for (auto& pt : points) {
        std::map<std::pair<Content, Content>, BigRational> lhs, rhs;
        for (auto& a : ms) {
          Content r(m), c(n);
          for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) r[i - 1] += a.at(i, j), c[j - 1] += a.at(i, j);
          lhs[{r, c}] += 1;
        }
        for (auto& [p, q] : pairs) rhs[{p.content(), q.content()}] += qt_eval(pair_weight(p, q), pt.first, pt.second);
        run.expect(lhs == rhs, size + " coefficients at " + point_label(pt), std::to_string(lhs.size()) + " classes",
                   lhs == rhs ? "equal" : "differ");
      }
    }
}

void suite_pieri(Run& run) {
  const auto points = eval_points(run.opts, 3);
  struct Input {
    Partition mu;
    int m;
    int r;
  };
  std::vector<Input> inputs;
  for (auto& mu : partitions_up_to(run.cells(4)))
    for (int m = 1; m <= run.rows(3); ++m)
      for (int r = 0; r <= m; ++r) inputs.push_back({mu, m, r});
  auto label = [](const Input& in) {
    return "mu=" + to_string(in.mu) + " m=" + std::to_string(in.m) + " r=" + std::to_string(in.r);
  };
  run.absorb(inputs.size(), sweep_items(
                                inputs,
                                [&](const Input& in, std::vector<Failure>& out) {
                                  auto strips = add_vertical_strips(in.mu, in.r);
                                  std::set<Partition> want(strips.begin(), strips.end());
                                  // A single column with r ones, every placement.
                                  for (auto& rows : k_subsets(1, in.m, in.r)) {
                                    Matrix01 a(in.m, 1);
                                    for (int i : rows) a.set(i, 1, 1);
                                    auto d = skew_forward_distribution(a, std::vector<Partition>(in.m + 1, in.mu), {in.mu, in.mu});
                                    std::set<Partition> got;
                                    for (auto& [chains, v] : d.support())
                                      if (!v.is_zero()) got.insert(chains.second.back());
                                    if (got != want)
                                      out.push_back({label(in) + " column " + to_string(a), std::to_string(want.size()) + " vertical strips",
                                                     std::to_string(got.size()) + " shapes"});
                                  }
                                  // e_r P_mu = sum over vertical strips of phi*_{lambda/mu} P_lambda.
                                  for (auto& pt : points) {
                                    std::map<Content, BigRational> lhs, rhs;
                                    for (auto& [c, v] : macdonald_eval(MacdonaldKind::P, in.mu, in.m, pt.first, pt.second))
                                      for (auto& s : k_subsets(0, in.m - 1, in.r)) {
                                        Content c2 = c;
                                        for (int i : s) ++c2[i];
                                        lhs[c2] += v;
                                      }
                                    for (auto& la : strips) {
                                      BigRational w = qt_eval(phi_star(la, in.mu), pt.first, pt.second);
                                      for (auto& [c, v] : macdonald_eval(MacdonaldKind::P, la, in.m, pt.first, pt.second)) rhs[c] += w * v;
                                    }
                                    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
                                    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
                                    if (lhs != rhs) out.push_back({label(in) + " Pieri at " + point_label(pt), "equal coefficients", "differ"});
                                  }
                                },
                                label, run.opts.execution));
}

// ---------------------------------------------------------------- formulas

void suite_interpolation(Run& run) {
  SplitMix64 rng(run.opts.seed);
  const int max_d = std::min(run.cells(4), 6);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = trial % (max_d + 1);
    std::set<BigRational> used;
    auto fresh = [&] {
      BigRational x;
      do {
        long den = 1 + static_cast<long>(rng.next() % 7);
        long num = static_cast<long>(rng.next() % 81) - 40;
        x = BigRational(num, den);
        x.canonicalize();
      } while (used.count(x));
      used.insert(x);
      return x;
    };
    std::vector<BigRational> a, b;
    for (int i = 0; i <= d; ++i) a.push_back(fresh());
    for (int i = 0; i <= d; ++i) b.push_back(fresh());
    std::string label = "trial " + std::to_string(trial) + " d=" + std::to_string(d);
    run.guarded(label, [&] {
      for (int k = 0; k <= d + 1; ++k)
        for (auto& R : k_subsets(0, d, k)) {
          BigRational s = 0;
          for (auto& S : k_subsets(0, d, k)) s += interpolation_weight(R, S, a, b);
          run.expect(s == 1, label + " " + to_string(SubsetPair{R, {}}), "1", s.get_str());
        }
    });
  }
}

void suite_tau_paths(Run& run) {
  std::vector<int> parts;
  for (int i = 8; i >= 1; --i) parts.push_back(i);
  const Partition staircase(parts);
  CornerFrame f(staircase, staircase);
  SubsetPair p{{1, 4, 8}, {2, 4, 5, 7}};
  auto h = path_heights(8, p);
  std::vector<int> u(h.u.begin() + 1, h.u.end());
  auto join_ints = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  run.expect(u == std::vector<int>{1, -2, -1, 1, -1, 0, 0, -1}, "up heights d=8 " + to_string(p),
             "1,-2,-1,1,-1,0,0,-1", join_ints(u));
  run.expect(h.d == std::vector<int>{-1, -2, 1, -1, 1, 0, 0, -1, 0}, "down heights d=8 " + to_string(p),
             "-1,-2,1,-1,1,0,0,-1,0", join_ints(h.d));
  MonomialQT expect = (f.S(2) / f.R(1)) * (f.S(4) / f.R(4)) * (f.S(7) / f.R(8)).pow(-1) * (f.O(0) / f.I(3)).pow(-1) *
                      (f.O(1) / f.I(2)).pow(-2) * (f.O(3) / f.I(5)).pow(-1);
  run.expect(tau_monomial(f, p) == expect, "tau d=8 " + to_string(p), to_string(expect), to_string(tau_monomial(f, p)));

  frame_sweep(run, run.cells(8), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    CornerFrame fr(la, rho);
    for (auto& sp : subset_pairs(fr.d())) {
      QTFactored fw = forward_prob(fr, sp), bw = backward_prob(fr, sp);
      MonomialQT m = tau_monomial(fr, sp);
      std::vector<int> r0{0};
      r0.insert(r0.end(), sp.R.begin(), sp.R.end());
      bool trivial = sp.S == sp.R || sp.S == r0;
      bool ok = fw.mono() == m && bw.mono() == m && fw.coeff() == 1 && bw.coeff() == 1 && m.eq >= 0 && m.et >= 0 &&
                m.is_one() == trivial;
      if (!ok) out.push_back({frame_label(la, rho) + " " + to_string(sp), to_string(m), to_string(fw)});
    }
  });
}

void suite_abc_oracle(Run& run) {
  CornerFrame f(Partition{2, 1}, Partition{2, 1});
  QTFactored v = alpha_beta_gamma_prob(f, {{2}, {0, 1}}, Direction::Forward);
  const char* e = "q(1-t)^2(1-q)/((1-q^2 t^2)(1-q t)(1-q^2))";
  run.expect(same_qt(v, e), "lambda=rho=(2,1) R={2} S={0,1}", e, to_string(v));
  frame_sweep(run, run.cells(8), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    CornerFrame fr(la, rho);
    for (auto& sp : subset_pairs(fr.d())) {
      QTFactored fw = forward_prob(fr, sp), bw = backward_prob(fr, sp);
      QTFactored af = alpha_beta_gamma_prob(fr, sp, Direction::Forward);
      QTFactored ab = alpha_beta_gamma_prob(fr, sp, Direction::Backward);
      if (!(af == fw)) out.push_back({frame_label(la, rho) + " forward " + to_string(sp), to_string(fw), to_string(af)});
      if (!(ab == bw)) out.push_back({frame_label(la, rho) + " backward " + to_string(sp), to_string(bw), to_string(ab)});
      Partition mu = mu_of(fr, sp.R), nu = nu_of(fr, sp.S);
      if (!(square_forward(mu, la, rho, nu) == fw))
        out.push_back({frame_label(la, rho) + " square " + to_string(sp), to_string(fw), to_string(square_forward(mu, la, rho, nu))});
    }
  });
}

void suite_cell_weights(Run& run) {
  frame_sweep(run, run.cells(7), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    CornerFrame f(la, rho);
    for (auto& sp : subset_pairs(f.d())) {
      Partition mu = mu_of(f, sp.R), nu = nu_of(f, sp.S);
      QTFactored total;
      for (const Cell& c : nu.cells()) total *= cell_weight_table(mu, la, rho, nu, c);
      QTFactored ratio = weight_ratio(mu, la, rho, nu);
      if (!(total == ratio)) out.push_back({frame_label(la, rho) + " " + to_string(sp), to_string(ratio), to_string(total)});
    }
  });
}

void suite_specializations(Run& run) {
  CornerFrame f(Partition{2, 1}, Partition{2, 1});
  QTFactored w = forward_prob_qwhittaker(f, {{2}, {0, 2}});
  run.expect(same_qt(w, "(1-q)/(1-q^2)"), "t=0, lambda=rho=(2,1) R={2} S={0,2}", "(1-q)/(1-q^2)", to_string(w));
  QTFactored hl = forward_prob_hall_littlewood(f, {{2}, {1, 2}});
  run.expect(same_qt(hl, "t"), "q=0, lambda=rho=(2,1) R={2} S={1,2}", "t", to_string(hl));
  frame_sweep(run, run.cells(8), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    CornerFrame fr(la, rho);
    for (auto& sp : subset_pairs(fr.d())) {
      QTFactored fw = forward_prob(fr, sp);
      QTFactored qw = forward_prob_qwhittaker(fr, sp), lim_t = qt_limit(fw, Limit::TToZero);
      QTFactored hlp = forward_prob_hall_littlewood(fr, sp), lim_q = qt_limit(fw, Limit::QToZero);
      if (!(qw == lim_t)) out.push_back({frame_label(la, rho) + " t=0 " + to_string(sp), to_string(lim_t), to_string(qw)});
      if (!(hlp == lim_q)) out.push_back({frame_label(la, rho) + " q=0 " + to_string(sp), to_string(lim_q), to_string(hlp)});
    }
    const int d = fr.d();
    for (int k = 0; k <= d + 1; ++k)
      for (int nr : {k - 1, k})
        for (auto& R : k_subsets(1, d, nr)) {
          AlphaRational s;
          for (auto& S : k_subsets(0, d, k)) s += jack_forward_prob(fr, {R, S});
          if (!(s == AlphaRational(1)))
            out.push_back({frame_label(la, rho) + " Jack sum k=" + std::to_string(k) + " " + to_string(SubsetPair{R, {}}), "1", to_string(s)});
        }
  });
}

void suite_limits_rsk(Run& run) {
  frame_sweep(run, run.cells(8), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    CornerFrame f(la, rho);
    const int d = f.d();
    for (int k = 0; k <= d + 1; ++k)
      for (int nr : {k - 1, k})
        for (auto& R : k_subsets(1, d, nr)) {
          auto srow = f_row_subset(f, R, k), scol = f_col_subset(f, R, k);
          for (auto& S : k_subsets(0, d, k)) {
            QTFactored fw = forward_prob(f, {R, S});
            auto ind = [](bool b) { return b ? QTFactored(1) : QTFactored::zero(); };
            std::string in = frame_label(la, rho) + " " + to_string(SubsetPair{R, S});
            if (!(qt_diagonal_limit(fw, false) == ind(S == srow))) out.push_back({in + " q=t->0", to_string(ind(S == srow)), to_string(fw)});
            if (!(qt_diagonal_limit(fw, true) == ind(S == scol))) out.push_back({in + " q=t->inf", to_string(ind(S == scol)), to_string(fw)});
            QTFactored iterated = qt_limit(qt_limit(fw, Limit::TToZero), Limit::QToZero);
            if (!(iterated == ind(S == srow))) out.push_back({in + " t->0 then q->0", to_string(ind(S == srow)), to_string(iterated)});
          }
        }
  });
  matrix_sweep(run, matrices_up_to(run.rows(3), run.cols(3)), [](const Matrix01& a, std::vector<Failure>& out) {
    for (bool inf : {false, true}) {
      std::map<TableauPair, QTSum> lim;
      for_each_growth(a, std::vector<Partition>(a.rows() + 1), std::vector<Partition>(a.cols() + 1), GrowthRule::Qt,
                      [&](const DualGrowth& g, const QTFactored& p) { lim[{g.P(), g.Q()}].add(qt_diagonal_limit(p, inf)); });
      auto want = classical_dual_rsk(a, inf ? DualRskVariant::Column : DualRskVariant::Row);
      for (auto& [pq, v] : lim) {
        bool ok = v.equals(pq == want ? QTFactored(1) : QTFactored::zero());
        if (!ok) out.push_back({to_string(a) + (inf ? " q=t->inf " : " q=t->0 ") + pair_label(pq), pq == want ? "1" : "0", to_string(v)});
      }
    }
  });
}

void suite_inversion_symmetry(Run& run) {
  frame_sweep(run, run.cells(8), [](const Partition& la, const Partition& rho, std::vector<Failure>& out) {
    CornerFrame f(la, rho);
    for (auto& sp : subset_pairs(f.d())) {
      Partition mu = mu_of(f, sp.R), nu = nu_of(f, sp.S);
      Partition lc = conjugate(la), rc = conjugate(rho), mc = conjugate(mu), nc = conjugate(nu);
      QTFactored a = qt_substitute_inverse(forward_prob(f, sp)), b = qt_swap(square_forward(mc, rc, lc, nc));
      if (!(a == b)) out.push_back({frame_label(la, rho) + " forward " + to_string(sp), to_string(b), to_string(a)});
      QTFactored c = qt_substitute_inverse(backward_prob(f, sp)), e = qt_swap(square_backward(mc, rc, lc, nc));
      if (!(c == e)) out.push_back({frame_label(la, rho) + " backward " + to_string(sp), to_string(e), to_string(c)});
    }
  });
}

void suite_transpose_symmetry(Run& run) {
  matrix_sweep(run, matrices_up_to(run.rows(3), run.cols(3)), [](const Matrix01& a, std::vector<Failure>& out) {
    if (!transpose_symmetry_check(a)) out.push_back({to_string(a), "symmetric", "not symmetric"});
  });
}

void suite_jack_swap(Run& run) {
  std::vector<Matrix01> words;
  for (auto& a : matrices_up_to(run.rows(3), run.cols(3)))
    if (a.at_most_one_per_column() && a.cols() >= 2) words.push_back(a);
  matrix_sweep(run, words, [](const Matrix01& a, std::vector<Failure>& out) {
    for (int k = 1; k < a.cols(); ++k)
      if (!jack_swap_check(a, k)) out.push_back({to_string(a) + " columns " + std::to_string(k) + "," + std::to_string(k + 1), "equal P-marginals", "differ"});
  });

  // Jack P-marginals agree across the three 2x3 matrices.
  std::vector<Distribution<Tableau>> margs;
  for (auto& row : kTable) margs.push_back(p_marginal(parse_matrix(row.matrix), Mode::alpha()));
  Tableau p11 = ssyt("1,1;2");
  run.expect(margs[0].at(p11).equals(parse_alpha_expression("2a/(2a+1)")), "P=1,1;2 marginal of 110;001", "2a/(2a+1)",
             to_string(margs[0].at(p11)));
  for (int i = 1; i < 3; ++i)
    run.expect(same_distribution(margs[0], margs[i]), std::string("P-marginals of 110;001 and ") + kTable[i].matrix,
               "equal", "differ");

  // A doubled column breaks the invariance.
  Matrix01 a = parse_matrix("001;110;001");
  Matrix01 swapped = a.swap_columns(2);
  Tableau t = ssyt("1,2;2,3");
  run.guarded("doubled column 001;110;001", [&] {
    bool invariant = jack_swap_check(a, 2, false);
    run.expect(!invariant, "001;110;001 columns 2,3", "P-marginals differ", invariant ? "equal" : "differ");
    Value before = p_marginal(a, Mode::alpha()).at(t), after = p_marginal(swapped, Mode::alpha()).at(t);
    run.expect(before.is_zero(), "P=1,2;2,3 from 001;110;001", "0", to_string(before));
    const char* e = "a/(2(1+a)^2)";
    run.expect(after.equals(parse_alpha_expression(e)), "P=1,2;2,3 from 010;101;010", e, to_string(after));
    std::vector<QTFactored> probs;
    for (auto& g : enumerate_growths(swapped))
      if (g.P() == t) probs.push_back(growth_prob(g, Direction::Forward));
    std::vector<std::string> want{"q^3 t(1-q)(1-t)^2/((1+q)(1-q t)^3)", "(1-q)^2(1-t)/((1+t)(1-q t)^3)"};
    bool ok = probs.size() == 2 &&
              ((same_qt(probs[0], want[0]) && same_qt(probs[1], want[1])) || (same_qt(probs[0], want[1]) && same_qt(probs[1], want[0])));
    std::string shown;
    for (auto& x : probs) shown += to_string(x) + "; ";
    run.expect(ok, "growths of 010;101;010 with P=1,2;2,3", want[0] + "; " + want[1], shown);
  });
  try {
    jack_swap_check(a, 2);
    run.expect(false, "001;110;001 with the column constraint", "ColumnConstraintViolated", "accepted");
  } catch (const Error& e) {
    run.expect(e.code() == Errc::ColumnConstraintViolated, "001;110;001 with the column constraint",
               "ColumnConstraintViolated", e.what());
  }
}

// ---------------------------------------------------------------- two-column configurations

void suite_appendix(Run& run) {
  struct Input {
    Partition mu, lambda, rho;
  };
  const int max_nu = run.cells(9);
  std::vector<Input> inputs;
  for (auto& mu : partitions_up_to(std::max(0, max_nu - 2)))
    for (auto& x : outer_corners(mu)) {
      Partition rho = add_cell(mu, x);
      for (int r = 0; mu.size() + r + 2 <= max_nu; ++r)
        for (auto& la : add_horizontal_strips(mu, r))
          if (meet(la, rho) == mu || contains(la, rho)) inputs.push_back({mu, la, rho});
    }
  std::vector<int> generic(inputs.size(), 0), nongeneric(inputs.size(), 0), ratio_checks(inputs.size(), 0);
  auto label = [](const Input& in) {
    return "mu=" + to_string(in.mu) + " lambda=" + to_string(in.lambda) + " rho=" + to_string(in.rho);
  };
  run.absorb(inputs.size(), sweep(
                                inputs.size(),
                                [&](std::size_t i, std::vector<Failure>& out) {
                                  const Input& in = inputs[i];
                                  try {
                                    auto dI = two_column_distribution(in.mu, in.lambda, in.rho, true, Mode::alpha());
                                    auto dII = two_column_distribution(in.mu, in.lambda, in.rho, false, Mode::alpha());
                                    if (!same_distribution(dI, dII)) out.push_back({label(in), "equal distributions of nu", "differ"});
                                    if (meet(in.lambda, in.rho) != in.mu) return;
                                    // Exact (q,t) ratios when both neighbours of the cell rho/mu are addable.
                                    Cell x = skew_cells(in.rho, in.mu).at(0);
                                    Partition u = join(in.lambda, in.rho);
                                    auto ac = addable_outer_corners(u, in.rho);
                                    Cell xn{x.x, x.y + 1}, xw{x.x + 1, x.y};
                                    bool is_generic = std::count(ac.begin(), ac.end(), xn) && std::count(ac.begin(), ac.end(), xw);
                                    (is_generic ? generic : nongeneric)[i] = 1;
                                    if (!is_generic) return;
                                    auto qI = two_column_distribution(in.mu, in.lambda, in.rho, true, Mode::qt());
                                    auto qII = two_column_distribution(in.mu, in.lambda, in.rho, false, Mode::qt());
                                    CornerFrame f(in.lambda, in.mu);
                                    auto index = [&](const Cell& c) {
                                      for (int j = 0; j <= f.d(); ++j)
                                        if (f.addable(j) == c) return j;
                                      return -1;
                                    };
                                    const LaurentPoly2 q = LaurentPoly2::monomial({1, 0}), t = LaurentPoly2::monomial({0, 1}),
                                                       one = LaurentPoly2::constant(1);
                                    for (auto& [nu, v] : qI.support()) {
                                      RationalQT a = to_rational(v.qt()), b = to_rational(qII.at(nu).qt());
                                      auto cells = skew_cells(nu, in.lambda);
                                      int two_paths = 0;
                                      for (auto& c : cells) two_paths += index(c) >= 0;
                                      RationalQT expected;
                                      if (two_paths == 2) {
                                        LaurentPoly2 s1 = LaurentPoly2::monomial(f.S(index(x)));
                                        LaurentPoly2 s2 = LaurentPoly2::monomial(f.S(index(skew_cells(nu, u).at(0))));
                                        expected = RationalQT{t * s1 - q * s2, one} / RationalQT{s1 * (one - q + q * t) - q * s2, one};
                                      } else {
                                        expected = skew_cells(nu, u).at(0) == xn ? RationalQT{t, one} : RationalQT{one, q};
                                      }
                                      ++ratio_checks[i];
                                      if (!(a == b * expected)) out.push_back({label(in) + " nu=" + to_string(nu), "ratio I/II", "differs"});
                                    }
                                  } catch (const std::exception& e) {
                                    out.push_back({label(in), "no exception", e.what()});
                                  }
                                },
                                run.opts.execution));
  auto total = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  run.notes.push_back(std::to_string(total(ratio_checks)) + " exact ratios checked on " + std::to_string(total(generic)) +
                      " generic configurations; " + std::to_string(total(nongeneric)) +
                      " configurations with a missing corner next to rho/mu checked in the Jack limit only");
}

// ---------------------------------------------------------------- registry

using SuiteFn = void (*)(Run&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"table1", suite_table1},
      {"table2-jack", suite_table2},
      {"example-4-2", suite_example_4_2},
      {"example-3-5", suite_example_3_5},
      {"example-4-14", suite_example_4_14},
      {"example-words", suite_example_words},
      {"dual-rsk-ex-2-1", suite_dual_rsk},
      {"sum-to-one", suite_sum_to_one},
      {"compatibility", suite_compatibility},
      {"commutation", suite_commutation},
      {"commutation-words", suite_commutation_words},
      {"cauchy", suite_cauchy},
      {"pieri", suite_pieri},
      {"interpolation", suite_interpolation},
      {"tau-paths", suite_tau_paths},
      {"abc-oracle", suite_abc_oracle},
      {"cell-weights", suite_cell_weights},
      {"specializations", suite_specializations},
      {"limits-rsk", suite_limits_rsk},
      {"inversion-symmetry", suite_inversion_symmetry},
      {"transpose-symmetry", suite_transpose_symmetry},
      {"jack-swap", suite_jack_swap},
      {"appendix", suite_appendix},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

VerificationReport run_suite(std::string_view name, const VerifyOptions& opts) {
  auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
  if (it == registry().end()) throw Error(Errc::UnknownSuite, "no suite named '" + std::string(name) + "'");
  auto start = std::chrono::steady_clock::now();
  Run run{opts};
  it->second(run);
  std::sort(run.failures.begin(), run.failures.end());
  VerificationReport r;
  r.suite = it->first;
  r.instances = run.instances;
  r.failures = std::move(run.failures);
  r.notes = std::move(run.notes);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json fs = nlohmann::json::array();
  for (auto& f : r.failures) fs.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  nlohmann::json j = {{"suite", r.suite}, {"instances", r.instances}, {"ok", r.ok()}, {"failures", fs}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << (r.ok() ? "ok" : "FAILED") << ", " << r.instances << " instances, " << r.failures.size()
     << " failures, " << std::fixed;
  os.precision(2);
  os << r.seconds << " s\n";
  for (auto& n : r.notes) os << "  note: " << n << "\n";
  for (auto& f : r.failures) os << "  " << f.input << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
  return os.str();
}

}  // namespace qtrsk
