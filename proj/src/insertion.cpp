#include "qtrsk/insertion.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qtrsk {

namespace {

// rows[y][x] with y from the bottom
using Rows = std::vector<std::vector<int>>;

Rows columns_of(const Rows& rows) {
  Rows cols;
  for (std::size_t y = 0; y < rows.size(); ++y)
    for (std::size_t x = 0; x < rows[y].size(); ++x) {
      if (cols.size() <= x) cols.resize(x + 1);
      cols[x].push_back(rows[y][x]);
    }
  return cols;
}

Rows rows_of(const Rows& cols) {
  Rows rows;
  for (std::size_t x = 0; x < cols.size(); ++x)
    for (std::size_t y = 0; y < cols[x].size(); ++y) {
      if (rows.size() <= y) rows.resize(y + 1);
      rows[y].push_back(cols[x][y]);
    }
  return rows;
}

// Returns the cell that was added, 1-based.
Cell column_insert_rows(Rows& rows, int k) {
  Rows cols = columns_of(rows);
  for (std::size_t x = 0;; ++x) {
    if (x == cols.size()) cols.emplace_back();
    auto& col = cols[x];
    auto it = std::lower_bound(col.begin(), col.end(), k);
    if (it == col.end()) {
      col.push_back(k);
      rows = rows_of(cols);
      return {static_cast<int>(x) + 1, static_cast<int>(col.size())};
    }
    std::swap(*it, k);
  }
}

Cell row_insert_rows(Rows& rows, int k) {
  for (std::size_t y = 0;; ++y) {
    if (y == rows.size()) rows.emplace_back();
    auto& row = rows[y];
    auto it = std::upper_bound(row.begin(), row.end(), k);
    if (it == row.end()) {
      row.push_back(k);
      return {static_cast<int>(row.size()), static_cast<int>(y) + 1};
    }
    std::swap(*it, k);
  }
}

void check_values(const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) throw Error(Errc::InvalidArgument, "inserted values must be positive");
    if (i && values[i] <= values[i - 1]) throw Error(Errc::InvalidArgument, "inserted values must increase strictly");
  }
}

int entry(const Rows& rows, const Cell& c) { return rows[c.y - 1][c.x - 1]; }

}  // namespace

Tableau column_insert(const Tableau& t, int k) {
  Rows rows = t.rows();
  column_insert_rows(rows, k);
  return Tableau::from_rows(rows, Flavor::Ssyt, t.max_entry());
}

Tableau row_insert(const Tableau& t, int k) {
  Rows rows = t.rows();
  row_insert_rows(rows, k);
  return Tableau::from_rows(rows, Flavor::Ssyt, t.max_entry());
}

TableauPair classical_dual_rsk(const Matrix01& a, DualRskVariant variant) {
  Rows p, q;
  for (int j = 1; j <= a.cols(); ++j) {
    std::vector<int> col = a.column_support(j);
    if (variant == DualRskVariant::Row) std::reverse(col.begin(), col.end());
    for (int i : col) {
      Cell c = variant == DualRskVariant::Column ? column_insert_rows(p, i) : row_insert_rows(p, i);
      if (static_cast<int>(q.size()) < c.y) q.resize(c.y);
      q[c.y - 1].resize(c.x);
      q[c.y - 1][c.x - 1] = j;
    }
  }
  return {Tableau::from_rows(p, Flavor::Ssyt, a.rows()), Tableau::from_rows(q, Flavor::DualSsyt, a.cols())};
}

Distribution<Tableau> growth_insert(const Tableau& t, const std::vector<int>& values, GrowthRule rule,
                                    const Mode& mode) {
  check_values(values);
  if (t.flavor() != Flavor::Ssyt) throw Error(Errc::InvalidArgument, "insertion needs an SSYT");
  const int top = std::max(t.max_entry(), values.empty() ? 0 : values.back());
  const Tableau tt = t.with_max_entry(top);
  const Rows rows = tt.rows();
  const auto& chain = tt.chain();

  Distribution<Tableau> out(mode);
  std::vector<Partition> hat{Partition()};
  std::function<void(int, std::map<int, int>, const QTFactored&)> rec = [&](int i, std::map<int, int> queue,
                                                                           const QTFactored& prob) {
    if (i > top) {
      out.add(Tableau(hat, Flavor::Ssyt), prob);
      return;
    }
    const Partition &mu = chain[i - 1], &la = chain[i], rho = hat[i - 1];
    const int a = std::binary_search(values.begin(), values.end(), i) ? 1 : 0;
    const int k = queue.count(i) ? queue.at(i) : 0;
    const Partition base = join(la, rho);
    for (auto& [nu, p] : local_forward_choices(rule, mu, la, rho, a)) {
      if (nu.size() - base.size() != k) throw Error(Errc::InvalidArgument, "queue and growth disagree");
      std::map<int, int> next = queue;
      next.erase(i);
      for (const Cell& c : skew_cells(nu, base))
        if (tt.shape().contains(c)) ++next[entry(rows, c)];
      hat.push_back(nu);
      rec(i + 1, next, prob * p);
      hat.pop_back();
    }
  };
  std::map<int, int> queue;
  for (int v : values) queue[v] = 1;
  rec(1, queue, QTFactored());
  out.check_normalized("insertion into " + to_string(t));
  return out;
}

Tableau growth_insert_deterministic(const Tableau& t, const std::vector<int>& values, GrowthRule rule) {
  if (rule == GrowthRule::Qt) throw Error(Errc::InvalidArgument, "the qt rule is not deterministic");
  return growth_insert(t, values, rule).support().begin()->first;
}

Distribution<Tableau> qrst_word_insert(const Tableau& t, int i, const Mode& mode) {
  check_values({i});
  if (t.flavor() != Flavor::Ssyt) throw Error(Errc::InvalidArgument, "insertion needs an SSYT");
  const int top = std::max(t.max_entry(), i);
  const Tableau tt = t.with_max_entry(top);
  const Rows rows = tt.rows();
  const auto& chain = tt.chain();

  Distribution<Tableau> out(mode);
  std::vector<Partition> hat(chain.begin(), chain.begin() + i);
  // pending: value to place at step y (0 if none)
  std::function<void(int, int, const QTFactored&)> rec = [&](int y, int pending, const QTFactored& prob) {
    if (y > top) {
      out.add(Tableau(hat, Flavor::Ssyt), prob);
      return;
    }
    const Partition &mu = chain[y - 1], &la = chain[y], rho = hat[y - 1];
    if (pending != y) {
      hat.push_back(join(la, rho));
      rec(y + 1, pending, prob);
      hat.pop_back();
      return;
    }
    const int k = la.size() - mu.size();
    for (const Partition& nu : U_kl(la, rho, y == i ? k + 1 : k, 1)) {
      const Cell c = skew_cells(nu, la).at(0);
      const int bumped = tt.shape().contains(c) ? entry(rows, c) : 0;
      hat.push_back(nu);
      rec(y + 1, bumped, prob * square_forward(mu, la, rho, nu));
      hat.pop_back();
    }
  };
  rec(i, i, QTFactored());
  out.check_normalized("word insertion into " + to_string(t));
  return out;
}

}  // namespace qtrsk
