#include "qtrsk/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "qtrsk/error.hpp"

namespace qtrsk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(Errc::InvalidArgument, "not a partition");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::column(int x) const {
  if (x < 1) return 0;
  int h = 0;
  while (h < length() && parts_[h] >= x) ++h;
  return h;
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int y = 1; y <= length(); ++y)
    for (int x = 1; x <= row(y); ++x) out.push_back({x, y});
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
      throw Error(Errc::ParseError, "bad partition part at position " + std::to_string(pos) + " in '" +
                                        std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error&) {
    throw Error(Errc::ParseError, "parts not weakly decreasing in '" + std::string(text) + "'");
  }
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string to_string(const Cell& c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int x = 1; x <= p.row(1); ++x) out.push_back(p.column(x));
  return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int y = 1; y <= inner.length(); ++y)
    if (inner.row(y) > outer.row(y)) return false;
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  std::vector<int> out;
  for (int y = 1; y <= std::min(a.length(), b.length()); ++y) out.push_back(std::min(a.row(y), b.row(y)));
  return Partition(std::move(out));
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> out;
  for (int y = 1; y <= std::max(a.length(), b.length()); ++y) out.push_back(std::max(a.row(y), b.row(y)));
  return Partition(std::move(out));
}

Partition add_cell(const Partition& p, const Cell& c) {
  std::vector<int> parts = p.parts();
  if (c.y == p.length() + 1 && c.x == 1) {
    parts.push_back(1);
  } else if (c.y <= p.length() && c.x == p.row(c.y) + 1 && (c.y == 1 || p.row(c.y - 1) > p.row(c.y))) {
    parts[c.y - 1] += 1;
  } else {
    throw Error(Errc::InvalidArgument, to_string(c) + " is not an outer corner of " + to_string(p));
  }
  return Partition(std::move(parts));
}

Partition remove_cell(const Partition& p, const Cell& c) {
  if (!(p.contains(c) && c.x == p.row(c.y) && p.row(c.y + 1) < c.x))
    throw Error(Errc::InvalidArgument, to_string(c) + " is not an inner corner of " + to_string(p));
  std::vector<int> parts = p.parts();
  parts[c.y - 1] -= 1;
  return Partition(std::move(parts));
}

std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) throw Error(Errc::NotContained, to_string(inner) + " in " + to_string(outer));
  std::vector<Cell> out;
  for (int y = 1; y <= outer.length(); ++y)
    for (int x = inner.row(y) + 1; x <= outer.row(y); ++x) out.push_back({x, y});
  return out;
}

bool is_horizontal_strip(const Partition& mu, const Partition& lambda) {
  if (!contains(lambda, mu)) return false;
  for (int y = 1; y < lambda.length(); ++y)
    if (lambda.row(y + 1) > mu.row(y)) return false;
  return true;
}

bool is_vertical_strip(const Partition& mu, const Partition& lambda) {
  if (!contains(lambda, mu)) return false;
  for (int y = 1; y <= lambda.length(); ++y)
    if (lambda.row(y) - mu.row(y) > 1) return false;
  return true;
}

namespace {

void require_cell(const Partition& p, const Cell& c) {
  if (!p.contains(c)) throw Error(Errc::CellOutsideShape, to_string(c) + " not in " + to_string(p));
}

}  // namespace

int arm(const Partition& p, const Cell& c) {
  require_cell(p, c);
  return p.row(c.y) - c.x;
}

int leg(const Partition& p, const Cell& c) {
  require_cell(p, c);
  return p.column(c.x) - c.y;
}

int hook(const Partition& p, const Cell& c) { return arm(p, c) + leg(p, c) + 1; }

QTFactored hook_lower(const Partition& p, const Cell& c) {
  if (!p.contains(c)) return QTFactored();
  return QTFactored::binomial(arm(p, c), leg(p, c) + 1);
}

QTFactored hook_upper(const Partition& p, const Cell& c) {
  if (!p.contains(c)) return QTFactored();
  return QTFactored::binomial(arm(p, c) + 1, leg(p, c));
}

QTFactored b_ratio(const Partition& p, const Cell& c) { return hook_lower(p, c) / hook_upper(p, c); }

SkewCellSets skew_cell_sets(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) throw Error(Errc::NotContained, to_string(mu) + " in " + to_string(lambda));
  SkewCellSets s;
  for (int y = 1; y <= lambda.length(); ++y) {
    if (lambda.row(y) == mu.row(y)) continue;
    for (int x = 1; x <= lambda.row(y); ++x) s.r_cells.insert({x, y});
  }
  for (int x = 1; x <= lambda.row(1); ++x) {
    if (lambda.column(x) == mu.column(x)) continue;
    for (int y = 1; y <= lambda.column(x); ++y) s.c_cells.insert({x, y});
  }
  return s;
}

std::vector<Cell> inner_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int y = 1; y <= p.length(); ++y)
    if (p.row(y) > p.row(y + 1)) out.push_back({p.row(y), y});
  return out;
}

std::vector<Cell> outer_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int y = 1; y <= p.length() + 1; ++y)
    if (y == 1 || p.row(y - 1) > p.row(y)) out.push_back({p.row(y) + 1, y});
  return out;
}

bool is_compatible_pair(const Partition& lambda, const Partition& rho) {
  Partition m = meet(lambda, rho);
  return is_horizontal_strip(m, lambda) && is_vertical_strip(m, rho);
}

namespace {

void require_compatible(const Partition& lambda, const Partition& rho) {
  if (!is_compatible_pair(lambda, rho))
    throw Error(Errc::IncompatiblePair, "(" + to_string(lambda) + ") / (" + to_string(rho) + ")");
}

// All k-subsets of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Cell> removable_inner_corners(const Partition& lambda, const Partition& rho) {
  require_compatible(lambda, rho);
  Partition m = meet(lambda, rho);
  std::vector<Cell> out;
  for (const Cell& c : inner_corners(m)) {
    Partition mu = remove_cell(m, c);
    if (is_horizontal_strip(mu, lambda) && is_vertical_strip(mu, rho)) out.push_back(c);
  }
  return out;
}

std::vector<Cell> addable_outer_corners(const Partition& lambda, const Partition& rho) {
  require_compatible(lambda, rho);
  Partition n = join(lambda, rho);
  std::vector<Cell> out;
  for (const Cell& c : outer_corners(n)) {
    Partition nu = add_cell(n, c);
    if (is_vertical_strip(lambda, nu) && is_horizontal_strip(rho, nu)) out.push_back(c);
  }
  return out;
}

std::vector<Partition> D_k(const Partition& lambda, const Partition& rho, int k) {
  auto corners = removable_inner_corners(lambda, rho);
  Partition m = meet(lambda, rho);
  std::vector<Partition> out;
  for_each_subset(static_cast<int>(corners.size()), k, [&](const std::vector<int>& idx) {
    std::vector<int> parts = m.parts();
    for (int i : idx) parts[corners[i].y - 1] -= 1;
    out.emplace_back(std::move(parts));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> U_k(const Partition& lambda, const Partition& rho, int k) {
  auto corners = addable_outer_corners(lambda, rho);
  Partition n = join(lambda, rho);
  std::vector<Partition> out;
  for_each_subset(static_cast<int>(corners.size()), k, [&](const std::vector<int>& idx) {
    std::vector<int> parts = n.parts();
    for (int i : idx) {
      const Cell& c = corners[i];
      if (c.y > static_cast<int>(parts.size()))
        parts.push_back(1);
      else
        parts[c.y - 1] += 1;
    }
    out.emplace_back(std::move(parts));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> D_kl(const Partition& lambda, const Partition& rho, int k, int l) {
  std::vector<Partition> out;
  for (const Partition& mu : subpartitions(meet(lambda, rho))) {
    if (lambda.size() - mu.size() != k || rho.size() - mu.size() != l) continue;
    if (is_horizontal_strip(mu, lambda) && is_horizontal_strip(mu, rho)) out.push_back(mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> U_kl(const Partition& lambda, const Partition& rho, int k, int l) {
  std::vector<Partition> out;
  for (const Partition& nu : add_horizontal_strips(lambda, l)) {
    if (nu.size() - rho.size() != k) continue;
    if (is_horizontal_strip(rho, nu)) out.push_back(nu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& mu, int r) {
  std::vector<Partition> out;
  if (r < 0) return out;
  const int rows = mu.length() + 1;
  std::vector<int> nu(rows);
  // Row y may grow up to mu_{y-1}; the first row is unbounded.
  std::function<void(int, int)> rec = [&](int y, int rest) {
    if (y > rows) {
      if (rest == 0) out.emplace_back(nu);
      return;
    }
    int base = mu.row(y);
    int cap = y == 1 ? base + rest : std::min(mu.row(y - 1), base + rest);
    for (int v = base; v <= cap; ++v) {
      nu[y - 1] = v;
      rec(y + 1, rest - (v - base));
    }
  };
  rec(1, r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> add_vertical_strips(const Partition& mu, int r) {
  std::vector<Partition> out;
  for (const Partition& p : add_horizontal_strips(conjugate(mu), r)) out.push_back(conjugate(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  std::vector<int> cur(p.length());
  std::function<void(int)> rec = [&](int y) {
    if (y > p.length()) {
      out.emplace_back(cur);
      return;
    }
    int cap = y == 1 ? p.row(1) : std::min(p.row(y), cur[y - 2]);
    for (int v = 0; v <= cap; ++v) {
      cur[y - 1] = v;
      rec(y + 1);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qtrsk
