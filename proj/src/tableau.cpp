#include "qtrsk/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "qtrsk/error.hpp"

namespace qtrsk {

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Ssyt: return "ssyt";
    case Flavor::DualSsyt: return "dual_ssyt";
    case Flavor::PartialSyt: return "partial_syt";
  }
  return "?";
}

namespace {

void check_step(const Partition& a, const Partition& b, Flavor flavor, int i) {
  auto where = [&] { return "step " + std::to_string(i) + ": " + to_string(a) + " -> " + to_string(b); };
  switch (flavor) {
    case Flavor::Ssyt:
      if (!is_horizontal_strip(a, b)) throw Error(Errc::NotHorizontalStrip, where());
      break;
    case Flavor::DualSsyt:
      if (!is_vertical_strip(a, b)) throw Error(Errc::NotVerticalStrip, where());
      break;
    case Flavor::PartialSyt:
      if (!contains(b, a) || b.size() - a.size() > 1) throw Error(Errc::InvalidArgument, where());
      break;
  }
}

}  // namespace

Tableau::Tableau(std::vector<Partition> chain, Flavor flavor) : chain_(std::move(chain)), flavor_(flavor) {
  if (chain_.empty() || !chain_.front().empty()) throw Error(Errc::InvalidArgument, "chain must start at the empty shape");
  for (std::size_t i = 1; i < chain_.size(); ++i) check_step(chain_[i - 1], chain_[i], flavor_, static_cast<int>(i));
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows, Flavor flavor, int max_entry) {
  int m = max_entry;
  for (const auto& r : rows)
    for (int v : r) {
      if (v < 1) throw Error(Errc::InvalidArgument, "entries must be positive");
      m = std::max(m, v);
    }
  std::vector<Partition> chain;
  for (int i = 0; i <= m; ++i) {
    std::vector<int> parts;
    for (const auto& r : rows) {
      int c = 0;
      while (c < static_cast<int>(r.size()) && r[c] <= i) ++c;
      for (int x = c; x < static_cast<int>(r.size()); ++x)
        if (r[x] <= i) throw Error(Errc::InvalidArgument, "row entries out of order");
      parts.push_back(c);
    }
    try {
      chain.push_back(Partition(parts));
    } catch (const Error&) {
      throw Error(Errc::InvalidArgument, "entries <= " + std::to_string(i) + " do not form a partition");
    }
  }
  return Tableau(std::move(chain), flavor);
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out(shape().length());
  for (std::size_t i = 1; i < chain_.size(); ++i)
    for (const Cell& c : skew_cells(chain_[i], chain_[i - 1])) {
      auto& row = out[c.y - 1];
      if (static_cast<int>(row.size()) < c.x) row.resize(c.x, 0);
      row[c.x - 1] = static_cast<int>(i);
    }
  return out;
}

std::vector<int> Tableau::content() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < chain_.size(); ++i) out.push_back(chain_[i].size() - chain_[i - 1].size());
  return out;
}

Tableau Tableau::with_max_entry(int m) const {
  std::vector<Partition> c = chain_;
  while (static_cast<int>(c.size()) - 1 > m) {
    if (c.back() != c[c.size() - 2]) throw Error(Errc::InvalidArgument, "tableau has entries above " + std::to_string(m));
    c.pop_back();
  }
  while (static_cast<int>(c.size()) - 1 < m) c.push_back(c.back());
  Tableau t;
  t.chain_ = std::move(c);
  t.flavor_ = flavor_;
  return t;
}

bool operator==(const Tableau& a, const Tableau& b) { return a.flavor_ == b.flavor_ && a.rows() == b.rows(); }

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
  if (auto c = a.shape() <=> b.shape(); c != 0) return c;
  if (auto c = a.rows() <=> b.rows(); c != 0) return c;
  return a.flavor_ <=> b.flavor_;
}

Tableau parse_tableau(std::string_view text, Flavor flavor) {
  std::vector<std::vector<int>> rows;
  std::string s(text);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty() || s == "-") return Tableau::from_rows({}, flavor);
  std::size_t pos = 0;
  std::vector<int> row;
  while (true) {
    std::size_t end = s.find_first_of(",;", pos);
    std::string_view tok(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::ParseError, "bad tableau entry at position " + std::to_string(pos) + " in '" + s + "'");
    row.push_back(v);
    if (end == std::string::npos || s[end] == ';') {
      rows.push_back(std::move(row));
      row.clear();
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  try {
    return Tableau::from_rows(rows, flavor);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string(e.what()) + " in '" + s + "'");
  }
}

std::string to_string(const Tableau& t) {
  auto rows = t.rows();
  if (rows.empty()) return "-";
  std::string out;
  for (std::size_t y = 0; y < rows.size(); ++y) {
    if (y) out += ';';
    for (std::size_t x = 0; x < rows[y].size(); ++x) {
      if (x) out += ',';
      out += std::to_string(rows[y][x]);
    }
  }
  return out;
}

std::vector<Tableau> enumerate_tableaux(const Partition& shape, int m, Flavor flavor) {
  std::vector<Tableau> out;
  std::vector<Partition> chain{Partition()};
  std::function<void()> rec = [&] {
    const Partition cur = chain.back();
    int i = static_cast<int>(chain.size());
    int remaining = shape.size() - cur.size();
    if (i > m) {
      if (remaining == 0) out.emplace_back(chain, flavor);
      return;
    }
    int max_r = flavor == Flavor::PartialSyt ? std::min(1, remaining) : remaining;
    for (int r = 0; r <= max_r; ++r) {
      auto nexts = flavor == Flavor::DualSsyt ? add_vertical_strips(cur, r) : add_horizontal_strips(cur, r);
      for (auto& nx : nexts) {
        if (!contains(shape, nx)) continue;
        chain.push_back(nx);
        rec();
        chain.pop_back();
      }
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qtrsk
