#include "qtrsk/matrix.hpp"

#include <algorithm>

#include "qtrsk/error.hpp"

namespace qtrsk {

Matrix01::Matrix01(const std::vector<std::vector<int>>& rows) {
  m_ = static_cast<int>(rows.size());
  n_ = m_ ? static_cast<int>(rows[0].size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw Error(Errc::InvalidArgument, "ragged matrix rows");
    for (int v : r) {
      if (v != 0 && v != 1) throw Error(Errc::InvalidArgument, "matrix entries must be 0 or 1");
      a_.push_back(static_cast<unsigned char>(v));
    }
  }
  if (n_ == 0) m_ = 0, a_.clear();
}

std::size_t Matrix01::index(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_)
    throw Error(Errc::InvalidArgument, "matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void Matrix01::set(int i, int j, int v) {
  if (v != 0 && v != 1) throw Error(Errc::InvalidArgument, "matrix entries must be 0 or 1");
  a_[index(i, j)] = static_cast<unsigned char>(v);
}

int Matrix01::ones() const { return static_cast<int>(std::count(a_.begin(), a_.end(), 1)); }

int Matrix01::column_sum(int j) const {
  int s = 0;
  for (int i = 1; i <= m_; ++i) s += at(i, j);
  return s;
}

bool Matrix01::at_most_one_per_column() const {
  for (int j = 1; j <= n_; ++j)
    if (column_sum(j) > 1) return false;
  return true;
}

std::vector<int> Matrix01::column_support(int j) const {
  std::vector<int> out;
  for (int i = 1; i <= m_; ++i)
    if (at(i, j)) out.push_back(i);
  return out;
}

Matrix01 Matrix01::transpose() const {
  Matrix01 t(n_, m_);
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= n_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix01 Matrix01::swap_columns(int k) const {
  if (k < 1 || k >= n_) throw Error(Errc::InvalidArgument, "column swap index out of range");
  Matrix01 b = *this;
  for (int i = 1; i <= m_; ++i) {
    b.set(i, k, at(i, k + 1));
    b.set(i, k + 1, at(i, k));
  }
  return b;
}

Matrix01 parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  for (std::size_t p = 0; p < text.size(); ++p) {
    char c = text[p];
    if (c == ';') {
      rows.emplace_back();
    } else if (c == '0' || c == '1') {
      rows.back().push_back(c - '0');
    } else if (c != ' ') {
      throw Error(Errc::ParseError, "unexpected '" + std::string(1, c) + "' at position " + std::to_string(p) +
                                        " in matrix '" + std::string(text) + "'");
    }
  }
  if (rows.size() == 1 && rows[0].empty()) return Matrix01();
  for (const auto& r : rows)
    if (r.size() != rows[0].size() || r.empty())
      throw Error(Errc::ParseError, "matrix rows must be nonempty and of equal length in '" + std::string(text) + "'");
  return Matrix01(rows);
}

std::string to_string(const Matrix01& a) {
  std::string out;
  for (int i = 1; i <= a.rows(); ++i) {
    if (i > 1) out += ';';
    for (int j = 1; j <= a.cols(); ++j) out += static_cast<char>('0' + a.at(i, j));
  }
  return out;
}

std::vector<Matrix01> all_matrices(int m, int n) {
  std::vector<Matrix01> out;
  const int cells = m * n;
  if (cells > 24) throw Error(Errc::InvalidArgument, "too many matrices to enumerate");
  for (unsigned long bits = 0; bits < (1UL << cells); ++bits) {
    Matrix01 a(m, n);
    for (int c = 0; c < cells; ++c)
      if (bits >> (cells - 1 - c) & 1) a.set(c / n + 1, c % n + 1, 1);
    out.push_back(a);
  }
  return out;
}

}  // namespace qtrsk
