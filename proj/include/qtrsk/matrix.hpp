#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qtrsk {

// An m x n {0,1}-matrix, indexed from 1 like the rows and columns of a growth.
class Matrix01 {
 public:
  Matrix01() = default;
  Matrix01(int m, int n) : m_(m), n_(n), a_(static_cast<std::size_t>(m) * n, 0) {}
  // Throws InvalidArgument on ragged rows or entries other than 0/1.
  explicit Matrix01(const std::vector<std::vector<int>>& rows);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int at(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, int v);

  int ones() const;
  int column_sum(int j) const;
  bool at_most_one_per_column() const;
  // Rows i with a 1 in column j, increasing.
  std::vector<int> column_support(int j) const;

  Matrix01 transpose() const;
  // Swaps columns k and k+1.
  Matrix01 swap_columns(int k) const;

  friend bool operator==(const Matrix01&, const Matrix01&) = default;
  friend auto operator<=>(const Matrix01& a, const Matrix01& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.a_ <=> b.a_;
  }

 private:
  std::size_t index(int i, int j) const;

  int m_ = 0, n_ = 0;
  std::vector<unsigned char> a_;
};

// "110;001": rows separated by ';'.
Matrix01 parse_matrix(std::string_view text);
std::string to_string(const Matrix01& a);

// All 2^(mn) matrices of the given size, in increasing order.
std::vector<Matrix01> all_matrices(int m, int n);

}  // namespace qtrsk
