#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qtrsk/qt_factored.hpp"

namespace qtrsk {

// French coordinates: x-th cell in the y-th row from the bottom, both from 1.
struct Cell {
  int x = 1;
  int y = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Rows bottom to top, then left to right.
  friend auto operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Trailing zeros are dropped; throws InvalidArgument if not a partition.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // lambda_y, 0 beyond the length (rows are 1-based).
  int row(int y) const { return y >= 1 && y <= length() ? parts_[y - 1] : 0; }
  // lambda'_x
  int column(int x) const;
  bool contains(const Cell& c) const { return c.x >= 1 && c.y >= 1 && c.x <= row(c.y); }
  std::vector<Cell> cells() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Total order: length, then parts lexicographically.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

struct SkewCellSets {
  std::set<Cell> r_cells;
  std::set<Cell> c_cells;
};

Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);
std::string to_string(const Cell& c);

Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);  // inner is a subset of outer
Partition meet(const Partition& a, const Partition& b);         // intersection
Partition join(const Partition& a, const Partition& b);         // union
Partition add_cell(const Partition& p, const Cell& c);
Partition remove_cell(const Partition& p, const Cell& c);
std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner);

bool is_horizontal_strip(const Partition& mu, const Partition& lambda);
bool is_vertical_strip(const Partition& mu, const Partition& lambda);

int arm(const Partition& p, const Cell& c);
int leg(const Partition& p, const Cell& c);
int hook(const Partition& p, const Cell& c);

QTFactored hook_lower(const Partition& p, const Cell& c);  // 1 - q^a t^(l+1)
QTFactored hook_upper(const Partition& p, const Cell& c);  // 1 - q^(a+1) t^l
QTFactored b_ratio(const Partition& p, const Cell& c);

SkewCellSets skew_cell_sets(const Partition& lambda, const Partition& mu);

std::vector<Cell> inner_corners(const Partition& p);
std::vector<Cell> outer_corners(const Partition& p);

bool is_compatible_pair(const Partition& lambda, const Partition& rho);
std::vector<Cell> removable_inner_corners(const Partition& lambda, const Partition& rho);
std::vector<Cell> addable_outer_corners(const Partition& lambda, const Partition& rho);

std::vector<Partition> D_k(const Partition& lambda, const Partition& rho, int k);
std::vector<Partition> U_k(const Partition& lambda, const Partition& rho, int k);
// {mu : mu < lambda, mu < rho horizontally, |lambda/mu| = k, |rho/mu| = l}
std::vector<Partition> D_kl(const Partition& lambda, const Partition& rho, int k, int l);
// {nu : nu > lambda, nu > rho horizontally, |nu/rho| = k, |nu/lambda| = l}
std::vector<Partition> U_kl(const Partition& lambda, const Partition& rho, int k, int l);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);
// All nu containing mu with nu/mu a horizontal (vertical) strip of size r.
std::vector<Partition> add_horizontal_strips(const Partition& mu, int r);
std::vector<Partition> add_vertical_strips(const Partition& mu, int r);
// All subpartitions of p.
std::vector<Partition> subpartitions(const Partition& p);

}  // namespace qtrsk
