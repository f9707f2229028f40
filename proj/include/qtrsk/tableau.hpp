#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qtrsk/partition.hpp"

namespace qtrsk {

enum class Flavor { Ssyt, DualSsyt, PartialSyt };

std::string_view flavor_name(Flavor f);

// A tableau stored as its chain of shapes T^(0) = empty, ..., T^(m), where
// T^(i) holds the entries <= i. Trailing repeated shapes are allowed so that
// the chain length can match a matrix dimension.
class Tableau {
 public:
  Tableau() = default;
  // Throws NotHorizontalStrip / NotVerticalStrip / InvalidArgument.
  Tableau(std::vector<Partition> chain, Flavor flavor);
  // rows[0] is the bottom row.
  static Tableau from_rows(const std::vector<std::vector<int>>& rows, Flavor flavor, int max_entry = 0);

  Flavor flavor() const { return flavor_; }
  const std::vector<Partition>& chain() const { return chain_; }
  int max_entry() const { return static_cast<int>(chain_.size()) - 1; }
  const Partition& shape() const { return chain_.back(); }
  std::vector<std::vector<int>> rows() const;
  std::vector<int> content() const;
  // Same entries with the chain extended (or trimmed of trailing repeats) to length m.
  Tableau with_max_entry(int m) const;

  // Compares entries and flavor; chain padding is ignored.
  friend bool operator==(const Tableau& a, const Tableau& b);
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

 private:
  std::vector<Partition> chain_{Partition()};
  Flavor flavor_ = Flavor::Ssyt;
};

// Rows from the bottom separated by ';', entries by ','. "-" or "" is empty.
Tableau parse_tableau(std::string_view text, Flavor flavor);
std::string to_string(const Tableau& t);

// All tableaux of the given shape and flavor with entries in 1..m, chains of length m.
std::vector<Tableau> enumerate_tableaux(const Partition& shape, int m, Flavor flavor);

}  // namespace qtrsk
