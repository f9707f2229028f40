#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qtrsk/local_rules.hpp"

namespace qtrsk {

enum class Execution { Serial, Parallel };

// QTRSK_THREADS if set to a positive integer, otherwise the OpenMP default.
int thread_count();

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;

  friend auto operator<=>(const Failure&, const Failure&) = default;
};

using Check = std::function<void(std::size_t, std::vector<Failure>&)>;

// Runs check(i, failures) for every i < n. An exception thrown by a check is
// recorded as a failure of instance i. The result is sorted, so serial and
// parallel runs return the same list.
std::vector<Failure> sweep(std::size_t n, const Check& check, Execution ex);
// Same, over the items of a vector, with label(item) naming the failing input on exceptions.
template <class T, class F, class L>
std::vector<Failure> sweep_items(const std::vector<T>& items, F&& check, L&& label, Execution ex) {
  return sweep(
      items.size(),
      [&](std::size_t i, std::vector<Failure>& out) {
        try {
          check(items[i], out);
        } catch (const std::exception& e) {
          out.push_back({label(items[i]), "no exception", e.what()});
        }
      },
      ex);
}

// Pairs (lambda, rho) with |lambda u rho| <= max_union forming a frame.
std::vector<std::pair<Partition, Partition>> compatible_pairs(int max_union);
// Every (R, S) with |R| in {k-1, k} and |S| = k, for k in 0..d+1.
std::vector<SubsetPair> subset_pairs(int d);

std::string to_string(const SubsetPair& p);

}  // namespace qtrsk
