#include "qtrsk/sweeps.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

namespace qtrsk {

int thread_count() {
  if (const char* env = std::getenv("QTRSK_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return omp_get_max_threads();
}

std::vector<Failure> sweep(std::size_t n, const Check& check, Execution ex) {
  std::vector<std::vector<Failure>> per(n);
  auto run = [&](std::size_t i) {
    try {
      check(i, per[i]);
    } catch (const std::exception& e) {
      per[i].push_back({"instance " + std::to_string(i), "no exception", e.what()});
    }
  };
  if (ex == Execution::Parallel) {
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) run(i);
  }
  std::vector<Failure> out;
  for (auto& f : per) out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Partition, Partition>> compatible_pairs(int max_union) {
  std::vector<std::pair<Partition, Partition>> out;
  auto all = partitions_up_to(max_union);
  for (auto& l : all)
    for (auto& r : all)
      if (join(l, r).size() <= max_union && is_compatible_pair(l, r)) out.push_back({l, r});
  return out;
}

std::vector<SubsetPair> subset_pairs(int d) {
  std::vector<SubsetPair> out;
  for (int k = 0; k <= d + 1; ++k)
    for (int nr : {k - 1, k})
      for (auto& R : k_subsets(1, d, nr))
        for (auto& S : k_subsets(0, d, k)) out.push_back({R, S});
  return out;
}

std::string to_string(const SubsetPair& p) {
  auto set = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  return "R=" + set(p.R) + " S=" + set(p.S);
}

}  // namespace qtrsk
