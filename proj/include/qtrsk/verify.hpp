#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qtrsk/sweeps.hpp"

namespace qtrsk {

struct VerifyOptions {
  // Size bounds; unset means the suite's default.
  std::optional<int> max_cells;
  std::optional<int> rows;
  std::optional<int> cols;
  std::uint64_t seed = 1;
  // Replaces the seeded evaluation points of the suites that evaluate at points.
  std::optional<std::pair<BigRational, BigRational>> eval;
  Execution execution = Execution::Parallel;
};

struct VerificationReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

// Wall time is left out so that equal runs give identical output.
nlohmann::json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

const std::vector<std::string>& suite_names();
// Throws UnknownSuite.
VerificationReport run_suite(std::string_view name, const VerifyOptions& opts = {});

}  // namespace qtrsk
