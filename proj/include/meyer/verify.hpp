#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "meyer/meyer_functions.hpp"

namespace meyer {

// One named check within a suite; `total` cases ran, `failed` of them
// failed, `detail` describes the first failure, `group` tags the genus
// block the line belongs to. Lines with `record` set are per-case records
// already formatted as field | field | ... and are rendered with a
// trailing pass/fail field instead of counts.
struct CheckLine {
  std::string label;
  std::string group;
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string detail;
  bool record = false;

  bool pass() const { return failed == 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> checks;

  bool pass() const {
    for (const CheckLine& c : checks)
      if (!c.pass()) return false;
    return true;
  }
  std::size_t cases_total() const {
    std::size_t n = 0;
    for (const CheckLine& c : checks) n += c.total;
    return n;
  }
  std::size_t cases_failed() const {
    std::size_t n = 0;
    for (const CheckLine& c : checks) n += c.failed;
    return n;
  }
};

// The suite names accepted by run_suite, in canonical order ("all" not
// included).
const std::vector<std::string>& suite_names();

// Runs one suite. g = 0 means the suite's default genus range; a positive
// g restricts to that genus (suites with genus floors throw GenusTooSmall
// below them). `cases` scales the randomized checks; fixed-value checks
// ignore it.
SuiteResult run_suite(const std::string& name, std::size_t g,
                      std::uint64_t seed, std::size_t cases);

// "all" expands to every suite; anything else must be a valid suite name.
std::vector<SuiteResult> run_verify(const std::string& suite, std::size_t g,
                                    std::uint64_t seed, std::size_t cases);

// The deterministic sample streams behind the randomized suites, exposed
// so independent consumers (the acceptance gate) can revisit the exact
// same elements.
std::uint64_t suite_stream_seed(std::uint64_t seed, std::string_view suite,
                                std::size_t g);
UrSpElement ursp_stream_sample(std::uint64_t stream_seed, std::size_t g,
                               std::size_t index);
SpElement sp_stream_sample(std::uint64_t stream_seed, std::size_t g,
                           std::size_t index);

}  // namespace meyer
