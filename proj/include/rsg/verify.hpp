#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rsg::verify {

struct Options {
  int threads = 0;  // 0 = auto; single-threaded checks ignore this
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int number = 0;
  std::string id;
  std::string title;
  double seconds = 0;
  std::vector<Check> checks;

  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Stable ids, in suite order.
const std::vector<std::string>& criterion_ids();

CriterionResult run_criterion(std::string_view id, const Options& opts);
std::vector<CriterionResult> run_suite(const std::vector<std::string>& ids, const Options& opts);

std::string format_result(const CriterionResult& result);         // one pass/fail line + details
std::string verdicts_json(const std::vector<CriterionResult>& results);

}  // namespace rsg::verify
