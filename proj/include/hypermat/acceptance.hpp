#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hypermat {

struct AcceptanceOptions {
  std::int64_t hyperfield_window = 4;
  // Grade window for vector and covector enumeration on graded instances.
  std::int64_t matroid_window = 4;
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0;
};

constexpr int kCriteria = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
// Runs criteria 1..11 in order, reporting each one as soon as it finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opt = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace hypermat
