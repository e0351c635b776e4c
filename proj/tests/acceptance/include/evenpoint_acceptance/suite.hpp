#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace evenpoint::acceptance {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// "A1" .. "A14" in order.
std::vector<std::string> criterion_ids();

/// Runs one criterion; exceptions are reported as failures.
CriterionResult run_criterion(std::string_view id);

/// Runs every criterion in order, calling `on_result` after each one.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {});

/// "A1   PASS  title  [detail] (0.01 s)"
std::string format_result(const CriterionResult& result);

}  // namespace evenpoint::acceptance
