#pragma once

// The acceptance criteria as runnable checks. Each check has default bounds;
// CheckOptions::max overrides the primary bound of a check (see bounds_help).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chebtl/homology.hpp"
#include "chebtl/io.hpp"

namespace chebtl {

struct CheckOptions {
  std::optional<int> max;
  Exec exec = Exec::parallel;
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool passed = false;
  std::vector<std::string> notes;  // failures, and reported-but-not-asserted findings
  Json data;                       // per-check table
};

struct CriterionInfo {
  int id;
  const char* key;
  const char* title;
  int default_max;
  const char* bounds_help;
};

const std::vector<CriterionInfo>& criteria();

// Throws invalid_argument for an unknown key.
CriterionResult run_criterion(const std::string& key, const CheckOptions& opt = {});
std::vector<CriterionResult> run_all(const CheckOptions& opt = {});

Json to_json(const CriterionResult& r);

}  // namespace chebtl
