#pragma once

// Self-check suites run by `affchar verify`. Each check is independent and
// reports pass/fail with a one-line detail; nothing throws past run_suite.

#include <cstdint>
#include <string>
#include <vector>

namespace affchar {

enum class Suite { Demazure, Weyl, Pipeline, All };

Suite parse_suite(const std::string& text);
std::string suite_label(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_suite(Suite suite, int n, std::uint64_t seed = 20240601);

}  // namespace affchar
