#pragma once

/**
 * @file report.hpp
 * @brief Verification-suite results and a small deterministic worker pool.
 */

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "semihall/errors.hpp"

namespace semihall {

struct Failure {
  std::string instance;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failed = 0;
  std::uint64_t aborted = 0;
  std::vector<Failure> failures;  // the first few, in instance order

  bool passed() const { return failed == 0 && aborted == 0; }
  void merge(const SuiteReport& o);
  nlohmann::json to_json() const;
  std::string summary() const;
};

constexpr std::size_t kMaxRecordedFailures = 10;

/// Outcome of a single suite instance: nullopt means it held.
using Check = std::optional<Failure>;

/**
 * Runs `check(i)` for i in [0, n) on `jobs` threads and assembles the report
 * in index order, so the result does not depend on scheduling. A
 * TruncationError thrown by an instance counts as an abort.
 */
SuiteReport run_suite(const std::string& name, std::size_t n, unsigned jobs,
                      const std::function<Check(std::size_t)>& check);

/// Exit-code contract shared by the CLI: 0 pass, 1 violation, 2 truncation abort.
int exit_code_for(const std::vector<SuiteReport>& reports);

}  // namespace semihall
