#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "avoid/series.hpp"

namespace avoid {

struct CheckResult {
  std::string name;
  std::string range;   // parameter range swept, e.g. "n <= 8"
  bool passed = true;
  std::string detail;  // first counterexample, expected vs actual
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
  // Fixed-width table, one row per check, then an overall line.
  std::string table() const;
  std::string json() const;
};

struct VerifyOptions {
  std::size_t max_n = 8;
  std::size_t order = 100;
};

CheckResult check_lemma_no_key_means_123_avoiding(std::size_t max_n);
CheckResult check_lemma_unique_c(std::size_t max_n);
CheckResult check_crucial_round_trips(std::size_t max_n);
CheckResult check_phi_round_trips(std::size_t max_n);
CheckResult check_product_identity(std::size_t max_n);
// Compares [x^n]full against brute-force avoider counts for 1 <= n <= max_n.
CheckResult check_full_series_vs_enumeration(const PowerSeries& full, std::size_t max_n);
CheckResult check_start_small_series_vs_enumeration(const PowerSeries& start_small, std::size_t max_n);
CheckResult check_series_identities(std::size_t order);
CheckResult check_kotesovec(const PowerSeries& full, std::size_t order);
CheckResult check_catalan_cube(std::size_t max_n);

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace avoid
