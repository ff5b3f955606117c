#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "avoid/permutation.hpp"

namespace avoid {

/// One step of the decomposition of a start-small {1243, 2134}-avoider with
/// at least one key mid-123 entry into a shorter avoider (with one fewer key
/// mid-123 entry) and a start-small 123-avoider.
struct DecompositionStep {
  Permutation sigma1;  // length j
  Permutation sigma2;  // length n + 1 - j
  int b_value = 0;     // last mid-123 entry
  int a_value = 0;     // smallest entry before b
  int c_value = 0;     // the unique entry after b exceeding b
  std::size_t j = 0;   // position of b
  bool key_case = false;
  std::size_t r = 0;   // entries deleted in the non-key case; 0 when b is key

  friend bool operator==(const DecompositionStep&, const DecompositionStep&) = default;
};

/// Quantities read off (sigma1, sigma2) when rebuilding the original
/// permutation. Positions are 1-based.
struct InverseParams {
  std::size_t n = 0;
  std::size_t j = 0;      // length of sigma1
  std::size_t r = 0;      // sigma1 = mu, r, r-1, ..., 1 with r maximal
  std::size_t p = 0;      // length of mu
  std::size_t q = 0;      // length of sigma2 minus 1
  std::size_t i_pos = 0;  // position of a: position of min(mu)
  std::size_t k_pos = 0;  // position of c: j - 1 + position of max(sigma2)
  int a_value = 0;
  int c_value = 0;
  std::size_t s = 0;      // longest increasing terminal run of sigma1[i_pos+1, p]

  friend bool operator==(const InverseParams&, const InverseParams&) = default;
};

enum class Checks { off, on };

#ifdef NDEBUG
inline constexpr Checks kDefaultChecks = Checks::off;
#else
inline constexpr Checks kDefaultChecks = Checks::on;
#endif

/// Splits pi into (sigma1, sigma2).
///
/// Write pi = tau1 b tau2 with b the last mid-123 entry, a = min(tau1) and c
/// the unique entry of tau2 above b. sigma2 is standardize(a tau2). When b is
/// key, sigma1 is standardize(tau1 c). Otherwise the longest decreasing
/// terminal run of tau1 with no entry above c (length r >= 1) is removed from
/// tau1 c, every remaining entry is raised by r, r, r-1, ..., 1 is appended
/// and the result standardized.
///
/// Throws DomainError naming the failed precondition if pi contains 1243 or
/// 2134, is not start-small, or has no mid-123 entry. With Checks::on the
/// output is also checked for class membership.
DecompositionStep crucial_forward(const Permutation& pi, Checks checks = kDefaultChecks);

// Reads the reconstruction parameters; validates the inputs like
// crucial_inverse.
InverseParams inverse_params(const Permutation& sigma1, const Permutation& sigma2);

/// Rebuilds pi from (sigma1, sigma2). sigma1 must be a start-small
/// {1243, 2134}-avoider and sigma2 a start-small 123-avoider, both of length
/// at least 2 (DomainError otherwise).
Permutation crucial_inverse(const Permutation& sigma1, const Permutation& sigma2);

// An ordered list of start-small 123-avoiders, each of length >= 2.
using StartSmallList = std::vector<Permutation>;

/// Iterated decomposition: (pi) when pi has no key mid-123 entry, otherwise
/// phi(sigma1) followed by sigma2.
StartSmallList phi(const Permutation& pi, Checks checks = kDefaultChecks);

/// Left fold of crucial_inverse over the list. DomainError names the index
/// (1-based) of the first invalid element. The head may be any start-small
/// {1243, 2134}-avoider of length >= 2, so partially reduced lists such as
/// (sigma1, sigma2) of one decomposition step fold back too; the remaining
/// elements must be start-small 123-avoiders.
Permutation phi_inverse(const StartSmallList& list);

// Throws DomainError describing the first violated list invariant.
void validate_start_small_list(const StartSmallList& list);

// Elements joined by " | ", e.g. "1 2 | 1 2 | 1 2 | 1 2".
std::string to_string(const StartSmallList& list);
StartSmallList parse_start_small_list(std::string_view text);

}  // namespace avoid
