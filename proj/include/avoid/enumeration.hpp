#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "avoid/permutation.hpp"

namespace avoid {

using BigCount = boost::multiprecision::cpp_int;

// The two patterns the bijection and the series are about.
std::vector<Pattern> patterns_1243_2134();

/// Streams the permutations of [n] avoiding every pattern, in lexicographic
/// order of one-line notation.
///
/// The generator extends a prefix one position at a time and abandons it as
/// soon as the newest entry completes an occurrence of a pattern. Since any
/// occurrence in a prefix is an occurrence in every extension, no avoider is
/// lost. Only the current prefix is held in memory.
class AvoiderGenerator {
 public:
  AvoiderGenerator(std::size_t n, std::vector<Pattern> patterns);

  // Next avoider, or nullopt when exhausted.
  std::optional<Permutation> next();

 private:
  bool admissible() const;
  bool advance();

  std::size_t n_;
  std::vector<Pattern> patterns_;
  std::vector<int> prefix_;
  std::vector<bool> used_;
  bool done_ = false;
};

// Callback form of AvoiderGenerator; same order.
void for_each_avoider(std::size_t n, std::span<const Pattern> patterns,
                      const std::function<void(const Permutation&)>& visit);

// Filters all n! permutations through std::next_permutation. Debug path and
// an independent check on the pruned generator.
std::vector<Permutation> enumerate_avoiders_naive(std::size_t n, std::span<const Pattern> patterns);

std::vector<Permutation> enumerate_avoiders(std::size_t n, std::span<const Pattern> patterns);

struct ClassDescriptor {
  std::size_t n = 0;
  std::vector<Pattern> patterns;
  bool start_small_only = false;
  // Number of key mid-123 entries.
  std::optional<std::size_t> k;
  // Position of the last mid-123 entry; requires k.
  std::optional<std::size_t> j;

  // Throws DomainError when j is given without k or k, j are out of range.
  void validate() const;
  bool matches(const Permutation& p) const;
};

// Descriptor for A_n, A_{n,k} or A_{n,k,j}: start-small {1243, 2134}-avoiders.
ClassDescriptor start_small_avoider_class(std::size_t n, std::optional<std::size_t> k = std::nullopt,
                                          std::optional<std::size_t> j = std::nullopt);

// Position of the last mid-123 entry, if any.
std::optional<std::size_t> last_mid123_position(const Permutation& p);

void for_each_in_class(const ClassDescriptor& d, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_class(const ClassDescriptor& d);
BigCount count_class(const ClassDescriptor& d);

// |{p of length n : p avoids 123 and is start-small}|.
BigCount count_start_small_123_avoiders(std::size_t n);

}  // namespace avoid
