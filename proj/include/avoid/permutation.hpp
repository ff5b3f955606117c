#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avoid {

// A sequence of distinct positive integers; not necessarily a permutation
// of an interval.
using EntryWord = std::vector<int>;

/// A permutation of [n] in one-line notation.
///
/// Positions are 1-based: `p[1]` is the first entry and `p[size()]` the last.
/// The underlying storage is exposed through `entries()` as a 0-based span
/// for algorithms that want iterators.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  // 1-based access, unchecked.
  int operator[](std::size_t pos) const noexcept { return entries_[pos - 1]; }
  // 1-based access, throws std::out_of_range.
  int at(std::size_t pos) const;

  std::span<const int> entries() const noexcept { return entries_; }
  const std::vector<int>& vec() const noexcept { return entries_; }

  // Entries at positions [from, to], 1-based and inclusive. Empty when from > to.
  EntryWord slice(std::size_t from, std::size_t to) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// A permutation used as a classical pattern.
class Pattern {
 public:
  explicit Pattern(Permutation perm) : perm_(std::move(perm)) {}
  Pattern(std::initializer_list<int> entries) : perm_(entries) {}

  const Permutation& perm() const noexcept { return perm_; }
  std::size_t size() const noexcept { return perm_.size(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  Permutation perm_;
};

// Space-separated one-line notation, e.g. "11 2 12 9 7 8 4 5 6 1 10 3".
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);
std::string to_string(const Pattern& q);

// Compact digit form, e.g. "1243". Only valid for patterns of length <= 9.
Pattern parse_pattern(std::string_view digits);
// Comma-separated digit patterns, e.g. "1243,2134".
std::vector<Pattern> parse_pattern_list(std::string_view text);

/// Replaces the smallest entry by 1, the next smallest by 2, and so on.
/// Throws InvalidInput if `w` has repeated entries.
Permutation standardize(std::span<const int> w);

/// True iff some subsequence of `w` is order-isomorphic to `q`.
/// `w` only needs distinct entries, so prefixes of a permutation qualify.
bool contains(std::span<const int> w, const Pattern& q);
inline bool contains(const Permutation& p, const Pattern& q) { return contains(p.entries(), q); }

/// True iff `w` contains `q` through an occurrence that uses the last entry
/// of `w` as its last element. Used to test prefix extensions incrementally.
bool contains_ending_at_last(std::span<const int> w, const Pattern& q);

bool avoids_all(const Permutation& p, std::span<const Pattern> patterns);

// Linear-time test for 123.
bool contains_123(std::span<const int> w);

/// Positions t (1-based, increasing) with p[t] > p[u] for all u > t.
std::vector<std::size_t> right_to_left_maxima(const Permutation& p);

/// Positions of entries acting as the "2" of some 123, increasing.
std::vector<std::size_t> mid123_entries(const Permutation& p);

/// Mid-123 positions t whose predecessor is smaller than p[t] or is a
/// right-to-left maximum.
std::vector<std::size_t> key_mid123_entries(const Permutation& p);

// p[1] != n. A permutation of length 1 is never start-small.
bool is_start_small(const Permutation& p);

}  // namespace avoid
