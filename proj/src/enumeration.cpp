#include "avoid/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "avoid/errors.hpp"

namespace avoid {

std::vector<Pattern> patterns_1243_2134() { return {Pattern{1, 2, 4, 3}, Pattern{2, 1, 3, 4}}; }

AvoiderGenerator::AvoiderGenerator(std::size_t n, std::vector<Pattern> patterns)
    : n_(n), patterns_(std::move(patterns)), used_(n + 1, false) {
  prefix_.reserve(n);
}

bool AvoiderGenerator::admissible() const {
  return std::none_of(patterns_.begin(), patterns_.end(),
                      [&](const Pattern& q) { return contains_ending_at_last(prefix_, q); });
}

// Moves to the next admissible prefix in depth-first lexicographic order,
// returning false once the search space is exhausted. A fresh extension
// starts at value 1; a backtrack resumes from the value after the one removed.
bool AvoiderGenerator::advance() {
  int resume = 1;
  if (!prefix_.empty() && prefix_.size() == n_) {
    resume = prefix_.back() + 1;
    used_[prefix_.back()] = false;
    prefix_.pop_back();
  }
  for (;;) {
    bool placed = false;
    for (int v = resume; v <= static_cast<int>(n_); ++v) {
      if (used_[v]) continue;
      prefix_.push_back(v);
      if (admissible()) {
        used_[v] = true;
        placed = true;
        break;
      }
      prefix_.pop_back();
    }
    if (placed) {
      if (prefix_.size() == n_) return true;
      resume = 1;
      continue;
    }
    if (prefix_.empty()) return false;
    resume = prefix_.back() + 1;
    used_[prefix_.back()] = false;
    prefix_.pop_back();
  }
}

std::optional<Permutation> AvoiderGenerator::next() {
  if (done_ || n_ == 0) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Permutation(prefix_);
}

void for_each_avoider(std::size_t n, std::span<const Pattern> patterns,
                      const std::function<void(const Permutation&)>& visit) {
  AvoiderGenerator gen(n, std::vector<Pattern>(patterns.begin(), patterns.end()));
  while (auto p = gen.next()) visit(*p);
}

std::vector<Permutation> enumerate_avoiders(std::size_t n, std::span<const Pattern> patterns) {
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> enumerate_avoiders_naive(std::size_t n, std::span<const Pattern> patterns) {
  std::vector<Permutation> out;
  if (n == 0) return out;
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  do {
    Permutation p(e);
    if (avoids_all(p, patterns)) out.push_back(std::move(p));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

void ClassDescriptor::validate() const {
  if (n < 1) throw DomainError("class descriptor: n must be at least 1");
  if (j && !k) throw DomainError("class descriptor: j given without k");
  if (k && j) {
    if (!(1 <= *k && *k < *j && *j + 1 <= n)) {
      throw DomainError("class descriptor: need 1 <= k < j <= n-1, got k=" + std::to_string(*k) +
                        ", j=" + std::to_string(*j) + ", n=" + std::to_string(n));
    }
  } else if (k) {
    const std::size_t max_k = n >= 2 ? n - 2 : 0;
    if (*k > max_k) {
      throw DomainError("class descriptor: need 0 <= k <= " + std::to_string(max_k) + ", got k=" +
                        std::to_string(*k));
    }
  }
}

std::optional<std::size_t> last_mid123_position(const Permutation& p) {
  const auto mids = mid123_entries(p);
  if (mids.empty()) return std::nullopt;
  return mids.back();
}

bool ClassDescriptor::matches(const Permutation& p) const {
  if (p.size() != n) return false;
  if (start_small_only && !is_start_small(p)) return false;
  if (k && key_mid123_entries(p).size() != *k) return false;
  if (j && last_mid123_position(p) != j) return false;
  return avoids_all(p, patterns);
}

ClassDescriptor start_small_avoider_class(std::size_t n, std::optional<std::size_t> k,
                                          std::optional<std::size_t> j) {
  return ClassDescriptor{n, patterns_1243_2134(), true, k, j};
}

void for_each_in_class(const ClassDescriptor& d, const std::function<void(const Permutation&)>& visit) {
  d.validate();
  for_each_avoider(d.n, d.patterns, [&](const Permutation& p) {
    if (d.start_small_only && !is_start_small(p)) return;
    if (d.k && key_mid123_entries(p).size() != *d.k) return;
    if (d.j && last_mid123_position(p) != d.j) return;
    visit(p);
  });
}

std::vector<Permutation> enumerate_class(const ClassDescriptor& d) {
  std::vector<Permutation> out;
  for_each_in_class(d, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

BigCount count_class(const ClassDescriptor& d) {
  BigCount count = 0;
  for_each_in_class(d, [&](const Permutation&) { ++count; });
  return count;
}

BigCount count_start_small_123_avoiders(std::size_t n) {
  ClassDescriptor d{n, {Pattern{1, 2, 3}}, true, std::nullopt, std::nullopt};
  return count_class(d);
}

}  // namespace avoid
