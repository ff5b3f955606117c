#include "avoid/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "avoid/errors.hpp"

namespace avoid {

namespace {

void validate_permutation(const std::vector<int>& entries) {
  const auto n = entries.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw InvalidInput("entry " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
    if (seen[v]) throw InvalidInput("duplicate entry " + std::to_string(v));
    seen[v] = true;
  }
}

// For each pattern position t, the earlier pattern positions holding the
// closest smaller and closest larger pattern values (-1 if none). Matching
// entries must lie strictly between the text values at those two positions.
struct PatternBounds {
  std::vector<int> below;
  std::vector<int> above;
};

PatternBounds pattern_bounds(const Permutation& q) {
  const auto m = q.size();
  PatternBounds b{std::vector<int>(m, -1), std::vector<int>(m, -1)};
  for (std::size_t t = 0; t < m; ++t) {
    const int qt = q.vec()[t];
    int best_below = 0;
    int best_above = static_cast<int>(m) + 1;
    for (std::size_t s = 0; s < t; ++s) {
      const int qs = q.vec()[s];
      if (qs < qt && qs > best_below) {
        best_below = qs;
        b.below[t] = static_cast<int>(s);
      }
      if (qs > qt && qs < best_above) {
        best_above = qs;
        b.above[t] = static_cast<int>(s);
      }
    }
  }
  return b;
}

class Matcher {
 public:
  Matcher(std::span<const int> w, const Pattern& q, bool anchor_last)
      : w_(w), bounds_(pattern_bounds(q.perm())), chosen_(q.size()), anchor_last_(anchor_last) {}

  bool run() {
    const auto m = chosen_.size();
    if (m == 0) return true;
    if (w_.size() < m) return false;
    return extend(0, 0);
  }

 private:
  bool fits(std::size_t t, int value) const {
    const int lo = bounds_.below[t];
    const int hi = bounds_.above[t];
    if (lo >= 0 && value <= w_[chosen_[lo]]) return false;
    if (hi >= 0 && value >= w_[chosen_[hi]]) return false;
    return true;
  }

  bool extend(std::size_t t, std::size_t from) {
    const auto m = chosen_.size();
    const auto len = w_.size();
    if (t == m) return true;
    const bool last = (t + 1 == m);
    if (last && anchor_last_) {
      if (from > len - 1 || !fits(t, w_[len - 1])) return false;
      chosen_[t] = len - 1;
      return true;
    }
    // Leave room for the remaining m - t - 1 pattern entries.
    const std::size_t limit = len - (m - t - 1);
    const std::size_t stop = anchor_last_ ? std::min(limit, len - 1) : limit;
    for (std::size_t i = from; i < stop; ++i) {
      if (!fits(t, w_[i])) continue;
      chosen_[t] = i;
      if (extend(t + 1, i + 1)) return true;
    }
    return false;
  }

  std::span<const int> w_;
  PatternBounds bounds_;
  std::vector<std::size_t> chosen_;
  bool anchor_last_;
};

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  validate_permutation(entries_);
}

Permutation::Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(i + 1);
  return Permutation(std::move(e));
}

int Permutation::at(std::size_t pos) const {
  if (pos < 1 || pos > entries_.size()) {
    throw std::out_of_range("position " + std::to_string(pos) + " outside [1, " +
                            std::to_string(entries_.size()) + "]");
  }
  return entries_[pos - 1];
}

EntryWord Permutation::slice(std::size_t from, std::size_t to) const {
  if (from > to) return {};
  if (from < 1 || to > entries_.size()) throw std::out_of_range("slice outside permutation");
  return EntryWord(entries_.begin() + static_cast<std::ptrdiff_t>(from - 1),
                   entries_.begin() + static_cast<std::ptrdiff_t>(to));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> entries;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
      ++i;
      continue;
    }
    int value = 0;
    const auto* begin = text.data() + i;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
      throw InvalidInput("cannot parse permutation entry near '" + std::string(text.substr(i, 8)) + "'");
    }
    if (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\n' && *ptr != '\r') {
      throw InvalidInput("unexpected character '" + std::string(1, *ptr) + "' in permutation");
    }
    entries.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (entries.empty()) throw InvalidInput("empty permutation");
  return Permutation(std::move(entries));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.vec()[i]);
  }
  return out;
}

std::string to_string(const Pattern& q) {
  std::string out;
  for (int v : q.perm().entries()) out += std::to_string(v);
  return out;
}

Pattern parse_pattern(std::string_view digits) {
  if (digits.empty()) throw InvalidInput("empty pattern");
  if (digits.size() > 9) throw InvalidInput("pattern longer than 9: " + std::string(digits));
  std::vector<int> entries;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw InvalidInput("bad pattern digit in '" + std::string(digits) + "'");
    entries.push_back(ch - '0');
  }
  return Pattern(Permutation(std::move(entries)));
}

std::vector<Pattern> parse_pattern_list(std::string_view text) {
  std::vector<Pattern> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_pattern(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Permutation standardize(std::span<const int> w) {
  std::vector<std::size_t> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  std::vector<int> out(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && w[order[rank]] == w[order[rank - 1]]) {
      throw InvalidInput("cannot standardize: duplicate entry " + std::to_string(w[order[rank]]));
    }
    out[order[rank]] = static_cast<int>(rank + 1);
  }
  return Permutation(std::move(out));
}

bool contains(std::span<const int> w, const Pattern& q) { return Matcher(w, q, false).run(); }

bool contains_ending_at_last(std::span<const int> w, const Pattern& q) {
  if (w.empty()) return q.size() == 0;
  return Matcher(w, q, true).run();
}

bool avoids_all(const Permutation& p, std::span<const Pattern> patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const Pattern& q) { return contains(p, q); });
}

bool contains_123(std::span<const int> w) {
  // An entry with a smaller entry before it and a larger after it; track the
  // smallest "2" seen so far that has a smaller entry before it.
  if (w.size() < 3) return false;
  int prefix_min = w[0];
  bool have_two = false;
  int best_two = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const int v = w[i];
    if (have_two && v > best_two) return true;
    if (v > prefix_min && (!have_two || v < best_two)) {
      best_two = v;
      have_two = true;
    }
    prefix_min = std::min(prefix_min, v);
  }
  return false;
}

std::vector<std::size_t> right_to_left_maxima(const Permutation& p) {
  std::vector<std::size_t> out;
  int suffix_max = 0;
  for (std::size_t t = p.size(); t >= 1; --t) {
    if (p[t] > suffix_max) {
      out.push_back(t);
      suffix_max = p[t];
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> mid123_entries(const Permutation& p) {
  const auto n = p.size();
  std::vector<std::size_t> out;
  if (n < 3) return out;
  // suffix_max[t] = max of p[t+1..n] (1-based), 0 if empty.
  std::vector<int> suffix_max(n + 2, 0);
  for (std::size_t t = n; t >= 1; --t) suffix_max[t - 1] = std::max(suffix_max[t], p[t]);
  int prefix_min = p[1];
  for (std::size_t t = 2; t < n; ++t) {
    if (prefix_min < p[t] && suffix_max[t] > p[t]) out.push_back(t);
    prefix_min = std::min(prefix_min, p[t]);
  }
  return out;
}

std::vector<std::size_t> key_mid123_entries(const Permutation& p) {
  const auto mids = mid123_entries(p);
  if (mids.empty()) return {};
  const auto maxima = right_to_left_maxima(p);
  std::vector<bool> is_max(p.size() + 1, false);
  for (auto t : maxima) is_max[t] = true;
  std::vector<std::size_t> out;
  for (auto t : mids) {
    if (p[t - 1] < p[t] || is_max[t - 1]) out.push_back(t);
  }
  return out;
}

bool is_start_small(const Permutation& p) {
  return !p.empty() && static_cast<std::size_t>(p[1]) != p.size();
}

}  // namespace avoid
