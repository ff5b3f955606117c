#include "avoid/bijection.hpp"

#include <algorithm>

#include "avoid/enumeration.hpp"
#include "avoid/errors.hpp"

namespace avoid {

namespace {

const Pattern kP1243{1, 2, 4, 3};
const Pattern kP2134{2, 1, 3, 4};

// Empty string when p is a start-small {1243, 2134}-avoider, otherwise the
// first failed condition.
std::string avoider_defect(const Permutation& p) {
  if (contains(p, kP1243)) return "contains 1243";
  if (contains(p, kP2134)) return "contains 2134";
  if (!is_start_small(p)) return "not start-small (starts with its largest entry)";
  return {};
}

std::string small_123_avoider_defect(const Permutation& p) {
  if (p.size() < 2) return "length below 2";
  if (contains_123(p.entries())) return "contains 123";
  if (!is_start_small(p)) return "not start-small (starts with its largest entry)";
  return {};
}

void check_inverse_inputs(const Permutation& sigma1, const Permutation& sigma2) {
  if (sigma1.size() < 2) throw DomainError("sigma1: length below 2");
  if (auto d = avoider_defect(sigma1); !d.empty()) throw DomainError("sigma1: " + d);
  if (auto d = small_123_avoider_defect(sigma2); !d.empty()) throw DomainError("sigma2: " + d);
}

void check_step(const Permutation& pi, const DecompositionStep& step) {
  const auto n = pi.size();
  const auto k = key_mid123_entries(pi).size();
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("crucial_forward(" + to_string(pi) + "): " + what);
  };
  if (step.sigma1.size() != step.j) fail("sigma1 length differs from j");
  if (step.sigma1.size() + step.sigma2.size() != n + 1) fail("lengths do not sum to n + 1");
  if (auto d = avoider_defect(step.sigma1); !d.empty()) fail("sigma1 " + d);
  if (key_mid123_entries(step.sigma1).size() + 1 != k) fail("sigma1 key mid-123 count is not k - 1");
  if (auto d = small_123_avoider_defect(step.sigma2); !d.empty()) fail("sigma2 " + d);
  if (step.key_case != (step.r == 0)) fail("key case and r disagree");
}

}  // namespace

DecompositionStep crucial_forward(const Permutation& pi, Checks checks) {
  if (auto d = avoider_defect(pi); !d.empty()) {
    throw DomainError("crucial_forward: input " + d + ": " + to_string(pi));
  }
  const auto mids = mid123_entries(pi);
  if (mids.empty()) {
    throw DomainError("crucial_forward: input has no mid-123 entry (avoids 123): " + to_string(pi));
  }
  if (key_mid123_entries(pi).empty()) {
    throw InvariantViolation("mid-123 entries without a key mid-123 entry: " + to_string(pi));
  }

  const auto n = pi.size();
  DecompositionStep step;
  step.j = mids.back();
  step.b_value = pi[step.j];
  const EntryWord tau1 = pi.slice(1, step.j - 1);
  const EntryWord tau2 = pi.slice(step.j + 1, n);

  step.a_value = *std::min_element(tau1.begin(), tau1.end());
  const auto above_b = std::count_if(tau2.begin(), tau2.end(), [&](int v) { return v > step.b_value; });
  if (above_b != 1) {
    throw InvariantViolation("expected exactly one entry after the last mid-123 exceeding it: " + to_string(pi));
  }
  step.c_value = *std::find_if(tau2.begin(), tau2.end(), [&](int v) { return v > step.b_value; });

  EntryWord head{step.a_value};
  head.insert(head.end(), tau2.begin(), tau2.end());
  step.sigma2 = standardize(head);

  const auto maxima = right_to_left_maxima(pi);
  const bool pred_is_max = std::binary_search(maxima.begin(), maxima.end(), step.j - 1);
  step.key_case = pi[step.j - 1] < step.b_value || pred_is_max;

  if (step.key_case) {
    EntryWord rho = tau1;
    rho.push_back(step.c_value);
    step.sigma1 = standardize(rho);
    step.r = 0;
  } else {
    // Longest decreasing terminal run of tau1 with every entry below c.
    std::size_t r = 0;
    std::size_t t = tau1.size();
    while (t > 0 && tau1[t - 1] < step.c_value && (r == 0 || tau1[t - 1] > tau1[t])) {
      ++r;
      --t;
    }
    if (r == 0) throw InvariantViolation("non-key case deleted no entries: " + to_string(pi));
    EntryWord rho(tau1.begin(), tau1.begin() + static_cast<std::ptrdiff_t>(tau1.size() - r));
    rho.push_back(step.c_value);
    for (int& v : rho) v += static_cast<int>(r);
    for (std::size_t v = r; v >= 1; --v) rho.push_back(static_cast<int>(v));
    step.sigma1 = standardize(rho);
    step.r = r;
  }

  if (checks == Checks::on) check_step(pi, step);
  return step;
}

InverseParams inverse_params(const Permutation& sigma1, const Permutation& sigma2) {
  check_inverse_inputs(sigma1, sigma2);
  InverseParams ip;
  ip.j = sigma1.size();
  ip.n = sigma1.size() + sigma2.size() - 1;
  if (sigma1[ip.j] == 1) {
    ip.r = 1;
    while (ip.r < ip.j && sigma1[ip.j - ip.r] == static_cast<int>(ip.r) + 1) ++ip.r;
  }
  ip.p = ip.j - ip.r;
  ip.q = sigma2.size() - 1;

  const auto mu = sigma1.entries().first(ip.p);
  ip.i_pos = static_cast<std::size_t>(std::min_element(mu.begin(), mu.end()) - mu.begin()) + 1;
  const auto s2 = sigma2.entries();
  ip.k_pos = ip.j - 1 + static_cast<std::size_t>(std::max_element(s2.begin(), s2.end()) - s2.begin()) + 1;
  ip.a_value = sigma2[1];
  ip.c_value = sigma1[ip.p] + static_cast<int>(ip.q);

  if (ip.i_pos >= ip.p) {
    throw InvariantViolation("minimum of mu sits at its last position: " + to_string(sigma1));
  }
  ip.s = 1;
  while (ip.p - ip.s > ip.i_pos && sigma1[ip.p - ip.s] < sigma1[ip.p - ip.s + 1]) ++ip.s;
  return ip;
}

Permutation crucial_inverse(const Permutation& sigma1, const Permutation& sigma2) {
  const InverseParams ip = inverse_params(sigma1, sigma2);
  const int q = static_cast<int>(ip.q);

  // Slots i_pos and k_pos hold placeholders until overwritten, so the word
  // may repeat values in between.
  EntryWord word;
  word.reserve(ip.n);
  for (std::size_t t = 1; t <= ip.p - ip.s; ++t) word.push_back(sigma1[t] + q);
  for (std::size_t t = ip.p - ip.s + 1; t <= ip.p - 1; ++t) word.push_back(sigma1[t] + q - 1);
  word.push_back(static_cast<int>(ip.n - ip.j + ip.r + ip.s));
  for (std::size_t t = ip.p + 1; t <= ip.j; ++t) word.push_back(sigma1[t] + q);
  for (std::size_t t = 2; t <= ip.q + 1; ++t) word.push_back(sigma2[t]);

  if (word.size() != ip.n) throw InvariantViolation("reconstructed word has the wrong length");
  word[ip.i_pos - 1] = ip.a_value;
  word[ip.k_pos - 1] = ip.c_value;

  try {
    return Permutation(std::move(word));
  } catch (const InvalidInput& e) {
    throw InvariantViolation("crucial_inverse(" + to_string(sigma1) + ", " + to_string(sigma2) +
                             ") is not a permutation: " + e.what());
  }
}

StartSmallList phi(const Permutation& pi, Checks checks) {
  if (auto d = avoider_defect(pi); !d.empty()) throw DomainError("phi: input " + d + ": " + to_string(pi));
  std::vector<Permutation> extracted;
  Permutation current = pi;
  while (!key_mid123_entries(current).empty()) {
    auto step = crucial_forward(current, checks);
    extracted.push_back(std::move(step.sigma2));
    current = std::move(step.sigma1);
  }
  StartSmallList out;
  out.reserve(extracted.size() + 1);
  out.push_back(std::move(current));
  std::move(extracted.rbegin(), extracted.rend(), std::back_inserter(out));
  return out;
}

void validate_start_small_list(const StartSmallList& list) {
  if (list.empty()) throw DomainError("empty list");
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (auto d = small_123_avoider_defect(list[i]); !d.empty()) {
      throw DomainError("list element " + std::to_string(i + 1) + " (" + to_string(list[i]) + "): " + d);
    }
  }
}

Permutation phi_inverse(const StartSmallList& list) {
  if (list.empty()) throw DomainError("empty list");
  // The head only has to be a valid first argument of crucial_inverse.
  if (auto d = avoider_defect(list.front()); !d.empty()) {
    throw DomainError("list element 1 (" + to_string(list.front()) + "): " + d);
  }
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (auto d = small_123_avoider_defect(list[i]); !d.empty()) {
      throw DomainError("list element " + std::to_string(i + 1) + " (" + to_string(list[i]) + "): " + d);
    }
  }
  Permutation acc = list.front();
  for (std::size_t i = 1; i < list.size(); ++i) acc = crucial_inverse(acc, list[i]);
  return acc;
}

std::string to_string(const StartSmallList& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += " | ";
    out += to_string(list[i]);
  }
  return out;
}

StartSmallList parse_start_small_list(std::string_view text) {
  StartSmallList out;
  std::size_t start = 0;
  for (;;) {
    const auto bar = text.find('|', start);
    out.push_back(parse_permutation(text.substr(start, bar == std::string_view::npos ? std::string_view::npos
                                                                                      : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

}  // namespace avoid
