#include "avoid/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "avoid/bijection.hpp"
#include "avoid/enumeration.hpp"
#include "avoid/errors.hpp"

namespace avoid {

namespace {

std::string upto(std::size_t max_n) { return "n <= " + std::to_string(max_n); }

CheckResult fail(CheckResult r, std::string detail) {
  r.passed = false;
  r.detail = std::move(detail);
  return r;
}

// Runs body; any exception becomes a failure carrying its message.
template <typename Body>
CheckResult guarded(std::string name, std::string range, Body&& body) {
  CheckResult r{std::move(name), std::move(range), true, {}};
  try {
    return body(std::move(r));
  } catch (const std::exception& e) {
    return fail(std::move(r), std::string("exception: ") + e.what());
  }
}

std::vector<Permutation> all_permutations(std::size_t n) { return enumerate_avoiders(n, {}); }

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string VerifyReport::table() const {
  std::size_t name_w = 5;
  std::size_t range_w = 5;
  for (const auto& c : checks) {
    name_w = std::max(name_w, c.name.size());
    range_w = std::max(range_w, c.range.size());
  }
  std::ostringstream out;
  auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
    out << a << std::string(name_w - a.size() + 2, ' ') << b << std::string(range_w - b.size() + 2, ' ') << c
        << '\n';
  };
  row("check", "range", "status");
  for (const auto& c : checks) {
    row(c.name, c.range, c.passed ? "PASS" : "FAIL");
    if (!c.passed) out << "    " << c.detail << '\n';
  }
  out << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string VerifyReport::json() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e{{"name", c.name}, {"range", c.range}, {"passed", c.passed}};
    if (!c.passed) e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  return j.dump();
}

CheckResult check_lemma_no_key_means_123_avoiding(std::size_t max_n) {
  return guarded("lemma: no key mid-123 => no mid-123", upto(max_n), [&](CheckResult r) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& p : all_permutations(n)) {
        if (key_mid123_entries(p).empty() && !mid123_entries(p).empty()) {
          return fail(std::move(r), "counterexample " + to_string(p));
        }
      }
    }
    return r;
  });
}

CheckResult check_lemma_unique_c(std::size_t max_n) {
  return guarded("lemma: unique c after last mid-123", upto(max_n), [&](CheckResult r) {
    const auto pats = patterns_1243_2134();
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& p : enumerate_avoiders(n, pats)) {
        const auto last = last_mid123_position(p);
        if (!last) continue;
        const auto tail = p.slice(*last + 1, n);
        const auto above = std::count_if(tail.begin(), tail.end(), [&](int v) { return v > p[*last]; });
        if (above != 1) {
          return fail(std::move(r), to_string(p) + ": " + std::to_string(above) + " entries after b exceed b");
        }
      }
    }
    return r;
  });
}

CheckResult check_crucial_round_trips(std::size_t max_n) {
  return guarded("crucial bijection round trips", upto(max_n), [&](CheckResult r) {
    std::vector<std::vector<Permutation>> avoiders(max_n + 1);
    std::vector<std::vector<Permutation>> small(max_n + 1);
    for (std::size_t n = 1; n <= max_n; ++n) {
      avoiders[n] = enumerate_class(start_small_avoider_class(n));
      small[n] = enumerate_class(start_small_avoider_class(n, 0));
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& p : avoiders[n]) {
        if (key_mid123_entries(p).empty()) continue;
        const auto step = crucial_forward(p, Checks::on);
        const auto back = crucial_inverse(step.sigma1, step.sigma2);
        if (back != p) return fail(std::move(r), "inverse(forward(" + to_string(p) + ")) = " + to_string(back));
      }
    }
    // Pairs with len1 + len2 - 1 <= max_n.
    for (std::size_t len1 = 2; len1 <= max_n; ++len1) {
      for (std::size_t len2 = 2; len1 + len2 - 1 <= max_n; ++len2) {
        for (const auto& s1 : avoiders[len1]) {
          for (const auto& s2 : small[len2]) {
            const auto pi = crucial_inverse(s1, s2);
            const auto step = crucial_forward(pi, Checks::on);
            if (step.sigma1 != s1 || step.sigma2 != s2) {
              return fail(std::move(r), "forward(inverse(" + to_string(s1) + ", " + to_string(s2) + ")) = (" +
                                            to_string(step.sigma1) + ", " + to_string(step.sigma2) + ")");
            }
          }
        }
      }
    }
    return r;
  });
}

CheckResult check_phi_round_trips(std::size_t max_n) {
  return guarded("phi round trips", upto(max_n), [&](CheckResult r) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::set<StartSmallList> images;
      for (const auto& p : enumerate_class(start_small_avoider_class(n))) {
        const auto list = phi(p);
        const std::size_t k = key_mid123_entries(p).size();
        std::size_t total = 0;
        for (const auto& e : list) total += e.size();
        if (list.size() != k + 1 || total != n + k) {
          return fail(std::move(r), "phi(" + to_string(p) + ") = " + to_string(list) + " has the wrong shape");
        }
        const auto back = phi_inverse(list);
        if (back != p) return fail(std::move(r), "phi_inverse(phi(" + to_string(p) + ")) = " + to_string(back));
        if (!images.insert(list).second) return fail(std::move(r), "phi not injective at " + to_string(p));
      }
    }
    return r;
  });
}

CheckResult check_product_identity(std::size_t max_n) {
  return guarded("|A(n,k,j)| = |A(j,k-1)| * |A(n+1-j,0)|", upto(max_n), [&](CheckResult r) {
    // census[n][k] = |A_{n,k}|, by_j[n][{k, j}] = |A_{n,k,j}|.
    std::vector<std::map<std::size_t, BigCount>> census(max_n + 1);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, BigCount>> by_j(max_n + 1);
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& p : enumerate_class(start_small_avoider_class(n))) {
        const auto k = key_mid123_entries(p).size();
        census[n][k] += 1;
        if (k == 0) continue;
        const auto j = *last_mid123_position(p);
        by_j[n][{k, j}] += 1;
        const auto step = crucial_forward(p, Checks::off);
        if (step.sigma1.size() != j || key_mid123_entries(step.sigma1).size() != k - 1 ||
            !is_start_small(step.sigma1) || step.sigma2.size() != n + 1 - j ||
            !key_mid123_entries(step.sigma2).empty() || !is_start_small(step.sigma2) ||
            !avoids_all(step.sigma1, patterns_1243_2134())) {
          return fail(std::move(r), "crucial_forward(" + to_string(p) + ") lands outside A(j,k-1) x A(n+1-j,0)");
        }
      }
    }
    auto count = [&](std::size_t n, std::size_t k) {
      auto it = census[n].find(k);
      return it == census[n].end() ? BigCount(0) : it->second;
    };
    for (std::size_t n = 3; n <= max_n; ++n) {
      for (std::size_t j = 2; j + 1 <= n; ++j) {
        for (std::size_t k = 1; k < j; ++k) {
          auto it = by_j[n].find({k, j});
          const BigCount lhs = it == by_j[n].end() ? BigCount(0) : it->second;
          const BigCount rhs = count(j, k - 1) * count(n + 1 - j, 0);
          if (lhs != rhs) {
            return fail(std::move(r), "n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" +
                                          std::to_string(j) + ": " + lhs.str() + " != " + rhs.str());
          }
        }
      }
    }
    return r;
  });
}

CheckResult check_full_series_vs_enumeration(const PowerSeries& full, std::size_t max_n) {
  return guarded("[x^n]F = # {1243,2134}-avoiders", upto(max_n), [&](CheckResult r) {
    const auto pats = patterns_1243_2134();
    for (std::size_t n = 1; n <= max_n && n <= full.order(); ++n) {
      BigCount count = 0;
      for_each_avoider(n, pats, [&](const Permutation&) { ++count; });
      if (Rational(count) != full[n]) {
        return fail(std::move(r), "n=" + std::to_string(n) + ": expected " + count.str() + " (enumeration), got " +
                                      to_decimal(full[n]) + " (series)");
      }
    }
    return r;
  });
}

CheckResult check_start_small_series_vs_enumeration(const PowerSeries& start_small, std::size_t max_n) {
  return guarded("[x^n]G = # start-small avoiders", upto(max_n), [&](CheckResult r) {
    for (std::size_t n = 1; n <= max_n && n <= start_small.order(); ++n) {
      const BigCount count = count_class(start_small_avoider_class(n));
      if (Rational(count) != start_small[n]) {
        return fail(std::move(r), "n=" + std::to_string(n) + ": expected " + count.str() + " (enumeration), got " +
                                      to_decimal(start_small[n]) + " (series)");
      }
    }
    return r;
  });
}

CheckResult check_series_identities(std::size_t order) {
  return guarded("series identities", "order " + std::to_string(order), [&](CheckResult r) {
    const PowerSeries one = PowerSeries::constant(order, 1);
    const PowerSeries x = PowerSeries::monomial(order, 1);
    const PowerSeries c = catalan_series(order);
    if (c != ps_add(one, ps_mul(x, ps_mul(c, c)))) return fail(std::move(r), "C != 1 + x C^2");
    if (c != catalan_closed_form(order)) return fail(std::move(r), "C != (1 - sqrt(1-4x)) / (2x)");
    const PowerSeries s = ps_sqrt_1m4x(order);
    if (ps_mul(s, s) != PowerSeries(order, {1, -4})) return fail(std::move(r), "S^2 != 1 - 4x");
    const PowerSeries a = ps_mul(x, ps_mul(c, ps_mul(c, c)));
    const PowerSeries b = invert_transform(a);
    if (ps_mul(ps_add(one, b), ps_sub(one, a)) != one) return fail(std::move(r), "(1 + B)(1 - A) != 1");
    const PowerSeries f = gf_full(order);
    const PowerSeries g = gf_start_small(order);
    if (ps_mul(PowerSeries(order, {1, -1}), f) != g) return fail(std::move(r), "(1 - x) F != G");
    if (!f.is_integral() || !g.is_integral()) return fail(std::move(r), "F or G has a non-integer coefficient");
    sequence_pair(order);
    return r;
  });
}

CheckResult check_kotesovec(const PowerSeries& full, std::size_t order) {
  return guarded("F = closed-form algebraic GF", "order " + std::to_string(order), [&](CheckResult r) {
    const PowerSeries k = kotesovec_series(order);
    if (full.order() < order) return fail(std::move(r), "F has order below " + std::to_string(order));
    for (std::size_t n = 0; n <= order; ++n) {
      if (k[n] != full[n]) {
        return fail(std::move(r), "n=" + std::to_string(n) + ": closed form " + to_decimal(k[n]) + ", F " +
                                      to_decimal(full[n]));
      }
    }
    if (!k.is_integral()) return fail(std::move(r), "closed form has a non-integer coefficient");
    return r;
  });
}

CheckResult check_catalan_cube(std::size_t max_n) {
  return guarded("[x^n]C^3 = # start-small 123-avoiders on [n+2]", upto(max_n), [&](CheckResult r) {
    const PowerSeries c = catalan_series(max_n);
    const PowerSeries c3 = ps_mul(c, ps_mul(c, c));
    for (std::size_t n = 1; n <= max_n; ++n) {
      const BigCount count = count_start_small_123_avoiders(n + 2);
      if (Rational(count) != c3[n]) {
        return fail(std::move(r), "n=" + std::to_string(n) + ": enumeration " + count.str() + ", series " +
                                      to_decimal(c3[n]));
      }
    }
    return r;
  });
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  const PowerSeries full = gf_full(std::max(options.order, options.max_n));
  const PowerSeries start_small = gf_start_small(std::max(options.order, options.max_n));
  report.checks.push_back(check_lemma_no_key_means_123_avoiding(options.max_n));
  report.checks.push_back(check_lemma_unique_c(options.max_n));
  report.checks.push_back(check_crucial_round_trips(options.max_n));
  report.checks.push_back(check_phi_round_trips(options.max_n));
  report.checks.push_back(check_product_identity(options.max_n));
  report.checks.push_back(check_full_series_vs_enumeration(full, options.max_n));
  report.checks.push_back(check_start_small_series_vs_enumeration(start_small, options.max_n));
  report.checks.push_back(check_catalan_cube(options.max_n));
  report.checks.push_back(check_series_identities(options.order));
  report.checks.push_back(check_kotesovec(full, options.order));
  return report;
}

}  // namespace avoid
