// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. `acceptance --deep` extends the oracle match to n = 11.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "avoid/bijection.hpp"
#include "avoid/enumeration.hpp"
#include "avoid/series.hpp"

using namespace avoid;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome failure(std::string detail) { return {false, std::move(detail)}; }

using Clock = std::chrono::steady_clock;

int failures = 0;

// Runs a criterion, enforcing a wall-clock limit in seconds (0 = none).
void criterion(const std::string& id, const std::string& title, double limit_s,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = failure(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (out.passed && limit_s > 0 && secs >= limit_s) {
    out = failure("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  }
  if (!out.passed) ++failures;
  std::cout << (out.passed ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << secs << " s)";
  if (!out.passed) std::cout << ": " << out.detail;
  std::cout << std::endl;
}

BigCount count_avoiders(std::size_t n) {
  BigCount count = 0;
  for_each_avoider(n, patterns_1243_2134(), [&](const Permutation&) { ++count; });
  return count;
}

Permutation P(const char* text) { return parse_permutation(text); }

template <typename T, typename U>
void expect_eq(std::vector<std::string>& errs, const char* what, const T& got, const U& want) {
  if (!(got == want)) errs.push_back(what);
}

}  // namespace

int main(int argc, char** argv) {
  const bool deep = argc > 1 && std::strcmp(argv[1], "--deep") == 0;
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);

  criterion("AC1", "sequence reproduction n = 1..6", 1.0, [] {
    const std::vector<BigCount> want = {1, 2, 6, 22, 87, 354};
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto got = count_avoiders(n);
      if (got != want[n - 1]) return failure("n=" + std::to_string(n) + ": " + got.str());
    }
    return Outcome{};
  });

  criterion("AC2", "gf_full(100) = closed form, all 101 coefficients", 1.0, [] {
    const auto f = gf_full(100);
    const auto k = kotesovec_series(100);
    if (f.order() != 100 || k.order() != 100) return failure("wrong order");
    for (std::size_t n = 0; n <= 100; ++n) {
      if (f[n] != k[n]) return failure("n=" + std::to_string(n) + ": " + to_decimal(f[n]) + " vs " + to_decimal(k[n]));
    }
    return Outcome{};
  });

  const std::size_t oracle_n = deep ? 11 : 10;
  criterion("AC3", "[x^n]gf_full = brute-force count, n <= " + std::to_string(oracle_n), 120.0, [&] {
    const auto f = gf_full(oracle_n);
    for (std::size_t n = 1; n <= oracle_n; ++n) {
      const auto got = count_avoiders(n);
      if (Rational(got) != f[n]) {
        return failure("n=" + std::to_string(n) + ": enumeration " + got.str() + ", series " + to_decimal(f[n]));
      }
    }
    return Outcome{};
  });

  criterion("AC4", "phi and crucial bijection round trips", 0, [] {
    std::vector<std::vector<Permutation>> avoiders(10);
    std::vector<std::vector<Permutation>> small(10);
    for (std::size_t n = 1; n <= 9; ++n) {
      avoiders[n] = enumerate_class(start_small_avoider_class(n));
      small[n] = enumerate_class(start_small_avoider_class(n, 0));
    }
    for (std::size_t n = 1; n <= 9; ++n) {
      for (const auto& p : avoiders[n]) {
        if (phi_inverse(phi(p)) != p) return failure("phi_inverse(phi(" + to_string(p) + "))");
      }
    }
    // Combined length len1 + len2 <= 10, i.e. n <= 9.
    for (std::size_t len1 = 2; len1 <= 8; ++len1) {
      for (std::size_t len2 = 2; len1 + len2 <= 10; ++len2) {
        for (const auto& s1 : avoiders[len1]) {
          for (const auto& s2 : small[len2]) {
            const auto step = crucial_forward(crucial_inverse(s1, s2), Checks::on);
            if (step.sigma1 != s1 || step.sigma2 != s2) {
              return failure("forward(inverse(" + to_string(s1) + ", " + to_string(s2) + "))");
            }
          }
        }
      }
    }
    return Outcome{};
  });

  criterion("AC5", "proposition typing and |A(n,k,j)| = |A(j,k-1)| |A(n+1-j,0)|, n <= 9", 0, [] {
    std::vector<std::map<std::size_t, BigCount>> by_k(10);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, BigCount>> by_kj(10);
    for (std::size_t n = 1; n <= 9; ++n) {
      for (const auto& p : enumerate_class(start_small_avoider_class(n))) {
        const auto k = key_mid123_entries(p).size();
        by_k[n][k] += 1;
        if (k == 0) continue;
        const auto j = *last_mid123_position(p);
        by_kj[n][{k, j}] += 1;
        const auto step = crucial_forward(p, Checks::off);
        const bool typed = step.sigma1.size() == j && step.sigma2.size() == n + 1 - j &&
                           start_small_avoider_class(j, k - 1).matches(step.sigma1) &&
                           start_small_avoider_class(n + 1 - j, 0).matches(step.sigma2);
        if (!typed) return failure(to_string(p) + " maps outside A(j,k-1) x A(n+1-j,0)");
      }
    }
    auto get = [](const auto& m, const auto& key) { auto it = m.find(key); return it == m.end() ? BigCount(0) : it->second; };
    for (std::size_t n = 3; n <= 9; ++n) {
      for (std::size_t j = 2; j <= n - 1; ++j) {
        for (std::size_t k = 1; k < j; ++k) {
          const BigCount lhs = get(by_kj[n], std::pair{k, j});
          const BigCount rhs = get(by_k[j], k - 1) * get(by_k[n + 1 - j], 0);
          if (lhs != rhs) {
            return failure("n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j) + ": " +
                           lhs.str() + " != " + rhs.str());
          }
        }
      }
    }
    return Outcome{};
  });

  criterion("AC6", "lemma sweeps (no key => 123-avoiding n <= 8; unique c n <= 9)", 0, [] {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& p : enumerate_avoiders(n, {})) {
        if (key_mid123_entries(p).empty() && !mid123_entries(p).empty()) return failure("lemma 1: " + to_string(p));
      }
    }
    for (std::size_t n = 1; n <= 9; ++n) {
      for (const auto& p : enumerate_avoiders(n, patterns_1243_2134())) {
        const auto last = last_mid123_position(p);
        if (!last) continue;
        int above = 0;
        for (std::size_t t = *last + 1; t <= n; ++t) above += p[t] > p[*last];
        if (above != 1) return failure("lemma 2: " + to_string(p));
      }
    }
    return Outcome{};
  });

  criterion("AC7", "worked examples in both directions", 0, [] {
    std::vector<std::string> errs;
    const auto first = crucial_forward(P("11 2 12 9 7 8 4 5 6 1 10 3"), Checks::on);
    expect_eq(errs, "ex1 sigma1", first.sigma1, P("8 1 9 6 4 5 2 3 7"));
    expect_eq(errs, "ex1 sigma2", first.sigma2, P("2 1 4 3"));
    expect_eq(errs, "ex1 b", first.b_value, 6);
    expect_eq(errs, "ex1 a", first.a_value, 2);
    expect_eq(errs, "ex1 c", first.c_value, 10);
    expect_eq(errs, "ex1 key", first.key_case, true);
    expect_eq(errs, "ex1 inverse", crucial_inverse(first.sigma1, first.sigma2), P("11 2 12 9 7 8 4 5 6 1 10 3"));

    const auto second = crucial_forward(P("13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4"), Checks::on);
    expect_eq(errs, "ex2 sigma1", second.sigma1, P("9 12 8 4 11 5 6 7 10 3 2 1"));
    expect_eq(errs, "ex2 sigma2", second.sigma2, P("3 2 1 5 4"));
    expect_eq(errs, "ex2 b", second.b_value, 5);
    expect_eq(errs, "ex2 a", second.a_value, 3);
    expect_eq(errs, "ex2 c", second.c_value, 14);
    expect_eq(errs, "ex2 r", second.r, 3u);
    expect_eq(errs, "ex2 key", second.key_case, false);
    const auto ip = inverse_params(second.sigma1, second.sigma2);
    expect_eq(errs, "ex2 n", ip.n, 16u);
    expect_eq(errs, "ex2 j", ip.j, 12u);
    expect_eq(errs, "ex2 inverse r", ip.r, 3u);
    expect_eq(errs, "ex2 p", ip.p, 9u);
    expect_eq(errs, "ex2 q", ip.q, 4u);
    expect_eq(errs, "ex2 s", ip.s, 4u);
    expect_eq(errs, "ex2 i", ip.i_pos, 4u);
    expect_eq(errs, "ex2 k", ip.k_pos, 15u);
    expect_eq(errs, "ex2 inverse a", ip.a_value, 3);
    expect_eq(errs, "ex2 inverse c", ip.c_value, 14);
    expect_eq(errs, "ex2 inverse", crucial_inverse(second.sigma1, second.sigma2),
              P("13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4"));
    if (errs.empty()) return Outcome{};
    std::string all;
    for (const auto& e : errs) all += (all.empty() ? "" : ", ") + e;
    return failure(all);
  });

  criterion("AC8", "series identities to order 100; [x^n]C^3 = start-small 123-avoiders on [n+2], n <= 8", 0, [] {
    constexpr std::size_t N = 100;
    const PowerSeries one = PowerSeries::constant(N, 1);
    const PowerSeries x = PowerSeries::monomial(N, 1);
    const auto c = catalan_series(N);
    if (c != ps_add(one, ps_mul(x, ps_mul(c, c)))) return failure("C != 1 + x C^2");
    const auto s = ps_sqrt_1m4x(N);
    if (ps_mul(s, s) != PowerSeries(N, {1, -4})) return failure("S^2 != 1 - 4x");
    const auto a = ps_mul(x, ps_mul(c, ps_mul(c, c)));
    if (ps_mul(ps_add(one, invert_transform(a)), ps_sub(one, a)) != one) return failure("(1 + B)(1 - A) != 1");
    if (ps_mul(PowerSeries(N, {1, -1}), gf_full(N)) != gf_start_small(N)) return failure("(1 - x) F != G");
    const auto c3 = ps_mul(c, ps_mul(c, c));
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto count = count_start_small_123_avoiders(n + 2);
      if (Rational(count) != c3[n]) return failure("[x^" + std::to_string(n) + "]C^3 != " + count.str());
    }
    return Outcome{};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
