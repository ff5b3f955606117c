#include "avoid/series.hpp"

#include <algorithm>

#include "json.hpp"

#include "avoid/errors.hpp"

namespace avoid {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, Rational(0));
}

PowerSeries::PowerSeries(std::size_t order, std::initializer_list<long> coeffs) : PowerSeries(order) {
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i > order) break;
    coeffs_[i++] = c;
  }
}

PowerSeries PowerSeries::constant(std::size_t order, const Rational& c) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(std::size_t order, std::size_t degree, const Rational& c) {
  PowerSeries s(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  return PowerSeries(order, std::vector<Rational>(coeffs_.begin(),
                                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                                        std::min(order + 1, coeffs_.size()))));
}

bool PowerSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return denominator(c) == 1; });
}

std::vector<BigCount> PowerSeries::integer_coeffs() const {
  std::vector<BigCount> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (denominator(coeffs_[i]) != 1) {
      throw InvariantViolation("coefficient " + std::to_string(i) + " is not an integer: " + to_decimal(coeffs_[i]));
    }
    out.push_back(numerator(coeffs_[i]));
  }
  return out;
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const auto order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) out[i] = a[i] + b[i];
  return out;
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  const auto order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) out[i] = a[i] - b[i];
  return out;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const auto order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; i + k <= order; ++k) {
      if (b[k] != 0) out[i + k] += a[i] * b[k];
    }
  }
  return out;
}

PowerSeries ps_scale(const PowerSeries& a, const Rational& c) {
  PowerSeries out = a;
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] *= c;
  return out;
}

PowerSeries ps_shift_up(const PowerSeries& a, std::size_t k) {
  PowerSeries out(a.order());
  for (std::size_t i = 0; i + k <= a.order(); ++i) out[i + k] = a[i];
  return out;
}

PowerSeries ps_divide_by_x(const PowerSeries& a) {
  if (a[0] != 0) throw DomainError("ps_divide_by_x: nonzero constant term");
  if (a.order() == 0) throw DomainError("ps_divide_by_x: order 0 series has no room");
  PowerSeries out(a.order() - 1);
  for (std::size_t i = 1; i <= a.order(); ++i) out[i - 1] = a[i];
  return out;
}

PowerSeries ps_reciprocal(const PowerSeries& a) {
  if (a[0] == 0) throw DomainError("ps_reciprocal: zero constant term");
  const auto order = a.order();
  PowerSeries out(order);
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (a[i] != 0) acc += a[i] * out[n - i];
    }
    out[n] = -acc * inv0;
  }
  return out;
}

PowerSeries ps_divide(const PowerSeries& a, const PowerSeries& b) {
  if (b[0] == 0) throw DomainError("ps_divide: divisor has zero constant term");
  const Rational lead = b[0];
  const PowerSeries unit = ps_scale(b, 1 / lead);
  return ps_scale(ps_mul(a, ps_reciprocal(unit)), 1 / lead);
}

PowerSeries ps_sqrt_1m4x(std::size_t order) {
  // (1 + y)^(1/2) = sum binom(1/2, k) y^k with y = -4x;
  // binom(1/2, k) = binom(1/2, k - 1) * (1/2 - (k - 1)) / k.
  PowerSeries s(order);
  Rational binom = 1;
  Rational power = 1;
  s[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    binom = binom * (Rational(1, 2) - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
    power *= -4;
    s[k] = binom * power;
  }
  const PowerSeries target(order, {1, -4});
  if (ps_mul(s, s) != target) throw InvariantViolation("sqrt(1 - 4x) self-check failed");
  return s;
}

PowerSeries catalan_series(std::size_t order) {
  PowerSeries c(order);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += c[i] * c[n - 1 - i];
    c[n] = acc;
  }
  return c;
}

PowerSeries catalan_closed_form(std::size_t order) {
  const PowerSeries one_minus_s = ps_sub(PowerSeries::constant(order + 1, 1), ps_sqrt_1m4x(order + 1));
  return ps_scale(ps_divide_by_x(one_minus_s), Rational(1, 2));
}

PowerSeries invert_transform(const PowerSeries& a) {
  if (a[0] != 0) throw DomainError("invert_transform: nonzero constant term");
  const auto order = a.order();
  const PowerSeries one = PowerSeries::constant(order, 1);
  return ps_sub(ps_reciprocal(ps_sub(one, a)), one);
}

PowerSeries gf_start_small(std::size_t order) {
  const PowerSeries c = catalan_series(order);
  const PowerSeries x_c3 = ps_shift_up(ps_mul(c, ps_mul(c, c)));
  const PowerSeries one = PowerSeries::constant(order, 1);
  const PowerSeries x = PowerSeries::monomial(order, 1);
  const PowerSeries middle = ps_shift_up(ps_reciprocal(ps_sub(one, x_c3)));
  return ps_sub(ps_add(one, middle), x);
}

PowerSeries gf_full(std::size_t order) {
  return ps_mul(gf_start_small(order), ps_reciprocal(PowerSeries(order, {1, -1})));
}

PowerSeries kotesovec_series(std::size_t order) {
  const PowerSeries sqrt = ps_sqrt_1m4x(order);
  const PowerSeries x_one_minus_x(order, {0, 1, -1});
  const PowerSeries numer = ps_add(PowerSeries(order, {2, -9, 3}), ps_mul(x_one_minus_x, sqrt));
  // 2(x - 1)(x^2 + 4x - 1)
  const PowerSeries denom = ps_scale(ps_mul(PowerSeries(order, {-1, 1}), PowerSeries(order, {-1, 4, 1})), 2);
  return ps_divide(numer, denom);
}

void SequencePair::validate() const {
  if (u.empty() || v.size() != u.size()) throw InvariantViolation("sequence pair: length mismatch");
  if (u[0] != 1 || v[0] != 1) throw InvariantViolation("sequence pair: u0 and v0 must be 1");
  for (std::size_t n = 1; n < u.size(); ++n) {
    if (v[n] != u[n] - u[n - 1]) {
      throw InvariantViolation("sequence pair: v_n != u_n - u_{n-1} at n = " + std::to_string(n));
    }
  }
}

SequencePair sequence_pair(std::size_t order) {
  SequencePair sp{gf_full(order).integer_coeffs(), gf_start_small(order).integer_coeffs()};
  sp.validate();
  return sp;
}

std::string to_decimal(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_lines(const PowerSeries& s) {
  std::string out;
  for (std::size_t i = 0; i <= s.order(); ++i) out += std::to_string(i) + ": " + to_decimal(s[i]) + "\n";
  return out;
}

std::string format_json(const PowerSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_decimal(c));
  return arr.dump();
}

}  // namespace avoid
