#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "avoid/enumeration.hpp"

namespace avoid {

using Rational = boost::multiprecision::cpp_rational;

/// Formal power series truncated after x^order, with exact rational
/// coefficients. Binary operations on series of different orders truncate
/// to the smaller order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  PowerSeries(std::size_t order, std::vector<Rational> coeffs);  // pads with zeros or truncates
  PowerSeries(std::size_t order, std::initializer_list<long> coeffs);

  static PowerSeries zero(std::size_t order) { return PowerSeries(order); }
  static PowerSeries constant(std::size_t order, const Rational& c);
  static PowerSeries monomial(std::size_t order, std::size_t degree, const Rational& c = 1);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  // True iff every coefficient has denominator 1.
  bool is_integral() const;
  // Throws InvariantViolation if some coefficient is not an integer.
  std::vector<BigCount> integer_coeffs() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
// Cauchy product truncated to min(a.order(), b.order()).
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, const Rational& c);

// Multiplication by x^k, keeping the order (top k coefficients drop off).
PowerSeries ps_shift_up(const PowerSeries& a, std::size_t k = 1);
// Division by x; requires a zero constant term. The order drops by one.
PowerSeries ps_divide_by_x(const PowerSeries& a);

/// 1/a via the coefficient recurrence. Throws DomainError if a's constant
/// term is zero.
PowerSeries ps_reciprocal(const PowerSeries& a);

// a/b. The constant term of b is factored out as an exact scalar before the
// reciprocal is taken.
PowerSeries ps_divide(const PowerSeries& a, const PowerSeries& b);

/// sqrt(1 - 4x) with constant term 1, from the binomial recurrence for
/// (1 + y)^(1/2). The square is checked against 1 - 4x before returning.
PowerSeries ps_sqrt_1m4x(std::size_t order);

// Catalan numbers as a series, from C = 1 + x C^2.
PowerSeries catalan_series(std::size_t order);
// (1 - sqrt(1 - 4x)) / (2x); cross-check for catalan_series.
PowerSeries catalan_closed_form(std::size_t order);

/// B with 1 + B = 1/(1 - a). Throws DomainError if a has a nonzero constant
/// term.
PowerSeries invert_transform(const PowerSeries& a);

// Start-small {1243, 2134}-avoiders: 1 + x/(1 - x C^3) - x.
PowerSeries gf_start_small(std::size_t order);
// All {1243, 2134}-avoiders: G / (1 - x).
PowerSeries gf_full(std::size_t order);
// (3x^2 - 9x + 2 + x(1-x)sqrt(1-4x)) / (2(x-1)(x^2+4x-1)).
PowerSeries kotesovec_series(std::size_t order);

// u_n (all avoiders) and v_n (start-small avoiders), n = 0..N.
struct SequencePair {
  std::vector<BigCount> u;
  std::vector<BigCount> v;

  // Checks u0 = v0 = 1 and v_n = u_n - u_{n-1}; throws InvariantViolation.
  void validate() const;
};

SequencePair sequence_pair(std::size_t order);

// "n: coefficient" lines, one per coefficient, each newline-terminated.
std::string format_lines(const PowerSeries& s);
// JSON array of decimal strings; integer coefficients print without "/1".
std::string format_json(const PowerSeries& s);
std::string to_decimal(const Rational& r);

}  // namespace avoid
