#ifndef OPERADLAB_POWER_SERIES_HPP
#define OPERADLAB_POWER_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "operadlab/rational.hpp"

namespace operadlab {

// Rational power series truncated at x^order.
struct PowerSeries {
  int order = 0;
  std::vector<Rational> coeff;  // coeff[k] is the coefficient of x^k, k <= order

  explicit PowerSeries(int n = 0) : order(n), coeff(n + 1, Rational(0)) {}
  bool is_zero() const;
  bool operator==(const PowerSeries&) const = default;
};

PowerSeries series_x(int order);

// Skew-exponential generating series: coefficient of x^n is (-1)^n d_n / n!.
// dims[i] is d_{i+1}; dims must cover degrees 1..order.
PowerSeries gen_series(const std::vector<std::int64_t>& dims, int order);

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

// f(g(x)) truncated; requires g(0) = 0 and equal truncation orders.
PowerSeries compose_series(const PowerSeries& f, const PowerSeries& g);

// "-x + x^2 - x^3 + 5/6 x^4 - 37/60 x^5", "0" when zero.
std::string series_str(const PowerSeries& s);

}  // namespace operadlab

#endif
