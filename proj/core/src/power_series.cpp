#include "operadlab/power_series.hpp"

#include <stdexcept>

namespace operadlab {

bool PowerSeries::is_zero() const {
  for (const auto& c : coeff)
    if (c != 0) return false;
  return true;
}

PowerSeries series_x(int order) {
  if (order < 1) throw std::invalid_argument("series_x: order must be >= 1");
  PowerSeries s(order);
  s.coeff[1] = 1;
  return s;
}

PowerSeries gen_series(const std::vector<std::int64_t>& dims, int order) {
  if (static_cast<int>(dims.size()) < order)
    throw std::invalid_argument("gen_series: dims must cover degrees 1..order");
  PowerSeries s(order);
  Rational fact(1);
  for (int n = 1; n <= order; ++n) {
    fact *= n;
    Rational c = rat(dims[n - 1]) / fact;
    s.coeff[n] = (n % 2 == 0) ? c : -c;
  }
  return s;
}

namespace {
void check_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order != b.order) throw std::invalid_argument("power series truncation orders differ");
}
}  // namespace

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  PowerSeries out(a.order);
  for (int k = 0; k <= a.order; ++k) out.coeff[k] = a.coeff[k] + b.coeff[k];
  return out;
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  PowerSeries out(a.order);
  for (int k = 0; k <= a.order; ++k) out.coeff[k] = a.coeff[k] - b.coeff[k];
  return out;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  PowerSeries out(a.order);
  for (int i = 0; i <= a.order; ++i) {
    if (a.coeff[i] == 0) continue;
    for (int j = 0; i + j <= a.order; ++j) {
      if (b.coeff[j] == 0) continue;
      out.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
  }
  return out;
}

PowerSeries compose_series(const PowerSeries& f, const PowerSeries& g) {
  check_same_order(f, g);
  if (g.coeff[0] != 0)
    throw std::invalid_argument("compose_series: inner series must have zero constant term");
  // Horner: result = f_N; result = result*g + f_k.
  PowerSeries out(f.order);
  out.coeff[0] = f.coeff[f.order];
  for (int k = f.order - 1; k >= 0; --k) {
    out = mul(out, g);
    out.coeff[0] += f.coeff[k];
  }
  return out;
}

std::string series_str(const PowerSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order; ++k) {
    const Rational& c = s.coeff[k];
    if (c == 0) continue;
    Rational a = c > 0 ? c : Rational(-c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string var = (k == 0) ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0) {
      out += rat_str(a);
    } else if (a == 1) {
      out += var;
    } else {
      out += rat_str(a) + " " + var;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace operadlab
