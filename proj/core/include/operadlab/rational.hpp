#ifndef OPERADLAB_RATIONAL_HPP
#define OPERADLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace operadlab {

// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
// GMP keeps arithmetic results canonical as long as the operands are.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Renders as "p" or "p/q" (q > 0), never as a float.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

// Parses "p" or "p/q" with optional sign. Rejects q == 0 and garbage.
std::optional<Rational> rat_parse(const std::string& text);

Rational rat_factorial(int n);
std::int64_t catalan(int n);

}  // namespace operadlab

#endif
