#include "operadlab/rational.hpp"

#include <cctype>

namespace operadlab {

std::optional<Rational> rat_parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // mpq set_str accepts some forms we don't want (whitespace, hex); keep it strict.
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  bool digits = false, slash = false;
  for (; i < text.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits = true;
    } else if (text[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return std::nullopt;
    }
  }
  if (!digits) return std::nullopt;
  Rational q;
  if (q.set_str(text, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

Rational rat_factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return Rational(f);
}

std::int64_t catalan(int n) {
  // n <= 15 or so in practice; exact via binomial.
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  mpz_class c = b / (n + 1);
  return c.get_si();
}

}  // namespace operadlab
