#ifndef OPERADLAB_MODELS_HPP
#define OPERADLAB_MODELS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "operadlab/magma.hpp"
#include "operadlab/rational.hpp"

namespace operadlab {

using BasisIndex = long long;

// Finitely supported rational vector over the basis e_i, i in Z.
class SpanElement {
 public:
  using Entry = std::pair<BasisIndex, Rational>;

  SpanElement() = default;
  static SpanElement basis(BasisIndex i, const Rational& c = Rational(1));

  bool is_zero() const { return ent_.empty(); }
  const std::vector<Entry>& entries() const { return ent_; }

  void add(BasisIndex i, const Rational& c);
  SpanElement& operator+=(const SpanElement& other);
  SpanElement& operator-=(const SpanElement& other);
  SpanElement& operator*=(const Rational& c);
  friend SpanElement operator+(SpanElement a, const SpanElement& b) { return a += b; }
  friend SpanElement operator-(SpanElement a, const SpanElement& b) { return a -= b; }
  friend SpanElement operator*(const Rational& c, SpanElement a) { return a *= c; }
  bool operator==(const SpanElement&) const = default;

  std::string str() const;  // "1 e(3) - 1/2 e(-1)", "0" when zero

 private:
  std::vector<Entry> ent_;  // sorted by index, values nonzero
};

// One bilinear product on the e_i basis, given by a total rule on index pairs.
struct SpanAlgebra {
  std::string name;
  std::function<SpanElement(BasisIndex, BasisIndex)> rule;

  SpanElement product(const SpanElement& a, const SpanElement& b) const;
};

// Two products on one basis. Role of the slots depends on the axiom set:
// (circ, bullet) for transposed Poisson / Poisson, (dot, bullet) for
// Novikov-Poisson.
struct BiAlgebra {
  std::string name;
  std::function<SpanElement(BasisIndex, BasisIndex)> first;
  std::function<SpanElement(BasisIndex, BasisIndex)> second;

  SpanElement product_first(const SpanElement& a, const SpanElement& b) const;
  SpanElement product_second(const SpanElement& a, const SpanElement& b) const;
};

SpanAlgebra first_product_algebra(const BiAlgebra& b);
SpanAlgebra second_product_algebra(const BiAlgebra& b);

// e_i x e_j = (j-i) e_{i+j} + sum_s eps_s e_{i+j+s}
SpanAlgebra make_aS(const std::vector<BasisIndex>& shifts, const std::vector<Rational>& eps);

// a x b = u (a db - b da) + v a b on Laurent monomials e_i = x^i with
// e_i e_j = e_{i+j} and d = d/dx.
SpanAlgebra make_derivation_algebra(const SpanElement& u, const SpanElement& v);

// Novikov-Poisson pair e_i . e_j = j e_{i+j}, e_i * e_j = e_{i+j}.
BiAlgebra make_witt_np();

// (a o_u b, a *_v b) = (u * (a.b - b.a), v * (a*b)).
BiAlgebra localize(const BiAlgebra& np, const SpanElement& u, const SpanElement& v);
BiAlgebra localize(const BiAlgebra& np, BasisIndex u_index, BasisIndex v_index);

BiAlgebra polarize(const SpanAlgebra& a);
SpanAlgebra depolarize(const BiAlgebra& b, const Rational& scale = Rational(1));

struct Witness {
  std::string check;               // identity or axiom that failed
  std::vector<BasisIndex> tuple;   // lexicographically smallest failing tuple
  SpanElement lhs, rhs;
};

struct Verdict {
  bool passed = true;
  std::optional<Witness> witness;
};

SpanElement evaluate(const SpanAlgebra& a, const TreePoly& p,
                     const std::vector<SpanElement>& args);

// Exact evaluation of p on every basis tuple with indices in [-window, window];
// products are never truncated.
Verdict check_identity(const SpanAlgebra& a, const TreePoly& p, int window,
                       const std::string& label = "identity");
Verdict check_identity(const SpanAlgebra& a, const std::string& builtin_name, int window);

enum class AxiomSet { transposed_poisson, novikov_poisson, poisson };
std::optional<AxiomSet> axiom_set_from_name(const std::string& name);
std::string axiom_set_name(AxiomSet set);

Verdict check_axioms(const BiAlgebra& b, AxiomSet set, int window);

}  // namespace operadlab

#endif
