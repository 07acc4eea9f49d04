#ifndef OPERADLAB_OPERAD_HPP
#define OPERADLAB_OPERAD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "operadlab/magma.hpp"
#include "operadlab/power_series.hpp"
#include "operadlab/subspace.hpp"

namespace operadlab {

// A named set of multilinear relations of arity 2 and/or 3, stored expanded.
struct RelationSet {
  std::string name;
  std::vector<TreePoly> relations;
};

// Validates arities and multilinearity.
RelationSet make_relation_set(std::string name, std::vector<TreePoly> relations);

// wlei | assoc | free | full, or any builtin polynomial name as a singleton.
RelationSet builtin_relation_set(const std::string& name);
bool is_builtin_relation_set(const std::string& name);

// File format: '#' comments, a "name <identifier>" header line, then one
// polynomial per line in the textual grammar.
RelationSet load_relation_file(const std::string& path);
std::string relation_set_text(const RelationSet& r);

// Arity-n multilinear component of the T-ideal generated by R: iterate from
// the orbit spans of the relations, passing from arity m to m+1 with
// t_{m+1}*f, f*t_{m+1} and the leaf splittings i -> (i, m+1), closing under
// relabelings at each step.
Subspace consequence_space(const RelationSet& r, int arity);

// d_n = Catalan(n-1)*n! - dim consequence_space(r, n) for n = 1..max_arity.
std::vector<std::int64_t> operad_dims(const RelationSet& r, int max_arity);

// Degree-3 rewriting onto the six basis monomials
// { c(ab), (bc)a, (ca)b, (ac)b, (ba)c, (ab)c } (a,b,c = t1,t2,t3).
struct Rewriter {
  std::vector<MagmaTree> basis;            // the six kept monomials
  std::map<MagmaTree, TreePoly> table;     // each of the other six -> combo over basis

  TreePoly rewrite_monomial(const MagmaTree& t) const;
  TreePoly rewrite(const TreePoly& p) const;
};

// Requires the relation span to have dimension 6 with the six basis monomials
// independent modulo it; otherwise throws with the offending monomials named.
Rewriter normal_form(const RelationSet& r);

// Element of (degree-3 A-monomials) x (degree-3 U-monomials).
struct TensorPoly {
  std::map<std::pair<MagmaTree, MagmaTree>, Rational> terms;
  void add_term(const MagmaTree& a, const MagmaTree& u, const Rational& c);
};

// Bracket [x (x) p, y (x) q] = (xy)(x)(pq) - (yx)(x)(qp), extended bilinearly.
TensorPoly tensor_bracket(const TensorPoly& x, const TensorPoly& y);

// Jacobiator of a(x)u, b(x)v, c(x)w under tensor_bracket.
TensorPoly tensor_jacobiator();

struct KoszulDualResult {
  RelationSet dual;
  // Quotient-basis monomial paired with its extracted U-side coefficient, in
  // basis order; zero coefficients are kept to preserve the pairing.
  std::vector<std::pair<MagmaTree, TreePoly>> coefficients;
  Subspace dual_span;
  int input_rank = 0;
};

// Koszul dual relations of a binary quadratic relation set, via the
// tensor-Jacobiator. Checks dim(dual span) = 12 - dim(input span).
KoszulDualResult koszul_dual_detailed(const RelationSet& r);
RelationSet koszul_dual(const RelationSet& r);

// f(f^!(x)) - x through the given order; nonzero certifies failure of the
// Koszulity necessary condition.
PowerSeries koszulity_residual(const RelationSet& r, int order);

}  // namespace operadlab

#endif
