#ifndef OPERADLAB_MAGMA_HPP
#define OPERADLAB_MAGMA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "operadlab/rational.hpp"
#include "operadlab/sparse_row.hpp"

namespace operadlab {

// Permutation of 1..n in one-line notation: perm[i-1] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
std::vector<Perm> all_perms(int n);          // lexicographic one-line order
Perm compose(const Perm& outer, const Perm& inner);  // outer after inner
bool is_perm(const Perm& p);

// A magmatic monomial: binary tree whose leaves carry variable indices.
// Stored as a preorder code, -1 for an inner node, k >= 1 for leaf k.
//
// The canonical total order is shape-major: tree shapes compare by their
// preorder node/leaf sequence (node before leaf), ties broken by the
// left-to-right leaf label sequence. This puts the left comb first and
// reproduces the usual display order of bracketing types.
class MagmaTree {
 public:
  MagmaTree() : code_{1} {}

  static MagmaTree leaf(int index);
  static MagmaTree node(const MagmaTree& left, const MagmaTree& right);

  bool is_leaf() const { return code_.size() == 1; }
  int leaf_index() const { return code_[0]; }
  int arity() const;
  int max_label() const;
  MagmaTree left() const;
  MagmaTree right() const;

  std::vector<int> leaf_sequence() const;  // labels left to right

  // True when the labels are exactly 1..arity, each once.
  bool is_multilinear() const;

  MagmaTree relabel(const Perm& sigma) const;
  // Replace the unique leaf labeled `index` by the two-leaf subtree
  // (index, fresh) or (fresh, index).
  MagmaTree split_leaf(int index, int fresh, bool index_on_left) const;

  std::string str() const;  // fully parenthesized, e.g. "((1 2) 3)"

  bool operator==(const MagmaTree&) const = default;
  bool operator<(const MagmaTree& other) const;

  const std::vector<std::int8_t>& code() const { return code_; }
  static MagmaTree from_code(std::vector<std::int8_t> code);

 private:
  std::vector<std::int8_t> code_;
};

struct MagmaTreeHash {
  std::size_t operator()(const MagmaTree& t) const;
};

// Finite rational linear combination of magmatic monomials of one arity.
// Every stored tree has distinct labels within 1..arity (keys of a full
// multilinear polynomial carry each of 1..arity exactly once).
class TreePoly {
 public:
  TreePoly() = default;
  explicit TreePoly(int arity) : arity_(arity) {}
  static TreePoly monomial(const MagmaTree& t, const Rational& c = Rational(1));

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<MagmaTree, Rational>& terms() const { return terms_; }

  void add_term(const MagmaTree& t, const Rational& c);

  TreePoly& operator+=(const TreePoly& other);
  TreePoly& operator-=(const TreePoly& other);
  TreePoly& operator*=(const Rational& c);
  friend TreePoly operator+(TreePoly a, const TreePoly& b) { return a += b; }
  friend TreePoly operator-(TreePoly a, const TreePoly& b) { return a -= b; }
  friend TreePoly operator*(const Rational& c, TreePoly p) { return p *= c; }
  bool operator==(const TreePoly&) const = default;

 private:
  int arity_ = 0;
  std::map<MagmaTree, Rational> terms_;
};

// Bilinear product: grafts every pair of monomials. The arguments must use
// disjoint variable sets; the result arity is the larger declared arity.
TreePoly graft(const TreePoly& a, const TreePoly& b);
TreePoly commutator(const TreePoly& a, const TreePoly& b);      // ab - ba
TreePoly anticommutator(const TreePoly& a, const TreePoly& b);  // ab + ba

// All multilinear monomials of one arity in canonical order.
class MonomialIndex {
 public:
  explicit MonomialIndex(int arity);

  int arity() const { return arity_; }
  std::size_t size() const { return all_.size(); }
  const std::vector<MagmaTree>& monomials() const { return all_; }
  const MagmaTree& at(std::size_t i) const { return all_[i]; }
  int position(const MagmaTree& t) const;

 private:
  int arity_;
  std::vector<MagmaTree> all_;
  std::unordered_map<MagmaTree, int, MagmaTreeHash> pos_;
};

// Catalan(n-1) * n!, the multilinear dimension of the free magmatic algebra.
std::int64_t free_multilinear_dim(int arity);

MonomialIndex enumerate_monomials(int arity);

TreePoly apply_permutation(const TreePoly& p, const Perm& sigma);
TreePoly substitute(const TreePoly& p, int index, bool index_on_left);
enum class Side { left, right };
TreePoly mul_new_var(const TreePoly& p, Side side);

SparseRow to_row(const TreePoly& p, const MonomialIndex& idx);
TreePoly from_row(const SparseRow& row, const MonomialIndex& idx);

}  // namespace operadlab

#endif
