#ifndef OPERADLAB_SUBSPACE_HPP
#define OPERADLAB_SUBSPACE_HPP

#include <map>
#include <optional>
#include <vector>

#include "operadlab/sparse_row.hpp"

namespace operadlab {

// Row space in canonical reduced row echelon form: pivot columns strictly
// increasing, each pivot 1, pivot columns zero in every other row. Two equal
// subspaces have identical bases row for row.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : dim_(ambient) {}

  int ambient_dimension() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivs_; }

  // Remainder of v after reduction by the basis; zero iff v is in the span.
  SparseRow reduce(const SparseRow& v) const;
  bool contains(const SparseRow& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

  friend class RrefBuilder;

 private:
  int dim_ = 0;
  std::vector<SparseRow> rows_;
  std::vector<int> pivs_;
};

// Canonical RREF of the span of the given rows. Every row must have the given
// ambient dimension. Deterministic: depends only on the span and column order.
Subspace rref(const std::vector<SparseRow>& rows, int ambient);

bool member(const Subspace& s, const SparseRow& v);
bool subspace_equal(const Subspace& a, const Subspace& b);

// Rank of the span without building the canonical basis. Same value as
// rref(...).rank() but cheaper on large inputs.
int row_space_rank(std::vector<SparseRow> rows, int ambient);

// Coefficients c with sum c_i * generators_i = target, if target lies in the
// span. Generators that depend linearly on earlier ones get coefficient 0, so
// the combination prefers zeros on later generators; over the surviving
// independent prefix the coefficients are unique.
std::optional<std::vector<Rational>> express(const SparseRow& target,
                                             const std::vector<SparseRow>& generators);

namespace detail {

// Integer-scaled sparse row used inside elimination: sorted by column,
// content 1, leading entry positive.
using IntRow = std::vector<std::pair<int, mpz_class>>;

struct IntRowOps {
  static IntRow from_sparse(const SparseRow& row);
  static void strip(IntRow& r);
  static void axpy(IntRow& r, const mpz_class& a, const mpz_class& b, const IntRow& p,
                   IntRow& scratch);
  static void eliminate_leading(IntRow& r, const IntRow& p, IntRow& scratch);
};

}  // namespace detail

// Streaming echelon-form builder. add() forward-reduces a row and keeps it if
// independent; add_batch() additionally sorts sparser rows first so they claim
// pivots unreduced; finish() back-substitutes to the canonical RREF.
class RrefBuilder {
 public:
  explicit RrefBuilder(int ambient) : dim_(ambient), pivot_slot_(ambient, -1) {}

  void add(SparseRow row);
  void add_batch(std::vector<SparseRow> rows);
  void add_int_batch(std::vector<detail::IntRow> rows);
  int rank() const { return static_cast<int>(nrows_); }
  int ambient_dimension() const { return dim_; }
  Subspace finish();

 private:
  void insert(detail::IntRow row);

  int dim_;
  std::size_t nrows_ = 0;
  std::vector<int> pivot_slot_;        // column -> index into rows_, or -1
  std::vector<detail::IntRow> rows_;   // slot order = insertion order
};

}  // namespace operadlab

#endif
