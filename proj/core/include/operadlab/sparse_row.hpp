#ifndef OPERADLAB_SPARSE_ROW_HPP
#define OPERADLAB_SPARSE_ROW_HPP

#include <utility>
#include <vector>

#include "operadlab/rational.hpp"

namespace operadlab {

// Sparse rational row vector of a fixed ambient dimension.
// Entries are (column, value) pairs, sorted by column, values nonzero.
class SparseRow {
 public:
  using Entry = std::pair<int, Rational>;

  SparseRow() = default;
  explicit SparseRow(int dimension) : dim_(dimension) {}
  SparseRow(int dimension, std::vector<Entry> entries);

  int dimension() const { return dim_; }
  bool is_zero() const { return ent_.empty(); }
  std::size_t nnz() const { return ent_.size(); }
  const std::vector<Entry>& entries() const { return ent_; }

  // Leading (lowest-column) entry; row must be nonzero.
  int leading_column() const { return ent_.front().first; }
  const Rational& leading_value() const { return ent_.front().second; }

  Rational at(int column) const;
  void set(int column, const Rational& value);
  void add(int column, const Rational& value);

  void scale(const Rational& c);
  // *this += c * other
  void axpy(const Rational& c, const SparseRow& other);

  friend bool operator==(const SparseRow&, const SparseRow&) = default;

 private:
  int dim_ = 0;
  std::vector<Entry> ent_;
};

}  // namespace operadlab

#endif
