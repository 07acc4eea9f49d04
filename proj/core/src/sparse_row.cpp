#include "operadlab/sparse_row.hpp"

#include <algorithm>
#include <stdexcept>

namespace operadlab {

SparseRow::SparseRow(int dimension, std::vector<Entry> entries)
    : dim_(dimension), ent_(std::move(entries)) {
  std::sort(ent_.begin(), ent_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  // Merge duplicate columns, drop zeros.
  std::vector<Entry> merged;
  merged.reserve(ent_.size());
  for (auto& e : ent_) {
    if (e.first < 0 || e.first >= dim_) throw std::invalid_argument("SparseRow: column out of range");
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
      if (merged.back().second == 0) merged.pop_back();
    } else if (e.second != 0) {
      merged.push_back(std::move(e));
    }
  }
  ent_ = std::move(merged);
}

Rational SparseRow::at(int column) const {
  auto it = std::lower_bound(ent_.begin(), ent_.end(), column,
                             [](const Entry& e, int c) { return e.first < c; });
  if (it != ent_.end() && it->first == column) return it->second;
  return Rational(0);
}

void SparseRow::set(int column, const Rational& value) {
  if (column < 0 || column >= dim_) throw std::invalid_argument("SparseRow: column out of range");
  auto it = std::lower_bound(ent_.begin(), ent_.end(), column,
                             [](const Entry& e, int c) { return e.first < c; });
  if (it != ent_.end() && it->first == column) {
    if (value == 0)
      ent_.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    ent_.insert(it, {column, value});
  }
}

void SparseRow::add(int column, const Rational& value) {
  if (value == 0) return;
  if (column < 0 || column >= dim_) throw std::invalid_argument("SparseRow: column out of range");
  auto it = std::lower_bound(ent_.begin(), ent_.end(), column,
                             [](const Entry& e, int c) { return e.first < c; });
  if (it != ent_.end() && it->first == column) {
    it->second += value;
    if (it->second == 0) ent_.erase(it);
  } else {
    ent_.insert(it, {column, value});
  }
}

void SparseRow::scale(const Rational& c) {
  if (c == 0) {
    ent_.clear();
    return;
  }
  for (auto& e : ent_) e.second *= c;
}

void SparseRow::axpy(const Rational& c, const SparseRow& other) {
  if (c == 0 || other.ent_.empty()) return;
  std::vector<Entry> out;
  out.reserve(ent_.size() + other.ent_.size());
  auto a = ent_.begin();
  auto b = other.ent_.begin();
  while (a != ent_.end() && b != other.ent_.end()) {
    if (a->first < b->first) {
      out.push_back(std::move(*a++));
    } else if (a->first > b->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational v = a->second + c * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  for (; a != ent_.end(); ++a) out.push_back(std::move(*a));
  for (; b != other.ent_.end(); ++b) out.emplace_back(b->first, c * b->second);
  ent_ = std::move(out);
}

}  // namespace operadlab
