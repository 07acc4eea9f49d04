#include "operadlab/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace operadlab {

namespace {

void check_dimension(const std::vector<SparseRow>& rows, int ambient) {
  for (const auto& r : rows)
    if (r.dimension() != ambient)
      throw std::invalid_argument("subspace: ambient dimension mismatch among rows");
}

}  // namespace

namespace detail {

// Elimination runs on integer-scaled rows: content 1, leading entry positive.
// Keeps the inner loop on mpz (no per-operation gcd canonicalization) and
// bounds coefficient growth by stripping content when entries get large.

void IntRowOps::strip(IntRow& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (const auto& e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) mpz_neg(g.get_mpz_t(), g.get_mpz_t());
  if (g == 1) return;
  for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

IntRow IntRowOps::from_sparse(const SparseRow& row) {
  mpz_class den = 1;
  for (const auto& [col, val] : row.entries())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), val.get_den_mpz_t());
  IntRow out;
  out.reserve(row.nnz());
  mpz_class t;
  for (const auto& [col, val] : row.entries()) {
    mpz_divexact(t.get_mpz_t(), den.get_mpz_t(), val.get_den_mpz_t());
    t *= val.get_num();
    out.emplace_back(col, t);
  }
  strip(out);
  return out;
}

// r := a*r - b*p, merging sorted supports. The leading terms cancel when
// a = lead(p)/g, b = lead(r)/g with g = gcd of the leading values.
void IntRowOps::axpy(IntRow& r, const mpz_class& a, const mpz_class& b, const IntRow& p,
                     IntRow& scratch) {
  scratch.clear();
  scratch.reserve(r.size() + p.size());
  auto it = r.begin();
  auto jt = p.begin();
  mpz_class t;
  while (it != r.end() && jt != p.end()) {
    if (it->first < jt->first) {
      scratch.emplace_back(it->first, mpz_class());
      mpz_mul(scratch.back().second.get_mpz_t(), a.get_mpz_t(), it->second.get_mpz_t());
      ++it;
    } else if (it->first > jt->first) {
      scratch.emplace_back(jt->first, mpz_class());
      mpz_mul(scratch.back().second.get_mpz_t(), b.get_mpz_t(), jt->second.get_mpz_t());
      mpz_neg(scratch.back().second.get_mpz_t(), scratch.back().second.get_mpz_t());
      ++jt;
    } else {
      mpz_mul(t.get_mpz_t(), a.get_mpz_t(), it->second.get_mpz_t());
      mpz_submul(t.get_mpz_t(), b.get_mpz_t(), jt->second.get_mpz_t());
      if (t != 0) scratch.emplace_back(it->first, t);
      ++it;
      ++jt;
    }
  }
  for (; it != r.end(); ++it) {
    scratch.emplace_back(it->first, mpz_class());
    mpz_mul(scratch.back().second.get_mpz_t(), a.get_mpz_t(), it->second.get_mpz_t());
  }
  for (; jt != p.end(); ++jt) {
    scratch.emplace_back(jt->first, mpz_class());
    mpz_mul(scratch.back().second.get_mpz_t(), b.get_mpz_t(), jt->second.get_mpz_t());
    mpz_neg(scratch.back().second.get_mpz_t(), scratch.back().second.get_mpz_t());
  }
  r.swap(scratch);
}

// Cancels r's leading entry against the pivot row p (same leading column).
void IntRowOps::eliminate_leading(IntRow& r, const IntRow& p, IntRow& scratch) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), p.front().second.get_mpz_t());
  mpz_class a, b;
  mpz_divexact(a.get_mpz_t(), p.front().second.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), r.front().second.get_mpz_t(), g.get_mpz_t());
  if (a < 0) {
    mpz_neg(a.get_mpz_t(), a.get_mpz_t());
    mpz_neg(b.get_mpz_t(), b.get_mpz_t());
  }
  axpy(r, a, b, p, scratch);
  if (!r.empty() && mpz_size(r.front().second.get_mpz_t()) > 6) strip(r);
}

}  // namespace detail

void RrefBuilder::insert(detail::IntRow r) {
  detail::IntRow scratch;
  while (!r.empty()) {
    int slot = pivot_slot_[r.front().first];
    if (slot < 0) break;
    detail::IntRowOps::eliminate_leading(r, rows_[slot], scratch);
  }
  if (r.empty()) return;
  detail::IntRowOps::strip(r);
  pivot_slot_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  ++nrows_;
}

void RrefBuilder::add(SparseRow row) {
  if (row.dimension() != dim_)
    throw std::invalid_argument("subspace: ambient dimension mismatch among rows");
  insert(detail::IntRowOps::from_sparse(row));
}

void RrefBuilder::add_batch(std::vector<SparseRow> rows) {
  std::vector<detail::IntRow> batch;
  batch.reserve(rows.size());
  for (auto& row : rows) {
    if (row.dimension() != dim_)
      throw std::invalid_argument("subspace: ambient dimension mismatch among rows");
    if (!row.is_zero()) batch.push_back(detail::IntRowOps::from_sparse(row));
  }
  rows.clear();
  add_int_batch(std::move(batch));
}

void RrefBuilder::add_int_batch(std::vector<detail::IntRow> batch) {
  // Sparsest rows first, so early pivot rows stay narrow; duplicates drop out.
  std::sort(batch.begin(), batch.end(),
            [](const detail::IntRow& a, const detail::IntRow& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k].first != b[k].first) return a[k].first < b[k].first;
                int c = mpz_cmp(a[k].second.get_mpz_t(), b[k].second.get_mpz_t());
                if (c != 0) return c < 0;
              }
              return false;
            });
  batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
  for (auto& r : batch) insert(std::move(r));
}

Subspace RrefBuilder::finish() {
  // Back substitution, highest pivot first. Once a row is fully reduced its
  // support meets the pivot set only in its own pivot, so reducing against it
  // introduces no new pivot-column entries.
  std::vector<int> pivots;
  pivots.reserve(nrows_);
  for (int col = 0; col < dim_; ++col)
    if (pivot_slot_[col] >= 0) pivots.push_back(col);

  detail::IntRow scratch;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    detail::IntRow& r = rows_[pivot_slot_[*it]];
    for (;;) {
      const detail::IntRow* target = nullptr;
      std::size_t pos = 0;
      for (std::size_t k = 1; k < r.size(); ++k) {
        int slot = pivot_slot_[r[k].first];
        if (slot >= 0) {
          target = &rows_[slot];
          pos = k;
          break;
        }
      }
      if (!target) break;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r[pos].second.get_mpz_t(), target->front().second.get_mpz_t());
      mpz_class a, b;
      mpz_divexact(a.get_mpz_t(), target->front().second.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), r[pos].second.get_mpz_t(), g.get_mpz_t());
      if (a < 0) {
        mpz_neg(a.get_mpz_t(), a.get_mpz_t());
        mpz_neg(b.get_mpz_t(), b.get_mpz_t());
      }
      detail::IntRowOps::axpy(r, a, b, *target, scratch);
      if (mpz_size(r.front().second.get_mpz_t()) > 6) detail::IntRowOps::strip(r);
    }
    detail::IntRowOps::strip(r);
  }

  Subspace s(dim_);
  for (int piv : pivots) {
    detail::IntRow& row = rows_[pivot_slot_[piv]];
    const mpz_class& lead = row.front().second;
    std::vector<SparseRow::Entry> entries;
    entries.reserve(row.size());
    for (const auto& [col, val] : row) {
      Rational q(val, lead);
      q.canonicalize();
      entries.emplace_back(col, std::move(q));
    }
    s.pivs_.push_back(piv);
    s.rows_.emplace_back(dim_, std::move(entries));
  }
  rows_.clear();
  nrows_ = 0;
  std::fill(pivot_slot_.begin(), pivot_slot_.end(), -1);
  return s;
}

Subspace rref(const std::vector<SparseRow>& rows, int ambient) {
  RrefBuilder b(ambient);
  b.add_batch(rows);
  return b.finish();
}

SparseRow Subspace::reduce(const SparseRow& v) const {
  if (v.dimension() != dim_)
    throw std::invalid_argument("subspace: ambient dimension mismatch");
  SparseRow r = v;
  std::size_t j = 0;
  while (!r.is_zero()) {
    int lead = r.leading_column();
    while (j < pivs_.size() && pivs_[j] < lead) ++j;
    if (j == pivs_.size() || pivs_[j] != lead) return r;
    r.axpy(-r.leading_value(), rows_[j]);
  }
  return r;
}

bool Subspace::contains(const SparseRow& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.dim_ != dim_)
    throw std::invalid_argument("subspace: ambient dimension mismatch");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool member(const Subspace& s, const SparseRow& v) { return s.contains(v); }

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw std::invalid_argument("subspace: ambient dimension mismatch");
  return a == b;
}

int row_space_rank(std::vector<SparseRow> rows, int ambient) {
  check_dimension(rows, ambient);
  RrefBuilder b(ambient);
  for (auto& row : rows) b.add(std::move(row));
  return b.rank();
}

std::optional<std::vector<Rational>> express(const SparseRow& target,
                                             const std::vector<SparseRow>& generators) {
  const int ambient = target.dimension();
  check_dimension(generators, ambient);
  const int k = static_cast<int>(generators.size());

  // REF over the generators, each basis row carrying its expression in the g_i.
  std::map<int, std::pair<SparseRow, SparseRow>> basis;  // pivot -> (row, combo)
  for (int i = 0; i < k; ++i) {
    SparseRow r = generators[i];
    SparseRow combo(k);
    combo.set(i, Rational(1));
    while (!r.is_zero()) {
      auto it = basis.find(r.leading_column());
      if (it == basis.end()) break;
      Rational c = -r.leading_value();
      r.axpy(c, it->second.first);
      combo.axpy(c, it->second.second);
    }
    if (r.is_zero()) continue;  // dependent on earlier generators
    Rational inv = 1 / r.leading_value();
    r.scale(inv);
    combo.scale(inv);
    basis.emplace(r.leading_column(), std::make_pair(std::move(r), std::move(combo)));
  }

  SparseRow r = target;
  SparseRow acc(k);
  while (!r.is_zero()) {
    auto it = basis.find(r.leading_column());
    if (it == basis.end()) return std::nullopt;
    Rational c = r.leading_value();
    r.axpy(-c, it->second.first);
    acc.axpy(c, it->second.second);
  }
  std::vector<Rational> out(k, Rational(0));
  for (const auto& [i, v] : acc.entries()) out[i] = v;
  return out;
}

}  // namespace operadlab
