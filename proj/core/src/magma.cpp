#include "operadlab/magma.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace operadlab {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

std::vector<Perm> all_perms(int n) {
  Perm p = identity_perm(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& outer, const Perm& inner) {
  Perm out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
  return out;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

MagmaTree MagmaTree::leaf(int index) {
  if (index < 1 || index > 127) throw std::invalid_argument("MagmaTree: leaf index out of range");
  MagmaTree t;
  t.code_ = {static_cast<std::int8_t>(index)};
  return t;
}

MagmaTree MagmaTree::node(const MagmaTree& left, const MagmaTree& right) {
  MagmaTree t;
  t.code_.clear();
  t.code_.reserve(1 + left.code_.size() + right.code_.size());
  t.code_.push_back(-1);
  t.code_.insert(t.code_.end(), left.code_.begin(), left.code_.end());
  t.code_.insert(t.code_.end(), right.code_.begin(), right.code_.end());
  return t;
}

MagmaTree MagmaTree::from_code(std::vector<std::int8_t> code) {
  MagmaTree t;
  t.code_ = std::move(code);
  return t;
}

int MagmaTree::arity() const {
  int n = 0;
  for (auto c : code_)
    if (c > 0) ++n;
  return n;
}

int MagmaTree::max_label() const {
  int m = 0;
  for (auto c : code_)
    if (c > m) m = c;
  return m;
}

namespace {
// One past the end of the subtree starting at `begin`.
std::size_t subtree_end(const std::vector<std::int8_t>& code, std::size_t begin) {
  int need = 1;
  std::size_t i = begin;
  while (need > 0) {
    need += (code[i] < 0) ? 1 : -1;
    ++i;
  }
  return i;
}
}  // namespace

MagmaTree MagmaTree::left() const {
  if (is_leaf()) throw std::logic_error("MagmaTree: leaf has no children");
  std::size_t end = subtree_end(code_, 1);
  return from_code({code_.begin() + 1, code_.begin() + static_cast<std::ptrdiff_t>(end)});
}

MagmaTree MagmaTree::right() const {
  if (is_leaf()) throw std::logic_error("MagmaTree: leaf has no children");
  std::size_t end = subtree_end(code_, 1);
  return from_code({code_.begin() + static_cast<std::ptrdiff_t>(end), code_.end()});
}

std::vector<int> MagmaTree::leaf_sequence() const {
  std::vector<int> out;
  for (auto c : code_)
    if (c > 0) out.push_back(c);
  return out;
}

bool MagmaTree::is_multilinear() const {
  auto labels = leaf_sequence();
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1) return false;
  return true;
}

MagmaTree MagmaTree::relabel(const Perm& sigma) const {
  MagmaTree t = *this;
  for (auto& c : t.code_) {
    if (c > 0) {
      if (c > static_cast<int>(sigma.size()))
        throw std::invalid_argument("MagmaTree: permutation too short for leaf label");
      c = static_cast<std::int8_t>(sigma[c - 1]);
    }
  }
  return t;
}

MagmaTree MagmaTree::split_leaf(int index, int fresh, bool index_on_left) const {
  MagmaTree t;
  t.code_.clear();
  t.code_.reserve(code_.size() + 2);
  bool found = false;
  for (auto c : code_) {
    if (c == index) {
      t.code_.push_back(-1);
      t.code_.push_back(static_cast<std::int8_t>(index_on_left ? index : fresh));
      t.code_.push_back(static_cast<std::int8_t>(index_on_left ? fresh : index));
      found = true;
    } else {
      t.code_.push_back(c);
    }
  }
  if (!found) throw std::invalid_argument("MagmaTree: no leaf with the requested label");
  return t;
}

std::string MagmaTree::str() const {
  // Preorder walk with a stack of remaining-children counters:
  // a completed left child is followed by ' ', a completed right by ')'.
  std::string out;
  std::vector<int> pending;
  for (auto c : code_) {
    if (c < 0) {
      out += '(';
      pending.push_back(2);
    } else {
      out += std::to_string(static_cast<int>(c));
      while (!pending.empty()) {
        if (--pending.back() == 1) {
          out += ' ';
          break;
        }
        out += ')';
        pending.pop_back();
      }
    }
  }
  return out;
}

bool MagmaTree::operator<(const MagmaTree& other) const {
  // Shape first: node (-1) sorts before leaf.
  const auto& a = code_;
  const auto& b = other.code_;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    bool la = a[i] > 0, lb = b[i] > 0;
    if (la != lb) return lb;  // node < leaf
  }
  if (a.size() != b.size()) return a.size() < b.size();
  // Same shape: leaf labels left to right.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0 && a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::size_t MagmaTreeHash::operator()(const MagmaTree& t) const {
  std::size_t h = 1469598103934665603ull;
  for (auto c : t.code()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  }
  return h;
}

TreePoly TreePoly::monomial(const MagmaTree& t, const Rational& c) {
  // Declared arity covers the labels actually used, so partial monomials like
  // the bare generator t_3 combine correctly under graft.
  TreePoly p(t.max_label());
  p.add_term(t, c);
  return p;
}

void TreePoly::add_term(const MagmaTree& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TreePoly& TreePoly::operator+=(const TreePoly& other) {
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

TreePoly& TreePoly::operator-=(const TreePoly& other) {
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

TreePoly& TreePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

TreePoly graft(const TreePoly& a, const TreePoly& b) {
  TreePoly out(std::max(a.arity(), b.arity()));
  for (const auto& [s, c] : a.terms())
    for (const auto& [t, d] : b.terms()) out.add_term(MagmaTree::node(s, t), c * d);
  return out;
}

TreePoly commutator(const TreePoly& a, const TreePoly& b) { return graft(a, b) - graft(b, a); }

TreePoly anticommutator(const TreePoly& a, const TreePoly& b) { return graft(a, b) + graft(b, a); }

std::int64_t free_multilinear_dim(int arity) {
  if (arity < 1) throw std::invalid_argument("free_multilinear_dim: arity must be >= 1");
  std::int64_t f = 1;
  for (int i = 2; i <= arity; ++i) f *= i;
  return catalan(arity - 1) * f;
}

namespace {
std::vector<MagmaTree> all_shapes(int n) {
  // Leaves carry placeholder label 1; relabeled afterwards.
  if (n == 1) return {MagmaTree::leaf(1)};
  std::vector<MagmaTree> out;
  for (int k = 1; k < n; ++k) {
    auto lefts = all_shapes(k);
    auto rights = all_shapes(n - k);
    for (const auto& l : lefts)
      for (const auto& r : rights) out.push_back(MagmaTree::node(l, r));
  }
  return out;
}

MagmaTree label_leaves(const MagmaTree& shape, const Perm& labels) {
  auto code = shape.code();
  std::size_t next = 0;
  for (auto& c : code)
    if (c > 0) c = static_cast<std::int8_t>(labels[next++]);
  return MagmaTree::from_code(std::move(code));
}
}  // namespace

MonomialIndex::MonomialIndex(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("MonomialIndex: arity must be >= 1");
  auto shapes = all_shapes(arity);
  auto perms = all_perms(arity);
  all_.reserve(shapes.size() * perms.size());
  for (const auto& s : shapes)
    for (const auto& p : perms) all_.push_back(label_leaves(s, p));
  std::sort(all_.begin(), all_.end());
  pos_.reserve(all_.size() * 2);
  for (std::size_t i = 0; i < all_.size(); ++i) pos_.emplace(all_[i], static_cast<int>(i));
}

int MonomialIndex::position(const MagmaTree& t) const {
  auto it = pos_.find(t);
  if (it == pos_.end())
    throw std::invalid_argument("MonomialIndex: monomial not in index (arity or labels mismatch)");
  return it->second;
}

MonomialIndex enumerate_monomials(int arity) { return MonomialIndex(arity); }

TreePoly apply_permutation(const TreePoly& p, const Perm& sigma) {
  if (static_cast<int>(sigma.size()) != p.arity() || !is_perm(sigma))
    throw std::invalid_argument("apply_permutation: not a bijection on 1..arity");
  TreePoly out(p.arity());
  for (const auto& [t, c] : p.terms()) out.add_term(t.relabel(sigma), c);
  return out;
}

TreePoly substitute(const TreePoly& p, int index, bool index_on_left) {
  if (index < 1 || index > p.arity())
    throw std::invalid_argument("substitute: variable index out of range");
  TreePoly out(p.arity() + 1);
  const int fresh = p.arity() + 1;
  for (const auto& [t, c] : p.terms()) out.add_term(t.split_leaf(index, fresh, index_on_left), c);
  return out;
}

TreePoly mul_new_var(const TreePoly& p, Side side) {
  TreePoly out(p.arity() + 1);
  MagmaTree fresh = MagmaTree::leaf(p.arity() + 1);
  for (const auto& [t, c] : p.terms())
    out.add_term(side == Side::left ? MagmaTree::node(fresh, t) : MagmaTree::node(t, fresh), c);
  return out;
}

SparseRow to_row(const TreePoly& p, const MonomialIndex& idx) {
  if (p.arity() != idx.arity()) throw std::invalid_argument("to_row: arity mismatch");
  std::vector<SparseRow::Entry> entries;
  entries.reserve(p.term_count());
  for (const auto& [t, c] : p.terms()) entries.emplace_back(idx.position(t), c);
  return SparseRow(static_cast<int>(idx.size()), std::move(entries));
}

TreePoly from_row(const SparseRow& row, const MonomialIndex& idx) {
  if (row.dimension() != static_cast<int>(idx.size()))
    throw std::invalid_argument("from_row: dimension mismatch");
  TreePoly p(idx.arity());
  for (const auto& [col, c] : row.entries()) p.add_term(idx.at(col), c);
  return p;
}

}  // namespace operadlab
