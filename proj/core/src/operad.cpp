#include "operadlab/operad.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "operadlab/identities.hpp"
#include "operadlab/parallel.hpp"
#include "operadlab/poly_text.hpp"

namespace operadlab {

RelationSet make_relation_set(std::string name, std::vector<TreePoly> relations) {
  for (const auto& p : relations) {
    if (p.is_zero()) throw std::invalid_argument("relation set: zero polynomial relation");
    if (p.arity() != 2 && p.arity() != 3)
      throw std::invalid_argument("relation set: relations must have arity 2 or 3");
    for (const auto& [t, c] : p.terms())
      if (t.arity() != p.arity() || !t.is_multilinear())
        throw std::invalid_argument("relation set: non-multilinear relation term");
  }
  return RelationSet{std::move(name), std::move(relations)};
}

bool is_builtin_relation_set(const std::string& name) {
  return name == "wlei" || name == "assoc" || name == "free" || name == "full" ||
         is_builtin(name);
}

RelationSet builtin_relation_set(const std::string& name) {
  if (name == "wlei") return make_relation_set("wlei", {builtin("lwlei"), builtin("rwlei")});
  if (name == "assoc") return make_relation_set("assoc", {builtin("assoc")});
  if (name == "free") return RelationSet{"free", {}};
  if (name == "full") {
    MonomialIndex idx(3);
    std::vector<TreePoly> rel;
    rel.reserve(idx.size());
    for (const auto& t : idx.monomials()) rel.push_back(TreePoly::monomial(t));
    return make_relation_set("full", std::move(rel));
  }
  if (is_builtin(name)) return make_relation_set(name, {builtin(name)});
  throw std::invalid_argument("unknown relation set: " + name);
}

RelationSet load_relation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open relation file: " + path);
  std::string line, name;
  std::vector<TreePoly> rels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (name.empty()) {
      if (first != "name")
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": expected 'name <identifier>' header");
      if (!(ls >> name) || name.empty())
        throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": missing set name");
      std::string extra;
      if (ls >> extra)
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": trailing input after set name");
      continue;
    }
    try {
      rels.push_back(parse_poly(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (name.empty()) throw std::invalid_argument(path + ": missing 'name' header");
  return make_relation_set(name, std::move(rels));
}

std::string relation_set_text(const RelationSet& r) {
  std::string out = "name " + r.name + "\n";
  for (const auto& p : r.relations) out += poly_str(p) + "\n";
  return out;
}

namespace {

// Arity-(m+1) consequence generators of the arity-m component: for each basis
// element f the lifts t*f, f*t and the leaf splittings i -> (i, m+1), each
// closed under the transpositions (k, m+1). Emitted as integer rows, generated
// in blocks whose slot layout keeps the output order thread-count independent.
std::vector<detail::IntRow> lift_rows(const Subspace& comp, const MonomialIndex& idx_m,
                                      const MonomialIndex& idx_next) {
  const int m = idx_m.arity();
  const int ops = m + 2;
  const int cosets = m + 1;

  std::vector<Perm> taus;
  for (int k = 1; k <= cosets; ++k) {
    Perm tau = identity_perm(m + 1);
    std::swap(tau[k - 1], tau[m]);
    taus.push_back(std::move(tau));
  }

  const auto& rows = comp.basis();
  const std::size_t per_row = static_cast<std::size_t>(ops) * cosets;
  std::vector<detail::IntRow> out(rows.size() * per_row);
  const std::size_t block = 256;
  for (std::size_t start = 0; start < rows.size(); start += block) {
    const std::size_t count = std::min(block, rows.size() - start);
    parallel_for(count, [&](std::size_t i) {
      TreePoly f = from_row(rows[start + i], idx_m);
      for (int op = 0; op < ops; ++op) {
        TreePoly lifted = op == 0   ? mul_new_var(f, Side::left)
                          : op == 1 ? mul_new_var(f, Side::right)
                                    : substitute(f, op - 1, true);
        for (int k = 0; k < cosets; ++k)
          out[(start + i) * per_row + static_cast<std::size_t>(op) * cosets + k] =
              detail::IntRowOps::from_sparse(to_row(apply_permutation(lifted, taus[k]), idx_next));
      }
    });
  }
  return out;
}

class ConsequenceEngine {
 public:
  explicit ConsequenceEngine(const RelationSet& r) {
    for (const auto& p : r.relations) seeds_[p.arity()].push_back(p);
  }

  const MonomialIndex& index(int n) {
    auto it = indices_.find(n);
    if (it == indices_.end()) it = indices_.emplace(n, MonomialIndex(n)).first;
    return it->second;
  }

  const Subspace& component(int n) {
    build_to(n);
    return components_.at(n);
  }

  // Rank of the arity-n component; skips the canonical back substitution at
  // the top arity.
  int component_rank(int n) {
    if (auto it = components_.find(n); it != components_.end()) return it->second.rank();
    if (auto it = ranks_.find(n); it != ranks_.end()) return it->second;
    if (n >= 2) build_to(n - 1);
    RrefBuilder b = stage_builder(n);
    return ranks_[n] = b.rank();
  }

 private:
  // REF builder loaded with everything that spans the arity-n component.
  RrefBuilder stage_builder(int n) {
    const MonomialIndex& idx = index(n);
    RrefBuilder b(static_cast<int>(idx.size()));
    std::vector<detail::IntRow> rows;
    if (n >= 2) {
      const Subspace& prev = component(n - 1);
      if (prev.rank() > 0) rows = lift_rows(prev, index(n - 1), idx);
    }
    if (auto it = seeds_.find(n); it != seeds_.end()) {
      const auto perms = all_perms(n);
      for (const auto& p : it->second)
        for (const auto& sigma : perms)
          rows.push_back(detail::IntRowOps::from_sparse(to_row(apply_permutation(p, sigma), idx)));
    }
    b.add_int_batch(std::move(rows));
    return b;
  }

  void build_to(int n) {
    for (int m = 1; m <= n; ++m) {
      if (components_.count(m)) continue;
      if (m == 1) {
        components_.emplace(1, Subspace(static_cast<int>(index(1).size())));
        continue;
      }
      RrefBuilder b = stage_builder(m);
      components_.emplace(m, b.finish());
    }
  }

  std::map<int, std::vector<TreePoly>> seeds_;
  std::map<int, MonomialIndex> indices_;
  std::map<int, Subspace> components_;
  std::map<int, int> ranks_;
};

}  // namespace

Subspace consequence_space(const RelationSet& r, int arity) {
  if (arity < 1) throw std::invalid_argument("consequence_space: arity must be >= 1");
  ConsequenceEngine engine(r);
  return engine.component(arity);
}

std::vector<std::int64_t> operad_dims(const RelationSet& r, int max_arity) {
  if (max_arity < 1) throw std::invalid_argument("operad_dims: max_arity must be >= 1");
  ConsequenceEngine engine(r);
  std::vector<std::int64_t> dims;
  dims.reserve(max_arity);
  for (int n = 1; n <= max_arity; ++n) {
    int rank = (n == max_arity) ? engine.component_rank(n) : engine.component(n).rank();
    dims.push_back(free_multilinear_dim(n) - rank);
  }
  return dims;
}

namespace {

MagmaTree pair_tree(int i, int j) {
  return MagmaTree::node(MagmaTree::leaf(i), MagmaTree::leaf(j));
}
MagmaTree left_comb(int i, int j, int k) {
  return MagmaTree::node(pair_tree(i, j), MagmaTree::leaf(k));
}
MagmaTree right_comb(int i, int j, int k) {
  return MagmaTree::node(MagmaTree::leaf(i), pair_tree(j, k));
}

// The paper's degree-3 basis and, in display order, the six reduced monomials.
std::vector<MagmaTree> paper_basis() {
  return {right_comb(3, 1, 2), left_comb(2, 3, 1), left_comb(3, 1, 2),
          left_comb(1, 3, 2),  left_comb(2, 1, 3), left_comb(1, 2, 3)};
}
std::vector<MagmaTree> paper_nonbasis() {
  return {right_comb(1, 3, 2), right_comb(1, 2, 3), right_comb(2, 3, 1),
          right_comb(2, 1, 3), right_comb(3, 2, 1), left_comb(3, 2, 1)};
}

struct PaperRewriteError {
  std::string message;
};

// Re-eliminates the span with the six non-basis monomials as the leading
// columns, so they become the pivots and each row reads as a rewrite rule.
std::variant<Rewriter, PaperRewriteError> build_paper_rewriter(const Subspace& span,
                                                               const MonomialIndex& idx) {
  const auto basis = paper_basis();
  const auto nonbasis = paper_nonbasis();
  if (span.rank() != 6)
    return PaperRewriteError{"relation span has dimension " + std::to_string(span.rank()) +
                             ", expected 6"};

  std::vector<int> col_order;  // permuted position -> original column
  for (const auto& t : nonbasis) col_order.push_back(idx.position(t));
  for (const auto& t : basis) col_order.push_back(idx.position(t));
  std::vector<int> to_permuted(idx.size());
  for (int j = 0; j < static_cast<int>(col_order.size()); ++j) to_permuted[col_order[j]] = j;

  std::vector<SparseRow> rows;
  for (const auto& row : span.basis()) {
    std::vector<SparseRow::Entry> entries;
    for (const auto& [col, val] : row.entries()) entries.emplace_back(to_permuted[col], val);
    rows.emplace_back(row.dimension(), std::move(entries));
  }
  Subspace permuted = rref(rows, static_cast<int>(idx.size()));

  std::vector<MagmaTree> dependent;
  for (int piv : permuted.pivots())
    if (piv >= 6) dependent.push_back(basis[piv - 6]);
  if (!dependent.empty()) {
    std::string msg = "basis monomials dependent modulo the relation span:";
    for (const auto& t : dependent) msg += " " + t.str();
    return PaperRewriteError{std::move(msg)};
  }

  Rewriter rw;
  rw.basis = basis;
  for (const auto& row : permuted.basis()) {
    const int piv = row.leading_column();
    TreePoly rhs(3);
    for (const auto& [col, val] : row.entries()) {
      if (col == piv) continue;
      rhs.add_term(basis[col - 6], -val);
    }
    rw.table.emplace(nonbasis[piv], std::move(rhs));
  }
  return rw;
}

}  // namespace

TreePoly Rewriter::rewrite_monomial(const MagmaTree& t) const {
  if (auto it = table.find(t); it != table.end()) return it->second;
  if (std::find(basis.begin(), basis.end(), t) != basis.end()) return TreePoly::monomial(t);
  throw std::invalid_argument("Rewriter: monomial not covered: " + t.str());
}

TreePoly Rewriter::rewrite(const TreePoly& p) const {
  TreePoly out(p.arity());
  for (const auto& [t, c] : p.terms()) out += c * rewrite_monomial(t);
  return out;
}

Rewriter normal_form(const RelationSet& r) {
  for (const auto& p : r.relations)
    if (p.arity() != 3)
      throw std::invalid_argument("normal_form: relation set must be degree-3 only");
  MonomialIndex idx(3);
  auto result = build_paper_rewriter(orbit_span(r.relations, idx), idx);
  if (auto* err = std::get_if<PaperRewriteError>(&result))
    throw std::invalid_argument("normal_form: " + err->message);
  return std::get<Rewriter>(std::move(result));
}

void TensorPoly::add_term(const MagmaTree& a, const MagmaTree& u, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, u);
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TensorPoly tensor_bracket(const TensorPoly& x, const TensorPoly& y) {
  TensorPoly out;
  for (const auto& [xt, xc] : x.terms) {
    for (const auto& [yt, yc] : y.terms) {
      Rational c = xc * yc;
      out.add_term(MagmaTree::node(xt.first, yt.first), MagmaTree::node(xt.second, yt.second), c);
      out.add_term(MagmaTree::node(yt.first, xt.first), MagmaTree::node(yt.second, xt.second), -c);
    }
  }
  return out;
}

TensorPoly tensor_jacobiator() {
  auto gen = [](int i) {
    TensorPoly t;
    t.add_term(MagmaTree::leaf(i), MagmaTree::leaf(i), Rational(1));
    return t;
  };
  TensorPoly g1 = gen(1), g2 = gen(2), g3 = gen(3);
  TensorPoly out;
  for (const auto& part : {tensor_bracket(tensor_bracket(g1, g2), g3),
                           tensor_bracket(tensor_bracket(g2, g3), g1),
                           tensor_bracket(tensor_bracket(g3, g1), g2)})
    for (const auto& [key, c] : part.terms) out.add_term(key.first, key.second, c);
  return out;
}

KoszulDualResult koszul_dual_detailed(const RelationSet& r) {
  for (const auto& p : r.relations)
    if (p.arity() != 3)
      throw std::invalid_argument("koszul_dual: relation set must be binary quadratic "
                                  "(degree-3 relations only)");
  MonomialIndex idx(3);
  Subspace span = orbit_span(r.relations, idx);
  const int rank = span.rank();

  // Quotient basis and rewrite table. The paper's six monomials are used when
  // they are a valid complement; otherwise fall back to the RREF non-pivot
  // monomials. The extracted span does not depend on this choice.
  std::vector<MagmaTree> qbasis;
  std::map<MagmaTree, TreePoly> table;  // every monomial -> combo over qbasis
  auto paper = build_paper_rewriter(span, idx);
  if (auto* rw = std::get_if<Rewriter>(&paper)) {
    qbasis = rw->basis;
    table = std::move(rw->table);
    for (const auto& t : qbasis) table.emplace(t, TreePoly::monomial(t));
  } else {
    std::vector<bool> is_pivot(idx.size(), false);
    for (int piv : span.pivots()) is_pivot[piv] = true;
    for (std::size_t col = 0; col < idx.size(); ++col)
      if (!is_pivot[col]) qbasis.push_back(idx.at(col));
    for (const auto& t : qbasis) table.emplace(t, TreePoly::monomial(t));
    for (const auto& row : span.basis()) {
      TreePoly rhs(3);
      for (const auto& [col, val] : row.entries()) {
        if (col == row.leading_column()) continue;
        rhs.add_term(idx.at(col), -val);
      }
      table.emplace(idx.at(row.leading_column()), std::move(rhs));
    }
  }

  std::map<MagmaTree, TreePoly> collected;
  for (const auto& t : qbasis) collected.emplace(t, TreePoly(3));
  for (const auto& [key, c] : tensor_jacobiator().terms) {
    const TreePoly& rw = table.at(key.first);
    for (const auto& [m, coeff] : rw.terms()) collected.at(m).add_term(key.second, c * coeff);
  }

  KoszulDualResult out;
  out.input_rank = rank;
  for (const auto& t : qbasis) {
    out.coefficients.emplace_back(t, collected.at(t));
    if (!collected.at(t).is_zero()) out.dual.relations.push_back(collected.at(t));
  }
  out.dual.name = r.name + "!";
  out.dual_span = out.dual.relations.empty() ? Subspace(static_cast<int>(idx.size()))
                                             : orbit_span(out.dual.relations, idx);
  if (out.dual_span.rank() != 12 - rank)
    throw std::logic_error("koszul_dual: dual span dimension " +
                           std::to_string(out.dual_span.rank()) + " != 12 - " +
                           std::to_string(rank));
  return out;
}

RelationSet koszul_dual(const RelationSet& r) { return koszul_dual_detailed(r).dual; }

PowerSeries koszulity_residual(const RelationSet& r, int order) {
  if (order < 2) throw std::invalid_argument("koszulity_residual: order must be >= 2");
  PowerSeries f = gen_series(operad_dims(r, order), order);
  PowerSeries fdual = gen_series(operad_dims(koszul_dual(r), order), order);
  return sub(compose_series(f, fdual), series_x(order));
}

}  // namespace operadlab
