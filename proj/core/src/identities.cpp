#include "operadlab/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace operadlab {

namespace {

TreePoly t(int i) { return TreePoly::monomial(MagmaTree::leaf(i)); }

TreePoly build(const std::string& name) {
  const TreePoly t1 = t(1), t2 = t(2), t3 = t(3);
  const Rational two = rat(2);
  if (name == "lwlei")
    return graft(commutator(t1, t2), t3) - two * graft(t1, graft(t2, t3)) +
           two * graft(t2, graft(t1, t3));
  if (name == "rwlei")
    return graft(t1, commutator(t2, t3)) - two * graft(graft(t1, t2), t3) +
           two * graft(graft(t1, t3), t2);
  if (name == "lieadm")
    return commutator(commutator(t1, t2), t3) + commutator(commutator(t2, t3), t1) +
           commutator(commutator(t3, t1), t2);
  if (name == "assadm")
    return anticommutator(t1, anticommutator(t2, t3)) -
           anticommutator(anticommutator(t1, t2), t3);
  if (name == "alder")
    return two * anticommutator(commutator(t1, t2), t3) -
           commutator(t1, anticommutator(t2, t3)) - commutator(anticommutator(t1, t3), t2);
  if (name == "lalia")
    return graft(commutator(t1, t2), t3) + graft(commutator(t2, t3), t1) +
           graft(commutator(t3, t1), t2);
  if (name == "ralia")
    return graft(t1, commutator(t2, t3)) + graft(t2, commutator(t3, t1)) +
           graft(t3, commutator(t1, t2));
  if (name == "lleib")  // (ab)c = a(bc) - b(ac)
    return graft(graft(t1, t2), t3) - graft(t1, graft(t2, t3)) + graft(t2, graft(t1, t3));
  if (name == "rleib")  // a(bc) = (ab)c - (ac)b
    return graft(t1, graft(t2, t3)) - graft(graft(t1, t2), t3) + graft(graft(t1, t3), t2);
  if (name == "assoc") return graft(graft(t1, t2), t3) - graft(t1, graft(t2, t3));
  if (name == "jacobi")
    return graft(graft(t1, t2), t3) + graft(graft(t2, t3), t1) + graft(graft(t3, t1), t2);
  if (name == "anticomm") return anticommutator(t1, t2);
  if (name == "comm") return commutator(t1, t2);
  if (name == "pder")  // the Poisson 1-derivation polynomial in polarized form
    return commutator(t1, anticommutator(t2, t3)) -
           anticommutator(commutator(t1, t2), t3) - anticommutator(t2, commutator(t1, t3));
  throw std::invalid_argument("unknown polynomial name: " + name);
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "lwlei", "rwlei", "lieadm", "assadm", "alder", "lalia",    "ralia",
      "lleib", "rleib", "assoc",  "jacobi", "comm",  "anticomm", "pder"};
  return names;
}

bool is_builtin(const std::string& name) {
  const auto& names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

TreePoly builtin(const std::string& name) { return build(name); }

Subspace orbit_span(const std::vector<TreePoly>& polys, const MonomialIndex& idx) {
  std::vector<SparseRow> rows;
  const auto perms = all_perms(idx.arity());
  rows.reserve(polys.size() * perms.size());
  for (const auto& p : polys) {
    if (p.arity() != idx.arity()) throw std::invalid_argument("orbit_span: arity mismatch");
    for (const auto& sigma : perms) rows.push_back(to_row(apply_permutation(p, sigma), idx));
  }
  return rref(rows, static_cast<int>(idx.size()));
}

Subspace orbit_span(const std::vector<TreePoly>& polys, int arity) {
  MonomialIndex idx(arity);
  return orbit_span(polys, idx);
}

TreePoly expand_certificate(const Certificate& cert) {
  TreePoly sum(3);
  for (const auto& term : cert.terms)
    sum += term.coeff * apply_permutation(builtin(term.generator), term.sigma);
  return sum;
}

ImpliesResult implies3(const std::vector<std::string>& from, const std::string& to) {
  MonomialIndex idx(3);
  const auto perms = all_perms(3);

  std::vector<SparseRow> gen_rows;
  std::vector<std::pair<std::string, Perm>> gen_tags;
  for (const auto& name : from) {
    TreePoly p = builtin(name);
    if (p.arity() != 3) throw std::invalid_argument("implies3: " + name + " is not arity 3");
    for (const auto& sigma : perms) {
      gen_rows.push_back(to_row(apply_permutation(p, sigma), idx));
      gen_tags.emplace_back(name, sigma);
    }
  }
  TreePoly target = builtin(to);
  if (target.arity() != 3) throw std::invalid_argument("implies3: " + to + " is not arity 3");

  auto coeffs = express(to_row(target, idx), gen_rows);
  if (!coeffs) return {false, std::nullopt};

  Certificate cert{to, {}};
  for (std::size_t i = 0; i < coeffs->size(); ++i)
    if ((*coeffs)[i] != 0) cert.terms.push_back({(*coeffs)[i], gen_tags[i].first, gen_tags[i].second});
  if (!(expand_certificate(cert) == target))
    throw std::logic_error("implies3: certificate failed to re-expand to the target");
  return {true, cert};
}

bool equiv3(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs) {
  auto load = [](const std::vector<std::string>& names) {
    std::vector<TreePoly> out;
    for (const auto& n : names) {
      out.push_back(builtin(n));
      if (out.back().arity() != 3) throw std::invalid_argument("equiv3: " + n + " is not arity 3");
    }
    return out;
  };
  MonomialIndex idx(3);
  return subspace_equal(orbit_span(load(lhs), idx), orbit_span(load(rhs), idx));
}

bool verify_four_term() {
  TreePoly sum = builtin("assadm") + builtin("lieadm") -
                 apply_permutation(builtin("lwlei"), Perm{3, 1, 2}) +
                 apply_permutation(builtin("rwlei"), Perm{2, 3, 1});
  return sum.is_zero();
}

}  // namespace operadlab
