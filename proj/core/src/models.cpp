#include "operadlab/models.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "operadlab/identities.hpp"
#include "operadlab/parallel.hpp"

namespace operadlab {

SpanElement SpanElement::basis(BasisIndex i, const Rational& c) {
  SpanElement e;
  e.add(i, c);
  return e;
}

void SpanElement::add(BasisIndex i, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(ent_.begin(), ent_.end(), i,
                             [](const Entry& e, BasisIndex k) { return e.first < k; });
  if (it != ent_.end() && it->first == i) {
    it->second += c;
    if (it->second == 0) ent_.erase(it);
  } else {
    ent_.insert(it, {i, c});
  }
}

SpanElement& SpanElement::operator+=(const SpanElement& other) {
  for (const auto& [i, c] : other.ent_) add(i, c);
  return *this;
}

SpanElement& SpanElement::operator-=(const SpanElement& other) {
  for (const auto& [i, c] : other.ent_) add(i, -c);
  return *this;
}

SpanElement& SpanElement::operator*=(const Rational& c) {
  if (c == 0) {
    ent_.clear();
    return *this;
  }
  for (auto& e : ent_) e.second *= c;
  return *this;
}

std::string SpanElement::str() const {
  if (ent_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : ent_) {
    if (first) {
      out += rat_str(c);
      first = false;
    } else {
      out += (c < 0) ? " - " + rat_str(Rational(-c)) : " + " + rat_str(c);
    }
    out += " e(" + std::to_string(i) + ")";
  }
  return out;
}

SpanElement SpanAlgebra::product(const SpanElement& a, const SpanElement& b) const {
  SpanElement out;
  for (const auto& [i, ci] : a.entries())
    for (const auto& [j, cj] : b.entries()) out += (ci * cj) * rule(i, j);
  return out;
}

SpanElement BiAlgebra::product_first(const SpanElement& a, const SpanElement& b) const {
  return SpanAlgebra{name, first}.product(a, b);
}

SpanElement BiAlgebra::product_second(const SpanElement& a, const SpanElement& b) const {
  return SpanAlgebra{name, second}.product(a, b);
}

SpanAlgebra first_product_algebra(const BiAlgebra& b) {
  return SpanAlgebra{b.name + "[first]", b.first};
}

SpanAlgebra second_product_algebra(const BiAlgebra& b) {
  return SpanAlgebra{b.name + "[second]", b.second};
}

SpanAlgebra make_aS(const std::vector<BasisIndex>& shifts, const std::vector<Rational>& eps) {
  if (shifts.size() != eps.size())
    throw std::invalid_argument("make_aS: shifts and eps must have equal length");
  std::string name = "aS(S=[";
  for (std::size_t k = 0; k < shifts.size(); ++k)
    name += (k ? "," : "") + std::to_string(shifts[k]);
  name += "], eps=[";
  for (std::size_t k = 0; k < eps.size(); ++k) name += (k ? "," : "") + rat_str(eps[k]);
  name += "])";
  return SpanAlgebra{
      std::move(name), [shifts, eps](BasisIndex i, BasisIndex j) {
        SpanElement out = SpanElement::basis(i + j, rat(j - i));
        for (std::size_t k = 0; k < shifts.size(); ++k) out.add(i + j + shifts[k], eps[k]);
        return out;
      }};
}

SpanAlgebra make_derivation_algebra(const SpanElement& u, const SpanElement& v) {
  std::string name = "derivation(u=" + u.str() + ", v=" + v.str() + ")";
  return SpanAlgebra{
      std::move(name), [u, v](BasisIndex i, BasisIndex j) {
        // a db - b da = (j-i) e_{i+j-1} for a=e_i, b=e_j
        SpanElement out;
        for (const auto& [s, us] : u.entries()) out.add(s + i + j - 1, us * rat(j - i));
        for (const auto& [s, vs] : v.entries()) out.add(s + i + j, vs);
        return out;
      }};
}

BiAlgebra make_witt_np() {
  return BiAlgebra{
      "witt-np",
      [](BasisIndex i, BasisIndex j) { return SpanElement::basis(i + j, rat(j)); },
      [](BasisIndex i, BasisIndex j) { return SpanElement::basis(i + j); }};
}

BiAlgebra localize(const BiAlgebra& np, const SpanElement& u, const SpanElement& v) {
  std::string name = np.name + " localized(u=" + u.str() + ", v=" + v.str() + ")";
  BiAlgebra out;
  out.name = name;
  out.first = [np, u](BasisIndex i, BasisIndex j) {
    SpanElement comm = np.first(i, j) - np.first(j, i);
    return np.product_second(u, comm);
  };
  out.second = [np, v](BasisIndex i, BasisIndex j) {
    return np.product_second(v, np.second(i, j));
  };
  return out;
}

BiAlgebra localize(const BiAlgebra& np, BasisIndex u_index, BasisIndex v_index) {
  return localize(np, SpanElement::basis(u_index), SpanElement::basis(v_index));
}

BiAlgebra polarize(const SpanAlgebra& a) {
  const Rational half = rat(1, 2);
  BiAlgebra out;
  out.name = a.name + " polarized";
  out.first = [rule = a.rule, half](BasisIndex i, BasisIndex j) {
    return half * (rule(i, j) - rule(j, i));
  };
  out.second = [rule = a.rule, half](BasisIndex i, BasisIndex j) {
    return half * (rule(i, j) + rule(j, i));
  };
  return out;
}

SpanAlgebra depolarize(const BiAlgebra& b, const Rational& scale) {
  std::string name = b.name + " depolarized";
  if (scale != 1) name += " (scale " + rat_str(scale) + ")";
  return SpanAlgebra{std::move(name), [b, scale](BasisIndex i, BasisIndex j) {
                       return scale * (b.first(i, j) + b.second(i, j));
                     }};
}

namespace {

SpanElement evaluate_tree(const SpanAlgebra& a, const MagmaTree& t,
                          const std::vector<SpanElement>& args) {
  if (t.is_leaf()) {
    int idx = t.leaf_index();
    if (idx < 1 || idx > static_cast<int>(args.size()))
      throw std::invalid_argument("evaluate: argument list too short");
    return args[idx - 1];
  }
  return a.product(evaluate_tree(a, t.left(), args), evaluate_tree(a, t.right(), args));
}

// Lexicographically smallest tuple in [-window, window]^arity failing `ok`.
std::optional<std::vector<BasisIndex>> first_failing_tuple(
    int arity, int window, const std::function<bool(const std::vector<BasisIndex>&)>& ok) {
  const long long side = 2LL * window + 1;
  long long total = 1;
  for (int d = 0; d < arity; ++d) total *= side;

  auto decode = [&](long long flat) {
    std::vector<BasisIndex> tuple(arity);
    for (int d = arity - 1; d >= 0; --d) {
      tuple[d] = flat % side - window;
      flat /= side;
    }
    return tuple;
  };

  std::atomic<long long> best{total};
  parallel_for(static_cast<std::size_t>(total), [&](std::size_t flat_sz) {
    const long long flat = static_cast<long long>(flat_sz);
    if (flat >= best.load(std::memory_order_relaxed)) return;  // can't improve the minimum
    if (ok(decode(flat))) return;
    long long cur = best.load();
    while (flat < cur && !best.compare_exchange_weak(cur, flat)) {
    }
  });
  if (best == total) return std::nullopt;
  return decode(best);
}

struct Axiom {
  std::string name;
  int arity;
  std::function<std::pair<SpanElement, SpanElement>(const BiAlgebra&,
                                                    const std::vector<SpanElement>&)>
      eval;
};

const std::vector<Axiom>& axioms_for(AxiomSet set) {
  using Args = std::vector<SpanElement>;
  static const std::vector<Axiom> transposed = {
      {"circ-anticommutativity", 2,
       [](const BiAlgebra& b, const Args& x) {
         return std::make_pair(b.product_first(x[0], x[1]),
                               Rational(-1) * b.product_first(x[1], x[0]));
       }},
      {"circ-jacobi", 3,
       [](const BiAlgebra& b, const Args& x) {
         SpanElement lhs = b.product_first(b.product_first(x[0], x[1]), x[2]) +
                           b.product_first(b.product_first(x[1], x[2]), x[0]) +
                           b.product_first(b.product_first(x[2], x[0]), x[1]);
         return std::make_pair(lhs, SpanElement());
       }},
      {"bullet-commutativity", 2,
       [](const BiAlgebra& b, const Args& x) {
         return std::make_pair(b.product_second(x[0], x[1]), b.product_second(x[1], x[0]));
       }},
      {"bullet-associativity", 3,
       [](const BiAlgebra& b, const Args& x) {
         return std::make_pair(b.product_second(b.product_second(x[0], x[1]), x[2]),
                               b.product_second(x[0], b.product_second(x[1], x[2])));
       }},
      {"half-derivation", 3,
       [](const BiAlgebra& b, const Args& x) {
         SpanElement lhs = rat(2) * b.product_second(x[0], b.product_first(x[1], x[2]));
         SpanElement rhs = b.product_first(b.product_second(x[0], x[1]), x[2]) +
                           b.product_first(x[1], b.product_second(x[0], x[2]));
         return std::make_pair(lhs, rhs);
       }},
  };
  static const std::vector<Axiom> novikov = {
      {"novikov-left-symmetry", 3,
       [](const BiAlgebra& b, const Args& x) {
         SpanElement lhs =
             b.product_first(b.product_first(x[0], x[1]) - b.product_first(x[1], x[0]), x[2]);
         SpanElement rhs = b.product_first(x[0], b.product_first(x[1], x[2])) -
                           b.product_first(x[1], b.product_first(x[0], x[2]));
         return std::make_pair(lhs, rhs);
       }},
      {"novikov-right-commutativity", 3,
       [](const BiAlgebra& b, const Args& x) {
         return std::make_pair(b.product_first(b.product_first(x[0], x[1]), x[2]),
                               b.product_first(b.product_first(x[0], x[2]), x[1]));
       }},
      {"bullet-commutativity", 2,
       [](const BiAlgebra& b, const Args& x) {
         return std::make_pair(b.product_second(x[0], x[1]), b.product_second(x[1], x[0]));
       }},
      {"bullet-associativity", 3,
       [](const BiAlgebra& b, const Args& x) {
         return std::make_pair(b.product_second(b.product_second(x[0], x[1]), x[2]),
                               b.product_second(x[0], b.product_second(x[1], x[2])));
       }},
      {"mixed-associativity", 3,
       [](const BiAlgebra& b, const Args& x) {
         return std::make_pair(b.product_second(x[0], b.product_first(x[1], x[2])),
                               b.product_first(b.product_second(x[0], x[1]), x[2]));
       }},
      {"mixed-derivation", 3,
       [](const BiAlgebra& b, const Args& x) {
         SpanElement lhs = b.product_first(x[0], b.product_second(x[1], x[2]));
         SpanElement rhs = b.product_second(b.product_first(x[0], x[1]), x[2]) +
                           b.product_second(x[1], b.product_first(x[0], x[2]));
         return std::make_pair(lhs, rhs);
       }},
  };
  static const std::vector<Axiom> poisson = {
      transposed[0],  // circ-anticommutativity
      transposed[1],  // circ-jacobi
      transposed[2],  // bullet-commutativity
      transposed[3],  // bullet-associativity
      {"leibniz-derivation", 3,
       [](const BiAlgebra& b, const Args& x) {
         SpanElement lhs = b.product_first(x[0], b.product_second(x[1], x[2]));
         SpanElement rhs = b.product_second(b.product_first(x[0], x[1]), x[2]) +
                           b.product_second(x[1], b.product_first(x[0], x[2]));
         return std::make_pair(lhs, rhs);
       }},
  };
  switch (set) {
    case AxiomSet::transposed_poisson: return transposed;
    case AxiomSet::novikov_poisson: return novikov;
    case AxiomSet::poisson: return poisson;
  }
  throw std::invalid_argument("unknown axiom set");
}

std::vector<SpanElement> basis_args(const std::vector<BasisIndex>& tuple) {
  std::vector<SpanElement> args;
  args.reserve(tuple.size());
  for (BasisIndex i : tuple) args.push_back(SpanElement::basis(i));
  return args;
}

}  // namespace

SpanElement evaluate(const SpanAlgebra& a, const TreePoly& p,
                     const std::vector<SpanElement>& args) {
  SpanElement out;
  for (const auto& [t, c] : p.terms()) out += c * evaluate_tree(a, t, args);
  return out;
}

Verdict check_identity(const SpanAlgebra& a, const TreePoly& p, int window,
                       const std::string& label) {
  if (window < 1) throw std::invalid_argument("check_identity: window must be >= 1");
  auto fail = first_failing_tuple(p.arity(), window, [&](const std::vector<BasisIndex>& tuple) {
    return evaluate(a, p, basis_args(tuple)).is_zero();
  });
  if (!fail) return {true, std::nullopt};
  Witness w;
  w.check = label;
  w.tuple = *fail;
  w.lhs = evaluate(a, p, basis_args(*fail));
  w.rhs = SpanElement();
  return {false, std::move(w)};
}

Verdict check_identity(const SpanAlgebra& a, const std::string& builtin_name, int window) {
  return check_identity(a, builtin(builtin_name), window, builtin_name);
}

std::optional<AxiomSet> axiom_set_from_name(const std::string& name) {
  if (name == "transposed_poisson") return AxiomSet::transposed_poisson;
  if (name == "novikov_poisson") return AxiomSet::novikov_poisson;
  if (name == "poisson") return AxiomSet::poisson;
  return std::nullopt;
}

std::string axiom_set_name(AxiomSet set) {
  switch (set) {
    case AxiomSet::transposed_poisson: return "transposed_poisson";
    case AxiomSet::novikov_poisson: return "novikov_poisson";
    case AxiomSet::poisson: return "poisson";
  }
  return "?";
}

Verdict check_axioms(const BiAlgebra& b, AxiomSet set, int window) {
  if (window < 1) throw std::invalid_argument("check_axioms: window must be >= 1");
  for (const auto& axiom : axioms_for(set)) {
    auto fail = first_failing_tuple(axiom.arity, window, [&](const std::vector<BasisIndex>& t) {
      auto [lhs, rhs] = axiom.eval(b, basis_args(t));
      return lhs == rhs;
    });
    if (fail) {
      auto [lhs, rhs] = axiom.eval(b, basis_args(*fail));
      return {false, Witness{axiom.name, *fail, std::move(lhs), std::move(rhs)}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace operadlab
