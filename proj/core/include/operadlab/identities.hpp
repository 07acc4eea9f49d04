#ifndef OPERADLAB_IDENTITIES_HPP
#define OPERADLAB_IDENTITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "operadlab/magma.hpp"
#include "operadlab/subspace.hpp"

namespace operadlab {

// Stable public names: lwlei rwlei lieadm assadm alder lalia ralia lleib
// rleib assoc jacobi anticomm comm pder. All arity 3 except anticomm/comm.
const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);
TreePoly builtin(const std::string& name);

// RREF span of { sigma(p) : p in polys, sigma in S_n }.
Subspace orbit_span(const std::vector<TreePoly>& polys, int arity);
Subspace orbit_span(const std::vector<TreePoly>& polys, const MonomialIndex& idx);

// One summand of an explicit linear combination of permuted named polynomials.
struct CertificateTerm {
  Rational coeff;
  std::string generator;
  Perm sigma;  // one-line images: generator(t_{sigma(1)}, t_{sigma(2)}, t_{sigma(3)})
};

struct Certificate {
  std::string target;
  std::vector<CertificateTerm> terms;
};

TreePoly expand_certificate(const Certificate& cert);

struct ImpliesResult {
  bool holds;
  std::optional<Certificate> certificate;
};

// Does g follow from the identities F at degree 3? On success the certificate
// re-expands exactly to g (checked before returning).
ImpliesResult implies3(const std::vector<std::string>& from, const std::string& to);

bool equiv3(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs);

// Expands assadm + lieadm - lwlei(t3,t1,t2) + rwlei(t2,t3,t1) and tests for zero.
bool verify_four_term();

}  // namespace operadlab

#endif
