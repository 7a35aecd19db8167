#pragma once

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "primtower/arith/field_element.hpp"
#include "primtower/arith/zfactor.hpp"

namespace primtower {

/// unit * prod(factor^multiplicity); factors monic in their variable.
struct Factorization {
  FieldElement unit;
  std::vector<std::pair<Poly, int>> factors;
};

/// Thread-safe memo of multivariate factorizations keyed by the primitive
/// polynomial.
class FactorCache {
 public:
  std::vector<MPoly> factor(const MPoly& f, const FactorLimits& limits = {});
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<MPoly, std::vector<MPoly>> memo_;
};

/// Yun decomposition; multiplicities strictly increasing.
Factorization squarefree_factor(const Poly& a);
/// Complete factorization over the field of lower variables, sorted by the
/// canonical order (total degree, degree in the variable, structure).
Factorization irreducible_factor(const Poly& a, FactorCache* cache = nullptr,
                                 const FactorLimits& limits = {});
/// Product of the factorization, for checks.
Poly expand(const Factorization& f, int var);

/// For proper r whose denominator has q with multiplicity exactly m, returns
/// h_1..h_m (index j-1 holds h_j) with r = sum h_j / q^j + (part coprime to q).
std::vector<Poly> q_adic_expand(const FieldElement& r, const Poly& q, int m);

/// Multiplicity of monic q in the denominator of f with respect to q's
/// variable.
int denominator_multiplicity(const FieldElement& f, const Poly& q);

}  // namespace primtower
