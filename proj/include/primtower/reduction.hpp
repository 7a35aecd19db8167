#pragma once

#include <utility>
#include <vector>

#include "primtower/arith/field_element.hpp"
#include "primtower/tower.hpp"

namespace primtower {

/// f = g' + r with r the remainder of f.
struct RPair {
  FieldElement g;
  FieldElement r;
};

/// Reduction on C(x): Hermite reduction plus integration of the polynomial part.
RPair phi0_reduce(const FieldElement& f, const Tower& tower);

struct AuxiliaryResult {
  Poly q;
  Poly r;
};
/// p = q' + r with every coefficient of r a remainder of the level below.
AuxiliaryResult auxiliary_reduction(const Poly& p, const Tower& tower, int level,
                                    BasisMode mode = BasisMode::kRecurrence);

/// mu_k and nu_k of `level` (nu_0 is zero).
std::pair<FieldElement, FieldElement> mu_nu(int k, const Tower& tower, int level,
                                            BasisMode mode = BasisMode::kRecurrence);

/// (u_k, v_k) for k = 0..d with u_k' = v_k, deg v_k = k and lc(v_k) = phi(t').
std::vector<std::pair<FieldElement, FieldElement>> basis_pairs(int d, const Tower& tower, int level,
                                                               BasisMode mode = BasisMode::kRecurrence);

struct ProjectionResult {
  Poly u;
  Poly v;
};
/// r = u' + v with every coefficient of v of zero theta-coordinate.
ProjectionResult projection(const Poly& r, const Tower& tower, int level,
                            BasisMode mode = BasisMode::kRecurrence);

/// Complete reduction at `level` (f must have level <= `level`).
RPair complete_reduce(const FieldElement& f, const Tower& tower, int level,
                      BasisMode mode = BasisMode::kRecurrence);
RPair complete_reduce(const FieldElement& f, const Tower& tower, BasisMode mode = BasisMode::kRecurrence);

/// The constants c_k (k = from+1..to) with
/// phi_to(f) = phi_from(f) + sum c_k phi_{k-1}(t_k').
std::vector<FieldElement> restrict_level(const FieldElement& f, const Tower& tower, int from, int to);

/// r = r0 + p + sum s[i-1], r0 in C(x), p with zero constant term in each
/// t_i, s[i-1] simple at level i (i = 1..level).
struct RemainderSplit {
  FieldElement r0;
  FieldElement p;
  std::vector<FieldElement> s;
};
/// Throws NotRemainder when `verify` is set and r is not its own remainder.
RemainderSplit remainder_split(const FieldElement& r, const Tower& tower, int level, bool verify = true);
RemainderSplit remainder_split(const FieldElement& r, const Tower& tower, bool verify = true);

}  // namespace primtower
