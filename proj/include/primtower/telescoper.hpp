#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primtower/arith/linalg.hpp"
#include "primtower/expr.hpp"
#include "primtower/tower.hpp"

namespace primtower {

/// L = sum l_k D_x^k with L(f) = D_y(certificate).
struct Telescoper {
  int order = 0;
  std::vector<FieldElement> coefficients;  // l_0..l_m
  FieldElement certificate;

  std::string render_operator(const Tower& tower, Format format = Format::kPlain) const;
};

struct TelescopeResult {
  std::optional<Telescoper> telescoper;
  int m_max = 0;
  /// Degree in the base variable of the denominator of each computed remainder.
  std::vector<int> denominator_degrees;

  std::string to_json(const Tower& tower) const;
};

/// The tower must have a constant parameter (x) and a dx image for every
/// level. Searches orders 0..m_max for the first C(x)-linear relation among
/// the remainders of D_x^k(f).
TelescopeResult telescope(const FieldElement& f, const Tower& tower, int m_max = 6);

/// Basis of the C(x)-relations among the given elements.
std::vector<Vector> linear_relations(const std::vector<FieldElement>& elems, const Tower& tower);

/// True iff every residue of the simple part of the remainder of f is a
/// constant of the tower derivation.
bool residue_constancy(const FieldElement& f, const Tower& tower);

/// L(f) - D_y(certificate) == 0.
bool verify_telescoper(const Telescoper& l, const FieldElement& f, const Tower& tower);

}  // namespace primtower
