#pragma once

#include "primtower/arith/field_element.hpp"

namespace primtower {

class Tower;

/// f = g' + p + s with p a polynomial in the level variable and s simple.
struct HermiteTriple {
  FieldElement g;
  Poly p;
  FieldElement s;
};

/// Hermite reduction with respect to the variable of `level` (level 0 is the
/// base variable).
HermiteTriple hermite_reduce(const FieldElement& f, const Tower& tower, int level);

}  // namespace primtower
