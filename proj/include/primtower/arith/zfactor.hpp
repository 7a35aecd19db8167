#pragma once

#include <vector>

#include "primtower/arith/mpoly.hpp"

namespace primtower {

/// Dense univariate integer polynomial, index = exponent, no trailing zeros.
using ZPoly = std::vector<Integer>;

struct FactorLimits {
  int max_modular_factors = 24;
  int max_kronecker_degree = 6000;
};

/// Irreducible factors over Z of a primitive, squarefree polynomial with
/// positive leading coefficient and degree >= 1. Factors are primitive with
/// positive leading coefficients; their product is the input.
std::vector<ZPoly> zassenhaus(const ZPoly& f, const FactorLimits& limits = {});

/// Irreducible factors of a nonconstant, squarefree, integer-primitive
/// multivariate polynomial; each factor is sign-normalized.
std::vector<MPoly> factor_squarefree_multivariate(const MPoly& f, const FactorLimits& limits = {});

ZPoly to_zpoly(const MPoly& f, int var);
MPoly from_zpoly(const ZPoly& f, int var);

}  // namespace primtower
