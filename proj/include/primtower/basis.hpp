#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primtower/arith/field_element.hpp"

namespace primtower {

class Tower;

/// One factor of a product basis element at a single level: v^k (m == 0) or
/// v^k / q^m with q monic irreducible in v and 0 <= k < deg q.
struct Atom {
  int k = 0;
  int m = 0;
  std::optional<Poly> q;

  bool is_power() const { return m == 0; }
  friend bool operator==(const Atom& a, const Atom& b) { return a.k == b.k && a.m == b.m && a.q == b.q; }
};

/// Element of the effective constant basis: atoms indexed by level 0..i.
struct BasisIndex {
  std::vector<Atom> atoms;

  const Atom& at(int level) const;
  void set(int level, Atom atom);
  /// The basis element itself as a field element.
  FieldElement value(const Tower& tower) const;
  friend bool operator==(const BasisIndex& a, const BasisIndex& b);
};

struct BasisChoice {
  BasisIndex theta;
  FieldElement c;  // theta*(a), a nonzero constant
};

/// An effective basis element of `a` (nonzero, level <= `level`) and its
/// coordinate.
BasisChoice basis_element(const FieldElement& a, const Tower& tower, int level);
/// theta*(b) for b of level <= `level`.
FieldElement coefficient(const FieldElement& b, const BasisIndex& theta, const Tower& tower, int level);

/// JSON list of atoms, e.g. [{"level":1,"k":1},{"level":0,"k":0,"q":"x","m":1}].
std::string to_json(const BasisIndex& theta, const Tower& tower);

}  // namespace primtower
