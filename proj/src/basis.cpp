#include "primtower/basis.hpp"

#include "json.hpp"
#include "primtower/arith/factor.hpp"
#include "primtower/errors.hpp"
#include "primtower/expr.hpp"
#include "primtower/tower.hpp"

namespace primtower {

const Atom& BasisIndex::at(int level) const {
  static const Atom kOne;
  if (level < 0 || level >= static_cast<int>(atoms.size())) return kOne;
  return atoms[static_cast<std::size_t>(level)];
}

void BasisIndex::set(int level, Atom atom) {
  if (level >= static_cast<int>(atoms.size())) atoms.resize(static_cast<std::size_t>(level) + 1);
  atoms[static_cast<std::size_t>(level)] = std::move(atom);
}

FieldElement BasisIndex::value(const Tower& tower) const {
  FieldElement out(1);
  for (int level = 0; level < static_cast<int>(atoms.size()); ++level) {
    const Atom& a = atoms[static_cast<std::size_t>(level)];
    out *= pow(tower.t(level), a.k);
    if (!a.is_power()) out /= pow(a.q->value(), a.m);
  }
  return out;
}

bool operator==(const BasisIndex& a, const BasisIndex& b) {
  std::size_t n = std::max(a.atoms.size(), b.atoms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.at(static_cast<int>(i)) == b.at(static_cast<int>(i)))) return false;
  }
  return true;
}

BasisChoice basis_element(const FieldElement& a, const Tower& tower, int level) {
  if (a.is_zero()) raise(ErrorCode::kInvalidArgument, "basis_element of zero");
  BasisChoice out;
  out.theta.atoms.resize(static_cast<std::size_t>(level) + 1);
  FieldElement cur = a;
  for (int i = level; i >= 0; --i) {
    const int v = tower.var_of_level(i);
    PolyProper pp = poly_proper_split(cur, v);
    Atom atom;
    if (!pp.poly.is_zero()) {
      atom.k = pp.poly.degree();
      cur = pp.poly.lc();
    } else {
      NumerDenom nd = split_fraction(pp.proper, v);
      Factorization fac = irreducible_factor(nd.denom, &tower.factor_cache(), tower.factor_limits);
      const auto& [q, m] = fac.factors.front();
      Poly h = q_adic_expand(pp.proper, q, m)[static_cast<std::size_t>(m - 1)];
      atom.k = h.degree();
      atom.m = m;
      atom.q = q;
      cur = h.lc();
    }
    out.theta.atoms[static_cast<std::size_t>(i)] = std::move(atom);
  }
  out.c = cur;
  return out;
}

FieldElement coefficient(const FieldElement& b, const BasisIndex& theta, const Tower& tower, int level) {
  for (int i = level + 1; i < static_cast<int>(theta.atoms.size()); ++i) {
    const Atom& a = theta.at(i);
    if (!a.is_power() || a.k != 0) return FieldElement();
  }
  FieldElement cur = b;
  for (int i = level; i >= 0; --i) {
    if (cur.is_zero()) return cur;
    const Atom& atom = theta.at(i);
    const int v = tower.var_of_level(i);
    PolyProper pp = poly_proper_split(cur, v);
    if (atom.is_power()) {
      cur = pp.poly.coeff(atom.k);
      continue;
    }
    int mult = denominator_multiplicity(pp.proper, *atom.q);
    if (mult < atom.m) return FieldElement();
    cur = q_adic_expand(pp.proper, *atom.q, mult)[static_cast<std::size_t>(atom.m - 1)].coeff(atom.k);
  }
  return cur;
}

std::string to_json(const BasisIndex& theta, const Tower& tower) {
  nlohmann::json out = nlohmann::json::array();
  auto names = tower.variable_names();
  for (std::size_t i = 0; i < theta.atoms.size(); ++i) {
    const Atom& a = theta.atoms[i];
    nlohmann::json j{{"level", i}, {"k", a.k}};
    if (!a.is_power()) {
      j["q"] = render(a.q->value(), names);
      j["m"] = a.m;
    }
    out.push_back(std::move(j));
  }
  return out.dump();
}

}  // namespace primtower
