#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primtower/arith/linalg.hpp"
#include "primtower/expr.hpp"
#include "primtower/tower.hpp"

namespace primtower {

/// M z = v over the constants; `unknowns` names the columns.
struct LinearSystem {
  Matrix m;
  Vector rhs;
  std::vector<std::string> unknowns;

  int cols() const { return static_cast<int>(unknowns.size()); }
  void append(const LinearSystem& other);
  std::string to_json(const Tower& tower) const;
};

/// Rows satisfied by (c_1..c_l) iff every residue of f - sum c_j gs[j] is a
/// constant. f and gs must be simple at `level`.
LinearSystem constant_matrix(const FieldElement& f, const std::vector<FieldElement>& gs, const Tower& tower,
                             int level);

/// coefficient * log(argument)
struct LogTerm {
  FieldElement coefficient;
  FieldElement argument;
};

/// Sum of z*log(argument(z)) over the roots z of the monic irreducible
/// `poly`. Both live on variable `z_var`, one above the tower.
struct RootSumTerm {
  FieldElement poly;
  FieldElement argument;
  int z_var = 0;
};

struct LogPart {
  std::vector<LogTerm> logs;
  std::vector<RootSumTerm> rootsums;
};

/// Logarithmic part of a simple element at `level` whose residues are all
/// constant; throws NonConstantResidue otherwise.
LogPart rothstein_trager(const FieldElement& s, const Tower& tower, int level);

struct ElementaryIntegral {
  FieldElement infield;
  std::vector<LogTerm> rational_logpart;
  std::vector<LogTerm> tower_logs;
  std::vector<RootSumTerm> rootsums;
  std::vector<FieldElement> z;

  /// Log terms with equal coefficients up to sign merged into one argument.
  std::vector<LogTerm> grouped_logs() const;
  std::string render(const Tower& tower, Format format = Format::kPlain) const;
};

struct ElementaryResult {
  enum class Status { kInField, kElementary, kNotElementary };
  Status status = Status::kInField;
  std::optional<ElementaryIntegral> integral;
  LinearSystem system;

  std::string to_json(const Tower& tower) const;
};

ElementaryResult elementary_integrate(const FieldElement& f, const Tower& tower);

/// Exact derivative identity. A root sum contributes the trace over its
/// residue field of z*D(S)/S.
bool verify_integral(const ElementaryIntegral& integral, const FieldElement& f, const Tower& tower);

/// f minus its recursive constant term.
FieldElement drop_constant_term(const FieldElement& f, const Tower& tower);
/// f divided by its constant content, up to sign.
FieldElement drop_constant_factor(const FieldElement& f, const Tower& tower);

/// Characteristic polynomial in z of multiplication by u modulo q.
Poly multiplication_charpoly(const Poly& u, const Poly& q, int z_var);

}  // namespace primtower
