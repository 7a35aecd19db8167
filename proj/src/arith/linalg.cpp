#include "primtower/arith/linalg.hpp"

#include <algorithm>
#include <map>

#include "primtower/errors.hpp"

namespace primtower {

Echelon reduced_echelon(const Matrix& m, int cols) {
  Matrix a = m;
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != cols) raise(ErrorCode::kInvalidArgument, "matrix row width mismatch");
  }
  Echelon out;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    FieldElement inv = a[r][c].inverse();
    for (int k = c; k < cols; ++k) {
      if (!a[r][k].is_zero()) a[r][k] *= inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      FieldElement f = a[i][c];
      for (int k = c; k < cols; ++k) {
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

int rank(const Matrix& m, int cols) { return static_cast<int>(reduced_echelon(m, cols).pivots.size()); }

std::optional<Vector> solve(const Matrix& a, const Vector& b, int cols) {
  if (a.size() != b.size()) raise(ErrorCode::kInvalidArgument, "right-hand side length mismatch");
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = reduced_echelon(aug, cols + 1);
  Vector z(static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    z[static_cast<std::size_t>(e.pivots[i])] = e.rows[i][static_cast<std::size_t>(cols)];
  }
  return z;
}

std::vector<Vector> nullspace(const Matrix& a, int cols) {
  Echelon e = reduced_echelon(a, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector z(static_cast<std::size_t>(cols));
    z[static_cast<std::size_t>(f)] = FieldElement(1);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      z[static_cast<std::size_t>(e.pivots[i])] = -e.rows[i][static_cast<std::size_t>(f)];
    }
    basis.push_back(std::move(z));
  }
  return basis;
}

namespace {

void collect_monomials(const MPoly& p, int num_params, std::vector<int>& exps,
                       std::map<std::vector<int>, Vector>& rows, std::size_t column, std::size_t width) {
  if (p.is_zero()) return;
  if (p.var() < num_params) {
    auto [it, inserted] = rows.try_emplace(exps, Vector(width));
    it->second[column] += FieldElement(p);
    return;
  }
  const auto idx = static_cast<std::size_t>(p.var() - num_params);
  const auto& coeffs = p.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    exps[idx] = static_cast<int>(k);
    collect_monomials(coeffs[k], num_params, exps, rows, column, width);
  }
  exps[idx] = 0;
}

}  // namespace

Matrix coordinate_rows(const std::vector<FieldElement>& elems, int num_params) {
  MPoly den(1);
  for (const auto& e : elems) {
    if (!e.is_zero()) den = lcm(den, e.den());
  }
  int top = num_params;
  for (const auto& e : elems) top = std::max(top, e.level() + 1);
  std::map<std::vector<int>, Vector> rows;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    if (elems[j].is_zero()) continue;
    MPoly scaled = elems[j].num() * exact_div(den, elems[j].den());
    std::vector<int> exps(static_cast<std::size_t>(top - num_params), 0);
    collect_monomials(scaled, num_params, exps, rows, j, elems.size());
  }
  Matrix out;
  for (auto& entry : rows) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace primtower
