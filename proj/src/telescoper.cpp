#include "primtower/telescoper.hpp"

#include "json.hpp"
#include "primtower/elementary.hpp"
#include "primtower/errors.hpp"
#include "primtower/reduction.hpp"

namespace primtower {

namespace {

void check_setup(const Tower& tower) {
  if (tower.num_params() == 0) raise(ErrorCode::kInvalidTower, "telescoping needs a constant parameter");
  for (int i = 1; i <= tower.height(); ++i) {
    if (!tower.t_dx(i)) raise(ErrorCode::kInvalidTower, "no dx given for " + tower.name_of_var(tower.var_of_level(i)));
  }
}

std::vector<FieldElement> normalize(const Vector& v) {
  MPoly den(1);
  for (const auto& c : v) den = lcm(den, c.den());
  std::vector<MPoly> nums;
  MPoly g;
  for (const auto& c : v) {
    nums.push_back(c.num() * exact_div(den, c.den()));
    g = gcd(g, nums.back());
  }
  std::vector<FieldElement> out;
  for (const auto& n : nums) out.emplace_back(n.is_zero() ? n : exact_div(n, g));
  if (!out.empty() && sgn(out.back().num().base_lc()) < 0) {
    for (auto& c : out) c = -c;
  }
  return out;
}

std::string operator_term(const std::string& coefficient, int k, bool latex) {
  if (k == 0) return coefficient;
  std::string d = latex ? "D_{x}" : "D_x";
  if (k > 1) d += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
  if (coefficient == "1") return d;
  if (coefficient == "-1") return "-" + d;
  return coefficient + (latex ? " " : "*") + d;
}

}  // namespace

std::string Telescoper::render_operator(const Tower& tower, Format format) const {
  if (format == Format::kJson) return json_quote(render_operator(tower, Format::kPlain));
  const bool latex = format == Format::kLatex;
  auto names = tower.variable_names();
  std::string out;
  for (int k = order; k >= 0; --k) {
    const FieldElement& c = coefficients[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    bool negative = sgn(c.num().base_lc()) < 0;
    FieldElement mag = negative ? -c : c;
    std::string text = render(mag, names, format);
    if (k > 0 && text.find_first_of("+-") != std::string::npos) {
      text = latex ? "\\left(" + text + "\\right)" : "(" + text + ")";
    }
    std::string term = operator_term(text, k, latex);
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string TelescopeResult::to_json(const Tower& tower) const {
  nlohmann::json doc;
  if (!telescoper) {
    doc["none_up_to"] = m_max;
  } else {
    auto names = tower.variable_names();
    doc["order"] = telescoper->order;
    doc["coefficients"] = nlohmann::json::array();
    for (const auto& c : telescoper->coefficients) doc["coefficients"].push_back(render(c, names));
    doc["operator"] = telescoper->render_operator(tower);
    doc["certificate"] = render(telescoper->certificate, names);
  }
  doc["denominator_degrees"] = denominator_degrees;
  return doc.dump();
}

std::vector<Vector> linear_relations(const std::vector<FieldElement>& elems, const Tower& tower) {
  Matrix rows = coordinate_rows(elems, tower.num_params());
  return nullspace(rows, static_cast<int>(elems.size()));
}

TelescopeResult telescope(const FieldElement& f, const Tower& tower, int m_max) {
  check_setup(tower);
  if (m_max < 0) raise(ErrorCode::kInvalidArgument, "m_max must be non-negative");
  TelescopeResult out;
  out.m_max = m_max;
  const int base = tower.var_of_level(0);
  std::vector<FieldElement> gs;
  std::vector<FieldElement> rs;
  FieldElement d = f;
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) d = tower.dx(d);
    RPair rp = complete_reduce(d, tower);
    gs.push_back(rp.g);
    rs.push_back(rp.r);
    out.denominator_degrees.push_back(rp.r.den().degree(base));
    std::vector<Vector> rel = linear_relations(rs, tower);
    if (rel.empty()) continue;
    Telescoper l;
    l.order = m;
    l.coefficients = normalize(rel.front());
    for (std::size_t k = 0; k < gs.size(); ++k) l.certificate += l.coefficients[k] * gs[k];
    out.telescoper = std::move(l);
    return out;
  }
  return out;
}

bool residue_constancy(const FieldElement& f, const Tower& tower) {
  RPair rp = complete_reduce(f, tower);
  RemainderSplit split = remainder_split(rp.r, tower, tower.height(), false);
  for (int j = 1; j <= tower.height(); ++j) {
    LinearSystem sys = constant_matrix(split.s[static_cast<std::size_t>(j - 1)], {}, tower, j);
    for (const auto& v : sys.rhs) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

bool verify_telescoper(const Telescoper& l, const FieldElement& f, const Tower& tower) {
  FieldElement total = -tower.derivative(l.certificate);
  FieldElement d = f;
  for (int k = 0; k <= l.order; ++k) {
    if (k > 0) d = tower.dx(d);
    total += l.coefficients[static_cast<std::size_t>(k)] * d;
  }
  return total.is_zero();
}

}  // namespace primtower
