#include "primtower/elementary.hpp"

#include <algorithm>

#include "json.hpp"
#include "primtower/arith/factor.hpp"
#include "primtower/errors.hpp"
#include "primtower/hermite.hpp"
#include "primtower/reduction.hpp"

namespace primtower {

namespace {

struct Simple {
  Poly a;
  Poly q;
};

Simple simple_parts(const FieldElement& s, int v, const Tower& tower) {
  NumerDenom nd = split_fraction(s, v);
  if (s.is_zero()) return Simple{nd.numer, nd.denom};
  if (nd.numer.degree() >= nd.denom.degree()) raise(ErrorCode::kNonSimple, "element is not proper");
  if (gcd(nd.denom, tower.derivative(nd.denom)).degree() > 0) {
    raise(ErrorCode::kNonSimple, "denominator is not normal");
  }
  return Simple{nd.numer, nd.denom};
}

bool is_zero_row(const Vector& row) {
  return std::all_of(row.begin(), row.end(), [](const FieldElement& e) { return e.is_zero(); });
}

void append_rows(LinearSystem& sys, const Matrix& rows) {
  for (const auto& row : rows) {
    if (is_zero_row(row)) continue;
    sys.m.emplace_back(row.begin(), row.end() - 1);
    sys.rhs.push_back(row.back());
  }
}

std::vector<std::string> unknown_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

// Polynomials in the level variable over K[z]/(F), index = exponent.
class Extension {
 public:
  explicit Extension(Poly f) : f_(std::move(f)) {}

  using EPoly = std::vector<Poly>;

  Poly reduce(const Poly& a) const { return rem(a, f_); }
  Poly mul(const Poly& a, const Poly& b) const { return rem(a * b, f_); }
  Poly inv(const Poly& a) const { return invmod(a, f_); }

  void trim(EPoly& a) const {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }

  EPoly rem_e(EPoly a, const EPoly& b) const {
    const Poly lead_inv = inv(b.back());
    trim(a);
    while (a.size() >= b.size()) {
      Poly c = mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] = reduce(a[i + shift] - c * b[i]);
      a.pop_back();
      trim(a);
    }
    return a;
  }

  EPoly gcd_e(EPoly a, EPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      EPoly r = rem_e(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (a.empty()) return a;
    Poly lead_inv = inv(a.back());
    for (auto& c : a) c = mul(c, lead_inv);
    return a;
  }

 private:
  Poly f_;
};

// Sum over the roots z of F of z * D(S)/S, as an element of the tower.
FieldElement rootsum_derivative(const RootSumTerm& term, const Tower& tower) {
  const int z = term.z_var;
  Poly f(z, term.poly);
  const int d = f.degree();
  auto a = f.coeffs();
  std::vector<FieldElement> power(static_cast<std::size_t>(d));
  power[0] = FieldElement(d);
  for (int k = 1; k < d; ++k) {
    FieldElement acc = FieldElement(k) * a[static_cast<std::size_t>(d - k)];
    for (int j = 1; j < k; ++j) acc += a[static_cast<std::size_t>(d - j)] * power[static_cast<std::size_t>(k - j)];
    power[static_cast<std::size_t>(k)] = -acc;
  }
  Poly s(z, term.argument);
  Poly ds(z, tower.derivative_extended(term.argument));
  Poly e = rem(Poly::monomial(z, 1, FieldElement(1)) * ds * invmod(s, f), f);
  FieldElement trace;
  for (int k = 0; k < d; ++k) trace += e.coeff(k) * power[static_cast<std::size_t>(k)];
  return trace;
}

FieldElement constant_term(const FieldElement& f, int v, int num_params) {
  for (; v >= num_params; --v) {
    if (!f.involves(v)) continue;
    return constant_term(poly_proper_split(f, v).poly.coeff(0), v - 1, num_params);
  }
  return f;
}

MPoly constant_content(const MPoly& a, int num_params) {
  MPoly c = a;
  for (int v = a.var(); v >= num_params && c.var() >= num_params; --v) c = content_in(c, v);
  return sign_normal(c);
}

bool is_negative(const FieldElement& c) { return !c.is_zero() && sgn(c.num().base_lc()) < 0; }

bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-')) return true;
  }
  return false;
}

std::string z_name(const Tower& tower) {
  std::string name = "z";
  while (tower.var_of_name(name)) name = "_" + name;
  return name;
}

}  // namespace

void LinearSystem::append(const LinearSystem& other) {
  if (other.cols() != cols()) raise(ErrorCode::kInvalidArgument, "linear systems differ in width");
  m.insert(m.end(), other.m.begin(), other.m.end());
  rhs.insert(rhs.end(), other.rhs.begin(), other.rhs.end());
}

std::string LinearSystem::to_json(const Tower& tower) const {
  auto names = tower.variable_names();
  nlohmann::json doc;
  doc["unknowns"] = unknowns;
  doc["matrix"] = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(render(e, names));
    doc["matrix"].push_back(std::move(r));
  }
  doc["rhs"] = nlohmann::json::array();
  for (const auto& e : rhs) doc["rhs"].push_back(render(e, names));
  return doc.dump();
}

LinearSystem constant_matrix(const FieldElement& f, const std::vector<FieldElement>& gs, const Tower& tower,
                             int level) {
  const int v = tower.var_of_level(level);
  LinearSystem out;
  out.unknowns = unknown_names("c", gs.size());
  std::vector<FieldElement> elems(gs);
  elems.push_back(f);
  Poly q(v, FieldElement(1));
  for (const auto& e : elems) {
    Poly d = simple_parts(e, v, tower).q;
    q = q * exact_quotient(d, gcd(q, d));
  }
  if (q.degree() <= 0) return out;
  Poly u = invmod(tower.derivative(q), q);
  Poly vinv = invmod(formal_derivative(q), q);
  Poly kq = tower.kappa(q);
  std::vector<FieldElement> rs;
  for (const auto& e : elems) {
    Poly pu = rem(Poly(v, e * q.value()) * u, q);
    Poly w = tower.kappa(pu) - formal_derivative(pu) * vinv * kq;
    rs.push_back(rem(w, q).value());
  }
  append_rows(out, coordinate_rows(rs, tower.num_params()));
  return out;
}

Poly multiplication_charpoly(const Poly& u, const Poly& q, int z_var) {
  const int n = q.degree();
  const auto size = static_cast<std::size_t>(n);
  Matrix m(size, Vector(size));
  Poly col = rem(u, q);
  const Poly t = Poly::monomial(q.var(), 1, FieldElement(1));
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t i = 0; i < size; ++i) m[i][j] = col.coeff(static_cast<int>(i));
    col = rem(col * t, q);
  }
  std::vector<FieldElement> c(size + 1);
  c[size] = FieldElement(1);
  Matrix mk(size, Vector(size));
  for (int k = 1; k <= n; ++k) {
    mk = matmul(m, mk);
    for (std::size_t i = 0; i < size; ++i) mk[i][i] += c[static_cast<std::size_t>(n - k + 1)];
    Matrix am = matmul(m, mk);
    FieldElement trace;
    for (std::size_t i = 0; i < size; ++i) trace += am[i][i];
    c[static_cast<std::size_t>(n - k)] = -trace / FieldElement(k);
  }
  return Poly::from_coeffs(z_var, c);
}

LogPart rothstein_trager(const FieldElement& s, const Tower& tower, int level) {
  LogPart out;
  if (s.is_zero()) return out;
  const int v = tower.var_of_level(level);
  Simple sp = simple_parts(s, v, tower);
  Poly dq = tower.derivative(sp.q);
  Poly u = rem(sp.a * invmod(dq, sp.q), sp.q);
  const int z = tower.num_vars();
  Poly r = multiplication_charpoly(u, sp.q, z);
  for (const auto& c : r.coeffs()) {
    if (!tower.is_constant(c)) raise(ErrorCode::kNonConstantResidue, "residues are not constant");
  }
  Factorization fac = irreducible_factor(r, &tower.factor_cache(), tower.factor_limits);
  for (const auto& [factor, mult] : fac.factors) {
    if (factor.degree() == 1) {
      FieldElement beta = -factor.coeff(0);
      Poly arg = gcd(sp.q, sp.a - dq.scale(beta));
      out.logs.push_back(LogTerm{beta, arg.value()});
      continue;
    }
    Extension ext(factor);
    Extension::EPoly eq;
    Extension::EPoly ea;
    const Poly zp = Poly::monomial(z, 1, FieldElement(1));
    for (int k = 0; k <= sp.q.degree(); ++k) {
      eq.push_back(Poly(z, sp.q.coeff(k)));
      ea.push_back(ext.reduce(Poly(z, sp.a.coeff(k)) - zp * Poly(z, dq.coeff(k))));
    }
    Extension::EPoly g = ext.gcd_e(eq, ea);
    FieldElement arg;
    for (std::size_t k = 0; k < g.size(); ++k) arg += g[k].value() * pow(tower.t(level), static_cast<int>(k));
    out.rootsums.push_back(RootSumTerm{factor.value(), arg, z});
  }
  return out;
}

std::vector<LogTerm> ElementaryIntegral::grouped_logs() const {
  std::vector<LogTerm> out;
  auto add = [&out](const LogTerm& term) {
    FieldElement c = term.coefficient;
    FieldElement arg = term.argument;
    if (is_negative(c)) {
      c = -c;
      arg = arg.inverse();
    }
    for (auto& g : out) {
      if (g.coefficient == c) {
        g.argument *= arg;
        return;
      }
    }
    out.push_back(LogTerm{c, arg});
  };
  for (const auto& t : rational_logpart) add(t);
  for (const auto& t : tower_logs) add(t);
  std::vector<LogTerm> kept;
  for (auto& g : out) {
    if (g.argument.level() < 0 || g.coefficient.is_zero()) continue;
    kept.push_back(g);
  }
  return kept;
}

std::string ElementaryIntegral::render(const Tower& tower, Format format) const {
  if (format == Format::kJson) return json_quote(render(tower, Format::kPlain));
  const bool latex = format == Format::kLatex;
  auto names = tower.variable_names();
  const int z_var = tower.num_vars();
  names.push_back(latex ? latex_name(z_name(tower)) : z_name(tower));
  const int P = tower.num_params();
  auto fe = [&](const FieldElement& f, bool simplify_args) {
    FieldElement g = simplify_args ? drop_constant_factor(f, tower) : f;
    return primtower::render(g, names, format);
  };
  auto wrap_log = [&](const std::string& arg) {
    return latex ? "\\log\\left(" + arg + "\\right)" : "log(" + arg + ")";
  };
  auto coefficient_text = [&](const FieldElement& c) {
    std::string s = primtower::render(c, names, format);
    if (has_top_level_sum(s)) s = latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
    return latex ? s + " " : s + "*";
  };
  std::string out;
  auto append = [&out](const std::string& term, bool negative) {
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  };
  if (!infield.is_zero()) out = fe(infield, false);
  for (const auto& g : grouped_logs()) {
    bool negative = false;
    FieldElement arg = g.argument;
    if (arg.num().var() < P) {
      negative = true;
      arg = arg.inverse();
    }
    std::string term = wrap_log(fe(arg, true));
    if (!g.coefficient.is_one()) term = coefficient_text(g.coefficient) + term;
    append(term, negative);
  }
  std::vector<int> significance;
  for (int v = z_var - 1; v >= 0; --v) significance.push_back(v);
  significance.push_back(z_var);
  for (const auto& rs : rootsums) {
    std::string f = primtower::render(rs.poly, names, format);
    std::string s = primtower::render(rs.argument, names, format, significance);
    const std::string& z = names.back();
    if (latex) {
      append("\\sum_{" + z + " \\mid " + f + " = 0} " + z + " " + wrap_log(s), false);
    } else {
      append("RootSum(" + f + ", " + z + "*log(" + s + "))", false);
    }
  }
  return out.empty() ? "0" : out;
}

std::string ElementaryResult::to_json(const Tower& tower) const {
  nlohmann::json doc;
  switch (status) {
    case Status::kInField: doc["status"] = "infield"; break;
    case Status::kElementary: doc["status"] = "elementary"; break;
    case Status::kNotElementary: doc["status"] = "not_elementary"; break;
  }
  doc["integral"] = integral ? nlohmann::json(integral->render(tower)) : nlohmann::json(nullptr);
  doc["certificate"] =
      status == Status::kNotElementary ? nlohmann::json::parse(system.to_json(tower)) : nlohmann::json(nullptr);
  return doc.dump();
}

ElementaryResult elementary_integrate(const FieldElement& f, const Tower& tower) {
  ElementaryResult res;
  const int n = tower.height();
  RPair rp = complete_reduce(f, tower);
  if (rp.r.is_zero()) {
    ElementaryIntegral integral;
    integral.infield = drop_constant_term(rp.g, tower);
    res.integral = std::move(integral);
    return res;
  }
  const auto levels = static_cast<std::size_t>(n);
  RemainderSplit split = remainder_split(rp.r, tower, n, false);
  std::vector<RemainderSplit> tsplits;
  for (int i = 1; i <= n; ++i) {
    RemainderSplit sp = remainder_split(tower.associated(i).phi_tp, tower, i - 1, false);
    sp.s.resize(levels);
    tsplits.push_back(std::move(sp));
  }

  LinearSystem sys;
  sys.unknowns = unknown_names("z", levels);
  std::vector<FieldElement> ps;
  for (const auto& sp : tsplits) ps.push_back(sp.p);
  ps.push_back(split.p);
  append_rows(sys, coordinate_rows(ps, tower.num_params()));
  for (int j = 1; j <= n; ++j) {
    std::vector<FieldElement> gs;
    for (const auto& sp : tsplits) gs.push_back(sp.s[static_cast<std::size_t>(j - 1)]);
    LinearSystem cm = constant_matrix(split.s[static_cast<std::size_t>(j - 1)], gs, tower, j);
    cm.unknowns = sys.unknowns;
    sys.append(cm);
  }
  res.system = sys;
  std::optional<Vector> z = solve(sys.m, sys.rhs, sys.cols());
  if (!z) {
    res.status = ElementaryResult::Status::kNotElementary;
    return res;
  }

  ElementaryIntegral integral;
  FieldElement infield = rp.g;
  FieldElement rt = split.r0;
  std::vector<FieldElement> st = split.s;
  for (std::size_t i = 0; i < levels; ++i) {
    const FieldElement& zi = (*z)[i];
    if (zi.is_zero()) continue;
    const int level = static_cast<int>(i) + 1;
    rt -= zi * tsplits[i].r0;
    for (std::size_t j = 0; j < levels; ++j) st[j] -= zi * tsplits[i].s[j];
    infield += zi * (tower.t(level) - tower.associated(level).lambda);
  }
  RPair base = phi0_reduce(rt, tower);
  infield += base.g;
  LogPart lp0 = rothstein_trager(base.r, tower, 0);
  integral.rational_logpart = lp0.logs;
  integral.rootsums = lp0.rootsums;
  for (int j = 1; j <= n; ++j) {
    LogPart lp = rothstein_trager(st[static_cast<std::size_t>(j - 1)], tower, j);
    integral.tower_logs.insert(integral.tower_logs.end(), lp.logs.begin(), lp.logs.end());
    integral.rootsums.insert(integral.rootsums.end(), lp.rootsums.begin(), lp.rootsums.end());
  }
  integral.infield = drop_constant_term(infield, tower);
  integral.z = *z;
  res.status = ElementaryResult::Status::kElementary;
#ifdef PRIMTOWER_CHECKS
  if (!verify_integral(integral, f, tower)) raise(ErrorCode::kArithmetic, "elementary integral failed verification");
#endif
  res.integral = std::move(integral);
  return res;
}

bool verify_integral(const ElementaryIntegral& integral, const FieldElement& f, const Tower& tower) {
  FieldElement total = tower.derivative(integral.infield);
  for (const auto* logs : {&integral.rational_logpart, &integral.tower_logs}) {
    for (const auto& t : *logs) total += t.coefficient * tower.derivative(t.argument) / t.argument;
  }
  for (const auto& rs : integral.rootsums) total += rootsum_derivative(rs, tower);
  return total == f;
}

FieldElement drop_constant_term(const FieldElement& f, const Tower& tower) {
  return f - constant_term(f, f.level(), tower.num_params());
}

FieldElement drop_constant_factor(const FieldElement& f, const Tower& tower) {
  if (f.is_zero()) return f;
  const int P = tower.num_params();
  MPoly cn = constant_content(f.num(), P);
  MPoly cd = constant_content(f.den(), P);
  return FieldElement::fraction(sign_normal(exact_div(f.num(), cn)), exact_div(f.den(), cd));
}

}  // namespace primtower
