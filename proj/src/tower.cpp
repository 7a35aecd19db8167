#include "primtower/tower.hpp"

#include <algorithm>

#include "json.hpp"
#include "primtower/errors.hpp"
#include "primtower/expr.hpp"
#include "primtower/reduction.hpp"

namespace primtower {

TowerSpec TowerSpec::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::kInvalidTower, std::string("tower spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) raise(ErrorCode::kInvalidTower, "tower spec must be a JSON object");
  TowerSpec spec;
  try {
    spec.base = doc.value("base", std::string("x"));
    if (doc.contains("params")) spec.params = doc.at("params").get<std::vector<std::string>>();
    if (doc.contains("levels")) {
      for (const auto& level : doc.at("levels")) {
        LevelSpec ls;
        ls.name = level.at("name").get<std::string>();
        ls.derivative = level.at("derivative").get<std::string>();
        if (level.contains("dx")) ls.dx = level.at("dx").get<std::string>();
        spec.levels.push_back(std::move(ls));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::kInvalidTower, std::string("malformed tower spec: ") + e.what());
  }
  return spec;
}

std::string TowerSpec::to_json() const {
  nlohmann::json doc;
  doc["base"] = base;
  doc["params"] = params;
  doc["levels"] = nlohmann::json::array();
  for (const auto& level : levels) {
    nlohmann::json l{{"name", level.name}, {"derivative", level.derivative}};
    if (level.dx) l["dx"] = *level.dx;
    doc["levels"].push_back(std::move(l));
  }
  return doc.dump(2);
}

Tower::Tower(std::string base, std::vector<std::string> params)
    : base_(std::move(base)),
      params_(std::move(params)),
      caches_(std::make_unique<Caches>()),
      factor_cache_(std::make_unique<FactorCache>()) {
  std::vector<std::string> names = params_;
  names.push_back(base_);
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    raise(ErrorCode::kDuplicateName, "duplicate variable name in tower");
  }
  for (std::size_t i = 0; i < params_.size(); ++i) {
    d_images_.emplace_back(0);
    dx_images_.emplace_back(i == 0 ? 1 : 0);
  }
  d_images_.emplace_back(1);
  dx_images_.emplace_back(0);
}

Tower::Tower(Tower&&) noexcept = default;
Tower& Tower::operator=(Tower&&) noexcept = default;
Tower::~Tower() = default;

Tower Tower::build(const TowerSpec& spec) {
  Tower tower(spec.base, spec.params);
  for (const auto& level : spec.levels) {
    if (tower.var_of_name(level.name)) raise(ErrorCode::kDuplicateName, "duplicate variable name '" + level.name + "'");
    SymbolTable lower = symbol_table(tower.variable_names());
    FieldElement d = parse_element(level.derivative, lower);
    std::optional<FieldElement> dx;
    if (level.dx) {
      auto names = tower.variable_names();
      names.push_back(level.name);
      dx = parse_element(*level.dx, symbol_table(names));
    }
    tower.add_level(level.name, d, dx);
    tower.levels_.back().derivative_text = level.derivative;
    tower.levels_.back().dx_text = level.dx;
  }
  return tower;
}

void Tower::add_level(const std::string& name, const FieldElement& derivative, std::optional<FieldElement> dx) {
  if (var_of_name(name)) raise(ErrorCode::kDuplicateName, "duplicate variable name '" + name + "'");
  const int level = height() + 1;
  const int v = var_of_level(level);
  if (derivative.level() >= v) {
    raise(ErrorCode::kInvalidTower, "derivative of " + name + " must lie in the previous level");
  }
  if (dx) {
    if (dx->level() > v || dx->den().involves(v) || dx->num().degree(v) >= 2) {
      raise(ErrorCode::kInvalidTower, "dx of " + name + " must be a polynomial of degree < 2 in " + name);
    }
    if (params_.empty()) raise(ErrorCode::kInvalidTower, "dx requires a constant parameter");
  }
  RPair rp = complete_reduce(derivative, *this, level - 1);
  if (rp.r.is_zero()) {
    throw NonPrimitiveError(level, "derivative of " + name + " is a derivative at level " +
                                       std::to_string(level - 1) + " (remainder 0)");
  }
  BasisChoice choice = basis_element(rp.r, *this, level - 1);

  Level l;
  l.name = name;
  l.derivative = derivative;
  l.dx = dx;
  l.pairs = AssociatedPairs{rp.g, rp.r, choice.theta, choice.c};
  auto names = variable_names();
  names.push_back(name);
  l.derivative_text = render(derivative, names);
  if (dx) l.dx_text = render(*dx, names);
  levels_.push_back(std::move(l));
  d_images_.push_back(derivative);
  dx_images_.push_back(dx ? *dx : FieldElement());
  LevelCache cache;
  cache.mu.push_back(rp.g);
  cache.nu.emplace_back(0);
  caches_->levels.push_back(std::move(cache));

  if (dx) {
    bool lower_ok = true;
    for (int i = 1; i < level; ++i) lower_ok = lower_ok && levels_[static_cast<std::size_t>(i - 1)].dx.has_value();
    if (lower_ok && this->dx(derivative) != this->derivative(*dx)) {
      levels_.pop_back();
      d_images_.pop_back();
      dx_images_.pop_back();
      caches_->levels.pop_back();
      raise(ErrorCode::kInvalidTower, "derivations do not commute on " + name);
    }
  }
}

int Tower::level_of(const FieldElement& f) const { return std::max(0, f.level() - num_params()); }

const std::string& Tower::name_of_var(int var) const {
  const int p = num_params();
  if (var < 0 || var > p + height()) raise(ErrorCode::kInvalidArgument, "variable index out of range");
  if (var < p) return params_[static_cast<std::size_t>(var)];
  if (var == p) return base_;
  return levels_[static_cast<std::size_t>(var - p - 1)].name;
}

std::optional<int> Tower::var_of_name(const std::string& name) const {
  for (int v = 0; v < num_vars(); ++v) {
    if (name_of_var(v) == name) return v;
  }
  return std::nullopt;
}

std::vector<std::string> Tower::variable_names() const {
  std::vector<std::string> names;
  for (int v = 0; v < num_vars(); ++v) names.push_back(name_of_var(v));
  return names;
}

FieldElement Tower::apply_derivation(const FieldElement& f, const std::vector<FieldElement>& images,
                                     bool extra_constants) const {
  const int nimages = static_cast<int>(images.size());
  auto dpoly = [&](const MPoly& p) {
    FieldElement acc;
    if (p.var() >= nimages && !extra_constants) {
      raise(ErrorCode::kInvalidArgument, "element is not in the tower");
    }
    for (int v = 0; v <= std::min(p.var(), nimages - 1); ++v) {
      const FieldElement& image = images[static_cast<std::size_t>(v)];
      if (image.is_zero() || !p.involves(v)) continue;
      acc += FieldElement(primtower::derivative(p, v)) * image;
    }
    return acc;
  };
  if (f.is_polynomial()) return dpoly(f.num());
  FieldElement dn = dpoly(f.num());
  FieldElement dd = dpoly(f.den());
  FieldElement den(f.den());
  return (dn * den - FieldElement(f.num()) * dd) / (den * den);
}

FieldElement Tower::derivative(const FieldElement& f) const { return apply_derivation(f, d_images_); }

FieldElement Tower::derivative_extended(const FieldElement& f) const { return apply_derivation(f, d_images_, true); }

Poly Tower::derivative(const Poly& p) const { return Poly(p.var(), derivative(p.value())); }

Poly Tower::kappa(const Poly& p) const {
  const int level = p.var() - num_params();
  if (level == 0) return Poly(p.var(), derivative(p.value()) - formal_derivative(p).value());
  return Poly(p.var(), derivative(p.value()) - formal_derivative(p).value() * t_derivative(level));
}

FieldElement Tower::dx(const FieldElement& f) const {
  if (params_.empty()) raise(ErrorCode::kInvalidTower, "tower has no constant parameter for D_x");
  for (int v = num_params() + 1; v <= f.level(); ++v) {
    if (!levels_[static_cast<std::size_t>(v - num_params() - 1)].dx) {
      raise(ErrorCode::kInvalidTower, "no dx given for " + name_of_var(v));
    }
  }
  return apply_derivation(f, dx_images_);
}

TowerSpec Tower::spec() const {
  TowerSpec s;
  s.base = base_;
  s.params = params_;
  for (const auto& l : levels_) s.levels.push_back(LevelSpec{l.name, l.derivative_text, l.dx_text});
  return s;
}

}  // namespace primtower
