#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "primtower/arith/factor.hpp"
#include "primtower/arith/field_element.hpp"
#include "primtower/basis.hpp"

namespace primtower {

/// (lambda, phi(t')) is the R-pair of t' at the level below; (theta, c) is the
/// basis element of phi(t') and its coordinate.
struct AssociatedPairs {
  FieldElement lambda;
  FieldElement phi_tp;
  BasisIndex theta;
  FieldElement c;
};

enum class BasisMode { kRecurrence, kNaive };

struct LevelSpec {
  std::string name;
  std::string derivative;
  std::optional<std::string> dx;
};

/// JSON document: {"base": "x", "params": [...], "levels": [{"name", "derivative", "dx"?}]}
struct TowerSpec {
  std::string base = "x";
  std::vector<std::string> params;
  std::vector<LevelSpec> levels;

  static TowerSpec from_json(const std::string& text);
  std::string to_json() const;
};

/// A primitive tower C(x)(t_1)...(t_n) with C = Q(params).
///
/// Variable indices: params are 0..P-1, the base variable is P and t_i is
/// P + i, so level i lives on variable P + i.
class Tower {
 public:
  explicit Tower(std::string base = "x", std::vector<std::string> params = {});
  static Tower build(const TowerSpec& spec);

  Tower(Tower&&) noexcept;
  Tower& operator=(Tower&&) noexcept;
  ~Tower();

  /// Appends t_{n+1} with the given derivative; throws NonPrimitive if it
  /// has zero remainder at the current top level. `dx` is an optional second
  /// derivation image (telescoper mode).
  void add_level(const std::string& name, const FieldElement& derivative,
                 std::optional<FieldElement> dx = std::nullopt);

  int num_params() const { return static_cast<int>(params_.size()); }
  int height() const { return static_cast<int>(levels_.size()); }
  int var_of_level(int level) const { return num_params() + level; }
  int num_vars() const { return num_params() + height() + 1; }
  /// Minimal level of f; constants have level 0.
  int level_of(const FieldElement& f) const;
  bool is_constant(const FieldElement& f) const { return f.level() < num_params(); }

  const std::string& name_of_var(int var) const;
  std::optional<int> var_of_name(const std::string& name) const;
  std::vector<std::string> variable_names() const;
  const std::string& base_name() const { return base_; }
  const std::vector<std::string>& params() const { return params_; }

  FieldElement variable(int var) const { return FieldElement::variable(var); }
  FieldElement t(int level) const { return FieldElement::variable(var_of_level(level)); }
  const FieldElement& t_derivative(int level) const { return levels_.at(level - 1).derivative; }
  const std::optional<FieldElement>& t_dx(int level) const { return levels_.at(level - 1).dx; }
  const AssociatedPairs& associated(int level) const { return levels_.at(level - 1).pairs; }

  /// The tower derivation: params' = 0, base' = 1, t_i' as given.
  FieldElement derivative(const FieldElement& f) const;
  /// Same, treating variables above the tower as constants.
  FieldElement derivative_extended(const FieldElement& f) const;
  /// Derivation on polynomials in t_level that treats t_level as a constant.
  Poly kappa(const Poly& p) const;
  /// Tower derivative of a polynomial in t_level, as a polynomial.
  Poly derivative(const Poly& p) const;
  /// Second derivation D_x: params[0]' = 1, base' = 0, t_i' = dx_i.
  FieldElement dx(const FieldElement& f) const;

  FactorCache& factor_cache() const { return *factor_cache_; }
  FactorLimits factor_limits;

  /// Extend-only caches; entries never change once published.
  struct LevelCache {
    std::vector<FieldElement> mu;  // mu[0] = lambda
    std::vector<FieldElement> nu;  // nu[0] unused
    std::vector<std::pair<FieldElement, FieldElement>> pairs[2];
  };
  std::mutex& cache_mutex() const { return caches_->mutex; }
  LevelCache& level_cache(int level) const { return caches_->levels.at(static_cast<std::size_t>(level - 1)); }

  TowerSpec spec() const;

 private:
  struct Level {
    std::string name;
    FieldElement derivative;
    std::optional<FieldElement> dx;
    AssociatedPairs pairs;
    std::string derivative_text;
    std::optional<std::string> dx_text;
  };
  struct Caches {
    std::mutex mutex;
    std::deque<LevelCache> levels;
  };

  FieldElement apply_derivation(const FieldElement& f, const std::vector<FieldElement>& images,
                                bool extra_constants = false) const;

  std::string base_;
  std::vector<std::string> params_;
  std::vector<Level> levels_;
  std::vector<FieldElement> d_images_;
  std::vector<FieldElement> dx_images_;
  std::unique_ptr<Caches> caches_;
  std::unique_ptr<FactorCache> factor_cache_;
};

}  // namespace primtower
