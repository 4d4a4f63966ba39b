#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcluster/cluster.hpp"
#include "gcluster/pullback.hpp"

namespace gcluster {

// Polynomial Poisson bracket given by {x_i, x_j} = omega(i, j) for i < j.
class PoissonStructure {
 public:
  explicit PoissonStructure(VarTablePtr vars);

  const VarTablePtr& vars() const noexcept { return vars_; }
  std::size_t dim() const noexcept { return vars_->arity(); }
  // Sets {x_i, x_j}; i > j stores the negation.
  void set(std::size_t i, std::size_t j, const Poly& value);
  Poly omega(std::size_t i, std::size_t j) const;
  // Nonzero entries with i < j.
  const std::map<std::pair<std::size_t, std::size_t>, Poly>& entries() const noexcept { return omega_; }

 private:
  VarTablePtr vars_;
  std::map<std::pair<std::size_t, std::size_t>, Poly> omega_;
};

Poly bracket(const PoissonStructure& p, const Poly& f, const Poly& g);

// num/den, never reduced.
struct RatFunc {
  Poly num;
  Poly den;

  static RatFunc of(const Poly& p);
  static RatFunc of(const RationalSplit& s);
  RatFunc inverse() const;
  RatFunc pow(int e) const;
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
};

RatFunc bracket_rational(const PoissonStructure& p, const RatFunc& a, const RatFunc& b);

// omega with {f_i, f_j} = omega_ij f_i f_j, or nullopt if some pair is not log-canonical.
std::optional<std::vector<std::vector<Rational>>> is_log_canonical_family(const PoissonStructure& p,
                                                                          const std::vector<Poly>& funcs);
bool is_casimir(const PoissonStructure& p, const RatFunc& f);

// p*_{mr}: p_{mr}^{d_m} times frozen corrections.
RatFunc pstar(const Seed& seed, int m, int r);

// Constant c with a = c*b, or nullopt.
std::optional<Rational> constant_ratio(const RatFunc& a, const RatFunc& b);

struct CompatibilityCondition {
  char label;  // 'a'..'e'
  std::string subject;
  bool pass;
  std::optional<Rational> omega;
};

struct CompatibilityReport {
  std::vector<CompatibilityCondition> conditions;
  // omega_m per mutable vertex where condition (b) produced a constant.
  std::vector<std::optional<Rational>> omega_m;
  std::optional<std::vector<std::vector<Rational>>> log_canonical;
  bool pass() const;
  bool pass(char label) const;
};

// Conditions (a)-(c) on a seed whose variables live on the bracket's space.
CompatibilityReport check_compatibility(const Seed& seed, const PoissonStructure& p);
// Adds (d) {h_j, t~_m} = 0 and (e) hat variables with H log-canonical; (a)-(c) run on to_seed().
CompatibilityReport check_compatibility(const PullbackSeed& ps, const PoissonStructure& p);

// Cyclic sum of {x_i,{x_j,x_k}} at random points mod prime; true when all vanish.
bool jacobi_spot_check(const PoissonStructure& p, int points = 20, std::uint64_t prime = 0,
                       std::uint64_t rng_seed = 1);

}  // namespace gcluster
