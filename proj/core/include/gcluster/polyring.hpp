#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "gcluster/errors.hpp"

namespace gcluster {

using Rational = mpq_class;

class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t arity() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_var_table(std::vector<std::string> names);
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity);
  explicit Monomial(std::vector<std::uint32_t> exponents);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: divisor divides *this.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  // Graded lex: total degree first, then lexicographic with x1 > x2 > ...
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  explicit Poly(VarTablePtr vars);
  static Poly constant(VarTablePtr vars, const Rational& c);
  static Poly variable(VarTablePtr vars, std::size_t index);
  static Poly monomial(VarTablePtr vars, Monomial mono, const Rational& c = 1);
  // Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(VarTablePtr vars, std::vector<Term> terms);

  const VarTablePtr& vars() const noexcept { return vars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::optional<Rational> constant_value() const;
  const Term& leading_term() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly pow(unsigned e) const;
  Poly mul_term(const Monomial& mono, const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b);

  // Canonical text in the polynomial grammar; parse(to_string()) == *this.
  std::string to_string() const;

 private:
  Poly(VarTablePtr vars, std::vector<Term> sorted_terms);
  void check_table(const Poly& other) const;

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

// Returns c with p = q*c if q divides p, otherwise nullopt. Throws DivisionByZero for q = 0.
std::optional<Poly> try_div_exact(const Poly& p, const Poly& q);

struct Valuation {
  unsigned k;
  Poly cofactor;
};
// Largest k with q^k | p; throws DomainError for p = 0 or constant q.
Valuation valuation(const Poly& p, const Poly& q);

Poly partial_derivative(const Poly& p, std::size_t var);

// Rational evaluation at an exact point.
Rational evaluate(const Poly& p, std::span<const Rational> point);

// Evaluation in Z/prime. Throws ModularError when a denominator vanishes mod prime.
std::uint64_t eval_mod_p(const Poly& p, std::span<const std::uint64_t> point, std::uint64_t prime);

Poly parse_poly(std::string_view text, const VarTablePtr& vars);
Rational parse_rational(std::string_view text);

}  // namespace gcluster
