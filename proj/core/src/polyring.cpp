#include "gcluster/polyring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gcluster/modp.hpp"

namespace gcluster {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw StructuralError("empty variable name");
    if (!index_.emplace(names_[i], i).second)
      throw StructuralError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarTablePtr make_var_table(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

Monomial::Monomial(std::size_t arity) : exps_(arity, 0) {}

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  for (auto e : exps_) degree_ += e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ -= divisor.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                b.exps_.end());
}

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return a.mono > b.mono; }

// Merge a + sign*b for two descending term lists.
std::vector<Poly::Term> merge_terms(std::span<const Poly::Term> a, std::span<const Poly::Term> b,
                                    bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].mono <=> b[j].mono;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Poly::Poly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw StructuralError("polynomial without variable table");
}

Poly::Poly(VarTablePtr vars, std::vector<Term> sorted_terms)
    : vars_(std::move(vars)), terms_(std::move(sorted_terms)) {}

Poly Poly::constant(VarTablePtr vars, const Rational& c) {
  Poly p(std::move(vars));
  if (c != 0) p.terms_.push_back({Monomial(p.vars_->arity()), c});
  return p;
}

Poly Poly::variable(VarTablePtr vars, std::size_t index) {
  Poly p(std::move(vars));
  if (index >= p.vars_->arity()) throw DomainError("variable index out of range");
  std::vector<std::uint32_t> e(p.vars_->arity(), 0);
  e[index] = 1;
  p.terms_.push_back({Monomial(std::move(e)), 1});
  return p;
}

Poly Poly::monomial(VarTablePtr vars, Monomial mono, const Rational& c) {
  Poly p(std::move(vars));
  if (mono.arity() != p.vars_->arity()) throw StructuralError("monomial arity mismatch");
  if (c != 0) p.terms_.push_back({std::move(mono), c});
  return p;
}

Poly Poly::from_terms(VarTablePtr vars, std::vector<Term> terms) {
  Poly p(std::move(vars));
  for (const auto& t : terms)
    if (t.mono.arity() != p.vars_->arity()) throw StructuralError("monomial arity mismatch");
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_[0].coeff;
  return std::nullopt;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front();
}

std::uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

void Poly::check_table(const Poly& other) const {
  if (!same_table(vars_, other.vars_)) throw StructuralError("polynomials over different variable tables");
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  check_table(other);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_table(other);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_table(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.vars_);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<Poly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) out.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  return Poly::from_terms(a.vars_, std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(vars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::mul_term(const Monomial& mono, const Rational& c) const {
  if (c == 0) return Poly(vars_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * mono, t.coeff * c});
  return Poly(vars_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_table(a.vars_, b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (t.mono.is_one() || c != 1) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << vars_->name(i);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_sub(const Poly& a, const Poly& b) { return a - b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

std::optional<Poly> try_div_exact(const Poly& p, const Poly& q) {
  if (!same_table(p.vars(), q.vars())) throw StructuralError("polynomials over different variable tables");
  if (q.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (p.is_zero()) return p;
  const auto& lq = q.leading_term();
  if (q.size() == 1) {
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!lq.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / lq.mono, t.coeff / lq.coeff});
    }
    return Poly::from_terms(p.vars(), std::move(out));
  }
  if (q.total_degree() > p.total_degree()) return std::nullopt;
  const std::size_t n = p.vars()->arity();
  for (std::size_t v = 0; v < n; ++v)
    if (q.degree_in(v) > p.degree_in(v)) return std::nullopt;

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Poly::Term> quot;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (!lq.mono.divides(lead->first)) return std::nullopt;
    Monomial m = lead->first / lq.mono;
    Rational c = lead->second / lq.coeff;
    rem.erase(lead);
    for (std::size_t i = 1; i < q.size(); ++i) {
      const auto& t = q.terms()[i];
      auto [it, fresh] = rem.try_emplace(t.mono * m, 0);
      it->second -= t.coeff * c;
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(p.vars(), std::move(quot));
}

Valuation valuation(const Poly& p, const Poly& q) {
  if (p.is_zero()) throw DomainError("valuation of the zero polynomial is undefined");
  if (q.is_constant()) throw DomainError("valuation with respect to a constant");
  Valuation v{0, p};
  while (auto next = try_div_exact(v.cofactor, q)) {
    v.cofactor = std::move(*next);
    ++v.k;
  }
  return v;
}

Poly partial_derivative(const Poly& p, std::size_t var) {
  if (var >= p.vars()->arity()) throw DomainError("variable index out of range");
  std::vector<Poly::Term> out;
  for (const auto& t : p.terms()) {
    auto e = t.mono[var];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps(t.mono.exponents().begin(), t.mono.exponents().end());
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  return Poly::from_terms(p.vars(), std::move(out));
}

Rational evaluate(const Poly& p, std::span<const Rational> point) {
  if (point.size() != p.vars()->arity()) throw StructuralError("point length does not match arity");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

std::uint64_t eval_mod_p(const Poly& p, std::span<const std::uint64_t> point, std::uint64_t prime) {
  if (point.size() != p.vars()->arity()) throw StructuralError("point length does not match arity");
  modp::Field F(prime);
  std::uint64_t sum = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t v = F.from_rational(t.coeff);
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i] > 0) v = F.mul(v, F.pow(point[i] % prime, t.mono[i]));
    sum = F.add(sum, v);
  }
  return sum;
}

}  // namespace gcluster
