#include "gcluster/split.hpp"

#include <algorithm>
#include <sstream>

namespace gcluster {

DistinguishedSet::DistinguishedSet(VarTablePtr vars, std::vector<DistinguishedEntry> entries)
    : vars_(std::move(vars)), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!same_table(e.poly.vars(), vars_))
      throw StructuralError("distinguished polynomial '" + e.label + "' over a different variable table");
    if (e.poly.is_constant()) throw StructuralError("distinguished polynomial '" + e.label + "' is constant");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[j].poly == e.poly) throw StructuralError("distinguished polynomials repeat");
      if (entries_[j].label == e.label) throw StructuralError("distinguished label '" + e.label + "' repeats");
    }
  }
}

std::optional<std::size_t> DistinguishedSet::find(std::string_view label) const {
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k].label == label) return k;
  return std::nullopt;
}

Poly DistinguishedSet::power(std::size_t k, unsigned e) const { return entries_.at(k).poly.pow(e); }

bool operator==(const DistinguishedSet& a, const DistinguishedSet& b) {
  if (!same_table(a.vars_, b.vars_) || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    const auto& x = a.entries_[k];
    const auto& y = b.entries_[k];
    if (x.label != y.label || x.kind != y.kind || !(x.poly == y.poly)) return false;
  }
  return true;
}

DistSetPtr make_dist_set(VarTablePtr vars, std::vector<DistinguishedEntry> entries) {
  return std::make_shared<const DistinguishedSet>(std::move(vars), std::move(entries));
}

DistSetPtr empty_dist_set(VarTablePtr vars) { return make_dist_set(std::move(vars), {}); }

bool same_dist(const DistSetPtr& a, const DistSetPtr& b) { return a == b || (a && b && *a == *b); }

RationalSplit::RationalSplit(DistSetPtr dist, Poly num, std::vector<int> lambda)
    : dist_(std::move(dist)), num_(std::move(num)), lambda_(std::move(lambda)) {
  if (!dist_) throw StructuralError("split without distinguished set");
  if (lambda_.size() != dist_->size()) throw StructuralError("lambda length does not match distinguished set");
  if (!same_table(num_.vars(), dist_->vars())) throw StructuralError("split numerator over a different table");
}

RationalSplit RationalSplit::normalize(DistSetPtr dist, Poly numerator, std::vector<int> lambda) {
  if (numerator.is_zero()) return zero(std::move(dist));
  for (std::size_t k = 0; k < dist->size(); ++k) {
    auto v = valuation(numerator, dist->poly(k));
    if (v.k > 0) {
      numerator = std::move(v.cofactor);
      lambda.at(k) -= static_cast<int>(v.k);
    }
  }
  return RationalSplit(std::move(dist), std::move(numerator), std::move(lambda));
}

RationalSplit RationalSplit::trusted(DistSetPtr dist, Poly numerator, std::vector<int> lambda) {
  if (numerator.is_zero()) return zero(std::move(dist));
  return RationalSplit(std::move(dist), std::move(numerator), std::move(lambda));
}

RationalSplit RationalSplit::zero(DistSetPtr dist) {
  auto vars = dist->vars();
  std::vector<int> lam(dist->size(), 0);
  return RationalSplit(std::move(dist), Poly(vars), std::move(lam));
}

RationalSplit RationalSplit::constant(DistSetPtr dist, const Rational& c) {
  auto vars = dist->vars();
  std::vector<int> lam(dist->size(), 0);
  return RationalSplit(std::move(dist), Poly::constant(vars, c), std::move(lam));
}

RationalSplit RationalSplit::q_power(DistSetPtr dist, std::size_t k, int e) {
  if (k >= dist->size()) throw DomainError("distinguished index out of range");
  auto vars = dist->vars();
  std::vector<int> lam(dist->size(), 0);
  lam[k] = -e;
  return RationalSplit(std::move(dist), Poly::constant(vars, 1), std::move(lam));
}

bool RationalSplit::is_one() const {
  auto c = num_.constant_value();
  return c && *c == 1 && std::all_of(lambda_.begin(), lambda_.end(), [](int l) { return l == 0; });
}

RationalSplit RationalSplit::operator-() const { return RationalSplit(dist_, -num_, lambda_); }

namespace {

void check_dist(const RationalSplit& a, const RationalSplit& b) {
  if (!same_dist(a.dist(), b.dist())) throw StructuralError("splits over different distinguished sets");
}

}  // namespace

RationalSplit operator*(const RationalSplit& a, const RationalSplit& b) {
  check_dist(a, b);
  if (a.is_zero() || b.is_zero()) return RationalSplit::zero(a.dist_);
  std::vector<int> lam(a.lambda_);
  for (std::size_t k = 0; k < lam.size(); ++k) lam[k] += b.lambda_[k];
  return RationalSplit(a.dist_, a.num_ * b.num_, std::move(lam));
}

RationalSplit operator+(const RationalSplit& a, const RationalSplit& b) {
  check_dist(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& D = *a.dist_;
  std::vector<int> top(a.lambda_);
  for (std::size_t k = 0; k < top.size(); ++k) top[k] = std::max(top[k], b.lambda_[k]);
  Poly na = a.num_;
  Poly nb = b.num_;
  for (std::size_t k = 0; k < top.size(); ++k) {
    if (int s = top[k] - a.lambda_[k]; s > 0) na *= D.power(k, static_cast<unsigned>(s));
    if (int s = top[k] - b.lambda_[k]; s > 0) nb *= D.power(k, static_cast<unsigned>(s));
  }
  return RationalSplit::normalize(a.dist_, na + nb, std::move(top));
}

RationalSplit operator-(const RationalSplit& a, const RationalSplit& b) { return a + (-b); }

RationalSplit RationalSplit::pow(unsigned e) const {
  RationalSplit result = one(dist_);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::optional<RationalSplit> RationalSplit::try_div(const RationalSplit& b) const {
  check_dist(*this, b);
  if (b.is_zero()) throw DivisionByZero("split division by zero");
  auto q = try_div_exact(num_, b.num_);
  if (!q) return std::nullopt;
  std::vector<int> lam(lambda_);
  for (std::size_t k = 0; k < lam.size(); ++k) lam[k] -= b.lambda_[k];
  if (q->is_zero()) return zero(dist_);
  return RationalSplit(dist_, std::move(*q), std::move(lam));
}

Poly RationalSplit::value_numerator() const {
  Poly out = num_;
  for (std::size_t k = 0; k < lambda_.size(); ++k)
    if (lambda_[k] < 0) out *= dist_->power(k, static_cast<unsigned>(-lambda_[k]));
  return out;
}

Poly RationalSplit::value_denominator() const {
  Poly out = Poly::constant(dist_->vars(), 1);
  for (std::size_t k = 0; k < lambda_.size(); ++k)
    if (lambda_[k] > 0) out *= dist_->power(k, static_cast<unsigned>(lambda_[k]));
  return out;
}

bool operator==(const RationalSplit& a, const RationalSplit& b) {
  return same_dist(a.dist_, b.dist_) && a.num_ == b.num_ && a.lambda_ == b.lambda_;
}

std::string RationalSplit::to_string() const {
  bool trivial = std::all_of(lambda_.begin(), lambda_.end(), [](int l) { return l == 0; });
  if (trivial) return num_.to_string();
  std::ostringstream os;
  auto c = num_.constant_value();
  bool unit = c && *c == 1;
  if (!unit) os << (num_.size() == 1 ? num_.to_string() : "(" + num_.to_string() + ")");
  bool first = unit;
  for (std::size_t k = 0; k < lambda_.size(); ++k) {
    if (lambda_[k] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << dist_->entry(k).label << '^' << -lambda_[k];
  }
  return os.str();
}

RationalSplit split(const Poly& p, const DistSetPtr& dist) {
  if (!same_table(p.vars(), dist->vars())) throw StructuralError("split over a different variable table");
  return RationalSplit::normalize(dist, p, std::vector<int>(dist->size(), 0));
}

RationalSplit split_arith(const RationalSplit& a, const RationalSplit& b, SplitOp op) {
  switch (op) {
    case SplitOp::Add: return a + b;
    case SplitOp::Sub: return a - b;
    case SplitOp::Mul: return a * b;
  }
  throw DomainError("unknown split operation");
}

RationalSplit subst_pullback(const Poly& p, const std::vector<std::optional<RationalSplit>>& images,
                             const DistSetPtr& dist) {
  const std::size_t n = p.vars()->arity();
  if (images.size() != n) throw StructuralError("pullback map does not match target arity");
  for (const auto& img : images)
    if (img && !same_dist(img->dist(), dist)) throw StructuralError("pullback images over a different set");
  std::vector<std::vector<RationalSplit>> powers(n);
  auto power = [&](std::size_t v, std::uint32_t e) -> const RationalSplit& {
    if (!images[v]) throw StructuralError("pullback map has no image for '" + p.vars()->name(v) + "'");
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(RationalSplit::one(dist));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };
  const auto& D = *dist;
  std::vector<RationalSplit> terms;
  terms.reserve(p.size());
  std::vector<int> top(D.size(), 0);
  bool first = true;
  for (const auto& t : p.terms()) {
    RationalSplit term = RationalSplit::constant(dist, t.coeff);
    for (std::size_t v = 0; v < n; ++v)
      if (t.mono[v] > 0) term = term * power(v, t.mono[v]);
    for (std::size_t k = 0; k < top.size(); ++k)
      top[k] = first ? term.lambda(k) : std::max(top[k], term.lambda(k));
    first = false;
    terms.push_back(std::move(term));
  }
  if (terms.empty()) return RationalSplit::zero(dist);
  Poly sum(D.vars());
  for (const auto& term : terms) {
    Poly num = term.numerator();
    for (std::size_t k = 0; k < top.size(); ++k)
      if (int s = top[k] - term.lambda(k); s > 0) num *= D.power(k, static_cast<unsigned>(s));
    sum += num;
  }
  return RationalSplit::normalize(dist, std::move(sum), std::move(top));
}

}  // namespace gcluster
