#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gcluster/polyring.hpp"

namespace gcluster {

enum class DistKind { G, H };

struct DistinguishedEntry {
  std::string label;
  DistKind kind;
  Poly poly;
};

// Ordered distinguished polynomials q_k over one ambient space. Irreducibility and
// pairwise non-associateness are an input contract.
class DistinguishedSet {
 public:
  DistinguishedSet(VarTablePtr vars, std::vector<DistinguishedEntry> entries);

  const VarTablePtr& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const DistinguishedEntry& entry(std::size_t k) const { return entries_.at(k); }
  const Poly& poly(std::size_t k) const { return entries_.at(k).poly; }
  const std::vector<DistinguishedEntry>& entries() const noexcept { return entries_; }
  std::optional<std::size_t> find(std::string_view label) const;
  Poly power(std::size_t k, unsigned e) const;

  friend bool operator==(const DistinguishedSet& a, const DistinguishedSet& b);

 private:
  VarTablePtr vars_;
  std::vector<DistinguishedEntry> entries_;
};

using DistSetPtr = std::shared_ptr<const DistinguishedSet>;

DistSetPtr make_dist_set(VarTablePtr vars, std::vector<DistinguishedEntry> entries);
DistSetPtr empty_dist_set(VarTablePtr vars);
bool same_dist(const DistSetPtr& a, const DistSetPtr& b);

// Value numerator * prod_k q_k^(-lambda_k) with a q-free numerator.
class RationalSplit {
 public:
  // Re-splits the numerator so the invariant holds.
  static RationalSplit normalize(DistSetPtr dist, Poly numerator, std::vector<int> lambda);
  // Caller guarantees the numerator is q-free.
  static RationalSplit trusted(DistSetPtr dist, Poly numerator, std::vector<int> lambda);
  static RationalSplit zero(DistSetPtr dist);
  static RationalSplit constant(DistSetPtr dist, const Rational& c);
  static RationalSplit one(DistSetPtr dist) { return constant(std::move(dist), 1); }
  // q_k^e as a split: numerator 1, lambda_k = -e.
  static RationalSplit q_power(DistSetPtr dist, std::size_t k, int e);

  const DistSetPtr& dist() const noexcept { return dist_; }
  const Poly& numerator() const noexcept { return num_; }
  const std::vector<int>& lambda() const noexcept { return lambda_; }
  int lambda(std::size_t k) const { return lambda_.at(k); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;

  RationalSplit operator-() const;
  friend RationalSplit operator*(const RationalSplit& a, const RationalSplit& b);
  friend RationalSplit operator+(const RationalSplit& a, const RationalSplit& b);
  friend RationalSplit operator-(const RationalSplit& a, const RationalSplit& b);
  RationalSplit pow(unsigned e) const;
  // Exact quotient a/b at split level; nullopt when the numerators do not divide.
  std::optional<RationalSplit> try_div(const RationalSplit& b) const;

  // Expanded value num * prod q^max(0,-lambda) over prod q^max(0,lambda).
  Poly value_numerator() const;
  Poly value_denominator() const;

  friend bool operator==(const RationalSplit& a, const RationalSplit& b);

  // "num" when lambda = 0, otherwise "(num)*q^e..." with e = -lambda.
  std::string to_string() const;

 private:
  RationalSplit(DistSetPtr dist, Poly num, std::vector<int> lambda);

  DistSetPtr dist_;
  Poly num_;
  std::vector<int> lambda_;
};

RationalSplit split(const Poly& p, const DistSetPtr& dist);

enum class SplitOp { Add, Sub, Mul };
RationalSplit split_arith(const RationalSplit& a, const RationalSplit& b, SplitOp op);

// Evaluates p (over target variables) at the per-variable images. images[i] may be
// absent for variables not occurring in p.
RationalSplit subst_pullback(const Poly& p, const std::vector<std::optional<RationalSplit>>& images,
                             const DistSetPtr& dist);

}  // namespace gcluster
