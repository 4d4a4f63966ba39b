#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gcluster/polyring.hpp"

namespace gcluster::modp {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

bool is_prime(std::uint64_t n);

class Field {
 public:
  explicit Field(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  // Throws DivisionByZero for a = 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_int(long long v) const noexcept;
  // Throws ModularError when the denominator vanishes mod p.
  std::uint64_t from_rational(const Rational& q) const;
  std::uint64_t random(std::mt19937_64& rng) const;

 private:
  std::uint64_t p_;
};

// Dense univariate polynomial, index = degree, no trailing zeros (zero poly is empty).
using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& f);
int degree(const UPoly& f);
UPoly mul(const Field& F, const UPoly& a, const UPoly& b);
UPoly sub(const Field& F, const UPoly& a, const UPoly& b);
// Returns remainder; quotient written if non-null.
UPoly rem(const Field& F, const UPoly& a, const UPoly& b, UPoly* quotient = nullptr);
UPoly monic(const Field& F, UPoly f);
UPoly gcd(const Field& F, UPoly a, UPoly b);
UPoly powmod(const Field& F, const UPoly& base, std::uint64_t e, const UPoly& modulus);
std::uint64_t eval(const Field& F, const UPoly& f, std::uint64_t x);
// Distinct roots in the field, sorted ascending.
std::vector<std::uint64_t> roots(const Field& F, const UPoly& f, std::mt19937_64& rng);
// Unique polynomial of degree < xs.size() through the points (xs distinct).
UPoly interpolate(const Field& F, const std::vector<std::uint64_t>& xs,
                  const std::vector<std::uint64_t>& ys);

// Rank of a dense matrix over the field (destroys nothing, copies).
std::size_t rank(const Field& F, std::vector<std::vector<std::uint64_t>> rows);

}  // namespace gcluster::modp
