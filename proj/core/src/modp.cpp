#include "gcluster/modp.hpp"

#include <algorithm>

namespace gcluster::modp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field::Field(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const noexcept {
  std::uint64_t s = a + b;
  return (s >= p_ || s < a) ? s - p_ : s;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const noexcept {
  return a >= b ? a - b : a + (p_ - b);
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const noexcept { return mulmod(a, b, p_); }

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const noexcept { return powmod_u(a, e, p_); }

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero in prime field");
  return powmod_u(a, p_ - 2, p_);
}

std::uint64_t Field::from_int(long long v) const noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % p_;
  return p_ - 1 - r;
}

std::uint64_t Field::from_rational(const Rational& q) const {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  if (den == 0)
    throw ModularError("denominator of " + q.get_str() + " vanishes modulo " + std::to_string(p_) +
                       "; retry with another prime");
  return mul(num, inv(den));
}

std::uint64_t Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return dist(rng);
}

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly mul(const Field& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  trim(out);
  return out;
}

UPoly sub(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

UPoly rem(const Field& F, const UPoly& a, const UPoly& b, UPoly* quotient) {
  if (b.empty()) throw DivisionByZero("univariate division by zero");
  UPoly r = a;
  trim(r);
  std::uint64_t lead_inv = F.inv(b.back());
  UPoly q;
  if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
  while (r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    std::uint64_t c = F.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    trim(r);
  }
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return r;
}

UPoly monic(const Field& F, UPoly f) {
  trim(f);
  if (f.empty()) return f;
  std::uint64_t inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

UPoly gcd(const Field& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, std::move(a));
}

UPoly powmod(const Field& F, const UPoly& base, std::uint64_t e, const UPoly& modulus) {
  UPoly result{1};
  result = rem(F, result, modulus);
  UPoly b = rem(F, base, modulus);
  while (e > 0) {
    if (e & 1) result = rem(F, mul(F, result, b), modulus);
    e >>= 1;
    if (e > 0) b = rem(F, mul(F, b, b), modulus);
  }
  return result;
}

std::uint64_t eval(const Field& F, const UPoly& f, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

namespace {

void split_roots(const Field& F, const UPoly& g, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(F.neg(F.mul(g[0], F.inv(g[1]))));
    return;
  }
  if (F.p() == 2) {
    for (std::uint64_t x = 0; x < 2; ++x)
      if (eval(F, g, x) == 0) out.push_back(x);
    return;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    UPoly shifted{F.random(rng), 1};
    UPoly h = powmod(F, shifted, (F.p() - 1) / 2, g);
    h = sub(F, h, UPoly{1});
    UPoly f1 = gcd(F, g, h);
    int d1 = degree(f1);
    if (d1 > 0 && d1 < d) {
      UPoly f2;
      rem(F, g, f1, &f2);
      split_roots(F, f1, rng, out);
      split_roots(F, f2, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> roots(const Field& F, const UPoly& f_in, std::mt19937_64& rng) {
  UPoly f = monic(F, f_in);
  if (degree(f) <= 0) return {};
  UPoly x{0, 1};
  UPoly xp = powmod(F, x, F.p(), f);
  UPoly g = gcd(F, f, sub(F, xp, x));
  std::vector<std::uint64_t> out;
  split_roots(F, g, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UPoly interpolate(const Field& F, const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys) {
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<std::uint64_t> coef(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = F.mul(F.sub(coef[i], coef[i - 1]), F.inv(F.sub(xs[i], xs[i - j])));
      if (i == j) break;
    }
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    // result = result*(x - xs[i]) + coef[i]
    UPoly next(result.size() + 1, 0);
    for (std::size_t k = 0; k < result.size(); ++k) {
      next[k + 1] = F.add(next[k + 1], result[k]);
      next[k] = F.sub(next[k], F.mul(result[k], xs[i]));
    }
    next[0] = F.add(next[0], coef[i]);
    trim(next);
    result = std::move(next);
  }
  return result;
}

std::size_t rank(const Field& F, std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    std::uint64_t inv = F.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      std::uint64_t f = F.mul(rows[i][c], inv);
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

}  // namespace gcluster::modp
