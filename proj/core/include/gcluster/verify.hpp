#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcluster/cluster.hpp"
#include "gcluster/modp.hpp"
#include "gcluster/pullback.hpp"

namespace gcluster {

enum class Verdict { kIndependent, kDependentSuspected, kInconclusive };
std::string to_string(Verdict v);

struct IndependenceReport {
  std::size_t k = 0;
  std::size_t family_size = 0;
  std::size_t rank = 0;
  std::size_t samples = 0;
  std::uint64_t prime = 0;
  Verdict verdict = Verdict::kInconclusive;
};

struct IndependenceOptions {
  int trials = 16;
  std::uint64_t prime = modp::kDefaultPrime;
  std::uint64_t rng_seed = 1;
};

// Jacobian rank of (family, q) at random points of {q = 0} over a prime field.
IndependenceReport independence_on_hypersurface(const std::vector<Poly>& family, const Poly& q,
                                                const IndependenceOptions& opt = {});
// Family: cluster polynomials of every vertex except the one carrying q_k.
IndependenceReport independence_for_pullback(const PullbackSeed& ps, std::size_t k,
                                             const IndependenceOptions& opt = {});

struct CoprimePair {
  int a;
  int b;
  bool coprime;
};

struct CoprimeReport {
  std::vector<CoprimePair> pairs;
  bool coprime() const;
};

// Pairwise coprimality of polynomials by gcds of restrictions to random lines.
CoprimeReport coprime_check(const std::vector<Poly>& polys, int lines = 8, const IndependenceOptions& opt = {});
// Exchange polynomials as formal polynomials in f1..fs (nonconstant string coefficients become p<m>_<r>).
std::vector<Poly> formal_exchange_polynomials(const Seed& seed);
CoprimeReport coprime_seed_check(const Seed& seed, int lines = 8, const IndependenceOptions& opt = {});

struct CertificateTerm {
  Rational coeff;
  std::vector<int> exponents;
};

// target = sum coeff * prod f_l^e over the seed's cluster variables.
struct LaurentCertificate {
  Seed seed;
  Poly target;
  std::vector<CertificateTerm> terms;
  // Reject negative exponents on frozen variables.
  bool frozen_nonneg = true;
};

bool verify_laurent_certificate(const LaurentCertificate& cert);

enum class Provenance { kPaper, kDerived, kTrivial };
std::string to_string(Provenance p);

struct AssertionResult {
  std::string description;
  Provenance tag;
  bool pass;
  std::string detail;
};

struct FixtureReport {
  std::string name;
  std::vector<AssertionResult> assertions;
  bool pass() const;
};

// Throws LookupError for unknown names.
FixtureReport run_fixture(const std::string& name);

}  // namespace gcluster
