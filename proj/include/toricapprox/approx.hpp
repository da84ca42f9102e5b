#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricapprox/points.hpp"

namespace toric {

// |f - target|_p <= p^{-digits} |target|_p, i.e. v_p(f/target - 1) >= digits.
struct LocalConstraint {
  mpz_class p;
  mpq_class target;
  unsigned digits = 1;
};

struct SquarefreeOptions {
  std::vector<mpz_class> avoid;        // outputs must be coprime to these
  std::uint64_t seed = 0;              // scan starts at t = seed + 1
  std::optional<std::uint64_t> scan_cap;  // default: scan_cap_from_env()
};

struct SquarefreeLift {
  mpq_class f;     // prefix * n
  mpq_class prefix;  // prod_p p^{v_p(target_p)}
  mpz_class n;     // squarefree, coprime to the constraint primes
};

// TORICAPPROX_SCAN_CAP, default 10^7.
std::uint64_t scan_cap_from_env();

// R lifts, pairwise coprime away from the constraint primes, scanning n = r + tM for
// t = 1, 2, ... (r the CRT residue in [0, M)).  Throws ComputationDefect when the
// scan cap is exhausted.
std::vector<SquarefreeLift> squarefree_approximate(const std::vector<LocalConstraint>& constraints, std::size_t R,
                                                   const SquarefreeOptions& opts = {});

struct GammaData {
  std::vector<std::vector<std::uint64_t>> generators;  // l multiplicity vectors over the rays
  IntMatrix gamma;          // d x l, column s = phi(m_s)
  IntMatrix right_inverse;  // l x d, gamma * right_inverse = 1
};

// Product multiplicity sets with N_M = N only.
GammaData build_gamma(const ToricPair& pair);

// c_s = prod_j a_j^{R_{s,j}} with a_j the torus characters of the target.
std::vector<mpq_class> solve_local_exponents(const ToricPair& pair, const GammaData& g, const mpz_class& p,
                                             const CoxPoint& target);
// (prod_s c_s^{m_{s,1}} : ... : prod_s c_s^{m_{s,n}})
CoxPoint recombine(const GammaData& g, const std::vector<mpq_class>& c);

struct PrimeTarget {
  CoxPoint point;
  unsigned digits = 1;
};
using TargetMap = std::map<mpz_class, PrimeTarget>;

struct PrimeCloseness {
  mpz_class p;
  unsigned requested = 0;
  std::vector<ExtNat> achieved;  // per torus character
  bool ok = false;
};

struct ApproxCertificate {
  CoxPoint point;
  std::vector<PrimeCloseness> closeness;
  std::vector<std::pair<mpz_class, ExtVec>> multiplicities;  // every support prime of the point
  MPointCheck m_point;                                        // away from excluded
  std::vector<mpz_class> excluded;                            // S'
  unsigned attempts = 0;
  bool verified = false;
};

// Independent recheck through the points module.
ApproxCertificate verify_approximation(const ToricPair& pair, const TargetMap& targets, const CoxPoint& point);

struct ApproxOptions {
  std::uint64_t seed = 0;
  unsigned max_retries = 4;
  std::optional<std::uint64_t> scan_cap;
};

// Throws ComputationDefect ("retries exhausted") rather than return an unverified point.
ApproxCertificate m_point_approximate(const ToricPair& pair, const TargetMap& targets, const ApproxOptions& opts = {});

}  // namespace toric
