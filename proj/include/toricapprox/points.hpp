#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricapprox/conditions.hpp"

namespace toric {

// Cox coordinates: one rational per ray.
struct CoxPoint {
  std::vector<mpq_class> coords;

  static CoxPoint from_ints(std::initializer_list<long> xs);
  static CoxPoint from_ints(const std::vector<mpz_class>& xs);
  bool has_zero() const;
  std::string to_string() const;
};

bool is_projective_space_fan(const Fan& f);

// Coprime integer representative with first nonzero coordinate positive (P^n only).
std::vector<mpz_class> normalize_projective(const CoxPoint& p);

// Primes dividing some numerator or denominator of a nonzero coordinate.
std::vector<mpz_class> support_primes(const CoxPoint& p);

// Locates valuation vectors in the maximal cones of a smooth complete fan.
class MultiplicityMap {
 public:
  explicit MultiplicityMap(const Fan& fan);
  const Fan& fan() const { return fan_; }
  bool projective() const { return projective_; }
  // Multiplicity vector of the v-integral representative of a point with
  // coordinate valuations w.
  ExtVec from_valuations(const std::vector<long>& w) const;
  // Throws InputError for zero coordinates outside P^n.
  ExtVec mult(const mpz_class& p, const CoxPoint& P) const;

 private:
  Fan fan_;
  bool projective_ = false;
  std::vector<std::vector<std::vector<long>>> inverses_;  // per max cone: dim x dim
};

ExtVec mult_at_prime(const Fan& fan, const mpz_class& p, const CoxPoint& P);
// sum_i v_p(coord_i) n_i; zero coordinates rejected.
IntVec phi_v(const Fan& fan, const mpz_class& p, const CoxPoint& P);

struct MPointCheck {
  bool ok = true;
  std::optional<mpz_class> failing_prime;
  ExtVec failing_vector;
  std::vector<std::pair<mpz_class, ExtVec>> per_prime;  // every checked support prime
  std::string to_string() const;
};

MPointCheck is_m_point(const ToricPair& pair, const CoxPoint& P, const std::vector<mpz_class>& excluded = {});
MPointCheck is_m_point(const ToricPair& pair, const MultiplicityMap& map, const CoxPoint& P,
                       const std::vector<mpz_class>& excluded = {});

// Direct predicates on integers.  m = infinity: only -1, 0, 1 are infinity-full,
// and |n| in {0, 1} for infinity-th powers.
bool is_m_full(const mpz_class& n, ExtNat m);
bool is_perfect_power(const mpz_class& n, ExtNat m);

// chi_j = prod_i coord_i^{<e_j, n_i>} for the standard basis e_j of M.
std::vector<mpq_class> torus_characters(const Fan& fan, const CoxPoint& P);

struct Closeness {
  bool ok = false;
  std::vector<ExtNat> digits;  // v_p(chi_j(Q)/chi_j(target) - 1) per character
};
// Every torus character of Q agrees with the target's to at least k p-adic digits.
Closeness p_adic_close(const Fan& fan, const CoxPoint& Q, const CoxPoint& target, const mpz_class& p, unsigned k);

}  // namespace toric
