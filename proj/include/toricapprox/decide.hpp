#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricapprox/conditions.hpp"
#include "toricapprox/fields.hpp"

namespace toric {

enum class Holds { Yes, No, SufficientOnly, Unknown };
std::string to_string(Holds h);

struct Verdict {
  std::string property;
  Holds holds = Holds::Unknown;
  std::vector<std::string> reasons;
  std::optional<PairInvariants> invariants;

  // Yes, or the one-directional criterion certifies the property.
  bool affirmative() const { return holds == Holds::Yes || holds == Holds::SufficientOnly; }
};

enum class Thinness { StrictlyDThin, StablyThin, NotThin, Unknown };
std::string to_string(Thinness t);

struct ThinnessReport {
  Thinness classification = Thinness::Unknown;
  std::vector<mpz_class> d_list;  // StrictlyDThin
  Tri zariski_dense = Tri::Unknown;
  std::vector<std::string> reasons;
  std::optional<PairInvariants> invariants;
};

// Core decision from precomputed invariants.
Verdict decide_m_approx_from(const PairInvariants& inv, const RhoSpec& rho, Tri pic_fg, bool T_nonempty);
Verdict decide_m_approx(const ToricPair& pair, const FieldDescriptor& field, bool T_nonempty);

// V = X minus the removed divisors.
Verdict decide_strong_approx(const Fan& fan, const std::vector<std::size_t>& removed, const FieldDescriptor& field,
                             bool T_nonempty);

struct Pi1Result {
  QuotientStructure group;
  std::uint64_t characteristic = 0;
  bool prime_to_p = false;  // characteristic > 0: only the prime-to-p quotient
  std::string label;
};
// Multiplicities per ray; INTEGRAL rays count as m = infinity, ANY as m = 1.
Pi1Result pi1_root_stack(const ToricPair& pair, std::uint64_t characteristic = 0);
Pi1Result pi1_root_stack(const Fan& fan, const ExtVec& m, std::uint64_t characteristic = 0);

Verdict decide_integral_m_approx(const ToricPair& pair, const FieldDescriptor& field, bool T_nonempty);

ThinnessReport classify_thinness(const ToricPair& pair, const FieldDescriptor& field, const FieldFlags& flags,
                                 bool B_equals_C);
// Hilbert property over B: holds iff the integral points are not thin.
Verdict decide_hilbert(const ToricPair& pair, const FieldDescriptor& field, const FieldFlags& flags, bool B_equals_C);

Verdict darmon_projective_closed_form(std::size_t n, const ExtVec& m, const RhoSpec& rho, bool T_nonempty);

// gcd over maximal cones of the products of Darmon multiplicities lies in rho.
bool sigma_max_sufficient(const ToricPair& pair, const RhoSpec& rho);

}  // namespace toric
