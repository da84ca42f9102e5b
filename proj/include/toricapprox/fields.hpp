#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toricapprox/core.hpp"

namespace toric {

enum class Tri { No, Yes, Unknown };
std::string to_string(Tri t);
Tri tri(bool b);

enum class FieldKind { NumberField, GlobalFunctionField, FunctionField };
enum class BaseClass { SeparablyClosed, RealClosed, Finite, HilbertianChar0, PClosed, HereditarilyEuclidean, Other };
// Only what the unit-group rules need.
enum class NumberFieldClass { Rational, ImaginaryQuadratic, Other };

struct FieldDescriptor {
  FieldKind kind = FieldKind::NumberField;
  NumberFieldClass number_field = NumberFieldClass::Rational;
  std::uint64_t q = 0;                        // GlobalFunctionField
  BaseClass base = BaseClass::Other;          // FunctionField
  std::uint64_t characteristic = 0;           // FunctionField
  std::vector<std::uint64_t> closed_primes;   // PClosed
  std::optional<bool> curve_has_real_point;   // RealClosed / HereditarilyEuclidean
  std::optional<bool> pic_fg_override;        // user knowledge about Pic(C)

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor number(NumberFieldClass c) {
    FieldDescriptor f;
    f.number_field = c;
    return f;
  }
  static FieldDescriptor global_function_field(std::uint64_t q) {
    FieldDescriptor f;
    f.kind = FieldKind::GlobalFunctionField;
    f.q = q;
    return f;
  }
  static FieldDescriptor function_field(BaseClass base, std::uint64_t characteristic,
                                        std::optional<bool> real_point = std::nullopt) {
    FieldDescriptor f;
    f.kind = FieldKind::FunctionField;
    f.base = base;
    f.characteristic = characteristic;
    f.curve_has_real_point = real_point;
    return f;
  }

  bool is_global() const { return kind != FieldKind::FunctionField || base == BaseClass::Finite; }
  std::uint64_t field_characteristic() const;
  std::string to_string() const;
};

// Throws InputError (q not a prime power, characteristic inconsistent with base class,
// missing curve flag for real closed bases).
void validate_field(const FieldDescriptor& f);

enum class RhoKind { All, None, AllExcept, Exactly };

// Monoid generated by the allowed primes.  `exact` is false when primes outside the
// generating set might still belong to the monoid (so a negative membership answer
// is only "not known to belong").
struct RhoSpec {
  RhoKind kind = RhoKind::None;
  std::uint64_t excluded = 0;            // AllExcept
  std::vector<std::uint64_t> primes;     // Exactly
  bool exact = true;
  std::string note;

  static RhoSpec trivial(std::string note = "only 1") {
    RhoSpec r;
    r.note = std::move(note);
    return r;
  }
  bool allows_prime(const mpz_class& p) const;
  bool is_trivial() const { return kind == RhoKind::None || (kind == RhoKind::Exactly && primes.empty()); }
  std::string to_string() const;
};

RhoSpec rho_of(const FieldDescriptor& field);
bool rho_contains(const RhoSpec& spec, const mpz_class& n);
// Yes / No, or Unknown when n is outside the known generators of a non-exact spec.
Tri rho_membership(const RhoSpec& spec, const mpz_class& n);

struct FieldFlags {
  Tri pic_C_finitely_generated = Tri::Unknown;
  Tri gm_B_finite = Tri::Unknown;
  std::function<Tri(std::uint64_t)> unit_quotient_finite;  // k^x / (k^x)^d finite
  std::vector<std::string> notes;

  Tri unit_quotient_finite_at(std::uint64_t d) const {
    return unit_quotient_finite ? unit_quotient_finite(d) : Tri::Unknown;
  }
};

// excluded_place_count: number of closed points of C outside B (finite places removed
// from Spec O_K in the number field case).
FieldFlags default_flags(const FieldDescriptor& field, std::size_t excluded_place_count = 0);

}  // namespace toric
