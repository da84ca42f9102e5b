#include "toricapprox/fields.hpp"

#include <algorithm>
#include <sstream>

#include "toricapprox/arith.hpp"

namespace toric {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "true";
    case Tri::No: return "false";
    default: return "unknown";
  }
}

Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

namespace {

const char* base_name(BaseClass b) {
  switch (b) {
    case BaseClass::SeparablyClosed: return "separably_closed";
    case BaseClass::RealClosed: return "real_closed";
    case BaseClass::Finite: return "finite";
    case BaseClass::HilbertianChar0: return "hilbertian_char0";
    case BaseClass::PClosed: return "p_closed";
    case BaseClass::HereditarilyEuclidean: return "hereditarily_euclidean";
    default: return "other";
  }
}

bool is_prime_u64(std::uint64_t p) { return p >= 2 && is_prime(mpz_class(static_cast<unsigned long>(p))); }

// d's prime factors, d >= 1.
std::vector<std::uint64_t> primes_of(std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (auto& pe : factor(mpz_class(static_cast<unsigned long>(d)))) out.push_back(pe.first.get_ui());
  return out;
}

}  // namespace

std::uint64_t FieldDescriptor::field_characteristic() const {
  switch (kind) {
    case FieldKind::NumberField: return 0;
    case FieldKind::GlobalFunctionField: return q ? primes_of(q).front() : 0;
    default: return characteristic;
  }
}

std::string FieldDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case FieldKind::NumberField:
      os << "number field ("
         << (number_field == NumberFieldClass::Rational            ? "Q"
             : number_field == NumberFieldClass::ImaginaryQuadratic ? "imaginary quadratic"
                                                                    : "other")
         << ")";
      break;
    case FieldKind::GlobalFunctionField: os << "global function field over F_" << q; break;
    case FieldKind::FunctionField:
      os << "function field over " << base_name(base) << " base, char " << characteristic;
      if (base == BaseClass::PClosed) {
        os << ", closed at {";
        for (std::size_t i = 0; i < closed_primes.size(); ++i) os << (i ? "," : "") << closed_primes[i];
        os << "}";
      }
      if (curve_has_real_point) os << ", curve has real point: " << (*curve_has_real_point ? "yes" : "no");
      break;
  }
  return os.str();
}

void validate_field(const FieldDescriptor& f) {
  if (f.kind == FieldKind::GlobalFunctionField) {
    if (f.q < 2) throw InputError("global function field: q must be a prime power, got " + std::to_string(f.q));
    if (primes_of(f.q).size() != 1) throw InputError("global function field: q = " + std::to_string(f.q) + " is not a prime power");
    return;
  }
  if (f.kind != FieldKind::FunctionField) return;
  const std::uint64_t p = f.characteristic;
  if (p != 0 && !is_prime_u64(p)) throw InputError("characteristic must be 0 or prime, got " + std::to_string(p));
  switch (f.base) {
    case BaseClass::RealClosed:
    case BaseClass::HereditarilyEuclidean:
    case BaseClass::HilbertianChar0:
      if (p != 0) throw InputError(std::string(base_name(f.base)) + " base requires characteristic 0");
      break;
    case BaseClass::Finite:
      if (p == 0) throw InputError("finite base requires positive characteristic");
      break;
    default: break;
  }
  if (f.base == BaseClass::RealClosed && !f.curve_has_real_point)
    throw InputError("real closed base requires the curve_has_real_point flag");
  if (f.base == BaseClass::PClosed)
    for (auto q : f.closed_primes)
      if (!is_prime_u64(q)) throw InputError("p_closed: " + std::to_string(q) + " is not prime");
}

bool RhoSpec::allows_prime(const mpz_class& p) const {
  switch (kind) {
    case RhoKind::All: return true;
    case RhoKind::None: return false;
    case RhoKind::AllExcept: return p != excluded;
    case RhoKind::Exactly:
      return std::any_of(primes.begin(), primes.end(), [&](std::uint64_t q) { return p == static_cast<unsigned long>(q); });
  }
  return false;
}

std::string RhoSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case RhoKind::All: os << "ALL"; break;
    case RhoKind::None: os << "NONE"; break;
    case RhoKind::AllExcept: os << "ALL_EXCEPT(" << excluded << ")"; break;
    case RhoKind::Exactly:
      os << "EXACTLY(";
      for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
      os << ")";
      break;
  }
  if (!exact) os << " [lower bound]";
  return os.str();
}

RhoSpec rho_of(const FieldDescriptor& field) {
  validate_field(field);
  RhoSpec r;
  if (field.kind == FieldKind::NumberField) {
    r.note = "number field: residue fields of size q = 1 mod p exist for every p, so only 1";
    return r;
  }
  if (field.kind == FieldKind::GlobalFunctionField) {
    r.note = "global function field: finite residue fields, so only 1";
    return r;
  }
  const std::uint64_t p = field.characteristic;
  switch (field.base) {
    case BaseClass::SeparablyClosed:
      if (p == 0) {
        r.kind = RhoKind::All;
        r.note = "separably closed base of characteristic 0 is p-closed for every p";
      } else {
        r.kind = RhoKind::AllExcept;
        r.excluded = p;
        r.note = "separably closed base is p-closed for every p != char = " + std::to_string(p);
      }
      return r;
    case BaseClass::RealClosed:
      if (*field.curve_has_real_point) {
        r.kind = RhoKind::AllExcept;
        r.excluded = 2;
        r.note = "real closed base is p-closed for odd p; C has real points so 2 is excluded";
      } else {
        r.kind = RhoKind::All;
        r.note = "real closed base is p-closed for odd p; 2 admitted since C has no real points";
      }
      return r;
    case BaseClass::Finite:
      r.note = "finite base has extensions of every degree, so only 1";
      return r;
    case BaseClass::HilbertianChar0:
      r.note = "Hilbertian base has extensions of every prime degree, so only 1";
      return r;
    case BaseClass::PClosed:
      r.kind = RhoKind::Exactly;
      for (auto q : field.closed_primes)
        if (q != p) r.primes.push_back(q);
      std::sort(r.primes.begin(), r.primes.end());
      r.primes.erase(std::unique(r.primes.begin(), r.primes.end()), r.primes.end());
      r.note = "declared p-closed primes minus the characteristic";
      return r;
    case BaseClass::HereditarilyEuclidean:
      r.exact = false;
      if (field.curve_has_real_point.value_or(true)) {
        r.note = "hereditarily Euclidean base, C may have real points: 2 excluded; odd-prime closedness not modelled";
      } else {
        r.kind = RhoKind::Exactly;
        r.primes = {2};
        r.note = "hereditarily Euclidean base and no real points: 2 admitted; odd-prime closedness not modelled";
      }
      return r;
    default:
      r.exact = false;
      r.note = "conservative: no rule for this base class, only 1 is certified";
      return r;
  }
}

bool rho_contains(const RhoSpec& spec, const mpz_class& n) {
  if (n < 1) throw InputError("rho_contains: n must be positive");
  if (n == 1) return true;
  if (spec.kind == RhoKind::All) return true;
  if (spec.kind == RhoKind::None) return false;
  for (auto& p : prime_divisors(n))
    if (!spec.allows_prime(p)) return false;
  return true;
}

Tri rho_membership(const RhoSpec& spec, const mpz_class& n) {
  if (rho_contains(spec, n)) return Tri::Yes;
  return spec.exact ? Tri::No : Tri::Unknown;
}

FieldFlags default_flags(const FieldDescriptor& field, std::size_t excluded) {
  validate_field(field);
  FieldFlags f;
  const bool global = field.is_global();

  if (field.kind == FieldKind::NumberField) {
    f.pic_C_finitely_generated = Tri::Yes;
    f.notes.push_back("Pic of Spec O_K is the finite class group");
    const bool small = field.number_field != NumberFieldClass::Other;
    f.gm_B_finite = tri(small && excluded == 0);
    f.notes.push_back(small && excluded == 0 ? "units of O_K are finite (Q or imaginary quadratic)"
                                             : "unit group of the S-integers is infinite");
  } else if (global) {
    f.pic_C_finitely_generated = Tri::Yes;
    f.notes.push_back("Pic(C) of a curve over a finite field is finitely generated");
    f.gm_B_finite = tri(excluded <= 1);
    f.notes.push_back(excluded <= 1 ? "at most one place removed: G_m(B) = constants, finite"
                                    : "two or more places removed: G_m(B) infinite");
  } else {
    f.pic_C_finitely_generated = Tri::Unknown;
    f.notes.push_back("Pic(C) depends on the curve over an infinite base; unknown");
    f.gm_B_finite = Tri::No;
    f.notes.push_back("infinite constant field lies in G_m(B)");
  }
  if (field.pic_fg_override) {
    f.pic_C_finitely_generated = tri(*field.pic_fg_override);
    f.notes.push_back("Pic(C) finite generation set by descriptor override");
  }

  if (global) {
    f.unit_quotient_finite = [](std::uint64_t) { return Tri::Yes; };
    return f;
  }
  const BaseClass base = field.base;
  const std::uint64_t p = field.characteristic;
  const std::vector<std::uint64_t> closed = field.closed_primes;
  f.unit_quotient_finite = [base, p, closed](std::uint64_t d) {
    if (d < 1) return Tri::Unknown;
    if (d == 1) return Tri::Yes;
    const auto ps = primes_of(d);
    auto all = [&](auto pred) { return std::all_of(ps.begin(), ps.end(), pred); };
    switch (base) {
      case BaseClass::SeparablyClosed:
        // d-closed when char does not divide d
        return all([&](std::uint64_t q) { return q != p; }) ? Tri::Yes : Tri::Unknown;
      case BaseClass::RealClosed: return Tri::Yes;
      case BaseClass::HilbertianChar0: return Tri::No;
      case BaseClass::PClosed:
        return all([&](std::uint64_t q) { return q != p && std::find(closed.begin(), closed.end(), q) != closed.end(); })
                   ? Tri::Yes
                   : Tri::Unknown;
      case BaseClass::HereditarilyEuclidean:
        return all([](std::uint64_t q) { return q == 2; }) ? Tri::Yes : Tri::Unknown;
      default: return Tri::Unknown;
    }
  };
  return f;
}

}  // namespace toric
