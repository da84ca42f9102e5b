#include "toricapprox/decide.hpp"

#include <numeric>
#include <sstream>

#include "toricapprox/arith.hpp"

namespace toric {

std::string to_string(Holds h) {
  switch (h) {
    case Holds::Yes: return "YES";
    case Holds::No: return "NO";
    case Holds::SufficientOnly: return "SUFFICIENT_ONLY";
    default: return "UNKNOWN";
  }
}

std::string to_string(Thinness t) {
  switch (t) {
    case Thinness::StrictlyDThin: return "STRICTLY_D_THIN";
    case Thinness::StablyThin: return "STABLY_THIN";
    case Thinness::NotThin: return "NOT_THIN";
    default: return "UNKNOWN";
  }
}

namespace {

std::string describe_index(const PairInvariants& inv) {
  return "|N:N_M| = " + inv.index.to_string() + ", N/N_M = " + inv.quotient.to_string();
}

// Darmon-type multiplicity of a per-ray condition.
ExtNat root_multiplicity(const DivisorCondition& c) {
  switch (c.kind) {
    case ConditionKind::Any: return 1;
    case ConditionKind::Integral: return ExtNat::infinity();
    case ConditionKind::Campana:
    case ConditionKind::Darmon:
    case ConditionKind::StrictDarmon: return c.m;
    default: throw InputError("root stack needs Campana/Darmon-type conditions, got " + c.to_string());
  }
}

ExtVec root_multiplicities(const ToricPair& pair) {
  if (pair.conditions.variant != MultiplicityVariant::Product)
    throw InputError("root stack needs a product multiplicity set");
  ExtVec m;
  for (auto& c : pair.conditions.per_ray) m.push_back(root_multiplicity(c));
  return m;
}

}  // namespace

Verdict decide_m_approx_from(const PairInvariants& inv, const RhoSpec& rho, Tri pic_fg, bool T_nonempty) {
  Verdict v;
  v.property = T_nonempty ? "M-approximation off nonempty T" : "M-approximation (T empty)";
  v.invariants = inv;
  v.reasons.push_back(describe_index(inv));
  if (!T_nonempty) {
    v.reasons.push_back(std::string("N_M^+ = N: ") + (inv.nm_plus_equals_n ? "true" : "false") +
                        " (cone full: " + (inv.cone_full ? "true" : "false") + ")");
    v.reasons.push_back("for T empty the criterion N_M^+ = N is an equivalence over every PF field");
    v.holds = inv.nm_plus_equals_n ? Holds::Yes : Holds::No;
    return v;
  }
  v.reasons.push_back("rho(K,C) = " + rho.to_string() + " (" + rho.note + ")");
  v.reasons.push_back("Pic(C) finitely generated: " + to_string(pic_fg));
  Tri member = Tri::No;
  if (inv.index.is_infinite()) {
    v.reasons.push_back("index infinite, so not in rho");
  } else {
    member = rho_membership(rho, *inv.index.value);
    v.reasons.push_back("|N:N_M| in rho: " + to_string(member));
  }
  if (member == Tri::Yes) {
    if (pic_fg == Tri::Yes) {
      v.holds = Holds::Yes;
    } else {
      v.holds = Holds::SufficientOnly;
      v.reasons.push_back("criterion holds; the converse is unavailable without finitely generated Pic(C)");
    }
  } else if (member == Tri::No && pic_fg == Tri::Yes) {
    v.holds = Holds::No;
  } else {
    v.holds = Holds::Unknown;
    v.reasons.push_back(member == Tri::Unknown ? "membership in rho not decidable from the field descriptor"
                                               : "criterion fails, but necessity needs finitely generated Pic(C)");
  }
  return v;
}

Verdict decide_m_approx(const ToricPair& pair, const FieldDescriptor& field, bool T_nonempty) {
  validate_pair(pair);
  const auto inv = compute_invariants(pair);
  const auto flags = default_flags(field);
  return decide_m_approx_from(inv, rho_of(field), flags.pic_C_finitely_generated, T_nonempty);
}

Verdict decide_strong_approx(const Fan& fan, const std::vector<std::size_t>& removed, const FieldDescriptor& field,
                             bool T_nonempty) {
  require_valid(fan);
  std::vector<DivisorCondition> conds(fan.ray_count(), DivisorCondition::any());
  for (auto i : removed) {
    if (i >= fan.ray_count()) throw InputError("removed divisor index " + std::to_string(i) + " out of range");
    conds[i] = DivisorCondition::integral();
  }
  ToricPair pair{fan, MultiplicitySet::product(conds)};
  Verdict v = decide_m_approx(pair, field, T_nonempty);
  v.property = T_nonempty ? "strong approximation off nonempty T" : "strong approximation (T empty)";
  const auto& inv = *v.invariants;
  const bool char0 = field.field_characteristic() == 0;
  if (inv.index.is_infinite()) {
    v.reasons.push_back("pi_1 of V over the algebraic closure is infinite (torus factor)");
  } else if (char0) {
    v.reasons.push_back("|pi_1(V)| = |N/N_M| = " + inv.index.to_string());
  }
  QuotientStructure torsion{inv.quotient.invariant_factors, 0};
  v.reasons.push_back("torsion of Pic(V) = " + torsion.to_string() + "; O(V) = K: " + (inv.cone_full ? "true" : "false"));
  if (field.kind == FieldKind::NumberField && T_nonempty) {
    v.reasons.push_back(std::string("Br(V)/Br_0(V) ") + (torsion.is_trivial() ? "vanishes" : "is nonzero") +
                        " (dual to the Pic torsion; derived remark, no Brauer group computed)");
  }
  return v;
}

Pi1Result pi1_root_stack(const Fan& fan, const ExtVec& m, std::uint64_t p) {
  require_valid(fan);
  if (!is_smooth(fan)) throw InputError("pi1_root_stack requires a smooth fan");
  if (m.size() != fan.ray_count()) throw InputError("pi1_root_stack: one multiplicity per ray required");
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].is_zero()) throw InputError("pi1_root_stack: multiplicities must be >= 1");
    if (m[i].is_inf()) continue;
    if (p != 0 && m[i].value() % p == 0)
      throw InputError("pi1_root_stack: m = " + std::to_string(m[i].value()) + " is not invertible in characteristic " +
                       std::to_string(p));
    IntVec g = fan.rays[i];
    for (auto& x : g) x *= static_cast<unsigned long>(m[i].value());
    gens.push_back(g);
  }
  auto q = quotient_invariants(lattice_from_generators(gens, fan.dim), fan.dim);
  Pi1Result r;
  r.characteristic = p;
  if (p == 0) {
    r.group = q;
    r.label = "profinite completion of N/N_M";
    return r;
  }
  r.prime_to_p = true;
  r.label = "prime-to-" + std::to_string(p) + " quotient of the completion of N/N_M";
  mpz_class pp = static_cast<unsigned long>(p);
  for (auto f : q.invariant_factors) {
    mpz_class g = f;
    mpz_remove(g.get_mpz_t(), f.get_mpz_t(), pp.get_mpz_t());
    if (g > 1) r.group.invariant_factors.push_back(g);
  }
  r.group.free_rank = q.free_rank;
  return r;
}

Pi1Result pi1_root_stack(const ToricPair& pair, std::uint64_t p) {
  validate_pair(pair);
  return pi1_root_stack(pair.fan, root_multiplicities(pair), p);
}

Verdict decide_integral_m_approx(const ToricPair& pair, const FieldDescriptor& field, bool T_nonempty) {
  Verdict v = decide_m_approx(pair, field, T_nonempty);
  v.property = T_nonempty ? "integral M-approximation off nonempty T" : "integral M-approximation (T empty)";
  v.reasons.insert(v.reasons.begin(), "M-approximation verdict: " + to_string(v.holds));
  if (!v.affirmative()) {
    v.reasons.push_back("M-approximation not established; integral verdict inherited");
    return v;
  }
  const bool closed = mred_in_closure_of_mfin(pair);
  v.reasons.push_back(std::string("M_red contained in closure of M_fin: ") + (closed ? "true" : "false"));
  if (!closed) v.holds = Holds::No;
  return v;
}

namespace {

// k^x/(k^x)^d finite for every d > 1, judged on the prime rules of the flags.
Tri all_unit_quotients_finite(const FieldFlags& flags, std::uint64_t characteristic) {
  Tri acc = Tri::Yes;
  std::vector<std::uint64_t> probe;
  for (std::uint64_t q = 2; q < 100; ++q)
    if (is_prime(mpz_class(static_cast<unsigned long>(q)))) probe.push_back(q);
  if (characteristic >= 100) probe.push_back(characteristic);
  for (auto q : probe) {
    Tri t = flags.unit_quotient_finite_at(q);
    if (t == Tri::No) return Tri::No;
    if (t == Tri::Unknown) acc = Tri::Unknown;
  }
  return acc;
}

std::vector<mpz_class> divisors_above_one(const mpz_class& n) {
  std::vector<mpz_class> ds{1};
  for (auto& pe : factor(n)) {
    std::size_t base = ds.size();
    mpz_class pk = 1;
    for (unsigned e = 1; e <= pe.second; ++e) {
      pk *= pe.first;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  ds.erase(ds.begin());
  return ds;
}

}  // namespace

ThinnessReport classify_thinness(const ToricPair& pair, const FieldDescriptor& field, const FieldFlags& flags,
                                 bool B_equals_C) {
  validate_pair(pair);
  ThinnessReport r;
  const auto inv = compute_invariants(pair);
  r.invariants = inv;
  r.reasons.push_back(describe_index(inv));
  const bool global = field.is_global();
  const bool function_field = field.kind != FieldKind::NumberField;
  const Tri pic = flags.pic_C_finitely_generated;
  r.reasons.push_back("Pic(C) finitely generated: " + to_string(pic));

  if (pic != Tri::Yes) {
    r.reasons.push_back("thinness criteria need finitely generated Pic(C)");
  } else if (inv.index.is_infinite()) {
    Tri units = global ? Tri::Yes : all_unit_quotients_finite(flags, field.field_characteristic());
    if (units == Tri::Yes) {
      r.classification = Thinness::StablyThin;
      r.reasons.push_back("N_M has infinite index: stably thin");
    } else {
      r.reasons.push_back("infinite index, but finiteness of k^x/(k^x)^d for all d is " + to_string(units));
    }
  } else if (function_field && B_equals_C && !inv.cone_full) {
    r.classification = Thinness::StablyThin;
    r.reasons.push_back("B = C over a function field and N_M^+ != N_M: stably thin");
  } else if (!inv.index.is_one()) {
    std::vector<mpz_class> confirmed;
    bool partial = false;
    for (auto& d : divisors_above_one(*inv.index.value)) {
      Tri t = global ? Tri::Yes : (d.fits_ulong_p() ? flags.unit_quotient_finite_at(d.get_ui()) : Tri::Unknown);
      if (t == Tri::Yes)
        confirmed.push_back(d);
      else
        partial = true;
    }
    if (!confirmed.empty()) {
      r.classification = Thinness::StrictlyDThin;
      r.d_list = confirmed;
      std::ostringstream os;
      os << "finite index > 1: strictly d-thin for d in {";
      for (std::size_t i = 0; i < confirmed.size(); ++i) os << (i ? "," : "") << confirmed[i].get_str();
      os << "}";
      if (partial) os << " (other divisors lack a finite k^x/(k^x)^d)";
      r.reasons.push_back(os.str());
    } else {
      r.reasons.push_back("no divisor d of the index with k^x/(k^x)^d known finite");
    }
  } else if (global) {
    r.classification = Thinness::NotThin;
    r.reasons.push_back("global field with N_M = N: M-approximation holds, so the M-Hilbert property holds");
  } else {
    r.reasons.push_back("index 1 over a non-global field: no thinness criterion applies");
  }

  if (flags.gm_B_finite == Tri::No) {
    r.zariski_dense = Tri::Yes;
    r.reasons.push_back("G_m(B) infinite: M-points are Zariski dense");
  } else if (flags.gm_B_finite == Tri::Yes && r.classification != Thinness::Unknown) {
    r.zariski_dense = tri(r.classification != Thinness::StablyThin);
    r.reasons.push_back("G_m(B) finite: not Zariski dense iff stably thin");
  }
  return r;
}

Verdict decide_hilbert(const ToricPair& pair, const FieldDescriptor& field, const FieldFlags& flags, bool B_equals_C) {
  auto t = classify_thinness(pair, field, flags, B_equals_C);
  Verdict v;
  v.property = "M-Hilbert property over B";
  v.invariants = t.invariants;
  v.reasons = t.reasons;
  v.reasons.insert(v.reasons.begin(), "thinness classification: " + to_string(t.classification));
  switch (t.classification) {
    case Thinness::NotThin: v.holds = Holds::Yes; break;
    case Thinness::StablyThin:
    case Thinness::StrictlyDThin: v.holds = Holds::No; break;
    default: v.holds = Holds::Unknown;
  }
  return v;
}

Verdict darmon_projective_closed_form(std::size_t n, const ExtVec& m, const RhoSpec& rho, bool T_nonempty) {
  if (m.size() != n || n < 2) throw InputError("closed form needs n >= 2 multiplicities");
  Verdict v;
  v.property = "Darmon M-approximation on P^" + std::to_string(n - 1) + " (closed form)";
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    if (m[i].is_zero()) throw InputError("Darmon multiplicities must be >= 1");
    for (std::size_t j = i + 1; j < n && ok; ++j) {
      std::uint64_t g = ext_gcd({m[i], m[j]});  // 0 encodes gcd(inf, inf)
      bool in = g != 0 && rho_contains(rho, mpz_class(static_cast<unsigned long>(g)));
      if (!in) {
        ok = false;
        v.reasons.push_back("gcd(m_" + std::to_string(i) + ", m_" + std::to_string(j) + ") = " +
                            (g == 0 ? std::string("inf") : std::to_string(g)) + " not in rho");
      }
    }
  }
  if (ok) v.reasons.push_back("all pairwise gcds lie in rho = " + rho.to_string());
  if (!T_nonempty) {
    bool finite = std::none_of(m.begin(), m.end(), [](const ExtNat& x) { return x.is_inf(); });
    bool coprime = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (ext_gcd({m[i], m[j]}) != 1) coprime = false;
    if (!finite) v.reasons.push_back("some m_i = inf");
    v.reasons.push_back(std::string("pairwise coprime: ") + (coprime ? "true" : "false"));
    ok = finite && coprime;
  }
  v.holds = ok ? Holds::Yes : Holds::No;
  return v;
}

bool sigma_max_sufficient(const ToricPair& pair, const RhoSpec& rho) {
  validate_pair(pair);
  if (!is_smooth(pair.fan) || !is_complete(pair.fan)) throw InputError("sigma_max_sufficient needs a smooth complete fan");
  const ExtVec m = root_multiplicities(pair);
  mpz_class g = 0;
  for (auto& cone : pair.fan.max_cones) {
    mpz_class prod = 1;
    bool inf = false;
    for (auto i : cone) {
      if (m[i].is_inf()) inf = true;
      else prod *= static_cast<unsigned long>(m[i].value());
    }
    if (!inf) g = gcd(g, prod);
  }
  return g != 0 && rho_contains(rho, g);
}

}  // namespace toric
