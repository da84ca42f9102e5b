#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricapprox/fan.hpp"

namespace toric {

enum class ConditionKind { Any, Integral, Campana, Darmon, StrictDarmon, Squarefree, FiniteSet };

struct DivisorCondition {
  ConditionKind kind = ConditionKind::Any;
  ExtNat m = 1;                        // Campana / Darmon / StrictDarmon
  std::vector<std::uint64_t> values;   // FiniteSet (0 always admitted)
  bool allow_infinity = false;         // FiniteSet

  static DivisorCondition make(ConditionKind k, ExtNat m = 1) {
    DivisorCondition c;
    c.kind = k;
    c.m = m;
    return c;
  }
  static DivisorCondition any() { return {}; }
  static DivisorCondition integral() { return make(ConditionKind::Integral); }
  static DivisorCondition campana(ExtNat m) { return make(ConditionKind::Campana, m); }
  static DivisorCondition darmon(ExtNat m) { return make(ConditionKind::Darmon, m); }
  static DivisorCondition strict_darmon(ExtNat m) { return make(ConditionKind::StrictDarmon, m); }
  static DivisorCondition squarefree() { return make(ConditionKind::Squarefree); }
  static DivisorCondition finite_set(std::vector<std::uint64_t> vals, bool allow_inf) {
    DivisorCondition c = make(ConditionKind::FiniteSet);
    c.values = std::move(vals);
    c.allow_infinity = allow_inf;
    return c;
  }
  std::string to_string() const;
};

bool admits(const DivisorCondition& cond, ExtNat w);
// Finite nonzero values whose multiples of n_i generate the condition's part of N_M.
std::vector<std::uint64_t> finite_slice(const DivisorCondition& cond);

enum class MultiplicityVariant { Product, WeakCampana, Custom, UnionOfAxes };

struct MultiplicitySet {
  MultiplicityVariant variant = MultiplicityVariant::Product;
  std::vector<DivisorCondition> per_ray;  // Product
  ExtVec weights;                         // WeakCampana
  std::vector<ExtVec> vectors;            // Custom
  std::size_t axes = 0;                   // UnionOfAxes: number of rays

  static MultiplicitySet product(std::vector<DivisorCondition> conds);
  static MultiplicitySet weak_campana(ExtVec m);
  static MultiplicitySet custom(std::vector<ExtVec> vectors);
  static MultiplicitySet union_of_axes(std::size_t n);
  static MultiplicitySet campana(const ExtVec& m);
  static MultiplicitySet darmon(const ExtVec& m);
  static MultiplicitySet uniform(std::size_t n, const DivisorCondition& c);

  std::size_t arity() const;
  std::string to_string() const;
};

bool contains(const MultiplicitySet& set, const ExtVec& w);

struct ToricPair {
  Fan fan;
  MultiplicitySet conditions;
};

// Throws InputError on dimension mismatches or malformed custom lists.
void validate_pair(const ToricPair& pair);

bool support_is_conical(const ToricPair& pair, const std::vector<std::size_t>& support);

struct NMGenerators {
  std::vector<IntVec> lattice_gens;
  std::vector<IntVec> cone_gens;
};
NMGenerators nm_generators(const ToricPair& pair);

struct PairInvariants {
  std::size_t dim = 0;
  LatticeBasis nm_basis;
  LatticeIndex index;
  QuotientStructure quotient;
  std::vector<IntVec> cone_generators;
  bool cone_full = false;
  bool nm_plus_equals_n = false;
  std::optional<mpz_class> enumeration_bound;  // W of the singular path
  std::vector<std::string> notes;
};

PairInvariants invariants_from_generators(const NMGenerators& gens, std::size_t dim);
// Smooth fans only.
PairInvariants pair_invariants(const ToricPair& pair);

class NotPrincipal : public ComputationDefect {
 public:
  using ComputationDefect::ComputationDefect;
};

// Invariants of the pulled-back pair along a smooth refinement.  `coefficient_override`
// is target rays x source rays.  `bound_override` replaces the default entry bound W.
PairInvariants nm_singular(const ToricPair& pair, const RefinementMap& refinement,
                           const std::optional<IntMatrix>& coefficient_override = std::nullopt,
                           const std::optional<std::uint64_t>& bound_override = std::nullopt);
IntMatrix pullback_coefficients(const RefinementMap& refinement);

// Smooth fans directly; singular 2-D fans via resolve_2d + nm_singular.
PairInvariants compute_invariants(const ToricPair& pair);

bool mred_in_closure_of_mfin(const ToricPair& pair);

}  // namespace toric
