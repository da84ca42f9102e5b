#include "toricapprox/conditions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toric {

namespace {

const char* kind_name(ConditionKind k) {
  switch (k) {
    case ConditionKind::Any: return "any";
    case ConditionKind::Integral: return "integral";
    case ConditionKind::Campana: return "campana";
    case ConditionKind::Darmon: return "darmon";
    case ConditionKind::StrictDarmon: return "strict_darmon";
    case ConditionKind::Squarefree: return "squarefree";
    case ConditionKind::FiniteSet: return "finite_set";
  }
  return "?";
}

IntVec scaled(const IntVec& v, const mpz_class& c) {
  IntVec out = v;
  for (auto& x : out) x *= c;
  return out;
}

IntVec primitive_direction(IntVec v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Every vector in {0..bound}^cone (zero elsewhere), for each maximal cone.
template <class F>
void for_each_cone_supported(const Fan& f, std::uint64_t bound, F&& visit) {
  std::set<std::vector<std::uint64_t>> seen;
  const std::size_t n = f.rays.size();
  for (const auto& cone : f.max_cones) {
    std::vector<std::uint64_t> w(n, 0);
    for (;;) {
      if (seen.insert(w).second) visit(w);
      std::size_t pos = 0;
      while (pos < cone.size() && w[cone[pos]] == bound) w[cone[pos++]] = 0;
      if (pos == cone.size()) break;
      ++w[cone[pos]];
    }
  }
}

ExtVec to_ext(const std::vector<std::uint64_t>& w) { return ExtVec(w.begin(), w.end()); }

}  // namespace

std::string DivisorCondition::to_string() const {
  std::string s = kind_name(kind);
  if (kind == ConditionKind::Campana || kind == ConditionKind::Darmon || kind == ConditionKind::StrictDarmon)
    s += "(" + m.to_string() + ")";
  if (kind == ConditionKind::FiniteSet) {
    s += "{";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
    s += allow_infinity ? ",inf}" : "}";
  }
  return s;
}

bool admits(const DivisorCondition& c, ExtNat w) {
  if (w.is_zero()) return true;
  switch (c.kind) {
    case ConditionKind::Any: return true;
    case ConditionKind::Integral: return false;
    case ConditionKind::Campana: return c.m <= w;
    case ConditionKind::Darmon:
      if (w.is_inf()) return true;
      return !c.m.is_inf() && w.value() % c.m.value() == 0;
    case ConditionKind::StrictDarmon:
      return !w.is_inf() && !c.m.is_inf() && w.value() % c.m.value() == 0;
    case ConditionKind::Squarefree: return w == ExtNat(1);
    case ConditionKind::FiniteSet:
      if (w.is_inf()) return c.allow_infinity;
      return std::find(c.values.begin(), c.values.end(), w.value()) != c.values.end();
  }
  return false;
}

std::vector<std::uint64_t> finite_slice(const DivisorCondition& c) {
  switch (c.kind) {
    case ConditionKind::Any:
    case ConditionKind::Squarefree: return {1};
    case ConditionKind::Integral: return {};
    case ConditionKind::Campana:
      if (c.m.is_inf()) return {};
      return {c.m.value(), c.m.value() + 1};
    case ConditionKind::Darmon:
    case ConditionKind::StrictDarmon:
      if (c.m.is_inf()) return {};
      return {c.m.value()};
    case ConditionKind::FiniteSet: {
      std::vector<std::uint64_t> out;
      for (auto v : c.values)
        if (v != 0) out.push_back(v);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

MultiplicitySet MultiplicitySet::product(std::vector<DivisorCondition> conds) {
  MultiplicitySet s;
  s.variant = MultiplicityVariant::Product;
  s.per_ray = std::move(conds);
  return s;
}

MultiplicitySet MultiplicitySet::weak_campana(ExtVec m) {
  MultiplicitySet s;
  s.variant = MultiplicityVariant::WeakCampana;
  s.weights = std::move(m);
  return s;
}

MultiplicitySet MultiplicitySet::custom(std::vector<ExtVec> vectors) {
  MultiplicitySet s;
  s.variant = MultiplicityVariant::Custom;
  s.vectors = std::move(vectors);
  return s;
}

MultiplicitySet MultiplicitySet::union_of_axes(std::size_t n) {
  MultiplicitySet s;
  s.variant = MultiplicityVariant::UnionOfAxes;
  s.axes = n;
  return s;
}

MultiplicitySet MultiplicitySet::campana(const ExtVec& m) {
  std::vector<DivisorCondition> c;
  for (auto x : m) c.push_back(DivisorCondition::campana(x));
  return product(c);
}

MultiplicitySet MultiplicitySet::darmon(const ExtVec& m) {
  std::vector<DivisorCondition> c;
  for (auto x : m) c.push_back(DivisorCondition::darmon(x));
  return product(c);
}

MultiplicitySet MultiplicitySet::uniform(std::size_t n, const DivisorCondition& c) {
  return product(std::vector<DivisorCondition>(n, c));
}

std::size_t MultiplicitySet::arity() const {
  switch (variant) {
    case MultiplicityVariant::Product: return per_ray.size();
    case MultiplicityVariant::WeakCampana: return weights.size();
    case MultiplicityVariant::Custom: return vectors.empty() ? 0 : vectors.front().size();
    case MultiplicityVariant::UnionOfAxes: return axes;
  }
  return 0;
}

std::string MultiplicitySet::to_string() const {
  switch (variant) {
    case MultiplicityVariant::Product: {
      std::string s = "product[";
      for (std::size_t i = 0; i < per_ray.size(); ++i) s += (i ? "," : "") + per_ray[i].to_string();
      return s + "]";
    }
    case MultiplicityVariant::WeakCampana: return "weak_campana" + toric::to_string(weights);
    case MultiplicityVariant::Custom: return "custom[" + std::to_string(vectors.size()) + " vectors]";
    case MultiplicityVariant::UnionOfAxes: return "union_of_axes(" + std::to_string(axes) + ")";
  }
  return "?";
}

bool contains(const MultiplicitySet& s, const ExtVec& w) {
  if (w.size() != s.arity()) throw InputError("multiplicity vector has wrong length");
  switch (s.variant) {
    case MultiplicityVariant::Product:
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!admits(s.per_ray[i], w[i])) return false;
      return true;
    case MultiplicityVariant::WeakCampana: {
      bool all_zero = true;
      mpq_class sum = 0;
      bool infinite_sum = false;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) continue;
        all_zero = false;
        const ExtNat& m = s.weights[i];
        if (m.is_inf()) return false;
        if (m.value() == 1) continue;
        if (w[i].is_inf())
          infinite_sum = true;
        else
          sum += mpq_class(static_cast<unsigned long>(w[i].value()), static_cast<unsigned long>(m.value()));
      }
      return all_zero || infinite_sum || sum >= 1;
    }
    case MultiplicityVariant::Custom:
      return std::find(s.vectors.begin(), s.vectors.end(), w) != s.vectors.end();
    case MultiplicityVariant::UnionOfAxes:
      return std::count_if(w.begin(), w.end(), [](const ExtNat& x) { return !x.is_zero(); }) <= 1;
  }
  return false;
}

void validate_pair(const ToricPair& pair) {
  require_valid(pair.fan);
  const auto& s = pair.conditions;
  const std::size_t n = pair.fan.rays.size();
  if (s.variant == MultiplicityVariant::Custom && s.vectors.empty())
    throw InputError("custom multiplicity set must list at least the zero vector");
  if (s.arity() != n)
    throw InputError("multiplicity set has " + std::to_string(s.arity()) + " entries but the fan has " +
                     std::to_string(n) + " rays");
  for (const auto& c : s.per_ray) {
    if ((c.kind == ConditionKind::Campana || c.kind == ConditionKind::Darmon ||
         c.kind == ConditionKind::StrictDarmon) &&
        c.m.is_zero())
      throw InputError("multiplicity m must be >= 1 or inf");
  }
  for (const auto& m : s.weights)
    if (m.is_zero()) throw InputError("weak Campana weight must be >= 1 or inf");
  if (s.variant == MultiplicityVariant::Custom) {
    for (const auto& v : s.vectors)
      if (v.size() != n) throw InputError("custom vector has wrong length");
    if (!contains(s, ExtVec(n, ExtNat(0)))) throw InputError("custom multiplicity set must contain the zero vector");
    for (const auto& v : s.vectors) {
      ExtVec proj(n);
      for (std::size_t i = 0; i < n; ++i) proj[i] = v[i].is_inf() ? ExtNat::infinity() : ExtNat(0);
      if (!contains(s, proj)) throw InputError("custom multiplicity set not closed under the infinity projection");
    }
  }
}

bool support_is_conical(const ToricPair& pair, const std::vector<std::size_t>& support) {
  Cone c = support;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (!c.empty() && c.back() >= pair.fan.rays.size()) throw InputError("support index out of range");
  return c.empty() || is_cone_of(pair.fan, c);
}

NMGenerators nm_generators(const ToricPair& pair) {
  validate_pair(pair);
  const Fan& f = pair.fan;
  const auto& s = pair.conditions;
  std::set<IntVec> gens;
  auto phi = [&](const std::vector<std::uint64_t>& w) {
    IntVec v(f.dim);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i])
        for (std::size_t k = 0; k < f.dim; ++k) v[k] += f.rays[i][k] * static_cast<unsigned long>(w[i]);
    return v;
  };
  switch (s.variant) {
    case MultiplicityVariant::Product:
      for (std::size_t i = 0; i < f.rays.size(); ++i)
        for (auto m : finite_slice(s.per_ray[i])) gens.insert(scaled(f.rays[i], static_cast<unsigned long>(m)));
      break;
    case MultiplicityVariant::UnionOfAxes:
      for (const auto& r : f.rays) gens.insert(r);
      break;
    case MultiplicityVariant::WeakCampana: {
      std::uint64_t top = 0;
      for (const auto& m : s.weights)
        if (!m.is_inf()) top = std::max(top, m.value());
      for_each_cone_supported(f, top + 1, [&](const std::vector<std::uint64_t>& w) {
        if (contains(s, to_ext(w))) gens.insert(phi(w));
      });
      break;
    }
    case MultiplicityVariant::Custom:
      for (const auto& v : s.vectors) {
        if (std::any_of(v.begin(), v.end(), [](const ExtNat& x) { return x.is_inf(); })) continue;
        std::vector<std::size_t> support;
        std::vector<std::uint64_t> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
          w[i] = v[i].value();
          if (w[i]) support.push_back(i);
        }
        if (support_is_conical(pair, support)) gens.insert(phi(w));
      }
      break;
  }
  gens.erase(IntVec(f.dim));
  NMGenerators out;
  out.lattice_gens.assign(gens.begin(), gens.end());
  std::set<IntVec> dirs;
  for (const auto& g : gens) dirs.insert(primitive_direction(g));
  out.cone_gens.assign(dirs.begin(), dirs.end());
  return out;
}

PairInvariants invariants_from_generators(const NMGenerators& gens, std::size_t dim) {
  PairInvariants inv;
  inv.dim = dim;
  inv.nm_basis = lattice_from_generators(gens.lattice_gens, dim);
  inv.index = lattice_index(inv.nm_basis, dim);
  inv.quotient = quotient_invariants(inv.nm_basis, dim);
  inv.cone_generators = gens.cone_gens;
  inv.cone_full = cone_is_full(gens.cone_gens, dim);
  inv.nm_plus_equals_n = inv.index.is_one() && inv.cone_full;
  if (inv.nm_plus_equals_n && !inv.index.is_one()) throw ComputationDefect("N_M^+ = N without index 1");
  return inv;
}

PairInvariants pair_invariants(const ToricPair& pair) {
  validate_pair(pair);
  if (!is_smooth(pair.fan))
    throw InputError("pair_invariants requires a smooth fan; use nm_singular with a smooth refinement");
  auto inv = invariants_from_generators(nm_generators(pair), pair.fan.dim);
  if (pair.conditions.variant == MultiplicityVariant::Custom)
    inv.notes.push_back("custom multiplicity set treated as the literal finite list given");
  return inv;
}

IntMatrix pullback_coefficients(const RefinementMap& r) {
  const std::size_t nt = r.target.rays.size(), ns = r.source.rays.size();
  IntMatrix c(nt, ns);
  for (std::size_t a = 0; a < nt; ++a) {
    auto ii = inverse_image_coefficients(r, a);
    if (!ii.principal) throw NotPrincipal("NOT_PRINCIPAL for divisor " + std::to_string(a) + ": " + ii.diagnostic);
    for (std::size_t b = 0; b < ns; ++b) c(a, b) = ii.coefficients[b];
  }
  return c;
}

namespace {

std::uint64_t default_bound(const MultiplicitySet& s, const IntMatrix& c) {
  std::uint64_t l = 1;
  auto fold = [&](std::uint64_t v) {
    if (v) l = std::lcm(l, v);
  };
  switch (s.variant) {
    case MultiplicityVariant::Product:
      for (const auto& d : s.per_ray) {
        if (d.kind == ConditionKind::FiniteSet)
          for (auto v : d.values) fold(v);
        else if ((d.kind == ConditionKind::Campana || d.kind == ConditionKind::Darmon ||
                  d.kind == ConditionKind::StrictDarmon) &&
                 !d.m.is_inf())
          fold(d.m.value());
      }
      break;
    case MultiplicityVariant::WeakCampana:
      for (const auto& m : s.weights)
        if (!m.is_inf()) fold(m.value());
      break;
    case MultiplicityVariant::Custom:
      for (const auto& v : s.vectors)
        for (const auto& x : v)
          if (!x.is_inf()) fold(x.value());
      break;
    case MultiplicityVariant::UnionOfAxes: break;
  }
  mpz_class top = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) top = std::max(top, mpz_class(c(i, j)));
  return l * (1 + top.get_ui());
}

}  // namespace

PairInvariants nm_singular(const ToricPair& pair, const RefinementMap& r, const std::optional<IntMatrix>& override_c,
                           const std::optional<std::uint64_t>& bound_override) {
  validate_pair(pair);
  if (!(pair.fan == r.target)) throw InputError("nm_singular: refinement target differs from the pair's fan");
  require_valid(r.source);
  if (!is_smooth(r.source)) throw InputError("nm_singular: refinement source must be smooth");
  IntMatrix c = override_c ? *override_c : pullback_coefficients(r);
  const std::size_t nt = r.target.rays.size(), ns = r.source.rays.size();
  if (c.rows() != nt || c.cols() != ns) throw InputError("nm_singular: coefficient matrix has wrong shape");
  for (std::size_t a = 0; a < nt; ++a)
    for (std::size_t b = 0; b < ns; ++b)
      if (c(a, b) < 0) throw InputError("nm_singular: coefficients must be nonnegative");
  const std::uint64_t bound = bound_override ? *bound_override : default_bound(pair.conditions, c);
  const Fan& src = r.source;
  std::set<IntVec> gens;
  for_each_cone_supported(src, bound, [&](const std::vector<std::uint64_t>& w) {
    ExtVec pushed(nt);
    for (std::size_t a = 0; a < nt; ++a) {
      mpz_class s = 0;
      for (std::size_t b = 0; b < ns; ++b) s += c(a, b) * static_cast<unsigned long>(w[b]);
      pushed[a] = ExtNat(s.get_ui());
    }
    if (!contains(pair.conditions, pushed)) return;
    IntVec v(src.dim);
    for (std::size_t b = 0; b < ns; ++b)
      if (w[b])
        for (std::size_t k = 0; k < src.dim; ++k) v[k] += src.rays[b][k] * static_cast<unsigned long>(w[b]);
    gens.insert(v);
  });
  gens.erase(IntVec(src.dim));
  NMGenerators g;
  g.lattice_gens.assign(gens.begin(), gens.end());
  std::set<IntVec> dirs;
  for (const auto& v : gens) dirs.insert(primitive_direction(v));
  g.cone_gens.assign(dirs.begin(), dirs.end());
  auto inv = invariants_from_generators(g, src.dim);
  inv.enumeration_bound = mpz_class(static_cast<unsigned long>(bound));
  inv.notes.push_back("pulled back along a smooth refinement with " + std::to_string(ns) +
                      " rays; entry bound W = " + std::to_string(bound));
  return inv;
}

PairInvariants compute_invariants(const ToricPair& pair) {
  validate_pair(pair);
  if (is_smooth(pair.fan)) return pair_invariants(pair);
  if (pair.fan.dim == 2) return nm_singular(pair, resolve_2d(pair.fan));
  throw InputError("singular fan of dimension >= 3: supply a smooth refinement (stellar subdivisions) to nm_singular");
}

bool mred_in_closure_of_mfin(const ToricPair& pair) {
  validate_pair(pair);
  const auto& s = pair.conditions;
  switch (s.variant) {
    case MultiplicityVariant::Product:
      for (const auto& c : s.per_ray) {
        if (!admits(c, ExtNat::infinity())) continue;
        switch (c.kind) {
          case ConditionKind::Any: break;
          case ConditionKind::Campana:
          case ConditionKind::Darmon:
            if (c.m.is_inf()) return false;
            break;
          case ConditionKind::FiniteSet: return false;
          default: return false;
        }
      }
      return true;
    case MultiplicityVariant::WeakCampana:
    case MultiplicityVariant::UnionOfAxes: return true;
    case MultiplicityVariant::Custom:
      for (const auto& v : s.vectors) {
        std::vector<std::size_t> support;
        bool has_inf = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!v[i].is_zero()) support.push_back(i);
          has_inf = has_inf || v[i].is_inf();
        }
        if (has_inf && support_is_conical(pair, support)) return false;
      }
      return true;
  }
  return false;
}

}  // namespace toric
