#include "toricapprox/catalog.hpp"

#include <numeric>

namespace toric {

namespace {

std::vector<std::uint64_t> finite(const ExtVec& m, std::size_t want, const char* who) {
  if (m.size() != want)
    throw InputError(std::string(who) + ": expected " + std::to_string(want) + " multiplicities, got " +
                     std::to_string(m.size()));
  std::vector<std::uint64_t> out;
  for (auto& x : m) {
    if (x.is_inf() || x.is_zero()) throw InputError(std::string(who) + ": multiplicities must be finite and positive");
    out.push_back(x.value());
  }
  return out;
}

mpz_class gcd_all(std::initializer_list<mpz_class> xs) {
  mpz_class g = 0;
  for (auto& x : xs) g = gcd(g, x);
  return g;
}

std::string show(const ExtVec& m) { return to_string(m); }

}  // namespace

std::vector<std::string> catalog_names() { return {"pn-darmon", "hirzebruch", "p11r", "affine-space"}; }

CatalogEntry example_catalog(const std::string& name, const CatalogParams& p) {
  CatalogEntry e;
  e.name = name;
  e.field = FieldDescriptor::rationals();
  e.T_nonempty = p.T_nonempty;
  if (name == "hirzebruch") {
    if (p.r < 0) throw InputError("hirzebruch: r must be >= 0");
    auto m = finite(p.m, 4, "hirzebruch");
    mpz_class m1 = m[0], m2 = m[1], m3 = m[2], m4 = m[3];
    mpz_class g = gcd_all({m1 * m2, m1 * m4, m2 * m3, m3 * m4, mpz_class(p.r) * m1 * m3});
    e.pair = {hirzebruch(p.r), MultiplicitySet::darmon(p.m)};
    e.description = "H_" + std::to_string(p.r) + " with DARMON" + show(p.m);
    e.formula = "gcd(m1m2, m1m4, m2m3, m3m4, r m1m3) = " + g.get_str();
    // Off T over Q: index 1.  T empty additionally needs N_M^+ = N, which for finite
    // Darmon weights on a complete fan reduces to the same index condition.
    e.expected = g == 1 ? Holds::Yes : Holds::No;
  } else if (name == "p11r") {
    if (p.r < 1) throw InputError("p11r: r must be >= 1");
    auto m = finite(p.m, 3, "p11r");
    mpz_class m0 = m[0], m1 = m[1], m2 = m[2];
    mpz_class g1 = gcd(m0, m1), g2 = gcd_all({m0 * m1, m2, mpz_class(p.r - 1)});
    e.pair = {weighted_P11r(p.r), MultiplicitySet::darmon(p.m)};
    e.description = "P(1,1," + std::to_string(p.r) + ") with DARMON" + show(p.m);
    e.formula = "gcd(m0,m1) = " + g1.get_str() + ", gcd(m0m1, m2, r-1) = " + g2.get_str();
    e.expected = (g1 == 1 && g2 == 1) ? Holds::Yes : Holds::No;
  } else if (name == "pn-darmon") {
    if (p.n < 2) throw InputError("pn-darmon: n must be >= 2");
    if (p.m.size() != p.n) throw InputError("pn-darmon: expected n multiplicities");
    bool ok = true;
    for (auto& x : p.m)
      if (x.is_zero()) throw InputError("pn-darmon: multiplicities must be positive");
    for (std::size_t i = 0; i < p.n; ++i)
      for (std::size_t j = i + 1; j < p.n; ++j) {
        // gcd(inf, a) = a and gcd(inf, inf) = 0
        std::uint64_t g = ext_gcd({p.m[i], p.m[j]});
        if (g != 1) ok = false;
      }
    if (!p.T_nonempty)
      for (auto& x : p.m)
        if (x.is_inf()) ok = false;
    e.pair = {projective_space(p.n - 1), MultiplicitySet::darmon(p.m)};
    e.description = "P^" + std::to_string(p.n - 1) + " with DARMON" + show(p.m);
    e.formula = p.T_nonempty ? "gcd(m_i, m_j) = 1 for all i != j" : "all m_i finite and pairwise coprime";
    e.expected = ok ? Holds::Yes : Holds::No;
  } else if (name == "affine-space") {
    if (p.d < 1) throw InputError("affine-space: d must be >= 1");
    std::vector<DivisorCondition> conds(p.d + 1, DivisorCondition::any());
    conds.back() = DivisorCondition::integral();
    e.pair = {projective_space(p.d), MultiplicitySet::product(conds)};
    e.description = "A^" + std::to_string(p.d) + " as P^" + std::to_string(p.d) + " minus the last boundary divisor";
    e.formula = "strong approximation for affine space: holds off a nonempty T, fails for T empty";
    e.expected = p.T_nonempty ? Holds::Yes : Holds::No;
  } else {
    throw InputError("unknown catalog example \"" + name + "\" (known: pn-darmon, hirzebruch, p11r, affine-space)");
  }
  return e;
}

Verdict run_catalog_entry(const CatalogEntry& e) {
  if (e.name == "affine-space") return decide_strong_approx(e.pair.fan, {e.pair.fan.ray_count() - 1}, e.field, e.T_nonempty);
  return decide_m_approx(e.pair, e.field, e.T_nonempty);
}

}  // namespace toric
