#include "toricapprox/approx.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "toricapprox/arith.hpp"

namespace toric {

std::uint64_t scan_cap_from_env() {
  const char* s = std::getenv("TORICAPPROX_SCAN_CAP");
  if (!s || !*s) return 10000000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) throw InputError(std::string("TORICAPPROX_SCAN_CAP must be a positive integer, got ") + s);
  return v;
}

std::vector<SquarefreeLift> squarefree_approximate(const std::vector<LocalConstraint>& cs, std::size_t R,
                                                   const SquarefreeOptions& opts) {
  if (R == 0) throw InputError("squarefree_approximate: R must be >= 1");
  std::set<mpz_class> seen;
  for (auto& c : cs) {
    if (!is_prime(c.p)) throw InputError("constraint prime " + c.p.get_str() + " is not prime");
    if (c.target == 0) throw InputError("constraint target must be nonzero");
    if (c.digits == 0) throw InputError("constraint digits must be >= 1");
    if (!seen.insert(c.p).second) throw InputError("constraint primes must be distinct");
  }
  mpq_class prefix = 1;
  for (auto& c : cs) {
    long v = valuation(c.target, c.p);
    mpz_class pv = pow_ui(c.p, static_cast<unsigned long>(std::labs(v)));
    prefix *= v >= 0 ? mpq_class(pv) : mpq_class(1, pv);
  }
  prefix.canonicalize();
  // CRT: n = target / prefix mod p^k at every constraint prime
  mpz_class r = 0, M = 1;
  for (auto& c : cs) {
    mpz_class pk = pow_ui(c.p, c.digits);
    mpq_class u = c.target / prefix;  // p-adic unit
    mpz_class res = u.get_num() * inverse_mod(u.get_den(), pk) % pk;
    if (res < 0) res += pk;
    // combine r mod M with res mod pk
    mpz_class t = (res - r) * inverse_mod(M % pk, pk) % pk;
    if (t < 0) t += pk;
    r += M * t;
    M *= pk;
  }
  const std::uint64_t cap = opts.scan_cap ? *opts.scan_cap : scan_cap_from_env();
  std::vector<SquarefreeLift> out;
  std::vector<mpz_class> taken = opts.avoid;
  mpz_class n = r + M * (opts.seed + 1);
  for (std::uint64_t it = 0; out.size() < R; ++it, n += M) {
    if (it >= cap) throw ComputationDefect("squarefree scan cap exhausted after " + std::to_string(cap) + " candidates");
    bool coprime = std::all_of(taken.begin(), taken.end(), [&](const mpz_class& a) { return gcd(a, n) == 1; });
    if (!coprime || !is_squarefree(n)) continue;
    if (std::find(taken.begin(), taken.end(), n) != taken.end()) continue;
    out.push_back({prefix * n, prefix, n});
    taken.push_back(n);
  }
  return out;
}

GammaData build_gamma(const ToricPair& pair) {
  validate_pair(pair);
  if (pair.conditions.variant != MultiplicityVariant::Product)
    throw InputError("build_gamma needs a product multiplicity set");
  auto inv = pair_invariants(pair);
  if (!inv.index.is_one()) throw InputError("build_gamma needs |N:N_M| = 1, got " + inv.index.to_string());
  const Fan& f = pair.fan;
  GammaData g;
  for (std::size_t i = 0; i < f.ray_count(); ++i)
    for (auto a : finite_slice(pair.conditions.per_ray[i])) {
      std::vector<std::uint64_t> m(f.ray_count(), 0);
      m[i] = a;
      g.generators.push_back(m);
    }
  g.gamma = IntMatrix(f.dim, g.generators.size());
  for (std::size_t s = 0; s < g.generators.size(); ++s)
    for (std::size_t i = 0; i < f.ray_count(); ++i)
      if (g.generators[s][i])
        for (std::size_t j = 0; j < f.dim; ++j) g.gamma(j, s) += f.rays[i][j] * static_cast<unsigned long>(g.generators[s][i]);
  auto r = right_inverse(g.gamma);
  if (!r) throw ComputationDefect("Gamma not surjective although |N:N_M| = 1");
  g.right_inverse = *r;
  return g;
}

namespace {

mpq_class qpow(const mpq_class& x, const mpz_class& e) {
  if (!e.fits_slong_p()) throw InputError("exponent too large");
  long k = e.get_si();
  mpq_class b = k >= 0 ? x : mpq_class(1 / x);
  unsigned long a = static_cast<unsigned long>(std::labs(k));
  mpq_class r(pow_ui(b.get_num(), a), pow_ui(b.get_den(), a));
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<mpq_class> solve_local_exponents(const ToricPair& pair, const GammaData& g, const mpz_class& p,
                                             const CoxPoint& target) {
  if (!is_prime(p)) throw InputError(p.get_str() + " is not prime");
  auto a = torus_characters(pair.fan, target);
  const std::size_t l = g.generators.size();
  std::vector<mpq_class> c(l, mpq_class(1));
  for (std::size_t s = 0; s < l; ++s)
    for (std::size_t j = 0; j < a.size(); ++j) c[s] *= qpow(a[j], g.right_inverse(s, j));
  if (torus_characters(pair.fan, recombine(g, c)) != a)
    throw ComputationDefect("local exponents do not reproduce the target");
  return c;
}

CoxPoint recombine(const GammaData& g, const std::vector<mpq_class>& c) {
  if (c.size() != g.generators.size()) throw InputError("recombine: one value per generator required");
  const std::size_t n = g.generators.empty() ? 0 : g.generators[0].size();
  CoxPoint q;
  q.coords.assign(n, mpq_class(1));
  for (std::size_t s = 0; s < c.size(); ++s)
    for (std::size_t i = 0; i < n; ++i)
      if (g.generators[s][i]) q.coords[i] *= qpow(c[s], g.generators[s][i]);
  return q;
}

ApproxCertificate verify_approximation(const ToricPair& pair, const TargetMap& targets, const CoxPoint& point) {
  ApproxCertificate cert;
  cert.point = point;
  for (auto& [p, t] : targets) {
    auto cl = p_adic_close(pair.fan, point, t.point, p, t.digits);
    cert.closeness.push_back({p, t.digits, cl.digits, cl.ok});
    cert.excluded.push_back(p);
  }
  MultiplicityMap map(pair.fan);
  for (auto& p : support_primes(point)) cert.multiplicities.emplace_back(p, map.mult(p, point));
  cert.m_point = is_m_point(pair, map, point, cert.excluded);
  cert.verified = cert.m_point.ok && std::all_of(cert.closeness.begin(), cert.closeness.end(),
                                                 [](const PrimeCloseness& c) { return c.ok; });
  return cert;
}

ApproxCertificate m_point_approximate(const ToricPair& pair, const TargetMap& targets, const ApproxOptions& opts) {
  validate_pair(pair);
  if (!is_smooth(pair.fan) || !is_complete(pair.fan)) throw InputError("m_point_approximate needs a smooth complete fan");
  for (auto& [p, t] : targets) {
    if (!is_prime(p)) throw InputError("target key " + p.get_str() + " is not prime");
    if (t.point.coords.size() != pair.fan.ray_count()) throw InputError("target point has wrong number of coordinates");
    if (t.point.has_zero()) throw InputError("target points must have nonzero coordinates");
    if (t.digits == 0) throw InputError("digits must be >= 1");
  }
  if (targets.empty()) {
    CoxPoint one;
    one.coords.assign(pair.fan.ray_count(), mpq_class(1));
    auto cert = verify_approximation(pair, targets, one);
    cert.attempts = 1;
    if (!cert.verified) throw ComputationDefect("identity point failed verification");
    return cert;
  }
  const GammaData g = build_gamma(pair);
  std::map<mpz_class, std::vector<mpq_class>> local;
  for (auto& [p, t] : targets) local[p] = solve_local_exponents(pair, g, p, t.point);

  std::uint64_t msum = 0;
  for (std::size_t i = 0; i < pair.fan.ray_count(); ++i) {
    std::uint64_t col = 0;
    for (auto& m : g.generators) col += m[i];
    msum = std::max(msum, col);
  }
  unsigned extra = 0;
  for (unsigned attempt = 1; attempt <= opts.max_retries; ++attempt) {
    std::vector<mpq_class> lifts;
    std::vector<mpz_class> taken;
    for (std::size_t s = 0; s < g.generators.size(); ++s) {
      std::vector<LocalConstraint> cs;
      for (auto& [p, t] : targets) {
        unsigned guard = 0;
        for (mpz_class pw = 1; pw < msum; pw *= p) ++guard;
        cs.push_back({p, local[p][s], t.digits + guard + extra});
      }
      SquarefreeOptions so;
      so.avoid = taken;
      so.seed = opts.seed;
      so.scan_cap = opts.scan_cap;
      auto lift = squarefree_approximate(cs, 1, so).front();
      taken.push_back(lift.n);
      lifts.push_back(lift.f);
    }
    auto cert = verify_approximation(pair, targets, recombine(g, lifts));
    cert.attempts = attempt;
    if (cert.verified) return cert;
    extra = extra ? 2 * extra : 1;
  }
  throw ComputationDefect("retries exhausted: no verified approximation after " + std::to_string(opts.max_retries) +
                          " attempts");
}

}  // namespace toric
