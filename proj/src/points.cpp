#include "toricapprox/points.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toricapprox/arith.hpp"

namespace toric {

CoxPoint CoxPoint::from_ints(std::initializer_list<long> xs) {
  CoxPoint p;
  for (long x : xs) p.coords.emplace_back(x);
  return p;
}

CoxPoint CoxPoint::from_ints(const std::vector<mpz_class>& xs) {
  CoxPoint p;
  for (auto& x : xs) p.coords.emplace_back(x);
  return p;
}

bool CoxPoint::has_zero() const {
  return std::any_of(coords.begin(), coords.end(), [](const mpq_class& q) { return q == 0; });
}

std::string CoxPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ":" : "") + coords[i].get_str();
  return s + ")";
}

bool is_projective_space_fan(const Fan& f) {
  if (f.dim == 0 || f.ray_count() != f.dim + 1) return false;
  Fan ref = projective_space(f.dim);
  if (f.rays != ref.rays) return false;
  auto a = f.max_cones, b = ref.max_cones;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<mpz_class> normalize_projective(const CoxPoint& p) {
  mpz_class l = 1;
  for (auto& q : p.coords) l = lcm(l, q.get_den());
  std::vector<mpz_class> a;
  mpz_class g = 0;
  for (auto& q : p.coords) {
    mpz_class v = q.get_num() * (l / q.get_den());
    g = gcd(g, v);
    a.push_back(v);
  }
  if (g == 0) throw InputError("point has all coordinates zero");
  for (auto& v : a) v /= g;
  for (auto& v : a)
    if (v != 0) {
      if (v < 0)
        for (auto& w : a) w = -w;
      break;
    }
  return a;
}

std::vector<mpz_class> support_primes(const CoxPoint& p) {
  std::set<mpz_class> s;
  for (auto& q : p.coords) {
    if (q == 0) continue;
    for (auto& r : prime_divisors(q.get_num())) s.insert(r);
    for (auto& r : prime_divisors(q.get_den())) s.insert(r);
  }
  return {s.begin(), s.end()};
}

MultiplicityMap::MultiplicityMap(const Fan& fan) : fan_(fan) {
  require_valid(fan);
  projective_ = is_projective_space_fan(fan);
  if (!is_smooth(fan) || !is_complete(fan))
    throw InputError("multiplicities need a smooth complete fan");
  for (const auto& c : fan.max_cones) {
    // smooth + complete: every maximal cone is full-dimensional and unimodular
    auto b = IntMatrix::from_columns(fan.cone_rays(c), fan.dim);
    auto inv = right_inverse(b);
    if (!inv) throw ComputationDefect("unimodular cone without integral inverse");
    std::vector<std::vector<long>> m(fan.dim, std::vector<long>(fan.dim));
    for (std::size_t i = 0; i < fan.dim; ++i)
      for (std::size_t j = 0; j < fan.dim; ++j) {
        const mpz_class& x = (*inv)(i, j);
        if (!x.fits_slong_p()) throw InputError("fan entries too large");
        m[i][j] = x.get_si();
      }
    inverses_.push_back(std::move(m));
  }
}

ExtVec MultiplicityMap::from_valuations(const std::vector<long>& w) const {
  const std::size_t d = fan_.dim;
  if (w.size() != fan_.ray_count()) throw InputError("valuation vector has wrong length");
  std::vector<__int128> u(d, 0);
  bool zero = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    zero = false;
    for (std::size_t j = 0; j < d; ++j) u[j] += static_cast<__int128>(w[i]) * fan_.rays[i][j].get_si();
  }
  ExtVec out(fan_.ray_count(), ExtNat(0));
  if (zero) return out;
  for (std::size_t c = 0; c < fan_.max_cones.size(); ++c) {
    const auto& inv = inverses_[c];
    std::vector<__int128> coef(d, 0);
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      for (std::size_t j = 0; j < d; ++j) coef[i] += static_cast<__int128>(inv[i][j]) * u[j];
      if (coef[i] < 0) ok = false;
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < d; ++i) out[fan_.max_cones[c][i]] = static_cast<std::uint64_t>(coef[i]);
    return out;
  }
  throw ComputationDefect("vector outside the support of a complete fan");
}

ExtVec MultiplicityMap::mult(const mpz_class& p, const CoxPoint& P) const {
  if (P.coords.size() != fan_.ray_count()) throw InputError("point has wrong number of coordinates");
  if (P.has_zero()) {
    if (!projective_) throw InputError("boundary points (zero coordinates) are supported on P^n only");
    auto a = normalize_projective(P);
    ExtVec out;
    for (auto& x : a) out.push_back(x == 0 ? ExtNat::infinity() : ExtNat(valuation(x, p)));
    return out;
  }
  std::vector<long> w;
  for (auto& q : P.coords) w.push_back(valuation(q, p));
  return from_valuations(w);
}

ExtVec mult_at_prime(const Fan& fan, const mpz_class& p, const CoxPoint& P) { return MultiplicityMap(fan).mult(p, P); }

IntVec phi_v(const Fan& fan, const mpz_class& p, const CoxPoint& P) {
  if (P.coords.size() != fan.ray_count()) throw InputError("point has wrong number of coordinates");
  if (P.has_zero()) throw InputError("phi_v needs nonzero coordinates");
  IntVec u(fan.dim);
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    long w = valuation(P.coords[i], p);
    for (std::size_t j = 0; j < fan.dim; ++j) u[j] += fan.rays[i][j] * w;
  }
  return u;
}

std::string MPointCheck::to_string() const {
  if (ok) return "M-point";
  std::ostringstream os;
  os << "fails at p = " << failing_prime->get_str() << " with multiplicities " << toric::to_string(failing_vector);
  return os.str();
}

MPointCheck is_m_point(const ToricPair& pair, const MultiplicityMap& map, const CoxPoint& P,
                       const std::vector<mpz_class>& excluded) {
  MPointCheck r;
  auto skip = [&](const mpz_class& p) { return std::find(excluded.begin(), excluded.end(), p) != excluded.end(); };
  auto primes = support_primes(P);
  for (auto& p : primes) {
    if (skip(p)) continue;
    ExtVec w = map.mult(p, P);
    r.per_prime.emplace_back(p, w);
    if (r.ok && !contains(pair.conditions, w)) {
      r.ok = false;
      r.failing_prime = p;
      r.failing_vector = w;
    }
  }
  if (P.has_zero() && r.ok) {
    // every prime outside the support sees infinity exactly at the zero coordinates
    ExtVec generic;
    for (auto& q : P.coords) generic.push_back(q == 0 ? ExtNat::infinity() : ExtNat(0));
    if (!contains(pair.conditions, generic)) {
      mpz_class p = 2;
      while (skip(p) || std::find(primes.begin(), primes.end(), p) != primes.end()) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      r.ok = false;
      r.failing_prime = p;
      r.failing_vector = generic;
    }
  }
  return r;
}

MPointCheck is_m_point(const ToricPair& pair, const CoxPoint& P, const std::vector<mpz_class>& excluded) {
  validate_pair(pair);
  return is_m_point(pair, MultiplicityMap(pair.fan), P, excluded);
}

bool is_m_full(const mpz_class& n, ExtNat m) {
  if (n == 0) return true;
  if (m.is_inf()) return abs(n) == 1;
  for (auto& pe : factor(n))
    if (pe.second < m.value()) return false;
  return true;
}

bool is_perfect_power(const mpz_class& n, ExtNat m) {
  mpz_class a = abs(n);
  if (m.is_inf()) return a <= 1;
  if (m.is_zero()) throw InputError("is_perfect_power: m must be >= 1");
  if (a <= 1) return true;
  return mpz_root(a.get_mpz_t(), a.get_mpz_t(), m.value()) != 0;
}

std::vector<mpq_class> torus_characters(const Fan& fan, const CoxPoint& P) {
  if (P.coords.size() != fan.ray_count()) throw InputError("point has wrong number of coordinates");
  if (P.has_zero()) throw InputError("torus characters need nonzero coordinates");
  std::vector<mpq_class> chi(fan.dim, mpq_class(1));
  for (std::size_t i = 0; i < fan.ray_count(); ++i)
    for (std::size_t j = 0; j < fan.dim; ++j) {
      const long e = fan.rays[i][j].get_si();
      if (e == 0) continue;
      mpq_class base = e > 0 ? P.coords[i] : 1 / P.coords[i];
      mpz_class num = pow_ui(base.get_num(), static_cast<unsigned long>(e > 0 ? e : -e));
      mpz_class den = pow_ui(base.get_den(), static_cast<unsigned long>(e > 0 ? e : -e));
      chi[j] *= mpq_class(num, den);
      chi[j].canonicalize();
    }
  return chi;
}

Closeness p_adic_close(const Fan& fan, const CoxPoint& Q, const CoxPoint& target, const mpz_class& p, unsigned k) {
  auto a = torus_characters(fan, Q), b = torus_characters(fan, target);
  Closeness c;
  c.ok = true;
  for (std::size_t j = 0; j < a.size(); ++j) {
    mpq_class diff = a[j] / b[j] - 1;
    ExtNat d = diff == 0 ? ExtNat::infinity() : ExtNat(static_cast<std::uint64_t>(std::max(0l, valuation(diff, p))));
    if (diff != 0 && valuation(diff, p) < static_cast<long>(k)) c.ok = false;
    c.digits.push_back(d);
  }
  return c;
}

}  // namespace toric
