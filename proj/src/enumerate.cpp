#include "toricapprox/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "toricapprox/arith.hpp"

namespace toric {

namespace {

using Tuple = std::vector<mpz_class>;

// Runs body(i) for i in [0, count) over `threads` workers, each with its own sink.
template <class Sink>
std::vector<Sink> parallel_over(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t, Sink&)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  std::vector<Sink> sinks(threads);
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex mu;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::uint64_t i = t; i < count; i += threads) body(i, sinks[t]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return sinks;
}

// Odometer over [-H, H]^k (skipping zero when nonzero is set).
bool next_tuple(std::vector<long>& x, long H, bool nonzero) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < H) {
      ++x[i];
      if (nonzero && x[i] == 0) ++x[i];
      return true;
    }
    x[i] = -H;
  }
  return false;
}

long gcd_all(const std::vector<long>& x) {
  long g = 0;
  for (long v : x) g = std::gcd(g, v);
  return g;
}

Census merge(std::vector<std::vector<Tuple>>& parts, const ToricPair& pair, std::uint64_t H, const EnumerateOptions& opts,
             std::uint64_t count) {
  Census c;
  c.pair = pair.conditions.to_string();
  c.height_bound = H;
  c.count = count;
  if (opts.keep_points) {
    for (auto& p : parts) c.points.insert(c.points.end(), p.begin(), p.end());
    std::sort(c.points.begin(), c.points.end());
  }
  return c;
}

}  // namespace

Census enumerate_projective(const ToricPair& pair, std::uint64_t H, const EnumerateOptions& opts) {
  validate_pair(pair);
  if (!is_projective_space_fan(pair.fan)) throw InputError("enumerate_projective needs the fan of P^n");
  const std::size_t n = pair.fan.ray_count();
  MultiplicityMap map(pair.fan);
  const long h = static_cast<long>(H);
  struct Part {
    std::vector<Tuple> pts;
    std::uint64_t count = 0;
  };
  // leading coordinate a_0 in [0, H]; the rest in the box
  auto parts = parallel_over<Part>(H == 0 ? 0 : H + 1, opts.threads, [&](std::uint64_t a0, Part& out) {
    std::vector<long> rest(n - 1, -h);
    do {
      std::vector<long> x{static_cast<long>(a0)};
      x.insert(x.end(), rest.begin(), rest.end());
      if (gcd_all(x) != 1) continue;
      auto first = std::find_if(x.begin(), x.end(), [](long v) { return v != 0; });
      if (*first < 0) continue;
      Tuple t(x.begin(), x.end());
      if (!is_m_point(pair, map, CoxPoint::from_ints(t)).ok) continue;
      ++out.count;
      if (opts.keep_points) out.pts.push_back(std::move(t));
    } while (next_tuple(rest, h, false));
  });
  std::vector<std::vector<Tuple>> pts;
  std::uint64_t count = 0;
  for (auto& p : parts) {
    count += p.count;
    pts.push_back(std::move(p.pts));
  }
  Census c = merge(pts, pair, H, opts, count);
  c.convention = "coprime integer coordinates, max |a_i| <= H, first nonzero coordinate positive; boundary included";
  return c;
}

namespace {

// parity image of a sign pattern as a bitmask over the d coordinates of N/2N
std::uint64_t parity_image(const Fan& f, std::uint64_t bits) {
  std::uint64_t img = 0;
  for (std::size_t i = 0; i < f.ray_count(); ++i)
    if (bits >> i & 1)
      for (std::size_t j = 0; j < f.dim; ++j)
        if (mpz_odd_p(f.rays[i][j].get_mpz_t())) img ^= std::uint64_t(1) << j;
  return img;
}

// smallest sign pattern (bit i = coordinate i negative, lexicographic from coordinate 0)
std::map<std::uint64_t, std::uint64_t> sign_table(const Fan& f) {
  const std::size_t n = f.ray_count();
  std::map<std::uint64_t, std::uint64_t> best;
  auto lex_key = [n](std::uint64_t b) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k = (k << 1) | (b >> i & 1);
    return k;
  };
  for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
    auto img = parity_image(f, b);
    auto it = best.find(img);
    if (it == best.end() || lex_key(b) < lex_key(it->second)) best[img] = b;
  }
  return best;
}

}  // namespace

std::vector<mpz_class> canonical_cox(const MultiplicityMap& map, const std::vector<mpz_class>& x) {
  const Fan& f = map.fan();
  if (x.size() != f.ray_count()) throw InputError("canonical_cox: wrong number of coordinates");
  if (f.ray_count() > 20) throw InputError("canonical_cox: too many rays");
  std::vector<mpz_class> out(x.size(), mpz_class(1));
  CoxPoint P = CoxPoint::from_ints(x);
  if (P.has_zero()) throw InputError("canonical_cox: coordinates must be nonzero");
  for (auto& p : support_primes(P)) {
    auto w = map.mult(p, P);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] *= pow_ui(p, w[i].value());
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0) bits |= std::uint64_t(1) << i;
  static thread_local std::map<std::vector<IntVec>, std::map<std::uint64_t, std::uint64_t>> cache;
  auto it = cache.find(f.rays);
  if (it == cache.end()) it = cache.emplace(f.rays, sign_table(f)).first;
  std::uint64_t canon = it->second.at(parity_image(f, bits));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (canon >> i & 1) out[i] = -out[i];
  return out;
}

Census enumerate_toric(const ToricPair& pair, std::uint64_t H, const EnumerateOptions& opts) {
  validate_pair(pair);
  MultiplicityMap map(pair.fan);
  const std::size_t n = pair.fan.ray_count();
  if (n - pair.fan.dim > 2) throw InputError("enumerate_toric supports class group rank <= 2 only");
  const long h = static_cast<long>(H);
  // leading coordinate in [-H, H] minus 0
  std::vector<long> leads;
  for (long a = -h; a <= h; ++a)
    if (a != 0) leads.push_back(a);
  using Part = std::set<Tuple>;
  auto parts = parallel_over<Part>(leads.size(), opts.threads, [&](std::uint64_t k, Part& out) {
    std::vector<long> rest(n - 1, -h);
    do {
      Tuple x{mpz_class(leads[k])};
      for (long v : rest) x.emplace_back(v);
      auto c = canonical_cox(map, x);
      if (out.count(c)) continue;
      if (is_m_point(pair, map, CoxPoint::from_ints(c)).ok) out.insert(std::move(c));
    } while (next_tuple(rest, h, true));
  });
  std::set<Tuple> all;
  for (auto& p : parts) all.insert(p.begin(), p.end());
  std::vector<std::vector<Tuple>> pts{std::vector<Tuple>(all.begin(), all.end())};
  Census c = merge(pts, pair, H, opts, all.size());
  c.convention =
      "orbits meeting the box of nonzero integer Cox tuples with |x_i| <= H, listed by canonical form "
      "(cone-supported valuations, lexicographically smallest sign pattern); box height is a convention";
  return c;
}

bool projective_predicate(const MultiplicitySet& set, const std::vector<mpz_class>& a) {
  if (set.variant == MultiplicityVariant::UnionOfAxes) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (gcd(a[i], a[j]) != 1) return false;
    return true;
  }
  if (set.variant != MultiplicityVariant::Product)
    throw InputError("no coordinatewise arithmetic characterization for " + set.to_string());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& c = set.per_ray[i];
    const mpz_class& x = a[i];
    bool ok = true;
    switch (c.kind) {
      case ConditionKind::Any: break;
      case ConditionKind::Integral: ok = abs(x) == 1; break;
      case ConditionKind::Campana: ok = is_m_full(x, c.m); break;
      case ConditionKind::Darmon: ok = is_perfect_power(x, c.m); break;
      case ConditionKind::StrictDarmon: ok = x != 0 && is_perfect_power(x, c.m); break;
      case ConditionKind::Squarefree: ok = x != 0 && is_squarefree(x); break;
      case ConditionKind::FiniteSet:
        if (x == 0) {
          ok = c.allow_infinity;
        } else {
          for (auto& pe : factor(x))
            if (std::find(c.values.begin(), c.values.end(), pe.second) == c.values.end()) ok = false;
        }
        break;
    }
    if (!ok) return false;
  }
  return true;
}

std::string CrosscheckReport::to_string() const {
  std::ostringstream os;
  os << checked << " points checked, " << divergences << " divergences";
  if (first_divergence) {
    os << "; first at (";
    for (std::size_t i = 0; i < first_divergence->size(); ++i) os << (i ? ":" : "") << (*first_divergence)[i].get_str();
    os << ") where the fan machinery says " << (fan_verdict ? "M-point" : "not an M-point");
  }
  return os.str();
}

CrosscheckReport crosscheck(const ToricPair& pair, std::uint64_t H, unsigned threads) {
  validate_pair(pair);
  if (!is_projective_space_fan(pair.fan)) throw InputError("crosscheck needs the fan of P^n");
  projective_predicate(pair.conditions, std::vector<mpz_class>(pair.fan.ray_count(), mpz_class(1)));
  const std::size_t n = pair.fan.ray_count();
  MultiplicityMap map(pair.fan);
  const long h = static_cast<long>(H);
  auto parts = parallel_over<CrosscheckReport>(H == 0 ? 0 : H + 1, threads, [&](std::uint64_t a0, CrosscheckReport& out) {
    std::vector<long> rest(n - 1, -h);
    do {
      std::vector<long> x{static_cast<long>(a0)};
      x.insert(x.end(), rest.begin(), rest.end());
      if (gcd_all(x) != 1) continue;
      auto first = std::find_if(x.begin(), x.end(), [](long v) { return v != 0; });
      if (*first < 0) continue;
      Tuple t(x.begin(), x.end());
      ++out.checked;
      bool fan = is_m_point(pair, map, CoxPoint::from_ints(t)).ok;
      if (fan != projective_predicate(pair.conditions, t)) {
        ++out.divergences;
        if (!out.first_divergence || t < *out.first_divergence) {
          out.first_divergence = t;
          out.fan_verdict = fan;
        }
      }
    } while (next_tuple(rest, h, false));
  });
  CrosscheckReport r;
  for (auto& p : parts) {
    r.checked += p.checked;
    r.divergences += p.divergences;
    if (p.first_divergence && (!r.first_divergence || *p.first_divergence < *r.first_divergence)) {
      r.first_divergence = p.first_divergence;
      r.fan_verdict = p.fan_verdict;
    }
  }
  return r;
}

}  // namespace toric
