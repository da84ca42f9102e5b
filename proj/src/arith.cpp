#include "toricapprox/arith.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

constexpr std::uint32_t kTrialLimit = 1u << 16;
constexpr unsigned long kRhoBudget = 1ul << 22;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> sieve(kTrialLimit + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialLimit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool mr_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s && comp; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

// Deterministic for n < 3.317e24 with the first 13 prime bases.
bool mr_mpz(const mpz_class& n) {
  static const mpz_class limit("3317044064679887385961981");
  if (n >= limit) throw InputError("factorization beyond supported range: cofactor " + n.get_str() + " too large");
  if (n.fits_ulong_p()) return mr_u64(n.get_ui());
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul})
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  mpz_class nm1 = n - 1;
  for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
    mpz_class x, base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool comp = true;
    for (unsigned long r = 1; r < s && comp; ++r) {
      x = x * x % n;
      if (x == nm1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

// Pollard-Brent: a nontrivial factor of composite n, or 0 on budget exhaustion.
mpz_class rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 20; ++c) {
    mpz_class y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1, spent = 0;
    const unsigned long m = 128;
    while (g == 1 && spent < kRhoBudget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      spent += r;
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
    if (spent >= kRhoBudget) return 0;
  }
  return 0;
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& acc) {
  if (n == 1) return;
  static const mpz_class limit("3317044064679887385961981");
  // above the deterministic range only provably composite numbers are split further
  const bool prime = n >= limit ? mpz_probab_prime_p(n.get_mpz_t(), 25) != 0 && mr_mpz(n) : mr_mpz(n);
  if (prime) {
    ++acc[n];
    return;
  }
  mpz_class s;
  if (mpz_perfect_square_p(n.get_mpz_t()))
    s = sqrt(n);
  else
    s = rho(n);
  if (s == 0) throw InputError("factorization beyond supported range: could not split " + n.get_str());
  split(s, acc);
  split(n / s, acc);
}

}  // namespace

std::vector<PrimePower> factor(const mpz_class& n_in) {
  if (n_in == 0) throw InputError("factor: zero has no factorization");
  mpz_class n = abs(n_in);
  std::vector<PrimePower> out;
  for (std::uint32_t p : small_primes()) {
    if (mpz_class(p) * p > n) break;
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    out.emplace_back(mpz_class(p), e);
  }
  if (n > 1) {
    std::map<mpz_class, unsigned> acc;
    split(n, acc);
    for (auto& kv : acc) out.emplace_back(kv.first, kv.second);
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.first < b.first; });
  return out;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  for (auto& pe : factor(n)) out.push_back(pe.first);
  return out;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mr_mpz(n);
}

unsigned valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw InputError("valuation of zero");
  mpz_class t = n;
  return static_cast<unsigned>(mpz_remove(t.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const mpq_class& q, const mpz_class& p) {
  if (q == 0) throw InputError("valuation of zero");
  return static_cast<long>(valuation(q.get_num(), p)) - static_cast<long>(valuation(q.get_den(), p));
}

bool is_squarefree(const mpz_class& n) {
  if (n == 0) return false;
  for (auto& pe : factor(n))
    if (pe.second > 1) return false;
  return true;
}

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (m == 1) return 0;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw InputError("inverse_mod: not invertible");
  return r;
}

}  // namespace toric
