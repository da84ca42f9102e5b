#pragma once

#include <utility>
#include <vector>

#include "toricapprox/core.hpp"

namespace toric {

using PrimePower = std::pair<mpz_class, unsigned>;

// Prime factorization of |n| (n != 0), primes ascending.  Trial division, then
// deterministic Miller-Rabin and Pollard-Brent on the cofactor.  Throws InputError
// when a prime factor exceeds the deterministic Miller-Rabin range (~3.3e24) or a
// composite cofactor cannot be split within the iteration budget.
std::vector<PrimePower> factor(const mpz_class& n);
std::vector<mpz_class> prime_divisors(const mpz_class& n);

// Deterministic below 3.3e24; throws InputError above.
bool is_prime(const mpz_class& n);

// v_p(n) for n != 0.
unsigned valuation(const mpz_class& n, const mpz_class& p);
// v_p(q) for q != 0.
long valuation(const mpq_class& q, const mpz_class& p);

bool is_squarefree(const mpz_class& n);

mpz_class pow_ui(const mpz_class& base, unsigned long e);
// Inverse of a modulo m (gcd(a, m) = 1 required).
mpz_class inverse_mod(const mpz_class& a, const mpz_class& m);

}  // namespace toric
