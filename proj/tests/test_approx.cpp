#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "toricapprox/approx.hpp"
#include "toricapprox/arith.hpp"

using namespace toric;

namespace {

// v_p(f/x - 1) >= k, recomputed from scratch.
bool close(const mpq_class& f, const mpq_class& x, long p, unsigned k) {
  mpq_class d = f / x - 1;
  if (d == 0) return true;
  mpz_class num = d.get_num(), den = d.get_den();
  long v = 0;
  while (num % p == 0) num /= p, ++v;
  while (den % p == 0) den /= p, --v;
  return v >= static_cast<long>(k);
}

}  // namespace

TEST_CASE("squarefree lifting examples") {
  CHECK(squarefree_approximate({{2, 1, 3}}, 1).front().f == 17);
  CHECK(squarefree_approximate({{3, 2, 2}}, 1).front().f == 11);
  CHECK(squarefree_approximate({}, 1).front().f == 1);
  auto three = squarefree_approximate({}, 3);
  CHECK(three[0].n == 1);
  CHECK(three[1].n == 2);
  CHECK(three[2].n == 3);
  // negative valuation goes into the prefix
  auto l = squarefree_approximate({{5, mpq_class(7, 25), 2}}, 1).front();
  CHECK(l.prefix == mpq_class(1, 25));
  CHECK(close(l.f, mpq_class(7, 25), 5, 2));
  // seed shifts the scan deterministically
  CHECK(squarefree_approximate({{2, 1, 3}}, 1, {{}, 1, std::nullopt}).front().f == 17);
  CHECK(squarefree_approximate({{2, 1, 3}}, 1, {{}, 2, std::nullopt}).front().f == 33);
  CHECK_THROWS_AS(squarefree_approximate({{2, 1, 3}}, 1, {{}, 0, 1}), ComputationDefect);
  CHECK_THROWS_AS(squarefree_approximate({{4, 1, 3}}, 1), InputError);
}

TEST_CASE("random squarefree lifting instances recheck") {
  std::mt19937_64 rng(3);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<LocalConstraint> cs;
    std::vector<long> ps(std::begin(primes), std::end(primes));
    std::shuffle(ps.begin(), ps.end(), rng);
    std::size_t k = rng() % 4;
    for (std::size_t i = 0; i < k; ++i) {
      long num = static_cast<long>(rng() % 200) + 1, den = static_cast<long>(rng() % 50) + 1;
      cs.push_back({ps[i], mpq_class(rng() % 2 ? num : -num, den), static_cast<unsigned>(rng() % 4 + 1)});
      cs.back().target.canonicalize();
    }
    std::size_t R = rng() % 3 + 1;
    auto out = squarefree_approximate(cs, R);
    REQUIRE(out.size() == R);
    for (std::size_t a = 0; a < R; ++a) {
      CHECK(oracle::is_squarefree(out[a].n.get_si()));
      for (auto& c : cs) CHECK(close(out[a].f, c.target, c.p.get_si(), c.digits));
      for (std::size_t b = a + 1; b < R; ++b) CHECK(gcd(out[a].n, out[b].n) == 1);
    }
  }
}

TEST_CASE("Gamma construction") {
  ToricPair c{projective_space(1), MultiplicitySet::campana({2, 2})};
  auto g = build_gamma(c);
  REQUIRE(g.generators.size() == 4);
  CHECK(g.gamma == IntMatrix{{2, 3, -2, -3}});
  ToricPair c3{projective_space(2), MultiplicitySet::campana({2, 2, 2})};
  auto g3 = build_gamma(c3);
  CHECK(g3.generators.size() == 6);
  CHECK(g3.gamma * g3.right_inverse == IntMatrix::identity(2));
  CHECK_THROWS_AS(build_gamma({projective_space(1), MultiplicitySet::darmon({2, 2})}), InputError);
}

TEST_CASE("local exponents recombine to the target") {
  ToricPair c{projective_space(1), MultiplicitySet::campana({2, 2})};
  auto g = build_gamma(c);
  auto t = CoxPoint::from_ints({4, 9});
  auto e = solve_local_exponents(c, g, 3, t);
  CHECK(torus_characters(c.fan, recombine(g, e)) == torus_characters(c.fan, t));
  ToricPair h{hirzebruch(2), MultiplicitySet::campana({2, 2, 2, 2})};
  auto gh = build_gamma(h);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    CoxPoint P;
    for (int k = 0; k < 4; ++k) P.coords.emplace_back(static_cast<long>(rng() % 30) + 1, static_cast<long>(rng() % 7) + 1);
    for (auto& q : P.coords) q.canonicalize();
    auto x = solve_local_exponents(h, gh, 2, P);
    CHECK(torus_characters(h.fan, recombine(gh, x)) == torus_characters(h.fan, P));
  }
}

TEST_CASE("M-point approximation") {
  ToricPair c{projective_space(1), MultiplicitySet::campana({2, 2})};
  TargetMap tm;
  tm[3] = {CoxPoint::from_ints({1, 1}), 1};
  auto cert = m_point_approximate(c, tm);
  CHECK(cert.verified);
  const auto& Q = cert.point;
  CHECK(oracle::is_m_full(Q.coords[0].get_num().get_si(), 2));
  CHECK(close(Q.coords[0] / Q.coords[1], 1, 3, 1));

  ToricPair c3{projective_space(2), MultiplicitySet::campana({2, 2, 2})};
  TargetMap t3;
  t3[2] = {CoxPoint::from_ints({1, 3, 5}), 2};
  t3[3] = {CoxPoint::from_ints({2, 1, 7}), 2};
  t3[5] = {CoxPoint{{mpq_class(1, 5), mpq_class(2), mpq_class(3)}}, 2};
  auto cert3 = m_point_approximate(c3, t3);
  CHECK(cert3.verified);
  // independent recheck
  CHECK(verify_approximation(c3, t3, cert3.point).verified);
  // same input, same output
  CHECK(m_point_approximate(c3, t3).point.coords == cert3.point.coords);

  auto empty = m_point_approximate(c3, {});
  CHECK(empty.point.coords == std::vector<mpq_class>(3, mpq_class(1)));
  CHECK(empty.verified);

  ToricPair h{hirzebruch(1), MultiplicitySet::campana({2, 3, 2, 3})};
  TargetMap th;
  th[7] = {CoxPoint::from_ints({2, 3, 5, 7}), 2};
  CHECK(m_point_approximate(h, th).verified);
}
