#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricapprox/points.hpp"

namespace toric {

struct Census {
  std::string pair;
  std::uint64_t height_bound = 0;
  std::uint64_t count = 0;
  std::vector<std::vector<mpz_class>> points;  // canonical forms, sorted
  std::string convention;
};

struct EnumerateOptions {
  bool keep_points = true;
  unsigned threads = 1;
};

// Coprime integer tuples with max |a_i| <= H, first nonzero coordinate positive,
// boundary points included.
Census enumerate_projective(const ToricPair& pair, std::uint64_t H, const EnumerateOptions& opts = {});

// Canonical form of an integer Cox tuple with nonzero entries: per-prime valuations
// moved into their cone, then the lexicographically smallest sign pattern with the
// same sign on every torus character.
std::vector<mpz_class> canonical_cox(const MultiplicityMap& map, const std::vector<mpz_class>& x);

// Orbits meeting the box of nonzero integer Cox tuples with |x_i| <= H.  Smooth
// complete fans with class group rank <= 2 only.
Census enumerate_toric(const ToricPair& pair, std::uint64_t H, const EnumerateOptions& opts = {});

// Arithmetic characterization of M-points on P^n, independent of the fan machinery.
// Throws InputError for multiplicity sets without one (weak Campana, custom).
bool projective_predicate(const MultiplicitySet& set, const std::vector<mpz_class>& a);

struct CrosscheckReport {
  std::uint64_t checked = 0;
  std::uint64_t divergences = 0;
  std::optional<std::vector<mpz_class>> first_divergence;
  bool fan_verdict = false;  // at the first divergence
  std::string to_string() const;
};
CrosscheckReport crosscheck(const ToricPair& pair, std::uint64_t H, unsigned threads = 1);

}  // namespace toric
