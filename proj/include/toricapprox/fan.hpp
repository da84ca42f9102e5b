#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricapprox/intlat.hpp"

namespace toric {

using Cone = std::vector<std::size_t>;  // sorted ray indices

struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<Cone> max_cones;

  std::size_t ray_count() const { return rays.size(); }
  std::vector<IntVec> cone_rays(const Cone& c) const;
  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim == b.dim && a.rays == b.rays && a.max_cones == b.max_cones;
  }
};

struct FanDiagnostics {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

FanDiagnostics fan_validate(const Fan& f);
// Throws InputError listing the diagnostics.
void require_valid(const Fan& f);

bool is_smooth(const Fan& f);
// Throws InputError for non-pure fans (completeness undecided).
bool is_complete(const Fan& f);
// Cones of the fan (all faces), as sorted index sets.
bool is_cone_of(const Fan& f, const Cone& c);

Fan projective_space(std::size_t n);
Fan product(const Fan& f, const Fan& g);
Fan hirzebruch(long r);
Fan weighted_P11r(long r);
Fan affine_space(std::size_t d);

QuotientStructure class_group(const Fan& f);

struct RefinementMap {
  Fan source;  // the refinement
  Fan target;
  std::vector<std::size_t> ray_embedding;  // target ray index -> source ray index
};

RefinementMap identity_refinement(const Fan& f);
// fine -> mid composed with mid -> coarse.
RefinementMap compose(const RefinementMap& fine_to_mid, const RefinementMap& mid_to_coarse);
RefinementMap stellar_subdivide(const Fan& f, const IntVec& new_ray);
RefinementMap resolve_2d(const Fan& f);

struct CartierData {
  std::size_t divisor_index = 0;
  std::vector<IntVec> per_max_cone;
};
std::optional<CartierData> cartier_data(const Fan& f, std::size_t i);

struct InverseImage {
  bool principal = false;
  bool via_cartier = false;
  IntVec coefficients;  // per source ray, when principal
  mpz_class search_radius = 0;  // largest cone index used as the per-constraint box side
  std::string diagnostic;
};
InverseImage inverse_image_coefficients(const RefinementMap& r, std::size_t i, long max_box = 1000000);

std::optional<Cone> minimal_cone_containing(const Fan& f, const IntVec& v);

bool is_primitive(const IntVec& v);

}  // namespace toric
