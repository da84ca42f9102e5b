#include "toricapprox/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

std::vector<IntVec> Fan::cone_rays(const Cone& c) const {
  std::vector<IntVec> out;
  for (auto i : c) out.push_back(rays.at(i));
  return out;
}

bool is_primitive(const IntVec& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g == 1;
}

namespace {

bool subset_of(const Cone& a, const Cone& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// x in cone(sigma) ∩ cone(tau) with positive weight off the common face.
bool overlaps_beyond_face(const Fan& f, const Cone& sigma, const Cone& tau) {
  Cone common;
  std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(), std::back_inserter(common));
  const std::size_t k1 = sigma.size(), k2 = tau.size(), d = f.dim;
  std::vector<RatVec> rows(d + 1, RatVec(k1 + k2));
  RatVec b(d + 1);
  for (std::size_t j = 0; j < k1; ++j) {
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = f.rays[sigma[j]][i];
    if (!std::binary_search(common.begin(), common.end(), sigma[j])) rows[d][j] = 1;
  }
  for (std::size_t j = 0; j < k2; ++j)
    for (std::size_t i = 0; i < d; ++i) rows[i][k1 + j] = -f.rays[tau[j]][i];
  b[d] = 1;
  return lp_feasible(rows, b, k1 + k2).has_value();
}

}  // namespace

FanDiagnostics fan_validate(const Fan& f) {
  FanDiagnostics diag;
  auto err = [&](std::string s) { diag.errors.push_back(std::move(s)); };
  if (f.dim == 0) err("dimension must be at least 1");
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    if (f.rays[i].size() != f.dim) {
      err("ray " + std::to_string(i) + " has wrong length");
      continue;
    }
    if (!is_primitive(f.rays[i])) err("non-primitive ray " + std::to_string(i) + " " + to_string(f.rays[i]));
    for (std::size_t j = 0; j < i; ++j)
      if (f.rays[j] == f.rays[i]) err("duplicate rays " + std::to_string(j) + " and " + std::to_string(i));
  }
  if (!diag.ok()) return diag;
  std::vector<bool> used(f.rays.size(), false);
  bool cones_ok = true;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const Cone& cone = f.max_cones[c];
    const std::string tag = "cone " + std::to_string(c);
    if (cone.empty()) {
      err(tag + " is empty");
      cones_ok = false;
      continue;
    }
    if (!std::is_sorted(cone.begin(), cone.end()) || std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      err(tag + " indices not strictly increasing");
      cones_ok = false;
      continue;
    }
    if (cone.back() >= f.rays.size()) {
      err(tag + " references a missing ray");
      cones_ok = false;
      continue;
    }
    for (auto i : cone) used[i] = true;
    if (cone.size() > f.dim || rank(IntMatrix::from_columns(f.cone_rays(cone), f.dim)) != cone.size()) {
      err(tag + " is not simplicial (rays linearly dependent)");
      cones_ok = false;
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) err("ray " + std::to_string(i) + " lies in no maximal cone");
  if (!cones_ok) return diag;
  for (std::size_t a = 0; a < f.max_cones.size(); ++a)
    for (std::size_t b = 0; b < f.max_cones.size(); ++b) {
      if (a == b) continue;
      if (subset_of(f.max_cones[a], f.max_cones[b])) {
        if (a < b || f.max_cones[a] != f.max_cones[b])
          err("cone " + std::to_string(a) + " is not maximal (contained in cone " + std::to_string(b) + ")");
        continue;
      }
      if (a < b && overlaps_beyond_face(f, f.max_cones[a], f.max_cones[b]))
        err("cones " + std::to_string(a) + " and " + std::to_string(b) + " intersect in a non-face");
    }
  return diag;
}

void require_valid(const Fan& f) {
  auto d = fan_validate(f);
  if (d.ok()) return;
  std::string msg = "invalid fan:";
  for (const auto& e : d.errors) msg += " " + e + ";";
  throw InputError(msg);
}

bool is_smooth(const Fan& f) {
  for (const auto& c : f.max_cones)
    if (!is_unimodular_cone(f.cone_rays(c), f.dim)) return false;
  return true;
}

bool is_complete(const Fan& f) {
  for (const auto& c : f.max_cones)
    if (c.size() != f.dim) throw InputError("completeness undecided for non-pure fan");
  std::map<Cone, int> walls;
  for (const auto& c : f.max_cones)
    for (std::size_t k = 0; k < c.size(); ++k) {
      Cone w = c;
      w.erase(w.begin() + static_cast<long>(k));
      ++walls[w];
    }
  if (walls.empty()) return false;
  return std::all_of(walls.begin(), walls.end(), [](const auto& kv) { return kv.second == 2; });
}

bool is_cone_of(const Fan& f, const Cone& c) {
  return std::any_of(f.max_cones.begin(), f.max_cones.end(), [&](const Cone& m) { return subset_of(c, m); });
}

Fan projective_space(std::size_t n) {
  if (n < 1) throw InputError("projective_space: n must be >= 1");
  Fan f;
  f.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    f.rays.push_back(e);
  }
  f.rays.push_back(IntVec(n, mpz_class(-1)));
  for (std::size_t skip = n + 1; skip-- > 0;) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    f.max_cones.push_back(c);
  }
  return f;
}

Fan product(const Fan& f, const Fan& g) {
  Fan p;
  p.dim = f.dim + g.dim;
  for (const auto& r : f.rays) {
    IntVec v = r;
    v.resize(p.dim);
    p.rays.push_back(v);
  }
  for (const auto& r : g.rays) {
    IntVec v(f.dim);
    v.insert(v.end(), r.begin(), r.end());
    p.rays.push_back(v);
  }
  for (const auto& a : f.max_cones)
    for (const auto& b : g.max_cones) {
      Cone c = a;
      for (auto j : b) c.push_back(j + f.rays.size());
      p.max_cones.push_back(c);
    }
  return p;
}

Fan hirzebruch(long r) {
  if (r < 0) throw InputError("hirzebruch: r must be >= 0");
  return Fan{2, {int_vec({-1, r}), int_vec({0, 1}), int_vec({1, 0}), int_vec({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
}

Fan weighted_P11r(long r) {
  if (r < 1) throw InputError("weighted_P11r: r must be >= 1");
  return Fan{2, {int_vec({-1, r}), int_vec({1, 0}), int_vec({0, -1})}, {{0, 1}, {1, 2}, {0, 2}}};
}

Fan affine_space(std::size_t d) {
  if (d < 1) throw InputError("affine_space: d must be >= 1");
  Fan f;
  f.dim = d;
  Cone c;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e(d);
    e[i] = 1;
    f.rays.push_back(e);
    c.push_back(i);
  }
  f.max_cones.push_back(c);
  return f;
}

QuotientStructure class_group(const Fan& f) {
  IntMatrix rays = IntMatrix::from_columns(f.rays, f.dim);
  if (rank(rays) != f.dim) throw InputError("class_group: rays do not span the ambient space");
  QuotientStructure q;
  q.free_rank = f.rays.size() - f.dim;
  for (const auto& d : snf(rays.transpose()).diagonal())
    if (d > 1) q.invariant_factors.push_back(d);
  // Torsion must agree with N / (ray lattice).
  auto alt = quotient_invariants(lattice_from_generators(f.rays, f.dim), f.dim);
  if (alt.invariant_factors != q.invariant_factors) throw ComputationDefect("class_group: torsion cross-check failed");
  return q;
}

RefinementMap identity_refinement(const Fan& f) {
  RefinementMap r{f, f, {}};
  for (std::size_t i = 0; i < f.rays.size(); ++i) r.ray_embedding.push_back(i);
  return r;
}

RefinementMap compose(const RefinementMap& fine_to_mid, const RefinementMap& mid_to_coarse) {
  if (!(fine_to_mid.target == mid_to_coarse.source)) throw InputError("compose: refinements do not chain");
  RefinementMap r{fine_to_mid.source, mid_to_coarse.target, {}};
  for (auto i : mid_to_coarse.ray_embedding) r.ray_embedding.push_back(fine_to_mid.ray_embedding.at(i));
  return r;
}

RefinementMap stellar_subdivide(const Fan& f, const IntVec& new_ray) {
  if (new_ray.size() != f.dim) throw InputError("stellar_subdivide: dimension mismatch");
  if (!is_primitive(new_ray)) throw InputError("stellar_subdivide: new ray is not primitive");
  if (std::find(f.rays.begin(), f.rays.end(), new_ray) != f.rays.end())
    throw InputError("stellar_subdivide: ray already present");
  auto tau = minimal_cone_containing(f, new_ray);
  if (!tau) throw InputError("stellar_subdivide: ray outside the support of the fan");
  Fan g = f;
  const std::size_t v = f.rays.size();
  g.rays.push_back(new_ray);
  g.max_cones.clear();
  for (const auto& sigma : f.max_cones) {
    if (!subset_of(*tau, sigma)) {
      g.max_cones.push_back(sigma);
      continue;
    }
    for (auto rho : *tau) {
      Cone c;
      for (auto j : sigma)
        if (j != rho) c.push_back(j);
      c.push_back(v);
      g.max_cones.push_back(c);
    }
  }
  RefinementMap r = identity_refinement(f);
  r.source = g;
  return r;
}

RefinementMap resolve_2d(const Fan& f) {
  if (f.dim != 2) throw InputError("resolve_2d: fan must be 2-dimensional");
  require_valid(f);
  RefinementMap acc = identity_refinement(f);
  for (;;) {
    const Fan& cur = acc.source;
    std::optional<IntVec> next;
    for (const auto& c : cur.max_cones) {
      if (c.size() < 2) continue;
      const IntVec &u = cur.rays[c[0]], &w = cur.rays[c[1]];
      mpz_class det = u[0] * w[1] - u[1] * w[0];
      mpz_class d = abs(det);
      if (d == 1) continue;
      for (mpz_class k = 1; k < d; ++k) {
        mpz_class x = w[0] + k * u[0], y = w[1] + k * u[1];
        if (x % d == 0 && y % d == 0) {
          next = IntVec{x / d, y / d};
          break;
        }
      }
      if (!next) throw ComputationDefect("resolve_2d: no Hirzebruch-Jung step found");
      break;
    }
    if (!next) break;
    acc = compose(stellar_subdivide(cur, *next), acc);
  }
  return acc;
}

std::optional<CartierData> cartier_data(const Fan& f, std::size_t i) {
  if (i >= f.rays.size()) throw InputError("cartier_data: ray index out of range");
  CartierData cd{i, {}};
  for (const auto& c : f.max_cones) {
    if (!std::binary_search(c.begin(), c.end(), i)) {
      cd.per_max_cone.push_back(IntVec(f.dim));
      continue;
    }
    IntVec rhs;
    for (auto j : c) rhs.emplace_back(j == i ? 1 : 0);
    auto m = solve_integral(IntMatrix::from_rows(f.cone_rays(c), f.dim), rhs);
    if (!m) return std::nullopt;
    cd.per_max_cone.push_back(*m);
  }
  return cd;
}

namespace {

mpz_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::size_t max_cone_containing(const Fan& f, const std::vector<IntVec>& vs) {
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    auto gens = f.cone_rays(f.max_cones[c]);
    if (std::all_of(vs.begin(), vs.end(), [&](const IntVec& v) { return cone_contains(gens, v); })) return c;
  }
  return f.max_cones.size();
}

}  // namespace

InverseImage inverse_image_coefficients(const RefinementMap& r, std::size_t i, long max_box) {
  const Fan &src = r.source, &tgt = r.target;
  if (i >= tgt.rays.size()) throw InputError("inverse_image_coefficients: ray index out of range");
  if (!is_smooth(src)) throw InputError("inverse_image_coefficients: source fan must be smooth");
  InverseImage out;
  out.coefficients.assign(src.rays.size(), 0);
  if (auto cd = cartier_data(tgt, i)) {
    out.via_cartier = true;
    out.principal = true;
    for (std::size_t b = 0; b < src.rays.size(); ++b) {
      std::size_t c = max_cone_containing(tgt, {src.rays[b]});
      if (c == tgt.max_cones.size()) throw InputError("inverse_image_coefficients: source ray outside target support");
      out.coefficients[b] = dot(cd->per_max_cone[c], src.rays[b]);
    }
    return out;
  }
  const std::size_t d = src.dim;
  std::vector<bool> seen(src.rays.size(), false);
  for (const auto& st : src.max_cones) {
    std::size_t c = max_cone_containing(tgt, src.cone_rays(st));
    if (c == tgt.max_cones.size()) throw InputError("inverse_image_coefficients: source cone not inside a target cone");
    const Cone& sigma = tgt.max_cones[c];
    std::vector<mpz_class> minima(st.size());
    if (!std::binary_search(sigma.begin(), sigma.end(), i)) {
      // m = 0 is feasible and optimal.
    } else {
      // Constraint values s = B m lie in the lattice L = B Z^d, which contains D Z^k
      // (D = index of L).  Lowering any s_j by D keeps feasibility and does not raise
      // an objective with nonnegative weights, so optima occur with
      // delta_j <= s_j < delta_j + D.  The search over that box is exhaustive.
      IntMatrix b_mat = IntMatrix::from_rows(tgt.cone_rays(sigma), d);
      const std::size_t k = sigma.size();
      mpz_class index = 1;
      for (const auto& x : snf(b_mat).diagonal()) index *= x;
      if (index > out.search_radius) out.search_radius = index;
      mpz_class volume = 1;
      for (std::size_t j = 0; j < k; ++j) volume *= index;
      if (volume > max_box) {
        out.diagnostic = "bound exhausted: search box of " + volume.get_str() + " points exceeds limit";
        return out;
      }
      IntVec delta;
      for (auto j : sigma) delta.emplace_back(j == i ? 1 : 0);
      std::vector<IntVec> feasible;
      IntVec off(k, 0);
      for (;;) {
        IntVec s(k);
        for (std::size_t j = 0; j < k; ++j) s[j] = delta[j] + off[j];
        if (auto m = solve_integral(b_mat, s)) feasible.push_back(*m);
        std::size_t pos = 0;
        while (pos < k && off[pos] + 1 == index) off[pos++] = 0;
        if (pos == k) break;
        ++off[pos];
      }
      if (feasible.empty()) throw ComputationDefect("inverse_image_coefficients: empty search box");
      for (std::size_t q = 0; q < st.size(); ++q) {
        minima[q] = dot(feasible[0], src.rays[st[q]]);
        for (const auto& fm : feasible) minima[q] = std::min(minima[q], mpz_class(dot(fm, src.rays[st[q]])));
      }
      bool certified = std::any_of(feasible.begin(), feasible.end(), [&](const IntVec& fm) {
        for (std::size_t q = 0; q < st.size(); ++q)
          if (dot(fm, src.rays[st[q]]) != minima[q]) return false;
        return true;
      });
      if (!certified) {
        out.diagnostic = "pullback ideal not principal on a source cone; subdivide further";
        return out;
      }
    }
    for (std::size_t k = 0; k < st.size(); ++k) {
      std::size_t b = st[k];
      if (seen[b] && out.coefficients[b] != minima[k]) {
        out.diagnostic = "pullback orders disagree along ray " + std::to_string(b) + "; subdivide further";
        return out;
      }
      seen[b] = true;
      out.coefficients[b] = minima[k];
    }
  }
  out.principal = true;
  return out;
}

std::optional<Cone> minimal_cone_containing(const Fan& f, const IntVec& v) {
  if (v.size() != f.dim) throw InputError("minimal_cone_containing: dimension mismatch");
  for (const auto& c : f.max_cones) {
    auto sol = solve_rational(IntMatrix::from_columns(f.cone_rays(c), f.dim), to_rat(v));
    if (!sol) continue;
    if (std::any_of(sol->begin(), sol->end(), [](const mpq_class& x) { return x < 0; })) continue;
    Cone face;
    for (std::size_t k = 0; k < c.size(); ++k)
      if ((*sol)[k] > 0) face.push_back(c[k]);
    return face;
  }
  return std::nullopt;
}

}  // namespace toric
