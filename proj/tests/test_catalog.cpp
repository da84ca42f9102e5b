#include "doctest.h"

#include "toricapprox/catalog.hpp"

using namespace toric;

namespace {

void golden(const std::string& name, const CatalogParams& p) {
  auto e = example_catalog(name, p);
  auto v = run_catalog_entry(e);
  INFO(e.description, " T_nonempty=", e.T_nonempty, " formula: ", e.formula);
  CHECK(to_string(v.holds) == to_string(e.expected));
}

}  // namespace

TEST_CASE("catalog anchors") {
  CatalogParams h;
  h.r = 2;
  h.m = {2, 2, 2, 2};
  CHECK(example_catalog("hirzebruch", h).expected == Holds::No);
  CatalogParams w;
  w.r = 2;
  w.m = {2, 3, 7};
  CHECK(example_catalog("p11r", w).expected == Holds::Yes);
  CatalogParams pn;
  pn.n = 3;
  pn.m = {2, 3, 5};
  CHECK(example_catalog("pn-darmon", pn).expected == Holds::Yes);
  CHECK_THROWS_AS(example_catalog("nonexistent", {}), InputError);
  h.m = {2, 2};
  CHECK_THROWS_AS(example_catalog("hirzebruch", h), InputError);
}

TEST_CASE("golden: every entry matches the live pipeline") {
  const std::vector<std::uint64_t> small = {1, 2, 3, 4};
  for (bool T : {true, false}) {
    for (long r = 0; r <= 3; ++r)
      for (auto a : small)
        for (auto b : small)
          for (auto c : {1ul, 2ul, 3ul})
            for (auto d : {1ul, 2ul}) {
              CatalogParams p;
              p.r = r;
              p.m = {a, b, c, d};
              p.T_nonempty = T;
              golden("hirzebruch", p);
            }
    for (long r = 1; r <= 3; ++r)
      for (auto a : small)
        for (auto b : small)
          for (auto c : small) {
            CatalogParams p;
            p.r = r;
            p.m = {a, b, c};
            p.T_nonempty = T;
            golden("p11r", p);
          }
    const ExtVec vals = {1, 2, 3, 5, 6, ExtNat::infinity()};
    for (auto& a : vals)
      for (auto& b : vals)
        for (auto& c : vals) {
          CatalogParams p;
          p.n = 3;
          p.m = {a, b, c};
          p.T_nonempty = T;
          golden("pn-darmon", p);
        }
    for (std::size_t d = 1; d <= 3; ++d) {
      CatalogParams p;
      p.d = d;
      p.T_nonempty = T;
      golden("affine-space", p);
    }
  }
}
