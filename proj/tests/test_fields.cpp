#include "doctest.h"

#include "toricapprox/fields.hpp"

using namespace toric;

TEST_CASE("rho of global fields is trivial") {
  auto q = rho_of(FieldDescriptor::rationals());
  CHECK(rho_contains(q, 1));
  for (long n = 2; n <= 50; ++n) CHECK_FALSE(rho_contains(q, n));
  CHECK(rho_membership(q, 2) == Tri::No);
  auto g = rho_of(FieldDescriptor::global_function_field(9));
  CHECK(g.is_trivial());
  CHECK(!q.note.empty());
  CHECK(!g.note.empty());
  CHECK_THROWS_AS(rho_of(FieldDescriptor::global_function_field(12)), InputError);
}

TEST_CASE("rho over function fields") {
  auto sc5 = rho_of(FieldDescriptor::function_field(BaseClass::SeparablyClosed, 5));
  CHECK(rho_contains(sc5, 6));
  CHECK_FALSE(rho_contains(sc5, 10));
  CHECK(rho_contains(rho_of(FieldDescriptor::function_field(BaseClass::SeparablyClosed, 0)), 10));

  auto rc = rho_of(FieldDescriptor::function_field(BaseClass::RealClosed, 0, true));
  CHECK(rho_contains(rc, 3));
  CHECK_FALSE(rho_contains(rc, 2));
  auto rc_no = rho_of(FieldDescriptor::function_field(BaseClass::RealClosed, 0, false));
  CHECK(rho_contains(rc_no, 2));
  CHECK_THROWS_AS(rho_of(FieldDescriptor::function_field(BaseClass::RealClosed, 0)), InputError);
  CHECK_THROWS_AS(rho_of(FieldDescriptor::function_field(BaseClass::RealClosed, 3, true)), InputError);

  auto pc = FieldDescriptor::function_field(BaseClass::PClosed, 3);
  pc.closed_primes = {2, 3, 7};
  auto r = rho_of(pc);
  CHECK(rho_contains(r, 14));
  CHECK_FALSE(rho_contains(r, 3));
  CHECK_FALSE(rho_contains(r, 5));

  auto he = rho_of(FieldDescriptor::function_field(BaseClass::HereditarilyEuclidean, 0, false));
  CHECK(rho_contains(he, 4));
  CHECK(rho_membership(he, 3) == Tri::Unknown);

  auto other = rho_of(FieldDescriptor::function_field(BaseClass::Other, 0));
  CHECK(other.is_trivial());
  CHECK_FALSE(other.exact);
  CHECK(rho_membership(other, 2) == Tri::Unknown);
  CHECK(other.note.find("conservative") != std::string::npos);
}

TEST_CASE("rho_contains is multiplicative") {
  std::vector<RhoSpec> specs = {
      rho_of(FieldDescriptor::rationals()),
      rho_of(FieldDescriptor::function_field(BaseClass::SeparablyClosed, 5)),
      rho_of(FieldDescriptor::function_field(BaseClass::RealClosed, 0, true)),
      rho_of(FieldDescriptor::function_field(BaseClass::SeparablyClosed, 0)),
  };
  for (auto& s : specs)
    for (long a = 1; a <= 40; ++a)
      for (long b = 1; b <= 40; ++b)
        CHECK((rho_contains(s, a) && rho_contains(s, b)) == rho_contains(s, a * b));
}

TEST_CASE("default flags") {
  auto q = default_flags(FieldDescriptor::rationals(), 0);
  CHECK(q.pic_C_finitely_generated == Tri::Yes);
  CHECK(q.gm_B_finite == Tri::Yes);
  CHECK(default_flags(FieldDescriptor::rationals(), 1).gm_B_finite == Tri::No);
  CHECK(default_flags(FieldDescriptor::number(NumberFieldClass::ImaginaryQuadratic)).gm_B_finite == Tri::Yes);
  CHECK(default_flags(FieldDescriptor::number(NumberFieldClass::Other)).gm_B_finite == Tri::No);

  auto g = FieldDescriptor::global_function_field(7);
  CHECK(default_flags(g, 1).gm_B_finite == Tri::Yes);
  CHECK(default_flags(g, 2).gm_B_finite == Tri::No);
  CHECK(default_flags(g, 1).unit_quotient_finite_at(6) == Tri::Yes);

  auto sc = default_flags(FieldDescriptor::function_field(BaseClass::SeparablyClosed, 5));
  CHECK(sc.pic_C_finitely_generated == Tri::Unknown);
  CHECK(sc.gm_B_finite == Tri::No);
  CHECK(sc.unit_quotient_finite_at(4) == Tri::Yes);
  CHECK(sc.unit_quotient_finite_at(10) == Tri::Unknown);

  auto he = default_flags(FieldDescriptor::function_field(BaseClass::HereditarilyEuclidean, 0, false));
  CHECK(he.unit_quotient_finite_at(8) == Tri::Yes);
  CHECK(he.unit_quotient_finite_at(3) == Tri::Unknown);

  auto fin = FieldDescriptor::function_field(BaseClass::Finite, 3);
  CHECK(default_flags(fin).pic_C_finitely_generated == Tri::Yes);
  auto ov = FieldDescriptor::function_field(BaseClass::SeparablyClosed, 0);
  ov.pic_fg_override = true;
  CHECK(default_flags(ov).pic_C_finitely_generated == Tri::Yes);
}
