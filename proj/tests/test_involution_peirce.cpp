#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <string>
#include <vector>

#include "ringwb/involution.hpp"
#include "ringwb/peirce.hpp"
#include "ringwb/ring.hpp"

using namespace ringwb;

namespace {

AntiAutomorphism builtin_validated(const FiniteRing& r, InvolutionFamily f) {
  return validate_antiautomorphism(r, builtin_involution(r, f), true);
}

}  // namespace

TEST_CASE("identity map is an involution on commutative rings") {
  FiniteRing z6 = make_zmod(6);
  AntiAutomorphism s = builtin_validated(z6, InvolutionFamily::identity);
  CHECK(s.is_involution);
}

TEST_CASE("identity map fails anti-multiplicativity on m2(2)") {
  FiniteRing m = make_m2(2);
  std::vector<elem_t> id(m.size());
  std::iota(id.begin(), id.end(), 0);
  try {
    validate_antiautomorphism(m, id);
    FAIL("expected axiom_violation");
  } catch (const axiom_violation& e) {
    CHECK(std::string(e.what()).find("anti-multiplicativity violated") !=
          std::string::npos);
  }
}

TEST_CASE("neg_b involution on dual(6)") {
  FiniteRing d = make_dual(6);
  AntiAutomorphism s = builtin_validated(d, InvolutionFamily::neg_b_dual);
  CHECK(s.is_involution);
  CHECK(s(dual_index(6, 3, 0)) == dual_index(6, 3, 0));  // e is symmetric
  CHECK(s(dual_index(6, 2, 4)) == dual_index(6, 2, 2));  // (2,-4) = (2,2)
}

TEST_CASE("adjugate involution on m2(5)") {
  FiniteRing m = make_m2(5);
  AntiAutomorphism s = builtin_validated(m, InvolutionFamily::adjugate_m2);
  CHECK(s.is_involution);
  // [[1,2],[3,4]]* = [[4,-2],[-3,1]] = [[4,3],[2,1]] mod 5
  CHECK(s(m2_index(5, 1, 2, 3, 4)) == m2_index(5, 4, 3, 2, 1));
}

TEST_CASE("transpose involution on m2(2) and m2(3)") {
  for (std::size_t n : {2, 3}) {
    FiniteRing m = make_m2(n);
    AntiAutomorphism s = builtin_validated(m, InvolutionFamily::transpose_m2);
    CHECK(s.is_involution);
    CHECK(s(m2_index(n, 0, 1, 0, 0)) == m2_index(n, 0, 0, 1, 0));
  }
}

TEST_CASE("bad permutations rejected") {
  FiniteRing z4 = make_zmod(4);
  CHECK_THROWS_AS(validate_antiautomorphism(z4, {0, 1, 2}), invalid_input);
  CHECK_THROWS_AS(validate_antiautomorphism(z4, {0, 1, 2, 2}), invalid_input);
}

TEST_CASE("anti-automorphism that is not an involution") {
  // Cyclic coordinate shift on Z2 x Z2 x Z2: an order-3 ring automorphism,
  // hence (commutativity) an anti-automorphism, but not self-inverse.
  FiniteRing z2 = make_zmod(2);
  FiniteRing p = make_product(make_product(z2, z2), z2);
  REQUIRE(p.size() == 8);
  std::vector<elem_t> shift(8);
  for (std::size_t a0 = 0; a0 < 2; ++a0)
    for (std::size_t a1 = 0; a1 < 2; ++a1)
      for (std::size_t b = 0; b < 2; ++b)
        shift[(a0 * 2 + a1) * 2 + b] =
            static_cast<elem_t>((b * 2 + a0) * 2 + a1);
  AntiAutomorphism s = validate_antiautomorphism(p, shift);
  CHECK_FALSE(s.is_involution);
  CHECK_THROWS_AS(validate_antiautomorphism(p, shift, true), axiom_violation);
}

TEST_CASE("builtin family mismatch") {
  CHECK_THROWS_AS(builtin_involution(make_zmod(6), InvolutionFamily::neg_b_dual),
                  invalid_input);
  CHECK_THROWS_AS(
      builtin_involution(make_dual(2), InvolutionFamily::transpose_m2),
      invalid_input);
}

TEST_CASE("find_idempotents on dual(6)") {
  FiniteRing d = make_dual(6);
  AntiAutomorphism s = builtin_validated(d, InvolutionFamily::neg_b_dual);

  std::vector<elem_t> expected;  // oracle: direct scan of all 36 elements
  for (std::size_t x = 0; x < d.size(); ++x) {
    elem_t e = static_cast<elem_t>(x);
    if (d.mul(e, e) == e && e != d.zero() && e != *d.unity() && s(e) == e)
      expected.push_back(e);
  }
  auto got = find_idempotents(d, true, &s);
  CHECK(got == expected);
  CHECK(got == std::vector<elem_t>{dual_index(6, 3, 0), dual_index(6, 4, 0)});
}

TEST_CASE("find_idempotents edge cases") {
  CHECK(find_idempotents(make_dual(2)).empty());
  CHECK(find_idempotents(make_zmod(6)) == std::vector<elem_t>{3, 4});
  FiniteRing m = make_m2(2);
  AntiAutomorphism tr = builtin_validated(m, InvolutionFamily::transpose_m2);
  auto sym = find_idempotents(m, true, &tr);
  CHECK(std::find(sym.begin(), sym.end(), m2_index(2, 1, 0, 0, 0)) != sym.end());
  CHECK_THROWS_AS(find_idempotents(m, true, nullptr), invalid_input);
}

TEST_CASE("frame validation") {
  FiniteRing m = make_m2(2);
  AntiAutomorphism tr = builtin_validated(m, InvolutionFamily::transpose_m2);
  const elem_t e11 = m2_index(2, 1, 0, 0, 0);
  CHECK_NOTHROW(make_frame(m, e11, tr));
  CHECK_THROWS_AS(make_frame(m, m.zero(), tr), invalid_input);
  CHECK_THROWS_AS(make_frame(m, *m.unity(), tr), invalid_input);
  CHECK_THROWS_AS(make_frame(m, m2_index(2, 0, 1, 0, 0), tr), invalid_input);
  // [[1,1],[0,0]] is idempotent but not symmetric under transpose.
  const elem_t a = m2_index(2, 1, 1, 0, 0);
  REQUIRE(m.mul(a, a) == a);
  CHECK_THROWS_AS(make_frame(m, a, tr), invalid_input);
  CHECK_NOTHROW(make_frame(m, a));  // fine without an involution
}

TEST_CASE("peirce split on m2(2), e = E11") {
  FiniteRing m = make_m2(2);
  PeirceFrame f = make_frame(m, m2_index(2, 1, 0, 0, 0));
  PeirceSplit s = peirce_project(f, m2_index(2, 1, 1, 1, 1));
  CHECK(s.x11 == m2_index(2, 1, 0, 0, 0));
  CHECK(s.x12 == m2_index(2, 0, 1, 0, 0));
  CHECK(s.x21 == m2_index(2, 0, 0, 1, 0));
  CHECK(s.x22 == m2_index(2, 0, 0, 0, 1));

  PeirceSplit z = peirce_project(f, m.zero());
  CHECK((z.x11 == m.zero() && z.x12 == m.zero() && z.x21 == m.zero() &&
         z.x22 == m.zero()));
}

TEST_CASE("peirce split on dual(6), e = (3,0)") {
  FiniteRing d = make_dual(6);
  PeirceFrame f = make_frame(d, dual_index(6, 3, 0));
  PeirceSplit s = peirce_project(f, dual_index(6, 1, 1));
  CHECK(s.x11 == dual_index(6, 3, 3));
  CHECK(s.x12 == d.zero());
  CHECK(s.x21 == d.zero());
  CHECK(s.x22 == dual_index(6, 4, 4));
  CHECK(d.add(d.add(s.x11, s.x12), d.add(s.x21, s.x22)) == dual_index(6, 1, 1));
}

namespace {

std::vector<PeirceFrame> standard_frames(const FiniteRing& m2z2,
                                         const FiniteRing& dual6,
                                         const AntiAutomorphism& tr,
                                         const AntiAutomorphism& nb) {
  return {make_frame(m2z2, m2_index(2, 1, 0, 0, 0), tr),
          make_frame(dual6, dual_index(6, 3, 0), nb)};
}

}  // namespace

TEST_CASE("projection completeness, idempotence, component multiplication") {
  FiniteRing m2z2 = make_m2(2), dual6 = make_dual(6);
  AntiAutomorphism tr = builtin_validated(m2z2, InvolutionFamily::transpose_m2);
  AntiAutomorphism nb = builtin_validated(dual6, InvolutionFamily::neg_b_dual);
  for (const PeirceFrame& f : standard_frames(m2z2, dual6, tr, nb)) {
    const FiniteRing& r = *f.ring;
    for (std::size_t xi = 0; xi < r.size(); ++xi) {
      elem_t x = static_cast<elem_t>(xi);
      PeirceSplit s = peirce_project(f, x);
      REQUIRE(r.add(r.add(s.x11, s.x12), r.add(s.x21, s.x22)) == x);
      // pi_ij(pi_ij(x)) = pi_ij(x)
      REQUIRE(peirce_component(f, s.x11, 1, 1) == s.x11);
      REQUIRE(peirce_component(f, s.x12, 1, 2) == s.x12);
      REQUIRE(peirce_component(f, s.x21, 2, 1) == s.x21);
      REQUIRE(peirce_component(f, s.x22, 2, 2) == s.x22);
    }
    // R_ij * R_kl = 0 for j != k, and lands in R_il for j = k.
    auto comps = all_components(f);
    for (int ci = 0; ci < 4; ++ci)
      for (int ck = 0; ck < 4; ++ck) {
        int i = ci / 2 + 1, j = ci % 2 + 1;
        int k = ck / 2 + 1, l = ck % 2 + 1;
        for (elem_t u : comps[ci])
          for (elem_t v : comps[ck]) {
            elem_t uv = r.mul(u, v);
            if (j != k)
              REQUIRE(uv == r.zero());
            else
              REQUIRE(in_component(f, uv, i, l));
          }
      }
  }
}

TEST_CASE("component membership") {
  FiniteRing m = make_m2(2);
  PeirceFrame f = make_frame(m, m2_index(2, 1, 0, 0, 0));
  ComponentFlags e12 = component_of(f, m2_index(2, 0, 1, 0, 0));
  CHECK((!e12.r11 && e12.r12 && !e12.r21 && !e12.r22));
  ComponentFlags z = component_of(f, m.zero());
  CHECK((z.r11 && z.r12 && z.r21 && z.r22));

  FiniteRing d = make_dual(6);
  PeirceFrame fd = make_frame(d, dual_index(6, 3, 0));
  CHECK(in_component(fd, dual_index(6, 3, 3), 1, 1));
}
