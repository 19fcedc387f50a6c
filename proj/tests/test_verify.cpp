#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "ringwb/involution.hpp"
#include "ringwb/maps.hpp"
#include "ringwb/peirce.hpp"
#include "ringwb/ring.hpp"
#include "ringwb/search.hpp"
#include "ringwb/verify.hpp"

using namespace ringwb;

namespace {

AntiAutomorphism builtin_validated(const FiniteRing& r, InvolutionFamily f) {
  return validate_antiautomorphism(r, builtin_involution(r, f), true);
}

RingMap sparse_map(const FiniteRing& r, elem_t at, elem_t value) {
  std::vector<elem_t> img(r.size(), r.zero());
  img[at] = value;
  return make_map(r, img);
}

}  // namespace

TEST_CASE("lemma 1: image of zero") {
  FiniteRing d = make_dual(6);
  CHECK(verify_lemma1(make_example2_map(d)).pass);
  CHECK(verify_lemma1(zero_map(d)).pass);
  RingMap bad = sparse_map(d, d.zero(), dual_index(6, 0, 1));
  CheckOutcome out = verify_lemma1(bad);
  CHECK_FALSE(out.pass);
  CHECK(out.witness.find("(0,1)") != std::string::npos);
}

TEST_CASE("lemma 2: component images") {
  FiniteRing d = make_dual(6);
  AntiAutomorphism nb = builtin_validated(d, InvolutionFamily::neg_b_dual);
  PeirceFrame fd = make_frame(d, dual_index(6, 3, 0), nb);
  CHECK(verify_lemma2(fd, make_example2_map(d)).pass);
  CHECK(verify_lemma2(fd, zero_map(d)).pass);

  // Negative control: send E11 into R12.
  FiniteRing m = make_m2(2);
  AntiAutomorphism tr = builtin_validated(m, InvolutionFamily::transpose_m2);
  PeirceFrame fm = make_frame(m, m2_index(2, 1, 0, 0, 0), tr);
  RingMap bad = sparse_map(m, m2_index(2, 1, 0, 0, 0), m2_index(2, 0, 1, 0, 0));
  CheckOutcome out = verify_lemma2(fm, bad);
  CHECK_FALSE(out.pass);
  CHECK(out.witness.find("R11") != std::string::npos);
}

TEST_CASE("lemma 3: diagonal plus off-diagonal additivity") {
  FiniteRing d = make_dual(6);
  AntiAutomorphism nb = builtin_validated(d, InvolutionFamily::neg_b_dual);
  PeirceFrame fd = make_frame(d, dual_index(6, 3, 0), nb);
  CHECK(verify_lemma3(fd, make_example2_map(d)).pass);
  CHECK(verify_lemma3(fd, zero_map(d)).pass);

  FiniteRing m = make_m2(2);
  AntiAutomorphism tr = builtin_validated(m, InvolutionFamily::transpose_m2);
  PeirceFrame fm = make_frame(m, m2_index(2, 1, 0, 0, 0), tr);
  RingMap bad = sparse_map(m, m2_index(2, 1, 0, 1, 0), m2_index(2, 0, 1, 0, 0));
  CheckOutcome out = verify_lemma3(fm, bad);
  CHECK_FALSE(out.pass);
  CHECK(out.witness.find("case (R11,R21)") != std::string::npos);
}

TEST_CASE("lemmas 4-6: componentwise additivity with odd characteristic controls") {
  FiniteRing m = make_m2(3);
  AntiAutomorphism tr = builtin_validated(m, InvolutionFamily::transpose_m2);
  PeirceFrame f = make_frame(m, m2_index(3, 1, 0, 0, 0), tr);

  SECTION("zero map passes all three") {
    Lemma456 out = verify_lemma4_5_6(f, zero_map(m));
    CHECK(out.lemma4.pass);
    CHECK(out.lemma5.pass);
    CHECK(out.lemma6.pass);
  }
  SECTION("lemma 4 control: break additivity inside R12") {
    RingMap bad = sparse_map(m, m2_index(3, 0, 2, 0, 0), m2_index(3, 1, 0, 0, 0));
    Lemma456 out = verify_lemma4_5_6(f, bad);
    CHECK_FALSE(out.lemma4.pass);
  }
  SECTION("lemma 5 control: break additivity inside R11") {
    RingMap bad = sparse_map(m, m2_index(3, 2, 0, 0, 0), m2_index(3, 0, 1, 0, 0));
    Lemma456 out = verify_lemma4_5_6(f, bad);
    CHECK_FALSE(out.lemma5.pass);
    CHECK_FALSE(out.lemma6.pass);  // R11 is contained in Re
  }
  SECTION("lemma 6 control: break additivity across R11 + R21") {
    RingMap bad = sparse_map(m, m2_index(3, 1, 0, 1, 0), m2_index(3, 0, 1, 0, 0));
    Lemma456 out = verify_lemma4_5_6(f, bad);
    CHECK_FALSE(out.lemma6.pass);
  }
}

TEST_CASE("proposition 1 holds on the standard frames") {
  FiniteRing m2z2 = make_m2(2), m2z3 = make_m2(3), d6 = make_dual(6);
  AntiAutomorphism tr2 = builtin_validated(m2z2, InvolutionFamily::transpose_m2);
  AntiAutomorphism tr3 = builtin_validated(m2z3, InvolutionFamily::transpose_m2);
  AntiAutomorphism nb = builtin_validated(d6, InvolutionFamily::neg_b_dual);
  CHECK(verify_proposition1(make_frame(m2z2, m2_index(2, 1, 0, 0, 0), tr2)).pass);
  CHECK(verify_proposition1(make_frame(m2z3, m2_index(3, 1, 0, 0, 0), tr3)).pass);
  CHECK(verify_proposition1(make_frame(d6, dual_index(6, 3, 0), nb)).pass);
  CHECK_THROWS_AS(
      verify_proposition1(make_frame(m2z2, m2_index(2, 1, 0, 0, 0))),
      invalid_input);
}

TEST_CASE("verify_theorem on m2(2) with the transpose at E11") {
  FiniteRing m = make_m2(2);
  AntiAutomorphism tr = builtin_validated(m, InvolutionFamily::transpose_m2);
  const elem_t e11 = m2_index(2, 1, 0, 0, 0);
  SearchConfig cfg{tr};
  VerificationReport rep = verify_theorem(m, tr, e11, cfg, 1);

  CHECK(rep.m1.pass);
  CHECK(rep.m2.pass);
  CHECK(rep.m3.pass);
  CHECK(rep.prime.pass);
  CHECK(rep.search_exhausted);
  CHECK(rep.maps_checked == 8);
  for (const CheckOutcome& l : rep.lemmas) CHECK(l.pass);
  CHECK(rep.proposition1.pass);
  CHECK(rep.all_additive);
  CHECK(rep.theorem_pass);
  CHECK_FALSE(rep.refutation);
  CHECK(rep.notes.find("conditions hold") != std::string::npos);

  // Reports are byte-identical across worker counts.
  VerificationReport rep4 = verify_theorem(m, tr, e11, cfg, 4);
  CHECK(canonical_dump(report_to_json(rep)) ==
        canonical_dump(report_to_json(rep4)));
}

TEST_CASE("verify_theorem on dual(6) with neg_b at (3,0) is informational") {
  FiniteRing d = make_dual(6);
  AntiAutomorphism nb = builtin_validated(d, InvolutionFamily::neg_b_dual);
  const elem_t e = dual_index(6, 3, 0);
  SearchConfig cfg{nb};
  VerificationReport rep = verify_theorem(d, nb, e, cfg, 1);

  CHECK(rep.m1.pass);
  CHECK_FALSE(rep.m2.pass);
  CHECK(rep.m2.witness == dual_index(6, 0, 2));
  CHECK_FALSE(rep.m3.pass);
  CHECK_FALSE(rep.prime.pass);
  CHECK(rep.search_exhausted);
  CHECK(rep.maps_checked == 72);
  // Lemmas 1-4 hold for every reduced solution on this frame (the
  // off-diagonal components are trivial); the theorem verdict records the
  // non-additive solutions without claiming a refutation.
  CHECK(rep.lemmas[0].pass);
  CHECK(rep.lemmas[1].pass);
  CHECK(rep.lemmas[2].pass);
  CHECK(rep.lemmas[3].pass);
  CHECK(rep.lemmas[4].pass == rep.lemmas[5].pass);  // Re equals R11 here
  CHECK_FALSE(rep.all_additive);
  CHECK_FALSE(rep.theorem_pass);
  CHECK_FALSE(rep.refutation);  // conditions fail, so no refutation
  CHECK(rep.notes.find("informational") != std::string::npos);
  CHECK(rep.notes.find("sufficient") != std::string::npos);

  VerificationReport rep4 = verify_theorem(d, nb, e, cfg, 4);
  CHECK(canonical_dump(report_to_json(rep)) ==
        canonical_dump(report_to_json(rep4)));
}

TEST_CASE("verify_theorem rejects bad frames") {
  FiniteRing m = make_m2(2);
  AntiAutomorphism tr = builtin_validated(m, InvolutionFamily::transpose_m2);
  SearchConfig cfg{tr};
  CHECK_THROWS_AS(verify_theorem(m, tr, m.zero(), cfg), invalid_input);
  CHECK_THROWS_AS(verify_theorem(m, tr, *m.unity(), cfg), invalid_input);
  // idempotent but asymmetric under the transpose
  CHECK_THROWS_AS(verify_theorem(m, tr, m2_index(2, 1, 1, 0, 0), cfg),
                  invalid_input);

  // zero ring: no nontrivial idempotent exists
  FiniteRing z1 = make_zmod(1);
  AntiAutomorphism id = builtin_validated(z1, InvolutionFamily::identity);
  SearchConfig cfg1{id};
  CHECK_THROWS_AS(verify_theorem(z1, id, 0, cfg1), invalid_input);
}

TEST_CASE("report JSON shape") {
  FiniteRing m = make_m2(2);
  AntiAutomorphism tr = builtin_validated(m, InvolutionFamily::transpose_m2);
  SearchConfig cfg{tr};
  VerificationReport rep = verify_theorem(m, tr, m2_index(2, 1, 0, 0, 0), cfg);
  json j = report_to_json(rep);
  CHECK(j["ring_id"] == ring_id(m));
  CHECK(j["frame"]["e"] == m2_index(2, 1, 0, 0, 0));
  CHECK(j["frame"]["involution"] == involution_id(tr));
  CHECK(j["conditions"]["M1"]["pass"] == true);
  CHECK(j["conditions"]["prime"]["witness"].is_null());
  CHECK(j["search"]["exhausted"] == true);
  CHECK(j["lemma_results"]["lemma6"]["pass"] == true);
  CHECK(j["theorem_result"] == "pass");
  CHECK(j["refutation"] == false);
}
