#include <doctest.h>

#include "meyer/handlebody.hpp"
#include "meyer/verify.hpp"
#include "meyer/words.hpp"

using namespace meyer;

namespace {

UrSpElement from_word(const std::string& text, std::size_t g) {
  return split_ursp(evaluate_word(parse_word(text), g));
}

}  // namespace

TEST_CASE("invariant_form: powers of t1 restrict to the 1 x 1 form (m)") {
  for (std::size_t g : {std::size_t{1}, std::size_t{2}}) {
    for (int m = 1; m <= 4; ++m) {
      const UrSpElement a = from_word("t1^" + std::to_string(m), g);
      const InvariantForm form = invariant_form(a);
      // S = I, so the invariant space is everything; the pairing only sees
      // the a1 direction.
      CHECK(form.basis.size() == g);
      CHECK(form.signature == SignatureTriple{1, 0, g - 1});
      CHECK(phi_v(a) == 1);
      if (g == 1) {
        CHECK(form.basis[0] == std::vector<Rat>{Rat(1)});
        CHECK(form.gram == RatMat{{Rat(m)}});
      }
    }
  }
}

TEST_CASE("invariant_form: s1 at genus 2 pins basis (1,2) and gram [[2]]") {
  const UrSpElement s1 = from_word("s1", 2);
  const InvariantForm form = invariant_form(s1);
  REQUIRE(form.basis.size() == 1);
  CHECK(form.basis[0] == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK(form.gram == RatMat{{Rat(2)}});
  CHECK(form.signature == SignatureTriple{1, 0, 0});
  CHECK(phi_v(s1) == 1);
}

TEST_CASE("phi_v: identity is 0, inverses negate, conjugation-free additivity") {
  for (std::size_t g = 1; g <= 3; ++g) {
    CHECK(phi_v(UrSpElement::identity(g)) == 0);
    const std::uint64_t stream = suite_stream_seed(5, "unit-handlebody", g);
    for (std::size_t k = 0; k < 8; ++k) {
      const UrSpElement a = ursp_stream_sample(stream, g, k);
      const long long v = phi_v(a);
      CHECK(v <= static_cast<long long>(g));
      CHECK(-v <= static_cast<long long>(g));
      // The radical never hides signature: zero count equals the kernel
      // dimension of the gram matrix.
      const InvariantForm form = invariant_form(a);
      CHECK(form.signature.zero ==
            form.basis.size() - rank(form.gram));
    }
  }
}

TEST_CASE("verify_cobounding: pinned and sampled pairs") {
  CHECK(verify_cobounding(from_word("t1", 1), from_word("t1", 1)));
  CHECK(verify_cobounding(from_word("s1", 2), from_word("r1", 2)));
  for (std::size_t g = 1; g <= 3; ++g) {
    const std::uint64_t stream = suite_stream_seed(6, "unit-cobounding", g);
    for (std::size_t k = 0; k < 6; ++k)
      CHECK(verify_cobounding(ursp_stream_sample(stream, g, 2 * k),
                              ursp_stream_sample(stream, g, 2 * k + 1)));
  }
}

TEST_CASE("mapping_torus_homology: t1^m at genus 1") {
  for (int m = 1; m <= 3; ++m) {
    const UrSpElement a = from_word("t1^" + std::to_string(m), 1);
    const TorusHomologyReport r = mapping_torus_homology(a, true);
    CHECK(r.g == 1);
    // S = P = I at genus 1, so both homology groups keep full rank and
    // carry no torsion; the connecting map is multiplication by m.
    CHECK(r.h2_rank == 1);
    CHECK(r.h2rel_rank == 1);
    CHECK(r.h2rel_torsion.empty());
    CHECK(r.d_matrix == IntMat{{m}});
    CHECK(r.intersection_gram == RatMat{{Rat(m)}});
    CHECK(r.signature == 1);
    REQUIRE(r.h1_torsion.has_value());
    CHECK(r.h1_torsion->empty());
  }
}

TEST_CASE("mapping_torus_homology: torsion shows up in coker(S - I)") {
  // P = [[1,0],[-2,1]] makes S = t(P^{-1}) = [[1,2],[0,1]], so S - I has
  // Smith form diag(2, 0): H1 torsion Z/2, and one rank drops away.
  const IntMat p = {{1, 0}, {-2, 1}};
  const IntMat s = {{1, 2}, {0, 1}};
  const UrSpElement a(2, p, IntMat(2, 2), s);
  const TorusHomologyReport r = mapping_torus_homology(a, true);
  CHECK(r.h2_rank == 1);
  REQUIRE(r.h1_torsion.has_value());
  CHECK(*r.h1_torsion == std::vector<Int>{2});
  // P - I has Smith form diag(2, 0) as well.
  CHECK(r.h2rel_rank == 1);
  CHECK(r.h2rel_torsion == std::vector<Int>{2});
  // Q = 0: the connecting map vanishes and so does the invariant pairing.
  CHECK(r.d_matrix.is_zero());
  CHECK(r.signature == 0);

  const TorusHomologyReport quiet = mapping_torus_homology(a);
  CHECK_FALSE(quiet.h1_torsion.has_value());
}

TEST_CASE("mapping_torus_homology: d_matrix rows are reduced by the divisors") {
  for (std::size_t g = 1; g <= 3; ++g) {
    const std::uint64_t stream = suite_stream_seed(7, "unit-torus", g);
    for (std::size_t k = 0; k < 8; ++k) {
      const UrSpElement a = ursp_stream_sample(stream, g, k);
      const TorusHomologyReport r = mapping_torus_homology(a);
      CHECK(r.h2_rank == g - rank(a.s() - IntMat::identity(g)));
      CHECK(r.h2rel_rank == g - rank(a.p() - IntMat::identity(g)));
      const std::vector<Int> divisors =
          smith_normal_form(a.p() - IntMat::identity(g)).diagonal();
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
          if (divisors[i] == 0) continue;
          CHECK(r.d_matrix(i, j) >= 0);
          CHECK(r.d_matrix(i, j) < divisors[i]);
        }
      // Report consistency: the intersection pairing is the invariant form.
      CHECK(r.signature == phi_v(a));
      CHECK(r.h2_rank == r.h2rel_rank);
    }
  }
}
