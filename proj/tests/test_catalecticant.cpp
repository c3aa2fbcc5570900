#include "doctest.h"
#include "eddeg/catalecticant.hpp"
#include "test_util.hpp"

using namespace eddeg;
using eddeg::testing::random_gaussian;
using eddeg::testing::random_point;

namespace {

const GaussianRational I = GaussianRational::imaginary_unit();

SparsePoly P(const char* text, std::size_t nvars) { return SparsePoly::parse(text, nvars); }

// f = sum_j z_j (x+iy)^(n-j) (x-iy)^j, assembled from linear powers.
BinaryForm harmonic_form(unsigned n, const std::vector<GaussianRational>& z) {
  BinaryForm f(n);
  for (unsigned j = 0; j <= n; ++j)
    f += BinaryForm::linear_power(1, I, n - j) * BinaryForm::linear_power(1, -I, j) * z[j];
  return f;
}

}  // namespace

TEST_CASE("quartics agree with the closed forms for n = 2, 3, 4") {
  CHECK(projectively_equal(build_quartic(2).poly, P("16z0^2z2^2+z1^4+16z0z1^2z2", 3)));
  CHECK(projectively_equal(build_quartic(3).poly, P("5z1^2z2^2+4z0z2^3+4z1^3z3+34z0z1z2z3+33z0^2z3^2", 4)));
  CHECK(projectively_equal(
      build_quartic(4).poly,
      P("z2^4+14z1z2^2z3+9z1^2z3^2+20z0z2z3^2+20z1^2z2z4+24z0z2^2z4+88z0z1z3z4+144z0^2z4^2", 5)));
  CHECK(build_quartic(3).poly.to_string() == "5z1^2z2^2+4z0z2^3+4z1^3z3+34z0z1z2z3+33z0^2z3^2");
  CHECK(build_quartic(2).raw_scalar == GaussianRational(mpq_class(8, 3)));
  CHECK(build_quartic(3).raw_scalar == GaussianRational(mpq_class(64, 15)));
  CHECK(build_quartic(4).raw_scalar == GaussianRational(mpq_class(128, 35)));
}

TEST_CASE("n = 1 quartic is a single monomial") {
  auto q = build_quartic(1);
  REQUIRE(q.poly.size() == 1);
  CHECK(q.poly.terms().begin()->first == Exponent{2, 2});
}

TEST_CASE("structural invariants up to n = 10") {
  for (unsigned n = 1; n <= 10; ++n) {
    CAPTURE(n);
    auto q = build_quartic(n);
    CHECK(q.poly.nvars() == n + 1);
    CHECK(q.poly.is_homogeneous());
    CHECK(q.poly.degree() == 4);
    CHECK(is_isobaric(q.poly, 2 * n));
    CHECK_FALSE(is_isobaric(q.poly, 2 * n + 1));
    CHECK(q.poly.has_real_coefficients());
    CHECK(is_reversal_symmetric(q.poly));
    Exponent first(n + 1, 0), last(n + 1, 0);
    first[0] = 4;
    last[n] = 4;
    CHECK(q.poly.coeff(first).is_zero());
    CHECK(q.poly.coeff(last).is_zero());
  }
  CHECK_FALSE(is_reversal_symmetric(P("z0^2z1^2+z0^3z2", 3)));
}

TEST_CASE("quartic equals the pairing of the square at random points") {
  std::mt19937_64 rng(31);
  for (unsigned n = 1; n <= 6; ++n) {
    auto q = build_quartic(n);
    for (int trial = 0; trial < 5; ++trial) {
      auto z = random_point(rng, n + 1);
      auto f = harmonic_form(n, z);
      auto sq = f * f;
      CHECK(bw_pair_coeff(sq, sq) == q.raw_scalar * poly_eval(q.poly, z));
      CHECK(specialize(harmonic_symbolic(n), z) == f);
      CHECK(specialize(square_symbolic(n), z) == sq);
    }
  }
}

TEST_CASE("osculating thresholds") {
  for (unsigned n = 1; n <= 10; ++n) {
    auto q = build_quartic(n);
    for (unsigned N = 1; N <= 3; ++N) {
      CAPTURE(n);
      CAPTURE(N);
      CHECK(osculating_containment_check(q, N) == (n >= 2 * N + 1));
      CHECK(osculating_singularity_check(q, N) == (n >= 3 * N + 1));
      if (n <= 8 && N <= 2) {
        CHECK(vanishes_on_osculating_spaces(q.poly, n, N) == (n >= 2 * N + 1));
        CHECK(singular_along_osculating_spaces(q.poly, n, N) == (n >= 3 * N + 1));
      }
    }
  }
  CHECK_THROWS(osculating_containment_check(build_quartic(3), 0));
  CHECK(osculating_containment_check(build_quartic(3), 1));
  CHECK_FALSE(osculating_containment_check(build_quartic(2), 1));
  CHECK(osculating_singularity_check(build_quartic(4), 1));
  CHECK_FALSE(osculating_singularity_check(build_quartic(3), 1));
}

TEST_CASE("n = 2 quartic does not vanish on the plane z2 = 0") {
  auto q = build_quartic(2).poly;
  std::vector<SparsePoly> images{SparsePoly::variable(3, 0), SparsePoly::variable(3, 1), SparsePoly(3)};
  CHECK(poly_substitute(q, images) == P("z1^4", 3));
}

TEST_CASE("partials of the n = 3 quartic") {
  auto q = build_quartic(3).poly;
  const char* expected[] = {"33z0z3^2+17z1z2z3+2z2^3", "5z1z2^2+6z1^2z3+17z0z2z3",
                            "5z1^2z2+6z0z2^2+17z0z1z3", "2z1^3+17z0z1z2+33z0^2z3"};
  for (std::size_t j = 0; j < 4; ++j) CHECK(poly_diff(q, j) == P(expected[j], 4) * GaussianRational(2));
  for (const auto& pt : {std::vector<GaussianRational>{1, 0, 0, 0}, std::vector<GaussianRational>{0, 0, 0, 1}})
    for (std::size_t j = 0; j < 4; ++j) CHECK(poly_eval(P(expected[j], 4), pt).is_zero());
}

TEST_CASE("singular components") {
  auto q3 = build_quartic(3), q4 = build_quartic(4), q5 = build_quartic(5);
  for (bool mirror : {false, true}) {
    CHECK(verify_component(q3, extreme_point_component(3, mirror)));
    CHECK_FALSE(verify_component(q3, tangent_line_component(3, mirror)));
    CHECK(verify_component(q4, tangent_line_component(4, mirror)));
    CHECK(verify_component(q5, tangent_line_component(5, mirror)));
    CHECK(tangent_line_component(4, mirror).parametrization_satisfies_ideal());
    CHECK(bezout_slice_points(tangent_line_component(4, mirror)) == 2);
  }
  auto conic = n4_conic_component();
  CHECK(conic.parametrization_satisfies_ideal());
  CHECK(verify_component(q4, conic));
  CHECK(bezout_slice_points(conic) == 4);
  CHECK(bezout_slice_points(tangent_line_component(4, false)) + bezout_slice_points(tangent_line_component(4, true)) +
            bezout_slice_points(conic) ==
        8);
  CHECK(bezout_slice_points(tangent_line_component(5, false)) + bezout_slice_points(tangent_line_component(5, true)) ==
        4);
  auto line = tangent_line_component(4, false);
  CHECK(line.vanishing_ideal_generators.size() == 3);
  CHECK(line.z_count() == 5);
}

TEST_CASE("catalecticant determinant") {
  std::mt19937_64 rng(37);
  for (unsigned n = 1; n <= 4; ++n) {
    CAPTURE(n);
    BinaryForm low(2 * n), full(2 * n);
    for (unsigned i = 0; i < n; ++i)
      low += BinaryForm::linear_power(random_gaussian(rng), random_gaussian(rng), 2 * n);
    CHECK(catalecticant_det(low).is_zero());
    for (unsigned i = 0; i <= n; ++i) full += BinaryForm::linear_power(1, GaussianRational(static_cast<long>(i)), 2 * n);
    CHECK_FALSE(catalecticant_det(full).is_zero());

    auto m = catalecticant_matrix(full);
    REQUIRE(m.size() == n + 1);
    for (unsigned j = 0; j <= n; ++j)
      for (unsigned k = 0; k <= n; ++k) CHECK(m[j][k] == full[j + k] / GaussianRational(binomial(2 * n, j + k)));

    auto c = random_gaussian(rng);
    CHECK(catalecticant_det(full * c) == c.pow(n + 1) * catalecticant_det(full));
  }
  CHECK_THROWS(catalecticant_matrix(BinaryForm(3)));
}
