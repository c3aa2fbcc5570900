#include "doctest.h"
#include "eddeg/bwforms.hpp"
#include "test_util.hpp"

using namespace eddeg;
using eddeg::testing::random_form;
using eddeg::testing::random_gaussian;

namespace {
const GaussianRational I = GaussianRational::imaginary_unit();
}

TEST_CASE("form construction") {
  auto f = BinaryForm::linear_power(1, I, 2);
  CHECK(f == BinaryForm({1, GaussianRational(0, 2), -1}));
  CHECK(BinaryForm::isotropic_quadric() == BinaryForm({1, 0, 1}));
  CHECK(f * BinaryForm::linear_power(1, -I, 2) == BinaryForm::isotropic_quadric().pow(2));
  CHECK(f.to_poly() == SparsePoly::parse("z0^2+(2i)z0z1-z1^2", 2));
  CHECK(BinaryForm(3).is_zero());
}

TEST_CASE("coefficient and differential pairings agree") {
  std::mt19937_64 rng(21);
  for (unsigned d = 0; d <= 10; ++d)
    for (int trial = 0; trial < 100; ++trial) {
      auto f = random_form(rng, d), g = random_form(rng, d);
      CHECK(bw_pair_coeff(f, g) == bw_pair_diff(f, g));
    }
}

TEST_CASE("pairing of powers of linear forms") {
  std::mt19937_64 rng(22);
  for (unsigned d = 1; d <= 10; ++d)
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_gaussian(rng), b = random_gaussian(rng);
      auto c = random_gaussian(rng), e = random_gaussian(rng);
      CHECK(bw_pair_coeff(BinaryForm::linear_power(a, b, d), BinaryForm::linear_power(c, e, d)) ==
            (a * c + b * e).pow(d));
    }
}

TEST_CASE("pairing examples") {
  for (unsigned d = 1; d <= 8; ++d) {
    BinaryForm xd(d), yd(d);
    xd[0] = 1;
    yd[d] = 1;
    CHECK(bw_pair_coeff(xd, yd).is_zero());
    auto plus = BinaryForm::linear_power(1, I, d), minus = BinaryForm::linear_power(1, -I, d);
    mpq_class sum = 0;
    for (unsigned k = 0; k <= d; ++k) sum += binomial(d, k);
    CHECK(bw_pair_coeff(plus, minus) == GaussianRational(sum));
    CHECK(bw_pair_coeff(plus, minus) == GaussianRational(1L << d));
    CHECK(bw_pair_coeff(plus, plus).is_zero());
  }
  CHECK(bw_pair_diff(BinaryForm({1, 0, 0}), BinaryForm({0, 0, 1})).is_zero());
  CHECK_THROWS(bw_pair_coeff(BinaryForm(2), BinaryForm(3)));
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_form(rng, 5), g = random_form(rng, 5), h = random_form(rng, 5);
    auto c = random_gaussian(rng);
    CHECK(bw_pair_coeff(f, g) == bw_pair_coeff(g, f));
    CHECK(bw_pair_coeff(f * c + h, g) == c * bw_pair_coeff(f, g) + bw_pair_coeff(h, g));
  }
}

TEST_CASE("harmonic elements") {
  CHECK(harmonic_element({1, 0}) == BinaryForm({1, I}));
  CHECK(harmonic_element({2, 1}) == BinaryForm({1, 0, 1}));
  CHECK(harmonic_element({2, 2}) == BinaryForm({1, GaussianRational(0, -2), -1}));
}

TEST_CASE("pairing rule, exhaustive") {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned j = 0; j <= 2 * n; ++j)
      for (unsigned k = 0; k <= 2 * n; ++k) {
        const bool nonzero = !bw_pair_coeff(harmonic_element({2 * n, j}), harmonic_element({2 * n, k})).is_zero();
        CHECK(nonzero == (j + k == 2 * n));
        CHECK(pairing_rule(n, j, k) == nonzero);
      }
  CHECK(pairing_rule(3, 2, 4));
  CHECK_FALSE(pairing_rule(3, 1, 2));
  CHECK(pairing_rule(1, 0, 2));
  CHECK(bw_pair_coeff(harmonic_element({2, 0}), harmonic_element({2, 2})) == GaussianRational(4));
}

TEST_CASE("harmonic decomposition examples") {
  auto q = harmonic_components(BinaryForm::isotropic_quadric());
  REQUIRE(q.size() == 1);
  CHECK(q[0].q_power == 1);
  CHECK(q[0].h == BinaryForm(std::vector<GaussianRational>{1}));

  auto cube = harmonic_components(BinaryForm::linear_power(1, I, 3));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].q_power == 0);
  CHECK(cube[0].h == BinaryForm::linear_power(1, I, 3));

  auto x2 = harmonic_components(BinaryForm({1, 0, 0}));
  REQUIRE(x2.size() == 2);
  CHECK(x2[0].q_power == 0);
  CHECK(x2[0].h == (BinaryForm::linear_power(1, I, 2) + BinaryForm::linear_power(1, -I, 2)) *
                       GaussianRational(mpq_class(1, 4)));
  CHECK(x2[1].q_power == 1);
  CHECK(x2[1].h == BinaryForm(std::vector<GaussianRational>{mpq_class(1, 2)}));
}

TEST_CASE("harmonic decomposition reassembles and is orthogonal") {
  std::mt19937_64 rng(24);
  const BinaryForm q = BinaryForm::isotropic_quadric();
  for (unsigned d = 0; d <= 9; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      auto f = random_form(rng, d);
      auto parts = harmonic_components(f);
      CHECK(recompose(parts, d) == f);
      for (std::size_t a = 0; a < parts.size(); ++a) {
        CHECK(parts[a].h.degree() == d - 2 * parts[a].q_power);
        if (a > 0) CHECK(parts[a - 1].q_power < parts[a].q_power);
        for (std::size_t b = a + 1; b < parts.size(); ++b)
          CHECK(bw_pair_coeff(q.pow(parts[a].q_power) * parts[a].h, q.pow(parts[b].q_power) * parts[b].h)
                    .is_zero());
      }
      auto w = harmonic_coordinates(f);
      BinaryForm back(d);
      for (unsigned j = 0; j <= d; ++j) back += harmonic_element({d, j}) * w[j];
      CHECK(back == f);
    }
}

TEST_CASE("harmonic coordinates are consistent across threads") {
  std::mt19937_64 rng(25);
  std::vector<BinaryForm> forms;
  for (unsigned d = 0; d < 24; ++d) forms.push_back(random_form(rng, d % 12));
  std::vector<std::vector<GaussianRational>> serial, parallel(forms.size());
  for (const auto& f : forms) serial.push_back(harmonic_coordinates(f));
#pragma omp parallel for
  for (int k = 0; k < static_cast<int>(forms.size()); ++k) parallel[k] = harmonic_coordinates(forms[k]);
  CHECK(serial == parallel);
}
