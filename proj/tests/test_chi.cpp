#include "doctest.h"
#include "eddeg/chi.hpp"

using namespace eddeg;

namespace {
SparsePoly P(const std::string& text, std::size_t nvars) { return SparsePoly::parse(text, nvars); }
}  // namespace

TEST_CASE("sections of the projective space") {
  CHECK(chi_quadric_or_quartic_section(1) == 2);
  CHECK(chi_quadric_or_quartic_section(2) == 2);
  CHECK(chi_quadric_or_quartic_section(3) == 4);
  CHECK(chi_quadric_or_quartic_section(6) == 6);
  CHECK_THROWS(chi_quadric_or_quartic_section(0));
}

TEST_CASE("smooth complete intersections") {
  const std::vector<long> d24{2, 4};
  CHECK(chi_smooth_ci(d24, 2) == 8);
  CHECK(chi_smooth_ci(d24, 3) == -16);
  CHECK(chi_smooth_ci(d24, 4) == 64);
  CHECK(chi_smooth_ci(d24, 5) == -176);
  // Plane curves: 2 - 2g with g = (d-1)(d-2)/2.
  for (long d = 1; d <= 8; ++d) {
    const std::vector<long> one{d};
    CHECK(chi_smooth_ci(one, 2) == 2 - (d - 1) * (d - 2));
  }
  // Quadric surface P^1 x P^1 and a cubic surface.
  CHECK(chi_smooth_ci(std::vector<long>{2}, 3) == 4);
  CHECK(chi_smooth_ci(std::vector<long>{3}, 3) == 9);
  CHECK(chi_smooth_ci(std::vector<long>{}, 4) == 5);
  CHECK_THROWS(chi_smooth_ci(std::vector<long>{2, 2, 2}, 2));
}

TEST_CASE("Milnor numbers of simple germs") {
  CHECK(milnor_number_germ(P("z0^2+z1^2", 2)) == 1);
  CHECK(milnor_number_germ(P("z0^2+z1^2+z2^2", 3)) == 1);
  for (unsigned k = 1; k <= 5; ++k)
    CHECK(milnor_number_germ(P("z0^" + std::to_string(k + 1) + "+z1^2", 2)) == static_cast<int>(k));
  for (unsigned k = 4; k <= 7; ++k)
    CHECK(milnor_number_germ(P("z0^2z1+z1^" + std::to_string(k - 1), 2)) == static_cast<int>(k));
  CHECK(milnor_number_germ(P("z0^3+z1^4", 2)) == 6);
  CHECK_THROWS_AS(milnor_number_germ(P("z0^2", 2), 1, 8), MilnorError);
  CHECK_THROWS(milnor_number_germ(P("z0+z1^2", 2)));
  CHECK_THROWS(milnor_number_germ(P("1+z0^2", 1)));
}

TEST_CASE("Milnor numbers at the isolated singular points") {
  for (unsigned n = 1; n <= 3; ++n) {
    auto q = build_quartic(n).poly;
    const int expected[] = {0, 1, 3, 10};
    CHECK(milnor_number_germ(local_chart(q, 0)) == expected[n]);
    CHECK(milnor_number_germ(local_chart(q, n)) == expected[n]);
  }
  CHECK(local_chart(P("z0^2+z1z2", 3), 0) == P("1+z0z1", 2));
}

TEST_CASE("singularity corrections") {
  CHECK(chi_with_singularities(64, 2, std::vector<int>(8, 1)) == 56);
  CHECK(chi_with_singularities(-176, 3, std::vector<int>(4, 5)) == -156);
  CHECK(chi_with_singularities(42, 3, {}) == 42);
  CHECK(chi_with_singularities(42, 2, {}) == 42);
}

TEST_CASE("Aluffi-Harris assembly") {
  CHECK(aluffi_harris(2, 3, 2, 2, 8) == 7);
  CHECK(aluffi_harris(3, 4, 4, 4, -16) == 20);
  CHECK(aluffi_harris(1, 2, 2, 2, 2) == 0);
}

TEST_CASE("corollary agrees with the Aluffi-Harris assembly") {
  CHECK(corollary_eddegree(4, 56) == 53);
  CHECK(corollary_eddegree(5, -156) == 162);
  CHECK(corollary_eddegree(7, -1304) == 1312);
  for (unsigned n = 1; n <= 20; ++n)
    for (long chi : {-1000L, -17L, 0L, 3L, 56L, 999L}) {
      const long c = chi_quadric_or_quartic_section(n);
      CHECK(corollary_eddegree(n, chi) == aluffi_harris(static_cast<int>(n), n + 1, c, c, chi));
    }
}

TEST_CASE("general quadratic forms") {
  CHECK(catanese_trifogli(1) == 4);
  CHECK(catanese_trifogli(2) == 13);
  const long expected[] = {4, 13, 40, 121, 364, 1093, 3280};
  for (unsigned n = 1; n <= 7; ++n) CHECK(catanese_trifogli(n) == expected[n - 1]);
  CHECK_THROWS(catanese_trifogli(0));
}

TEST_CASE("source tags") {
  CHECK(parse_source("PAPER") == Source::Paper);
  CHECK(parse_source("DERIVED") == Source::Derived);
  CHECK(parse_source(to_string(Source::Derived)) == Source::Derived);
  CHECK_THROWS(parse_source("paper"));
  CHECK_THROWS(parse_source(""));
}

TEST_CASE("builtin registry") {
  const auto& reg = SingularDataRegistry::builtin();
  for (unsigned n = 1; n <= 7; ++n) CHECK(reg.covers(n));
  CHECK_FALSE(reg.covers(8));
  CHECK_THROWS_AS(reg.at(8), RegistryError);
  CHECK(reg.validate().empty());
  CHECK(reg.at(4).components.size() == 3);
  CHECK(reg.at(5).components.size() == 2);
}

TEST_CASE("pipeline reproduces the table") {
  const long chi[] = {0, 8, -16, 56, -156, 468, -1304};
  const long ed[] = {2, 7, 20, 53, 162, 463, 1312};
  const auto& reg = SingularDataRegistry::builtin();
  for (unsigned n = 1; n <= 7; ++n) {
    CAPTURE(n);
    auto r = eddegree_pipeline(n, reg);
    CHECK(r.chi_yhq == chi[n - 1]);
    CHECK(r.ed_formula == ed[n - 1]);
    CHECK(r.chi_yq == r.chi_yh);
    CHECK(r.chi_y == static_cast<long>(n) + 1);
    CHECK(r.catanese_trifogli == catanese_trifogli(n));
    CHECK(r.chi_from_override == (n == 1 || n >= 6));
    if (n >= 2) CHECK(r.catanese_trifogli > r.ed_formula);
    if (n >= 2) CHECK((chi[n - 1] > 0) != (chi[n - 2] > 0));
  }
}

TEST_CASE("overrides and malformed registries") {
  std::map<unsigned, RegistryEntry> entries;
  entries[4].chi_yhq_override = 60;
  entries[3];
  entries[1];
  SingularDataRegistry reg(entries);
  CHECK(eddegree_pipeline(4, reg).ed_formula == 57);
  CHECK(eddegree_pipeline(3, reg).chi_yhq == -16);
  CHECK_THROWS_AS(eddegree_pipeline(1, reg), RegistryError);

  std::map<unsigned, RegistryEntry> bad;
  bad[4].components = {{tangent_line_component(4, false), 0, Source::Derived},
                       {tangent_line_component(3, false), 1, Source::Derived}};
  auto problems = SingularDataRegistry(bad).validate();
  CHECK(problems.size() == 2);

  std::map<unsigned, RegistryEntry> wrong;
  wrong[3].components = {{tangent_line_component(3, false), 1, Source::Derived}};
  CHECK(SingularDataRegistry(wrong).validate().size() == 1);

  std::map<unsigned, RegistryEntry> surface;
  SingularComponent plane;
  plane.label = "plane";
  plane.dimension = 2;
  surface[5].components = {{plane, 1, Source::Derived}};
  CHECK_THROWS_AS(eddegree_pipeline(5, SingularDataRegistry(surface)), RegistryError);
}
