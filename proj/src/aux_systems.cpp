#include "eddeg/catalecticant.hpp"
#include "eddeg/chi.hpp"
#include "eddeg/solver.hpp"

#include <algorithm>
#include <cmath>

namespace eddeg {

namespace {

// Sets coordinate `index` to 1.
ComplexPoly dehomogenize(const ComplexPoly& p, std::size_t index) {
  ComplexPoly out(p.nvars() - 1);
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e = t.exponents;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
    out.add_term(t.coeff, std::move(e));
  }
  return out;
}

CVector lift(const CVector& affine, std::size_t index) {
  CVector x(affine.size() + 1);
  for (Eigen::Index i = 0, k = 0; i < x.size(); ++i)
    x[i] = static_cast<std::size_t>(i) == index ? Complex(1) : affine[k++];
  return x;
}

ComplexPoly quadric_from_coeffs(std::span<const Complex> c) {
  if (c.size() != 6) throw std::invalid_argument("a ternary quadric has 6 coefficients");
  ComplexPoly h(3);
  const std::vector<std::vector<unsigned>> monomials{{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                                     {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (std::size_t i = 0; i < 6; ++i)
    if (c[i] != Complex(0)) h.add_term(c[i], monomials[i]);
  return h;
}

// Nearest Gaussian rational with denominator q, or nothing when some part is
// further than `tol` away.
std::optional<std::vector<GaussianRational>> snap(const CVector& x, long q, double tol) {
  std::vector<GaussianRational> out;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double re = std::round(x[i].real() * static_cast<double>(q));
    const double im = std::round(x[i].imag() * static_cast<double>(q));
    if (std::abs(re / static_cast<double>(q) - x[i].real()) > tol ||
        std::abs(im / static_cast<double>(q) - x[i].imag()) > tol)
      return std::nullopt;
    out.emplace_back(mpq_class(static_cast<long>(re), q), mpq_class(static_cast<long>(im), q));
  }
  return out;
}

constexpr long kMaxSnapDenominator = 4;
constexpr double kSnapTolerance = 0.2;
constexpr double kPartialsResidual = 1e-8;

}  // namespace

SliceResult slice_points_n2(std::span<const Complex> quadric_coeffs, const TrackerConfig& config,
                            std::uint64_t seed) {
  const SparsePoly q = build_quartic(2).poly;
  const ComplexPoly h = quadric_from_coeffs(quadric_coeffs);
  SliceResult result;
  std::vector<CVector> points;
  for (std::size_t chart : {std::size_t{0}, std::size_t{2}}) {
    ComplexPolySystem sys;
    sys.nvars = 2;
    sys.equations = {ComplexPoly::from_exact(local_chart(q, chart)), dehomogenize(h, chart)};
    const SolutionSet set = solve_total_degree(sys, config, seed + chart, Execution::Serial);
    for (const auto& p : set.solutions) {
      if (p.kind == EndpointKind::Finite) points.push_back(lift(p.affine, chart));
      if (p.kind == EndpointKind::SingularEndpoint || p.kind == EndpointKind::Failed) ++result.singular_endpoints;
    }
  }
  result.points = dedup_projective(std::move(points), config.dedup_tolerance);
  return result;
}

std::size_t count_slice_points_n2(std::uint64_t seed, const TrackerConfig& config, int max_retries) {
  std::mt19937_64 rng(seed);
  SliceResult last;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Complex> coeffs;
    for (int i = 0; i < 6; ++i) coeffs.push_back(random_box(rng));
    last = slice_points_n2(coeffs, config, rng());
    if (last.singular_endpoints == 0) break;
  }
  return last.points.size();
}

std::vector<ProjectivePoint> solve_partials_n3(const TrackerConfig& config, std::uint64_t seed) {
  const SparsePoly q = build_quartic(3).poly;
  std::vector<SparsePoly> partials;
  ComplexPolySystem full;
  full.nvars = 4;
  for (std::size_t v = 0; v < 4; ++v) {
    partials.push_back(poly_diff(q, v));
    full.equations.push_back(ComplexPoly::from_exact(partials.back()));
  }

  std::mt19937_64 rng(seed);
  std::vector<ProjectivePoint> found;
  auto already = [&](const CVector& x) {
    return std::any_of(found.begin(), found.end(), [&](const ProjectivePoint& p) {
      const Complex lambda = p.numeric.dot(x) / p.numeric.squaredNorm();
      return (x - lambda * p.numeric).norm() <= config.dedup_tolerance * std::max(1.0, x.norm());
    });
  };

  for (std::size_t chart : {std::size_t{0}, std::size_t{1}, std::size_t{3}}) {
    ComplexPolySystem sys;
    sys.nvars = 3;
    for (int k = 0; k < 3; ++k) {
      ComplexPoly combo(4);
      for (std::size_t v = 0; v < 4; ++v) {
        const Complex r = random_box(rng);
        for (const auto& t : full.equations[v].terms()) combo.add_term(r * t.coeff, t.exponents);
      }
      sys.equations.push_back(dehomogenize(combo, chart));
    }
    const SolutionSet set = solve_total_degree(sys, config, rng(), Execution::Serial);
    for (const auto& p : set.solutions) {
      if (p.kind == EndpointKind::AtInfinity || p.kind == EndpointKind::Failed || p.affine.size() == 0) continue;
      const CVector x = projective_normalize(lift(p.affine, chart));

      ProjectivePoint point;
      for (long d = 1; d <= kMaxSnapDenominator && !point.is_exact; ++d) {
        auto exact = snap(x, d, kSnapTolerance / static_cast<double>(d));
        if (!exact) continue;
        const bool zero = std::all_of(partials.begin(), partials.end(),
                                      [&](const SparsePoly& g) { return poly_eval(g, *exact).is_zero(); });
        const bool nonzero_point = std::any_of(exact->begin(), exact->end(), [](const auto& c) { return !c.is_zero(); });
        if (zero && nonzero_point) {
          point.exact = std::move(*exact);
          point.is_exact = true;
        }
      }
      if (point.is_exact) {
        point.numeric = CVector(4);
        for (std::size_t i = 0; i < 4; ++i) point.numeric[static_cast<Eigen::Index>(i)] = point.exact[i].to_complex();
      } else {
        if (p.kind != EndpointKind::Finite) continue;
        point.numeric = x;
      }
      point.residual = relative_residual(full, point.numeric);
      if (!point.is_exact && point.residual >= kPartialsResidual) continue;
      if (!already(point.numeric)) found.push_back(std::move(point));
    }
  }
  if (found.empty()) throw NumericFailure("no common zero of the n=3 partials survived the residual filter");
  std::sort(found.begin(), found.end(), [](const ProjectivePoint& a, const ProjectivePoint& b) {
    for (Eigen::Index i = 0; i < a.numeric.size(); ++i) {
      if (std::abs(a.numeric[i]) != std::abs(b.numeric[i])) return std::abs(a.numeric[i]) > std::abs(b.numeric[i]);
    }
    return false;
  });
  return found;
}

}  // namespace eddeg
