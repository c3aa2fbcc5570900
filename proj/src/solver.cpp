#include "eddeg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eddeg {

// ---------------------------------------------------------------------------
// Polynomials with complex double coefficients

ComplexPoly ComplexPoly::from_exact(const SparsePoly& p) {
  ComplexPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(c.to_complex(), e);
  return out;
}

void ComplexPoly::add_term(Complex c, std::vector<unsigned> exponents) {
  if (exponents.size() != nvars_) throw StructuralError("complex term has wrong exponent length");
  for (auto& t : terms_) {
    if (t.exponents == exponents) {
      t.coeff += c;
      return;
    }
  }
  terms_.push_back({c, std::move(exponents)});
}

unsigned ComplexPoly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.exponents));
  return d;
}

Complex ComplexPoly::evaluate(const CVector& x) const {
  Complex sum = 0;
  for (const auto& t : terms_) {
    Complex m = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < t.exponents[i]; ++k) m *= x[static_cast<Eigen::Index>(i)];
    sum += m;
  }
  return sum;
}

Complex ComplexPoly::evaluate(const CVector& x, Eigen::RowVectorXcd& grad) const {
  grad = Eigen::RowVectorXcd::Zero(static_cast<Eigen::Index>(nvars_));
  Complex sum = 0;
  for (const auto& t : terms_) {
    Complex m = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < t.exponents[i]; ++k) m *= x[static_cast<Eigen::Index>(i)];
    sum += m;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.exponents[i];
      if (e == 0) continue;
      Complex g = t.coeff * static_cast<double>(e);
      for (std::size_t k = 0; k < nvars_; ++k) {
        const unsigned p = k == i ? e - 1 : t.exponents[k];
        for (unsigned r = 0; r < p; ++r) g *= x[static_cast<Eigen::Index>(k)];
      }
      grad[static_cast<Eigen::Index>(i)] += g;
    }
  }
  return sum;
}

std::vector<unsigned> ComplexPolySystem::degrees() const {
  std::vector<unsigned> d;
  for (const auto& e : equations) d.push_back(e.degree());
  return d;
}

CVector ComplexPolySystem::evaluate(const CVector& x) const {
  CVector v(static_cast<Eigen::Index>(equations.size()));
  for (std::size_t j = 0; j < equations.size(); ++j) v[static_cast<Eigen::Index>(j)] = equations[j].evaluate(x);
  return v;
}

CMatrix ComplexPolySystem::jacobian(const CVector& x) const {
  CMatrix jac(static_cast<Eigen::Index>(equations.size()), static_cast<Eigen::Index>(nvars));
  Eigen::RowVectorXcd grad;
  for (std::size_t j = 0; j < equations.size(); ++j) {
    equations[j].evaluate(x, grad);
    jac.row(static_cast<Eigen::Index>(j)) = grad;
  }
  return jac;
}

ComplexPolySystem ComplexPolySystem::homogenize() const {
  ComplexPolySystem out{nvars + 1, {}};
  for (const auto& eq : equations) {
    const unsigned d = eq.degree();
    ComplexPoly h(nvars + 1);
    for (const auto& t : eq.terms()) {
      auto e = t.exponents;
      e.push_back(d - total_degree(t.exponents));
      h.add_term(t.coeff, std::move(e));
    }
    out.equations.push_back(std::move(h));
  }
  return out;
}

void TrackerConfig::validate() const {
  if (!(min_step > 0 && min_step <= initial_step && initial_step < 1))
    throw std::invalid_argument("tracker config needs 0 < min_step <= initial_step < 1");
  if (!(max_step >= initial_step)) throw std::invalid_argument("tracker config needs max_step >= initial_step");
  if (!(newton_tolerance > 0 && dedup_tolerance > 0 && infinity_threshold > 1))
    throw std::invalid_argument("tracker tolerances must be positive (infinity_threshold > 1)");
  if (max_newton_iters < 1 || max_steps < 1 || !(end_log_time > 0))
    throw std::invalid_argument("tracker iteration limits must be positive");
}

std::string to_string(EndpointKind k) {
  switch (k) {
    case EndpointKind::Finite: return "finite";
    case EndpointKind::AtInfinity: return "at_infinity";
    case EndpointKind::SingularEndpoint: return "singular_endpoint";
    case EndpointKind::Failed: return "failed";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Homotopy

namespace {

Complex random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

Complex int_pow(Complex z, unsigned k) {
  Complex r = 1;
  for (unsigned i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

Complex random_box(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  const double re = box(rng);
  const double im = box(rng);
  return {re, im};
}

TotalDegreeHomotopy::TotalDegreeHomotopy(const ComplexPolySystem& target, std::mt19937_64& rng)
    : affine_target_(target), homogeneous_target_(target.homogenize()), affine_dim_(target.nvars),
      degrees_(target.degrees()) {
  if (!target.is_square()) throw StructuralError("homotopy target must be a square system");
  for (unsigned d : degrees_)
    if (d == 0) throw StructuralError("homotopy target has a constant equation");
  gamma_ = random_unit(rng);
  for (std::size_t j = 0; j < affine_dim_; ++j) start_constants_.push_back(random_unit(rng));
  patch_.resize(static_cast<Eigen::Index>(dim()));
  for (Eigen::Index k = 0; k < patch_.size(); ++k) patch_[k] = random_box(rng);
}

std::size_t TotalDegreeHomotopy::path_count() const {
  std::size_t count = 1;
  for (unsigned d : degrees_) count *= d;
  return count;
}

std::vector<CVector> TotalDegreeHomotopy::start_roots() const {
  const std::size_t total = path_count();
  std::vector<CVector> roots;
  roots.reserve(total);
  std::vector<unsigned> digit(affine_dim_, 0);
  for (std::size_t r = 0; r < total; ++r) {
    CVector x(static_cast<Eigen::Index>(dim()));
    for (std::size_t j = 0; j < affine_dim_; ++j) {
      const double d = degrees_[j];
      const double theta = (std::arg(start_constants_[j]) + 2 * std::numbers::pi * digit[j]) / d;
      x[static_cast<Eigen::Index>(j)] = std::polar(1.0, theta);
    }
    x[static_cast<Eigen::Index>(affine_dim_)] = 1.0;
    x /= patch_.cwiseProduct(x).sum();
    roots.push_back(std::move(x));
    for (std::size_t j = 0; j < affine_dim_; ++j) {
      if (++digit[j] < degrees_[j]) break;
      digit[j] = 0;
    }
  }
  return roots;
}

CVector TotalDegreeHomotopy::start_values(const CVector& x) const {
  CVector g(static_cast<Eigen::Index>(affine_dim_));
  const Complex h = x[static_cast<Eigen::Index>(affine_dim_)];
  for (std::size_t j = 0; j < affine_dim_; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    g[jj] = int_pow(x[jj], degrees_[j]) - start_constants_[j] * int_pow(h, degrees_[j]);
  }
  return g;
}

CMatrix TotalDegreeHomotopy::start_jacobian(const CVector& x) const {
  const auto n = static_cast<Eigen::Index>(affine_dim_);
  CMatrix jac = CMatrix::Zero(n, n + 1);
  const Complex h = x[n];
  for (Eigen::Index j = 0; j < n; ++j) {
    const unsigned d = degrees_[static_cast<std::size_t>(j)];
    jac(j, j) = static_cast<double>(d) * int_pow(x[j], d - 1);
    jac(j, n) = -start_constants_[static_cast<std::size_t>(j)] * static_cast<double>(d) * int_pow(h, d - 1);
  }
  return jac;
}

CVector TotalDegreeHomotopy::evaluate(const CVector& x, double t) const {
  const auto n = static_cast<Eigen::Index>(affine_dim_);
  CVector out(n + 1);
  out.head(n) = (1 - t) * gamma_ * start_values(x) + t * homogeneous_target_.evaluate(x);
  out[n] = patch_.cwiseProduct(x).sum() - 1.0;
  return out;
}

CMatrix TotalDegreeHomotopy::jacobian(const CVector& x, double t) const {
  const auto n = static_cast<Eigen::Index>(affine_dim_);
  CMatrix jac(n + 1, n + 1);
  jac.topRows(n) = (1 - t) * gamma_ * start_jacobian(x) + t * homogeneous_target_.jacobian(x);
  jac.row(n) = patch_.transpose();
  return jac;
}

CVector TotalDegreeHomotopy::dt(const CVector& x) const {
  const auto n = static_cast<Eigen::Index>(affine_dim_);
  CVector out = CVector::Zero(n + 1);
  out.head(n) = homogeneous_target_.evaluate(x) - gamma_ * start_values(x);
  return out;
}

// ---------------------------------------------------------------------------
// Path tracking

namespace {

constexpr double kCorrectorTolerance = 1e-9;
// Largest Puiseux cycle number the infinity trend test accounts for.
constexpr double kMaxCycle = 16.0;
constexpr double kTrendWindow = 4.0;

double t_of(double s) { return -std::expm1(-s); }

// dx/ds = (1 - t) dx/dt with dx/dt = -H_x^{-1} H_t.
CVector velocity(const TotalDegreeHomotopy& hom, const CVector& x, double s) {
  const double t = t_of(s);
  return -(1 - t) * hom.jacobian(x, t).partialPivLu().solve(hom.dt(x));
}

bool correct(const TotalDegreeHomotopy& hom, CVector& x, double s, const TrackerConfig& cfg) {
  const double t = t_of(s);
  double previous = std::numeric_limits<double>::infinity();
  for (int it = 0; it < cfg.max_newton_iters; ++it) {
    const CVector delta = hom.jacobian(x, t).partialPivLu().solve(hom.evaluate(x, t));
    if (!delta.allFinite()) return false;
    x -= delta;
    const double size = delta.norm();
    if (size <= kCorrectorTolerance * std::max(1.0, x.norm())) return true;
    if (it > 0 && size > 0.5 * previous) return false;
    previous = size;
  }
  return false;
}

double homogenizing_ratio(const CVector& x) {
  const auto n = x.size() - 1;
  const double scale = x.cwiseAbs().maxCoeff();
  return scale == 0 ? 0 : std::abs(x[n]) / scale;
}

// Newton on the affine target at t = 1. Accepted when the relative residual
// ends below newton_tolerance and the iterate stayed close to where it started.
bool refine_affine(const ComplexPolySystem& sys, CVector& a, const TrackerConfig& cfg) {
  const CVector start = a;
  CVector best = a;
  double best_residual = relative_residual(sys, a);
  for (int it = 0; it < 8 && best_residual > 1e-15; ++it) {
    Eigen::FullPivLU<CMatrix> lu(sys.jacobian(a));
    const CVector delta = lu.solve(sys.evaluate(a));
    if (!delta.allFinite()) break;
    a -= delta;
    const double residual = relative_residual(sys, a);
    if (residual < best_residual) {
      best_residual = residual;
      best = a;
    }
    if (delta.norm() <= 1e-15 * std::max(1.0, a.norm())) break;
  }
  a = best;
  return best_residual < cfg.newton_tolerance && (a - start).norm() <= 1e-2 * std::max(1.0, start.norm());
}

}  // namespace

double relative_residual(const ComplexPolySystem& sys, const CVector& a) {
  double worst = 0;
  for (const auto& eq : sys.equations) {
    Complex value = 0;
    double magnitude = 0;
    for (const auto& t : eq.terms()) {
      Complex m = t.coeff;
      for (std::size_t i = 0; i < sys.nvars; ++i)
        for (unsigned k = 0; k < t.exponents[i]; ++k) m *= a[static_cast<Eigen::Index>(i)];
      value += m;
      magnitude += std::abs(m);
    }
    worst = std::max(worst, std::abs(value) / std::max(magnitude, 1.0));
  }
  return worst;
}

PathResult track_path(const CVector& start, const TotalDegreeHomotopy& hom, const TrackerConfig& cfg) {
  PathResult result;
  CVector x = start;
  double s = 0;
  double ds = cfg.initial_step;
  int streak = 0;
  bool underflow = false;

  // (s, ratio) after every accepted step, for the trend test.
  std::vector<std::pair<double, double>> samples{{0.0, homogenizing_ratio(x)}};

  while (s < cfg.end_log_time) {
    if (result.steps >= cfg.max_steps) {
      underflow = true;
      break;
    }
    ds = std::min(ds, cfg.end_log_time - s);
    // Classical RK4 predictor.
    const CVector k1 = velocity(hom, x, s);
    const CVector k2 = velocity(hom, x + 0.5 * ds * k1, s + 0.5 * ds);
    const CVector k3 = velocity(hom, x + 0.5 * ds * k2, s + 0.5 * ds);
    const CVector k4 = velocity(hom, x + ds * k3, s + ds);
    CVector next = x + (ds / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    ++result.steps;

    if (next.allFinite() && correct(hom, next, s + ds, cfg)) {
      x = std::move(next);
      s += ds;
      if (++streak >= 3) {
        ds = std::min(2 * ds, cfg.max_step);
        streak = 0;
      }
      samples.emplace_back(s, homogenizing_ratio(x));
    } else {
      ds *= 0.5;
      streak = 0;
      if (ds < cfg.min_step) {
        underflow = true;
        break;
      }
    }
  }

  result.projective = x;
  result.log_time_reached = s;
  const auto n = static_cast<Eigen::Index>(hom.affine_dim());
  const double ratio = homogenizing_ratio(x);
  // Geometric decay of |h| over the last window means the branch converges
  // to h = 0; a finite endpoint flattens out instead.
  auto anchor = std::find_if(samples.rbegin(), samples.rend(),
                             [s](const auto& p) { return p.first <= s - kTrendWindow; });
  if (anchor == samples.rend()) anchor = std::prev(samples.rend());
  const double window = s - anchor->first;
  const bool decaying = window >= 1.0 && anchor->second > 0 &&
                        ratio < anchor->second * std::exp(-window / kMaxCycle);
  const bool tiny_h = ratio < 1.0 / cfg.infinity_threshold;

  if (std::abs(x[n]) > 0) {
    result.affine = x.head(n) / x[n];
    if (!underflow && !tiny_h && !decaying) {
      CVector refined = result.affine;
      result.newton_converged = refine_affine(hom.affine_target(), refined, cfg);
      if (result.newton_converged && refined.cwiseAbs().maxCoeff() < cfg.infinity_threshold) {
        result.affine = refined;
        result.residual = relative_residual(hom.affine_target(), refined);
        result.kind = EndpointKind::Finite;
        return result;
      }
    }
    result.residual = relative_residual(hom.affine_target(), result.affine);
  }
  if (tiny_h || decaying) {
    result.kind = EndpointKind::AtInfinity;
  } else {
    result.kind = underflow ? EndpointKind::Failed : EndpointKind::SingularEndpoint;
  }
  return result;
}

std::vector<PathResult> track_all(const TotalDegreeHomotopy& hom, std::span<const CVector> starts,
                                  const TrackerConfig& config, Execution mode) {
  std::vector<PathResult> results(starts.size());
  const auto count = static_cast<long>(starts.size());
  if (mode == Execution::Serial) {
    for (long i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = track_path(starts[static_cast<std::size_t>(i)], hom, config);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = track_path(starts[static_cast<std::size_t>(i)], hom, config);
  }
  return results;
}

SolutionSet solve_total_degree(const ComplexPolySystem& target, const TrackerConfig& config, std::uint64_t seed,
                               Execution mode) {
  config.validate();
  std::mt19937_64 rng(seed);
  const TotalDegreeHomotopy hom(target, rng);
  const auto starts = hom.start_roots();
  SolutionSet set;
  set.path_count = starts.size();
  set.solutions = track_all(hom, starts, config, mode);
  for (const auto& p : set.solutions) {
    switch (p.kind) {
      case EndpointKind::Finite: ++set.finite; break;
      case EndpointKind::AtInfinity: ++set.at_infinity; break;
      case EndpointKind::SingularEndpoint: ++set.singular; break;
      case EndpointKind::Failed: ++set.failed; break;
    }
  }
  return set;
}

CVector projective_normalize(const CVector& v) {
  Eigen::Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  return v / v[arg];
}

std::vector<CVector> dedup_projective(std::vector<CVector> points, double tolerance) {
  for (auto& p : points) p = projective_normalize(p);
  // Canonical order: lexicographic on rounded coordinates.
  auto key = [](const CVector& v) {
    std::vector<double> k;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      k.push_back(std::round(v[i].real() * 1e4));
      k.push_back(std::round(v[i].imag() * 1e4));
    }
    return k;
  };
  std::stable_sort(points.begin(), points.end(), [&](const CVector& a, const CVector& b) { return key(a) < key(b); });

  std::vector<CVector> distinct;
  for (const auto& p : points) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const CVector& q) {
      // Distance from p to the line through q.
      const Complex lambda = q.dot(p) / q.squaredNorm();
      return (p - lambda * q).norm() <= tolerance * std::max(1.0, p.norm());
    });
    if (!seen) distinct.push_back(p);
  }
  return distinct;
}

// ---------------------------------------------------------------------------
// ED critical system

namespace {

double binom(unsigned n, unsigned k) { return binomial(n, k).get_d(); }

}  // namespace

std::vector<Complex> square_coefficients(std::span<const Complex> a) {
  std::vector<Complex> out(2 * a.size() - 1, 0.0);
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < a.size(); ++q) out[p + q] += a[p] * a[q];
  return out;
}

Complex bw_pair_numeric(std::span<const Complex> f, std::span<const Complex> g) {
  if (f.size() != g.size() || f.empty()) throw StructuralError("numeric pairing needs equal degrees");
  const auto d = static_cast<unsigned>(f.size() - 1);
  Complex sum = 0;
  for (unsigned k = 0; k <= d; ++k) sum += f[k] * g[k] / binom(d, k);
  return sum;
}

Complex bw_distance(std::span<const Complex> u, std::span<const Complex> a) {
  auto diff = square_coefficients(a);
  if (diff.size() != u.size()) throw StructuralError("data point and parameters disagree on degree");
  for (std::size_t m = 0; m < diff.size(); ++m) diff[m] = u[m] - diff[m];
  return bw_pair_numeric(diff, diff);
}

EDCriticalSystem build_ed_critical_system(unsigned n, std::vector<Complex> data) {
  if (n < 1) throw std::invalid_argument("ED critical system needs n >= 1");
  if (data.size() != 2 * n + 1) throw StructuralError("data point must have 2n+1 coefficients");
  EDCriticalSystem ed{n, std::move(data), {n + 1, {}}};
  const std::size_t nv = n + 1;
  for (unsigned j = 0; j <= n; ++j) {
    ComplexPoly eq(nv);
    for (unsigned k = 0; k <= n; ++k) {
      const double w = 1.0 / binom(2 * n, j + k);
      std::vector<unsigned> e(nv, 0);
      e[k] = 1;
      eq.add_term(ed.data[j + k] * w, e);
      // -F_{j+k}(a) a_k
      for (unsigned p = 0; p <= n; ++p) {
        if (j + k < p || j + k - p > n) continue;
        const unsigned q = j + k - p;
        std::vector<unsigned> c(nv, 0);
        ++c[p];
        ++c[q];
        ++c[k];
        eq.add_term(-w, c);
      }
    }
    ed.system.equations.push_back(std::move(eq));
  }
  return ed;
}

EDCriticalSystem build_ed_critical_system(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> u;
  for (unsigned m = 0; m <= 2 * n; ++m) u.push_back(random_box(rng));
  return build_ed_critical_system(n, std::move(u));
}

NumericEDReport numeric_eddegree(unsigned n, std::uint64_t seed, const TrackerConfig& config, Execution mode) {
  const EDCriticalSystem ed = build_ed_critical_system(n, seed);
  // Independent stream for the homotopy's random constants.
  const SolutionSet set = solve_total_degree(ed.system, config, seed ^ 0x9E3779B97F4A7C15ull, mode);

  NumericEDReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.path_count = set.path_count;
  rep.finite = set.finite;
  rep.at_infinity = set.at_infinity;
  rep.singular = set.singular;
  rep.failed = set.failed;

  double u_norm = 0;
  for (const auto& c : ed.data) u_norm += std::norm(c);
  u_norm = std::sqrt(u_norm);

  std::vector<CVector> images;
  for (const auto& p : set.solutions) {
    if (p.kind != EndpointKind::Finite) continue;
    const CVector& a = p.affine;
    if (a.cwiseAbs().maxCoeff() < config.dedup_tolerance) {
      ++rep.origin;
      continue;
    }
    ++rep.finite_nonzero;
    std::vector<Complex> av(a.data(), a.data() + a.size());
    const auto f2 = square_coefficients(av);
    // At a critical point Q(F, F) == Q(u, F), so isotropy is measured on the
    // scale of |u| |F| rather than |F|^2.
    double f2_norm = 0;
    for (const auto& c : f2) f2_norm += std::norm(c);
    if (std::abs(bw_pair_numeric(f2, f2)) < 1e-8 * std::sqrt(f2_norm) * u_norm) {
      ++rep.isotropic;
      continue;
    }
    // Central differences of the BW distance along each coordinate.
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    double u_scale = 0;
    for (const auto& c : ed.data) u_scale = std::max(u_scale, std::abs(c));
    for (std::size_t j = 0; j < av.size(); ++j) {
      const double h = 1e-5 * scale;
      auto plus = av;
      auto minus = av;
      plus[j] += h;
      minus[j] -= h;
      const Complex deriv = (bw_distance(ed.data, plus) - bw_distance(ed.data, minus)) / (2 * h);
      const double normalized = std::abs(deriv) / (std::pow(scale, 3) + u_scale * scale);
      rep.max_criticality_residual = std::max(rep.max_criticality_residual, normalized);
    }
    images.emplace_back(Eigen::Map<const CVector>(f2.data(), static_cast<Eigen::Index>(f2.size())));
  }

  const auto distinct = dedup_projective(images, config.dedup_tolerance);
  rep.eddegree = static_cast<long>(distinct.size());
  for (const auto& v : distinct) rep.critical_points.emplace_back(v.data(), v.data() + v.size());

  if (rep.finite_nonzero != 2 * distinct.size() + rep.isotropic)
    rep.warnings.push_back("finite nonzero endpoints (" + std::to_string(rep.finite_nonzero) +
                           ") are not twice the distinct critical points (" + std::to_string(distinct.size()) + ")");
  if (rep.singular > 0)
    rep.warnings.push_back(std::to_string(rep.singular) + " paths ended at finite singular endpoints");
  if (rep.isotropic > 0) rep.warnings.push_back(std::to_string(rep.isotropic) + " isotropic critical points removed");
  if (rep.failed > 0) {
    rep.warnings.push_back(std::to_string(rep.failed) + " of " + std::to_string(rep.path_count) + " paths failed");
    if (20 * rep.failed > rep.path_count)
      throw NumericFailure("more than 5% of the paths failed (" + std::to_string(rep.failed) + "/" +
                           std::to_string(rep.path_count) + "); re-run with another seed or tracker config");
  }
  return rep;
}

}  // namespace eddeg
