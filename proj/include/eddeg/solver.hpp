#pragma once

// Total-degree homotopy continuation and the numeric EDdegree count.
//
// Paths are tracked projectively: the target system is homogenized with one
// extra coordinate h and restricted to a random affine patch v.x = 1, so
// solutions at infinity (h = 0) stay at finite coordinates. The homotopy
// parameter is reparametrized as t = 1 - exp(-s); in the log-time s the
// Puiseux branches ending at singular endpoints are smooth and slowly
// varying, which is enough to tell endpoints at infinity from finite ones
// without a full endgame.

#include "eddeg/exact.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace eddeg {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

struct ComplexTerm {
  Complex coeff;
  std::vector<unsigned> exponents;
};

class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::size_t nvars) : nvars_(nvars) {}
  static ComplexPoly from_exact(const SparsePoly& p);

  void add_term(Complex c, std::vector<unsigned> exponents);

  std::size_t nvars() const { return nvars_; }
  const std::vector<ComplexTerm>& terms() const { return terms_; }
  unsigned degree() const;

  Complex evaluate(const CVector& x) const;
  /// Value, and gradient written into `grad`.
  Complex evaluate(const CVector& x, Eigen::RowVectorXcd& grad) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<ComplexTerm> terms_;
};

struct ComplexPolySystem {
  std::size_t nvars = 0;
  std::vector<ComplexPoly> equations;

  bool is_square() const { return equations.size() == nvars; }
  std::vector<unsigned> degrees() const;
  CVector evaluate(const CVector& x) const;
  CMatrix jacobian(const CVector& x) const;
  /// Adds a trailing variable h; every term is multiplied by h^(deg - term degree).
  ComplexPolySystem homogenize() const;
};

struct TrackerConfig {
  double initial_step = 0.05;   // in log-time s
  double min_step = 1e-7;
  double max_step = 1.0;
  double newton_tolerance = 1e-10;
  int max_newton_iters = 3;
  double infinity_threshold = 1e8;
  double dedup_tolerance = 1e-6;
  double end_log_time = 28.0;   // track to t = 1 - exp(-end_log_time)
  int max_steps = 20000;
  std::uint64_t seed = 20221;

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

/// Real and imaginary parts uniform in [-1, 1].
Complex random_box(std::mt19937_64& rng);

/// max_j |F_j(x)| / max(1, sum of |terms of F_j at x|)
double relative_residual(const ComplexPolySystem& sys, const CVector& x);

enum class EndpointKind { Finite, AtInfinity, SingularEndpoint, Failed };
std::string to_string(EndpointKind k);

struct PathResult {
  CVector projective;            // homogeneous coordinates (x, h), on the patch
  CVector affine;                // x / h (empty when h == 0)
  EndpointKind kind = EndpointKind::Failed;
  bool newton_converged = false;
  double residual = 0;           // target residual at the affine point, relative
  double log_time_reached = 0;
  int steps = 0;
};

/// H(x, t) = (1 - t) gamma G(x) + t F(x) on the patch v.x = 1, with
/// G_j = x_j^(d_j) - r_j h^(d_j).
class TotalDegreeHomotopy {
 public:
  TotalDegreeHomotopy(const ComplexPolySystem& target, std::mt19937_64& rng);

  std::size_t affine_dim() const { return affine_dim_; }
  std::size_t dim() const { return affine_dim_ + 1; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  std::size_t path_count() const;

  /// All prod(d_j) start roots, on the patch.
  std::vector<CVector> start_roots() const;

  CVector evaluate(const CVector& x, double t) const;
  CMatrix jacobian(const CVector& x, double t) const;
  /// dH/dt
  CVector dt(const CVector& x) const;

  CVector start_values(const CVector& x) const;
  const ComplexPolySystem& target() const { return homogeneous_target_; }
  const ComplexPolySystem& affine_target() const { return affine_target_; }
  const CVector& patch() const { return patch_; }

 private:
  CMatrix start_jacobian(const CVector& x) const;

  ComplexPolySystem affine_target_;
  ComplexPolySystem homogeneous_target_;
  std::size_t affine_dim_ = 0;
  std::vector<unsigned> degrees_;
  std::vector<Complex> start_constants_;
  Complex gamma_;
  CVector patch_;
};

/// Tracks one path from t = 0 to t = 1 and classifies its endpoint.
PathResult track_path(const CVector& start, const TotalDegreeHomotopy& homotopy, const TrackerConfig& config);

enum class Execution { Serial, Parallel };

/// Tracks every start root. Results are indexed like `starts` and do not
/// depend on the execution mode.
std::vector<PathResult> track_all(const TotalDegreeHomotopy& homotopy, std::span<const CVector> starts,
                                  const TrackerConfig& config, Execution mode = Execution::Parallel);

struct SolutionSet {
  std::vector<PathResult> solutions;
  std::size_t path_count = 0;
  std::size_t finite = 0;
  std::size_t at_infinity = 0;
  std::size_t singular = 0;
  std::size_t failed = 0;
};

SolutionSet solve_total_degree(const ComplexPolySystem& target, const TrackerConfig& config,
                               std::uint64_t seed, Execution mode = Execution::Parallel);

/// Projective deduplication: scale by the largest-modulus coordinate and
/// merge points within `tolerance`. Input order does not matter.
std::vector<CVector> dedup_projective(std::vector<CVector> points, double tolerance);

/// Scaled by its largest-modulus coordinate so that coordinate equals 1.
CVector projective_normalize(const CVector& v);

// ---------------------------------------------------------------------------
// Bombieri-Weyl ED problem on the variety of squares.

struct EDCriticalSystem {
  unsigned n = 0;
  std::vector<Complex> data;  // u, 2n + 1 monomial coefficients
  ComplexPolySystem system;   // unknowns a_0..a_n, n + 1 cubics
};

/// Critical equations Q_BW(u - F(a), f x^(n-j) y^j) = 0 where f = sum a_k x^(n-k) y^k
/// and F(a) is the coefficient vector of f^2.
EDCriticalSystem build_ed_critical_system(unsigned n, std::uint64_t seed);
EDCriticalSystem build_ed_critical_system(unsigned n, std::vector<Complex> data);

/// Coefficient vector of f^2.
std::vector<Complex> square_coefficients(std::span<const Complex> a);
/// Numeric Bombieri-Weyl pairing on degree-d coefficient vectors.
Complex bw_pair_numeric(std::span<const Complex> f, std::span<const Complex> g);
/// Q_BW(u - F(a), u - F(a))
Complex bw_distance(std::span<const Complex> u, std::span<const Complex> a);

struct NumericEDReport {
  unsigned n = 0;
  std::uint64_t seed = 0;
  long eddegree = 0;
  std::size_t path_count = 0;
  std::size_t finite = 0;
  std::size_t origin = 0;
  std::size_t finite_nonzero = 0;
  std::size_t at_infinity = 0;
  std::size_t singular = 0;
  std::size_t failed = 0;
  std::size_t isotropic = 0;
  double max_criticality_residual = 0;
  std::vector<std::vector<Complex>> critical_points;  // one F(a) per distinct point
  std::vector<std::string> warnings;
};

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws NumericFailure when more than 5% of the paths fail.
NumericEDReport numeric_eddegree(unsigned n, std::uint64_t seed, const TrackerConfig& config,
                                 Execution mode = Execution::Parallel);

// ---------------------------------------------------------------------------
// Auxiliary point counts.

struct SliceResult {
  std::vector<CVector> points;        // distinct, projectively normalized
  std::size_t singular_endpoints = 0;  // paths that ended at a singular or failed endpoint
};

/// Points of {Q_2 = 0, quadric = 0} in P^2, solved in the charts z0 = 1 and
/// z2 = 1. `quadric_coeffs` lists the coefficients of z0^2, z0z1, z0z2, z1^2,
/// z1z2, z2^2.
SliceResult slice_points_n2(std::span<const Complex> quadric_coeffs, const TrackerConfig& config,
                            std::uint64_t seed);

/// Points of Q_2 cut by a random quadric. A quadric whose slice has singular
/// endpoints is nongeneric and is redrawn, at most `max_retries` times.
std::size_t count_slice_points_n2(std::uint64_t seed, const TrackerConfig& config, int max_retries = 3);

struct ProjectivePoint {
  std::vector<GaussianRational> exact;  // filled when the point snapped to an exact zero
  CVector numeric;
  bool is_exact = false;
  double residual = 0;
};

/// Common zeros of the four partials of the n = 3 quartic.
std::vector<ProjectivePoint> solve_partials_n3(const TrackerConfig& config, std::uint64_t seed);

}  // namespace eddeg
