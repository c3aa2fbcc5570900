#pragma once

// The quartic ||f^2||^2 on the variety of squares, its singular structure and
// the middle catalecticant.

#include "eddeg/bwforms.hpp"
#include "eddeg/exact.hpp"
#include "eddeg/exact_linalg.hpp"

#include <string>
#include <vector>

namespace eddeg {

/// Binary form whose coefficients are polynomials in z_0..z_{m-1}.
struct SymbolicForm {
  unsigned form_degree = 0;
  std::size_t z_vars = 0;
  std::vector<SparsePoly> coeffs;  // coeffs[k] multiplies x^(d-k) y^k
};

/// f = sum_j z_j (x+iy)^(n-j)(x-iy)^j in monomial coordinates.
SymbolicForm harmonic_symbolic(unsigned n);

/// f^2 for the harmonic parametrization above.
SymbolicForm square_symbolic(unsigned n);

/// Numeric specialization of a symbolic form at an exact point.
BinaryForm specialize(const SymbolicForm& f, std::span<const GaussianRational> z);

struct QuarticInvariant {
  unsigned n = 0;
  SparsePoly poly;             // content-normalized
  GaussianRational raw_scalar; // Q_BW(f^2, f^2) == raw_scalar * poly
};

QuarticInvariant build_quartic(unsigned n);

/// Sum of variable indices of every monomial, counted with multiplicity.
bool is_isobaric(const SparsePoly& p, unsigned weight);
/// Invariance under z_j <-> z_{n-j}.
bool is_reversal_symmetric(const SparsePoly& p);

/// Support criteria on the monomials of q (both osculating points).
bool osculating_containment_check(const QuarticInvariant& q, unsigned N);
bool osculating_singularity_check(const QuarticInvariant& q, unsigned N);

/// Direct substitution oracles: q (resp. every partial of q) vanishes
/// identically on span(z_0..z_N) and on span(z_{n-N}..z_n).
bool vanishes_on_osculating_spaces(const SparsePoly& q, unsigned n, unsigned N);
bool singular_along_osculating_spaces(const SparsePoly& q, unsigned n, unsigned N);

struct SingularComponent {
  std::string label;
  std::vector<SparsePoly> vanishing_ideal_generators;  // in z_0..z_n
  std::vector<SparsePoly> parametrization;             // n+1 polynomials in parameters s_0..
  int projective_degree = 1;
  int dimension = 0;

  std::size_t z_count() const { return parametrization.size(); }
  /// Generators composed with the parametrization are identically zero.
  bool parametrization_satisfies_ideal() const;
};

/// All partials of q composed with the parametrization vanish identically.
bool verify_component(const QuarticInvariant& q, const SingularComponent& c);

/// Points cut on a curve component by a generic quadric section: 2 * degree.
int bezout_slice_points(const SingularComponent& c);

/// Tangent line to the rational normal curve at (x+iy)^n (mirror = at (x-iy)^n).
SingularComponent tangent_line_component(unsigned n, bool mirror);
/// The points (x+iy)^n and (x-iy)^n.
SingularComponent extreme_point_component(unsigned n, bool mirror);
/// z1 = z3 = 0, z2^2 + 12 z0 z4 = 0 in P^4.
SingularComponent n4_conic_component();

/// Hankel matrix M[j][k] = u_{j+k} / C(2n, j+k).
ExactMatrix catalecticant_matrix(const BinaryForm& u);
GaussianRational catalecticant_det(const BinaryForm& u);

}  // namespace eddeg
