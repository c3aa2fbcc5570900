#include "eddeg/catalecticant.hpp"

#include <algorithm>

namespace eddeg {

SymbolicForm harmonic_symbolic(unsigned n) {
  SymbolicForm f{n, n + 1, std::vector<SparsePoly>(n + 1, SparsePoly(n + 1))};
  for (unsigned j = 0; j <= n; ++j) {
    const BinaryForm basis = harmonic_element({n, j});
    const SparsePoly zj = SparsePoly::variable(n + 1, j);
    for (unsigned k = 0; k <= n; ++k)
      if (!basis[k].is_zero()) f.coeffs[k] += zj * basis[k];
  }
  return f;
}

SymbolicForm square_symbolic(unsigned n) {
  if (n < 1) throw StructuralError("square_symbolic needs n >= 1");
  const SymbolicForm f = harmonic_symbolic(n);
  SymbolicForm sq{2 * n, n + 1, std::vector<SparsePoly>(2 * n + 1, SparsePoly(n + 1))};
  for (unsigned a = 0; a <= n; ++a)
    for (unsigned b = 0; b <= n; ++b) sq.coeffs[a + b] += f.coeffs[a] * f.coeffs[b];
  return sq;
}

BinaryForm specialize(const SymbolicForm& f, std::span<const GaussianRational> z) {
  BinaryForm out(f.form_degree);
  for (unsigned k = 0; k <= f.form_degree; ++k) out[k] = poly_eval(f.coeffs[k], z);
  return out;
}

QuarticInvariant build_quartic(unsigned n) {
  const SymbolicForm sq = square_symbolic(n);
  SparsePoly raw(n + 1);
  for (unsigned m = 0; m <= 2 * n; ++m) {
    if (sq.coeffs[m].is_zero()) continue;
    raw += sq.coeffs[m] * sq.coeffs[m] * GaussianRational(1 / binomial(2 * n, m));
  }
  auto [poly, scale] = content_normalize(raw);
  return {n, std::move(poly), GaussianRational(scale)};
}

bool is_isobaric(const SparsePoly& p, unsigned weight) {
  return std::all_of(p.terms().begin(), p.terms().end(), [weight](const auto& t) {
    unsigned w = 0;
    for (std::size_t i = 0; i < t.first.size(); ++i) w += static_cast<unsigned>(i) * t.first[i];
    return w == weight;
  });
}

bool is_reversal_symmetric(const SparsePoly& p) {
  SparsePoly reversed(p.nvars());
  for (const auto& [e, c] : p.terms()) reversed.add_term(Exponent(e.rbegin(), e.rend()), c);
  return reversed == p;
}

namespace {

// Largest count, over the monomials of q, of variable factors with index <= N
// (low side) or index >= n-N (high side).
unsigned max_osculating_weight(const SparsePoly& q, unsigned n, unsigned N) {
  unsigned best = 0;
  for (const auto& [e, c] : q.terms()) {
    unsigned low = 0;
    unsigned high = 0;
    for (unsigned i = 0; i < e.size(); ++i) {
      if (i <= N) low += e[i];
      if (i + N >= n) high += e[i];
    }
    best = std::max({best, low, high});
  }
  return best;
}

SparsePoly restrict_to_span(const SparsePoly& q, unsigned n, unsigned N, bool high) {
  std::vector<SparsePoly> images;
  images.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    const bool keep = high ? i + N >= n : i <= N;
    images.push_back(keep ? SparsePoly::variable(n + 1, i) : SparsePoly(n + 1));
  }
  return poly_substitute(q, images);
}

}  // namespace

bool osculating_containment_check(const QuarticInvariant& q, unsigned N) {
  if (N < 1) throw StructuralError("osculating order N must be >= 1");
  return max_osculating_weight(q.poly, q.n, N) < 4;
}

bool osculating_singularity_check(const QuarticInvariant& q, unsigned N) {
  if (N < 1) throw StructuralError("osculating order N must be >= 1");
  return max_osculating_weight(q.poly, q.n, N) < 3;
}

bool vanishes_on_osculating_spaces(const SparsePoly& q, unsigned n, unsigned N) {
  return restrict_to_span(q, n, N, false).is_zero() && restrict_to_span(q, n, N, true).is_zero();
}

bool singular_along_osculating_spaces(const SparsePoly& q, unsigned n, unsigned N) {
  for (unsigned v = 0; v <= n; ++v) {
    if (!vanishes_on_osculating_spaces(poly_diff(q, v), n, N)) return false;
  }
  return true;
}

bool SingularComponent::parametrization_satisfies_ideal() const {
  return std::all_of(vanishing_ideal_generators.begin(), vanishing_ideal_generators.end(),
                     [this](const SparsePoly& g) { return poly_substitute(g, parametrization).is_zero(); });
}

bool verify_component(const QuarticInvariant& q, const SingularComponent& c) {
  if (c.z_count() != q.poly.nvars())
    throw StructuralError("component '" + c.label + "' has the wrong number of z coordinates");
  for (std::size_t v = 0; v < q.poly.nvars(); ++v) {
    if (!poly_substitute(poly_diff(q.poly, v), c.parametrization).is_zero()) return false;
  }
  return true;
}

int bezout_slice_points(const SingularComponent& c) {
  if (c.dimension != 1)
    throw std::invalid_argument("bezout_slice_points needs a curve component, got dimension " +
                                std::to_string(c.dimension));
  return 2 * c.projective_degree;
}

SingularComponent tangent_line_component(unsigned n, bool mirror) {
  if (n < 2) throw StructuralError("tangent line component needs n >= 2");
  SingularComponent c;
  c.label = mirror ? "tangent line at (x-iy)^" + std::to_string(n)
                   : "tangent line at (x+iy)^" + std::to_string(n);
  c.dimension = 1;
  c.projective_degree = 1;
  for (unsigned i = 0; i <= n; ++i) {
    const bool free = mirror ? i + 1 >= n : i <= 1;
    if (free) {
      c.parametrization.push_back(SparsePoly::variable(2, mirror ? i + 1 - n : i));
    } else {
      c.parametrization.emplace_back(2);
      c.vanishing_ideal_generators.push_back(SparsePoly::variable(n + 1, i));
    }
  }
  return c;
}

SingularComponent extreme_point_component(unsigned n, bool mirror) {
  SingularComponent c;
  c.label = mirror ? "point (x-iy)^" + std::to_string(n) : "point (x+iy)^" + std::to_string(n);
  c.dimension = 0;
  c.projective_degree = 1;
  const unsigned fixed = mirror ? n : 0;
  for (unsigned i = 0; i <= n; ++i) {
    if (i == fixed) {
      c.parametrization.push_back(SparsePoly::variable(1, 0));
    } else {
      c.parametrization.emplace_back(1);
      c.vanishing_ideal_generators.push_back(SparsePoly::variable(n + 1, i));
    }
  }
  return c;
}

SingularComponent n4_conic_component() {
  SingularComponent c;
  c.label = "conic z1=z3=0, z2^2+12z0z4=0";
  c.dimension = 1;
  c.projective_degree = 2;
  c.vanishing_ideal_generators = {SparsePoly::parse("z1", 5), SparsePoly::parse("z3", 5),
                                  SparsePoly::parse("z2^2+12z0z4", 5)};
  // Rational parametrization z0 = 3s^2, z2 = 6st, z4 = -t^2.
  c.parametrization = {SparsePoly::parse("3s0^2", 2, 's'), SparsePoly(2),
                       SparsePoly::parse("6s0s1", 2, 's'), SparsePoly(2),
                       SparsePoly::parse("-s1^2", 2, 's')};
  return c;
}

ExactMatrix catalecticant_matrix(const BinaryForm& u) {
  if (u.degree() % 2 != 0) throw StructuralError("middle catalecticant needs an even-degree form");
  const unsigned n = u.degree() / 2;
  ExactMatrix m(n + 1, std::vector<GaussianRational>(n + 1));
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned k = 0; k <= n; ++k) m[j][k] = u[j + k] / GaussianRational(binomial(2 * n, j + k));
  return m;
}

GaussianRational catalecticant_det(const BinaryForm& u) { return determinant(catalecticant_matrix(u)); }

}  // namespace eddeg
