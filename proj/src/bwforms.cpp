#include "eddeg/bwforms.hpp"

#include "eddeg/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace eddeg {

BinaryForm::BinaryForm(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw StructuralError("a binary form needs at least one coefficient");
}

BinaryForm BinaryForm::linear_power(const GaussianRational& a, const GaussianRational& b, unsigned d) {
  BinaryForm f(d);
  for (unsigned k = 0; k <= d; ++k) f[k] = GaussianRational(binomial(d, k)) * a.pow(d - k) * b.pow(k);
  return f;
}

BinaryForm BinaryForm::isotropic_quadric() { return BinaryForm({1, 0, 1}); }

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree() != degree()) throw StructuralError("adding binary forms of different degree");
  for (unsigned k = 0; k <= degree(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const GaussianRational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r(a.degree() + b.degree());
  for (unsigned i = 0; i <= a.degree(); ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; j <= b.degree(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

BinaryForm BinaryForm::pow(unsigned k) const {
  BinaryForm r(std::vector<GaussianRational>{1});
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

SparsePoly BinaryForm::to_poly() const {
  SparsePoly p(2);
  for (unsigned k = 0; k <= degree(); ++k) p.add_term({degree() - k, k}, coeffs_[k]);
  return p;
}

GaussianRational bw_pair_coeff(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw StructuralError("Bombieri-Weyl pairing needs equal degrees");
  const unsigned d = f.degree();
  GaussianRational sum;
  for (unsigned k = 0; k <= d; ++k) {
    if (f[k].is_zero() || g[k].is_zero()) continue;
    sum += f[k] * g[k] / GaussianRational(binomial(d, k));
  }
  return sum;
}

GaussianRational bw_pair_diff(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw StructuralError("Bombieri-Weyl pairing needs equal degrees");
  const unsigned d = f.degree();
  const SparsePoly target = g.to_poly();
  GaussianRational sum;
  for (unsigned k = 0; k <= d; ++k) {
    if (f[k].is_zero()) continue;
    // Apply d^(d-k)/dx^(d-k) d^k/dy^k to g; the result is a constant.
    SparsePoly h = target;
    for (unsigned i = 0; i < d - k; ++i) h = poly_diff(h, 0);
    for (unsigned i = 0; i < k; ++i) h = poly_diff(h, 1);
    sum += f[k] * h.coeff({0, 0});
  }
  return sum / GaussianRational(factorial(d));
}

BinaryForm harmonic_element(HarmonicBasisIndex idx) {
  if (idx.j > idx.n) throw StructuralError("harmonic basis index j exceeds n");
  const GaussianRational i = GaussianRational::imaginary_unit();
  return BinaryForm::linear_power(1, i, idx.n - idx.j) * BinaryForm::linear_power(1, -i, idx.j);
}

bool pairing_rule(unsigned n, unsigned j, unsigned k) {
  if (n < 1) throw StructuralError("pairing rule needs n >= 1");
  if (j > 2 * n || k > 2 * n) throw StructuralError("pairing rule index out of range");
  return j + k == 2 * n;
}

namespace {

// Inverse of the change of basis from harmonic coordinates to monomial
// coefficients, one per degree. Entries are never erased, so references
// handed out stay valid.
const ExactMatrix& harmonic_inverse(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<const ExactMatrix>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) {
    ExactMatrix basis(d + 1, std::vector<GaussianRational>(d + 1));
    for (unsigned j = 0; j <= d; ++j) {
      const BinaryForm h = harmonic_element({d, j});
      for (unsigned k = 0; k <= d; ++k) basis[k][j] = h[k];
    }
    auto inv = inverse(std::move(basis));
    if (!inv) throw std::logic_error("harmonic basis is singular");
    slot = std::make_unique<const ExactMatrix>(std::move(*inv));
  }
  return *slot;
}

}  // namespace

std::vector<GaussianRational> harmonic_coordinates(const BinaryForm& f) {
  return multiply(harmonic_inverse(f.degree()), f.coeffs());
}

std::vector<HarmonicComponent> harmonic_components(const BinaryForm& f) {
  const unsigned d = f.degree();
  const auto w = harmonic_coordinates(f);
  const GaussianRational i = GaussianRational::imaginary_unit();
  std::vector<HarmonicComponent> parts;
  // q^i (x+iy)^(d-2i) = (x+iy)^(d-i)(x-iy)^i is basis index i; its conjugate is index d-i.
  for (unsigned p = 0; 2 * p <= d; ++p) {
    const unsigned m = d - 2 * p;
    BinaryForm h(m);
    if (m == 0) {
      h[0] = w[p];
    } else {
      h += BinaryForm::linear_power(1, i, m) * w[p];
      h += BinaryForm::linear_power(1, -i, m) * w[d - p];
    }
    if (!h.is_zero()) parts.push_back({p, std::move(h)});
  }
  return parts;
}

BinaryForm recompose(const std::vector<HarmonicComponent>& parts, unsigned degree) {
  BinaryForm total(degree);
  const BinaryForm q = BinaryForm::isotropic_quadric();
  for (const auto& part : parts) total += q.pow(part.q_power) * part.h;
  return total;
}

}  // namespace eddeg
