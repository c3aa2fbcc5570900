#pragma once

// Binary forms, the Bombieri-Weyl pairing and the SO(2) harmonic basis.

#include "eddeg/exact.hpp"

#include <vector>

namespace eddeg {

/// f = sum_k coeffs[k] * x^(d-k) * y^k
class BinaryForm {
 public:
  BinaryForm() : coeffs_(1) {}
  explicit BinaryForm(unsigned degree) : coeffs_(degree + 1) {}
  explicit BinaryForm(std::vector<GaussianRational> coeffs);

  /// (a x + b y)^d
  static BinaryForm linear_power(const GaussianRational& a, const GaussianRational& b, unsigned d);
  /// x^2 + y^2
  static BinaryForm isotropic_quadric();

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational& operator[](unsigned k) { return coeffs_[k]; }
  const GaussianRational& operator[](unsigned k) const { return coeffs_[k]; }
  bool is_zero() const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator*=(const GaussianRational& c);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator*(BinaryForm a, const GaussianRational& c) { return a *= c; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

  BinaryForm pow(unsigned k) const;

  /// The form as a polynomial in (x, y).
  SparsePoly to_poly() const;

 private:
  std::vector<GaussianRational> coeffs_;
};

/// Bombieri-Weyl pairing sum_k f_k g_k / C(d, k). Symmetric and bilinear (no conjugation).
GaussianRational bw_pair_coeff(const BinaryForm& f, const BinaryForm& g);

/// Same pairing computed as f(d/dx, d/dy) g / d!.
GaussianRational bw_pair_diff(const BinaryForm& f, const BinaryForm& g);

struct HarmonicBasisIndex {
  unsigned n = 0;
  unsigned j = 0;
};

/// (x+iy)^(n-j) (x-iy)^j
BinaryForm harmonic_element(HarmonicBasisIndex idx);

/// Whether <(x+iy)^(2n-j)(x-iy)^j, (x+iy)^(2n-k)(x-iy)^k> is nonzero: exactly when j+k == 2n.
bool pairing_rule(unsigned n, unsigned j, unsigned k);

struct HarmonicComponent {
  unsigned q_power = 0;  // i in q^i h
  BinaryForm h;          // degree d - 2i, in span{(x+iy)^(d-2i), (x-iy)^(d-2i)}
};

/// f = sum_i q^i h_i, nonzero components only, ordered by increasing i.
std::vector<HarmonicComponent> harmonic_components(const BinaryForm& f);

/// Coordinates of f in the degree-d harmonic basis (x+iy)^(d-j)(x-iy)^j, j = 0..d.
std::vector<GaussianRational> harmonic_coordinates(const BinaryForm& f);

/// Reassembles sum_i q^i h_i.
BinaryForm recompose(const std::vector<HarmonicComponent>& parts, unsigned degree);

}  // namespace eddeg
