#pragma once

// Exact arithmetic over Q(i) and sparse multivariate polynomials.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eddeg {

/// Thrown on operand shape mismatches (nvars, degrees, index ranges).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gaussian rational a + b*i with a, b in Q. GMP keeps both parts canonical.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 as a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational pow(unsigned k) const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "a/b+c/d*i" style text; real values print without the imaginary part.
  std::string to_string() const;
  static GaussianRational parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

mpq_class binomial(unsigned n, unsigned k);
mpq_class factorial(unsigned n);

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded reverse-lex, highest degree first. Iteration over a SparsePoly
/// follows this order, which is also the canonical print order.
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in nvars variables with Q(i) coefficients.
/// No stored term ever has a zero coefficient.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, GaussianRational, MonomialOrder>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const GaussianRational& c);
  static SparsePoly variable(std::size_t nvars, std::size_t index);
  static SparsePoly monomial(const GaussianRational& c, Exponent e);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a monomial (zero if absent).
  GaussianRational coeff(const Exponent& e) const;
  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const GaussianRational& c);

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool has_real_coefficients() const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const GaussianRational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const GaussianRational& c) { return a *= c; }
  friend SparsePoly operator*(const GaussianRational& c, SparsePoly a) { return a *= c; }
  SparsePoly operator-() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical text form, e.g. "5z1^2z2^2+4z0z2^3-(1/2+3*i)z3".
  std::string to_string(char var = 'z') const;
  /// Inverse of to_string for the same variable letter.
  static SparsePoly parse(std::string_view text, std::size_t nvars, char var = 'z');

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

SparsePoly poly_add(const SparsePoly& p, const SparsePoly& q);
SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q);
SparsePoly poly_pow(const SparsePoly& p, unsigned k);
SparsePoly poly_diff(const SparsePoly& p, std::size_t var);

GaussianRational poly_eval(const SparsePoly& p, std::span<const GaussianRational> point);
/// Composition p(images[0], ..., images[nvars-1]); images share a common nvars.
SparsePoly poly_substitute(const SparsePoly& p, std::span<const SparsePoly> images);

/// Numeric evaluation with complex doubles.
std::complex<double> poly_eval_numeric(const SparsePoly& p,
                                       std::span<const std::complex<double>> point);

/// p == scale * normalized, where scale is the positive gcd of the coefficients
/// carrying the sign that makes the lex-greatest monomial's coefficient positive.
struct Normalized {
  SparsePoly poly;
  mpq_class scale;
};
Normalized content_normalize(const SparsePoly& p);

/// True when p == c * q for some nonzero scalar c.
bool projectively_equal(const SparsePoly& p, const SparsePoly& q);

/// scalar * (1+t)^numerator_binomial_power / prod_d (1 + d t)
struct RationalSeriesSpec {
  mpq_class scalar{1};
  unsigned numerator_binomial_power = 0;
  std::vector<long> denominator_factors;
};

/// Exact Taylor coefficient of t^k.
mpq_class series_coefficient(const RationalSeriesSpec& spec, unsigned k);

}  // namespace eddeg
