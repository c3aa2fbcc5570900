#pragma once

// Euler characteristics, Milnor corrections and EDdegree assembly.

#include "eddeg/catalecticant.hpp"
#include "eddeg/exact.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eddeg {

/// chi(Y ∩ Q) and chi(Y ∩ H) for Y = P^n: n when n is even, n + 1 when odd.
long chi_quadric_or_quartic_section(unsigned n);

/// chi of a smooth complete intersection of the given degrees in P^m:
/// (prod d_i) * [t^(m - r)] (1+t)^(m+1) / prod (1 + d_i t).
long chi_smooth_ci(std::span<const long> degrees, unsigned m);

class MilnorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Milnor number of the germ of p at the origin: dim of
/// C[z] / (Jacobian ideal + m^(k+1)), increasing k from `bound` until two
/// consecutive values agree.
int milnor_number_germ(const SparsePoly& p, unsigned bound = 1, unsigned max_order = 24);

/// Dehomogenizes p at the coordinate point e_index and translates it to the origin.
SparsePoly local_chart(const SparsePoly& p, std::size_t index);

/// chi_smooth + (-1)^(variety_dim + 1) * sum(milnor).
long chi_with_singularities(long chi_smooth, int variety_dim, std::span<const int> milnor);

/// (-1)^dim (chi_X - chi_XQ - chi_XH + chi_XQH)
long aluffi_harris(int dim_x, long chi_x, long chi_xq, long chi_xh, long chi_xqh);

/// 1 - n + chi_YHQ for even n, 1 + n - chi_YHQ for odd n.
long corollary_eddegree(unsigned n, long chi_yhq);

/// EDdegree for a general quadratic form: (3^(n+1) - 1) / 2. Rejects n == 0.
long catanese_trifogli(unsigned n);

enum class Source { Paper, Derived };
std::string to_string(Source s);
Source parse_source(const std::string& text);

struct RegisteredComponent {
  SingularComponent component;
  int milnor_number = 1;  // per point of the generic quadric slice
  Source source = Source::Derived;
};

struct RegistryEntry {
  std::vector<RegisteredComponent> components;
  std::optional<long> chi_yhq_override;
  Source override_source = Source::Paper;
};

class RegistryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-n singular data feeding the chi pipeline. Immutable after construction.
class SingularDataRegistry {
 public:
  SingularDataRegistry() = default;
  explicit SingularDataRegistry(std::map<unsigned, RegistryEntry> entries);

  /// Components and constants for n = 1..7.
  static const SingularDataRegistry& builtin();

  bool covers(unsigned n) const { return entries_.count(n) != 0; }
  const RegistryEntry& at(unsigned n) const;
  const std::map<unsigned, RegistryEntry>& entries() const { return entries_; }

  /// Checks every component against build_quartic(n) and milnor >= 1.
  /// Returns one message per violation.
  std::vector<std::string> validate() const;

 private:
  std::map<unsigned, RegistryEntry> entries_;
};

struct EDResult {
  unsigned n = 0;
  long chi_y = 0;
  long chi_yq = 0;
  long chi_yh = 0;
  long chi_yhq = 0;
  long ed_formula = 0;
  std::optional<long> ed_numeric;
  long catanese_trifogli = 0;
  bool chi_from_override = false;
};

EDResult eddegree_pipeline(unsigned n, const SingularDataRegistry& registry);

}  // namespace eddeg
