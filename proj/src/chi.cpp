#include "eddeg/chi.hpp"

#include <algorithm>
#include <numeric>

namespace eddeg {

long chi_quadric_or_quartic_section(unsigned n) {
  if (n < 1) throw std::invalid_argument("chi_quadric_or_quartic_section needs n >= 1");
  return n % 2 == 0 ? static_cast<long>(n) : static_cast<long>(n) + 1;
}

long chi_smooth_ci(std::span<const long> degrees, unsigned m) {
  if (degrees.size() > m)
    throw std::invalid_argument("chi_smooth_ci: more hypersurfaces than the ambient dimension");
  RationalSeriesSpec spec;
  spec.scalar = std::accumulate(degrees.begin(), degrees.end(), 1L, std::multiplies<>());
  spec.numerator_binomial_power = m + 1;
  spec.denominator_factors.assign(degrees.begin(), degrees.end());
  const mpq_class chi = series_coefficient(spec, m - static_cast<unsigned>(degrees.size()));
  return chi.get_num().get_si();
}

SparsePoly local_chart(const SparsePoly& p, std::size_t index) {
  if (index >= p.nvars()) throw StructuralError("chart index out of range");
  const std::size_t nv = p.nvars() - 1;
  std::vector<SparsePoly> images;
  for (std::size_t i = 0, k = 0; i < p.nvars(); ++i)
    images.push_back(i == index ? SparsePoly::constant(nv, 1) : SparsePoly::variable(nv, k++));
  return poly_substitute(p, images);
}

namespace {

using SparseRow = std::map<std::size_t, GaussianRational>;

// Incremental sparse row echelon form; pivot rows are normalized to a leading 1.
class SparseEchelon {
 public:
  void insert(SparseRow row) {
    while (!row.empty()) {
      const auto [col, lead] = *row.begin();
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        const GaussianRational inv = GaussianRational(1) / lead;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(col, std::move(row));
        return;
      }
      const GaussianRational factor = lead;
      for (const auto& [c, v] : it->second) {
        auto [slot, inserted] = row.try_emplace(c, -(factor * v));
        if (!inserted) {
          slot->second -= factor * v;
          if (slot->second.is_zero()) row.erase(slot);
        }
      }
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

// All exponent vectors in nv variables of total degree <= k.
std::vector<Exponent> monomials_up_to(std::size_t nv, unsigned k) {
  std::vector<Exponent> out;
  Exponent e(nv, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == nv) {
      out.push_back(e);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
    e[var] = 0;
  };
  rec(rec, 0, k);
  return out;
}

std::size_t jet_quotient_dimension(const std::vector<SparsePoly>& partials, std::size_t nv, unsigned k) {
  const auto basis = monomials_up_to(nv, k);
  std::map<Exponent, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  SparseEchelon echelon;
  for (const auto& mono : monomials_up_to(nv, k == 0 ? 0 : k - 1)) {
    for (const auto& partial : partials) {
      SparseRow row;
      for (const auto& [e, c] : partial.terms()) {
        Exponent prod(nv);
        for (std::size_t i = 0; i < nv; ++i) prod[i] = e[i] + mono[i];
        if (total_degree(prod) > k) continue;
        row[column.at(prod)] += c;
      }
      std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
      if (!row.empty()) echelon.insert(std::move(row));
    }
  }
  return basis.size() - echelon.rank();
}

}  // namespace

int milnor_number_germ(const SparsePoly& p, unsigned bound, unsigned max_order) {
  const std::size_t nv = p.nvars();
  if (nv == 0) throw std::invalid_argument("milnor_number_germ needs at least one variable");
  const Exponent origin(nv, 0);
  if (!p.coeff(origin).is_zero()) throw std::invalid_argument("germ does not vanish at the origin");
  std::vector<SparsePoly> partials;
  for (std::size_t i = 0; i < nv; ++i) {
    partials.push_back(poly_diff(p, i));
    if (!partials.back().coeff(origin).is_zero())
      throw std::invalid_argument("origin is not a critical point of the germ");
  }

  std::size_t previous = jet_quotient_dimension(partials, nv, std::max(bound, 1u));
  for (unsigned k = std::max(bound, 1u) + 1; k <= max_order; ++k) {
    const std::size_t current = jet_quotient_dimension(partials, nv, k);
    if (current == previous) return static_cast<int>(current);
    previous = current;
  }
  throw MilnorError("Milnor number did not stabilize by order " + std::to_string(max_order) +
                    ": the critical point is not isolated, or raise the bound");
}

long chi_with_singularities(long chi_smooth, int variety_dim, std::span<const int> milnor) {
  if (variety_dim < 1) throw std::invalid_argument("chi_with_singularities needs variety_dim >= 1");
  const long total = std::accumulate(milnor.begin(), milnor.end(), 0L);
  const long sign = variety_dim % 2 == 0 ? -1 : 1;
  return chi_smooth + sign * total;
}

long aluffi_harris(int dim_x, long chi_x, long chi_xq, long chi_xh, long chi_xqh) {
  const long sign = dim_x % 2 == 0 ? 1 : -1;
  return sign * (chi_x - chi_xq - chi_xh + chi_xqh);
}

long corollary_eddegree(unsigned n, long chi_yhq) {
  if (n < 1) throw std::invalid_argument("corollary_eddegree needs n >= 1");
  const long nn = static_cast<long>(n);
  return n % 2 == 0 ? 1 - nn + chi_yhq : 1 + nn - chi_yhq;
}

long catanese_trifogli(unsigned n) {
  if (n < 1) throw std::invalid_argument("catanese_trifogli needs n >= 1");
  long p = 1;
  for (unsigned i = 0; i <= n; ++i) p *= 3;
  return (p - 1) / 2;
}

std::string to_string(Source s) { return s == Source::Paper ? "PAPER" : "DERIVED"; }

Source parse_source(const std::string& text) {
  if (text == "PAPER") return Source::Paper;
  if (text == "DERIVED") return Source::Derived;
  throw std::invalid_argument("unknown source tag '" + text + "' (expected PAPER or DERIVED)");
}

SingularDataRegistry::SingularDataRegistry(std::map<unsigned, RegistryEntry> entries)
    : entries_(std::move(entries)) {}

const RegistryEntry& SingularDataRegistry::at(unsigned n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) throw RegistryError("singular data registry has no entry for n=" + std::to_string(n));
  return it->second;
}

const SingularDataRegistry& SingularDataRegistry::builtin() {
  static const SingularDataRegistry registry = [] {
    std::map<unsigned, RegistryEntry> e;
    auto points = [](unsigned n, int milnor) {
      return std::vector<RegisteredComponent>{
          {extreme_point_component(n, false), milnor, Source::Derived},
          {extreme_point_component(n, true), milnor, Source::Derived}};
    };
    // Milnor numbers of the isolated surface points are local invariants of the
    // quartic, computed by milnor_number_germ; generic H misses them.
    e[1].components = points(1, 1);
    e[1].chi_yhq_override = 0;  // a generic quadric and the quartic do not meet in P^1
    e[1].override_source = Source::Paper;
    e[2].components = points(2, 3);
    e[3].components = points(3, 10);
    e[4].components = {{tangent_line_component(4, false), 1, Source::Paper},
                       {tangent_line_component(4, true), 1, Source::Paper},
                       {n4_conic_component(), 1, Source::Paper}};
    e[5].components = {{tangent_line_component(5, false), 5, Source::Paper},
                       {tangent_line_component(5, true), 5, Source::Paper}};
    e[6].chi_yhq_override = 468;
    e[7].chi_yhq_override = -1304;
    return SingularDataRegistry(std::move(e));
  }();
  return registry;
}

std::vector<std::string> SingularDataRegistry::validate() const {
  std::vector<std::string> problems;
  for (const auto& [n, entry] : entries_) {
    if (entry.components.empty()) continue;
    const QuarticInvariant q = build_quartic(n);
    for (const auto& rc : entry.components) {
      const auto& c = rc.component;
      const std::string where = "n=" + std::to_string(n) + " '" + c.label + "': ";
      if (rc.milnor_number < 1) problems.push_back(where + "Milnor number must be >= 1");
      if (c.z_count() != n + 1) {
        problems.push_back(where + "parametrization has the wrong number of coordinates");
        continue;
      }
      if (!c.parametrization_satisfies_ideal())
        problems.push_back(where + "parametrization does not satisfy the listed generators");
      if (!verify_component(q, c)) problems.push_back(where + "not contained in the singular locus");
    }
  }
  return problems;
}

EDResult eddegree_pipeline(unsigned n, const SingularDataRegistry& registry) {
  const RegistryEntry& entry = registry.at(n);
  EDResult r;
  r.n = n;
  r.chi_y = static_cast<long>(n) + 1;
  r.chi_yq = chi_quadric_or_quartic_section(n);
  r.chi_yh = chi_quadric_or_quartic_section(n);

  if (entry.chi_yhq_override) {
    r.chi_yhq = *entry.chi_yhq_override;
    r.chi_from_override = true;
  } else {
    if (n < 2) throw RegistryError("n=1 needs a direct chi override");
    const std::vector<long> degrees{2, 4};
    const long smooth = chi_smooth_ci(degrees, n);
    std::vector<int> milnor;
    for (const auto& rc : entry.components) {
      // Point components are missed by a generic hyperplane section.
      if (rc.component.dimension == 0) continue;
      if (rc.component.dimension != 1)
        throw RegistryError("n=" + std::to_string(n) + ": component '" + rc.component.label +
                            "' of dimension >= 2 gives non-isolated slice singularities");
      milnor.insert(milnor.end(), static_cast<std::size_t>(bezout_slice_points(rc.component)),
                    rc.milnor_number);
    }
    r.chi_yhq = milnor.empty() ? smooth : chi_with_singularities(smooth, static_cast<int>(n) - 2, milnor);
  }

  r.ed_formula = corollary_eddegree(n, r.chi_yhq);
  const long via_aluffi = aluffi_harris(static_cast<int>(n), r.chi_y, r.chi_yq, r.chi_yh, r.chi_yhq);
  if (via_aluffi != r.ed_formula) throw std::logic_error("corollary and Aluffi-Harris assembly disagree");
  r.catanese_trifogli = catanese_trifogli(n);
  return r;
}

}  // namespace eddeg
