#include "eddeg/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace eddeg {

namespace {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

void require_same_nvars(const SparsePoly& p, const SparsePoly& q) {
  if (p.nvars() != q.nvars())
    throw StructuralError("polynomials have different variable counts (" +
                          std::to_string(p.nvars()) + " vs " + std::to_string(q.nvars()) + ")");
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class den = o.norm();
  *this *= o.conj();
  re_ /= den;
  im_ /= den;
  return *this;
}

GaussianRational GaussianRational::pow(unsigned k) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) {
    out = re_.get_str();
    if (sgn(im_) > 0) out += '+';
  }
  out += im_.get_str();
  out += "*i";
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (s.back() != 'i') return {parse_rational(s), 0};

  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if (s[pos] == '+' || s[pos] == '-') {
      split = pos;
      break;
    }
  }
  auto imag_of = [](std::string part) {
    if (part.empty() || part == "+") return mpq_class(1);
    if (part == "-") return mpq_class(-1);
    if (part.front() == '+') part.erase(0, 1);
    return parse_rational(part);
  };
  if (split == std::string::npos) return {0, imag_of(s)};
  return {parse_rational(s.substr(0, split)), imag_of(s.substr(split))};
}

mpq_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return mpq_class(r);
}

mpq_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return mpq_class(r);
}

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  // Reverse lex: the monomial with the smaller exponent in the last differing
  // variable is the larger one.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

SparsePoly SparsePoly::constant(std::size_t nvars, const GaussianRational& c) {
  SparsePoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw StructuralError("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  SparsePoly p(nvars);
  p.add_term(e, 1);
  return p;
}

SparsePoly SparsePoly::monomial(const GaussianRational& c, Exponent e) {
  SparsePoly p(e.size());
  p.add_term(e, c);
  return p;
}

GaussianRational SparsePoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void SparsePoly::add_term(const Exponent& e, const GaussianRational& c) {
  if (e.size() != nvars_) throw StructuralError("exponent length does not match nvars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

bool SparsePoly::has_real_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_nvars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_nvars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_nvars(a, b);
  SparsePoly r(a.nvars());
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

std::string SparsePoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool is_const = total_degree(e) == 0;
    if (c.is_real()) {
      const int s = sgn(c.re());
      if (s < 0)
        out << '-';
      else if (!first)
        out << '+';
      mpq_class mag = abs(c.re());
      if (is_const || mag != 1) out << mag.get_str();
    } else {
      if (!first) out << '+';
      out << '(' << c.to_string() << ')';
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << var << i;
      if (e[i] > 1) out << '^' << e[i];
    }
    first = false;
  }
  return out.str();
}

SparsePoly SparsePoly::parse(std::string_view text, std::size_t nvars, char var) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  SparsePoly p(nvars);
  if (s == "0") return p;

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + s + "' at " + std::to_string(pos) +
                                ": " + why);
  };
  auto read_uint = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::stoul(s.substr(start, pos - start));
  };

  while (pos < s.size()) {
    GaussianRational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = GaussianRational(-1);
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }

    GaussianRational coef(1);
    bool have_coef = false;
    if (pos < s.size() && s[pos] == '(') {
      const std::size_t close = s.find(')', pos);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      coef = GaussianRational::parse(std::string_view(s).substr(pos + 1, close - pos - 1));
      pos = close + 1;
      have_coef = true;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const std::size_t start = pos;
      read_uint();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        read_uint();
      }
      coef = GaussianRational(parse_rational(std::string_view(s).substr(start, pos - start)));
      have_coef = true;
    }
    if (have_coef && pos < s.size() && s[pos] == '*') ++pos;

    Exponent e(nvars, 0);
    bool have_var = false;
    while (pos < s.size() && s[pos] == var) {
      ++pos;
      const auto idx = read_uint();
      if (idx >= nvars) fail("variable index out of range");
      unsigned power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        power = static_cast<unsigned>(read_uint());
      }
      e[idx] += power;
      have_var = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (!have_coef && !have_var) fail("empty term");
    p.add_term(e, sign * coef);
  }
  return p;
}

SparsePoly poly_add(const SparsePoly& p, const SparsePoly& q) { return p + q; }

SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q) { return p * q; }

SparsePoly poly_pow(const SparsePoly& p, unsigned k) {
  SparsePoly result = SparsePoly::constant(p.nvars(), 1);
  SparsePoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

SparsePoly poly_diff(const SparsePoly& p, std::size_t var) {
  if (var >= p.nvars()) throw StructuralError("differentiation variable out of range");
  SparsePoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * GaussianRational(static_cast<long>(e[var])));
  }
  return r;
}

GaussianRational poly_eval(const SparsePoly& p, std::span<const GaussianRational> point) {
  if (point.size() != p.nvars()) throw StructuralError("evaluation point has wrong length");
  GaussianRational sum;
  for (const auto& [e, c] : p.terms()) {
    GaussianRational term = c;
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] > 0) term *= point[i].pow(e[i]);
    sum += term;
  }
  return sum;
}

SparsePoly poly_substitute(const SparsePoly& p, std::span<const SparsePoly> images) {
  if (images.size() != p.nvars()) throw StructuralError("substitution needs one image per variable");
  const std::size_t target_nvars = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target_nvars) throw StructuralError("substitution images disagree on nvars");

  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<SparsePoly>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SparsePoly::constant(target_nvars, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  SparsePoly r(target_nvars);
  for (const auto& [e, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(target_nvars, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    r += term;
  }
  return r;
}

std::complex<double> poly_eval_numeric(const SparsePoly& p,
                                       std::span<const std::complex<double>> point) {
  if (point.size() != p.nvars()) throw StructuralError("evaluation point has wrong length");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.to_complex();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

Normalized content_normalize(const SparsePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("content_normalize: zero polynomial");
  if (!p.has_real_coefficients())
    throw std::invalid_argument("content_normalize: coefficients must be real rationals");

  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  const Exponent* lex_first = nullptr;
  const GaussianRational* lex_first_coef = nullptr;
  for (const auto& [e, c] : p.terms()) {
    num_gcd = gcd(num_gcd, c.re().get_num());
    den_lcm = lcm(den_lcm, c.re().get_den());
    if (lex_first == nullptr || std::lexicographical_compare(lex_first->begin(), lex_first->end(),
                                                             e.begin(), e.end())) {
      lex_first = &e;
      lex_first_coef = &c;
    }
  }
  mpq_class scale(num_gcd, den_lcm);
  scale.canonicalize();
  if (sgn(lex_first_coef->re()) < 0) scale = -scale;

  SparsePoly normalized = p;
  normalized *= GaussianRational(1 / scale);
  return {std::move(normalized), std::move(scale)};
}

bool projectively_equal(const SparsePoly& p, const SparsePoly& q) {
  if (p.nvars() != q.nvars()) return false;
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.size() != q.size()) return false;
  const GaussianRational& lp = p.terms().begin()->second;
  const auto it = q.terms().find(p.terms().begin()->first);
  if (it == q.terms().end()) return false;
  return p * it->second == q * lp;
}

mpq_class series_coefficient(const RationalSeriesSpec& spec, unsigned k) {
  for (long d : spec.denominator_factors)
    if (d < 1) throw std::invalid_argument("series denominator factors must be >= 1");

  std::vector<mpq_class> series(k + 1);
  for (unsigned i = 0; i <= k; ++i)
    series[i] = i <= spec.numerator_binomial_power ? binomial(spec.numerator_binomial_power, i)
                                                   : mpq_class(0);
  // Dividing by (1 + d t): b_i = a_i - d * b_{i-1}.
  for (long d : spec.denominator_factors)
    for (unsigned i = 1; i <= k; ++i) series[i] -= d * series[i - 1];
  return spec.scalar * series[k];
}

}  // namespace eddeg
