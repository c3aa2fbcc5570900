// eddeg: EDdegree of the middle-catalecticant hypersurfaces, by formula and
// by homotopy continuation.

#include "eddeg/catalecticant.hpp"
#include "eddeg/chi.hpp"
#include "eddeg/config.hpp"
#include "eddeg/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace eddeg;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr std::uint64_t kDefaultSeed = 20221;
constexpr unsigned kMaxQuarticN = 10;
constexpr unsigned kMaxFormulaN = 7;
constexpr unsigned kMaxNumericN = 7;

struct Context {
  TrackerConfig tracker;
  SingularDataRegistry registry = SingularDataRegistry::builtin();
  std::uint64_t seed = kDefaultSeed;
  Execution mode = Execution::Parallel;
  bool timings = false;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

json to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

std::vector<Check> from_json(const json& checks) {
  std::vector<Check> out;
  for (const auto& c : checks) out.push_back({c["name"], c["pass"], c["detail"]});
  return out;
}

bool all_pass(const json& record) {
  if (!record.contains("checks")) return true;
  for (const auto& c : record["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// records

bool lacks_pure_fourth_power(const SparsePoly& p, std::size_t var) {
  Exponent e(p.nvars(), 0);
  e[var] = 4;
  return p.coeff(e).is_zero();
}

json quartic_record(unsigned n, const Context& ctx) {
  Stopwatch clock;
  const QuarticInvariant q = build_quartic(n);
  std::vector<Check> checks{
      {"isobaric", is_isobaric(q.poly, 2 * n), "weight " + std::to_string(2 * n)},
      {"real", q.poly.has_real_coefficients(), ""},
      {"reversal_symmetric", is_reversal_symmetric(q.poly), ""},
      {"no_z0^4", lacks_pure_fourth_power(q.poly, 0), ""},
      {"no_zn^4", lacks_pure_fourth_power(q.poly, n), ""},
  };
  json r{{"n", n}, {"quartic", q.poly.to_string()}, {"raw_scalar", q.raw_scalar.to_string()},
         {"checks", to_json(checks)}};
  if (ctx.timings) r["timings"] = {{"quartic_s", clock.seconds()}};
  return r;
}

json formula_fields(const EDResult& r) {
  return {{"chi_Y", r.chi_y},         {"chi_YQ", r.chi_yq},
          {"chi_YH", r.chi_yh},       {"chi_YHQ", r.chi_yhq},
          {"chi_YHQ_from", r.chi_from_override ? "override" : "singular data"},
          {"ed_formula", r.ed_formula}, {"catanese_trifogli", r.catanese_trifogli}};
}

// Numeric count for n; fills ed_numeric, seeds and warnings on `record`.
void add_numeric(json& record, unsigned n, const Context& ctx, std::vector<Check>& checks) {
  Stopwatch clock;
  record["seeds"] = json::array({ctx.seed});
  try {
    const NumericEDReport rep = numeric_eddegree(n, ctx.seed, ctx.tracker, ctx.mode);
    record["ed_numeric"] = rep.eddegree;
    record["paths"] = {{"total", rep.path_count},         {"finite_nonzero", rep.finite_nonzero},
                       {"origin", rep.origin},            {"at_infinity", rep.at_infinity},
                       {"singular", rep.singular},        {"failed", rep.failed},
                       {"isotropic", rep.isotropic}};
    for (const auto& w : rep.warnings) record["warnings"].push_back(w);
    if (record.contains("ed_formula")) {
      const long formula = record["ed_formula"].get<long>();
      checks.push_back({"formula_equals_numeric", formula == rep.eddegree,
                        std::to_string(formula) + " vs " + std::to_string(rep.eddegree)});
    }
  } catch (const NumericFailure& e) {
    record["warnings"].push_back(e.what());
    checks.push_back({"numeric_solve", false, e.what()});
  }
  if (ctx.timings) record["timings"]["numeric_s"] = clock.seconds();
}

json chi_record(unsigned n, const Context& ctx, bool with_quartic) {
  Stopwatch clock;
  json r{{"n", n}, {"warnings", json::array()}};
  std::vector<Check> checks;
  if (with_quartic) r["quartic"] = build_quartic(n).poly.to_string();
  const EDResult ed = eddegree_pipeline(n, ctx.registry);
  r.update(formula_fields(ed));
  for (const auto& problem : ctx.registry.validate())
    if (problem.rfind("n=" + std::to_string(n) + " ", 0) == 0) checks.push_back({"singular_data", false, problem});
  if (n >= 2)
    checks.push_back({"catanese_trifogli_exceeds", ed.catanese_trifogli > ed.ed_formula,
                      std::to_string(ed.catanese_trifogli) + " > " + std::to_string(ed.ed_formula)});
  r["checks"] = to_json(checks);
  if (ctx.timings) r["timings"] = {{"formula_s", clock.seconds()}};
  return r;
}

json verify_record(unsigned n, const Context& ctx) {
  json r{{"n", n}, {"warnings", json::array()}};
  std::vector<Check> checks;
  const QuarticInvariant q = build_quartic(n);

  for (unsigned N = 1; N <= 3; ++N) {
    const bool contains = osculating_containment_check(q, N);
    const bool singular = osculating_singularity_check(q, N);
    const std::string tag = "N=" + std::to_string(N);
    checks.push_back({"osculating_containment " + tag, contains == (n >= 2 * N + 1),
                      contains ? "contained" : "not contained"});
    checks.push_back({"osculating_singularity " + tag, singular == (n >= 3 * N + 1),
                      singular ? "singular" : "not singular"});
  }

  if (ctx.registry.covers(n)) {
    for (const auto& rc : ctx.registry.at(n).components) {
      const auto& c = rc.component;
      checks.push_back({"component '" + c.label + "'", verify_component(q, c) && c.parametrization_satisfies_ideal(),
                        "dim " + std::to_string(c.dimension) + ", deg " + std::to_string(c.projective_degree) +
                            ", milnor " + std::to_string(rc.milnor_number) + " (" + to_string(rc.source) + ")"});
    }
    for (const auto& problem : ctx.registry.validate())
      if (problem.rfind("n=" + std::to_string(n) + " ", 0) == 0) checks.push_back({"registry", false, problem});
  } else {
    r["warnings"].push_back("no singular data registered for n=" + std::to_string(n));
  }

  if (n == 2) {
    const std::size_t points = count_slice_points_n2(ctx.seed, ctx.tracker);
    checks.push_back({"slice_points", points == 8, std::to_string(points) + " points"});
  }
  if (n == 3) {
    try {
      const auto pts = solve_partials_n3(ctx.tracker, ctx.seed);
      std::vector<std::string> text;
      bool exact = true;
      for (const auto& p : pts) {
        std::string s = "(";
        for (std::size_t i = 0; i < p.exact.size(); ++i) s += (i ? "," : "") + p.exact[i].to_string();
        text.push_back(p.is_exact ? s + ")" : "numeric point");
        exact = exact && p.is_exact;
      }
      const bool expected = exact && text == std::vector<std::string>{"(1,0,0,0)", "(0,0,0,1)"};
      std::string detail;
      for (const auto& t : text) detail += (detail.empty() ? "" : " ") + t;
      checks.push_back({"partials_common_zeros", expected, detail});
    } catch (const NumericFailure& e) {
      checks.push_back({"partials_common_zeros", false, e.what()});
    }
  }
  r["checks"] = to_json(checks);
  return r;
}

// ---------------------------------------------------------------------------
// output

void print_checks(const json& record) {
  for (const auto& c : record["checks"]) {
    std::cout << "  [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] " << c["name"].get<std::string>();
    const auto detail = c["detail"].get<std::string>();
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
  }
}

void print_warnings(const json& record) {
  if (!record.contains("warnings")) return;
  for (const auto& w : record["warnings"]) std::cout << "  warning: " << w.get<std::string>() << "\n";
}

std::string cell(const json& record, const char* key) {
  if (!record.contains(key)) return "-";
  const auto& v = record[key];
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void print_human(const std::string& command, const json& results) {
  if (command == "quartic") {
    for (const auto& r : results) {
      std::cout << "n=" << r["n"] << "  scalar " << r["raw_scalar"].get<std::string>() << "\n  "
                << r["quartic"].get<std::string>() << "\n";
      print_checks(r);
    }
    return;
  }
  if (command == "verify") {
    for (const auto& r : results) {
      std::cout << "n=" << r["n"] << "\n";
      print_checks(r);
      print_warnings(r);
    }
    return;
  }
  std::cout << std::setw(3) << "n" << std::setw(9) << "chi_Y" << std::setw(9) << "chi_YQ" << std::setw(9) << "chi_YH"
            << std::setw(9) << "chi_YHQ" << std::setw(11) << "ED" << std::setw(11) << "ED num" << std::setw(9) << "CT"
            << "\n";
  for (const auto& r : results) {
    std::cout << std::setw(3) << cell(r, "n") << std::setw(9) << cell(r, "chi_Y") << std::setw(9) << cell(r, "chi_YQ")
              << std::setw(9) << cell(r, "chi_YH") << std::setw(9) << cell(r, "chi_YHQ") << std::setw(11)
              << cell(r, "ed_formula") << std::setw(11) << cell(r, "ed_numeric") << std::setw(9)
              << cell(r, "catanese_trifogli") << "\n";
  }
  for (const auto& r : results) {
    if (!all_pass(r) || (r.contains("warnings") && !r["warnings"].empty())) {
      std::cout << "n=" << r["n"] << ":\n";
      print_checks(r);
      print_warnings(r);
    }
  }
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_csv(const std::string& command, const json& results) {
  if (command == "verify") {
    std::cout << "n,check,pass,detail\n";
    for (const auto& r : results)
      for (const auto& c : r["checks"])
        std::cout << r["n"] << "," << csv_field(c["name"].get<std::string>()) << ","
                  << (c["pass"].get<bool>() ? "true" : "false") << "," << csv_field(c["detail"].get<std::string>())
                  << "\n";
    return;
  }
  if (command == "quartic") {
    std::cout << "n,raw_scalar,quartic,checks_pass\n";
    for (const auto& r : results)
      std::cout << r["n"] << "," << csv_field(r["raw_scalar"].get<std::string>()) << ","
                << csv_field(r["quartic"].get<std::string>()) << "," << (all_pass(r) ? "true" : "false") << "\n";
    return;
  }
  const char* keys[] = {"n", "chi_Y", "chi_YQ", "chi_YH", "chi_YHQ", "ed_formula", "ed_numeric", "catanese_trifogli"};
  for (std::size_t i = 0; i < std::size(keys); ++i) std::cout << (i ? "," : "") << keys[i];
  std::cout << ",checks_pass\n";
  for (const auto& r : results) {
    for (std::size_t i = 0; i < std::size(keys); ++i) {
      const std::string v = cell(r, keys[i]);
      std::cout << (i ? "," : "") << (v == "-" ? "" : csv_field(v));
    }
    std::cout << "," << (all_pass(r) ? "true" : "false") << "\n";
  }
}

int emit(const std::string& format, const std::string& command, const std::string& echo, const json& results) {
  if (format == "json") {
    const json report{{"version", kVersion}, {"command", echo}, {"results", results}};
    std::cout << report.dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(command, results);
  } else {
    print_human(command, results);
  }
  for (const auto& r : results)
    if (!all_pass(r)) return 1;
  return 0;
}

std::optional<std::uint64_t> env_seed() {
  const char* text = std::getenv("EDDEG_SEED");
  if (!text || !*text) return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == std::string(text).size()) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("EDDEG_SEED", std::string("not an unsigned integer: '") + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EDdegree of the middle-catalecticant hypersurfaces under the Bombieri-Weyl form"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string format = "human";
  std::string config_path;
  std::optional<std::uint64_t> seed_flag;
  bool timings = false;
  bool serial = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--config", config_path, "INI file with [tracker] overrides and singular data")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", seed_flag, "Seed for random data (default: $EDDEG_SEED, then 20221)");
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");
  app.add_flag("--serial", serial, "Track homotopy paths on one thread");

  unsigned n = 0;
  unsigned max_n = 5;
  unsigned numeric_max_n = 5;
  bool numeric = false;
  std::string method = "formula";

  auto* quartic = app.add_subcommand("quartic", "Print the normalized quartic invariant and its structural checks");
  quartic->add_option("--n", n, "Half the form degree")->required()->check(CLI::Range(1u, kMaxQuarticN));

  auto* table = app.add_subcommand("table", "EDdegree and Euler characteristic table");
  table->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(1u, kMaxFormulaN));
  table->add_flag("--numeric", numeric, "Add the homotopy-continuation count");
  table->add_option("--numeric-max-n", numeric_max_n, "Largest n for the numeric column")
      ->check(CLI::Range(1u, kMaxNumericN));

  auto* verify = app.add_subcommand("verify", "Singular-locus and osculating-space checks");
  verify->add_option("--n", n, "Half the form degree")->required()->check(CLI::Range(1u, kMaxQuarticN));

  auto* chi = app.add_subcommand("chi", "Euler characteristics entering the EDdegree formula");
  chi->add_option("--n", n, "Half the form degree")->required()->check(CLI::Range(1u, kMaxFormulaN));

  auto* eddegree = app.add_subcommand("eddegree", "EDdegree by formula or by homotopy continuation");
  eddegree->add_option("--n", n, "Half the form degree")->required()->check(CLI::Range(1u, kMaxFormulaN));
  eddegree->add_option("--method", method, "formula or numeric")->check(CLI::IsMember({"formula", "numeric"}));

  CLI11_PARSE(app, argc, argv);

  try {
    Context ctx;
    ctx.timings = timings;
    ctx.mode = serial ? Execution::Serial : Execution::Parallel;
    std::optional<std::uint64_t> seed = seed_flag;
    if (!config_path.empty()) {
      LoadedConfig loaded = load_config(config_path);
      ctx.tracker = loaded.tracker;
      ctx.registry = std::move(loaded.registry);
      if (!seed && loaded.seed_set) seed = loaded.tracker.seed;
    }
    if (!seed) seed = env_seed();
    ctx.seed = seed.value_or(kDefaultSeed);
    ctx.tracker.seed = ctx.seed;

    std::ostringstream echo;
    json results = json::array();
    std::string command;
    const std::string seed_echo = " --seed " + std::to_string(ctx.seed);

    if (*quartic) {
      command = "quartic";
      echo << "quartic --n " << n;
      results.push_back(quartic_record(n, ctx));
    } else if (*table) {
      command = "table";
      echo << "table --max-n " << max_n;
      if (numeric) echo << " --numeric --numeric-max-n " << numeric_max_n << seed_echo;
      for (unsigned k = 1; k <= max_n; ++k) {
        json r = chi_record(k, ctx, true);
        if (numeric && k <= numeric_max_n) {
          std::vector<Check> checks = from_json(r["checks"]);
          add_numeric(r, k, ctx, checks);
          r["checks"] = to_json(checks);
        }
        results.push_back(std::move(r));
      }
    } else if (*verify) {
      command = "verify";
      echo << "verify --n " << n << seed_echo;
      results.push_back(verify_record(n, ctx));
    } else if (*chi) {
      command = "chi";
      echo << "chi --n " << n;
      results.push_back(chi_record(n, ctx, false));
    } else {
      command = "eddegree";
      echo << "eddegree --n " << n << " --method " << method;
      if (method == "numeric") {
        echo << seed_echo;
        json r = chi_record(n, ctx, false);
        std::vector<Check> checks = from_json(r["checks"]);
        add_numeric(r, n, ctx, checks);
        r["checks"] = to_json(checks);
        results.push_back(std::move(r));
      } else {
        results.push_back(chi_record(n, ctx, false));
      }
    }
    if (!config_path.empty()) echo << " --config " << config_path;
    return emit(format, command, echo.str(), results);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RegistryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
