#include "eddeg/config.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace eddeg {

namespace {

namespace pt = boost::property_tree;

template <class T>
T get(const pt::ptree& section, const std::string& section_name, const std::string& key) {
  auto value = section.get_optional<T>(pt::ptree::path_type(key, '\0'));
  if (!value) throw ConfigError("[" + section_name + "] missing or malformed key '" + key + "'");
  return *value;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(";"));
  for (auto& p : parts) boost::trim(p);
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

// "n4" -> 4, "n4.line" -> 4 with suffix "line".
bool parse_section_name(const std::string& name, unsigned& n, std::string& suffix) {
  if (name.size() < 2 || name[0] != 'n') return false;
  const auto dot = name.find('.');
  const std::string digits = name.substr(1, dot == std::string::npos ? std::string::npos : dot - 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return false;
  n = static_cast<unsigned>(std::stoul(digits));
  suffix = dot == std::string::npos ? "" : name.substr(dot + 1);
  return true;
}

void apply_tracker(const pt::ptree& s, LoadedConfig& out) {
  TrackerConfig& t = out.tracker;
  for (const auto& [key, value] : s) {
    const std::string v = value.data();
    try {
      if (key == "initial_step") t.initial_step = std::stod(v);
      else if (key == "min_step") t.min_step = std::stod(v);
      else if (key == "max_step") t.max_step = std::stod(v);
      else if (key == "newton_tolerance") t.newton_tolerance = std::stod(v);
      else if (key == "max_newton_iters") t.max_newton_iters = std::stoi(v);
      else if (key == "infinity_threshold") t.infinity_threshold = std::stod(v);
      else if (key == "dedup_tolerance") t.dedup_tolerance = std::stod(v);
      else if (key == "end_log_time") t.end_log_time = std::stod(v);
      else if (key == "max_steps") t.max_steps = std::stoi(v);
      else if (key == "seed") {
        t.seed = std::stoull(v);
        out.seed_set = true;
      } else {
        throw ConfigError("[tracker] unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw ConfigError("[tracker] bad value for '" + key + "': '" + v + "'");
    }
  }
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("[tracker] ") + e.what());
  }
}

Source source_of(const std::string& section_name, const std::string& text) {
  try {
    return parse_source(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("[" + section_name + "] " + e.what());
  }
}

RegisteredComponent parse_component(unsigned n, const std::string& name, const pt::ptree& s) {
  RegisteredComponent rc;
  SingularComponent& c = rc.component;
  c.label = s.get<std::string>(pt::ptree::path_type("label", '\0'), name);
  c.dimension = get<int>(s, name, "dimension");
  c.projective_degree = get<int>(s, name, "degree");
  rc.milnor_number = get<int>(s, name, "milnor");
  try {
    rc.source = parse_source(s.get<std::string>(pt::ptree::path_type("source", '\0'), "DERIVED"));
    for (const auto& g : split_list(s.get<std::string>(pt::ptree::path_type("generators", '\0'), "")))
      c.vanishing_ideal_generators.push_back(SparsePoly::parse(g, n + 1));
    const auto params = split_list(get<std::string>(s, name, "parametrization"));
    if (params.size() != n + 1)
      throw ConfigError("[" + name + "] parametrization needs " + std::to_string(n + 1) + " entries");
    const std::size_t nparams = c.dimension == 0 ? 1 : static_cast<std::size_t>(c.dimension) + 1;
    for (const auto& p : params) c.parametrization.push_back(SparsePoly::parse(p, nparams, 's'));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("[" + name + "] " + e.what());
  }
  return rc;
}

}  // namespace

LoadedConfig parse_config(const std::string& text, const TrackerConfig& base) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  LoadedConfig out;
  out.tracker = base;
  std::map<unsigned, RegistryEntry> entries = SingularDataRegistry::builtin().entries();
  std::set<unsigned> replaced;
  auto fresh_entry = [&](unsigned n) -> RegistryEntry& {
    if (replaced.insert(n).second) entries[n] = RegistryEntry{};
    return entries[n];
  };

  for (const auto& [name, section] : tree) {
    if (name == "tracker") {
      apply_tracker(section, out);
      continue;
    }
    unsigned n = 0;
    std::string suffix;
    if (!parse_section_name(name, n, suffix) || n < 1)
      throw ConfigError("config: unknown section [" + name + "]");
    RegistryEntry& entry = fresh_entry(n);
    if (suffix.empty()) {
      for (const auto& [key, value] : section) {
        if (key == "chi_yhq") entry.chi_yhq_override = get<long>(section, name, key);
        else if (key == "override_source") entry.override_source = source_of(name, value.data());
        else throw ConfigError("[" + name + "] unknown key '" + key + "'");
      }
    } else {
      entry.components.push_back(parse_component(n, name, section));
    }
  }
  out.registry = SingularDataRegistry(std::move(entries));
  return out;
}

LoadedConfig load_config(const std::string& path, const TrackerConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), base);
}

}  // namespace eddeg
