#pragma once

// INI configuration: tracker overrides and alternative singular data.
//
//   [tracker]
//   initial_step = 0.05
//   seed = 7
//
//   [n4]
//   chi_yhq = 56            ; optional override
//   override_source = PAPER
//
//   [n4.line]               ; one section per component, replaces the builtin n=4 entry
//   label = tangent line
//   dimension = 1
//   degree = 1
//   milnor = 1
//   source = PAPER
//   generators = z2; z3; z4
//   parametrization = s0; s1; 0; 0; 0

#include "eddeg/chi.hpp"
#include "eddeg/solver.hpp"

#include <stdexcept>
#include <string>

namespace eddeg {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedConfig {
  TrackerConfig tracker;
  bool seed_set = false;
  SingularDataRegistry registry;
};

/// Starts from `base` and the builtin registry; every n that appears in the
/// file gets its registry entry replaced.
LoadedConfig load_config(const std::string& path, const TrackerConfig& base = {});
LoadedConfig parse_config(const std::string& text, const TrackerConfig& base = {});

}  // namespace eddeg
