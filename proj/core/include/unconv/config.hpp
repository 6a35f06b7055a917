#pragma once

// Flat key = value run configuration. One file fully determines a system, a
// family and the run parameters; identical configs produce identical
// artifacts. Keys:
//   p, precision, maps.N, maps.<i>.a, maps.<i>.b (rational "3/1", integer
//   "-2", or a digit string "0,1,0,..."), family.M, family.L,
//   family.entry.<i>.<j> ("perm:(v1,...,vN)" | "star:l" | "parity:v"),
//   enumerate.depth, seed, budget, out, verify.* toggles.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "unconv/family.hpp"

namespace unconv {

// Command-line overrides applied on top of the file keys.
struct ConfigOverrides {
  std::optional<int> precision;
  std::optional<int> depth;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> out;
};

struct RunConfig {
  std::uint64_t prime;
  int precision;
  ContractionSystem system;
  IndexFamily family;
  int depth = 4;
  std::uint64_t seed = 0;
  std::uint64_t budget = 4096;
  std::string out;
  std::size_t verify_samples = 1000;
  std::size_t verify_words = 100;
  bool verify_lipschitz = true;
  bool verify_cauchy = true;
  bool verify_extension = true;
  bool verify_metric = true;
  bool verify_gallery = true;
};

RunConfig parse_config(std::string_view text, const ConfigOverrides& overrides = {});
RunConfig load_config_file(const std::string& path, const ConfigOverrides& overrides = {});

}  // namespace unconv
