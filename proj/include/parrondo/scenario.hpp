#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parrondo/game_analysis.hpp"
#include "parrondo/qlga.hpp"
#include "parrondo/table.hpp"

namespace parrondo {

#ifndef PARRONDO_VERSION
#define PARRONDO_VERSION "0.0.0"
#endif

inline constexpr const char* kToolVersion = PARRONDO_VERSION;

using Overrides = std::map<std::string, std::string>;

struct UnknownPreset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownOverrideKey : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::uint64_t seed = 42;
  std::optional<PhaseOrder> phase_order;
  std::string command;  // echoed into metadata
};

struct NamedTable {
  std::string name;  // series label, e.g. "AABB"
  OutputTable table;
};

const std::vector<std::string>& preset_names();

// Override keys accepted by a preset.
std::vector<std::string> preset_keys(const std::string& preset);

// Throws UnknownPreset, UnknownOverrideKey, or std::invalid_argument /
// std::domain_error for bad values.
std::vector<NamedTable> run_preset(const std::string& preset,
                                   const Overrides& overrides,
                                   const RunOptions& options = {});

// Plain key=value lines; blank lines and lines starting with '#' are skipped.
Overrides parse_config(std::istream& is);

// Human-readable analysis of game B for the given coins.
std::string analyze(const GameBParams& params);

}  // namespace parrondo
