#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toradd/lattice.hpp"

namespace toradd {

/// A fan described by its rays. Rays are normalized to primitive vectors on
/// parsing; each normalization leaves a warning.
struct FanFile {
  std::size_t dim = 0;
  std::vector<LatticeVector> rays;
  std::optional<std::string> label;
  bool assume_complete = false;
  std::vector<std::string> warnings;
};

/// Parses the JSON fan format:
///
///   { "dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
///     "label": "P2", "assume_complete": true }
///
/// Ray entries are JSON integers or decimal strings ("-123456789012345678901").
/// "label" and "assume_complete" are optional; unknown keys are rejected.
/// Throws InputError with a line or field reference.
FanFile parse_fan_file(std::string_view text);

/// Reads and parses a file from disk.
FanFile load_fan_file(const std::string& path);

}  // namespace toradd
