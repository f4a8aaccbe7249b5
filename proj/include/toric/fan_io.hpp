#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "toric/fan.hpp"

namespace toric {

/// Malformed or unreadable fan file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON fan format: {"dim": d, "rays": [[...], ...], "max_cones": [[...], ...]}.
// Unknown keys are ignored on read. Integers of any size are read exactly.

/// Parses the JSON text and validates it with make_fan(). Syntax and
/// schema problems raise ParseError; invalid fan data raises DomainError.
Fan parse_fan_json(std::string_view text);

/// Canonical serialization: rays sorted lexicographically, cones sorted,
/// key order dim, rays, max_cones, no whitespace, trailing newline.
std::string fan_to_json(const Fan& fan);

/// Reads a fan from a file path, or standard input when path is "-".
Fan load_fan(const std::string& path);

}  // namespace toric
