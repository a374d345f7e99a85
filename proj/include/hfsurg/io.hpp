#pragma once

#include <string>

#include "hfsurg/cfk.hpp"

namespace hfsurg {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Schema:
// {
//   "name": str,
//   "generators": [{"name": str, "alexander": int, "maslov": int}, ...],
//   "differential": [{"from": str, "to": str, "u_power": int}, ...],
//   "involution": {label: label, ...}   // optional
// }
// Unknown keys are rejected. The result is validated structurally.
KnotComplex parse_knot_complex(const std::string& json_text);
KnotComplex load_knot_complex(const std::string& path);
std::string serialize_knot_complex(const KnotComplex& c);

}  // namespace hfsurg
