#pragma once

#include <string>

#include "rdr/body.hpp"

namespace rdr {

/// Parses {"dim": 3, "vertices": [[x,y,z], ...]}. Throws ParseError.
VBody parse_body_json(const std::string& text);

/// Parses {"kind": "ball"} or {"kind": "polytope", "vertices": [...]}.
/// The dim argument applies to the ball gauge (a polytope gauge carries its
/// own vertices).
Gauge parse_gauge_json(const std::string& text, std::size_t dim);

/// Shortest text that round-trips the double (printf %.17g).
std::string format_double17(double value);

} // namespace rdr
