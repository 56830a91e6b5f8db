#pragma once

#include <stdexcept>
#include <string>

#include "gausslink/diagram.hpp"
#include "gausslink/invariants.hpp"

namespace gausslink {

/// Raised on malformed Gauss code; offset is the byte position in the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " (byte " + std::to_string(at) + ")"), offset(at) {}
    size_t offset;
};

/// Gauss code grammar:
///   diagram   := component ("/" component)*
///   component := token*
///   token     := ("O"|"U") label sign        label := positive integer
///   sign      := "+" | "-"
/// Token i of component c covers slot (c, i). A label's O token is the
/// arrow tail, its U token the head. Whitespace between tokens is ignored.
/// Labels need not be contiguous. Empty components are legal; a completely
/// empty input is not.
GaussDiagram parse_gauss_code(const std::string& text);

/// Inverse of parse_gauss_code up to label renumbering in slot order:
/// parse(serialize(d)) == d slot-exactly.
std::string serialize_gauss_code(const GaussDiagram& d);

/// Flat JSON object with keys lk12, lk21, S, T, crossings, components,
/// rii_lower_bound, in that order.
std::string report_json(const InvariantReport& r);

}  // namespace gausslink
