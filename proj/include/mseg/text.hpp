#pragma once

#include <string>
#include <string_view>

#include "mseg/functorial.hpp"
#include "mseg/partition.hpp"
#include "mseg/rep.hpp"
#include "mseg/segment.hpp"

namespace mseg {

// Printers produce the canonical text form; the parsers accept it back.
//
//   multisegment := '{' [seg {',' seg}] '}' '@' line {'+' ...}   |  '{}'
//   seg          := '[' int ',' int ']'
//   line         := ident ['#' role] '(' 'k' '=' int [',' 'off' '=' int '/' int] ')'
//   role         := 'SmallF' '(' int ')' | 'SmallE' '(' int ')' | 'FixedF' | 'FixedE'
//   rep          := factor {('x' | '*') factor}  |  '1'
//   factor       := ['L' | 'Z'] multisegment-on-one-line
//
// Whitespace is ignored between tokens. Offsets outside [0,1) are folded
// into the exponents. Errors carry ErrorCode::Parse and a line:column.

std::string to_string(const Offset& off);
std::string to_string(const CuspidalLine& line);
std::string to_string(const Segment& s);
std::string to_string(const Multisegment& m);
std::string to_string(const Rep& r);

/// When `ctx` is given, orbit annotations are checked against it
/// (ErrorCode::UnknownOrbit on a mismatch).
Multisegment parse_multisegment(std::string_view text, const ExtensionContext* ctx = nullptr);
Rep parse_rep(std::string_view text, const ExtensionContext* ctx = nullptr);

/// "(4,2,1)"; parentheses optional, empty "()" allowed.
Composition parse_composition(std::string_view text);
Partition parse_partition(std::string_view text);

/// Context file: `degree <prime>` plus lines `orbit <name> kind=<I|II> k=<int>`;
/// '#' starts a comment.
ExtensionContext parse_context(std::string_view text);

}  // namespace mseg
