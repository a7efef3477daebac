#pragma once

#include <string>
#include <string_view>

#include "gfroots/field.hpp"
#include "gfroots/poly.hpp"

namespace gfroots {

/// Parses comma-separated hex coefficients, f_0 first ("3,6,1"). Accepts
/// an optional 0x prefix and surrounding blanks per entry. Throws
/// Error{Parse} on malformed text or a value that does not fit the field.
Poly parse_poly_text(std::string_view text, const Field& field);

/// Canonical form: lowercase hex, no leading zeros, no prefix.
std::string format_poly_text(const Poly& p);

std::string format_hex(Element e);
/// "a^k" for nonzero elements, "0" for zero.
std::string format_log(Element e, const Field& field);

/// Parses a hex mask such as "11d" or "0x11D". Throws Error{Parse}.
std::uint32_t parse_hex_u32(std::string_view text);

}  // namespace gfroots
