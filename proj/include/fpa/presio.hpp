#pragma once

#include "fpa/presentation.hpp"

#include <string>
#include <string_view>

namespace fpa {

/// Parses .fpa text. Throws ParseError (with position) or ValidationError.
Presentation parse_presentation(std::string_view text);

/// Parses a polynomial expression ("x*y^3*x - 2*y") over the given
/// generator names. Used for CLI elements and generator maps.
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& gen_names);

/// Deterministic canonical text; parse_presentation(print_canonical(p)) == p
/// for canonicalized presentations.
std::string print_canonical(const Presentation& p);

/// "x*y^3*x", "1" for the empty word.
std::string render_word(const Word& w, const std::vector<std::string>& names);

/// Terms in decreasing monomial order under `ord`; "0" for zero.
std::string render_poly(const Polynomial& p, const std::vector<std::string>& names,
                        const MonomialOrder& ord);

} // namespace fpa
