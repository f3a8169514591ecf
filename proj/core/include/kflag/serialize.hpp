#pragma once

#include <map>
#include <string>

#include "kflag/basis_change.hpp"

namespace kflag {

/// Which basis exponents are written in: fundamental-weight coordinates, or
/// simple-root coordinates (rationals rendered as "p/q" when not integral).
enum class CoordMode { fundamental, root };

/// Words are space-separated 1-based generator indices, e.g. "2 3 2 1 2".
/// The empty string and "e" both denote the empty word.
Word parse_word(const std::string& text);
std::string format_word(const Word& word);  // "e" for the empty word

/// Cube vertices are bit strings, leftmost character = position 1.
Epsilon parse_epsilon(const std::string& text);

CoordMode parse_coord_mode(const std::string& text);

/// {"terms": [{"exp": [...], "coeff": ...}, ...]} with terms in the
/// deterministic internal order. Coefficients that do not fit in 64 bits are
/// written as decimal strings.
std::string poly_to_json(const RootSystem& rs, const LaurentPoly& p, CoordMode mode);
std::string poly_to_text(const RootSystem& rs, const LaurentPoly& p, CoordMode mode);

/// {"values": {"<canonical word>": {...poly...}, ...}} keyed by format_word.
std::string element_map_to_json(const RootSystem& rs,
                                const std::map<WeylElement, LaurentPoly>& m, CoordMode mode);
std::string element_map_to_text(const RootSystem& rs,
                                const std::map<WeylElement, LaurentPoly>& m, CoordMode mode);

std::string roots_to_json(const RootSystem& rs);
std::string roots_to_text(const RootSystem& rs);

}  // namespace kflag
