#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pp7/gf.hpp"
#include "pp7/poly.hpp"

namespace pp7 {

/// Thrown for malformed element or tuple text.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses a sum of terms such as "2", "e", "e^18", "2e^{3}", "3*e^2+e+1".
///
/// A bare integer is an element encoding (so it must be below q); "e" is the
/// multiplicative generator unless `e` overrides it. Exponents are reduced
/// mod q - 1.
Elem parse_element(const Field& F, std::string_view text, std::optional<Elem> e = std::nullopt);

/// Comma-separated parse_element tokens, optionally wrapped in parentheses.
std::vector<Elem> parse_element_list(const Field& F, std::string_view text, std::optional<Elem> e = std::nullopt);

enum class ElementStyle {
    /// Integer encoding.
    Code,
    /// Prime fields as integers, extension fields as powers of the generator.
    Power,
};

std::string format_element(const Field& F, Elem a, ElementStyle style = ElementStyle::Power);

/// "(a5,a4,a3,a2,a1)".
std::string format_tuple(const Field& F, const NormalizedSeptic& s, ElementStyle style = ElementStyle::Power);

/// "x^7 + e*x^5 + ..." for display.
std::string format_polynomial(const Field& F, const Polynomial& f);

} // namespace pp7
