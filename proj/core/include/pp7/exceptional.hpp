#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pp7/gf.hpp"
#include "pp7/poly.hpp"

namespace pp7 {

enum class ExceptionalFamily {
    Monomial,     // x^7
    Dickson7,     // D_7(x, a)
    P7Linearized, // x (x^{6/s} - a)^s over F_{7^r}
};

std::string_view family_name(ExceptionalFamily family);
std::optional<ExceptionalFamily> parse_family(std::string_view name);

struct ExceptionalEntry {
    ExceptionalFamily family = ExceptionalFamily::Monomial;
    Elem parameter;
    std::optional<int> s;
    Polynomial polynomial;
    /// Canonical class key of the normalized polynomial.
    NormalizedSeptic key;
};

/// D_7(x, a) = x^7 - 7a x^5 + 14a^2 x^3 - 7a^3 x.
Polynomial dickson7(const Field& F, Elem a);

/// One representative per linear-equivalence class of degree-7 exceptional
/// polynomials over F_q. Empty when q = 1 mod 7 outside characteristic 7.
std::vector<ExceptionalEntry> catalog(const Field& F);

/// Catalog lookup by class. `catalog_entries` must come from catalog(F).
std::optional<ExceptionalEntry> is_exceptional(const Field& F, const std::vector<ExceptionalEntry>& catalog_entries,
                                               const NormalizedSeptic& s);

/// Convenience overload that builds the catalog.
std::optional<ExceptionalEntry> is_exceptional(const Field& F, const NormalizedSeptic& s);

} // namespace pp7
