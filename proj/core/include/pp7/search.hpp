#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pp7/exceptional.hpp"
#include "pp7/gf.hpp"
#include "pp7/poly.hpp"

namespace pp7 {

/// One linear-equivalence class of degree-7 permutation polynomials.
struct PPClassRecord {
    int q = 0;
    /// Canonical representative.
    NormalizedSeptic coeffs;
    bool is_exceptional = false;
    std::optional<ExceptionalFamily> family;
    /// Raw candidates that landed in this class.
    std::int64_t witness_count = 0;

    friend bool operator==(const PPClassRecord&, const PPClassRecord&) = default;
};

struct FieldSummary {
    int p = 0;
    int r = 0;
    int q = 0;
    std::vector<int> modulus;
    std::uint32_t generator = 0;

    friend bool operator==(const FieldSummary&, const FieldSummary&) = default;
};

FieldSummary summarize(const Field& F);

struct ClassificationReport {
    FieldSummary field;
    std::vector<PPClassRecord> records;
    int nonexceptional_count = 0;
    double elapsed_ms = 0;
    std::optional<std::vector<std::string>> golden_diff;
    /// Why the search space is empty, if it is.
    std::string note;
    std::int64_t candidates = 0;
    /// Permutation septics rejected by an identity filter (audit runs only).
    std::int64_t filter_violations = 0;
};

struct SearchOptions {
    int jobs = 1;
    /// Test every menu candidate for the permutation property before any
    /// identity filter and count permutations the filters would reject.
    bool audit_filters = false;
};

/// Lists every class of degree-7 permutation polynomials over F, with one
/// canonical record per class sorted by key. The result does not depend on
/// options.jobs. Throws std::invalid_argument outside odd 7 < q <= 409.
ClassificationReport classify(const Field& F, const SearchOptions& options = {});

/// Published classification data for one field order.
struct GoldenTable {
    int q = 0;
    /// Field model the "e" in the tuples refers to; empty when the data is
    /// written with integers only.
    std::vector<int> modulus;
    /// Non-exceptional classes as printed, (a5,a4,a3,a2,a1).
    std::vector<std::string> nonexceptional;
    /// Exceptional classes when the source lists them explicitly; otherwise
    /// the expected set is catalog(F).
    std::optional<std::vector<std::string>> exceptional;
};

/// Every odd prime power 7 < q <= 409, including those with no
/// non-exceptional classes.
const std::map<int, GoldenTable>& golden_tables();

struct ExpectedClasses {
    std::set<NormalizedSeptic> nonexceptional;
    std::set<NormalizedSeptic> exceptional;
};

/// Canonicalizes a golden table under F. When F uses a different modulus
/// than the table, "e" is mapped to the smallest root of the table's modulus.
ExpectedClasses expected_classes(const Field& F, const GoldenTable& table);

/// Human-readable mismatches between the report and the golden data; empty
/// when both the non-exceptional and exceptional class sets agree.
std::vector<std::string> diff_against_golden(const Field& F, const ClassificationReport& report);

/// classify() followed by diff_against_golden(); the diff is stored in the
/// returned report.
ClassificationReport verify_paper(const Field& F, int jobs = 1);

/// JSON report: {q, p, r, modulus, generator, classes: [{coeffs, exceptional,
/// family}], nonexceptional_count, elapsed_ms}. Coefficients are integer
/// encodings in (a5, a4, a3, a2, a1) order.
std::string report_to_json(const ClassificationReport& report, int indent = 2);
ClassificationReport report_from_json(const std::string& text);

/// Header "q,a5,a4,a3,a2,a1,exceptional,family", one class per row.
std::string report_to_csv(const ClassificationReport& report);

} // namespace pp7
