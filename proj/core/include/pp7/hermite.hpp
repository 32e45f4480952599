#pragma once

#include <optional>
#include <vector>

#include "pp7/gf.hpp"
#include "pp7/poly.hpp"

namespace pp7 {

/// Outcome of the full Hermite criterion.
///
/// `failing_k` is the first exponent k (coprime to q, 1 <= k <= q-2) whose
/// coefficient sum over x^{j(q-1)} in f^k is nonzero. The loop stops there, so
/// `cond1_sum` is only present when every such k vanished.
struct HermiteReport {
    bool passed = false;
    std::optional<int> failing_k;
    std::optional<Elem> cond1_sum;
};

/// Exact permutation test by Hermite's criterion. Requires deg f >= 1.
HermiteReport hermite_full(const Field& F, const Polynomial& f);

/// Sum over j = 1..floor(k deg f / (q-1)) of [x^{j(q-1)} : g], where g = f^k.
Elem hermite_coefficient_sum(const Field& F, const Polynomial& g, int q);

/// Necessary conditions on (a5, ..., a1) for a normalized septic to permute
/// F_q, with 7 < q <= 409, p odd and q mod 7 in {2, ..., 6}.
///
/// Each residue class carries a "first" identity that forces one coefficient
/// from the higher ones, and a "second" identity checked once the tuple is
/// complete. Fields of characteristic 3 use dedicated identities at q = 81 and
/// q = 243. All integer constants are reduced into F_p once, at construction.
class IdentityFilter {
public:
    /// Throws std::invalid_argument for unsupported (q mod 7, p).
    explicit IdentityFilter(const Field& F);

    int residue() const { return residue_; }

    /// Index i of the coefficient a_i forced by the first identity, if any.
    std::optional<int> pinned_index() const { return pinned_index_; }

    /// Forced value of a_{pinned_index()} given the coefficients above it.
    Elem pinned_value(const NormalizedSeptic& s) const;

    bool first_holds(const NormalizedSeptic& s) const;
    bool second_holds(const NormalizedSeptic& s) const;
    bool special_holds(const NormalizedSeptic& s) const;

    bool second_applies() const { return second_applies_; }

    /// All applicable identities.
    bool operator()(const NormalizedSeptic& s) const
    {
        return first_holds(s) && second_holds(s) && special_holds(s);
    }

    /// Left-hand side of the second identity, for consistency checks.
    Elem second_lhs(const NormalizedSeptic& s) const;

private:
    // Integer constants of the identities, reduced into F_p once.
    Elem c(int n) const { return constants_[static_cast<std::size_t>(n)]; }

    const Field* field_;
    int residue_ = 0;
    std::optional<int> pinned_index_;
    bool second_applies_ = false;
    Elem inv7_;
    std::vector<Elem> constants_;
};

/// One-shot form of IdentityFilter.
bool identity_filter(const Field& F, const NormalizedSeptic& s);

/// In characteristic 7 with a5 != 0 a permutation septic in reduced shape has
/// a1 = 3(a3 a5 + a3^2 / a5). Throws std::invalid_argument if a5 = 0 or p != 7.
bool p7_a1_relation(const Field& F, const NormalizedSeptic& s);

/// The a1 value forced by p7_a1_relation.
Elem p7_forced_a1(const Field& F, Elem a5, Elem a3);

} // namespace pp7
