#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pp7/gf.hpp"
#include "pp7/hermite.hpp"
#include "pp7/poly.hpp"

namespace pp7 {

enum class CosetKind {
    /// Representatives of F_q^* / (F_q^*)^m: e^j for 0 <= j < gcd(m, q-1).
    Cokernel,
    /// Representatives of F_q^* / ker(t -> t^m): e^j for 0 <= j < (q-1)/gcd(m, q-1).
    Coimage,
};

struct CosetReps {
    int m = 0;
    std::vector<Elem> reps;
};

CosetReps coset_reps(const Field& F, int m, CosetKind kind);

/// x -> s f(t x + u) + v with s, t nonzero.
struct LinearMap {
    Elem s{1}, t{1}, u, v;
};

Polynomial apply_linear(const Field& F, const Polynomial& f, const LinearMap& map);

/// Linearly related normalized septic.
///
/// Outside characteristic 7 the result is monic with zero x^6 and constant
/// terms. In characteristic 7 it is monic with zero constant term and, when k
/// is the largest index in 1..6 with a nonzero coefficient, a_{k-1} = 0;
/// c x^7 + c0 maps to x^7 (all coefficients zero). Throws unless deg f = 7.
NormalizedSeptic normalize(const Field& F, const Polynomial& f);

/// A t with a_i = b_i t^{7-i} for every i, found by scanning F_q^*.
std::optional<Elem> linearly_related(const Field& F, const NormalizedSeptic& a, const NormalizedSeptic& b);

/// Smallest tuple in the orbit {(b_i t^{7-i})_i : t in F_q^*}, compared on
/// the encodings of (a6, a5, a4, a3, a2, a1).
NormalizedSeptic canonical(const Field& F, const NormalizedSeptic& s);

/// (a5, a4) prefix of a candidate, the unit of parallel work.
struct CandidatePrefix {
    Elem a5, a4;
    friend bool operator==(const CandidatePrefix&, const CandidatePrefix&) = default;
};

/// Search space of normalized septics that contains a member of every
/// linear-equivalence class of degree-7 permutation polynomials over F_q.
///
/// Coefficients range over coset-representative menus (CK / CI sets) chosen
/// by the position of the highest nonzero coefficient. Outside characteristic
/// 7 the coefficient forced by the residue of q mod 7 is pinned; in
/// characteristic 7 a1 is pinned by the a5 != 0 relation. Pinning can be
/// switched off to audit the identity filters.
class CandidateSpace {
public:
    /// Requires odd q with 7 < q <= 409, or q in {49, 343}. Throws
    /// std::invalid_argument otherwise. q = 1 mod 7 yields an empty space.
    explicit CandidateSpace(const Field& F, bool pin_forced_coefficients = true);

    const Field& field() const { return *field_; }

    bool empty() const { return !reason_empty_.empty(); }
    const std::string& empty_reason() const { return reason_empty_; }

    std::vector<CandidatePrefix> prefixes() const;

    /// Calls fn(const NormalizedSeptic&) for every candidate with this prefix.
    template <class Fn>
    void visit(const CandidatePrefix& prefix, Fn&& fn) const;

    template <class Fn>
    void visit_all(Fn&& fn) const
    {
        for (const auto& pre : prefixes())
            visit(pre, fn);
    }

    std::vector<NormalizedSeptic> collect() const;

private:
    struct Menu {
        std::vector<Elem> elems;
        std::vector<char> member;
    };

    Menu make_menu(std::vector<Elem> elems) const;
    Menu zero_or(const CosetReps& reps) const;

    const Menu& menu_a3(const NormalizedSeptic& s) const;
    const Menu& menu_a2(const NormalizedSeptic& s) const;
    const Menu& menu_a1(const NormalizedSeptic& s) const;

    // Forced value for a_i, if pinning applies at this level.
    std::optional<Elem> forced(int i, const NormalizedSeptic& s) const;

    template <class Fn>
    void for_each_choice(const Menu& menu, std::optional<Elem> pin, Fn&& fn) const
    {
        if (pin) {
            if (menu.member[pin->code()])
                fn(*pin);
            return;
        }
        for (Elem a : menu.elems)
            fn(a);
    }

    const Field* field_;
    bool seven_ = false;
    bool pin_ = true;
    bool q_is_1_mod_4_ = false;
    std::string reason_empty_;
    std::optional<IdentityFilter> filter_;

    Menu all_;
    Menu zero_;
    Menu a5_;
    Menu zero_ci2_, zero_ci3_, zero_ci4_, zero_ci5_;
    Menu zero_ck3_, zero_ck4_, zero_ck5_, zero_ck6_;
};

template <class Fn>
void CandidateSpace::visit(const CandidatePrefix& prefix, Fn&& fn) const
{
    if (empty())
        return;
    NormalizedSeptic s;
    s[5] = prefix.a5;
    s[4] = prefix.a4;
    for_each_choice(menu_a3(s), forced(3, s), [&](Elem a3) {
        s[3] = a3;
        for_each_choice(menu_a2(s), forced(2, s), [&](Elem a2) {
            s[2] = a2;
            for_each_choice(menu_a1(s), forced(1, s), [&](Elem a1) {
                s[1] = a1;
                fn(static_cast<const NormalizedSeptic&>(s));
            });
        });
    });
}

} // namespace pp7
