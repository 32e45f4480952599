#include "pp7/equiv.hpp"

#include <numeric>
#include <stdexcept>

namespace pp7 {

CosetReps coset_reps(const Field& F, int m, CosetKind kind)
{
    if (m < 1)
        throw std::invalid_argument("coset representatives need m >= 1");
    const int n = F.q() - 1;
    const int g = std::gcd(m, n);
    const int count = kind == CosetKind::Cokernel ? g : n / g;
    CosetReps out{m, {}};
    out.reps.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        out.reps.push_back(F.gen_pow(j));
    return out;
}

Polynomial apply_linear(const Field& F, const Polynomial& f, const LinearMap& map)
{
    if (map.s.is_zero() || map.t.is_zero())
        throw std::invalid_argument("linear map needs s, t != 0");
    const Polynomial inner({map.u, map.t});
    auto g = scale(F, compose(F, f, inner), map.s);
    return add(F, g, Polynomial::constant(map.v));
}

NormalizedSeptic normalize(const Field& F, const Polynomial& h)
{
    if (h.degree() != 7)
        throw std::invalid_argument("normalize expects a polynomial of degree 7");
    const Elem c7 = h.coeff(7);
    Elem shift;
    if (F.p() != 7) {
        // The x^6 coefficient of h(x + u) is c6 + 7 c7 u.
        shift = F.neg(F.div(h.coeff(6), F.mul(F.from_int(7), c7)));
    } else {
        int k = 0;
        for (int j = 6; j >= 1 && k == 0; --j)
            if (!h.coeff(j).is_zero())
                k = j;
        if (k == 0)
            return {};
        // (x + u)^7 = x^7 + u^7, so the x^{k-1} coefficient of h(x + u) is c_{k-1} + k c_k u.
        shift = F.neg(F.div(h.coeff(k - 1), F.mul(F.from_int(k), h.coeff(k))));
    }
    const Elem s = F.inv(c7);
    const Elem v = F.neg(F.mul(s, eval(F, h, shift)));
    return NormalizedSeptic::from_polynomial(apply_linear(F, h, {s, F.one(), shift, v}));
}

std::optional<Elem> linearly_related(const Field& F, const NormalizedSeptic& a, const NormalizedSeptic& b)
{
    for (int j = 0; j < F.q() - 1; ++j) {
        bool ok = true;
        for (int i = 1; i <= 6 && ok; ++i)
            ok = a[i] == F.mul(b[i], F.gen_pow(static_cast<std::int64_t>(j) * (7 - i)));
        if (ok)
            return F.gen_pow(j);
    }
    return std::nullopt;
}

NormalizedSeptic canonical(const Field& F, const NormalizedSeptic& s)
{
    const int n = F.q() - 1;
    std::array<int, 7> logs{};
    for (int i = 1; i <= 6; ++i)
        logs[static_cast<std::size_t>(i)] = F.log(s[i]).value_or(-1);

    NormalizedSeptic best = s;
    for (int j = 1; j < n; ++j) {
        NormalizedSeptic cand;
        bool smaller = false, decided = false;
        for (int i = 6; i >= 1; --i) {
            const auto li = logs[static_cast<std::size_t>(i)];
            cand[i] = li < 0 ? Elem{} : F.gen_pow(li + static_cast<std::int64_t>(j) * (7 - i));
            if (!decided && cand[i] != best[i]) {
                decided = true;
                smaller = cand[i] < best[i];
                if (!smaller)
                    break;
            }
        }
        if (smaller)
            best = cand;
    }
    return best;
}

CandidateSpace::CandidateSpace(const Field& F, bool pin_forced_coefficients)
    : field_(&F), seven_(F.p() == 7), pin_(pin_forced_coefficients)
{
    const int q = F.q();
    if (F.p() == 2)
        throw std::invalid_argument("characteristic 2 is not supported");
    if (seven_) {
        if (F.r() != 2 && F.r() != 3)
            throw std::invalid_argument("in characteristic 7 only q = 49 and q = 343 are supported");
    } else if (q <= 7 || q > 409) {
        throw std::invalid_argument("classification covers 7 < q <= 409 only");
    }
    q_is_1_mod_4_ = q % 4 == 1;
    if (q % 7 == 1) {
        reason_empty_ = "7 divides q - 1, so no degree-7 permutation polynomial exists";
        return;
    }
    if (!seven_)
        filter_.emplace(F);

    all_ = make_menu(F.elements());
    zero_ = make_menu({Elem{}});
    a5_ = zero_or(coset_reps(F, 2, CosetKind::Cokernel));
    zero_ci2_ = zero_or(coset_reps(F, 2, CosetKind::Coimage));
    zero_ci3_ = zero_or(coset_reps(F, 3, CosetKind::Coimage));
    zero_ci4_ = zero_or(coset_reps(F, 4, CosetKind::Coimage));
    zero_ci5_ = zero_or(coset_reps(F, 5, CosetKind::Coimage));
    zero_ck3_ = zero_or(coset_reps(F, 3, CosetKind::Cokernel));
    zero_ck4_ = zero_or(coset_reps(F, 4, CosetKind::Cokernel));
    zero_ck5_ = zero_or(coset_reps(F, 5, CosetKind::Cokernel));
    zero_ck6_ = zero_or(coset_reps(F, 6, CosetKind::Cokernel));
}

CandidateSpace::Menu CandidateSpace::make_menu(std::vector<Elem> elems) const
{
    Menu m;
    m.member.assign(static_cast<std::size_t>(field_->q()), 0);
    for (auto a : elems)
        m.member[a.code()] = 1;
    m.elems = std::move(elems);
    return m;
}

CandidateSpace::Menu CandidateSpace::zero_or(const CosetReps& reps) const
{
    std::vector<Elem> elems{Elem{}};
    elems.insert(elems.end(), reps.reps.begin(), reps.reps.end());
    return make_menu(std::move(elems));
}

std::optional<Elem> CandidateSpace::forced(int i, const NormalizedSeptic& s) const
{
    if (!pin_)
        return std::nullopt;
    if (seven_) {
        if (i == 1 && !s[5].is_zero())
            return p7_forced_a1(*field_, s[5], s[3]);
        return std::nullopt;
    }
    if (filter_->pinned_index() == i)
        return filter_->pinned_value(s);
    return std::nullopt;
}

std::vector<CandidatePrefix> CandidateSpace::prefixes() const
{
    std::vector<CandidatePrefix> out;
    if (empty())
        return out;
    NormalizedSeptic s;
    for_each_choice(a5_, forced(5, s), [&](Elem a5) {
        s[5] = a5;
        const Menu& a4_menu = !a5.is_zero() ? (seven_ ? zero_ : zero_ci2_) : zero_ck3_;
        for_each_choice(a4_menu, forced(4, s), [&](Elem a4) { out.push_back({a5, a4}); });
    });
    return out;
}

const CandidateSpace::Menu& CandidateSpace::menu_a3(const NormalizedSeptic& s) const
{
    if (!s[5].is_zero())
        return all_;
    if (!s[4].is_zero())
        return seven_ ? zero_ : zero_ci3_;
    return zero_ck4_;
}

const CandidateSpace::Menu& CandidateSpace::menu_a2(const NormalizedSeptic& s) const
{
    if (!s[5].is_zero())
        return s[4].is_zero() ? zero_ci2_ : all_;
    if (!s[4].is_zero())
        return s[3].is_zero() ? zero_ci3_ : all_;
    if (!s[3].is_zero())
        return seven_ ? zero_ : zero_ci4_;
    return zero_ck5_;
}

const CandidateSpace::Menu& CandidateSpace::menu_a1(const NormalizedSeptic& s) const
{
    if (!s[5].is_zero() || !s[4].is_zero())
        return all_;
    if (!s[3].is_zero())
        return s[2].is_zero() && q_is_1_mod_4_ ? zero_ci2_ : all_;
    if (!s[2].is_zero())
        return seven_ ? zero_ : zero_ci5_;
    return zero_ck6_;
}

std::vector<NormalizedSeptic> CandidateSpace::collect() const
{
    std::vector<NormalizedSeptic> out;
    visit_all([&](const NormalizedSeptic& s) { out.push_back(s); });
    return out;
}

} // namespace pp7
