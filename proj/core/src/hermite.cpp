#include "pp7/hermite.hpp"

#include <stdexcept>
#include <string>

namespace pp7 {

namespace {

// Thin value wrapper so the identities below read like the formulas.
struct V {
    const Field* F;
    Elem e;
};

inline V operator+(V a, V b) { return {a.F, a.F->add(a.e, b.e)}; }
inline V operator-(V a, V b) { return {a.F, a.F->sub(a.e, b.e)}; }
inline V operator*(V a, V b) { return {a.F, a.F->mul(a.e, b.e)}; }

inline V sq(V a) { return a * a; }
inline V cube(V a) { return a * a * a; }

} // namespace

Elem hermite_coefficient_sum(const Field& F, const Polynomial& g, int q)
{
    Elem sum;
    for (int idx = q - 1; idx <= g.degree(); idx += q - 1)
        sum = F.add(sum, g.coeff(idx));
    return sum;
}

HermiteReport hermite_full(const Field& F, const Polynomial& f)
{
    if (f.degree() < 1)
        throw std::invalid_argument("Hermite criterion needs a nonconstant polynomial");
    const int q = F.q();
    const int p = F.p();
    HermiteReport report;
    Polynomial power = f;
    for (int k = 1; k <= q - 2; ++k) {
        if (k % p != 0 && !hermite_coefficient_sum(F, power, q).is_zero()) {
            report.failing_k = k;
            return report;
        }
        power = mul(F, power, f);
    }
    // power = f^{q-1}
    report.cond1_sum = hermite_coefficient_sum(F, power, q);
    report.passed = !report.cond1_sum->is_zero();
    return report;
}

IdentityFilter::IdentityFilter(const Field& F) : field_(&F)
{
    const int q = F.q();
    const int p = F.p();
    if (p == 2 || p == 7)
        throw std::invalid_argument("identity filters need characteristic other than 2 and 7");
    if (q <= 7 || q > 409)
        throw std::invalid_argument("identity filters cover 7 < q <= 409 only");
    residue_ = q % 7;
    constexpr int kLargestConstant = 4802;
    constants_.resize(kLargestConstant + 1);
    for (int n = 0; n <= kLargestConstant; ++n)
        constants_[static_cast<std::size_t>(n)] = F.from_int(n);
    inv7_ = F.inv(F.from_int(7));
    switch (residue_) {
    case 2:
        pinned_index_ = 1;
        second_applies_ = p != 3 && p != 5;
        break;
    case 3:
        pinned_index_ = 2;
        second_applies_ = p != 11;
        break;
    case 4:
        if (p != 3)
            pinned_index_ = 3;
        second_applies_ = p != 3 && p != 5 && q > 25;
        break;
    case 5:
        pinned_index_ = 4;
        second_applies_ = p != 3;
        break;
    case 6:
        pinned_index_ = 5;
        second_applies_ = true;
        break;
    default:
        throw std::invalid_argument("no degree-7 permutation polynomial exists over F_" + std::to_string(q) +
                                    " (q = 1 mod 7)");
    }
}

Elem IdentityFilter::pinned_value(const NormalizedSeptic& s) const
{
    const V a5{field_, s[5]}, a4{field_, s[4]}, a3{field_, s[3]};
    const V i7{field_, inv7_};
    auto k = [&](int n) { return V{field_, c(n)}; };
    switch (residue_) {
    case 2: // a1 = 7^-1 (2 a3 a5 + a4^2 - 7^-1 * 3 a5^3)
        return (i7 * (k(2) * a3 * a5 + sq(a4) - i7 * k(3) * cube(a5))).e;
    case 3: // a2 = 7^-1 * 3 a4 a5
        return (i7 * k(3) * a4 * a5).e;
    case 4: // a3 = 7^-1 * 2 a5^2
        return (i7 * k(2) * sq(a5)).e;
    case 5: // a4 = 0
    case 6: // a5 = 0
        return Elem{};
    }
    throw std::logic_error("unreachable residue");
}

bool IdentityFilter::first_holds(const NormalizedSeptic& s) const
{
    if (!pinned_index_)
        return true;
    return s[*pinned_index_] == pinned_value(s);
}

Elem IdentityFilter::second_lhs(const NormalizedSeptic& s) const
{
    const V a5{field_, s[5]}, a4{field_, s[4]}, a3{field_, s[3]}, a2{field_, s[2]}, a1{field_, s[1]};
    auto k = [&](int n) { return V{field_, c(n)}; };
    switch (residue_) {
    case 2:
        return (k(3430) * (a1 * a2 * a5 + a1 * a3 * a4) + k(1715) * (a2 * sq(a3) + sq(a2) * a4) -
                k(2205) * (a2 * sq(a4) * a5 + a1 * a4 * sq(a5) + a2 * a3 * sq(a5) + sq(a3) * a4 * a5) -
                k(735) * a3 * cube(a4) + k(1680) * a3 * a4 * cube(a5) + k(840) * cube(a4) * sq(a5) +
                k(420) * a2 * sq(sq(a5)) - k(276) * a4 * sq(sq(a5)) * a5)
            .e;
    case 3:
        return (k(4802) * sq(a1) - k(4116) * (a1 * a3 * a5 + a2 * a3 * a4) -
                k(2058) * (sq(a2) * a5 + a1 * sq(a4)) - k(686) * cube(a3) +
                k(2940) * (a3 * sq(a4) * a5 + a2 * a4 * sq(a5)) + k(1470) * sq(a3) * sq(a5) +
                k(980) * a1 * cube(a5) + k(245) * sq(sq(a4)) - k(1190) * sq(a4) * cube(a5) -
                k(595) * a3 * sq(sq(a5)) + k(68) * cube(sq(a5)))
            .e;
    case 4:
        return (k(1029) * a1 * a2 - k(588) * (a1 * a4 * a5 + a2 * a3 * a5) - k(294) * (a2 * sq(a4) + sq(a3) * a4) +
                k(154) * (a2 * cube(a5) + cube(a4) * a5) + k(462) * a3 * a4 * sq(a5) - k(99) * a4 * sq(sq(a5)))
            .e;
    case 5:
        return (k(686) * a1 * a3 + k(343) * sq(a2) - k(245) * (a1 * sq(a5) + sq(a3) * a5) +
                k(140) * a3 * cube(a5) - k(19) * sq(sq(a5)) * a5)
            .e;
    case 6:
        return (k(7) * a1 * a4 + k(7) * a2 * a3 - cube(a4)).e;
    }
    throw std::logic_error("unreachable residue");
}

bool IdentityFilter::second_holds(const NormalizedSeptic& s) const
{
    return !second_applies_ || second_lhs(s).is_zero();
}

bool IdentityFilter::special_holds(const NormalizedSeptic& s) const
{
    const int q = field_->q();
    if (q != 81 && q != 243)
        return true;
    const V a5{field_, s[5]}, a4{field_, s[4]}, a3{field_, s[3]}, a2{field_, s[2]}, a1{field_, s[1]};
    if (q == 243) // a5 (a1 + a3 a5) = 0
        return (a5 * (a1 + a3 * a5)).e.is_zero();
    // q = 81: [x^80 : f^13] and [x^80 : f^14]
    if (!(a2 * cube(a5) + cube(a4) * a5).e.is_zero())
        return false;
    const V rhs = cube(cube(a5)) + cube(a3) * sq(a4) - a2 * a3 * cube(a4) - a1 * sq(sq(a4)) - sq(sq(a3)) * a5 +
                  sq(a1) * cube(a5) - a1 * cube(a3) - cube(a2) * a4 + cube(a1);
    return rhs.e.is_zero();
}

bool identity_filter(const Field& F, const NormalizedSeptic& s)
{
    return IdentityFilter(F)(s);
}

Elem p7_forced_a1(const Field& F, Elem a5, Elem a3)
{
    if (F.p() != 7)
        throw std::invalid_argument("the a1 relation is specific to characteristic 7");
    if (a5.is_zero())
        throw std::invalid_argument("the a1 relation needs a5 != 0");
    const V x5{&F, a5}, x3{&F, a3}, three{&F, F.from_int(3)};
    return (three * (x3 * x5 + sq(x3) * V{&F, F.inv(a5)})).e;
}

bool p7_a1_relation(const Field& F, const NormalizedSeptic& s)
{
    return s[1] == p7_forced_a1(F, s[5], s[3]);
}

} // namespace pp7
