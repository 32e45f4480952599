#include "pp7/exceptional.hpp"

#include <algorithm>
#include <stdexcept>

#include "pp7/equiv.hpp"

namespace pp7 {

std::string_view family_name(ExceptionalFamily family)
{
    switch (family) {
    case ExceptionalFamily::Monomial:
        return "Monomial";
    case ExceptionalFamily::Dickson7:
        return "Dickson7";
    case ExceptionalFamily::P7Linearized:
        return "P7Linearized";
    }
    return "?";
}

std::optional<ExceptionalFamily> parse_family(std::string_view name)
{
    for (auto f : {ExceptionalFamily::Monomial, ExceptionalFamily::Dickson7, ExceptionalFamily::P7Linearized})
        if (family_name(f) == name)
            return f;
    return std::nullopt;
}

Polynomial dickson7(const Field& F, Elem a)
{
    const Elem a2 = F.mul(a, a);
    const Elem a3 = F.mul(a2, a);
    std::vector<Elem> c(8);
    c[7] = F.one();
    c[5] = F.neg(F.mul(F.from_int(7), a));
    c[3] = F.mul(F.from_int(14), a2);
    c[1] = F.neg(F.mul(F.from_int(7), a3));
    return Polynomial(std::move(c));
}

namespace {

ExceptionalEntry make_entry(const Field& F, ExceptionalFamily family, Elem parameter, std::optional<int> s,
                            Polynomial poly)
{
    const auto key = canonical(F, normalize(F, poly));
    return {family, parameter, s, std::move(poly), key};
}

} // namespace

std::vector<ExceptionalEntry> catalog(const Field& F)
{
    const int q = F.q();
    if (F.p() == 2)
        throw std::invalid_argument("characteristic 2 is not supported");
    std::vector<ExceptionalEntry> out;
    const auto x7 = Polynomial::monomial(F.one(), 7);

    if (F.p() != 7) {
        const int res = q % 7;
        if (res == 1)
            return out;
        out.push_back(make_entry(F, ExceptionalFamily::Monomial, Elem{}, std::nullopt, x7));
        if (res != 6) {
            const Elem a = F.neg(F.inv(F.from_int(7)));
            out.push_back(make_entry(F, ExceptionalFamily::Dickson7, a, std::nullopt, dickson7(F, a)));
            const Elem ae = F.mul(a, F.generator());
            out.push_back(make_entry(F, ExceptionalFamily::Dickson7, ae, std::nullopt, dickson7(F, ae)));
        }
        return out;
    }

    out.push_back(make_entry(F, ExceptionalFamily::Monomial, Elem{}, std::nullopt, x7));
    for (int s = 1; s <= 3; ++s) {
        const int step = 6 / s;
        const std::int64_t exponent = static_cast<std::int64_t>(s) * (q - 1) / 6;
        for (auto a : F.elements()) {
            if (a.is_zero() || F.pow(a, exponent) == F.one())
                continue;
            // x (x^{6/s} - a)^s
            const Polynomial inner = add(F, Polynomial::monomial(F.one(), step), Polynomial::constant(F.neg(a)));
            auto poly = mul(F, Polynomial::monomial(F.one(), 1), pow_poly(F, inner, s));
            auto entry = make_entry(F, ExceptionalFamily::P7Linearized, a, s, std::move(poly));
            const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& e) { return e.key == entry.key; });
            if (!seen)
                out.push_back(std::move(entry));
        }
    }
    return out;
}

std::optional<ExceptionalEntry> is_exceptional(const Field& F, const std::vector<ExceptionalEntry>& catalog_entries,
                                               const NormalizedSeptic& s)
{
    const auto key = canonical(F, s);
    for (const auto& e : catalog_entries)
        if (e.key == key)
            return e;
    return std::nullopt;
}

std::optional<ExceptionalEntry> is_exceptional(const Field& F, const NormalizedSeptic& s)
{
    return is_exceptional(F, catalog(F), s);
}

} // namespace pp7
