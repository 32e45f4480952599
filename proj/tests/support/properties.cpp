#include "properties.hpp"

#include <optional>
#include <set>
#include <sstream>

#include "pp7/equiv.hpp"
#include "pp7/exceptional.hpp"
#include "pp7/hermite.hpp"
#include "pp7/notation.hpp"
#include "pp7/search.hpp"

namespace props {

using namespace pp7;

void Tally::check(bool ok, const std::string& what)
{
    ++cases;
    if (!ok) {
        if (failures == 0)
            first_failure = what;
        ++failures;
    }
}

Tally& Tally::operator+=(const Tally& other)
{
    if (failures == 0 && other.failures > 0)
        first_failure = other.first_failure;
    cases += other.cases;
    failures += other.failures;
    return *this;
}

Elem random_elem(const Field& F, Rng& rng)
{
    return Elem{static_cast<std::uint32_t>(std::uniform_int_distribution<int>(0, F.q() - 1)(rng))};
}

Elem random_nonzero(const Field& F, Rng& rng)
{
    return Elem{static_cast<std::uint32_t>(std::uniform_int_distribution<int>(1, F.q() - 1)(rng))};
}

NormalizedSeptic random_septic(const Field& F, Rng& rng)
{
    NormalizedSeptic s;
    for (int i = 1; i <= 5; ++i)
        s[i] = random_elem(F, rng);
    return s;
}

Polynomial random_degree7(const Field& F, Rng& rng)
{
    std::vector<Elem> c(8);
    for (auto& a : c)
        a = random_elem(F, rng);
    c[7] = random_nonzero(F, rng);
    return Polynomial(std::move(c));
}

oracle::NaiveField naive_twin(const Field& F)
{
    return oracle::NaiveField(F.p(), std::vector<int>(F.modulus().begin(), F.modulus().end()));
}

std::vector<oracle::Code> codes(const Polynomial& f)
{
    std::vector<oracle::Code> out;
    for (auto a : f.coeffs())
        out.push_back(a.code());
    return out;
}

std::vector<int> classification_orders()
{
    std::vector<int> out;
    for (int q = 9; q <= 409; q += 2)
        if (prime_power(q))
            out.push_back(q);
    return out;
}

namespace {

LinearMap random_map(const Field& F, Rng& rng)
{
    return {random_nonzero(F, rng), random_nonzero(F, rng), random_elem(F, rng), random_elem(F, rng)};
}

std::string show(const Field& F, const NormalizedSeptic& s)
{
    return format_tuple(F, s, ElementStyle::Code);
}

NormalizedSeptic scaled(const Field& F, const NormalizedSeptic& s, Elem t)
{
    NormalizedSeptic out;
    for (int i = 1; i <= 6; ++i)
        out[i] = F.mul(s[i], F.pow(t, 7 - i));
    return out;
}

bool witness_ok(const Field& F, const NormalizedSeptic& a, const NormalizedSeptic& b, Elem t)
{
    for (int i = 1; i <= 6; ++i)
        if (a[i] != F.mul(b[i], F.pow(t, 7 - i)))
            return false;
    return true;
}

} // namespace

std::vector<Polynomial> known_permutations(const Field& F, Rng& rng, int count)
{
    const auto report = classify(F);
    std::vector<Polynomial> out;
    if (report.records.empty())
        return out;
    std::uniform_int_distribution<std::size_t> pick(0, report.records.size() - 1);
    for (int i = 0; i < count; ++i) {
        const auto& rec = report.records[pick(rng)];
        out.push_back(apply_linear(F, rec.coeffs.to_polynomial(), random_map(F, rng)));
    }
    return out;
}

Tally field_axioms(const Field& F, Rng& rng, int n)
{
    Tally t;
    for (int i = 0; i < n; ++i) {
        const Elem a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
        const bool ok = F.add(F.add(a, b), c) == F.add(a, F.add(b, c)) &&
                        F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)) &&
                        F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)) &&
                        F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a) &&
                        F.add(a, F.neg(a)).is_zero() && F.sub(F.add(a, b), b) == a &&
                        F.mul(a, F.one()) == a && (a.is_zero() || F.mul(a, F.inv(a)) == F.one());
        std::ostringstream msg;
        msg << "axioms fail over F_" << F.q() << " at (" << a.code() << ", " << b.code() << ", " << c.code() << ")";
        t.check(ok, msg.str());
    }
    return t;
}

Tally frobenius(const Field& F, Rng& rng, int n)
{
    Tally t;
    for (int i = 0; i < n; ++i) {
        const Elem a = random_elem(F, rng), b = random_elem(F, rng);
        std::ostringstream msg;
        msg << "(a+b)^p != a^p + b^p over F_" << F.q() << " at (" << a.code() << ", " << b.code() << ")";
        t.check(F.pow(F.add(a, b), F.p()) == F.add(F.pow(a, F.p()), F.pow(b, F.p())), msg.str());
    }
    return t;
}

Tally generator_order(const Field& F)
{
    Tally t;
    const auto N = naive_twin(F);
    t.check(N.order(F.generator().code()) == F.q() - 1, "generator order wrong over F_" + std::to_string(F.q()));
    // Smallest element of full order.
    for (std::uint32_t c = 1; c < F.generator().code(); ++c)
        t.check(N.order(c) != F.q() - 1, "a smaller generator exists over F_" + std::to_string(F.q()));
    for (auto d : prime_factors(F.q() - 1))
        t.check(F.pow(F.generator(), (F.q() - 1) / d) != F.one(), "generator has a proper order divisor");
    t.check(F.pow(F.generator(), F.q() - 1) == F.one(), "generator^(q-1) != 1");
    const auto elems = F.elements();
    std::set<Elem> distinct(elems.begin(), elems.end());
    t.check(elems.size() == static_cast<std::size_t>(F.q()) && distinct.size() == elems.size() && elems.front().is_zero(),
            "enumeration is not q distinct elements starting at 0");
    return t;
}

Tally matches_reference(const Field& F)
{
    Tally t;
    const auto N = naive_twin(F);
    t.check(N.modulus_irreducible(), "modulus is reducible over F_" + std::to_string(F.q()));
    for (int a = 0; a < F.q(); ++a)
        for (int b = 0; b < F.q(); ++b) {
            const Elem x{static_cast<std::uint32_t>(a)}, y{static_cast<std::uint32_t>(b)};
            std::ostringstream msg;
            msg << "F_" << F.q() << ": arithmetic disagrees with the reference at (" << a << ", " << b << ")";
            t.check(F.add(x, y).code() == N.add(x.code(), y.code()) &&
                        F.mul(x, y).code() == N.mul(x.code(), y.code()),
                    msg.str());
        }
    return t;
}

Tally linear_invariance(const Field& F, Rng& rng, int n)
{
    Tally t;
    auto pps = known_permutations(F, rng, n / 2);
    for (int i = 0; i < n; ++i) {
        const Polynomial f = i < static_cast<int>(pps.size()) ? pps[static_cast<std::size_t>(i)] : random_degree7(F, rng);
        const auto m = random_map(F, rng);
        const auto g = apply_linear(F, f, m);
        const Elem x = random_elem(F, rng);
        const Elem direct = F.add(F.mul(m.s, eval(F, f, F.add(F.mul(m.t, x), m.u))), m.v);
        std::ostringstream msg;
        msg << "F_" << F.q() << ": linear map changed the permutation property of " << format_polynomial(F, f);
        t.check(eval(F, g, x) == direct && is_pp_bruteforce(F, g) == is_pp_bruteforce(F, f), msg.str());
    }
    return t;
}

Tally canonical_laws(const Field& F, Rng& rng, int n)
{
    Tally t;
    const auto N = naive_twin(F);
    auto pps = known_permutations(F, rng, n / 4);
    for (int i = 0; i < n; ++i) {
        const Polynomial f = i < static_cast<int>(pps.size()) ? pps[static_cast<std::size_t>(i)] : random_degree7(F, rng);
        const auto s = normalize(F, f);
        const auto c = canonical(F, s);
        const auto moved = normalize(F, apply_linear(F, f, random_map(F, rng)));
        bool ok = canonical(F, c) == c && !(s < c) && canonical(F, scaled(F, s, random_nonzero(F, rng))) == c &&
                  canonical(F, moved) == c && linearly_related(F, s, c).has_value();
        if (ok && s[6].is_zero()) {
            oracle::Tuple tup;
            for (int k = 0; k < 5; ++k)
                tup[static_cast<std::size_t>(k)] = s[5 - k].code();
            const auto m = oracle::orbit_min(N, tup);
            for (int k = 0; k < 5; ++k)
                ok = ok && m[static_cast<std::size_t>(k)] == c[5 - k].code();
        }
        t.check(ok, "F_" + std::to_string(F.q()) + ": canonical form laws fail for " + show(F, s));
    }
    return t;
}

Tally relation_laws(const Field& F, Rng& rng, int n)
{
    Tally t;
    for (int i = 0; i < n; ++i) {
        const auto a = random_septic(F, rng);
        const auto b = scaled(F, a, random_nonzero(F, rng));
        const auto c = scaled(F, b, random_nonzero(F, rng));
        const auto self = linearly_related(F, a, a);
        const auto ab = linearly_related(F, a, b);
        const auto ba = linearly_related(F, b, a);
        const auto bc = linearly_related(F, b, c);
        const auto ac = linearly_related(F, a, c);
        bool ok = self && ab && ba && bc && ac && witness_ok(F, a, a, *self) && witness_ok(F, a, b, *ab) &&
                  witness_ok(F, b, a, *ba) && witness_ok(F, a, c, *ac) && witness_ok(F, a, c, F.mul(*ab, *bc));
        const auto x = random_septic(F, rng);
        ok = ok && linearly_related(F, a, x).has_value() == (canonical(F, a) == canonical(F, x));
        t.check(ok, "F_" + std::to_string(F.q()) + ": relation laws fail around " + show(F, a));
    }
    return t;
}

Tally catalog_laws(const Field& F, Rng& rng, int n)
{
    Tally t;
    const auto entries = catalog(F);
    const std::string where = "F_" + std::to_string(F.q()) + ": ";
    const auto x7 = Polynomial::monomial(F.one(), 7);
    if (F.q() % 7 == 1)
        t.check(entries.empty() && !is_pp_bruteforce(F, x7), where + "x^7 should not permute");
    if (F.q() % 7 == 6)
        t.check(is_pp_bruteforce(F, x7), where + "x^7 should permute");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        t.check(is_pp_bruteforce(F, e.polynomial) && e.key == canonical(F, normalize(F, e.polynomial)),
                where + "catalog entry " + format_polynomial(F, e.polynomial) + " is not a permutation");
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            t.check(!linearly_related(F, e.key, entries[j].key), where + "catalog entries " + show(F, e.key) +
                                                                       " and " + show(F, entries[j].key) +
                                                                       " are related");
    }
    if (entries.empty())
        return t;
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    for (int i = 0; i < n; ++i) {
        const auto& e = entries[pick(rng)];
        const auto moved = normalize(F, apply_linear(F, e.polynomial, random_map(F, rng)));
        const auto hit = is_exceptional(F, entries, moved);
        t.check(hit && hit->family == e.family && hit->key == e.key,
                where + "transformed catalog entry not recognized: " + show(F, moved));
    }
    return t;
}

Tally filter_necessity(const Field& F)
{
    Tally t;
    const std::string where = "F_" + std::to_string(F.q()) + ": ";
    const auto report = classify(F, {1, true});
    t.check(report.filter_violations == 0,
            where + std::to_string(report.filter_violations) + " permutations violate an identity filter");
    std::optional<IdentityFilter> filter;
    if (F.p() != 7 && F.q() % 7 != 1)
        filter.emplace(F);
    for (const auto& rec : report.records) {
        bool ok = is_pp_bruteforce(F, rec.coeffs.to_polynomial());
        if (filter)
            ok = ok && (*filter)(rec.coeffs);
        else if (F.p() == 7 && !rec.coeffs[5].is_zero())
            ok = ok && p7_a1_relation(F, rec.coeffs);
        t.check(ok, where + "class " + show(F, rec.coeffs) + " fails a necessary condition");
        t.cases += rec.witness_count - 1;
    }
    return t;
}

Tally filter_soundness(const Field& F, Rng& rng, int n)
{
    Tally t;
    const std::string where = "F_" + std::to_string(F.q()) + ": ";
    if (F.q() % 7 == 1)
        return t;
    std::optional<IdentityFilter> filter;
    if (F.p() != 7)
        filter.emplace(F);
    SepticPPTester is_pp(F);
    for (int i = 0; i < n; ++i) {
        auto s = random_septic(F, rng);
        bool rejected;
        if (filter) {
            // Half the samples satisfy the first identity so the second one is exercised too.
            if (i % 2 == 0 && filter->pinned_index())
                s[*filter->pinned_index()] = filter->pinned_value(s);
            rejected = !(*filter)(s);
        } else {
            if (s[5].is_zero())
                s[5] = F.one();
            s[4] = Elem{};
            rejected = !p7_a1_relation(F, s);
        }
        if (!rejected)
            continue;
        t.check(!is_pp(s), where + "filter rejected the permutation " + show(F, s));
    }
    return t;
}

Tally oracles_agree(const Field& F, const oracle::NaiveField& N, const Polynomial& f)
{
    Tally t;
    const bool h = hermite_full(F, f).passed;
    const bool b = is_pp_bruteforce(F, f);
    const bool v = is_pp_valueset(F, f);
    const bool o = oracle::is_pp(N, codes(f));
    t.check(h == b && b == v && v == o, "F_" + std::to_string(F.q()) + ": permutation tests disagree on " +
                                            format_polynomial(F, f));
    return t;
}

} // namespace props
