#include "pp7/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pp7 {

Polynomial::Polynomial(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(Elem c)
{
    return Polynomial(std::vector<Elem>{c});
}

Polynomial Polynomial::monomial(Elem c, int degree)
{
    if (degree < 0)
        throw std::invalid_argument("negative degree");
    std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

Elem coeff(const Polynomial& f, int i)
{
    if (i < 0)
        throw std::invalid_argument("negative coefficient index");
    return f.coeff(i);
}

Elem eval(const Field& F, const Polynomial& f, Elem x)
{
    Elem acc;
    const auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = F.add(F.mul(acc, x), *it);
    return acc;
}

Polynomial add(const Field& F, const Polynomial& f, const Polynomial& g)
{
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = F.add(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
    return Polynomial(std::move(out));
}

Polynomial scale(const Field& F, const Polynomial& f, Elem c)
{
    std::vector<Elem> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& a : out)
        a = F.mul(a, c);
    return Polynomial(std::move(out));
}

Polynomial mul(const Field& F, const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<Elem> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return Polynomial(std::move(out));
}

Polynomial pow_poly(const Field& F, const Polynomial& f, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative exponent");
    Polynomial result = Polynomial::constant(F.one());
    Polynomial base = f;
    while (k > 0) {
        if (k & 1)
            result = mul(F, result, base);
        k >>= 1;
        if (k > 0)
            base = mul(F, base, base);
    }
    return result;
}

Polynomial compose(const Field& F, const Polynomial& f, const Polynomial& g)
{
    Polynomial acc;
    const auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = add(F, mul(F, acc, g), Polynomial::constant(*it));
    return acc;
}

int wan_prefix_length(int q, int degree)
{
    if (degree < 1)
        throw std::invalid_argument("degree must be at least 1");
    // floor(q - (q-1)/d) = q - ceil((q-1)/d)
    const int ceil_div = (q - 1 + degree - 1) / degree;
    return 1 + q - ceil_div;
}

bool is_pp_valueset(const Field& F, const Polynomial& f)
{
    if (f.degree() < 1)
        throw std::invalid_argument("value-set test needs a nonconstant polynomial");
    const int n = wan_prefix_length(F.q(), f.degree());
    std::vector<char> seen(static_cast<std::size_t>(F.q()), 0);
    for (int i = 0; i < n; ++i) {
        const auto v = eval(F, f, Elem{static_cast<std::uint32_t>(i)});
        if (seen[v.code()])
            return false;
        seen[v.code()] = 1;
    }
    return true;
}

bool is_pp_bruteforce(const Field& F, const Polynomial& f)
{
    std::vector<char> seen(static_cast<std::size_t>(F.q()), 0);
    for (auto x : F.elements()) {
        const auto v = eval(F, f, x);
        if (seen[v.code()])
            return false;
        seen[v.code()] = 1;
    }
    return true;
}

NormalizedSeptic NormalizedSeptic::from_tuple(Elem a5, Elem a4, Elem a3, Elem a2, Elem a1)
{
    NormalizedSeptic s;
    s[5] = a5;
    s[4] = a4;
    s[3] = a3;
    s[2] = a2;
    s[1] = a1;
    return s;
}

NormalizedSeptic NormalizedSeptic::from_tuple(const std::array<Elem, 5>& t)
{
    return from_tuple(t[0], t[1], t[2], t[3], t[4]);
}

NormalizedSeptic NormalizedSeptic::from_polynomial(const Polynomial& f)
{
    if (f.degree() != 7 || f.coeff(7) != Elem{1} || !f.coeff(0).is_zero())
        throw std::invalid_argument("expected a monic septic with zero constant term");
    NormalizedSeptic s;
    for (int i = 1; i <= 6; ++i)
        s[i] = f.coeff(i);
    return s;
}

int NormalizedSeptic::top_index() const
{
    for (int i = 6; i >= 1; --i)
        if (!a_[static_cast<std::size_t>(i)].is_zero())
            return i;
    return 0;
}

Polynomial NormalizedSeptic::to_polynomial() const
{
    std::vector<Elem> c(a_.begin(), a_.end());
    c.push_back(Elem{1});
    c[0] = Elem{};
    return Polynomial(std::move(c));
}

SepticPPTester::SepticPPTester(const Field& F)
    : field_(&F), prefix_(static_cast<std::size_t>(wan_prefix_length(F.q(), 7))),
      powers_(8 * prefix_), stamp_(static_cast<std::size_t>(F.q()), 0)
{
    for (std::size_t j = 0; j < prefix_; ++j) {
        const Elem x{static_cast<std::uint32_t>(j)};
        Elem acc = F.one();
        for (std::size_t i = 0; i < 8; ++i) {
            powers_[i * prefix_ + j] = acc;
            acc = F.mul(acc, x);
        }
    }
}

bool SepticPPTester::operator()(const NormalizedSeptic& s)
{
    const Field& F = *field_;
    if (++generation_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        generation_ = 1;
    }
    // Only the nonzero terms take part in the hot loop.
    std::array<std::size_t, 6> idx{};
    std::array<Elem, 6> cf{};
    std::size_t terms = 0;
    for (int i = 1; i <= 6; ++i) {
        if (!s[i].is_zero()) {
            idx[terms] = static_cast<std::size_t>(i) * prefix_;
            cf[terms] = s[i];
            ++terms;
        }
    }
    const Elem* x7 = powers_.data() + 7 * prefix_;
    for (std::size_t j = 0; j < prefix_; ++j) {
        Elem v = x7[j];
        for (std::size_t t = 0; t < terms; ++t)
            v = F.add(v, F.mul(cf[t], powers_[idx[t] + j]));
        auto& st = stamp_[v.code()];
        if (st == generation_)
            return false;
        st = generation_;
    }
    return true;
}

} // namespace pp7
