#include "pp7/gf.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pp7 {

namespace {

// Moduli pinned by the published tables; coefficients from degree 0 up.
const std::map<int, std::vector<int>>& table_moduli()
{
    static const std::map<int, std::vector<int>> moduli = {
        {9, {2, 2, 1}},
        {25, {2, 4, 1}},
        {49, {3, 6, 1}},
        {343, {4, 0, 6, 1}},
    };
    return moduli;
}

int mod(std::int64_t a, int p)
{
    auto m = static_cast<int>(a % p);
    return m < 0 ? m + p : m;
}

int inv_mod(int a, int p)
{
    // p is prime, so a^(p-2) is the inverse.
    std::int64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(result);
}

using Coeffs = std::vector<int>;

void trim(Coeffs& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

// Remainder of f modulo the monic g over F_p.
Coeffs poly_rem(Coeffs f, const Coeffs& g, int p)
{
    trim(f);
    const auto dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg) {
        const int lead = f.back();
        const auto shift = f.size() - 1 - static_cast<std::size_t>(dg);
        for (int i = 0; i <= dg; ++i)
            f[shift + i] = mod(f[shift + i] - static_cast<std::int64_t>(lead) * g[i], p);
        trim(f);
    }
    return f;
}

// Brute-force irreducibility: no monic factor of degree 1..deg/2.
bool is_irreducible(const Coeffs& m, int p)
{
    const auto r = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= r / 2; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            Coeffs g(d + 1);
            auto c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_rem(m, g, p).empty())
                return false;
        }
    }
    return true;
}

Coeffs smallest_irreducible(int p, int r)
{
    std::int64_t count = 1;
    for (int i = 0; i < r; ++i)
        count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
        Coeffs m(r + 1);
        auto c = code;
        for (int i = 0; i < r; ++i) {
            m[i] = static_cast<int>(c % p);
            c /= p;
        }
        m[r] = 1;
        if (is_irreducible(m, p))
            return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

// Product of two residues modulo the monic degree-r modulus m.
Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, int p)
{
    const auto r = m.size() - 1;
    Coeffs prod(2 * r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < r; ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    }
    for (std::size_t k = prod.size() - 1; k >= r; --k) {
        const int lead = prod[k];
        if (lead != 0) {
            for (std::size_t i = 0; i < r; ++i)
                prod[k - r + i] = mod(prod[k - r + i] - static_cast<std::int64_t>(lead) * m[i], p);
        }
        prod[k] = 0;
    }
    prod.resize(r);
    return prod;
}

} // namespace

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<std::pair<int, int>> prime_power(std::int64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::int64_t p = 2;
    while (q % p != 0)
        ++p;
    int r = 0;
    while (q % p == 0) {
        q /= p;
        ++r;
    }
    if (q != 1)
        return std::nullopt;
    return std::pair{static_cast<int>(p), r};
}

std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

Field Field::of_order(std::int64_t q, std::optional<std::vector<int>> modulus, std::optional<Elem> generator)
{
    auto pr = prime_power(q);
    if (!pr)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return make(pr->first, pr->second, std::move(modulus), generator);
}

Field Field::make(int p, int r, std::optional<std::vector<int>> modulus, std::optional<Elem> generator)
{
    if (!is_prime(p))
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (r < 1)
        throw std::invalid_argument("extension degree must be positive");
    std::int64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw std::invalid_argument("field order exceeds " + std::to_string(kMaxOrder));
    }

    Field f;
    f.p_ = p;
    f.r_ = r;
    f.q_ = static_cast<int>(q);

    if (modulus) {
        auto m = *modulus;
        if (static_cast<int>(m.size()) != r + 1)
            throw std::invalid_argument("modulus must have degree " + std::to_string(r));
        for (auto& c : m)
            c = mod(c, p);
        if (m.back() != 1)
            throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(m, p))
            throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
        f.modulus_ = std::move(m);
    } else if (auto it = table_moduli().find(f.q_); it != table_moduli().end()) {
        f.modulus_ = it->second;
    } else {
        f.modulus_ = smallest_irreducible(p, r);
    }

    // Order check on digit vectors; tables are built once the generator is known.
    const auto factors = prime_factors(q - 1);
    auto digits = [&](std::int64_t code) {
        Coeffs c(r);
        for (int i = 0; i < r; ++i) {
            c[i] = static_cast<int>(code % p);
            code /= p;
        }
        return c;
    };
    auto slow_pow = [&](const Coeffs& a, std::int64_t n) {
        Coeffs result(r, 0);
        result[0] = 1;
        Coeffs base = a;
        while (n > 0) {
            if (n & 1)
                result = mulmod(result, base, f.modulus_, p);
            base = mulmod(base, base, f.modulus_, p);
            n >>= 1;
        }
        return result;
    };
    auto is_one = [&](const Coeffs& c) {
        return c[0] == 1 && std::all_of(c.begin() + 1, c.end(), [](int v) { return v == 0; });
    };
    auto primitive = [&](std::int64_t code) {
        if (code == 0)
            return false;
        const auto a = digits(code);
        if (!is_one(slow_pow(a, q - 1)))
            return false;
        return std::none_of(factors.begin(), factors.end(),
                            [&](std::int64_t l) { return is_one(slow_pow(a, (q - 1) / l)); });
    };

    if (generator) {
        if (generator->code() >= q || !primitive(generator->code()))
            throw std::invalid_argument("generator " + std::to_string(generator->code()) +
                                        " does not have order q - 1");
        f.generator_ = *generator;
    } else {
        std::int64_t code = 1;
        while (!primitive(code))
            ++code;
        f.generator_ = Elem{static_cast<std::uint32_t>(code)};
    }

    f.build_tables();
    return f;
}

void Field::build_tables()
{
    const auto q = static_cast<std::size_t>(q_);
    auto to_digits = [&](std::uint32_t code) {
        Coeffs c(r_);
        for (int i = 0; i < r_; ++i) {
            c[i] = static_cast<int>(code % p_);
            code /= p_;
        }
        return c;
    };
    auto to_code = [&](const Coeffs& c) {
        std::uint32_t code = 0;
        for (int i = r_ - 1; i >= 0; --i)
            code = code * p_ + c[i];
        return code;
    };

    exp_.assign(2 * (q - 1), 0);
    log_.assign(q, -1);
    const auto g = to_digits(generator_.code());
    Coeffs cur(r_, 0);
    cur[0] = 1;
    for (std::size_t i = 0; i < q - 1; ++i) {
        const auto code = to_code(cur);
        exp_[i] = exp_[i + q - 1] = code;
        log_[code] = static_cast<std::int32_t>(i);
        cur = mulmod(cur, g, modulus_, p_);
    }

    neg_.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        auto c = to_digits(a);
        for (auto& d : c)
            d = (p_ - d) % p_;
        neg_[a] = to_code(c);
    }

    if (q_ <= kTableLimit) {
        add_table_.assign(q * q, 0);
        mul_table_.assign(q * q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                add_table_[a * q + b] = static_cast<std::uint16_t>(add_digits(Elem{a}, Elem{b}).code());
                if (a != 0 && b != 0)
                    mul_table_[a * q + b] = static_cast<std::uint16_t>(exp_[log_[a] + log_[b]]);
            }
        }
    }
}

Elem Field::add_digits(Elem a, Elem b) const
{
    std::uint32_t x = a.code(), y = b.code(), out = 0, place = 1;
    for (int i = 0; i < r_; ++i) {
        const auto d = (x % p_ + y % p_) % p_;
        out += d * place;
        place *= p_;
        x /= p_;
        y /= p_;
    }
    return Elem{out};
}

Elem Field::from_int(std::int64_t n) const
{
    return Elem{static_cast<std::uint32_t>(mod(n, p_))};
}

Elem Field::from_code(std::int64_t code) const
{
    if (code < 0 || code >= q_)
        throw std::invalid_argument("element encoding " + std::to_string(code) + " out of range for F_" +
                                    std::to_string(q_));
    return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::from_coeffs(std::span<const int> coeffs) const
{
    if (static_cast<int>(coeffs.size()) > r_)
        throw std::invalid_argument("too many power-basis coordinates");
    std::uint32_t code = 0;
    for (auto i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        code = code * p_ + static_cast<std::uint32_t>(mod(coeffs[i], p_));
    return Elem{code};
}

std::vector<int> Field::coeffs(Elem a) const
{
    std::vector<int> c(r_);
    auto code = a.code();
    for (int i = 0; i < r_; ++i) {
        c[i] = static_cast<int>(code % p_);
        code /= p_;
    }
    return c;
}

Elem Field::inv(Elem a) const
{
    if (a.is_zero())
        throw DivisionByZero("inverse of zero");
    if (r_ == 1)
        return Elem{static_cast<std::uint32_t>(inv_mod(static_cast<int>(a.code()), p_))};
    return Elem{exp_[(q_ - 1 - log_[a.code()]) % (q_ - 1)]};
}

Elem Field::pow(Elem a, std::int64_t n) const
{
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    Elem result = one();
    while (n > 0) {
        if (n & 1)
            result = mul(result, a);
        a = mul(a, a);
        n >>= 1;
    }
    return result;
}

Elem Field::gen_pow(std::int64_t k) const
{
    const auto n = q_ - 1;
    auto i = k % n;
    if (i < 0)
        i += n;
    return Elem{exp_[static_cast<std::size_t>(i)]};
}

std::optional<int> Field::log(Elem a) const
{
    if (a.is_zero())
        return std::nullopt;
    return log_[a.code()];
}

std::vector<Elem> Field::elements() const
{
    std::vector<Elem> out(static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i)
        out[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(i)};
    return out;
}

std::int64_t Field::order(Elem a) const
{
    if (a.is_zero())
        throw DivisionByZero("zero has no multiplicative order");
    std::int64_t n = q_ - 1;
    for (auto l : prime_factors(n)) {
        while (n % l == 0 && pow(a, n / l) == one())
            n /= l;
    }
    return n;
}

} // namespace pp7
