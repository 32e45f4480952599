#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pp7 {

/// An element of F_q = F_p[x]/(m(x)).
///
/// Stored as the integer encoding sum_i c_i * p^i of its power-basis
/// coordinates (c_0, ..., c_{r-1}). The encoding is the total order used for
/// every "smallest element" choice in the library, and elements of the prime
/// subfield encode as themselves.
class Elem {
public:
    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t code) : code_(code) {}

    constexpr std::uint32_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr auto operator<=>(Elem, Elem) = default;

private:
    std::uint32_t code_ = 0;
};

/// Thrown by inv(0), pow(0, n < 0) and similar.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool is_prime(std::int64_t n);

/// Splits q = p^r. Returns nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(std::int64_t q);

/// Distinct prime factors of n, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Finite field F_{p^r} with a fixed modulus and multiplicative generator.
///
/// Immutable after construction, so one instance may be shared by any number
/// of threads. Arithmetic goes through q x q lookup tables for small q and
/// through log/antilog tables plus digit-wise addition otherwise.
class Field {
public:
    /// Largest order accepted by make().
    static constexpr std::int64_t kMaxOrder = 1 << 20;
    /// Fields up to this order use full addition/multiplication tables.
    static constexpr int kTableLimit = 1024;

    /// Builds F_{p^r}.
    ///
    /// Without an explicit modulus, q in {9, 25, 49, 343} get the moduli used
    /// by the published classification tables; every other field gets the
    /// smallest monic irreducible of degree r (ordered by the encoding of its
    /// lower coefficients). The generator defaults to the smallest element of
    /// order q - 1. `modulus` lists coefficients from degree 0 up.
    static Field make(int p, int r, std::optional<std::vector<int>> modulus = std::nullopt,
                      std::optional<Elem> generator = std::nullopt);

    /// Same as make() with (p, r) taken from the prime power q.
    static Field of_order(std::int64_t q, std::optional<std::vector<int>> modulus = std::nullopt,
                          std::optional<Elem> generator = std::nullopt);

    int p() const { return p_; }
    int r() const { return r_; }
    int q() const { return q_; }
    std::span<const int> modulus() const { return modulus_; }
    Elem generator() const { return generator_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }

    /// Image of the integer n in the prime subfield.
    Elem from_int(std::int64_t n) const;
    Elem from_coeffs(std::span<const int> coeffs) const;
    std::vector<int> coeffs(Elem a) const;

    /// Throws std::invalid_argument unless code < q.
    Elem from_code(std::int64_t code) const;

    Elem add(Elem a, Elem b) const
    {
        if (!add_table_.empty())
            return Elem{add_table_[index(a, b)]};
        return add_digits(a, b);
    }

    Elem neg(Elem a) const { return Elem{neg_[a.code()]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const
    {
        if (!mul_table_.empty())
            return Elem{mul_table_[index(a, b)]};
        if (a.is_zero() || b.is_zero())
            return Elem{0};
        return Elem{exp_[log_[a.code()] + log_[b.code()]]};
    }

    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// a^n by square-and-multiply; negative n inverts first.
    Elem pow(Elem a, std::int64_t n) const;

    /// generator^k, k reduced mod q - 1.
    Elem gen_pow(std::int64_t k) const;

    /// Discrete log to the generator base, nullopt for zero.
    std::optional<int> log(Elem a) const;

    /// Every element exactly once, in encoding order (zero first).
    std::vector<Elem> elements() const;

    /// Multiplicative order of a nonzero element.
    std::int64_t order(Elem a) const;

private:
    Field() = default;

    std::size_t index(Elem a, Elem b) const
    {
        return static_cast<std::size_t>(a.code()) * static_cast<std::size_t>(q_) + b.code();
    }

    Elem add_digits(Elem a, Elem b) const;
    void build_tables();

    int p_ = 0;
    int r_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    Elem generator_;

    // exp_ has length 2(q-1) so log a + log b never needs a reduction.
    std::vector<std::uint32_t> exp_;
    std::vector<std::int32_t> log_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
};

} // namespace pp7
