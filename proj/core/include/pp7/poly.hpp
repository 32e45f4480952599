#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pp7/gf.hpp"

namespace pp7 {

/// Dense polynomial over F_q; coefficient i belongs to x^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Elem> coeffs);

    static Polynomial constant(Elem c);
    static Polynomial monomial(Elem c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Zero for i beyond the degree.
    Elem coeff(int i) const
    {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : Elem{};
    }

    std::span<const Elem> coeffs() const { return coeffs_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Elem> coeffs_;
};

Elem coeff(const Polynomial& f, int i);

/// Horner evaluation.
Elem eval(const Field& F, const Polynomial& f, Elem x);

Polynomial add(const Field& F, const Polynomial& f, const Polynomial& g);
Polynomial scale(const Field& F, const Polynomial& f, Elem c);
Polynomial mul(const Field& F, const Polynomial& f, const Polynomial& g);

/// f^k by repeated squaring; coefficients are exact (no reduction by x^q - x).
Polynomial pow_poly(const Field& F, const Polynomial& f, int k);

/// f(g(x)).
Polynomial compose(const Field& F, const Polynomial& f, const Polynomial& g);

/// Number of leading elements of Field::elements() whose images must be
/// pairwise distinct for a degree-d polynomial to be a permutation:
/// 1 + floor(q - (q - 1) / d).
int wan_prefix_length(int q, int degree);

/// Permutation test via the value set of a prefix of F_q.
/// Requires f nonzero with degree >= 1.
bool is_pp_valueset(const Field& F, const Polynomial& f);

/// Evaluates f at every element and checks bijectivity.
bool is_pp_bruteforce(const Field& F, const Polynomial& f);

/// x^7 + sum a_i x^i with a_0 = 0.
///
/// Outside characteristic 7 the normalized form also has a_6 = 0. In
/// characteristic 7 the x^6 coefficient cannot be removed by a shift, so it is
/// kept; it vanishes for every permutation polynomial.
class NormalizedSeptic {
public:
    NormalizedSeptic() = default;

    /// Builds from the display order (a5, a4, a3, a2, a1).
    static NormalizedSeptic from_tuple(Elem a5, Elem a4, Elem a3, Elem a2, Elem a1);
    static NormalizedSeptic from_tuple(const std::array<Elem, 5>& t);

    /// Requires degree 7, monic, zero constant term.
    static NormalizedSeptic from_polynomial(const Polynomial& f);

    Elem operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
    Elem& operator[](int i) { return a_[static_cast<std::size_t>(i)]; }

    /// (a5, a4, a3, a2, a1).
    std::array<Elem, 5> tuple() const { return {a_[5], a_[4], a_[3], a_[2], a_[1]}; }

    /// Largest i in 1..6 with a_i != 0, or 0 for x^7 itself.
    int top_index() const;

    Polynomial to_polynomial() const;

    friend bool operator==(const NormalizedSeptic&, const NormalizedSeptic&) = default;

    /// Lexicographic on encodings of (a6, a5, a4, a3, a2, a1).
    friend bool operator<(const NormalizedSeptic& x, const NormalizedSeptic& y)
    {
        for (int i = 6; i >= 1; --i) {
            if (x[i] != y[i])
                return x[i] < y[i];
        }
        return false;
    }

private:
    std::array<Elem, 7> a_{};
};

/// Reusable value-set tester for septics; owns per-thread scratch, so one
/// instance must not be shared between threads.
class SepticPPTester {
public:
    explicit SepticPPTester(const Field& F);

    /// Same answer as is_pp_valueset(F, s.to_polynomial()).
    bool operator()(const NormalizedSeptic& s);

private:
    const Field* field_;
    std::size_t prefix_;
    // powers_[i * prefix_ + j] = x_j^i for the first prefix_ elements.
    std::vector<Elem> powers_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t generation_ = 0;
};

} // namespace pp7
