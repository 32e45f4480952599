#include <gtest/gtest.h>

#include "properties.hpp"
#include "pp7/gf.hpp"

using namespace pp7;

namespace {

Elem E(std::uint32_t c)
{
    return Elem{c};
}

} // namespace

TEST(Field, DefaultModulusForTwentyFive)
{
    const auto F = Field::make(5, 2);
    EXPECT_EQ(std::vector<int>(F.modulus().begin(), F.modulus().end()), (std::vector<int>{2, 4, 1}));
    const Elem e = F.generator();
    EXPECT_EQ(e, E(5));
    // e^2 = e + 3
    EXPECT_EQ(F.mul(e, e), F.add(e, F.from_int(3)));
}

TEST(Field, NineSquaresToEPlusOne)
{
    const auto F = Field::of_order(9);
    const Elem e = F.generator();
    EXPECT_EQ(F.mul(e, e), F.add(e, F.one()));
    EXPECT_EQ(F.pow(e, 4), F.from_int(2));
    EXPECT_EQ(F.pow(e, 0), F.one());
}

TEST(Field, FortyNineGeneratorOrder)
{
    const auto F = Field::of_order(49);
    const Elem e = F.generator();
    EXPECT_EQ(F.mul(e, e), F.add(e, F.from_int(4)));
    EXPECT_EQ(F.pow(e, 48), F.one());
    EXPECT_EQ(F.order(e), 48);
}

TEST(Field, DefaultModuliOfPrintedFields)
{
    const auto F9 = Field::of_order(9);
    EXPECT_EQ(std::vector<int>(F9.modulus().begin(), F9.modulus().end()), (std::vector<int>{2, 2, 1}));
    const auto F49 = Field::of_order(49);
    EXPECT_EQ(std::vector<int>(F49.modulus().begin(), F49.modulus().end()), (std::vector<int>{3, 6, 1}));
    const auto F343 = Field::of_order(343);
    EXPECT_EQ(std::vector<int>(F343.modulus().begin(), F343.modulus().end()), (std::vector<int>{4, 0, 6, 1}));
}

TEST(Field, PrimeFieldElevenHasGeneratorTwo)
{
    const auto F = Field::of_order(11);
    EXPECT_EQ(F.generator(), E(2));
    EXPECT_EQ(F.inv(E(7)), E(8));
    EXPECT_EQ(F.mul(E(7), E(8)), F.one());
}

TEST(Field, ModulusValidation)
{
    EXPECT_NO_THROW(Field::make(3, 2, std::vector<int>{1, 0, 1}));
    EXPECT_THROW(Field::make(3, 2, std::vector<int>{2, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Field::make(3, 2, std::vector<int>{1, 0, 2}), std::invalid_argument);
    EXPECT_THROW(Field::of_order(15), std::invalid_argument);
}

TEST(Field, ExplicitGeneratorMustBePrimitive)
{
    EXPECT_NO_THROW(Field::of_order(11, std::nullopt, E(6)));
    EXPECT_THROW(Field::of_order(11, std::nullopt, E(3)), std::invalid_argument);
}

TEST(Field, EnumerationOrder)
{
    const auto F3 = Field::of_order(3);
    EXPECT_EQ(F3.elements(), (std::vector<Elem>{E(0), E(1), E(2)}));
    const auto F9 = Field::of_order(9);
    const auto all = F9.elements();
    ASSERT_EQ(all.size(), 9u);
    EXPECT_EQ(all.front(), E(0));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Field, InverseOfZeroThrows)
{
    const auto F = Field::of_order(13);
    EXPECT_THROW(F.inv(F.zero()), DivisionByZero);
    EXPECT_THROW(F.pow(F.zero(), -1), DivisionByZero);
    EXPECT_EQ(F.pow(E(5), -1), F.inv(E(5)));
}

TEST(Field, LogInvertsGeneratorPowers)
{
    const auto F = Field::of_order(125);
    for (int k = 0; k < F.q() - 1; ++k)
        EXPECT_EQ(F.log(F.gen_pow(k)), k);
    EXPECT_FALSE(F.log(F.zero()));
}

TEST(Field, LargeFieldWithoutTables)
{
    // Above the table limit arithmetic goes through logarithms.
    const auto F = Field::of_order(2187);
    props::Rng rng(7);
    const auto t = props::field_axioms(F, rng, 2000);
    EXPECT_TRUE(t.ok()) << t.first_failure;
    EXPECT_TRUE(props::frobenius(F, rng, 1000).ok());
}

TEST(FieldProperties, MatchesReferenceArithmetic)
{
    for (int q : {9, 11, 25, 27, 49, 81, 121, 125, 243, 343, 409}) {
        const auto t = props::matches_reference(Field::of_order(q));
        EXPECT_TRUE(t.ok()) << t.first_failure;
    }
}

TEST(FieldProperties, AxiomsFrobeniusAndGenerator)
{
    props::Rng rng(1);
    for (int q : props::classification_orders()) {
        const auto F = Field::of_order(q);
        const auto a = props::field_axioms(F, rng, 1000);
        const auto f = props::frobenius(F, rng, 1000);
        const auto g = props::generator_order(F);
        EXPECT_TRUE(a.ok()) << a.first_failure;
        EXPECT_TRUE(f.ok()) << f.first_failure;
        EXPECT_TRUE(g.ok()) << g.first_failure;
    }
}

TEST(PrimePower, Splits)
{
    EXPECT_EQ(prime_power(343), (std::pair<int, int>{7, 3}));
    EXPECT_EQ(prime_power(2), (std::pair<int, int>{2, 1}));
    EXPECT_FALSE(prime_power(1));
    EXPECT_FALSE(prime_power(45));
    EXPECT_EQ(prime_factors(408), (std::vector<std::int64_t>{2, 3, 17}));
}
