#include <gtest/gtest.h>

#include "properties.hpp"
#include "pp7/equiv.hpp"
#include "pp7/notation.hpp"
#include "pp7/search.hpp"

using namespace pp7;

namespace {

std::vector<NormalizedSeptic> keys(const ClassificationReport& r)
{
    std::vector<NormalizedSeptic> out;
    for (const auto& rec : r.records)
        out.push_back(rec.coeffs);
    return out;
}

} // namespace

TEST(Classify, Examples)
{
    const auto F23 = Field::of_order(23);
    const auto r23 = classify(F23);
    EXPECT_EQ(r23.nonexceptional_count, 3);
    EXPECT_EQ(r23.records.size(), 6u);

    const auto F81 = Field::of_order(81);
    EXPECT_EQ(classify(F81, {2, false}).nonexceptional_count, 0);

    const auto F29 = Field::of_order(29);
    const auto r29 = classify(F29);
    EXPECT_TRUE(r29.records.empty());
    EXPECT_NE(r29.note.find("7 divides q - 1"), std::string::npos);
}

TEST(Classify, NoSepticPermutesWhenSevenDividesQMinusOne)
{
    const auto F = Field::of_order(29);
    SepticPPTester is_pp(F);
    long found = 0;
    for (auto a5 : F.elements())
        for (auto a4 : F.elements())
            for (auto a3 : F.elements())
                for (auto a2 : F.elements())
                    for (auto a1 : F.elements())
                        found += is_pp(NormalizedSeptic::from_tuple(a5, a4, a3, a2, a1));
    EXPECT_EQ(found, 0);

    props::Rng rng(31);
    const auto N = props::naive_twin(F);
    for (int i = 0; i < 2000; ++i)
        EXPECT_FALSE(oracle::is_pp(N, props::codes(props::random_degree7(F, rng))));
}

TEST(Classify, RejectsOrdersOutsideTheRange)
{
    for (int q : {5, 7, 8, 16, 729, 2187})
        EXPECT_THROW(classify(Field::of_order(q)), std::invalid_argument) << q;
}

TEST(Classify, EveryRecordPermutes)
{
    for (int q : {9, 11, 13, 17, 19, 23, 25, 27, 31, 49, 81, 243, 343}) {
        const auto F = Field::of_order(q);
        for (const auto& rec : classify(F).records) {
            EXPECT_TRUE(is_pp_bruteforce(F, rec.coeffs.to_polynomial())) << q;
            EXPECT_EQ(canonical(F, rec.coeffs), rec.coeffs) << q;
            EXPECT_GT(rec.witness_count, 0) << q;
        }
    }
}

TEST(Classify, DeterministicAcrossWorkerCounts)
{
    for (int q : {9, 11, 17, 25, 49, 81, 343}) {
        const auto F = Field::of_order(q);
        const auto base = classify(F, {1, false});
        for (int jobs : {4, 8}) {
            const auto other = classify(F, {jobs, false});
            EXPECT_EQ(other.records, base.records) << q << " jobs " << jobs;
            EXPECT_EQ(other.candidates, base.candidates) << q;
        }
    }
}

TEST(Golden, TableShapes)
{
    const auto& t = golden_tables();
    EXPECT_EQ(t.at(11).nonexceptional.size(), 25u);
    EXPECT_EQ(t.at(17).nonexceptional.size(), 17u);
    EXPECT_EQ(t.at(9).nonexceptional.size(), 65u);
    EXPECT_EQ(t.at(27).nonexceptional, (std::vector<std::string>{"0,0,2,0,1"}));
    std::vector<int> orders;
    for (const auto& [q, table] : t)
        orders.push_back(q);
    EXPECT_EQ(orders, props::classification_orders());
}

TEST(Golden, TwentySevenIsTheCubicTrinomial)
{
    // x^7 - x^3 + x
    const auto F = Field::of_order(27);
    const auto expected = expected_classes(F, golden_tables().at(27));
    ASSERT_EQ(expected.nonexceptional.size(), 1u);
    const auto s = NormalizedSeptic::from_tuple(F.zero(), F.zero(), F.neg(F.one()), F.zero(), F.one());
    EXPECT_EQ(*expected.nonexceptional.begin(), canonical(F, s));
}

TEST(Golden, VerifyReproducesPublishedClasses)
{
    for (int q : {9, 11, 13, 17, 19, 23, 25, 27, 31, 49, 343}) {
        const auto F = Field::of_order(q);
        const auto r = verify_paper(F, 2);
        ASSERT_TRUE(r.golden_diff);
        EXPECT_TRUE(r.golden_diff->empty()) << q << ": " << (r.golden_diff->empty() ? "" : r.golden_diff->front());
    }
    const auto F49 = Field::of_order(49);
    const auto r49 = classify(F49);
    EXPECT_EQ(r49.nonexceptional_count, 1);
    EXPECT_EQ(r49.records.size(), 10u);
    const auto F343 = Field::of_order(343);
    const auto r343 = classify(F343);
    EXPECT_EQ(r343.nonexceptional_count, 0);
    EXPECT_EQ(r343.records.size(), 9u);
}

TEST(Golden, IndependentOfFieldModel)
{
    const std::vector<std::pair<int, std::vector<int>>> models{
        {9, {1, 0, 1}}, {25, {2, 1, 1}}, {49, {3, 1, 1}}, {343, {2, 0, 0, 1}}};
    for (const auto& [q, modulus] : models) {
        const auto F = Field::of_order(q, modulus);
        const auto r = verify_paper(F);
        EXPECT_TRUE(r.golden_diff->empty()) << q;
    }
    const auto F11 = Field::of_order(11, std::nullopt, Elem{6});
    EXPECT_TRUE(verify_paper(F11).golden_diff->empty());
}

TEST(Golden, DiffReportsMismatches)
{
    const auto F = Field::of_order(13);
    auto r = classify(F);
    r.records.erase(r.records.begin() + 3);
    EXPECT_FALSE(diff_against_golden(F, r).empty());
    auto extra = classify(F);
    PPClassRecord bogus;
    bogus.q = 13;
    bogus.coeffs = NormalizedSeptic::from_tuple(Elem{0}, Elem{0}, Elem{0}, Elem{0}, Elem{1});
    extra.records.push_back(bogus);
    EXPECT_FALSE(diff_against_golden(F, extra).empty());
}

TEST(Report, JsonRoundTrip)
{
    for (int q : {11, 49}) {
        const auto F = Field::of_order(q);
        const auto r = classify(F);
        const auto back = report_from_json(report_to_json(r));
        EXPECT_EQ(back.field, r.field);
        EXPECT_EQ(keys(back), keys(r));
        EXPECT_EQ(back.nonexceptional_count, r.nonexceptional_count);
        EXPECT_DOUBLE_EQ(back.elapsed_ms, r.elapsed_ms);
        ASSERT_EQ(back.records.size(), r.records.size());
        for (std::size_t i = 0; i < r.records.size(); ++i) {
            EXPECT_EQ(back.records[i].q, r.records[i].q);
            EXPECT_EQ(back.records[i].is_exceptional, r.records[i].is_exceptional);
            EXPECT_EQ(back.records[i].family, r.records[i].family);
        }
        EXPECT_EQ(report_to_json(back), report_to_json(r));
    }
    EXPECT_THROW(report_from_json("{\"q\": 3}"), std::exception);
}

TEST(Report, Csv)
{
    const auto F = Field::of_order(23);
    const auto csv = report_to_csv(classify(F));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,a5,a4,a3,a2,a1,exceptional,family");
    EXPECT_NE(csv.find("23,1,1,0,4,9,false,\n"), std::string::npos);
    EXPECT_NE(csv.find("23,0,0,0,0,0,true,Monomial\n"), std::string::npos);
}
