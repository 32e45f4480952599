#include <algorithm>

#include "pp7/equiv.hpp"
#include "pp7/notation.hpp"
#include "pp7/search.hpp"

namespace pp7 {

namespace {

struct PrintedTable {
    int q;
    std::vector<std::string> nonexceptional;
};

// Non-exceptional classes exactly as printed, (a5,a4,a3,a2,a1).
const std::vector<PrintedTable>& printed_nonexceptional()
{
    static const std::vector<PrintedTable> tables = {
    {9,
     {
        "0,0,e^2,0,0", "0,1,e,1,1", "0,1,e^2,e,1", "0,1,e^2,2e,1", "0,1,e^3,1,1", "0,1,2,2,1",
        "0,1,2e^2,e^3,1", "0,1,2e^2,2e^3,1", "1,0,e,0,2e", "1,0,e^3,0,2e^3", "1,0,2e,0,e", "1,0,2e^3,0,e^3",
        "1,0,1,0,2", "1,e,e,2e^2,1", "1,e,e,1,1", "1,e,e^2,2,0", "1,e,e^2,1,0", "1,e,e^3,e^2,2e",
        "1,e,e^3,2e^2,2e", "1,e,1,e^2,e", "1,e,1,2,e", "1,e^2,0,e^2,2", "1,e^2,e,2,2e^2", "1,e^2,e^2,1,e^3",
        "1,e^2,e^3,1,e^2", "1,e^2,2,e^2,0", "1,e^2,2e^2,2,e", "1,e^3,e,e^2,2e^3", "1,e^3,e,2e^2,2e^3",
        "1,e^3,e^3,e^2,1", "1,e^3,e^3,1,1", "1,e^3,2e^2,2,0", "1,e^3,2e^2,1,0", "1,e^3,1,2,e^3",
        "1,e^3,1,2e^2,e^3", "e,0,0,0,0", "e,0,e,1,2e^2", "e,0,e,e^2,2e^2", "e,0,e^2,0,2e^3", "e,0,2e^3,e,2",
        "e,0,2e^3,e^3,2", "e,1,0,2,1", "e,1,e^2,2e^2,e", "e,1,e^3,e^3,2", "e,1,e^3,2e^3,2", "e,1,2,e,e^2",
        "e,1,2,e+2,e^2", "e,1,2e^2,2e^2,2e^2", "e,e,0,e^3,e^2", "e,e,e^2,e,2e", "e,e,2e,2,2e^2",
        "e,e,2e,1,2e^2", "e,e,2e^2,e,2", "e,e,1,e^2,1", "e,e,1,2,1", "e,e^2,e,e^2,e^3", "e,e^2,e^3,2,0",
        "e,e^2,2,2e^2,2e^3", "e,e^2,2e,e^3,e", "e,e^2,2e,2e,e", "e,e^3,e^3,e^2,2e", "e,e^3,e^3,2,2e",
        "e,e^3,2e,2e^3,0", "e,e^3,2e^3,e,e^3", "e,e^3,1,2e,2e^3",
     }},
    {11,
     {
        "0,0,0,5,0", "0,0,0,8,0", "0,1,0,0,4", "0,1,0,8,5", "0,1,0,9,5", "1,0,5,0,2", "1,0,5,0,7",
        "1,0,5,8,6", "1,1,5,2,5", "1,2,5,9,8", "1,4,5,8,0", "1,8,5,8,0", "1,5,5,1,5", "2,0,9,0,8",
        "2,0,9,0,9", "2,0,9,4,4", "2,1,9,5,3", "2,2,9,5,8", "2,4,9,8,3", "2,8,9,5,2", "2,8,9,7,8",
        "2,8,9,8,1", "2,5,9,5,2", "2,5,9,6,1", "2,5,9,8,3",
     }},
    {13,
     {
        "0,0,0,0,2", "0,0,0,0,6", "0,0,2,0,8", "0,0,4,0,4", "0,0,8,0,3", "0,1,0,0,2", "0,1,1,10,5",
        "0,1,2,1,0", "0,1,2,3,9", "0,1,8,7,11", "0,2,1,0,8", "0,4,0,0,6", "0,4,1,7,1", "0,4,4,3,3",
     }},
    {17,
     {
        "0,1,10,0,16", "1,0,6,0,11", "1,0,7,0,0", "1,0,13,0,7", "1,0,13,0,14", "1,0,14,0,3", "1,3,13,11,10",
        "1,10,3,14,11", "3,0,7,0,4", "3,0,10,0,14", "3,0,12,0,0", "3,0,14,0,8", "3,0,15,0,2", "3,9,11,14,10",
        "3,9,12,14,5", "3,9,15,14,12", "3,15,10,12,4",
     }},
    {19,
     {
        "0,0,0,0,16", "1,0,3,14,11", "1,0,5,0,4", "1,0,7,0,11", "1,0,11,0,16", "1,0,18,9,4", "2,0,14,0,5",
        "2,0,16,0,9", "2,0,17,0,5",
     }},
    {23,
     {
        "1,1,0,4,9", "1,5,11,5,9", "1,2,6,19,21",
     }},
    {25,
     {
        "0,0,0,0,e", "0,0,0,0,e^5", "e,0,e^2,0,0",
     }},
    {31,
     {
        "1,0,16,0,2", "1,17,25,25,29", "3,1,14,19,10",
     }},
    {27, {"0,0,2,0,1"}},
    {49, {"e,0,e^18,0,e^35"}},
    };
    return tables;
}

const std::map<int, std::vector<int>>& printed_moduli()
{
    static const std::map<int, std::vector<int>> moduli = {
        {9, {2, 2, 1}},
        {25, {2, 4, 1}},
        {49, {3, 6, 1}},
        {343, {4, 0, 6, 1}},
    };
    return moduli;
}

// In characteristic 7 the exceptional classes are listed explicitly.
const std::map<int, std::vector<std::string>>& printed_exceptional()
{
    static const std::map<int, std::vector<std::string>> lists = {
        {49,
         {"0,0,0,0,0", "0,0,0,0,e", "0,0,0,0,e^2", "0,0,0,0,e^3", "0,0,0,0,e^4", "0,0,0,0,e^5", "0,1,0,0,2",
          "0,e^2,0,0,2e^4", "e,0,5e^2,0,6e^3"}},
        {343,
         {"0,0,0,0,0", "0,0,0,0,1", "0,0,0,0,e", "0,0,0,0,e^2", "0,0,0,0,e^4", "0,0,0,0,e^5", "0,e,0,0,2e^2",
          "0,e^2,0,0,2e^4", "e,0,5e^2,0,6e^3"}},
    };
    return lists;
}

std::map<int, GoldenTable> build_tables()
{
    std::map<int, GoldenTable> out;
    for (int q = 8; q <= 409; ++q) {
        auto pr = prime_power(q);
        if (!pr || pr->first == 2)
            continue;
        GoldenTable t;
        t.q = q;
        if (auto it = printed_moduli().find(q); it != printed_moduli().end())
            t.modulus = it->second;
        if (auto it = printed_exceptional().find(q); it != printed_exceptional().end())
            t.exceptional = it->second;
        out.emplace(q, std::move(t));
    }
    for (const auto& printed : printed_nonexceptional())
        out.at(printed.q).nonexceptional = printed.nonexceptional;
    return out;
}

// The element the printed "e" denotes inside F.
Elem printed_generator(const Field& F, const GoldenTable& table)
{
    if (table.modulus.empty())
        return F.generator();
    const auto m = F.modulus();
    if (std::equal(m.begin(), m.end(), table.modulus.begin(), table.modulus.end()))
        return Elem{static_cast<std::uint32_t>(F.p())}; // the class of x
    std::vector<Elem> coeffs;
    for (int c : table.modulus)
        coeffs.push_back(F.from_int(c));
    const Polynomial mod(std::move(coeffs));
    for (auto a : F.elements())
        if (eval(F, mod, a).is_zero())
            return a;
    throw std::invalid_argument("table modulus has no root in this field");
}

NormalizedSeptic parse_tuple(const Field& F, const std::string& text, Elem e)
{
    const auto elems = parse_element_list(F, text, e);
    if (elems.size() != 5)
        throw ParseError("golden tuple '" + text + "' does not have 5 entries");
    return NormalizedSeptic::from_tuple(elems[0], elems[1], elems[2], elems[3], elems[4]);
}

} // namespace

const std::map<int, GoldenTable>& golden_tables()
{
    static const std::map<int, GoldenTable> tables = build_tables();
    return tables;
}

ExpectedClasses expected_classes(const Field& F, const GoldenTable& table)
{
    if (table.q != F.q())
        throw std::invalid_argument("golden table is for a different field order");
    const Elem e = printed_generator(F, table);
    ExpectedClasses out;
    for (const auto& t : table.nonexceptional)
        out.nonexceptional.insert(canonical(F, parse_tuple(F, t, e)));
    if (table.exceptional) {
        for (const auto& t : *table.exceptional)
            out.exceptional.insert(canonical(F, parse_tuple(F, t, e)));
    } else {
        for (const auto& entry : catalog(F))
            out.exceptional.insert(entry.key);
    }
    return out;
}

std::vector<std::string> diff_against_golden(const Field& F, const ClassificationReport& report)
{
    const auto& tables = golden_tables();
    auto it = tables.find(F.q());
    if (it == tables.end())
        return {"no golden table for q = " + std::to_string(F.q())};
    const auto expected = expected_classes(F, it->second);

    std::set<NormalizedSeptic> found_non, found_exc;
    for (const auto& rec : report.records)
        (rec.is_exceptional ? found_exc : found_non).insert(rec.coeffs);

    std::vector<std::string> diff;
    auto compare = [&](const std::set<NormalizedSeptic>& want, const std::set<NormalizedSeptic>& got,
                       const std::string& kind) {
        for (const auto& s : want)
            if (!got.contains(s))
                diff.push_back("missing " + kind + " class " + format_tuple(F, s));
        for (const auto& s : got)
            if (!want.contains(s))
                diff.push_back("unexpected " + kind + " class " + format_tuple(F, s));
    };
    compare(expected.nonexceptional, found_non, "non-exceptional");
    compare(expected.exceptional, found_exc, "exceptional");
    return diff;
}

} // namespace pp7
