#include <sstream>

#include <nlohmann/json.hpp>

#include "pp7/search.hpp"

namespace pp7 {

using json = nlohmann::ordered_json;

std::string report_to_json(const ClassificationReport& report, int indent)
{
    json classes = json::array();
    for (const auto& rec : report.records) {
        json coeffs = json::array();
        for (auto a : rec.coeffs.tuple())
            coeffs.push_back(a.code());
        classes.push_back({
            {"coeffs", coeffs},
            {"exceptional", rec.is_exceptional},
            {"family", rec.family ? json(std::string(family_name(*rec.family))) : json(nullptr)},
        });
    }
    const json doc = {
        {"q", report.field.q},
        {"p", report.field.p},
        {"r", report.field.r},
        {"modulus", report.field.modulus},
        {"generator", report.field.generator},
        {"classes", classes},
        {"nonexceptional_count", report.nonexceptional_count},
        {"elapsed_ms", report.elapsed_ms},
    };
    return doc.dump(indent);
}

ClassificationReport report_from_json(const std::string& text)
{
    const auto doc = json::parse(text);
    ClassificationReport report;
    report.field.q = doc.at("q").get<int>();
    report.field.p = doc.at("p").get<int>();
    report.field.r = doc.at("r").get<int>();
    report.field.modulus = doc.at("modulus").get<std::vector<int>>();
    report.field.generator = doc.at("generator").get<std::uint32_t>();
    report.nonexceptional_count = doc.at("nonexceptional_count").get<int>();
    report.elapsed_ms = doc.at("elapsed_ms").get<double>();
    for (const auto& c : doc.at("classes")) {
        PPClassRecord rec;
        rec.q = report.field.q;
        const auto codes = c.at("coeffs").get<std::vector<std::uint32_t>>();
        if (codes.size() != 5)
            throw std::invalid_argument("class coefficients must have 5 entries");
        rec.coeffs = NormalizedSeptic::from_tuple(Elem{codes[0]}, Elem{codes[1]}, Elem{codes[2]}, Elem{codes[3]},
                                                  Elem{codes[4]});
        rec.is_exceptional = c.at("exceptional").get<bool>();
        if (!c.at("family").is_null()) {
            rec.family = parse_family(c.at("family").get<std::string>());
            if (!rec.family)
                throw std::invalid_argument("unknown exceptional family");
        }
        report.records.push_back(rec);
    }
    return report;
}

std::string report_to_csv(const ClassificationReport& report)
{
    std::ostringstream out;
    out << "q,a5,a4,a3,a2,a1,exceptional,family\n";
    for (const auto& rec : report.records) {
        out << report.field.q;
        for (auto a : rec.coeffs.tuple())
            out << ',' << a.code();
        out << ',' << (rec.is_exceptional ? "true" : "false") << ',';
        if (rec.family)
            out << family_name(*rec.family);
        out << '\n';
    }
    return out.str();
}

} // namespace pp7
