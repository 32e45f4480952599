#include "cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

#include "pp7/equiv.hpp"
#include "pp7/exceptional.hpp"
#include "pp7/hermite.hpp"
#include "pp7/notation.hpp"
#include "pp7/search.hpp"

namespace pp7::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void add_field_options(CLI::App& sub, CliConfig& c)
{
    sub.add_option("--q", c.q, "Field order, an odd prime power")->required();
    sub.add_option("--modulus", c.modulus, "Monic modulus coefficients, constant first")->delimiter(',');
    sub.add_option("--generator", c.generator, "Multiplicative generator as an integer encoding");
}

void add_format_options(CLI::App& sub, CliConfig& c)
{
    sub.add_option_function<std::string>(
           "--format",
           [&c](std::string name) {
               for (auto& ch : name)
                   ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
               c.format = name == "json" ? Format::Json : name == "csv" ? Format::Csv : Format::Text;
           },
           "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case))
        ->option_text("text|json|csv");
    sub.add_option("--output,-o", c.output, "Write output to this file");
}

void add_poly_options(CLI::App& sub, CliConfig& c)
{
    sub.add_option("--coeffs", c.coeffs, "Coefficients from degree 0 upward, e.g. 0,2,0,0,0,0,0,1");
    sub.add_option("--septic", c.septic, "Normalized septic x^7 + a5 x^5 + ... + a1 x given as a5,a4,a3,a2,a1");
}

Field make_field(const CliConfig& c)
{
    if (!prime_power(c.q))
        throw UsageError(fmt::format("q = {} is not a prime power", c.q));
    std::optional<Elem> gen;
    if (c.generator)
        gen = Elem{*c.generator};
    try {
        return Field::of_order(c.q, c.modulus, gen);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

NormalizedSeptic parse_septic(const Field& F, std::string_view text)
{
    const auto v = parse_element_list(F, text);
    if (v.size() != 5)
        throw ParseError(fmt::format("expected 5 coefficients a5,a4,a3,a2,a1, got {}", v.size()));
    return NormalizedSeptic::from_tuple(v[0], v[1], v[2], v[3], v[4]);
}

Polynomial input_polynomial(const Field& F, const std::optional<std::string>& coeffs,
                            const std::optional<std::string>& septic, std::string_view what)
{
    if (coeffs && septic)
        throw UsageError(fmt::format("give either --{0}coeffs or --{0}septic, not both", what));
    if (coeffs)
        return parse_coeffs(F, *coeffs);
    if (septic)
        return parse_septic(F, *septic).to_polynomial();
    throw UsageError(fmt::format("missing --{0}coeffs or --{0}septic", what));
}

NormalizedSeptic input_septic(const Field& F, const std::optional<std::string>& coeffs,
                              const std::optional<std::string>& septic, std::string_view what)
{
    if (septic && !coeffs)
        return parse_septic(F, *septic);
    const auto f = input_polynomial(F, coeffs, septic, what);
    if (f.degree() != 7)
        throw UsageError(fmt::format("expected a degree-7 polynomial, got degree {}", f.degree()));
    return normalize(F, f);
}

json codes(const NormalizedSeptic& s)
{
    json out = json::array();
    for (auto a : s.tuple())
        out.push_back(a.code());
    return out;
}

json codes(const Polynomial& f)
{
    json out = json::array();
    for (auto a : f.coeffs())
        out.push_back(a.code());
    return out;
}

std::string field_line(const Field& F)
{
    if (F.r() == 1)
        return fmt::format("F_{} (prime field), generator e = {}", F.q(), F.generator().code());
    std::vector<Elem> m;
    for (int c : F.modulus())
        m.push_back(Elem{static_cast<std::uint32_t>(c)});
    return fmt::format("F_{} (p = {}, r = {}), modulus {}, generator e = {}", F.q(), F.p(), F.r(),
                       format_polynomial(Field::of_order(F.p()), Polynomial(m)), F.generator().code());
}

std::string bool_word(bool b)
{
    return b ? "true" : "false";
}

int cmd_classify(const CliConfig& c, const Field& F, std::ostream& out)
{
    const auto report = classify(F, {c.jobs, c.audit});
    switch (c.format) {
    case Format::Json:
        out << report_to_json(report) << '\n';
        break;
    case Format::Csv:
        out << report_to_csv(report);
        break;
    case Format::Text:
        fmt::print(out, "{}\n", field_line(F));
        if (!report.note.empty())
            fmt::print(out, "{}\n", report.note);
        for (const auto& rec : report.records) {
            fmt::print(out, "{:<40} {}\n", format_tuple(F, rec.coeffs),
                       rec.family ? fmt::format("exceptional ({})", family_name(*rec.family)) : "");
        }
        fmt::print(out, "{} classes, {} non-exceptional, {:.1f} ms\n", report.records.size(),
                   report.nonexceptional_count, report.elapsed_ms);
        if (c.audit)
            fmt::print(out, "{} candidates, {} filter violations\n", report.candidates, report.filter_violations);
        break;
    }
    return c.audit && report.filter_violations > 0 ? kNegative : kOk;
}

int cmd_is_pp(const CliConfig& c, const Field& F, std::ostream& out)
{
    const auto f = input_polynomial(F, c.coeffs, c.septic, "");
    if (f.degree() < 1)
        throw UsageError("polynomial must be nonconstant");
    const bool pp = is_pp_bruteforce(F, f);
    switch (c.format) {
    case Format::Json:
        out << json{{"q", F.q()}, {"coeffs", codes(f)}, {"permutation", pp}}.dump(2) << '\n';
        break;
    case Format::Csv:
        fmt::print(out, "q,permutation\n{},{}\n", F.q(), bool_word(pp));
        break;
    case Format::Text:
        fmt::print(out, "{}\n", bool_word(pp));
        break;
    }
    return pp ? kOk : kNegative;
}

int cmd_hermite(const CliConfig& c, const Field& F, std::ostream& out)
{
    const auto f = input_polynomial(F, c.coeffs, c.septic, "");
    const auto rep = hermite_full(F, f);
    switch (c.format) {
    case Format::Json:
        out << json{{"q", F.q()},
                    {"coeffs", codes(f)},
                    {"passed", rep.passed},
                    {"failing_k", rep.failing_k ? json(*rep.failing_k) : json(nullptr)},
                    {"cond1_sum", rep.cond1_sum ? json(rep.cond1_sum->code()) : json(nullptr)}}
                   .dump(2)
            << '\n';
        break;
    case Format::Csv:
        fmt::print(out, "q,passed,failing_k\n{},{},{}\n", F.q(), bool_word(rep.passed),
                   rep.failing_k ? std::to_string(*rep.failing_k) : "");
        break;
    case Format::Text:
        if (rep.passed)
            fmt::print(out, "passed\n");
        else if (rep.failing_k)
            fmt::print(out, "failed at k = {}\n", *rep.failing_k);
        else
            fmt::print(out, "failed: f has more than one root\n");
        break;
    }
    return rep.passed ? kOk : kNegative;
}

int cmd_exceptional(const CliConfig& c, const Field& F, std::ostream& out)
{
    const auto entries = catalog(F);
    if (c.coeffs || c.septic) {
        const auto s = input_septic(F, c.coeffs, c.septic, "");
        const auto hit = is_exceptional(F, entries, s);
        switch (c.format) {
        case Format::Json:
            out << json{{"q", F.q()},
                        {"coeffs", codes(s)},
                        {"exceptional", hit.has_value()},
                        {"family", hit ? json(std::string(family_name(hit->family))) : json(nullptr)}}
                       .dump(2)
                << '\n';
            break;
        case Format::Csv:
            fmt::print(out, "q,exceptional,family\n{},{},{}\n", F.q(), bool_word(hit.has_value()),
                       hit ? family_name(hit->family) : "");
            break;
        case Format::Text:
            if (hit)
                fmt::print(out, "exceptional ({})\n", family_name(hit->family));
            else
                fmt::print(out, "not exceptional\n");
            break;
        }
        return hit ? kOk : kNegative;
    }

    switch (c.format) {
    case Format::Json: {
        json list = json::array();
        for (const auto& e : entries) {
            list.push_back({{"family", std::string(family_name(e.family))},
                            {"parameter", e.parameter.code()},
                            {"s", e.s ? json(*e.s) : json(nullptr)},
                            {"polynomial", codes(e.polynomial)},
                            {"coeffs", codes(e.key)}});
        }
        out << json{{"q", F.q()}, {"entries", list}}.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "q,family,parameter,s,a5,a4,a3,a2,a1\n";
        for (const auto& e : entries) {
            fmt::print(out, "{},{},{},{}", F.q(), family_name(e.family), e.parameter.code(),
                       e.s ? std::to_string(*e.s) : "");
            for (auto a : e.key.tuple())
                fmt::print(out, ",{}", a.code());
            out << '\n';
        }
        break;
    case Format::Text:
        fmt::print(out, "{}\n", field_line(F));
        for (const auto& e : entries)
            fmt::print(out, "{:<14} {:<40} {}\n", family_name(e.family), format_tuple(F, e.key),
                       format_polynomial(F, e.polynomial));
        fmt::print(out, "{} exceptional classes\n", entries.size());
        break;
    }
    return kOk;
}

int cmd_canonical(const CliConfig& c, const Field& F, std::ostream& out)
{
    const auto s = input_septic(F, c.coeffs, c.septic, "");
    const auto key = canonical(F, s);
    switch (c.format) {
    case Format::Json:
        out << json{{"q", F.q()}, {"input", codes(s)}, {"canonical", codes(key)}}.dump(2) << '\n';
        break;
    case Format::Csv:
        out << "q,a5,a4,a3,a2,a1\n" << F.q();
        for (auto a : key.tuple())
            fmt::print(out, ",{}", a.code());
        out << '\n';
        break;
    case Format::Text:
        fmt::print(out, "{}\n", format_tuple(F, key));
        break;
    }
    return kOk;
}

int cmd_related(const CliConfig& c, const Field& F, std::ostream& out)
{
    const auto a = input_septic(F, c.coeffs, c.septic, "");
    const auto b = input_septic(F, c.other_coeffs, c.other_septic, "other-");
    const auto t = linearly_related(F, a, b);
    switch (c.format) {
    case Format::Json:
        out << json{{"q", F.q()},
                    {"first", codes(a)},
                    {"second", codes(b)},
                    {"related", t.has_value()},
                    {"t", t ? json(t->code()) : json(nullptr)}}
                   .dump(2)
            << '\n';
        break;
    case Format::Csv:
        fmt::print(out, "q,related,t\n{},{},{}\n", F.q(), bool_word(t.has_value()),
                   t ? std::to_string(t->code()) : "");
        break;
    case Format::Text:
        if (t)
            fmt::print(out, "related, t = {}\n", format_element(F, *t));
        else
            fmt::print(out, "not related\n");
        break;
    }
    return t ? kOk : kNegative;
}

int cmd_verify(const CliConfig& c, const Field& F, std::ostream& out)
{
    const auto report = verify_paper(F, c.jobs);
    const auto& diff = *report.golden_diff;
    switch (c.format) {
    case Format::Json:
        out << json{{"q", F.q()},
                    {"classes", report.records.size()},
                    {"nonexceptional_count", report.nonexceptional_count},
                    {"diff", diff},
                    {"elapsed_ms", report.elapsed_ms}}
                   .dump(2)
            << '\n';
        break;
    case Format::Csv:
        out << "q,mismatch\n";
        for (const auto& d : diff)
            fmt::print(out, "{},\"{}\"\n", F.q(), d);
        break;
    case Format::Text:
        fmt::print(out, "q = {}: {} classes, {} non-exceptional\n", F.q(), report.records.size(),
                   report.nonexceptional_count);
        for (const auto& d : diff)
            fmt::print(out, "  {}\n", d);
        fmt::print(out, "{}\n", diff.empty() ? "matches the published table" : "MISMATCH");
        break;
    }
    return diff.empty() ? kOk : kNegative;
}

int cmd_list_fields(const CliConfig& c, std::ostream& out)
{
    const auto& tables = golden_tables();
    switch (c.format) {
    case Format::Json: {
        json list = json::array();
        for (const auto& [q, t] : tables) {
            const auto [p, r] = *prime_power(q);
            list.push_back({{"q", q}, {"p", p}, {"r", r}, {"nonexceptional_count", t.nonexceptional.size()}});
        }
        out << list.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "q,p,r,q_mod_7,nonexceptional_count\n";
        for (const auto& [q, t] : tables) {
            const auto [p, r] = *prime_power(q);
            fmt::print(out, "{},{},{},{},{}\n", q, p, r, q % 7, t.nonexceptional.size());
        }
        break;
    case Format::Text:
        fmt::print(out, "{:>5} {:>5} {:>3} {:>7} {:>15}\n", "q", "p", "r", "q mod 7", "non-exceptional");
        for (const auto& [q, t] : tables) {
            const auto [p, r] = *prime_power(q);
            fmt::print(out, "{:>5} {:>5} {:>3} {:>7} {:>15}\n", q, p, r, q % 7, t.nonexceptional.size());
        }
        break;
    }
    return kOk;
}

int dispatch(const CliConfig& c, std::ostream& out)
{
    if (c.command == Command::ListFields)
        return cmd_list_fields(c, out);
    const Field F = make_field(c);
    switch (c.command) {
    case Command::Classify:
        return cmd_classify(c, F, out);
    case Command::IsPP:
        return cmd_is_pp(c, F, out);
    case Command::Hermite:
        return cmd_hermite(c, F, out);
    case Command::Exceptional:
        return cmd_exceptional(c, F, out);
    case Command::Canonical:
        return cmd_canonical(c, F, out);
    case Command::Related:
        return cmd_related(c, F, out);
    case Command::VerifyPaper:
        return cmd_verify(c, F, out);
    case Command::ListFields:
        break;
    }
    return kOk;
}

} // namespace

int default_jobs()
{
    if (const char* env = std::getenv("PP7_JOBS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0)
                return n;
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Polynomial parse_coeffs(const Field& F, std::string_view text)
{
    return Polynomial(parse_element_list(F, text));
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CliConfig c;
    c.jobs = default_jobs();

    CLI::App app{"Classify degree-7 permutation polynomials over finite fields", "pp7"};
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand("classify", "List every class of degree-7 permutation polynomials");
    add_field_options(*classify_cmd, c);
    add_format_options(*classify_cmd, c);
    classify_cmd->add_option("--jobs,-j", c.jobs, "Worker threads (default $PP7_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--audit", c.audit, "Test every candidate and count identity-filter violations");

    auto* is_pp_cmd = app.add_subcommand("is-pp", "Check whether a polynomial permutes the field");
    auto* hermite_cmd = app.add_subcommand("hermite", "Run Hermite's criterion on a polynomial");
    auto* exc_cmd = app.add_subcommand("exceptional", "List exceptional septics, or test one");
    auto* canon_cmd = app.add_subcommand("canonical", "Canonical representative of a septic's class");
    for (auto* sub : {is_pp_cmd, hermite_cmd, exc_cmd, canon_cmd}) {
        add_field_options(*sub, c);
        add_format_options(*sub, c);
        add_poly_options(*sub, c);
    }

    auto* related_cmd = app.add_subcommand("related", "Check whether two septics are linearly related");
    add_field_options(*related_cmd, c);
    add_format_options(*related_cmd, c);
    add_poly_options(*related_cmd, c);
    related_cmd->add_option("--other-coeffs", c.other_coeffs, "Second polynomial, constant first");
    related_cmd->add_option("--other-septic", c.other_septic, "Second septic as a5,a4,a3,a2,a1");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Compare classify output with the published table");
    add_field_options(*verify_cmd, c);
    add_format_options(*verify_cmd, c);
    verify_cmd->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* list_cmd = app.add_subcommand("list-fields", "Field orders covered by the classification");
    add_format_options(*list_cmd, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? kOk : kUsage};
    }

    const std::pair<CLI::App*, Command> table[] = {
        {classify_cmd, Command::Classify},       {is_pp_cmd, Command::IsPP},
        {hermite_cmd, Command::Hermite},         {exc_cmd, Command::Exceptional},
        {canon_cmd, Command::Canonical},         {related_cmd, Command::Related},
        {verify_cmd, Command::VerifyPaper},      {list_cmd, Command::ListFields},
    };
    for (const auto& [sub, cmd] : table)
        if (sub->parsed())
            c.command = cmd;
    return {c, kOk};
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.output) {
            std::ostringstream buf;
            const int code = dispatch(config, buf);
            std::ofstream file(*config.output);
            if (!file)
                throw UsageError("cannot open " + *config.output);
            file << buf.str();
            return code;
        }
        return dispatch(config, out);
    } catch (const ParseError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kUsage;
    } catch (const DivisionByZero& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kUsage;
    }
}

} // namespace pp7::cli
