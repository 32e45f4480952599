#include "pp7/notation.hpp"

#include <cctype>
#include <charconv>

namespace pp7 {

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_space()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool done()
    {
        skip_space();
        return pos_ >= s_.size();
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::optional<std::int64_t> integer()
    {
        skip_space();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc{})
            return std::nullopt;
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return v;
    }

    [[noreturn]] void fail(std::string_view what) const
    {
        throw ParseError("cannot parse '" + std::string(s_) + "': " + std::string(what));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Elem parse_element(const Field& F, std::string_view text, std::optional<Elem> e)
{
    const Elem gen = e.value_or(F.generator());
    const auto gen_log = F.log(gen);
    if (!gen_log)
        throw ParseError("generator must be nonzero");
    Lexer lex(text);
    if (lex.done())
        lex.fail("empty element");

    Elem sum;
    bool first = true;
    while (!lex.done()) {
        bool negate = false;
        if (lex.accept('+')) {
            if (first)
                lex.fail("leading '+'");
        } else if (lex.accept('-')) {
            negate = true;
        } else if (!first) {
            lex.fail("expected '+' or '-'");
        }
        first = false;

        Elem term = F.one();
        bool have_factor = false;
        if (auto n = lex.integer()) {
            try {
                term = F.from_code(*n);
            } catch (const std::invalid_argument& err) {
                lex.fail(err.what());
            }
            have_factor = true;
            lex.accept('*');
        }
        if (lex.accept('e')) {
            std::int64_t k = 1;
            if (lex.accept('^')) {
                const bool braced = lex.accept('{');
                auto n = lex.integer();
                if (!n)
                    lex.fail("expected exponent");
                if (braced && !lex.accept('}'))
                    lex.fail("unbalanced '{'");
                k = *n;
            }
            const auto n = F.q() - 1;
            term = F.mul(term, F.gen_pow(((static_cast<std::int64_t>(*gen_log) * (k % n)) % n + n) % n));
            have_factor = true;
        }
        if (!have_factor)
            lex.fail("expected an integer or 'e'");
        sum = F.add(sum, negate ? F.neg(term) : term);
    }
    return sum;
}

std::vector<Elem> parse_element_list(const Field& F, std::string_view text, std::optional<Elem> e)
{
    auto trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.remove_suffix(1);
    if (trimmed.size() >= 2 && trimmed.front() == '(' && trimmed.back() == ')')
        trimmed = trimmed.substr(1, trimmed.size() - 2);
    std::vector<Elem> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = trimmed.find(',', start);
        out.push_back(parse_element(F, trimmed.substr(start, comma - start), e));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string format_element(const Field& F, Elem a, ElementStyle style)
{
    if (style == ElementStyle::Code || F.r() == 1 || a.is_zero())
        return std::to_string(a.code());
    const int k = *F.log(a);
    if (k == 0)
        return "1";
    if (k == 1)
        return "e";
    return "e^" + std::to_string(k);
}

std::string format_tuple(const Field& F, const NormalizedSeptic& s, ElementStyle style)
{
    std::string out = "(";
    for (int i = 5; i >= 1; --i) {
        out += format_element(F, s[i], style);
        if (i > 1)
            out += ',';
    }
    return out + ")";
}

std::string format_polynomial(const Field& F, const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const Elem c = f.coeff(i);
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        const bool unit = c == F.one();
        if (!unit || i == 0)
            out += format_element(F, c);
        if (i > 0) {
            if (!unit)
                out += '*';
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace pp7
