#include "curlflow/analysis.hpp"
#include "curlflow/error.hpp"
#include "curlflow/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace curlflow {

namespace {

struct Line {
    std::string text; // comment stripped, not trimmed
    int number;
};

struct Section {
    std::string name;
    int line;
    std::vector<Line> lines;
};

// A slice of a source line with its starting column.
struct Piece {
    std::string text;
    int column;
};

Piece trim(const Piece& p)
{
    std::size_t b = 0;
    while (b < p.text.size() && std::isspace(static_cast<unsigned char>(p.text[b])))
        ++b;
    std::size_t e = p.text.size();
    while (e > b && std::isspace(static_cast<unsigned char>(p.text[e - 1])))
        --e;
    return {p.text.substr(b, e - b), p.column + static_cast<int>(b)};
}

std::vector<Piece> split(const Piece& p, char sep)
{
    std::vector<Piece> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= p.text.size(); ++i) {
        if (i == p.text.size() || p.text[i] == sep) {
            out.push_back(trim({p.text.substr(start, i - start), p.column + static_cast<int>(start)}));
            start = i + 1;
        }
    }
    return out;
}

// "key = value" -> (key, value); nullopt without '='.
std::optional<std::pair<Piece, Piece>> key_value(const Piece& p)
{
    const auto eq = p.text.find('=');
    if (eq == std::string::npos)
        return std::nullopt;
    return std::pair{trim({p.text.substr(0, eq), p.column}),
                     trim({p.text.substr(eq + 1), p.column + static_cast<int>(eq) + 1})};
}

bool is_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

[[noreturn]] void fail(ParseErrorKind kind, int line, int column, const std::string& msg)
{
    throw ParseError(kind, line, column, msg);
}

const std::set<std::string> kKnownSections{
    "system", "params", "field", "potential", "claimed_potential",
    "integrals", "multiplier", "one_form", "decomposition"};

class SystemParser {
public:
    SystemParser(std::string_view src, const Params& overrides) : overrides_(overrides)
    {
        split_sections(src);
    }

    SystemDef parse()
    {
        parse_header();
        parse_params();

        const Section* field = find("field");
        const Section* potential = find("potential");
        if (field && potential)
            throw Error(ErrorKind::BothFieldAndPotential,
                        "system declares both [field] and [potential]");
        if (!field && !potential)
            throw Error(ErrorKind::MissingSection, "system needs a [field] or [potential] section");
        if (field) {
            def_.field = vector_section(*field);
        } else {
            def_.potential = vector_section(*potential);
            def_.field = curl(*def_.potential);
            def_.field_from_potential = true;
        }
        if (const Section* s = find("claimed_potential"))
            def_.claimed_potential = vector_section(*s);
        if (const Section* s = find("one_form"))
            def_.one_form = vector_section(*s);
        if (const Section* s = find("integrals"))
            for (const auto& line : s->lines)
                if (Piece p = trim({line.text, 1}); !p.text.empty())
                    def_.integrals.push_back(expression(p, line.number));
        if (const Section* s = find("multiplier"))
            parse_multiplier(*s);
        if (const Section* s = find("decomposition"))
            parse_decompositions(*s);
        return std::move(def_);
    }

private:
    void split_sections(std::string_view src)
    {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= src.size()) {
            const std::size_t nl = src.find('\n', pos);
            std::string text(src.substr(pos, nl == std::string_view::npos ? src.size() - pos : nl - pos));
            ++number;
            if (!text.empty() && text.back() == '\r')
                text.pop_back();
            if (const auto hash = text.find('#'); hash != std::string::npos)
                text.erase(hash);
            const Piece p = trim({text, 1});
            if (!p.text.empty()) {
                if (p.text.front() == '[') {
                    if (p.text.back() != ']')
                        fail(ParseErrorKind::Syntax, number, p.column, "malformed section header");
                    const std::string name = trim({p.text.substr(1, p.text.size() - 2), 0}).text;
                    if (!kKnownSections.contains(name))
                        fail(ParseErrorKind::Syntax, number, p.column, "unknown section [" + name + "]");
                    if (find(name))
                        fail(ParseErrorKind::Syntax, number, p.column, "duplicate section [" + name + "]");
                    sections_.push_back({name, number, {}});
                } else {
                    if (sections_.empty())
                        fail(ParseErrorKind::Syntax, number, p.column, "content before the first section");
                    sections_.back().lines.push_back({text, number});
                }
            }
            if (nl == std::string_view::npos)
                break;
            pos = nl + 1;
        }
    }

    const Section* find(const std::string& name) const
    {
        for (const auto& s : sections_)
            if (s.name == name)
                return &s;
        return nullptr;
    }

    void parse_header()
    {
        const Section* s = find("system");
        if (!s)
            throw Error(ErrorKind::MissingSection, "missing [system] section");
        bool have_vars = false;
        for (const auto& line : s->lines) {
            const auto kv = key_value(trim({line.text, 1}));
            if (!kv)
                fail(ParseErrorKind::Syntax, line.number, 1, "expected 'key = value'");
            const auto& [key, value] = *kv;
            if (key.text == "name") {
                def_.name = value.text;
            } else if (key.text == "variables") {
                std::vector<Piece> names;
                for (const Piece& p : split(value, ' '))
                    if (!p.text.empty())
                        names.push_back(p);
                if (names.size() != kVariables)
                    fail(ParseErrorKind::WrongArity, line.number, value.column,
                         "exactly three variables are required");
                for (std::size_t i = 0; i < kVariables; ++i) {
                    if (!is_identifier(names[i].text) || names[i].text == "ln")
                        fail(ParseErrorKind::Syntax, line.number, names[i].column,
                             "invalid variable name '" + names[i].text + "'");
                    for (std::size_t j = 0; j < i; ++j)
                        if (names[j].text == names[i].text)
                            fail(ParseErrorKind::Syntax, line.number, names[i].column,
                                 "duplicate variable '" + names[i].text + "'");
                    def_.variables[i] = names[i].text;
                }
                have_vars = true;
            } else if (key.text == "expect") {
                if (value.text == "pass")
                    def_.expect = Expectation::Pass;
                else if (value.text == "fail")
                    def_.expect = Expectation::Fail;
                else
                    fail(ParseErrorKind::Syntax, line.number, value.column, "expect must be pass or fail");
            } else {
                fail(ParseErrorKind::Syntax, line.number, key.column, "unknown key '" + key.text + "'");
            }
        }
        if (!have_vars)
            throw Error(ErrorKind::MissingSection, "[system] must declare variables");
    }

    void parse_params()
    {
        const Section* s = find("params");
        if (!s) {
            if (!overrides_.empty())
                throw Error(ErrorKind::InvalidArgument, "system declares no parameters");
            return;
        }
        for (const auto& line : s->lines) {
            const auto kv = key_value(trim({line.text, 1}));
            if (!kv)
                fail(ParseErrorKind::Syntax, line.number, 1, "expected '<name> = <rational>'");
            const auto& [key, value] = *kv;
            if (!is_identifier(key.text) || key.text == "ln")
                fail(ParseErrorKind::Syntax, line.number, key.column, "invalid parameter name");
            if (std::find(def_.variables.begin(), def_.variables.end(), key.text) != def_.variables.end())
                fail(ParseErrorKind::Syntax, line.number, key.column, "parameter shadows a variable");
            const LogFunc f = expression(value, line.number);
            if (f.has_logs() || !f.poly().is_constant())
                fail(ParseErrorKind::Syntax, line.number, value.column, "parameter value must be a constant");
            const auto over = overrides_.find(key.text);
            def_.params[key.text] = over != overrides_.end() ? over->second : f.poly().constant_term();
        }
        for (const auto& [name, value] : overrides_)
            if (!def_.params.contains(name))
                throw Error(ErrorKind::InvalidArgument, "system has no parameter '" + name + "'");
    }

    LogFunc expression(const Piece& p, int line) const
    {
        if (p.text.empty())
            fail(ParseErrorKind::Syntax, line, p.column, "empty expression");
        return parse_expression(p.text, def_.variables, def_.params, {line, p.column});
    }

    Laurent laurent(const Piece& p, int line) const
    {
        LogFunc f = expression(p, line);
        if (f.has_logs())
            fail(ParseErrorKind::Syntax, line, p.column, "logarithms are not allowed here");
        return f.poly();
    }

    VecField triple(const Piece& p, int line) const
    {
        const auto parts = split(p, ';');
        if (parts.size() != kVariables)
            fail(ParseErrorKind::WrongArity, line, p.column, "expected three ';'-separated components");
        return {{laurent(parts[0], line), laurent(parts[1], line), laurent(parts[2], line)}};
    }

    VecField vector_section(const Section& s) const
    {
        if (s.lines.size() == 1) {
            const auto kv = key_value(trim({s.lines[0].text, 1}));
            if (kv && kv->first.text == "components")
                return triple(kv->second, s.lines[0].number);
        }
        VecField v;
        std::array<bool, kVariables> seen{};
        for (const auto& line : s.lines) {
            const auto kv = key_value(trim({line.text, 1}));
            if (!kv)
                fail(ParseErrorKind::Syntax, line.number, 1, "expected \"<var>' = <expr>\"");
            const auto& [key, value] = *kv;
            if (key.text.size() < 2 || key.text.back() != '\'')
                fail(ParseErrorKind::Syntax, line.number, key.column, "expected \"<var>'\" on the left");
            const std::string var = key.text.substr(0, key.text.size() - 1);
            const auto it = std::find(def_.variables.begin(), def_.variables.end(), var);
            if (it == def_.variables.end())
                fail(ParseErrorKind::UnknownIdentifier, line.number, key.column, "unknown variable '" + var + "'");
            const auto idx = static_cast<std::size_t>(it - def_.variables.begin());
            if (seen[idx])
                fail(ParseErrorKind::Syntax, line.number, key.column, "component for '" + var + "' given twice");
            seen[idx] = true;
            v[idx] = laurent(value, line.number);
        }
        if (std::count(seen.begin(), seen.end(), true) != static_cast<long>(kVariables))
            fail(ParseErrorKind::WrongArity, s.line, 1, "[" + s.name + "] needs all three components");
        return v;
    }

    void parse_multiplier(const Section& s)
    {
        if (s.lines.size() != 1)
            fail(ParseErrorKind::WrongArity, s.line, 1, "[multiplier] takes exactly one expression");
        const Piece p = trim({s.lines[0].text, 1});
        Laurent m = laurent(p, s.lines[0].number);
        if (!m.is_monomial())
            fail(ParseErrorKind::NonMonomialDenominator, s.lines[0].number, p.column,
                 "multiplier must be a nonzero rational times a monomial");
        def_.multiplier = std::move(m);
    }

    void parse_decompositions(const Section& s)
    {
        for (const auto& line : s.lines) {
            const auto kv = key_value(trim({line.text, 1}));
            if (!kv)
                fail(ParseErrorKind::Syntax, line.number, 1, "expected '<label> = <1-form> | <1-form>'");
            const auto& [key, value] = *kv;
            const auto sides = split(value, '|');
            if (sides.size() != 2)
                fail(ParseErrorKind::WrongArity, line.number, value.column, "expected two 1-forms separated by '|'");
            def_.decompositions.push_back({key.text, DiffForm::one_form(triple(sides[0], line.number)),
                                           DiffForm::one_form(triple(sides[1], line.number))});
        }
    }

    std::vector<Section> sections_;
    const Params& overrides_;
    SystemDef def_;
};

} // namespace

SystemDef parse_system(std::string_view src, const Params& overrides)
{
    return SystemParser(src, overrides).parse();
}

} // namespace curlflow
