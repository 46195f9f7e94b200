#include "curlflow/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace curlflow {

std::string_view to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::NonMonomialDenominator: return "NonMonomialDenominator";
    case ParseErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ParseErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ParseErrorKind::LogOfNonVariable: return "LogOfNonVariable";
    case ParseErrorKind::WrongArity: return "WrongArity";
    }
    return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind), line_(line), column_(column)
{
}

namespace {

enum class Tok { Integer, Decimal, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view src, SourceOffset at)
{
    std::vector<Token> out;
    int line = at.line;
    int col = at.column;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError(ParseErrorKind::Syntax, line, col, msg);
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const int start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            Tok kind = Tok::Integer;
            if (j < src.size() && src[j] == '.') {
                kind = Tok::Decimal;
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                    ++j;
            }
            out.push_back({kind, std::string(src.substr(i, j - i)), line, start_col});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, start_col});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        default: fail(std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), line, start_col});
        ++col;
        ++i;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class ExpressionParser {
public:
    ExpressionParser(std::vector<Token> tokens, const Variables& vars, const Params& params)
        : tokens_(std::move(tokens)), vars_(vars), params_(params)
    {
    }

    LogFunc parse()
    {
        if (peek().kind == Tok::End)
            error(ParseErrorKind::Syntax, peek(), "empty expression");
        LogFunc f = expr();
        if (peek().kind != Tok::End) {
            if (peek().kind == Tok::RParen)
                error(ParseErrorKind::Syntax, peek(), "unbalanced ')'");
            error(ParseErrorKind::Syntax, peek(),
                  "unexpected '" + peek().text + "' (implicit multiplication requires '*')");
        }
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] static void error(ParseErrorKind kind, const Token& at, const std::string& msg)
    {
        throw ParseError(kind, at.line, at.column, msg);
    }

    const Token& expect(Tok kind, const char* what)
    {
        if (peek().kind != kind)
            error(ParseErrorKind::Syntax, peek(), std::string("expected ") + what);
        return advance();
    }

    std::optional<std::size_t> variable_index(const std::string& name) const
    {
        for (std::size_t i = 0; i < kVariables; ++i)
            if (vars_[i] == name)
                return i;
        return std::nullopt;
    }

    LogFunc expr()
    {
        LogFunc acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = advance().kind == Tok::Minus;
            LogFunc rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    LogFunc term()
    {
        LogFunc acc = factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token op = advance();
            const Token rhs_start = peek();
            LogFunc rhs = factor();
            acc = op.kind == Tok::Star ? multiply(acc, rhs, op) : divide(acc, rhs, rhs_start);
        }
        return acc;
    }

    LogFunc factor()
    {
        const Token start = peek();
        LogFunc base_value = base();
        if (peek().kind != Tok::Caret)
            return base_value;
        advance();
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            advance();
            negative = true;
        }
        const Token& e = peek();
        if (e.kind != Tok::Integer)
            error(ParseErrorKind::NonIntegerExponent, e, "exponent must be an integer literal");
        advance();
        if (e.text.size() > 3 || std::stoi(e.text) > 256)
            error(ParseErrorKind::Syntax, e, "exponent too large");
        const int n = negative ? -std::stoi(e.text) : std::stoi(e.text);
        return power(base_value, n, start);
    }

    LogFunc base()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Integer:
            advance();
            return LogFunc(Laurent(Rational(Integer(t.text))));
        case Tok::Decimal:
            error(ParseErrorKind::Syntax, t, "decimal literal; write rationals as p/q");
        case Tok::Minus:
            advance();
            return -factor();
        case Tok::LParen: {
            advance();
            LogFunc inner = expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        case Tok::Ident:
            return identifier();
        case Tok::End:
            error(ParseErrorKind::Syntax, t, "unexpected end of expression");
        default:
            error(ParseErrorKind::Syntax, t, "unexpected '" + t.text + "'");
        }
    }

    LogFunc identifier()
    {
        const Token t = advance();
        if (t.text == "ln")
            return logarithm(t);
        if (peek().kind == Tok::LParen)
            error(ParseErrorKind::UnknownIdentifier, t, "unknown function '" + t.text + "'");
        if (auto var = variable_index(t.text))
            return LogFunc(Laurent::variable(*var));
        if (auto it = params_.find(t.text); it != params_.end())
            return LogFunc(Laurent(it->second));
        error(ParseErrorKind::UnknownIdentifier, t, "unknown identifier '" + t.text + "'");
    }

    LogFunc logarithm(const Token& ln)
    {
        if (peek().kind != Tok::LParen)
            error(ParseErrorKind::Syntax, peek(), "expected '(' after ln");
        advance();
        const Token arg = peek();
        if (arg.kind == Tok::RParen)
            error(ParseErrorKind::WrongArity, arg, "ln takes exactly one argument");
        std::optional<std::size_t> var;
        if (arg.kind == Tok::Ident) {
            var = variable_index(arg.text);
            if (!var && !params_.contains(arg.text) && arg.text != "ln")
                error(ParseErrorKind::UnknownIdentifier, arg,
                      "unknown identifier '" + arg.text + "'");
        }
        // Anything richer than a bare variable is parsed only to report it precisely.
        const std::size_t before = pos_;
        (void)expr();
        if (peek().kind == Tok::Comma)
            error(ParseErrorKind::WrongArity, peek(), "ln takes exactly one argument");
        if (!var || pos_ != before + 1)
            error(ParseErrorKind::LogOfNonVariable, arg,
                  "ln is only defined for a single coordinate variable");
        expect(Tok::RParen, "')' closing ln");
        (void)ln;
        return LogFunc::log_of(*var);
    }

    static bool is_plain_constant(const LogFunc& f) { return !f.has_logs() && f.poly().is_constant(); }

    LogFunc multiply(const LogFunc& a, const LogFunc& b, const Token& op)
    {
        if (!a.has_logs() && !b.has_logs())
            return LogFunc(a.poly() * b.poly());
        if (is_plain_constant(a))
            return a.poly().constant_term() * b;
        if (is_plain_constant(b))
            return b.poly().constant_term() * a;
        error(ParseErrorKind::Syntax, op, "a logarithm can only be scaled by a constant");
    }

    LogFunc divide(const LogFunc& a, const LogFunc& b, const Token& at)
    {
        if (b.has_logs() || !b.poly().is_monomial())
            error(ParseErrorKind::NonMonomialDenominator, at,
                  "division is only allowed by a nonzero monomial");
        const Laurent inv = *b.poly().inverse();
        if (!a.has_logs())
            return LogFunc(a.poly() * inv);
        if (inv.is_constant())
            return inv.constant_term() * a;
        error(ParseErrorKind::Syntax, at, "a logarithm can only be scaled by a constant");
    }

    LogFunc power(const LogFunc& b, int n, const Token& at)
    {
        if (n == 0)
            return LogFunc(Laurent(1));
        if (n == 1)
            return b;
        if (b.has_logs())
            error(ParseErrorKind::Syntax, at, "powers of logarithms are not representable");
        if (n < 0 && !b.poly().is_monomial())
            error(ParseErrorKind::NonMonomialDenominator, at,
                  "negative exponent requires a monomial base");
        return LogFunc(b.poly().pow(n));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Variables& vars_;
    const Params& params_;
};

std::string monomial_text(const Monomial& m, const Variables& vars)
{
    std::string out;
    for (std::size_t i = 0; i < kVariables; ++i) {
        const int e = m.exponents[i];
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += vars[i];
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

void append_term(std::string& out, const Rational& c, const std::string& body)
{
    const bool negative = c < 0;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    const Rational mag = abs(c);
    if (body.empty())
        out += mag.get_str();
    else if (mag == 1)
        out += body;
    else
        out += mag.get_str() + "*" + body;
}

} // namespace

LogFunc parse_expression(std::string_view src, const Variables& variables, const Params& params,
                         SourceOffset offset)
{
    return ExpressionParser(tokenize(src, offset), variables, params).parse();
}

std::string render(const LogFunc& f, const Variables& variables)
{
    std::string out;
    for (const auto& [m, c] : f.poly().terms())
        append_term(out, c, monomial_text(m, variables));
    for (const auto& [var, c] : f.logs())
        append_term(out, c, "ln(" + variables[var] + ")");
    return out.empty() ? "0" : out;
}

std::string render(const Laurent& f, const Variables& variables)
{
    return render(LogFunc(f), variables);
}

} // namespace curlflow
