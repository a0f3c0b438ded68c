#include "laytrop/parse.hpp"

#include "laytrop/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace laytrop {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

[[noreturn]] void fail(std::size_t pos, const std::string& msg)
{
    throw Error(ErrorKind::Parse, "parse error at column " + std::to_string(pos + 1) + ": " + msg);
}

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (digit(i) || (c == '.' && digit(i + 1))) {
            while (digit(i))
                ++i;
            if (i < s.size() && s[i] == '.') {
                ++i;
                while (digit(i))
                    ++i;
            }
            if (i < s.size() && s[i] == '/' && digit(i + 1)) {
                ++i;
                while (digit(i))
                    ++i;
            }
            if (i < s.size() && s[i] == 'v' && !(i + 1 < s.size() && (std::isalnum(static_cast<unsigned char>(s[i + 1]))
                                                                     || s[i + 1] == '_'))) {
                ++i;
            } else if (i < s.size() && s[i] == '[') {
                auto close = s.find(']', i);
                if (close == std::string_view::npos)
                    fail(i, "unterminated layer bracket");
                i = close + 1;
            }
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default: fail(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

bool indexed_name(const std::string& name, std::size_t& index)
{
    if (name.size() < 2 || name[0] != 'x' || name[1] == '0')
        return false;
    if (!std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        return false;
    index = std::stoul(name.substr(1)) - 1;
    return true;
}

// Variable name -> index, and the variable count.
std::pair<std::map<std::string, std::size_t>, std::size_t> assign_variables(const std::set<std::string>& names,
                                                                           const ParseOptions& opts)
{
    std::map<std::string, std::size_t> idx;
    std::size_t n = opts.vars;
    if (!opts.names.empty()) {
        for (std::size_t i = 0; i < opts.names.size(); ++i)
            idx[opts.names[i]] = i;
        for (const auto& nm : names)
            if (!idx.count(nm))
                throw Error(ErrorKind::Parse, "unknown variable '" + nm + "'");
        return {idx, std::max(n, opts.names.size())};
    }
    bool all_indexed = true;
    for (const auto& nm : names) {
        std::size_t k;
        if (!indexed_name(nm, k))
            all_indexed = false;
    }
    if (all_indexed) {
        for (const auto& nm : names) {
            std::size_t k;
            indexed_name(nm, k);
            idx[nm] = k;
            n = std::max(n, k + 1);
        }
    } else {
        std::size_t k = 0;
        for (const auto& nm : names)
            idx[nm] = k++;
        n = std::max(n, k);
    }
    if (n == 0)
        n = 1;
    return {idx, n};
}

class Parser {
public:
    Parser(std::vector<Token> toks, const std::map<std::string, std::size_t>& vars, std::size_t n, SemiringMode mode)
        : toks_(std::move(toks)), vars_(vars), n_(n), mode_(mode)
    {
    }

    TropPoly parse()
    {
        TropPoly f = expr();
        if (peek().kind != Tok::End)
            fail(peek().pos, "unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return toks_[at_]; }
    const Token& next() { return toks_[at_++]; }
    bool accept(Tok k)
    {
        if (peek().kind != k)
            return false;
        ++at_;
        return true;
    }

    TropPoly constant(const LayeredScalar& c) const
    {
        return TropPoly::constant(n_, ExponentMode::Rational, mode_, c);
    }

    TropPoly expr()
    {
        TropPoly f = term();
        while (accept(Tok::Plus))
            f = poly_add(f, term());
        return f;
    }

    TropPoly term()
    {
        TropPoly f = factor();
        while (accept(Tok::Star))
            f = poly_mul(f, factor());
        return f;
    }

    Rational exponent()
    {
        bool paren = accept(Tok::LParen);
        bool neg = accept(Tok::Minus);
        const Token& t = next();
        if (t.kind != Tok::Number)
            fail(t.pos, "expected an exponent");
        if (t.text.back() == 'v' || t.text.back() == ']')
            fail(t.pos, "exponent cannot carry a layer");
        Rational e = parse_rational(t.text);
        if (neg)
            e = -e;
        if (paren && !accept(Tok::RParen))
            fail(peek().pos, "expected ')'");
        return e;
    }

    TropPoly factor()
    {
        const Token& t = peek();
        if (t.kind == Tok::Minus) {
            ++at_;
            const Token& num = next();
            if (num.kind != Tok::Number)
                fail(t.pos, "'-' must precede a number");
            return constant(scalar(num, true));
        }
        if (t.kind == Tok::Number) {
            ++at_;
            return constant(scalar(t, false));
        }
        if (t.kind == Tok::Ident) {
            ++at_;
            ExponentVec e(n_, Rational(0));
            e[vars_.at(t.text)] = 1;
            if (accept(Tok::Caret))
                e[vars_.at(t.text)] = exponent();
            return TropPoly::monomial(ExponentMode::Rational, mode_, e, LayeredScalar());
        }
        if (t.kind == Tok::LParen) {
            ++at_;
            TropPoly f = expr();
            if (!accept(Tok::RParen))
                fail(peek().pos, "expected ')'");
            if (!accept(Tok::Caret))
                return f;
            std::size_t pos = peek().pos;
            Rational k = exponent();
            if (is_integer(k) && k >= 0)
                return poly_pow(f, static_cast<unsigned>(k.get_num().get_ui()));
            if (f.size() != 1 || !f.leading().coeff.is_tangible())
                fail(pos, "only a tangible monomial can take a negative or fractional power");
            auto m = f.leading();
            for (auto& x : m.exponent)
                x *= k;
            return TropPoly::monomial(ExponentMode::Rational, mode_, m.exponent,
                                      LayeredScalar::tangible(m.coeff.value() * k));
        }
        fail(t.pos, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }

    LayeredScalar scalar(const Token& t, bool negative) const
    {
        try {
            return parse_scalar((negative ? "-" : "") + t.text, mode_);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Parse)
                fail(t.pos, e.what());
            throw Error(e.kind(), std::string(e.what()) + " (token '" + t.text + "')");
        }
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
    const std::map<std::string, std::size_t>& vars_;
    std::size_t n_;
    SemiringMode mode_;
};

ExponentMode narrowest(const std::vector<TropPoly>& ps)
{
    ExponentMode m = ExponentMode::Polynomial;
    for (const auto& p : ps)
        for (const auto& [e, c] : p.terms())
            for (const auto& x : e) {
                if (!is_integer(x))
                    return ExponentMode::Rational;
                if (x < 0)
                    m = ExponentMode::Laurent;
            }
    return m;
}

} // namespace

std::vector<TropPoly> parse_polys(const std::vector<std::string>& texts, const ParseOptions& opts)
{
    std::vector<std::vector<Token>> toks;
    std::set<std::string> names;
    for (const auto& t : texts) {
        toks.push_back(tokenize(t));
        for (const auto& tk : toks.back())
            if (tk.kind == Tok::Ident)
                names.insert(tk.text);
    }
    auto [idx, n] = assign_variables(names, opts);
    std::vector<TropPoly> out;
    for (auto& tk : toks)
        out.push_back(Parser(std::move(tk), idx, n, opts.semiring).parse());
    ExponentMode em = opts.exponents ? *opts.exponents : narrowest(out);
    for (auto& p : out)
        p = p.with_exponent_mode(em);
    return out;
}

TropPoly parse_poly(std::string_view text, const ParseOptions& opts)
{
    return parse_polys({std::string(text)}, opts).front();
}

Point parse_point(std::string_view text, SemiringMode mode)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            s.end());
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    Point p;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty())
            throw Error(ErrorKind::Parse, "empty point coordinate in '" + std::string(text) + "'");
        p.push_back(parse_scalar(piece, mode));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return p;
}

std::string to_string(const Point& a, SemiringMode mode)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + to_string(a[i], mode);
    return s;
}

std::string point_to_string(const std::vector<Rational>& x)
{
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += (i ? "," : "") + to_string(x[i]);
    return s;
}

namespace {

Rational json_rational(const nlohmann::json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw Error(ErrorKind::Parse, "expected a rational as a string or integer, got " + j.dump());
}

} // namespace

nlohmann::json poly_to_json(const TropPoly& f)
{
    nlohmann::json ms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        nlohmann::json e = nlohmann::json::array();
        for (const auto& x : it->first)
            e.push_back(to_string(x));
        ms.push_back({{"exponents", e},
                      {"coeff", {{"value", to_string(it->second.value())}, {"layer", to_string(it->second.layer())}}}});
    }
    return {{"vars", f.vars()},
            {"mode", to_string(f.exponent_mode())},
            {"semiring", to_string(f.semiring_mode())},
            {"monomials", ms}};
}

TropPoly poly_from_json(const nlohmann::json& j)
{
    try {
        std::size_t n = j.at("vars").get<std::size_t>();
        ExponentMode em = parse_exponent_mode(j.at("mode").get<std::string>());
        SemiringMode sm = parse_semiring_mode(j.at("semiring").get<std::string>());
        std::vector<Monomial> ms;
        for (const auto& m : j.at("monomials")) {
            ExponentVec e;
            for (const auto& x : m.at("exponents"))
                e.push_back(json_rational(x));
            const auto& c = m.at("coeff");
            std::string layer = c.contains("layer") ? c.at("layer").get<std::string>() : "1";
            Layer k = layer == "inf" ? Layer::infinite() : Layer(parse_rational(layer));
            LayeredScalar a(json_rational(c.at("value")), k);
            check_in_mode(a, sm);
            ms.push_back({e, a});
        }
        return TropPoly(n, em, sm, ms);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed polynomial record: ") + e.what());
    }
}

ClassicalPoly classical_from_json(const nlohmann::json& j)
{
    try {
        std::size_t n = j.at("vars").get<std::size_t>();
        std::vector<std::pair<ExponentVec, PuiseuxScalar>> terms;
        for (const auto& m : j.at("monomials")) {
            ExponentVec e;
            for (const auto& x : m.at("exponents"))
                e.push_back(json_rational(x));
            std::vector<PuiseuxTerm> ts;
            for (const auto& pair : m.at("coeff"))
                ts.push_back({json_rational(pair.at(0)), json_rational(pair.at(1))});
            terms.push_back({e, PuiseuxScalar(ts)});
        }
        return ClassicalPoly(n, terms);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed classical polynomial record: ") + e.what());
    }
}

nlohmann::json classical_to_json(const ClassicalPoly& f)
{
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::json ex = nlohmann::json::array();
        for (const auto& x : e)
            ex.push_back(to_string(x));
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& t : c.terms())
            cs.push_back({to_string(t.coeff), to_string(t.exponent)});
        ms.push_back({{"exponents", ex}, {"coeff", cs}});
    }
    return {{"vars", f.vars()}, {"monomials", ms}};
}

} // namespace laytrop
