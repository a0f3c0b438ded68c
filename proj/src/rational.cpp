#include "laytrop/rational.hpp"

#include "laytrop/error.hpp"

#include <cctype>

namespace laytrop {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "SyntaxError";
    case ErrorKind::ModeViolation: return "ModeViolation";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::GhostRoot: return "GhostRoot";
    case ErrorKind::RationalPowerOfGhost: return "RationalPowerOfGhost";
    case ErrorKind::NotBinomial: return "NotBinomial";
    case ErrorKind::GhostLeading: return "GhostLeading";
    case ErrorKind::EqualExponents: return "EqualExponents";
    case ErrorKind::GhostConstant: return "GhostConstant";
    case ErrorKind::GhostConstantRoot: return "GhostConstantRoot";
    case ErrorKind::SingleMonomial: return "SingleMonomial";
    case ErrorKind::NotUnivariate: return "NotUnivariate";
    case ErrorKind::NotTangiblySpanned: return "NotTangiblySpanned";
    case ErrorKind::WrongMode: return "WrongMode";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DegreeOrder: return "DegreeOrder";
    case ErrorKind::NoTangibleElement: return "NoTangibleElement";
    case ErrorKind::NoCommonPart: return "NoCommonPart";
    case ErrorKind::OverlappingResiduals: return "OverlappingResiduals";
    case ErrorKind::ZeroHasNoValuation: return "ZeroHasNoValuation";
    case ErrorKind::NotCommonMonomial: return "NotCommonMonomial";
    }
    return "Error";
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

[[noreturn]] void bad(std::string_view text)
{
    throw Error(ErrorKind::Parse, "not a rational number: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            bad(text);
        Integer d{std::string(den)};
        if (d == 0)
            bad(text);
        result = Rational(Integer(std::string(num)), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac)))
            bad(text);
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
        Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
        result = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(s))
            bad(text);
        result = Rational(Integer(std::string(s)));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer common_denominator(const std::vector<Rational>& values)
{
    Integer l = 1;
    for (const auto& v : values) {
        Integer d = v.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

} // namespace laytrop
