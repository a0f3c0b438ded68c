#include "laytrop/puiseux.hpp"

#include "laytrop/error.hpp"

#include <algorithm>

namespace laytrop {

PuiseuxScalar::PuiseuxScalar(std::vector<PuiseuxTerm> terms)
{
    std::map<Rational, Rational, std::less<>> acc;
    for (auto& t : terms)
        acc[t.exponent] += t.coeff;
    for (auto& [e, c] : acc) {
        if (c == 0)
            continue;
        Rational ce = c, ee = e;
        ce.canonicalize();
        ee.canonicalize();
        terms_.push_back({ce, ee});
    }
}

PuiseuxScalar puiseux_add(const PuiseuxScalar& a, const PuiseuxScalar& b)
{
    auto all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return PuiseuxScalar(std::move(all));
}

PuiseuxScalar puiseux_neg(const PuiseuxScalar& a)
{
    return puiseux_scale(a, -1);
}

PuiseuxScalar puiseux_sub(const PuiseuxScalar& a, const PuiseuxScalar& b)
{
    return puiseux_add(a, puiseux_neg(b));
}

PuiseuxScalar puiseux_mul(const PuiseuxScalar& a, const PuiseuxScalar& b)
{
    std::vector<PuiseuxTerm> all;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            all.push_back({x.coeff * y.coeff, x.exponent + y.exponent});
    return PuiseuxScalar(std::move(all));
}

PuiseuxScalar puiseux_scale(const PuiseuxScalar& a, const Rational& c)
{
    std::vector<PuiseuxTerm> all;
    for (const auto& x : a.terms())
        all.push_back({x.coeff * c, x.exponent});
    return PuiseuxScalar(std::move(all));
}

Rational valuation(const PuiseuxScalar& p)
{
    if (p.is_zero())
        throw Error(ErrorKind::ZeroHasNoValuation, "the zero series has no valuation");
    return -p.terms().front().exponent;
}

std::string to_string(const PuiseuxScalar& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (const auto& t : p.terms()) {
        if (!s.empty())
            s += " + ";
        s += to_string(t.coeff) + "*t^(" + to_string(t.exponent) + ")";
    }
    return s;
}

ClassicalPoly::ClassicalPoly(std::size_t vars, const std::vector<std::pair<ExponentVec, PuiseuxScalar>>& terms)
    : vars_(vars)
{
    for (const auto& [e, c] : terms) {
        if (e.size() != vars)
            throw Error(ErrorKind::InvalidArgument, "exponent " + exponent_to_string(e) + " does not have "
                                                        + std::to_string(vars) + " entries");
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_.emplace(e, c);
        else
            it->second = puiseux_add(it->second, c);
    }
    std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
}

PuiseuxScalar ClassicalPoly::coeff(const ExponentVec& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? PuiseuxScalar() : it->second;
}

namespace {

std::vector<std::pair<ExponentVec, PuiseuxScalar>> entries(const ClassicalPoly& f)
{
    return {f.terms().begin(), f.terms().end()};
}

void check_vars(const ClassicalPoly& f, const ClassicalPoly& g)
{
    if (f.vars() != g.vars())
        throw Error(ErrorKind::ModeMismatch, "classical polynomials differ in variable count");
}

} // namespace

ClassicalPoly classical_add(const ClassicalPoly& f, const ClassicalPoly& g)
{
    check_vars(f, g);
    auto all = entries(f);
    auto more = entries(g);
    all.insert(all.end(), more.begin(), more.end());
    return ClassicalPoly(f.vars(), all);
}

ClassicalPoly classical_sub(const ClassicalPoly& f, const ClassicalPoly& g)
{
    return classical_add(f, classical_scale(g, PuiseuxScalar::constant(-1)));
}

ClassicalPoly classical_mul(const ClassicalPoly& f, const ClassicalPoly& g)
{
    check_vars(f, g);
    std::vector<std::pair<ExponentVec, PuiseuxScalar>> all;
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : g.terms()) {
            ExponentVec e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = e1[i] + e2[i];
            all.push_back({e, puiseux_mul(c1, c2)});
        }
    return ClassicalPoly(f.vars(), all);
}

ClassicalPoly classical_scale(const ClassicalPoly& f, const PuiseuxScalar& c)
{
    std::vector<std::pair<ExponentVec, PuiseuxScalar>> all;
    for (const auto& [e, a] : f.terms())
        all.push_back({e, puiseux_mul(a, c)});
    return ClassicalPoly(f.vars(), all);
}

std::vector<ExponentVec> supp(const ClassicalPoly& f)
{
    std::vector<ExponentVec> out;
    for (const auto& [e, c] : f.terms())
        out.push_back(e);
    return out;
}

ExponentMode exponent_mode_of(const ClassicalPoly& f)
{
    ExponentMode mode = ExponentMode::Polynomial;
    for (const auto& [e, c] : f.terms())
        for (const auto& x : e) {
            if (!is_integer(x))
                return ExponentMode::Rational;
            if (x < 0)
                mode = ExponentMode::Laurent;
        }
    return mode;
}

TropPoly tropicalize_poly(const ClassicalPoly& f, SemiringMode mode)
{
    return tropicalize_poly(f, mode, exponent_mode_of(f));
}

TropPoly tropicalize_poly(const ClassicalPoly& f, SemiringMode mode, ExponentMode emode)
{
    if (f.is_zero())
        throw Error(ErrorKind::ZeroHasNoValuation, "the zero polynomial has no tropicalization");
    std::vector<Monomial> ms;
    for (const auto& [e, c] : f.terms())
        ms.push_back({e, LayeredScalar::tangible(valuation(c))});
    return TropPoly(f.vars(), emode, mode, ms);
}

Elimination monomial_eliminate(const ClassicalPoly& fbar, const ClassicalPoly& gbar, const ExponentVec& h,
                               SemiringMode mode)
{
    check_vars(fbar, gbar);
    auto fh = fbar.coeff(h);
    auto gh = gbar.coeff(h);
    if (fh.is_zero() || gh.is_zero())
        throw Error(ErrorKind::NotCommonMonomial, "eliminate: monomial " + exponent_to_string(h)
                                                      + " is not in both supports");
    ClassicalPoly qbar = classical_sub(classical_scale(fbar, gh), classical_scale(gbar, fh));

    std::vector<std::pair<ExponentVec, PuiseuxScalar>> kept;
    for (const auto& [e, c] : fbar.terms())
        if (gbar.terms().count(e) && !qbar.terms().count(e))
            kept.push_back({e, c});
    ClassicalPoly pbar(fbar.vars(), kept);

    ExponentMode emode = ExponentMode::Polynomial;
    for (auto m : {exponent_mode_of(fbar), exponent_mode_of(gbar)})
        if (m == ExponentMode::Rational || (m == ExponentMode::Laurent && emode == ExponentMode::Polynomial))
            emode = m;
    Elimination res{pbar, qbar, std::nullopt, std::nullopt};
    if (!pbar.is_zero())
        res.p = tropicalize_poly(pbar, mode, emode);
    if (!qbar.is_zero())
        res.q = tropicalize_poly(qbar, mode, emode);
    return res;
}

} // namespace laytrop
