#include "laytrop/factor.hpp"

#include "laytrop/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace laytrop {

PermanentIdentity permanent_factors(const std::vector<TropPoly>& fs, const CompareOptions& opts)
{
    const std::size_t m = fs.size();
    if (m < 2)
        throw Error(ErrorKind::InvalidArgument, "permanent identity needs at least two polynomials");

    std::vector<TropPoly> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            pairs.push_back(poly_add(fs[i], fs[j]));
    TropPoly lhs = poly_product(pairs);

    // g_k = sum over k-subsets of the product of their members.
    std::vector<TropPoly> g;
    for (std::size_t k = 1; k < m; ++k) {
        std::optional<TropPoly> sum;
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (pick.size() == k) {
                std::vector<TropPoly> members;
                for (auto i : pick)
                    members.push_back(fs[i]);
                TropPoly prod = poly_product(members);
                sum = sum ? poly_add(*sum, prod) : prod;
                return;
            }
            for (std::size_t i = start; i < m; ++i) {
                pick.push_back(i);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
        g.push_back(*sum);
    }
    TropPoly rhs = poly_product(g);
    auto cmp = compare_fn(rhs, lhs, opts);
    return {std::move(lhs), std::move(g), std::move(rhs), std::move(cmp)};
}

std::vector<TropPoly> binomials_of(const TropPoly& f)
{
    if (f.size() < 2)
        throw Error(ErrorKind::SingleMonomial, "binomials: " + to_string(f) + " has a single monomial");
    auto ms = f.monomials();
    std::vector<TropPoly> out;
    for (std::size_t i = ms.size(); i-- > 0;)
        for (std::size_t j = i; j-- > 0;)
            out.emplace_back(f.vars(), f.exponent_mode(), f.semiring_mode(), std::vector<Monomial>{ms[i], ms[j]});
    return out;
}

ExchangeResult exchange_step(const TropPoly& p, const TropPoly& q)
{
    if (p.vars() != q.vars() || p.semiring_mode() != q.semiring_mode() || p.exponent_mode() != q.exponent_mode())
        throw Error(ErrorKind::ModeMismatch, "exchange: operands differ in variables or modes");
    std::vector<Monomial> common, common_q, rp, rq;
    for (const auto& [e, c] : p.terms()) {
        auto it = q.terms().find(e);
        if (it != q.terms().end() && nu_equal(it->second, c)) {
            common.push_back({e, c});
            common_q.push_back({e, it->second});
        } else {
            rp.push_back({e, c});
        }
    }
    if (common.empty())
        throw Error(ErrorKind::NoCommonPart, "exchange: " + to_string(p) + " and " + to_string(q)
                                                 + " share no nu-common monomial");
    for (const auto& [e, c] : q.terms()) {
        auto it = p.terms().find(e);
        if (it == p.terms().end() || !nu_equal(it->second, c))
            rq.push_back({e, c});
    }
    if (rp.empty() && rq.empty())
        throw Error(ErrorKind::OverlappingResiduals, "exchange: both residuals are empty");
    for (const auto& a : rp)
        for (const auto& b : rq)
            if (a.exponent == b.exponent)
                throw Error(ErrorKind::OverlappingResiduals,
                            "exchange: residuals share the exponent " + exponent_to_string(a.exponent));

    auto make = [&](const std::vector<Monomial>& ms) -> std::optional<TropPoly> {
        if (ms.empty())
            return std::nullopt;
        return TropPoly(p.vars(), p.exponent_mode(), p.semiring_mode(), ms);
    };
    std::vector<Monomial> both = rp;
    both.insert(both.end(), rq.begin(), rq.end());
    return {*make(common), *make(common_q), make(rp), make(rq), *make(both)};
}

const char* to_string(FactorRelation r)
{
    switch (r) {
    case FactorRelation::Equal: return "Equal";
    case FactorRelation::NuEquivalent: return "NuEquivalent";
    case FactorRelation::SurpassesNu: return "SurpassesNu";
    case FactorRelation::Unfactored: return "Unfactored";
    }
    return "?";
}

namespace {

void require_univariate(const TropPoly& f, const char* op)
{
    if (f.vars() != 1)
        throw Error(ErrorKind::NotUnivariate, std::string(op) + ": " + to_string(f) + " is not univariate");
    for (const auto& [e, c] : f.terms())
        if (!is_integer(e[0]))
            throw Error(ErrorKind::InvalidArgument, std::string(op) + ": exponent " + to_string(e[0])
                                                        + " is not an integer");
}

TropPoly linear(const TropPoly& like, const LayeredScalar& lead, const LayeredScalar& constant)
{
    return TropPoly(1, like.exponent_mode(), like.semiring_mode(),
                    {{{Rational(1)}, lead}, {{Rational(0)}, constant}});
}

unsigned slope_units(const Rational& gap)
{
    return static_cast<unsigned>(gap.get_num().get_ui());
}

void finish(FactorizationResult& res, const TropPoly& f)
{
    TropPoly prod = TropPoly::constant(1, f.exponent_mode(), f.semiring_mode(), res.unit);
    for (const auto& [g, k] : res.factors)
        prod = poly_mul(prod, poly_pow(g, k));
    res.expansion = prod;
    if (prod == f) {
        res.relation = FactorRelation::Equal;
        return;
    }
    auto cmp = compare_fn(prod, f);
    if (cmp.equal.holds) {
        res.relation = FactorRelation::NuEquivalent;
    } else if (cmp.surpasses_nu.holds) {
        res.relation = FactorRelation::SurpassesNu;
    } else {
        res.relation = FactorRelation::Unfactored;
        res.witness = cmp.surpasses_nu.counterexample;
    }
}

// Monomial factor lambda^{e_0} and linear factors from the remaining slope
// jumps; `units[i]` is the multiplicity left at breakpoint i.
void linear_factors(FactorizationResult& res, const TropPoly& f, const std::vector<Monomial>& hull,
                    const std::vector<Rational>& bp, const std::vector<unsigned>& units)
{
    if (hull.front().exponent[0] != 0)
        res.factors.insert(res.factors.begin(),
                           {TropPoly::monomial(f.exponent_mode(), f.semiring_mode(), hull.front().exponent,
                                               LayeredScalar()),
                            1});
    for (std::size_t i = 0; i < bp.size(); ++i)
        if (units[i] > 0)
            res.factors.push_back({linear(f, LayeredScalar(), LayeredScalar::tangible(bp[i])), units[i]});
}

} // namespace

FactorizationResult factor_univariate_tangible(const TropPoly& f)
{
    require_univariate(f, "factor");
    if (f.semiring_mode() == SemiringMode::LayeredQ)
        throw Error(ErrorKind::WrongMode, "factor: tangible factorization runs in maxplus or supertropical mode");
    if (!is_tangibly_spanned(f))
        throw Error(ErrorKind::NotTangiblySpanned, "factor: " + to_string(f) + " is not tangibly spanned");
    auto hull = upper_hull(f);
    auto cd = components_univariate(f);
    std::vector<unsigned> units;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
        units.push_back(slope_units(hull[i + 1].exponent[0] - hull[i].exponent[0]));
    FactorizationResult res{LayeredScalar::tangible(hull.back().coeff.value()), {}, FactorRelation::Unfactored,
                            f, std::nullopt, {}};
    linear_factors(res, f, hull, cd.breakpoints, units);
    finish(res, f);
    return res;
}

FactorizationResult factor_univariate_full(const TropPoly& f)
{
    require_univariate(f, "factor");
    if (f.semiring_mode() != SemiringMode::StandardSupertropical)
        throw Error(ErrorKind::WrongMode, "factor: full factorization needs supertropical mode");
    auto hull = upper_hull(f);
    auto cd = components_univariate(f);
    const auto& bp = cd.breakpoints;
    const std::size_t cells = hull.size();

    std::vector<unsigned> units;
    for (std::size_t i = 0; i + 1 < cells; ++i)
        units.push_back(slope_units(hull[i + 1].exponent[0] - hull[i].exponent[0]));

    FactorizationResult res{LayeredScalar::tangible(hull.back().coeff.value()), {}, FactorRelation::Unfactored,
                            f, std::nullopt, {}};

    bool all_ghost = std::none_of(hull.begin(), hull.end(), [](const Monomial& m) { return m.coeff.is_tangible(); });
    if (all_ghost) {
        res.unit = LayeredScalar::ghost(hull.back().coeff.value());
        res.ghost_intervals.push_back({});
        linear_factors(res, f, hull, bp, units);
        finish(res, f);
        return res;
    }

    const LayeredScalar one;
    for (std::size_t i = 0; i < cells;) {
        if (hull[i].coeff.is_tangible()) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < cells && !hull[j + 1].coeff.is_tangible())
            ++j;
        GhostInterval gi;
        if (i > 0)
            gi.lo = bp[i - 1];
        if (j + 1 < cells)
            gi.hi = bp[j];
        res.ghost_intervals.push_back(gi);
        if (gi.lo && gi.hi) {
            const Rational& a = *gi.lo;
            const Rational& b = *gi.hi;
            res.factors.push_back({TropPoly(1, f.exponent_mode(), f.semiring_mode(),
                                            {{{Rational(2)}, one},
                                             {{Rational(1)}, LayeredScalar::ghost(b)},
                                             {{Rational(0)}, LayeredScalar::tangible(a + b)}}),
                                   1});
            --units[i - 1];
            --units[j];
        } else if (gi.hi) {
            res.factors.push_back({linear(f, one, LayeredScalar::ghost(*gi.hi)), 1});
            --units[j];
        } else {
            res.factors.push_back({linear(f, LayeredScalar::ghost(0), LayeredScalar::tangible(*gi.lo)), 1});
            --units[i - 1];
        }
        i = j + 1;
    }
    linear_factors(res, f, hull, bp, units);
    finish(res, f);
    return res;
}

TropPoly make_monic(const TropPoly& f)
{
    auto lead = f.leading();
    if (!lead.coeff.is_tangible())
        throw Error(ErrorKind::NotMonic, "leading coefficient of " + to_string(f) + " is not tangible");
    std::vector<Monomial> ms;
    for (const auto& [e, c] : f.terms())
        ms.push_back({e, scalar_div(c, lead.coeff, f.semiring_mode())});
    return TropPoly(f.vars(), f.exponent_mode(), f.semiring_mode(), ms);
}

namespace {

// Value of the concave hull of g at an integer exponent, or nullopt
// outside its exponent range.
std::optional<Rational> hull_value(const std::vector<Monomial>& hull, const Rational& k)
{
    if (k < hull.front().exponent[0] || k > hull.back().exponent[0])
        return std::nullopt;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[i + 1];
        if (k <= b.exponent[0]) {
            Rational t = (k - a.exponent[0]) / (b.exponent[0] - a.exponent[0]);
            return Rational(a.coeff.value() + t * (b.coeff.value() - a.coeff.value()));
        }
    }
    return hull.back().coeff.value();
}

std::vector<std::optional<Rational>> residuate(const std::vector<Monomial>& ghull, const std::vector<Monomial>& fhull,
                                               const Rational& t)
{
    std::vector<std::optional<Rational>> u;
    for (Rational i = 0; i <= t; i += 1) {
        std::optional<Rational> best;
        for (const auto& m : fhull) {
            auto gv = hull_value(ghull, i + m.exponent[0]);
            if (!gv) {
                best.reset();
                break;
            }
            Rational v = *gv - m.coeff.value();
            if (!best || v < *best)
                best = v;
        }
        u.push_back(best);
    }
    return u;
}

TropPoly quotient_poly(const TropPoly& like, const std::vector<std::optional<Rational>>& u, const Rational& t)
{
    std::vector<Monomial> ms{{{t}, LayeredScalar()}};
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
        if (u[i])
            ms.push_back({{Rational(static_cast<long>(i))}, LayeredScalar::tangible(*u[i])});
    return TropPoly(1, like.exponent_mode(), like.semiring_mode(), ms);
}

} // namespace

DivisionResult l_divide(const TropPoly& g, const TropPoly& f)
{
    require_univariate(g, "divide");
    require_univariate(f, "divide");
    if (g.semiring_mode() != f.semiring_mode() || g.exponent_mode() != f.exponent_mode())
        throw Error(ErrorKind::ModeMismatch, "divide: operands differ in modes");
    for (const auto* p : {&g, &f}) {
        if (!is_tangibly_spanned(*p))
            throw Error(ErrorKind::NotTangiblySpanned, "divide: " + to_string(*p) + " is not tangibly spanned");
        if (p->leading().coeff.value() != 0)
            throw Error(ErrorKind::NotMonic, "divide: " + to_string(*p) + " is not monic");
    }
    Rational dg = g.leading().exponent[0];
    Rational df = f.leading().exponent[0];
    if (df > dg)
        throw Error(ErrorKind::DegreeOrder, "divide: degree of " + to_string(f) + " exceeds degree of "
                                                + to_string(g));
    Rational t = dg - df;
    auto ghull = upper_hull(g);
    auto fhull = upper_hull(f);
    auto u = residuate(ghull, fhull, t);

    DivisionResult res{quotient_poly(g, u, t), false, FnRelation::Incomparable, std::nullopt, true};
    TropPoly prod = poly_mul(res.quotient, f);
    auto cmp = compare_fn(prod, g);
    res.relation = cmp.relation;
    res.verified = cmp.relation == FnRelation::Equal || cmp.relation == FnRelation::SurpassesNu;
    if (!res.verified)
        res.witness = cmp.surpasses_nu.counterexample;

    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (!u[i])
            continue;
        auto raised = u;
        *raised[i] += 1;
        TropPoly bigger = poly_mul(quotient_poly(g, raised, t), f);
        if (compare_fn(g, bigger).dominates.holds)
            res.optimal = false;
    }
    return res;
}

PrincipalResult principal_generator(const std::vector<TropPoly>& gens)
{
    std::optional<TropPoly> best;
    auto coeff_key = [](const TropPoly& p) {
        std::vector<Rational> key;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
            key.push_back(it->second.value());
        return key;
    };
    for (const auto& g : gens) {
        require_univariate(g, "principal");
        if (!is_tangibly_spanned(g))
            continue;
        TropPoly m = make_monic(g);
        if (!best) {
            best = m;
            continue;
        }
        int c = cmp(m.leading().exponent[0], best->leading().exponent[0]);
        if (c < 0 || (c == 0 && coeff_key(m) < coeff_key(*best)))
            best = m;
    }
    if (!best)
        throw Error(ErrorKind::NoTangibleElement, "principal: no tangibly spanned element among the generators");

    PrincipalResult res{*best, {}};
    for (const auto& g : gens) {
        try {
            res.certificates.push_back(l_divide(make_monic(g), *best));
        } catch (const Error&) {
            DivisionResult failed{TropPoly::constant(1, g.exponent_mode(), g.semiring_mode(), LayeredScalar()),
                                  false, FnRelation::Incomparable, std::nullopt, true};
            res.certificates.push_back(std::move(failed));
        }
    }
    return res;
}

} // namespace laytrop
