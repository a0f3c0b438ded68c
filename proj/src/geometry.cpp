#include "laytrop/geometry.hpp"

#include "laytrop/error.hpp"
#include "laytrop/linear.hpp"

#include <algorithm>
#include <functional>

namespace laytrop {

bool Hyperplane::contains(const std::vector<Rational>& x) const
{
    Rational s = 0;
    for (std::size_t i = 0; i < normal.size(); ++i)
        s += normal[i] * x[i];
    return s == offset;
}

std::vector<ExponentVec> corner_support(const TropPoly& f, const Point& a)
{
    auto top = evaluate(f, a);
    std::vector<ExponentVec> out;
    for (const auto& [e, c] : f.terms())
        if (nu_equal(monomial_value(e, c, a, f.semiring_mode()), top))
            out.push_back(e);
    return out;
}

bool is_corner_root(const TropPoly& f, const Point& a)
{
    return corner_support(f, a).size() >= 2;
}

bool is_ghost_root(const TropPoly& f, const Point& a)
{
    return evaluate(f, a).layer() > Layer::one();
}

bool in_ell_locus(const TropPoly& f, const Point& a, const Layer& ell)
{
    return is_ell_ghost(evaluate(f, a).layer(), ell, f.semiring_mode());
}

std::vector<Rational> corner_roots_univariate(const TropPoly& f)
{
    return components_univariate(f).breakpoints;
}

Hyperplane corner_locus_binomial(const TropPoly& b)
{
    if (b.size() != 2)
        throw Error(ErrorKind::NotBinomial, "corner locus needs a binomial, got " + to_string(b));
    auto ms = b.monomials();
    Hyperplane h;
    for (std::size_t i = 0; i < b.vars(); ++i)
        h.normal.push_back(ms[1].exponent[i] - ms[0].exponent[i]);
    h.offset = ms[0].coeff.value() - ms[1].coeff.value();
    return h;
}

namespace {

LinearConstraint tie_row(const Monomial& a, const Monomial& b, Relation rel)
{
    LinearConstraint c;
    for (std::size_t i = 0; i < a.exponent.size(); ++i)
        c.coeffs.push_back(a.exponent[i] - b.exponent[i]);
    c.constant = a.coeff.value() - b.coeff.value();
    c.relation = rel;
    return c;
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
}

// Lexicographically smallest vertex of the face where ms[i] = ms[j] is on top.
std::optional<std::vector<Rational>> smallest_vertex(const std::vector<Monomial>& ms, std::size_t i, std::size_t j,
                                                     std::size_t n)
{
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < ms.size(); ++k)
        if (k != i && k != j)
            others.push_back(k);
    std::optional<std::vector<Rational>> best;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() + 1 == n) {
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            auto row = [&](const Monomial& p, const Monomial& q) {
                auto c = tie_row(p, q, Relation::Equal);
                a.push_back(c.coeffs);
                b.push_back(-c.constant);
            };
            row(ms[i], ms[j]);
            for (auto k : pick)
                row(ms[i], ms[k]);
            auto x = solve_square(a, b);
            if (!x)
                return;
            for (auto k : others)
                if (!satisfies(tie_row(ms[i], ms[k], Relation::NonStrict), *x))
                    return;
            if (!best || lex_less(*x, *best))
                best = x;
            return;
        }
        for (std::size_t t = start; t < others.size(); ++t) {
            pick.push_back(others[t]);
            rec(t + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return best;
}

} // namespace

Point find_corner_root(const TropPoly& f)
{
    auto rep = essential_support(f);
    std::vector<Monomial> ess;
    for (std::size_t k = 0; k < rep.monomials.size(); ++k)
        if (rep.status[k] == MonomialStatus::Essential)
            ess.push_back(rep.monomials[k]);
    if (ess.size() < 2)
        throw Error(ErrorKind::SingleMonomial, "no corner root: " + to_string(f) + " has one essential monomial");
    const auto& ms = rep.monomials;
    const std::size_t n = f.vars();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (rep.status[i] != MonomialStatus::Essential)
            continue;
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if (rep.status[j] != MonomialStatus::Essential)
                continue;
            auto x = smallest_vertex(ms, i, j, n);
            if (!x) {
                std::vector<LinearConstraint> sys{tie_row(ms[i], ms[j], Relation::Equal)};
                for (std::size_t k = 0; k < ms.size(); ++k)
                    if (k != i && k != j)
                        sys.push_back(tie_row(ms[i], ms[k], Relation::NonStrict));
                x = find_feasible_point(sys, n);
            }
            if (x) {
                auto p = tangible_point(*x);
                if (is_corner_root(f, p))
                    return p;
            }
        }
    }
    throw Error(ErrorKind::SingleMonomial, "no corner root found for " + to_string(f));
}

bool in_corner_point_ideal(const TropPoly& f, const Point& a)
{
    return is_corner_root(f, a);
}

bool in_ghost_point_ideal(const TropPoly& f, const Point& a)
{
    return is_ghost_root(f, a);
}

CoverResult is_covered_univariate(const TropPoly& f, const std::vector<TropPoly>& gens)
{
    if (f.vars() != 1)
        throw Error(ErrorKind::NotUnivariate, "covering is decided for univariate polynomials only");
    auto cells = components_univariate(f).cells;
    CoverResult res;
    res.cover.assign(cells.size(), std::nullopt);
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        auto inside = [&](const Rational& x) { return (!cell.lo || x >= *cell.lo) && (!cell.hi || x <= *cell.hi); };
        for (std::size_t gi = 0; gi < gens.size() && !res.cover[ci]; ++gi) {
            const auto& g = gens[gi];
            if (g.vars() != 1 || g.semiring_mode() != f.semiring_mode())
                throw Error(ErrorKind::ModeMismatch, "covering generator " + to_string(g) + " does not match "
                                                         + to_string(f));
            bool exact = true;
            auto pts = comparison_points({&f, &g}, {}, exact);
            if (cell.lo)
                pts.push_back({*cell.lo});
            if (cell.hi)
                pts.push_back({*cell.hi});
            bool ok = true;
            for (const auto& x : pts) {
                if (!inside(x[0]))
                    continue;
                if (evaluate_at(g, x).layer() > evaluate_at(f, x).layer()) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                res.cover[ci] = gi;
        }
        if (!res.cover[ci] && res.covered) {
            res.covered = false;
            res.failing_cell = ci;
        }
    }
    return res;
}

} // namespace laytrop
