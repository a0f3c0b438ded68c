#include "laytrop/poly.hpp"

#include "laytrop/error.hpp"
#include "laytrop/linear.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>

namespace laytrop {

bool MonomialOrder::operator()(const ExponentVec& a, const ExponentVec& b) const
{
    for (std::size_t i = a.size(); i-- > 0;) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

const char* to_string(ExponentMode mode)
{
    switch (mode) {
    case ExponentMode::Polynomial: return "poly";
    case ExponentMode::Laurent: return "laurent";
    case ExponentMode::Rational: return "rational";
    }
    return "?";
}

ExponentMode parse_exponent_mode(std::string_view name)
{
    if (name == "poly" || name == "polynomial")
        return ExponentMode::Polynomial;
    if (name == "laurent")
        return ExponentMode::Laurent;
    if (name == "rational")
        return ExponentMode::Rational;
    throw Error(ErrorKind::InvalidArgument, "unknown exponent mode '" + std::string(name) + "'");
}

bool exponent_allowed(const Rational& e, ExponentMode mode)
{
    switch (mode) {
    case ExponentMode::Polynomial: return is_integer(e) && e >= 0;
    case ExponentMode::Laurent: return is_integer(e);
    case ExponentMode::Rational: return true;
    }
    return false;
}

TropPoly::TropPoly(std::size_t vars, ExponentMode emode, SemiringMode smode, const std::vector<Monomial>& terms)
    : TropPoly(vars, emode, smode)
{
    if (terms.empty())
        throw Error(ErrorKind::InvalidArgument, "a polynomial needs at least one monomial");
    for (const auto& t : terms) {
        if (t.exponent.size() != vars)
            throw Error(ErrorKind::InvalidArgument, "exponent " + exponent_to_string(t.exponent) + " does not have "
                                                        + std::to_string(vars) + " entries");
        for (const auto& e : t.exponent)
            if (!exponent_allowed(e, emode))
                throw Error(ErrorKind::ModeViolation, "exponent " + to_string(e) + " is not allowed in "
                                                          + to_string(emode) + " mode");
        if (t.coeff.is_bottom())
            throw Error(ErrorKind::InvalidArgument, "bottom cannot be a coefficient");
        check_in_mode(t.coeff, smode);
        auto [it, fresh] = terms_.emplace(t.exponent, t.coeff);
        if (!fresh)
            it->second = scalar_add(it->second, t.coeff, smode);
    }
}

TropPoly TropPoly::constant(std::size_t vars, ExponentMode emode, SemiringMode smode, LayeredScalar c)
{
    return TropPoly(vars, emode, smode, {{ExponentVec(vars, Rational(0)), std::move(c)}});
}

TropPoly TropPoly::monomial(ExponentMode emode, SemiringMode smode, ExponentVec e, LayeredScalar c)
{
    std::size_t n = e.size();
    return TropPoly(n, emode, smode, {{std::move(e), std::move(c)}});
}

std::vector<Monomial> TropPoly::monomials() const
{
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        out.push_back({e, c});
    return out;
}

Monomial TropPoly::leading() const
{
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

TropPoly TropPoly::with_exponent_mode(ExponentMode emode) const
{
    return TropPoly(vars_, emode, smode_, monomials());
}

bool operator==(const TropPoly& a, const TropPoly& b)
{
    return a.vars_ == b.vars_ && a.emode_ == b.emode_ && a.smode_ == b.smode_ && a.terms_ == b.terms_;
}

namespace {

void check_compatible(const TropPoly& f, const TropPoly& g, const char* op)
{
    if (f.vars() != g.vars() || f.exponent_mode() != g.exponent_mode() || f.semiring_mode() != g.semiring_mode())
        throw Error(ErrorKind::ModeMismatch, std::string(op) + ": operands differ in variables or modes ("
                                                 + to_string(f) + " vs " + to_string(g) + ")");
}

ExponentVec add_exponents(const ExponentVec& a, const ExponentVec& b)
{
    ExponentVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

} // namespace

TropPoly poly_add(const TropPoly& f, const TropPoly& g)
{
    check_compatible(f, g, "add");
    auto terms = f.monomials();
    auto more = g.monomials();
    terms.insert(terms.end(), more.begin(), more.end());
    return TropPoly(f.vars(), f.exponent_mode(), f.semiring_mode(), terms);
}

TropPoly poly_mul(const TropPoly& f, const TropPoly& g)
{
    check_compatible(f, g, "mul");
    std::vector<Monomial> terms;
    terms.reserve(f.size() * g.size());
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : g.terms())
            terms.push_back({add_exponents(e1, e2), scalar_mul(c1, c2, f.semiring_mode())});
    return TropPoly(f.vars(), f.exponent_mode(), f.semiring_mode(), terms);
}

TropPoly poly_pow(const TropPoly& f, unsigned k)
{
    TropPoly r = TropPoly::constant(f.vars(), f.exponent_mode(), f.semiring_mode(), LayeredScalar());
    for (unsigned i = 0; i < k; ++i)
        r = poly_mul(r, f);
    return r;
}

TropPoly poly_product(const std::vector<TropPoly>& factors)
{
    if (factors.empty())
        throw Error(ErrorKind::InvalidArgument, "empty product");
    TropPoly r = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        r = poly_mul(r, factors[i]);
    return r;
}

LayeredScalar monomial_value(const ExponentVec& e, const LayeredScalar& coeff, const Point& a, SemiringMode mode)
{
    Rational v = coeff.value();
    Layer k = coeff.layer();
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0)
            continue;
        const auto& x = a[j];
        if (x.is_bottom())
            throw Error(ErrorKind::InvalidArgument, "point entries cannot be bottom");
        v += e[j] * x.value();
        if (x.layer().is_one())
            continue;
        if (!is_integer(e[j]) || e[j] < 0)
            throw Error(ErrorKind::RationalPowerOfGhost, "exponent " + to_string(e[j]) + " applied to non-tangible "
                                                             + to_string(x, mode));
        k = layer_mul(k, layer_pow(x.layer(), e[j].get_num(), mode), mode);
    }
    return {v, k};
}

LayeredScalar evaluate(const TropPoly& f, const Point& a)
{
    if (a.size() != f.vars())
        throw Error(ErrorKind::InvalidArgument, "point has " + std::to_string(a.size()) + " entries, expected "
                                                    + std::to_string(f.vars()));
    LayeredScalar acc = LayeredScalar::bottom();
    for (const auto& [e, c] : f.terms())
        acc = scalar_add(acc, monomial_value(e, c, a, f.semiring_mode()), f.semiring_mode());
    return acc;
}

Point tangible_point(const std::vector<Rational>& x)
{
    Point p;
    p.reserve(x.size());
    for (const auto& v : x)
        p.push_back(LayeredScalar::tangible(v));
    return p;
}

LayeredScalar evaluate_at(const TropPoly& f, const std::vector<Rational>& x)
{
    return evaluate(f, tangible_point(x));
}

const char* to_string(MonomialStatus s)
{
    switch (s) {
    case MonomialStatus::Essential: return "essential";
    case MonomialStatus::Boundary: return "boundary";
    case MonomialStatus::Inessential: return "inessential";
    }
    return "?";
}

namespace {

// h(x) - h'(x) rel 0 with h = (e, c), h' = (e2, c2).
LinearConstraint difference(const ExponentVec& e, const Rational& c, const ExponentVec& e2, const Rational& c2,
                            Relation rel)
{
    LinearConstraint lc;
    lc.coeffs.resize(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        lc.coeffs[i] = e[i] - e2[i];
    lc.constant = c - c2;
    lc.relation = rel;
    return lc;
}

std::vector<LinearConstraint> dominance_system(const std::vector<Monomial>& ms, std::size_t idx, Relation rel)
{
    std::vector<LinearConstraint> sys;
    for (std::size_t j = 0; j < ms.size(); ++j)
        if (j != idx)
            sys.push_back(difference(ms[idx].exponent, ms[idx].coeff.value(), ms[j].exponent, ms[j].coeff.value(), rel));
    return sys;
}

} // namespace

EssentialReport essential_support(const TropPoly& f)
{
    auto ms = f.monomials();
    const std::size_t n = f.vars();
    std::vector<MonomialStatus> status(ms.size());
    std::vector<std::optional<std::vector<Rational>>> witness(ms.size());
    bool exact = true;

    for (std::size_t i = 0; i < ms.size(); ++i) {
        auto strict = find_feasible_point(dominance_system(ms, i, Relation::Strict), n);
        if (strict) {
            status[i] = MonomialStatus::Essential;
            witness[i] = strict;
            continue;
        }
        auto weak = find_feasible_point(dominance_system(ms, i, Relation::NonStrict), n);
        if (!weak || f.semiring_mode() == SemiringMode::MaxPlus) {
            status[i] = MonomialStatus::Inessential;
            continue;
        }
        std::vector<Monomial> rest;
        for (std::size_t j = 0; j < ms.size(); ++j)
            if (j != i)
                rest.push_back(ms[j]);
        TropPoly fh(n, f.exponent_mode(), f.semiring_mode(), rest);
        bool same;
        if (n == 1) {
            same = compare_fn(f, fh).equal.holds;
        } else {
            same = evaluate_at(f, *weak) == evaluate_at(fh, *weak);
            exact = false;
        }
        status[i] = same ? MonomialStatus::Inessential : MonomialStatus::Boundary;
    }

    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (status[i] == MonomialStatus::Essential)
            kept.push_back(ms[i]);
    TropPoly es(n, f.exponent_mode(), f.semiring_mode(), kept);
    return {std::move(ms), std::move(status), std::move(witness), std::move(es), exact};
}

TropPoly essential_part(const TropPoly& f)
{
    return essential_support(f).essential_part;
}

std::vector<ExponentVec> supp(const TropPoly& f)
{
    std::vector<ExponentVec> out;
    for (const auto& [e, c] : f.terms())
        out.push_back(e);
    return out;
}

std::vector<ExponentVec> tsupp(const TropPoly& f)
{
    std::vector<ExponentVec> out;
    for (const auto& [e, c] : f.terms())
        if (c.is_tangible())
            out.push_back(e);
    return out;
}

bool is_tangibly_spanned(const TropPoly& f)
{
    return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second.is_tangible(); });
}

const char* to_string(FnRelation r)
{
    switch (r) {
    case FnRelation::Equal: return "Equal";
    case FnRelation::SurpassesNu: return "SurpassesNu";
    case FnRelation::NuEquivalent: return "NuEquivalent";
    case FnRelation::Surpasses: return "Surpasses";
    case FnRelation::StrictlyDominates: return "StrictlyDominates";
    case FnRelation::Dominates: return "Dominates";
    case FnRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

namespace {

struct PointLess {
    bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Rational& x, const Rational& y) { return x < y; });
    }
};

constexpr std::size_t kVertexCap = 1500;

void univariate_points(const std::vector<Monomial>& all, std::set<std::vector<Rational>, PointLess>& out)
{
    std::set<Rational, std::less<>> ties;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            Rational de = all[i].exponent[0] - all[j].exponent[0];
            if (de == 0)
                continue;
            ties.insert(Rational((all[j].coeff.value() - all[i].coeff.value()) / de));
        }
    if (ties.empty()) {
        out.insert({Rational(0)});
        return;
    }
    std::vector<Rational> t(ties.begin(), ties.end());
    out.insert({t.front() - 1});
    out.insert({t.back() + 1});
    for (std::size_t i = 0; i < t.size(); ++i) {
        out.insert({t[i]});
        if (i + 1 < t.size())
            out.insert({Rational((t[i] + t[i + 1]) / 2)});
    }
}

// Points where a pair of monomials of one polynomial (or one from each)
// ties on top.
void tie_witnesses(const std::vector<std::vector<Monomial>>& groups, std::size_t n,
                   std::set<std::vector<Rational>, PointLess>& out)
{
    std::vector<Monomial> all;
    std::vector<std::size_t> owner;
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (const auto& m : groups[g]) {
            all.push_back(m);
            owner.push_back(g);
        }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i].exponent == all[j].exponent)
                continue;
            std::vector<LinearConstraint> sys;
            sys.push_back(difference(all[i].exponent, all[i].coeff.value(), all[j].exponent, all[j].coeff.value(),
                                     Relation::Equal));
            for (std::size_t k = 0; k < all.size(); ++k) {
                if (k == i || k == j)
                    continue;
                if (owner[i] == owner[j] && owner[k] != owner[i])
                    continue;
                sys.push_back(difference(all[i].exponent, all[i].coeff.value(), all[k].exponent,
                                         all[k].coeff.value(), Relation::NonStrict));
            }
            if (auto w = find_feasible_point(sys, n))
                out.insert(*w);
        }

    // Vertices where n+1 monomials tie.
    std::size_t produced = 0;
    std::vector<std::size_t> idx(n + 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
        if (produced >= kVertexCap)
            return;
        if (depth == n + 1) {
            std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
            std::vector<Rational> b(n);
            const auto& h0 = all[idx[0]];
            for (std::size_t r = 0; r < n; ++r) {
                const auto& h = all[idx[r + 1]];
                for (std::size_t c = 0; c < n; ++c)
                    a[r][c] = h0.exponent[c] - h.exponent[c];
                b[r] = h.coeff.value() - h0.coeff.value();
            }
            if (auto x = solve_square(a, b)) {
                out.insert(*x);
                ++produced;
            }
            return;
        }
        for (std::size_t k = start; k < all.size() && produced < kVertexCap; ++k) {
            idx[depth] = k;
            rec(depth + 1, k + 1);
        }
    };
    if (all.size() >= n + 1)
        rec(0, 0);
}


// Exact decomposition of the plane for n = 2. Each polynomial splits the
// plane into closed convex cells where one monomial is on top; overlaying
// the cells of all inputs and cutting along the lines where two inputs are
// nu-equal leaves pieces on whose relatively open faces every layer and
// every comparison is constant.
using Vertex = std::array<Rational, 2>;

struct HalfPlane { // a0 x0 + a1 x1 + b >= 0
    Rational a0, a1, b;
    Rational at(const Vertex& v) const { return a0 * v[0] + a1 * v[1] + b; }
};

std::vector<Vertex> clip(const std::vector<Vertex>& poly, const HalfPlane& h)
{
    std::vector<Vertex> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex& cur = poly[i];
        const Vertex& nxt = poly[(i + 1) % n];
        Rational vc = h.at(cur), vn = h.at(nxt);
        if (vc >= 0)
            out.push_back(cur);
        if ((vc > 0 && vn < 0) || (vc < 0 && vn > 0)) {
            Rational t = vc / (vc - vn);
            out.push_back({Rational(cur[0] + t * (nxt[0] - cur[0])), Rational(cur[1] + t * (nxt[1] - cur[1]))});
        }
    }
    std::vector<Vertex> dedup;
    for (auto& v : out)
        if (dedup.empty() || dedup.back() != v)
            dedup.push_back(std::move(v));
    while (dedup.size() > 1 && dedup.front() == dedup.back())
        dedup.pop_back();
    return dedup;
}

HalfPlane above(const Monomial& k, const Monomial& j)
{
    return {k.exponent[0] - j.exponent[0], k.exponent[1] - j.exponent[1], k.coeff.value() - j.coeff.value()};
}

struct Region {
    std::size_t monomial;
    std::vector<Vertex> poly;
    std::vector<HalfPlane> active;
};

std::vector<Region> top_regions(const std::vector<Monomial>& ms, const std::vector<Vertex>& box)
{
    std::vector<Region> out;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        std::vector<Vertex> poly = box;
        for (std::size_t j = 0; j < ms.size() && !poly.empty(); ++j)
            if (j != k)
                poly = clip(poly, above(ms[k], ms[j]));
        if (poly.empty())
            continue;
        Region r{k, poly, {}};
        for (std::size_t j = 0; j < ms.size(); ++j) {
            if (j == k)
                continue;
            auto h = above(ms[k], ms[j]);
            if (std::any_of(poly.begin(), poly.end(), [&](const Vertex& v) { return h.at(v) == 0; }))
                r.active.push_back(h);
        }
        out.push_back(std::move(r));
    }
    return out;
}

struct Piece {
    std::vector<Vertex> poly;
    std::vector<std::size_t> top; // top monomial per input
};

void planar_points(const std::vector<std::vector<Monomial>>& groups, std::set<std::vector<Rational>, PointLess>& out)
{
    Integer den = 1;
    Rational emax = 0, cmax = 0;
    for (const auto& g : groups)
        for (const auto& m : g) {
            for (const auto& e : m.exponent) {
                Integer d = e.get_den();
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
                emax = std::max(emax, Rational(abs(e)));
            }
            cmax = std::max(cmax, Rational(abs(m.coeff.value())));
        }
    // every vertex of the arrangement lies strictly inside the box
    Rational bound = Rational(den * den) * 16 * (2 * emax + 1) * (2 * cmax + 1) + 1;
    std::vector<Vertex> box{{-bound, -bound}, {bound, -bound}, {bound, bound}, {-bound, bound}};

    std::vector<Piece> pieces{{box, {}}};
    std::vector<std::size_t> used;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        if (groups[gi].empty())
            continue;
        used.push_back(gi);
        auto regions = top_regions(groups[gi], box);
        std::vector<Piece> next;
        for (const auto& p : pieces)
            for (const auto& r : regions) {
                auto q = p.poly;
                for (const auto& h : r.active) {
                    q = clip(q, h);
                    if (q.empty())
                        break;
                }
                if (q.empty())
                    continue;
                Piece np{std::move(q), p.top};
                np.top.push_back(r.monomial);
                next.push_back(std::move(np));
            }
        pieces = std::move(next);
    }
    for (std::size_t a = 0; a < used.size(); ++a)
        for (std::size_t b = a + 1; b < used.size(); ++b) {
            std::vector<Piece> next;
            for (auto& p : pieces) {
                auto h = above(groups[used[a]][p.top[a]], groups[used[b]][p.top[b]]);
                HalfPlane neg{-h.a0, -h.a1, -h.b};
                auto up = clip(p.poly, h);
                auto down = clip(p.poly, neg);
                if (!up.empty())
                    next.push_back({std::move(up), p.top});
                if (!down.empty())
                    next.push_back({std::move(down), p.top});
            }
            pieces = std::move(next);
        }
    for (const auto& p : pieces) {
        Rational cx = 0, cy = 0;
        const std::size_t n = p.poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& v = p.poly[i];
            const auto& w = p.poly[(i + 1) % n];
            out.insert({v[0], v[1]});
            out.insert({Rational((v[0] + w[0]) / 2), Rational((v[1] + w[1]) / 2)});
            cx += v[0];
            cy += v[1];
        }
        out.insert({Rational(cx / Rational(n)), Rational(cy / Rational(n))});
    }
}

} // namespace

std::vector<std::vector<Rational>> comparison_points(const std::vector<const TropPoly*>& polys,
                                                     const CompareOptions& opts, bool& exact)
{
    const std::size_t n = polys.front()->vars();
    std::set<std::vector<Rational>, PointLess> pts;
    for (const auto& p : opts.extra_points)
        pts.insert(p);
    exact = true;
    if (n == 0) {
        pts.insert({});
        return {pts.begin(), pts.end()};
    }

    std::vector<std::vector<Monomial>> groups;
    std::vector<Monomial> all;
    Rational spread = 10;
    for (const auto* p : polys) {
        groups.push_back(p->monomials());
        for (const auto& m : groups.back()) {
            all.push_back(m);
            spread = std::max(spread, Rational(abs(m.coeff.value()) * 2));
        }
    }

    if (n == 1) {
        univariate_points(all, pts);
        return {pts.begin(), pts.end()};
    }

    if (n == 2) {
        planar_points(groups, pts);
    } else {
        exact = false;
        tie_witnesses(groups, n, pts);
    }
    std::mt19937_64 rng(opts.seed);
    long bound = static_cast<long>(spread.get_num().get_si() / spread.get_den().get_si()) + 1;
    std::uniform_int_distribution<long> num(-8 * bound, 8 * bound);
    for (std::size_t s = 0; s < opts.samples; ++s) {
        std::vector<Rational> x(n);
        for (auto& v : x) {
            v = Rational(num(rng), 8);
            v.canonicalize();
        }
        pts.insert(std::move(x));
    }
    return {pts.begin(), pts.end()};
}

Comparison compare_fn(const TropPoly& f, const TropPoly& g, const CompareOptions& opts)
{
    check_compatible(f, g, "compare");
    Comparison res;
    auto pts = comparison_points({&f, &g}, opts, res.exact);
    const SemiringMode mode = f.semiring_mode();
    auto note = [](Facet& facet, bool ok, const std::vector<Rational>& x) {
        if (!ok && facet.holds) {
            facet.holds = false;
            facet.counterexample = x;
        }
    };
    for (const auto& x : pts) {
        auto a = evaluate_at(f, x);
        auto b = evaluate_at(g, x);
        auto o = nu_compare(a, b);
        note(res.equal, a == b, x);
        note(res.nu_equivalent, o == 0, x);
        note(res.surpasses, surpasses(a, b, mode), x);
        note(res.surpasses_nu, surpasses_nu(a, b, mode), x);
        note(res.dominates, o >= 0, x);
        note(res.strictly_dominates, o > 0, x);
    }
    res.points_checked = pts.size();
    if (res.equal.holds)
        res.relation = FnRelation::Equal;
    else if (res.surpasses_nu.holds)
        res.relation = FnRelation::SurpassesNu;
    else if (res.nu_equivalent.holds)
        res.relation = FnRelation::NuEquivalent;
    else if (res.surpasses.holds)
        res.relation = FnRelation::Surpasses;
    else if (res.strictly_dominates.holds)
        res.relation = FnRelation::StrictlyDominates;
    else if (res.dominates.holds)
        res.relation = FnRelation::Dominates;
    else
        res.relation = FnRelation::Incomparable;
    return res;
}

std::vector<Monomial> upper_hull(const TropPoly& f)
{
    if (f.vars() != 1)
        throw Error(ErrorKind::NotUnivariate, "expected a univariate polynomial, got " + to_string(f));
    std::vector<Monomial> hull;
    auto cross = [](const Monomial& o, const Monomial& a, const Monomial& b) {
        Rational ax = a.exponent[0] - o.exponent[0], ay = a.coeff.value() - o.coeff.value();
        Rational bx = b.exponent[0] - o.exponent[0], by = b.coeff.value() - o.coeff.value();
        return Rational(ax * by - ay * bx);
    };
    for (const auto& [e, c] : f.terms()) {
        Monomial m{e, c};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), m) >= 0)
            hull.pop_back();
        hull.push_back(std::move(m));
    }
    return hull;
}

CellDescription components_univariate(const TropPoly& f)
{
    auto hull = upper_hull(f);
    CellDescription cd;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        Rational r = (hull[i].coeff.value() - hull[i + 1].coeff.value())
                     / (hull[i + 1].exponent[0] - hull[i].exponent[0]);
        r.canonicalize();
        cd.breakpoints.push_back(r);
        cd.breakpoint_layers.push_back(evaluate_at(f, {r}).layer());
    }
    const auto& bp = cd.breakpoints;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Cell cell;
        if (i > 0)
            cell.lo = bp[i - 1];
        if (i < bp.size())
            cell.hi = bp[i];
        cell.exponent = hull[i].exponent[0];
        cell.coeff = hull[i].coeff;
        Rational mid;
        if (cell.lo && cell.hi)
            mid = (*cell.lo + *cell.hi) / 2;
        else if (cell.lo)
            mid = *cell.lo + 1;
        else if (cell.hi)
            mid = *cell.hi - 1;
        cell.interior_layer = evaluate_at(f, {mid}).layer();
        cd.cells.push_back(std::move(cell));
    }
    return cd;
}

Layer layering_map(const TropPoly& f, const Point& a)
{
    return evaluate(f, a).layer();
}

Point path_point(const Point& a, const Point& b, const Rational& t)
{
    if (t < 0 || t > 1)
        throw Error(ErrorKind::InvalidArgument, "path parameter " + to_string(t) + " outside [0,1]");
    if (a.size() != b.size())
        throw Error(ErrorKind::InvalidArgument, "path endpoints differ in dimension");
    Point p;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_tangible() || !b[i].is_tangible())
            throw Error(ErrorKind::InvalidArgument, "path endpoints must be tangible");
        Rational v = t * a[i].value() + (1 - t) * b[i].value();
        v.canonicalize();
        p.push_back(LayeredScalar::tangible(v));
    }
    return p;
}

std::string variable_name(std::size_t index, std::size_t vars)
{
    return vars == 1 ? std::string("x") : "x" + std::to_string(index + 1);
}

std::string exponent_to_string(const ExponentVec& e)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            s += ",";
        s += to_string(e[i]);
    }
    return s + ")";
}

std::string to_string(const TropPoly& f)
{
    std::string out;
    const auto& terms = f.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            std::string v = variable_name(i, f.vars());
            if (e[i] != 1)
                v += (is_integer(e[i]) && e[i] > 0) ? "^" + to_string(e[i]) : "^(" + to_string(e[i]) + ")";
            parts.push_back(std::move(v));
        }
        if (parts.empty() || !(c.is_tangible() && c.value() == 0))
            parts.insert(parts.begin(), to_string(c, f.semiring_mode()));
        std::string term;
        for (std::size_t i = 0; i < parts.size(); ++i)
            term += (i ? "*" : "") + parts[i];
        if (!out.empty())
            out += " + ";
        out += term;
    }
    return out;
}

} // namespace laytrop
