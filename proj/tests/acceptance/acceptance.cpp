#include "laytrop/binomial.hpp"
#include "laytrop/error.hpp"
#include "laytrop/factor.hpp"
#include "laytrop/geometry.hpp"
#include "laytrop/puiseux.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using namespace laytrop;
using th::P;
using th::Q;

namespace {

const auto MP = SemiringMode::MaxPlus;
const auto ST = SemiringMode::StandardSupertropical;
const auto LQ = SemiringMode::LayeredQ;

/// Collects failures for one criterion; keeps the first few messages.
struct Tally {
    long checks = 0;
    long failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (ok)
            return;
        if (failures++ == 0)
            first = what;
    }
};

std::string str(const TropPoly& f)
{
    return to_string(f);
}

std::string str(const std::vector<Rational>& x)
{
    std::string s;
    for (const auto& v : x)
        s += (s.empty() ? "" : ",") + to_string(v);
    return s;
}

TropPoly lin(const Rational& r)
{
    return TropPoly(1, ExponentMode::Polynomial, ST, {{Q({1}), LayeredScalar()}, {Q({0}), LayeredScalar::tangible(r)}});
}

TropPoly product_of_roots(const std::vector<Rational>& roots)
{
    TropPoly p = TropPoly::constant(1, ExponentMode::Polynomial, ST, LayeredScalar());
    for (const auto& r : roots)
        p = poly_mul(p, lin(r));
    return p;
}

std::vector<Rational> distinct_roots(oracle::Rng& rng, std::size_t k)
{
    std::set<Rational, std::less<>> s;
    while (s.size() < k)
        s.insert(rng.rational(-8, 8, 2));
    return {s.begin(), s.end()};
}

void c1_axioms(Tally& t)
{
    oracle::Rng rng(1001);
    for (auto mode : {MP, ST, LQ})
        for (int i = 0; i < 10000; ++i) {
            auto a = oracle::random_scalar(rng, mode, -4, 4);
            auto b = oracle::random_scalar(rng, mode, -4, 4);
            auto c = oracle::random_scalar(rng, mode, -4, 4);
            auto add = [&](const LayeredScalar& x, const LayeredScalar& y) { return scalar_add(x, y, mode); };
            auto mul = [&](const LayeredScalar& x, const LayeredScalar& y) { return scalar_mul(x, y, mode); };
            std::string tag = to_string(mode) + std::string(" ") + to_string(a, mode) + " " + to_string(b, mode) + " "
                              + to_string(c, mode);
            t.expect(add(a, add(b, c)) == add(add(a, b), c), "add assoc " + tag);
            t.expect(mul(a, mul(b, c)) == mul(mul(a, b), c), "mul assoc " + tag);
            t.expect(add(a, b) == add(b, a), "add comm " + tag);
            t.expect(mul(a, b) == mul(b, a), "mul comm " + tag);
            t.expect(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "distrib " + tag);
            t.expect(mul(a, b).layer() == layer_mul(a.layer(), b.layer(), mode), "s(ab) " + tag);
            // s(a+b) against the summands that reach the nu-maximum
            auto s = add(a, b).layer();
            if (nu_compare(a, b) >= 0)
                t.expect(s >= a.layer(), "s(a+b) >= s(a) " + tag);
            if (nu_compare(b, a) >= 0)
                t.expect(s >= b.layer(), "s(a+b) >= s(b) " + tag);
        }
}

void c2_product_identity(Tally& t)
{
    oracle::Rng rng(1002);
    auto ghost = [](const LayeredScalar& x) { return LayeredScalar::ghost(x.value()); };
    for (int i = 0; i < 1000; ++i) {
        auto a1 = LayeredScalar::tangible(rng.rational(-20, 20));
        auto a2 = LayeredScalar::tangible(rng.rational(-20, 20));
        auto lhs = scalar_mul(scalar_add(a1, ghost(a2), ST), scalar_add(ghost(a1), a2, ST), ST);
        auto sq = scalar_add(scalar_add(scalar_mul(a1, a1, ST), scalar_mul(a1, a2, ST), ST), scalar_mul(a2, a2, ST), ST);
        t.expect(lhs == ghost(sq), to_string(a1, ST) + " " + to_string(a2, ST));
    }
}

void c3_permanent(Tally& t)
{
    oracle::Rng rng(1003);
    auto random_f = [&](std::size_t n, SemiringMode mode) {
        std::vector<Monomial> ms;
        long k = rng.integer(1, 3);
        for (long i = 0; i < k; ++i) {
            ExponentVec e;
            for (std::size_t j = 0; j < n; ++j)
                e.emplace_back(rng.integer(0, 3));
            ms.push_back({e, LayeredScalar::tangible(rng.integer(-5, 5))});
        }
        return TropPoly(n, ExponentMode::Polynomial, mode, ms);
    };
    for (int i = 0; i < 200; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
        std::size_t m = static_cast<std::size_t>(rng.integer(2, 4));
        std::vector<TropPoly> fs, fl;
        for (std::size_t j = 0; j < m; ++j) {
            fs.push_back(random_f(n, ST));
            fl.push_back(TropPoly(n, ExponentMode::Polynomial, LQ, fs.back().monomials()));
        }
        std::string tag;
        for (const auto& f : fs)
            tag += "[" + str(f) + "]";
        auto s = permanent_factors(fs);
        t.expect(s.comparison.relation == FnRelation::Equal, "supertropical not Equal " + tag);
        if (n == 1)
            t.expect(s.comparison.exact, "univariate comparison not exact " + tag);
        auto l = permanent_factors(fl);
        t.expect(l.comparison.surpasses_nu.holds, "layered not surpassing-nu " + tag);
    }
    std::vector<TropPoly> ns{P("x1", ST, 2), P("x2", ST, 2), P("0", ST, 2)};
    std::vector<TropPoly> nl{P("x1", LQ, 2), P("x2", LQ, 2), P("0", LQ, 2)};
    t.expect(permanent_factors(ns).comparison.relation == FnRelation::Equal, "fixture x1,x2,0 supertropical");
    t.expect(permanent_factors(nl).comparison.relation == FnRelation::SurpassesNu, "fixture x1,x2,0 layered");
}

void c4_roots(Tally& t)
{
    auto r = corner_roots_univariate(th::PR("x^(5/3) + 7", ST));
    t.expect(r == std::vector<Rational>{oracle::q(21, 5)}, "roots of x^(5/3)+7");
    auto f = factor_univariate_full(P("x^2 + 5v*x + 7", ST));
    t.expect(f.ghost_intervals.size() == 1 && f.ghost_intervals[0].lo && f.ghost_intervals[0].hi
                 && *f.ghost_intervals[0].lo == 2 && *f.ghost_intervals[0].hi == 5,
             "ghost interval of x^2+5v*x+7");
    for (long k = 1; k <= 6; ++k) {
        TropPoly g(2, ExponentMode::Polynomial, LQ,
                   {{{Rational(k), Rational(0)}, LayeredScalar()}, {Q({0, 1}), LayeredScalar()}, {Q({0, 0}), LayeredScalar()}});
        oracle::Rng rng(1004 + k);
        for (int s = 0; s < 20; ++s) {
            // all three tie at the origin, two tie along x1 < 0, x2 = 0, none elsewhere
            Rational u = rng.rational(1, 5);
            t.expect(layering_map(g, tangible_point(Q({0, 0}))) == Layer(Rational(3)), "theta = 3, k = " + std::to_string(k));
            t.expect(layering_map(g, tangible_point({-u, Rational(0)})) == Layer(Rational(2)),
                     "theta = 2, k = " + std::to_string(k));
            t.expect(layering_map(g, tangible_point({u, Rational(k) * u + 1})) == Layer(Rational(1)),
                     "theta = 1, k = " + std::to_string(k));
        }
    }
}

TropPoly random_uni(oracle::Rng& rng, std::size_t max_terms)
{
    std::vector<Monomial> ms;
    long k = rng.integer(1, static_cast<long>(max_terms));
    for (long i = 0; i < k; ++i)
        ms.push_back({Q({rng.integer(0, 4)}), LayeredScalar::tangible(rng.integer(-5, 5))});
    return TropPoly(1, ExponentMode::Polynomial, ST, ms);
}

void c5_powers(Tally& t)
{
    oracle::Rng rng(1005);
    for (int i = 0; i < 100; ++i) {
        auto s = poly_add(random_uni(rng, 4), random_uni(rng, 4));
        auto roots = oracle::corner_roots(s);
        t.expect(corner_roots_univariate(s) == roots, "roots of " + str(s));
        for (unsigned k = 2; k <= 4; ++k)
            t.expect(oracle::corner_roots(poly_pow(s, k)) == roots && corner_roots_univariate(poly_pow(s, k)) == roots,
                     "power " + std::to_string(k) + " of " + str(s));
    }
}

void c6_essential(Tally& t)
{
    oracle::Rng rng(1006);
    for (int i = 0; i < 500; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
        std::vector<Monomial> ms;
        long k = rng.integer(1, 6);
        for (long j = 0; j < k; ++j) {
            ExponentVec e;
            for (std::size_t v = 0; v < n; ++v)
                e.emplace_back(rng.integer(-5, 5));
            ms.push_back({e, LayeredScalar::tangible(rng.integer(-5, 5))});
        }
        TropPoly f(n, ExponentMode::Laurent, ST, ms);
        auto rep = essential_support(f);
        auto expect = oracle::essential(f);
        std::size_t count = 0;
        for (std::size_t j = 0; j < rep.monomials.size(); ++j) {
            bool ess = rep.status[j] == MonomialStatus::Essential;
            count += ess;
            t.expect(ess == (expect.count(rep.monomials[j].exponent) == 1),
                     str(f) + " at " + exponent_to_string(rep.monomials[j].exponent));
        }
        t.expect(count == expect.size(), "essential count of " + str(f));
    }
}

oracle::IntBinomial as_int(const NormalBinomial& b)
{
    oracle::IntBinomial r;
    for (const auto& x : b.exponent)
        r.e.push_back(x.get_num().get_si());
    r.c = b.constant.value().get_num().get_si();
    return r;
}

NormalBinomial from_int(const oracle::IntBinomial& b, bool ghost = false)
{
    NormalBinomial r;
    for (long x : b.e)
        r.exponent.emplace_back(x);
    r.constant = ghost ? LayeredScalar::ghost(b.c) : LayeredScalar::tangible(b.c);
    return r;
}

void c7_binomials(Tally& t)
{
    oracle::Rng rng(1007);
    long solvable = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        // constants from a linear functional keep the set proper
        std::vector<long> w(n);
        for (auto& x : w)
            x = rng.integer(-3, 3);
        std::vector<oracle::IntBinomial> ib;
        std::vector<NormalBinomial> bins;
        const long k = rng.integer(1, 10);
        for (long j = 0; j < k; ++j) {
            oracle::IntBinomial b{std::vector<long>(n), 0};
            bool zero = true;
            for (std::size_t v = 0; v < n; ++v) {
                b.e[v] = rng.integer(-4, 4);
                b.c += w[v] * b.e[v];
                zero = zero && b.e[v] == 0;
            }
            if (zero)
                continue;
            ib.push_back(b);
            bins.push_back(from_int(b));
        }
        if (bins.empty())
            continue;
        std::string tag;
        for (const auto& b : bins)
            tag += "[" + to_string(b, ST) + "]";
        auto red = reduce(bins, ST);
        t.expect(red.status != GeneratorStatus::Improper, "improper " + tag);
        t.expect(red.generators.size() <= n, "too many generators " + tag);
        for (const auto& b : bins)
            t.expect(is_generated(b, red, ST).generated, "input not generated " + tag);
        // oracle over a subset of at most five inputs
        std::vector<oracle::IntBinomial> sub = ib;
        while (sub.size() > 5)
            sub.erase(sub.begin() + rng.integer(0, static_cast<long>(sub.size()) - 1));
        for (int s = 0; s < 5; ++s) {
            oracle::IntBinomial target{std::vector<long>(n, 0), 0};
            for (const auto& g : sub) {
                long m = rng.integer(-1, 1);
                for (std::size_t v = 0; v < n; ++v)
                    target.e[v] += m * g.e[v];
                target.c += m * g.c;
            }
            if (rng.chance(0.3))
                target.c += rng.integer(-2, 2);
            if (std::all_of(target.e.begin(), target.e.end(), [](long x) { return x == 0; }))
                continue;
            auto tb = from_int(target);
            auto mem = is_generated(tb, red, ST);
            if (oracle::combination_exists(sub, target, 3)) {
                ++solvable;
                t.expect(mem.generated, "oracle combination missed " + tag + " target " + to_string(tb, ST));
            }
            if (mem.generated) {
                Rational c = 0;
                ExponentVec e(n, Rational(0));
                for (std::size_t j = 0; j < mem.combination.size(); ++j) {
                    c += Rational(mem.combination[j]) * red.generators[j].constant.value();
                    for (std::size_t v = 0; v < n; ++v)
                        e[v] += Rational(mem.combination[j]) * red.generators[j].exponent[v];
                }
                t.expect(e == tb.exponent && c == tb.constant.value(), "bad certificate " + tag);
            }
        }
    }
    t.expect(solvable >= 200, "too few solvable oracle instances: " + std::to_string(solvable));
    auto imp = reduce({normalize(P("x + 1", ST)), normalize(P("x + 2", ST))}, ST);
    t.expect(imp.status == GeneratorStatus::Improper, "{x+1, x+2} not improper");
    for (int i = 0; i < 100; ++i) {
        long alpha = rng.integer(-8, 8), beta = rng.integer(-8, 8);
        auto r = half_ghost_reduce({from_int({{1}, alpha}), from_int({{-1}, beta}, true)}, ST);
        bool redundant = -alpha <= beta;
        t.expect((r.status == GeneratorStatus::RedundanciesDropped) == redundant,
                 "half-ghost alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
}

void c8_factor_binomial(Tally& t)
{
    oracle::Rng rng(1008);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
        const long d = rng.integer(1, 3);
        std::vector<long> prim(n);
        long g = 0;
        do {
            g = 0;
            for (auto& x : prim) {
                x = rng.integer(-3, 3);
                g = std::gcd(g, x);
            }
        } while (g != 1);
        ExponentVec base, top;
        for (std::size_t v = 0; v < n; ++v) {
            long b0 = rng.integer(0, 2);
            long lo = std::min(b0, b0 + d * prim[v]);
            base.emplace_back(b0 - lo);
            top.emplace_back(b0 + d * prim[v] - lo);
        }
        auto mode = rng.chance(0.5) ? ST : LQ;
        TropPoly f(n, ExponentMode::Polynomial, mode,
                   {{base, LayeredScalar::tangible(rng.integer(-6, 6))}, {top, LayeredScalar::tangible(rng.integer(-6, 6))}});
        auto r = factor_binomial(f);
        t.expect(r.multiplicity == static_cast<unsigned>(d), "multiplicity of " + str(f));
        auto back = poly_mul(r.monomial, poly_pow(r.irreducible_poly, r.multiplicity));
        auto c = compare_fn(back, f);
        t.expect(c.surpasses_nu.holds, "expansion does not surpass " + str(f));
        if (n == 1)
            t.expect(c.exact, "univariate comparison not exact " + str(f));
        // independent spot check of the expansion at random points
        for (int s = 0; s < 10; ++s) {
            std::vector<Rational> x;
            for (std::size_t v = 0; v < n; ++v)
                x.push_back(rng.rational(-4, 4));
            auto bv = oracle::value_at(back, x), fv = oracle::value_at(f, x);
            t.expect(surpasses_nu(bv, fv, mode), "pointwise at " + str(x) + " for " + str(f));
        }
    }
}

void c9_factorization(Tally& t)
{
    oracle::Rng rng(1009);
    for (int i = 0; i < 200; ++i) {
        auto roots = distinct_roots(rng, static_cast<std::size_t>(rng.integer(1, 8)));
        auto f = product_of_roots(roots);
        auto r = factor_univariate_tangible(f);
        t.expect(r.relation == FactorRelation::Equal, "distinct roots " + str(f));
        t.expect(compare_fn(r.expansion, f).equal.holds, "expansion differs " + str(f));
    }
    for (int i = 0; i < 100; ++i) {
        auto roots = distinct_roots(rng, static_cast<std::size_t>(rng.integer(1, 3)));
        std::vector<long> mult;
        long deg = 0;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            mult.push_back(j == 0 ? rng.integer(2, 3) : rng.integer(1, 2));
            deg += mult.back();
        }
        // vertices of the hull only; the slope jumps by the multiplicity at each root
        std::vector<Monomial> ms{{Q({deg}), LayeredScalar()}};
        Rational value = 0;
        long e = deg;
        for (std::size_t j = roots.size(); j-- > 0;) {
            value += Rational(mult[j]) * roots[j];
            e -= mult[j];
            ms.push_back({Q({e}), LayeredScalar::tangible(value)});
        }
        TropPoly f(1, ExponentMode::Polynomial, ST, ms);
        auto r = factor_univariate_tangible(f);
        t.expect(r.relation == FactorRelation::NuEquivalent, "repeated roots " + str(f));
    }
    auto g = factor_univariate_full(P("x^2 + 5v*x + 7", ST));
    t.expect(g.ghost_intervals.size() == 1 && *g.ghost_intervals[0].lo == 2 && *g.ghost_intervals[0].hi == 5,
             "ghost interval fixture");
    t.expect(g.relation == FactorRelation::Equal, "ghost interval fixture relation");
}

/// max of u*f minus g at every breakpoint of either side, plus far points.
bool dominated_everywhere(const TropPoly& uf, const TropPoly& g)
{
    std::vector<Rational> xs{Rational(-1000), Rational(1000)};
    for (const auto* p : {&uf, &g})
        for (const auto& r : oracle::corner_roots(*p))
            xs.push_back(r);
    std::vector<Rational> mid;
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        mid.push_back((xs[i] + xs[i + 1]) / 2);
    xs.insert(xs.end(), mid.begin(), mid.end());
    for (const auto& x : xs)
        if (nu_compare(oracle::value_at(uf, {x}), oracle::value_at(g, {x})) > 0)
            return false;
    return true;
}

void c10_divide(Tally& t)
{
    oracle::Rng rng(1010);
    for (int i = 0; i < 100; ++i) {
        auto roots = distinct_roots(rng, static_cast<std::size_t>(rng.integer(2, 6)));
        std::vector<Rational> fr, qr;
        for (const auto& r : roots)
            (rng.chance(0.5) ? fr : qr).push_back(r);
        if (fr.empty())
            fr.push_back(qr.back()), qr.pop_back();
        auto f = product_of_roots(fr), q = product_of_roots(qr);
        auto g = poly_mul(q, f);
        auto d = l_divide(g, f);
        t.expect(d.verified && d.relation == FnRelation::Equal, "exact product " + str(g) + " / " + str(f));
        t.expect(d.optimal, "not optimal " + str(g) + " / " + str(f));
        // raising any quotient coefficient must push u*f above g somewhere
        t.expect(dominated_everywhere(poly_mul(d.quotient, f), g), "u*f exceeds g for " + str(g));
        auto ms = d.quotient.monomials();
        for (std::size_t j = 0; j < ms.size(); ++j) {
            if (j + 1 == ms.size())
                break; // leading monomial is fixed
            auto up = ms;
            up[j].coeff = LayeredScalar::tangible(up[j].coeff.value() + oracle::q(1, 4));
            TropPoly u(1, ExponentMode::Polynomial, ST, up);
            t.expect(!dominated_everywhere(poly_mul(u, f), g), "raised quotient still fits for " + str(g));
        }
    }
    auto pr = principal_generator({P("x + 1", ST), P("x + 3", ST)});
    t.expect(pr.certificates.size() == 2 && pr.certificates[0].verified && !pr.certificates[1].verified,
             "{x+1, x+3} certificate");
}

PuiseuxScalar random_series(oracle::Rng& rng)
{
    std::vector<PuiseuxTerm> ts;
    long k = rng.integer(1, 3);
    for (long i = 0; i < k; ++i) {
        long c = rng.integer(-3, 3);
        ts.push_back({Rational(c == 0 ? 1 : c), rng.rational(-3, 3, 2)});
    }
    return PuiseuxScalar(ts);
}

ClassicalPoly random_classical(oracle::Rng& rng, std::size_t n)
{
    std::vector<std::pair<ExponentVec, PuiseuxScalar>> ts;
    long k = rng.integer(1, 4);
    for (long i = 0; i < k; ++i) {
        ExponentVec e;
        for (std::size_t j = 0; j < n; ++j)
            e.emplace_back(rng.integer(0, 2));
        ts.push_back({e, random_series(rng)});
    }
    return ClassicalPoly(n, ts);
}

bool has(const std::vector<ExponentVec>& a, const ExponentVec& e)
{
    return std::find(a.begin(), a.end(), e) != a.end();
}

void c11_puiseux(Tally& t)
{
    oracle::Rng rng(1011);
    int done = 0;
    for (int i = 0; i < 20000 && done < 500; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
        auto f = random_classical(rng, n), g = random_classical(rng, n);
        std::vector<ExponentVec> common;
        for (const auto& [e, c] : f.terms())
            if (g.terms().count(e))
                common.push_back(e);
        if (common.empty())
            continue;
        ++done;
        const auto& h = common[static_cast<std::size_t>(rng.integer(0, static_cast<long>(common.size()) - 1))];
        auto r = monomial_eliminate(f, g, h);
        auto sf = supp(f), sg = supp(g);
        std::string tag = "instance " + std::to_string(done);
        if (!r.p) {
            t.expect(false, "no p for " + tag);
            continue;
        }
        auto sp = supp(*r.p);
        t.expect(has(sp, h), "h not in supp p, " + tag);
        for (const auto& e : sp)
            t.expect(has(sf, e) && has(sg, e), "supp p outside supp f and supp g, " + tag);
        if (r.q)
            for (const auto& e : supp(*r.q))
                t.expect((has(sf, e) || has(sg, e)) && !has(sp, e), "supp q outside, " + tag);
    }
    t.expect(done == 500, "only " + std::to_string(done) + " instances");
    ClassicalPoly b1(1, {{Q({1}), PuiseuxScalar::constant(1)}, {Q({0}), PuiseuxScalar::constant(1)}});
    ClassicalPoly b2(1, {{Q({1}), PuiseuxScalar::constant(1)}, {Q({0}), PuiseuxScalar::constant(2)}});
    t.expect(valuation(PuiseuxScalar::constant(1)) == 0 && valuation(PuiseuxScalar::constant(2)) == 0, "v(1), v(2)");
    t.expect(tropicalize_poly(b1) == tropicalize_poly(b2) && tropicalize_poly(b1) == P("x + 0", MP),
             "x+1 and x+2 tropicalize differently");
}

void c12_exchange(Tally& t)
{
    oracle::Rng rng(1012);
    long roots_checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto mode = i % 2 == 0 ? ST : LQ;
        std::vector<Monomial> f1, f2, h;
        std::set<long> used;
        auto fresh = [&]() {
            long e;
            do
                e = rng.integer(0, 7);
            while (used.count(e));
            used.insert(e);
            return e;
        };
        long hk = rng.integer(1, 2);
        for (long k = 0; k < hk; ++k)
            h.push_back({Q({fresh()}), LayeredScalar::tangible(rng.integer(-4, 4))});
        for (int k = 0; k < 2; ++k)
            f1.push_back({Q({fresh()}), LayeredScalar::tangible(rng.integer(-4, 4))});
        for (int k = 0; k < 2; ++k)
            f2.push_back({Q({fresh()}), LayeredScalar::tangible(rng.integer(-4, 4))});
        // place a common root: shift f2 so that one of its monomials ties with h at x0
        Rational x0 = rng.rational(-3, 3, 2);
        auto at = [&](const Monomial& m) { return Rational(m.coeff.value() + m.exponent[0] * x0); };
        Rational top = at(h[0]);
        for (const auto& m : h)
            top = std::max(top, at(m));
        for (auto* fs : {&f1, &f2}) {
            auto& m = (*fs)[0];
            m.coeff = LayeredScalar::tangible(top - m.exponent[0] * x0);
            auto& o = (*fs)[1];
            if (at(o) > top)
                o.coeff = LayeredScalar::tangible(top - o.exponent[0] * x0 - 1);
        }
        auto mk = [&](std::vector<Monomial> a) {
            a.insert(a.end(), h.begin(), h.end());
            return TropPoly(1, ExponentMode::Polynomial, mode, a);
        };
        auto p = mk(f1), q = mk(f2);
        auto r = exchange_step(p, q);
        auto out = poly_mul(poly_mul(r.common, r.common_q), r.exchanged);
        auto zp = oracle::corner_roots(p), zq = oracle::corner_roots(q);
        for (const auto& a : zp) {
            if (std::find(zq.begin(), zq.end(), a) == zq.end())
                continue;
            ++roots_checked;
            auto pt = tangible_point({a});
            std::string tag = str(p) + " ; " + str(q) + " at " + to_string(a);
            if (mode == ST)
                t.expect(is_corner_root(out, pt), "not a corner root: " + tag);
            else
                t.expect(in_ell_locus(out, pt, Layer::one()), "not an ell-ghost point: " + tag);
        }
    }
    t.expect(roots_checked >= 200, "too few common roots: " + std::to_string(roots_checked));
}

} // namespace

int main()
{
    struct Entry {
        int id;
        const char* name;
        std::function<void(Tally&)> run;
    };
    const std::vector<Entry> entries{
        {1, "semiring axioms", c1_axioms},
        {2, "supertropical product identity", c2_product_identity},
        {3, "permanent identity", c3_permanent},
        {4, "corner-root fixtures", c4_roots},
        {5, "corner roots of powers", c5_powers},
        {6, "essential support", c6_essential},
        {7, "binomial reduction", c7_binomials},
        {8, "binomial factorization", c8_factor_binomial},
        {9, "univariate factorization", c9_factorization},
        {10, "division", c10_divide},
        {11, "monomial elimination", c11_puiseux},
        {12, "exchange", c12_exchange},
    };
    int failed = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : entries) {
        Tally t;
        auto s = std::chrono::steady_clock::now();
        try {
            e.run(t);
        } catch (const std::exception& ex) {
            t.expect(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count();
        bool ok = t.failures == 0;
        failed += !ok;
        std::printf("%s %2d %-32s checks=%ld failures=%ld time=%.2fs\n", ok ? "PASS" : "FAIL", e.id, e.name, t.checks,
                    t.failures, secs);
        if (!ok)
            std::printf("     first failure: %s\n", t.first.c_str());
        std::fflush(stdout);
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("total time %.2fs\n", total);
    return failed == 0 ? 0 : 1;
}
