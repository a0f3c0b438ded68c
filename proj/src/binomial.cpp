#include "laytrop/binomial.hpp"

#include "laytrop/error.hpp"

#include <algorithm>

namespace laytrop {

std::string to_string(const NormalBinomial& b, SemiringMode mode)
{
    return "lambda^" + exponent_to_string(b.exponent) + " + " + to_string(b.constant, mode);
}

TropPoly to_poly(const NormalBinomial& b, ExponentMode emode, SemiringMode smode)
{
    return TropPoly(b.exponent.size(), emode, smode,
                    {{b.exponent, LayeredScalar()}, {ExponentVec(b.exponent.size(), Rational(0)), b.constant}});
}

NormalBinomial normalize(const TropPoly& f)
{
    if (f.size() != 2)
        throw Error(ErrorKind::NotBinomial, "normalize: " + to_string(f) + " is not a binomial");
    auto ms = f.monomials();
    const auto& small = ms[0];
    const auto& large = ms[1];
    const std::size_t n = f.vars();
    auto diff = [n](const ExponentVec& a, const ExponentVec& b) {
        ExponentVec r(n);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = a[i] - b[i];
        return r;
    };
    if (large.coeff.is_tangible())
        return {diff(large.exponent, small.exponent), scalar_div(small.coeff, large.coeff, f.semiring_mode())};
    if (small.coeff.is_tangible())
        return {diff(small.exponent, large.exponent), scalar_div(large.coeff, small.coeff, f.semiring_mode())};
    throw Error(ErrorKind::GhostLeading, "normalize: both coefficients of " + to_string(f) + " are non-tangible");
}

NormalBinomial combine(const NormalBinomial& b1, const NormalBinomial& b2, SemiringMode mode)
{
    if (b1.exponent == b2.exponent)
        throw Error(ErrorKind::EqualExponents, "combine: equal exponents " + exponent_to_string(b1.exponent));
    if (!b1.constant.is_tangible())
        throw Error(ErrorKind::GhostConstant, "combine: first constant " + to_string(b1.constant, mode)
                                                  + " is not tangible");
    NormalBinomial r;
    for (std::size_t i = 0; i < b1.exponent.size(); ++i)
        r.exponent.push_back(b2.exponent[i] - b1.exponent[i]);
    r.constant = {b2.constant.value() - b1.constant.value(),
                  layer_mul(b1.constant.layer(), b2.constant.layer(), mode)};
    return r;
}

const char* to_string(GeneratorStatus s)
{
    switch (s) {
    case GeneratorStatus::Proper: return "proper";
    case GeneratorStatus::Improper: return "improper";
    case GeneratorStatus::RedundanciesDropped: return "redundancies-dropped";
    }
    return "?";
}

namespace {

struct Row {
    std::vector<Integer> e;
    Rational c;
};

bool is_zero(const Row& r)
{
    return std::all_of(r.e.begin(), r.e.end(), [](const Integer& a) { return a == 0; });
}

void sub_multiple(Row& a, const Row& b, const Integer& q)
{
    for (std::size_t i = 0; i < a.e.size(); ++i)
        a.e[i] -= q * b.e[i];
    a.c -= Rational(q) * b.c;
}

void negate(Row& a)
{
    for (auto& x : a.e)
        x = -x;
    a.c = -a.c;
}

// Hermite normal form with constants riding along. Returns the nonzero
// rows; sets `inconsistent` when a zero row keeps a nonzero constant.
std::vector<Row> hermite(std::vector<Row> rows, bool& inconsistent)
{
    inconsistent = false;
    if (rows.empty())
        return rows;
    const std::size_t n = rows.front().e.size();
    std::size_t top = 0;
    for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
        for (;;) {
            std::size_t piv = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r].e[col] != 0 && (piv == rows.size() || abs(rows[r].e[col]) < abs(rows[piv].e[col])))
                    piv = r;
            if (piv == rows.size())
                break;
            std::swap(rows[top], rows[piv]);
            bool done = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r].e[col] == 0)
                    continue;
                Integer q = floor_div(rows[r].e[col], rows[top].e[col]);
                sub_multiple(rows[r], rows[top], q);
                if (rows[r].e[col] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (rows[top].e[col] == 0)
            continue;
        if (rows[top].e[col] < 0)
            negate(rows[top]);
        for (std::size_t r = 0; r < top; ++r) {
            Integer q = floor_div(rows[r].e[col], rows[top].e[col]);
            if (q != 0)
                sub_multiple(rows[r], rows[top], q);
        }
        ++top;
    }
    std::vector<Row> out;
    for (auto& r : rows) {
        if (is_zero(r)) {
            if (r.c != 0)
                inconsistent = true;
            continue;
        }
        out.push_back(std::move(r));
    }
    return out;
}

Integer scale_for(const std::vector<NormalBinomial>& bins)
{
    std::vector<Rational> all;
    for (const auto& b : bins)
        all.insert(all.end(), b.exponent.begin(), b.exponent.end());
    return common_denominator(all);
}

Row to_row(const NormalBinomial& b, const Integer& d)
{
    Row r;
    for (const auto& x : b.exponent) {
        Rational s = x * Rational(d);
        s.canonicalize();
        r.e.push_back(s.get_num());
    }
    r.c = b.constant.value() * Rational(d);
    return r;
}

NormalBinomial from_row(const Row& r, const Integer& d)
{
    NormalBinomial b;
    for (const auto& x : r.e) {
        Rational q(x, d);
        q.canonicalize();
        b.exponent.push_back(q);
    }
    Rational c = r.c / Rational(d);
    c.canonicalize();
    b.constant = LayeredScalar::tangible(c);
    return b;
}

// Solve d*e = sum m_i row_i over the integers on echelon rows.
std::optional<std::vector<Integer>> lattice_solve(const std::vector<Row>& rows, const ExponentVec& e, const Integer& d)
{
    std::vector<Integer> t;
    for (const auto& x : e) {
        Rational s = x * Rational(d);
        s.canonicalize();
        if (s.get_den() != 1)
            return std::nullopt;
        t.push_back(s.get_num());
    }
    std::vector<Integer> m;
    for (const auto& r : rows) {
        std::size_t p = 0;
        while (r.e[p] == 0)
            ++p;
        for (std::size_t i = 0; i < p; ++i)
            if (t[i] != 0)
                return std::nullopt;
        if (t[p] % r.e[p] != 0)
            return std::nullopt;
        Integer q = t[p] / r.e[p];
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] -= q * r.e[i];
        m.push_back(q);
    }
    if (!std::all_of(t.begin(), t.end(), [](const Integer& a) { return a == 0; }))
        return std::nullopt;
    return m;
}

std::vector<Row> rows_of(const GeneratorSet& g, const Integer& d)
{
    std::vector<Row> rows;
    for (const auto& b : g.generators)
        rows.push_back(to_row(b, d));
    return rows;
}

Integer scale_with(const GeneratorSet& g, const NormalBinomial& b)
{
    auto all = g.generators;
    all.push_back(b);
    return scale_for(all);
}

} // namespace

Membership is_generated(const NormalBinomial& b, const GeneratorSet& gens, SemiringMode mode)
{
    (void)mode;
    Membership res;
    if (gens.generators.empty())
        return res;
    Integer d = scale_with(gens, b);
    auto m = lattice_solve(rows_of(gens, d), b.exponent, d);
    if (!m)
        return res;
    Rational sum = 0;
    for (std::size_t i = 0; i < m->size(); ++i)
        sum += Rational((*m)[i]) * gens.generators[i].constant.value();
    LayeredScalar combo = LayeredScalar::tangible(sum);
    bool ok = nu_equal(b.constant, combo) || (!b.constant.is_tangible() && nu_compare(b.constant, combo) > 0);
    if (ok) {
        res.generated = true;
        res.combination = std::move(*m);
    }
    return res;
}

GeneratorSet reduce(const std::vector<NormalBinomial>& bins, SemiringMode mode)
{
    GeneratorSet out;
    out.vars = bins.empty() ? 0 : bins.front().exponent.size();

    // Same-exponent collisions first.
    std::vector<bool> dropped(bins.size(), false);
    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (dropped[i] || !bins[i].constant.is_tangible())
            continue;
        for (std::size_t j = 0; j < bins.size(); ++j) {
            if (j == i || dropped[j] || bins[j].exponent != bins[i].exponent)
                continue;
            const auto& a = bins[i].constant;
            const auto& b = bins[j].constant;
            if (nu_equal(a, b) || (!b.is_tangible() && nu_compare(a, b) < 0)) {
                dropped[j] = true;
                out.redundant.push_back(j);
            } else {
                out.status = GeneratorStatus::Improper;
                out.improper_witness = j;
                return out;
            }
        }
    }

    std::vector<Row> current;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (dropped[i])
            continue;
        const auto& b = bins[i];
        if (!b.constant.is_tangible())
            throw Error(ErrorKind::GhostConstant, "reduce: constant of " + to_string(b, mode)
                                                      + " is not tangible; use half-ghost reduction");
        if (std::all_of(b.exponent.begin(), b.exponent.end(), [](const Rational& x) { return x == 0; }))
            throw Error(ErrorKind::InvalidArgument, "reduce: zero exponent vector");
        if (is_generated(b, out, mode).generated) {
            out.redundant.push_back(i);
            continue;
        }
        auto all = out.generators;
        all.push_back(b);
        Integer d = scale_for(all);
        std::vector<Row> rows = rows_of(out, d);
        rows.push_back(to_row(b, d));
        bool inconsistent = false;
        rows = hermite(std::move(rows), inconsistent);
        if (inconsistent) {
            out.status = GeneratorStatus::Improper;
            out.improper_witness = i;
            out.generators.clear();
            return out;
        }
        out.generators.clear();
        for (const auto& r : rows)
            out.generators.push_back(from_row(r, d));
    }
    std::sort(out.redundant.begin(), out.redundant.end());
    if (!out.redundant.empty())
        out.status = GeneratorStatus::RedundanciesDropped;
    return out;
}

GeneratorSet half_ghost_reduce(const std::vector<NormalBinomial>& bins, SemiringMode mode)
{
    std::vector<NormalBinomial> tangible;
    std::vector<std::size_t> tangible_idx, ghost_idx;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (bins[i].constant.is_tangible()) {
            tangible.push_back(bins[i]);
            tangible_idx.push_back(i);
        } else {
            ghost_idx.push_back(i);
        }
    }
    GeneratorSet out = reduce(tangible, mode);
    for (auto& r : out.redundant)
        r = tangible_idx[r];
    if (out.improper_witness)
        out.improper_witness = tangible_idx[*out.improper_witness];
    out.vars = bins.empty() ? 0 : bins.front().exponent.size();
    if (out.status == GeneratorStatus::Improper)
        return out;

    const GeneratorSet lattice = out;
    std::vector<std::size_t> kept;
    for (auto i : ghost_idx) {
        const auto& b = bins[i];
        bool redundant = false;
        if (!lattice.generators.empty()) {
            Integer d = scale_with(lattice, b);
            if (auto m = lattice_solve(rows_of(lattice, d), b.exponent, d)) {
                Rational gamma = 0;
                for (std::size_t k = 0; k < m->size(); ++k)
                    gamma += Rational((*m)[k]) * lattice.generators[k].constant.value();
                redundant = gamma <= b.constant.value();
            }
        }
        for (auto j : ghost_idx) {
            if (j == i || bins[j].exponent != b.exponent)
                continue;
            int c = cmp(bins[j].constant.value(), b.constant.value());
            if (c < 0 || (c == 0 && j < i))
                redundant = true;
        }
        if (redundant)
            out.redundant.push_back(i);
        else
            kept.push_back(i);
    }
    for (auto i : kept)
        out.generators.push_back(bins[i]);
    std::sort(out.redundant.begin(), out.redundant.end());
    if (!out.redundant.empty())
        out.status = GeneratorStatus::RedundanciesDropped;
    return out;
}

BinomialFactorization factor_binomial(const TropPoly& b, const CompareOptions& opts)
{
    if (b.size() != 2)
        throw Error(ErrorKind::NotBinomial, "factor-binomial: " + to_string(b) + " is not a binomial");
    auto ms = b.monomials();
    const auto& small = ms[0];
    const auto& large = ms[1];
    if (!large.coeff.is_tangible())
        throw Error(ErrorKind::GhostLeading, "factor-binomial: leading coefficient of " + to_string(b)
                                                 + " is not tangible");
    const std::size_t n = b.vars();
    const SemiringMode mode = b.semiring_mode();
    ExponentVec low(n), p(n), q(n), e(n);
    for (std::size_t i = 0; i < n; ++i) {
        low[i] = std::min(small.exponent[i], large.exponent[i]);
        p[i] = large.exponent[i] - low[i];
        q[i] = small.exponent[i] - low[i];
        e[i] = p[i] - q[i];
    }
    Integer lcd = common_denominator(e);
    Integer d = 0;
    for (const auto& x : e) {
        Rational s = x * Rational(lcd);
        s.canonicalize();
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), s.get_num().get_mpz_t());
    }
    LayeredScalar gamma = scalar_div(small.coeff, large.coeff, mode);
    if (!gamma.is_tangible() && d > 1)
        throw Error(ErrorKind::GhostConstantRoot, "factor-binomial: constant " + to_string(gamma, mode)
                                                      + " is not tangible and the exponent gcd is "
                                                      + d.get_str());
    LayeredScalar root = d == 1 ? gamma : nth_root(gamma, d);
    ExponentVec pd(n), qd(n), ed(n);
    for (std::size_t i = 0; i < n; ++i) {
        pd[i] = p[i] / Rational(d);
        qd[i] = q[i] / Rational(d);
        ed[i] = e[i] / Rational(d);
        pd[i].canonicalize();
        qd[i].canonicalize();
        ed[i].canonicalize();
    }
    TropPoly h = TropPoly::monomial(b.exponent_mode(), mode, low, large.coeff);
    TropPoly g(n, b.exponent_mode(), mode, {{pd, LayeredScalar()}, {qd, root}});
    unsigned mult = static_cast<unsigned>(d.get_ui());
    TropPoly expansion = poly_mul(h, poly_pow(g, mult));
    auto cmpres = compare_fn(expansion, b, opts);
    BinomialFactorization res{h, {ed, root}, g, mult, cmpres.relation,
                              cmpres.relation == FnRelation::Equal || cmpres.relation == FnRelation::SurpassesNu};
    return res;
}

} // namespace laytrop
