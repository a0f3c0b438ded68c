#include "laytrop/cli.hpp"

#include "laytrop/binomial.hpp"
#include "laytrop/error.hpp"
#include "laytrop/factor.hpp"
#include "laytrop/geometry.hpp"
#include "laytrop/parse.hpp"
#include "laytrop/puiseux.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace laytrop {

namespace {

using nlohmann::json;

struct Settings {
    std::string mode = "supertropical";
    std::string exponents;
    std::size_t vars = 0;
    std::string format = "text";
    std::uint64_t seed = 0x5eed;
    std::size_t samples = 200;
};

struct Report {
    std::ostringstream text;
    json data = json::object();
    int code = ExitOk;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

ParseOptions parse_options(const Settings& s)
{
    ParseOptions o;
    o.semiring = parse_semiring_mode(s.mode);
    if (!s.exponents.empty())
        o.exponents = parse_exponent_mode(s.exponents);
    o.vars = s.vars;
    return o;
}

CompareOptions compare_options(const Settings& s)
{
    CompareOptions c;
    c.seed = s.seed;
    c.samples = s.samples;
    return c;
}

void need(const std::vector<std::string>& in, std::size_t lo, std::size_t hi, const char* what)
{
    if (in.size() < lo || in.size() > hi)
        throw UsageError(std::string(what));
}

json rationals(const std::vector<Rational>& xs)
{
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(to_string(x));
    return a;
}

json scalar_json(const LayeredScalar& a)
{
    return {{"value", to_string(a.value())}, {"layer", to_string(a.layer())}};
}

std::string exponent_text(const ExponentVec& e)
{
    return exponent_to_string(e);
}

ExponentMode mode_for(const std::vector<ExponentVec>& es)
{
    ExponentMode m = ExponentMode::Polynomial;
    for (const auto& e : es)
        for (const auto& x : e) {
            if (!is_integer(x))
                return ExponentMode::Rational;
            if (x < 0)
                m = ExponentMode::Laurent;
        }
    return m;
}

TropPoly binomial_poly(const NormalBinomial& b, SemiringMode mode)
{
    return to_poly(b, mode_for({b.exponent}), mode);
}

std::string factor_text(const TropPoly& f, unsigned k)
{
    if (k == 1)
        return to_string(f);
    return "(" + to_string(f) + ")^" + std::to_string(k);
}

void cmd_eval(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 2, 2, "eval expects a polynomial and a point");
    auto f = parse_poly(in[0], parse_options(s));
    auto a = parse_point(in[1], f.semiring_mode());
    auto v = evaluate(f, a);
    r.text << to_string(v, f.semiring_mode()) << "\n";
    r.data["value"] = scalar_json(v);
}

void cmd_essential(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 1, 1, "essential expects one polynomial");
    auto f = parse_poly(in[0], parse_options(s));
    auto rep = essential_support(f);
    json ms = json::array();
    for (std::size_t i = rep.monomials.size(); i-- > 0;) {
        r.text << exponent_text(rep.monomials[i].exponent) << " " << to_string(rep.status[i]) << "\n";
        ms.push_back({{"exponents", rationals(rep.monomials[i].exponent)}, {"status", to_string(rep.status[i])}});
    }
    r.text << "essential part: " << to_string(rep.essential_part) << "\n";
    if (!rep.exact)
        r.text << "note: boundary classification sampled\n";
    r.data["monomials"] = ms;
    r.data["essential_part"] = poly_to_json(rep.essential_part);
    r.data["exact"] = rep.exact;
}

void cmd_roots(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 1, 1, "roots expects one univariate polynomial");
    auto f = parse_poly(in[0], parse_options(s));
    auto roots = corner_roots_univariate(f);
    for (const auto& x : roots)
        r.text << to_string(x) << "\n";
    r.data["roots"] = rationals(roots);
}

void cmd_csupp(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 2, 2, "csupp expects a polynomial and a point");
    auto f = parse_poly(in[0], parse_options(s));
    auto cs = corner_support(f, parse_point(in[1], f.semiring_mode()));
    json a = json::array();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        r.text << exponent_text(*it) << "\n";
        a.push_back(rationals(*it));
    }
    r.data["corner_support"] = a;
}

void cmd_ghost(const std::vector<std::string>& in, const Settings& s, const std::string& ell, Report& r)
{
    need(in, 2, 2, "ghost expects a polynomial and a point");
    auto f = parse_poly(in[0], parse_options(s));
    auto a = parse_point(in[1], f.semiring_mode());
    bool corner = is_corner_root(f, a);
    bool ghost = is_ghost_root(f, a);
    r.text << "layer: " << to_string(layering_map(f, a)) << "\n";
    r.text << "corner-root: " << (corner ? "true" : "false") << "\n";
    r.text << "ghost-root: " << (ghost ? "true" : "false") << "\n";
    r.data["layer"] = to_string(layering_map(f, a));
    r.data["corner_root"] = corner;
    r.data["ghost_root"] = ghost;
    if (!ell.empty()) {
        Layer l = ell == "inf" ? Layer::infinite() : Layer(parse_rational(ell));
        bool in_locus = in_ell_locus(f, a, l);
        r.text << "ell-locus: " << (in_locus ? "true" : "false") << "\n";
        r.data["ell_locus"] = in_locus;
    }
}

std::string bound_text(const std::optional<Rational>& b, const char* inf)
{
    return b ? to_string(*b) : std::string(inf);
}

void cmd_components(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 1, 1, "components expects one univariate polynomial");
    auto f = parse_poly(in[0], parse_options(s));
    auto cd = components_univariate(f);
    json cells = json::array();
    for (std::size_t i = 0; i < cd.cells.size(); ++i) {
        const auto& c = cd.cells[i];
        r.text << "cell " << (c.lo ? "[" : "(") << bound_text(c.lo, "-inf") << "," << bound_text(c.hi, "inf")
               << (c.hi ? "]" : ")") << " exponent " << to_string(c.exponent) << " coeff "
               << to_string(c.coeff, f.semiring_mode()) << " layer " << to_string(c.interior_layer) << "\n";
        cells.push_back({{"lo", c.lo ? json(to_string(*c.lo)) : json(nullptr)},
                         {"hi", c.hi ? json(to_string(*c.hi)) : json(nullptr)},
                         {"exponent", to_string(c.exponent)},
                         {"coeff", scalar_json(c.coeff)},
                         {"layer", to_string(c.interior_layer)}});
        if (i < cd.breakpoints.size())
            r.text << "breakpoint " << to_string(cd.breakpoints[i]) << " layer "
                   << to_string(cd.breakpoint_layers[i]) << "\n";
    }
    r.data["breakpoints"] = rationals(cd.breakpoints);
    json bl = json::array();
    for (const auto& l : cd.breakpoint_layers)
        bl.push_back(to_string(l));
    r.data["breakpoint_layers"] = bl;
    r.data["cells"] = cells;
}

void cmd_covered(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 2, SIZE_MAX, "covered expects a polynomial and at least one generator");
    auto ps = parse_polys(in, parse_options(s));
    std::vector<TropPoly> gens(ps.begin() + 1, ps.end());
    auto res = is_covered_univariate(ps[0], gens);
    r.text << "covered: " << (res.covered ? "true" : "false") << "\n";
    json cover = json::array();
    for (std::size_t i = 0; i < res.cover.size(); ++i) {
        if (res.cover[i])
            r.text << "cell " << i << ": generator " << *res.cover[i] << "\n";
        else
            r.text << "cell " << i << ": uncovered\n";
        cover.push_back(res.cover[i] ? json(*res.cover[i]) : json(nullptr));
    }
    r.data["covered"] = res.covered;
    r.data["cover"] = cover;
}

void cmd_factor(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 1, 1, "factor expects one univariate polynomial");
    auto f = parse_poly(in[0], parse_options(s));
    auto res = f.semiring_mode() == SemiringMode::StandardSupertropical ? factor_univariate_full(f)
                                                                         : factor_univariate_tangible(f);
    r.text << "unit: " << to_string(res.unit, f.semiring_mode()) << "\n";
    json fs = json::array();
    for (const auto& [g, k] : res.factors) {
        r.text << "factor: " << factor_text(g, k) << "\n";
        fs.push_back({{"factor", poly_to_json(g)}, {"multiplicity", k}});
    }
    for (const auto& gi : res.ghost_intervals)
        r.text << "ghost interval: [" << bound_text(gi.lo, "-inf") << "," << bound_text(gi.hi, "inf") << "]\n";
    r.text << "expansion: " << to_string(res.expansion) << "\n";
    r.text << "relation: " << to_string(res.relation) << "\n";
    r.data["unit"] = scalar_json(res.unit);
    r.data["factors"] = fs;
    r.data["expansion"] = poly_to_json(res.expansion);
    r.data["relation"] = to_string(res.relation);
    if (res.relation == FactorRelation::Unfactored) {
        r.code = ExitUnverified;
        if (res.witness) {
            r.text << "witness: " << point_to_string(*res.witness) << "\n";
            r.data["witness"] = rationals(*res.witness);
        }
    }
}

void cmd_factor_binomial(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 1, 1, "factor-binomial expects one binomial");
    auto b = parse_poly(in[0], parse_options(s));
    auto res = factor_binomial(b, compare_options(s));
    r.text << "monomial: " << to_string(res.monomial) << "\n";
    r.text << "irreducible: " << to_string(res.irreducible_poly) << "\n";
    r.text << "multiplicity: " << res.multiplicity << "\n";
    r.text << "relation: " << to_string(res.relation) << "\n";
    r.data["monomial"] = poly_to_json(res.monomial);
    r.data["irreducible"] = poly_to_json(res.irreducible_poly);
    r.data["multiplicity"] = res.multiplicity;
    r.data["relation"] = to_string(res.relation);
    r.data["verified"] = res.verified;
    if (!res.verified)
        r.code = ExitUnverified;
}

std::vector<NormalBinomial> normalized_inputs(const std::vector<TropPoly>& ps)
{
    std::vector<NormalBinomial> bins;
    for (const auto& p : ps)
        bins.push_back(normalize(p));
    return bins;
}

GeneratorSet reduce_any(const std::vector<NormalBinomial>& bins, SemiringMode mode)
{
    bool ghosts = std::any_of(bins.begin(), bins.end(), [](const NormalBinomial& b) { return !b.constant.is_tangible(); });
    return ghosts ? half_ghost_reduce(bins, mode) : reduce(bins, mode);
}

json combination_json(const std::vector<Integer>& m)
{
    json a = json::array();
    for (const auto& x : m)
        a.push_back(x.get_str());
    return a;
}

std::string combination_text(const std::vector<Integer>& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i)
        s += (i ? "," : "") + m[i].get_str();
    return s;
}

void cmd_reduce(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 1, SIZE_MAX, "reduce-binomials expects at least one binomial");
    auto ps = parse_polys(in, parse_options(s));
    const SemiringMode mode = ps.front().semiring_mode();
    auto bins = normalized_inputs(ps);
    auto gens = reduce_any(bins, mode);
    r.text << "status: " << to_string(gens.status) << "\n";
    json g = json::array();
    for (const auto& b : gens.generators) {
        r.text << "generator: " << to_string(binomial_poly(b, mode)) << "\n";
        g.push_back({{"exponent", rationals(b.exponent)}, {"constant", scalar_json(b.constant)}});
    }
    for (auto i : gens.redundant)
        r.text << "redundant: " << i << "\n";
    r.data["status"] = to_string(gens.status);
    r.data["generators"] = g;
    r.data["redundant"] = gens.redundant;
    if (gens.improper_witness) {
        r.text << "improper at input: " << *gens.improper_witness << "\n";
        r.data["improper_witness"] = *gens.improper_witness;
    }
    if (gens.status == GeneratorStatus::Improper)
        return;
    json certs = json::array();
    for (std::size_t i = 0; i < bins.size(); ++i) {
        auto m = is_generated(bins[i], gens, mode);
        bool listed = std::find(gens.generators.begin(), gens.generators.end(), bins[i]) != gens.generators.end();
        if (m.generated)
            r.text << "input " << i << ": generated by " << combination_text(m.combination) << "\n";
        else if (listed)
            r.text << "input " << i << ": kept as generator\n";
        else
            r.text << "input " << i << ": not generated\n";
        certs.push_back({{"generated", m.generated || listed}, {"combination", combination_json(m.combination)}});
    }
    r.data["certificates"] = certs;
}

void cmd_member(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 2, SIZE_MAX, "member expects a binomial and at least one generator");
    auto ps = parse_polys(in, parse_options(s));
    const SemiringMode mode = ps.front().semiring_mode();
    auto target = normalize(ps[0]);
    auto gens = reduce_any(normalized_inputs({ps.begin() + 1, ps.end()}), mode);
    if (gens.status == GeneratorStatus::Improper) {
        r.text << "generated: true (improper generator set)\n";
        r.data["generated"] = true;
        r.data["improper"] = true;
        return;
    }
    auto m = is_generated(target, gens, mode);
    r.text << "generated: " << (m.generated ? "true" : "false") << "\n";
    r.data["generated"] = m.generated;
    if (m.generated) {
        r.text << "combination: " << combination_text(m.combination) << "\n";
        r.data["combination"] = combination_json(m.combination);
    }
}

void division_report(const DivisionResult& d, Report& r, json& out)
{
    r.text << "quotient: " << to_string(d.quotient) << "\n";
    r.text << "relation: " << to_string(d.relation) << "\n";
    r.text << "verified: " << (d.verified ? "true" : "false") << "\n";
    out["quotient"] = poly_to_json(d.quotient);
    out["relation"] = to_string(d.relation);
    out["verified"] = d.verified;
    out["optimal"] = d.optimal;
    if (d.witness) {
        r.text << "witness: " << point_to_string(*d.witness) << "\n";
        out["witness"] = rationals(*d.witness);
    }
}

void cmd_divide(std::vector<std::string> in, const Settings& s, Report& r)
{
    if (in.size() == 3 && in[1] == "by")
        in.erase(in.begin() + 1);
    need(in, 2, 2, "divide expects a dividend and a divisor");
    auto ps = parse_polys(in, parse_options(s));
    auto d = l_divide(ps[0], ps[1]);
    division_report(d, r, r.data);
    if (!d.verified)
        r.code = ExitUnverified;
}

void cmd_principal(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 1, SIZE_MAX, "principal expects at least one polynomial");
    auto ps = parse_polys(in, parse_options(s));
    auto res = principal_generator(ps);
    r.text << "generator: " << to_string(res.generator) << "\n";
    r.data["generator"] = poly_to_json(res.generator);
    json certs = json::array();
    for (std::size_t i = 0; i < res.certificates.size(); ++i) {
        r.text << "certificate " << i << ":\n";
        json c;
        division_report(res.certificates[i], r, c);
        certs.push_back(c);
        if (!res.certificates[i].verified)
            r.code = ExitUnverified;
    }
    r.data["certificates"] = certs;
}

void cmd_identity(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    if (in.size() < 2)
        throw UsageError("identity --perm expects at least two polynomials");
    auto ps = parse_polys(in, parse_options(s));
    auto res = permanent_factors(ps, compare_options(s));
    r.text << "lhs: " << to_string(res.lhs) << "\n";
    r.text << "rhs: " << to_string(res.rhs) << "\n";
    r.text << "relation: " << to_string(res.comparison.relation) << "\n";
    if (!res.comparison.exact)
        r.text << "note: sampled at " << res.comparison.points_checked << " points\n";
    r.data["lhs"] = poly_to_json(res.lhs);
    r.data["rhs"] = poly_to_json(res.rhs);
    json gs = json::array();
    for (const auto& g : res.rhs_factors)
        gs.push_back(poly_to_json(g));
    r.data["rhs_factors"] = gs;
    r.data["relation"] = to_string(res.comparison.relation);
    r.data["exact"] = res.comparison.exact;
    auto rel = res.comparison.relation;
    if (rel != FnRelation::Equal && rel != FnRelation::SurpassesNu)
        r.code = ExitUnverified;
}

void cmd_exchange(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 2, 2, "exchange expects two polynomials");
    auto ps = parse_polys(in, parse_options(s));
    auto res = exchange_step(ps[0], ps[1]);
    r.text << "common: " << to_string(res.common) << "\n";
    r.text << "exchanged: " << to_string(res.exchanged) << "\n";
    r.data["common"] = poly_to_json(res.common);
    r.data["exchanged"] = poly_to_json(res.exchanged);
}

json load_json(const std::string& arg)
{
    std::string text = arg;
    auto first = arg.find_first_not_of(" \t\n");
    if (first == std::string::npos || arg[first] != '{') {
        std::ifstream file(arg);
        if (!file)
            throw UsageError("cannot open '" + arg + "'");
        std::stringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

void cmd_tropicalize(const std::vector<std::string>& in, const Settings& s, Report& r)
{
    need(in, 1, 1, "tropicalize expects one classical polynomial (JSON file or inline)");
    auto f = classical_from_json(load_json(in[0]));
    auto t = tropicalize_poly(f, parse_semiring_mode(s.mode));
    r.text << to_string(t) << "\n";
    r.data["tropicalization"] = poly_to_json(t);
}

ExponentVec parse_monomial_exponent(const std::string& at, std::size_t n, const Settings& s)
{
    if (!at.empty() && at.find_first_not_of("0123456789-/., ") == std::string::npos) {
        ExponentVec e;
        std::stringstream ss(at);
        std::string piece;
        while (std::getline(ss, piece, ','))
            e.push_back(parse_rational(piece));
        if (e.size() != n)
            throw UsageError("--at has " + std::to_string(e.size()) + " entries, expected " + std::to_string(n));
        return e;
    }
    ParseOptions o = parse_options(s);
    o.exponents = ExponentMode::Rational;
    o.vars = n;
    auto m = parse_poly(at, o);
    if (m.size() != 1 || m.vars() != n)
        throw UsageError("--at must name a single monomial in " + std::to_string(n) + " variables");
    return m.leading().exponent;
}

void cmd_eliminate(const std::vector<std::string>& in, const Settings& s, const std::string& at, Report& r)
{
    need(in, 2, 2, "eliminate expects two classical polynomials");
    if (at.empty())
        throw UsageError("eliminate needs --at <monomial>");
    auto f = classical_from_json(load_json(in[0]));
    auto g = classical_from_json(load_json(in[1]));
    auto h = parse_monomial_exponent(at, f.vars(), s);
    auto res = monomial_eliminate(f, g, h, parse_semiring_mode(s.mode));
    r.text << "p: " << (res.p ? to_string(*res.p) : std::string("(empty)")) << "\n";
    r.text << "q: " << (res.q ? to_string(*res.q) : std::string("(empty)")) << "\n";
    r.data["p"] = res.p ? poly_to_json(*res.p) : json(nullptr);
    r.data["q"] = res.q ? poly_to_json(*res.q) : json(nullptr);
    r.data["pbar"] = classical_to_json(res.pbar);
    r.data["qbar"] = classical_to_json(res.qbar);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact layered tropical polynomial toolkit", "laytrop"};
    app.fallthrough();
    app.require_subcommand(1);
    Settings s;
    app.add_option("--mode", s.mode, "Semiring: maxplus, supertropical or layered")
        ->check(CLI::IsMember({"maxplus", "supertropical", "layered"}));
    app.add_option("--exponents", s.exponents, "Exponent mode: poly, laurent or rational (inferred by default)")
        ->check(CLI::IsMember({"poly", "laurent", "rational"}));
    app.add_option("--vars", s.vars, "Minimum number of variables");
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", s.seed, "Seed for sampled comparisons");
    app.add_option("--samples", s.samples, "Random sample points for multivariate comparisons");

    std::vector<std::string> inputs;
    std::string ell, at;
    std::vector<std::string> perm;
    struct Entry {
        const char* name;
        const char* help;
    };
    const Entry entries[] = {
        {"eval", "Evaluate a polynomial at a point"},
        {"essential", "Essential, boundary and inessential monomials"},
        {"roots", "Corner roots of a univariate polynomial"},
        {"csupp", "Corner support at a point"},
        {"ghost", "Corner-root, ghost-root and ell-locus tests at a point"},
        {"components", "Univariate component cells and breakpoints"},
        {"covered", "Layering-map covering test: f then generators"},
        {"factor", "Univariate factorization"},
        {"factor-binomial", "Monomial times a power of an irreducible binomial"},
        {"reduce-binomials", "Reduce a binomial set to lattice generators"},
        {"member", "Is the first binomial generated by the rest"},
        {"divide", "Residuation division: divide g [by] f"},
        {"principal", "Monic tangibly spanned generator with certificates"},
        {"identity", "Permanent product identity (--perm f1 f2 ...)"},
        {"exchange", "Exchange step on two polynomials"},
        {"tropicalize", "Tropicalize a classical polynomial given as JSON"},
        {"eliminate", "Monomial elimination of two classical polynomials"},
    };
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        sub->add_option("inputs", inputs, "Inputs");
        if (std::string(e.name) == "ghost")
            sub->add_option("--ell", ell, "Layer for the ell-locus test");
        if (std::string(e.name) == "eliminate")
            sub->add_option("--at", at, "Monomial to eliminate, e.g. x1 or 1,0");
        if (std::string(e.name) == "identity")
            sub->add_option("--perm", perm, "Polynomials f1 ... fm")->expected(0, -1);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    Report r;
    try {
        if (name == "eval")
            cmd_eval(inputs, s, r);
        else if (name == "essential")
            cmd_essential(inputs, s, r);
        else if (name == "roots")
            cmd_roots(inputs, s, r);
        else if (name == "csupp")
            cmd_csupp(inputs, s, r);
        else if (name == "ghost")
            cmd_ghost(inputs, s, ell, r);
        else if (name == "components")
            cmd_components(inputs, s, r);
        else if (name == "covered")
            cmd_covered(inputs, s, r);
        else if (name == "factor")
            cmd_factor(inputs, s, r);
        else if (name == "factor-binomial")
            cmd_factor_binomial(inputs, s, r);
        else if (name == "reduce-binomials")
            cmd_reduce(inputs, s, r);
        else if (name == "member")
            cmd_member(inputs, s, r);
        else if (name == "divide")
            cmd_divide(inputs, s, r);
        else if (name == "principal")
            cmd_principal(inputs, s, r);
        else if (name == "identity") {
            auto all = perm;
            all.insert(all.end(), inputs.begin(), inputs.end());
            cmd_identity(all, s, r);
        } else if (name == "exchange")
            cmd_exchange(inputs, s, r);
        else if (name == "tropicalize")
            cmd_tropicalize(inputs, s, r);
        else if (name == "eliminate")
            cmd_eliminate(inputs, s, at, r);
    } catch (const UsageError& e) {
        err << "usage error: " << name << ": " << e.what() << "\n";
        return ExitUsage;
    } catch (const Error& e) {
        err << name << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? ExitUsage : ExitDomain;
    }

    if (s.format == "structured") {
        r.data["command"] = name;
        r.data["exit"] = r.code;
        out << r.data.dump(2) << "\n";
    } else {
        out << r.text.str();
    }
    return r.code;
}

} // namespace laytrop
