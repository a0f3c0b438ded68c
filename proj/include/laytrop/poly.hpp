#pragma once

#include "laytrop/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace laytrop {

using ExponentVec = std::vector<Rational>;
using Point = std::vector<LayeredScalar>;

/// Lexicographic order with x1 < x2 < ... < xn: the exponent of the last
/// variable is the most significant.
struct MonomialOrder {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

enum class ExponentMode { Polynomial, Laurent, Rational };

const char* to_string(ExponentMode mode);
ExponentMode parse_exponent_mode(std::string_view name);
bool exponent_allowed(const Rational& e, ExponentMode mode);

struct Monomial {
    ExponentVec exponent;
    LayeredScalar coeff;
};

/// Finite sum of layered monomials. Support-equivalent monomials are merged
/// with scalar_add on construction; coefficients are never bottom and the
/// monomial map is never empty.
class TropPoly {
public:
    using TermMap = std::map<ExponentVec, LayeredScalar, MonomialOrder>;

    TropPoly(std::size_t vars, ExponentMode emode, SemiringMode smode, const std::vector<Monomial>& terms);

    static TropPoly constant(std::size_t vars, ExponentMode emode, SemiringMode smode, LayeredScalar c);
    static TropPoly monomial(ExponentMode emode, SemiringMode smode, ExponentVec e, LayeredScalar c);

    std::size_t vars() const noexcept { return vars_; }
    ExponentMode exponent_mode() const noexcept { return emode_; }
    SemiringMode semiring_mode() const noexcept { return smode_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    std::vector<Monomial> monomials() const;

    /// Highest monomial under MonomialOrder.
    Monomial leading() const;

    /// Same terms, reinterpreted under a wider exponent mode.
    TropPoly with_exponent_mode(ExponentMode emode) const;

    friend bool operator==(const TropPoly& a, const TropPoly& b);

private:
    TropPoly(std::size_t vars, ExponentMode emode, SemiringMode smode) : vars_(vars), emode_(emode), smode_(smode) {}

    std::size_t vars_;
    ExponentMode emode_;
    SemiringMode smode_;
    TermMap terms_;
};

TropPoly poly_add(const TropPoly& f, const TropPoly& g);
TropPoly poly_mul(const TropPoly& f, const TropPoly& g);
TropPoly poly_pow(const TropPoly& f, unsigned k);
TropPoly poly_product(const std::vector<TropPoly>& factors);

/// Value of one monomial at a point.
LayeredScalar monomial_value(const ExponentVec& e, const LayeredScalar& coeff, const Point& a, SemiringMode mode);
LayeredScalar evaluate(const TropPoly& f, const Point& a);
/// Evaluation at a tangible point given by its values.
LayeredScalar evaluate_at(const TropPoly& f, const std::vector<Rational>& x);

Point tangible_point(const std::vector<Rational>& x);

enum class MonomialStatus { Essential, Boundary, Inessential };
const char* to_string(MonomialStatus s);

struct EssentialReport {
    std::vector<Monomial> monomials;      // in MonomialOrder
    std::vector<MonomialStatus> status;   // parallel to monomials
    std::vector<std::optional<std::vector<Rational>>> witness; // strict-dominance witness
    TropPoly essential_part;              // f^es
    bool exact = true;                    // boundary/inessential split is sampled for n >= 2
};

EssentialReport essential_support(const TropPoly& f);
TropPoly essential_part(const TropPoly& f);

std::vector<ExponentVec> supp(const TropPoly& f);
std::vector<ExponentVec> tsupp(const TropPoly& f);
bool is_tangibly_spanned(const TropPoly& f);

enum class FnRelation { Equal, SurpassesNu, NuEquivalent, Surpasses, StrictlyDominates, Dominates, Incomparable };
const char* to_string(FnRelation r);

/// One pointwise property of f against g with the first refuting point found.
struct Facet {
    bool holds = true;
    std::optional<std::vector<Rational>> counterexample;
};

struct Comparison {
    FnRelation relation = FnRelation::Equal;
    bool exact = true;          // false: sampled pass for n >= 3
    std::size_t points_checked = 0;
    Facet equal;                // f(a) = g(a)
    Facet nu_equivalent;        // f(a) ~nu g(a)
    Facet surpasses;            // f(a) |= g(a)
    Facet surpasses_nu;         // f(a) |= g(a) and f(a) ~nu g(a)
    Facet dominates;            // f(a) >=nu g(a)
    Facet strictly_dominates;   // f(a) >nu g(a)
};

struct CompareOptions {
    std::uint64_t seed = 0x5eed;
    std::size_t samples = 200;
    std::vector<std::vector<Rational>> extra_points;
};

/// Tangible points at which two polynomial functions have to be compared.
/// Complete for n <= 2; a sample plus all tie and vertex witnesses for n >= 3.
std::vector<std::vector<Rational>> comparison_points(const std::vector<const TropPoly*>& polys,
                                                     const CompareOptions& opts, bool& exact);

Comparison compare_fn(const TropPoly& f, const TropPoly& g, const CompareOptions& opts = {});

struct Cell {
    std::optional<Rational> lo; // nullopt = -infinity
    std::optional<Rational> hi; // nullopt = +infinity
    Rational exponent;          // dominant essential monomial
    LayeredScalar coeff;
    Layer interior_layer;
};

/// Univariate component decomposition: breakpoints are the corner roots.
struct CellDescription {
    std::vector<Rational> breakpoints;
    std::vector<Layer> breakpoint_layers;
    std::vector<Cell> cells;
};

/// Vertices of the upper hull of (exponent, value) over a univariate
/// polynomial, in increasing exponent. These are its essential monomials.
std::vector<Monomial> upper_hull(const TropPoly& f);

CellDescription components_univariate(const TropPoly& f);
Layer layering_map(const TropPoly& f, const Point& a);

/// Componentwise a^t b^(1-t) over tangible points.
Point path_point(const Point& a, const Point& b, const Rational& t);

/// Canonical text form in the expression grammar.
std::string to_string(const TropPoly& f);
std::string exponent_to_string(const ExponentVec& e);
std::string variable_name(std::size_t index, std::size_t vars);

} // namespace laytrop
