#pragma once

#include "laytrop/poly.hpp"

#include <optional>
#include <vector>

namespace laytrop {

/// The tie locus <normal, x> = offset of a binomial.
struct Hyperplane {
    ExponentVec normal;
    Rational offset;

    bool contains(const std::vector<Rational>& x) const;
};

/// Exponents of the monomials attaining the nu-maximum at a.
std::vector<ExponentVec> corner_support(const TropPoly& f, const Point& a);

bool is_corner_root(const TropPoly& f, const Point& a);
bool is_ghost_root(const TropPoly& f, const Point& a);
bool in_ell_locus(const TropPoly& f, const Point& a, const Layer& ell);

std::vector<Rational> corner_roots_univariate(const TropPoly& f);

Hyperplane corner_locus_binomial(const TropPoly& b);

/// Tangible corner root found on the tie face of the first pair of
/// essential monomials (in monomial order) whose face is nonempty.
Point find_corner_root(const TropPoly& f);

/// Membership in the corner-locus ideal and the ghost ideal of a point.
bool in_corner_point_ideal(const TropPoly& f, const Point& a);
bool in_ghost_point_ideal(const TropPoly& f, const Point& a);

struct CoverResult {
    bool covered = true;
    std::vector<std::optional<std::size_t>> cover; // generator index per cell of f
    std::optional<std::size_t> failing_cell;
};

/// Layering-map covering: every cell of f has some generator g with
/// theta_g <= theta_f throughout the cell.
CoverResult is_covered_univariate(const TropPoly& f, const std::vector<TropPoly>& gens);

} // namespace laytrop
