#pragma once

#include "laytrop/poly.hpp"
#include "laytrop/puiseux.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace laytrop {

struct ParseOptions {
    SemiringMode semiring = SemiringMode::StandardSupertropical;
    std::optional<ExponentMode> exponents; // inferred from the input when empty
    std::size_t vars = 0;                  // at least this many variables
    std::vector<std::string> names;        // explicit variable order
};

/// Parses one polynomial. Variables are x (alone), x1..xn, or identifiers
/// (ordered alphabetically unless names are given).
TropPoly parse_poly(std::string_view text, const ParseOptions& opts = {});

/// Parses several polynomials over one shared variable set and exponent mode.
std::vector<TropPoly> parse_polys(const std::vector<std::string>& texts, const ParseOptions& opts = {});

/// Comma-separated scalars, e.g. "2,3v" or "1[2],0".
Point parse_point(std::string_view text, SemiringMode mode);
std::string to_string(const Point& a, SemiringMode mode);
std::string point_to_string(const std::vector<Rational>& x);

nlohmann::json poly_to_json(const TropPoly& f);
TropPoly poly_from_json(const nlohmann::json& j);

/// {"vars": n, "monomials": [{"exponents": [..], "coeff": [[c, v], ...]}]}
ClassicalPoly classical_from_json(const nlohmann::json& j);
nlohmann::json classical_to_json(const ClassicalPoly& f);

} // namespace laytrop
