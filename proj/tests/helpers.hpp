#pragma once

#include "laytrop/parse.hpp"
#include "laytrop/poly.hpp"

#include <string>
#include <vector>

namespace th {

inline laytrop::TropPoly P(const std::string& text,
                           laytrop::SemiringMode mode = laytrop::SemiringMode::StandardSupertropical,
                           std::size_t vars = 0)
{
    laytrop::ParseOptions o;
    o.semiring = mode;
    o.vars = vars;
    return laytrop::parse_poly(text, o);
}

inline laytrop::TropPoly PR(const std::string& text,
                            laytrop::SemiringMode mode = laytrop::SemiringMode::StandardSupertropical)
{
    laytrop::ParseOptions o;
    o.semiring = mode;
    o.exponents = laytrop::ExponentMode::Rational;
    return laytrop::parse_poly(text, o);
}

inline std::vector<laytrop::Rational> Q(std::initializer_list<long> xs)
{
    std::vector<laytrop::Rational> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace th
