#pragma once

#include "laytrop/rational.hpp"

#include <optional>
#include <vector>

namespace laytrop {

enum class Relation { Strict, NonStrict, Equal };

/// coeffs . x + constant  (> | >= | =)  0
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational constant;
    Relation relation = Relation::NonStrict;
};

/// Exact Fourier-Motzkin feasibility over Q^n. Returns a witness point when
/// the system is feasible. Between two bounds the witness takes the midpoint,
/// so witnesses of open systems land strictly inside.
std::optional<std::vector<Rational>> find_feasible_point(const std::vector<LinearConstraint>& system,
                                                         std::size_t vars);

bool satisfies(const LinearConstraint& c, const std::vector<Rational>& x);

/// Unique solution of the square system A x = b, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

} // namespace laytrop
