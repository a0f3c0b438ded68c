#pragma once

#include "laytrop/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace laytrop {

struct PermanentIdentity {
    TropPoly lhs;                     // prod_{i<j} (f_i + f_j)
    std::vector<TropPoly> rhs_factors; // g_1, ..., g_{m-1}
    TropPoly rhs;                     // g_1 * ... * g_{m-1}
    Comparison comparison;            // rhs against lhs
};

PermanentIdentity permanent_factors(const std::vector<TropPoly>& fs, const CompareOptions& opts = {});

std::vector<TropPoly> binomials_of(const TropPoly& f);

struct ExchangeResult {
    TropPoly common;                  // nu-common part taken from p
    TropPoly common_q;                // the same monomials as they appear in q
    std::optional<TropPoly> residual_p;
    std::optional<TropPoly> residual_q;
    TropPoly exchanged;               // residual_p + residual_q
};

ExchangeResult exchange_step(const TropPoly& p, const TropPoly& q);

enum class FactorRelation { Equal, NuEquivalent, SurpassesNu, Unfactored };
const char* to_string(FactorRelation r);

struct GhostInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

struct FactorizationResult {
    LayeredScalar unit;
    std::vector<std::pair<TropPoly, unsigned>> factors;
    FactorRelation relation = FactorRelation::Unfactored;
    TropPoly expansion;
    std::optional<std::vector<Rational>> witness;
    std::vector<GhostInterval> ghost_intervals;
};

FactorizationResult factor_univariate_tangible(const TropPoly& f);
FactorizationResult factor_univariate_full(const TropPoly& f);

struct DivisionResult {
    TropPoly quotient;
    bool verified = false;
    FnRelation relation = FnRelation::Incomparable;
    std::optional<std::vector<Rational>> witness;
    bool optimal = true; // raising any free quotient coefficient breaks u*f <=nu g
};

/// Residuation of g by f: the largest quotient lambda^t + u with
/// (lambda^t + u) f <=nu g, verified by function comparison.
DivisionResult l_divide(const TropPoly& g, const TropPoly& f);

struct PrincipalResult {
    TropPoly generator;
    std::vector<DivisionResult> certificates; // one per input
};

PrincipalResult principal_generator(const std::vector<TropPoly>& gens);

/// Divide through by the leading coefficient.
TropPoly make_monic(const TropPoly& f);

} // namespace laytrop
