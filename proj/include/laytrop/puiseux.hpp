#pragma once

#include "laytrop/poly.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace laytrop {

struct PuiseuxTerm {
    Rational coeff;
    Rational exponent;

    friend bool operator==(const PuiseuxTerm&, const PuiseuxTerm&) = default;
};

/// Finite sum of c t^v with strictly increasing exponents and nonzero
/// coefficients. The empty sum is zero.
class PuiseuxScalar {
public:
    PuiseuxScalar() = default;
    explicit PuiseuxScalar(std::vector<PuiseuxTerm> terms);
    static PuiseuxScalar constant(Rational c) { return PuiseuxScalar({{std::move(c), Rational(0)}}); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<PuiseuxTerm>& terms() const noexcept { return terms_; }

    friend bool operator==(const PuiseuxScalar&, const PuiseuxScalar&) = default;

private:
    std::vector<PuiseuxTerm> terms_;
};

PuiseuxScalar puiseux_add(const PuiseuxScalar& a, const PuiseuxScalar& b);
PuiseuxScalar puiseux_neg(const PuiseuxScalar& a);
PuiseuxScalar puiseux_sub(const PuiseuxScalar& a, const PuiseuxScalar& b);
PuiseuxScalar puiseux_mul(const PuiseuxScalar& a, const PuiseuxScalar& b);
PuiseuxScalar puiseux_scale(const PuiseuxScalar& a, const Rational& c);

/// Minus the lowest t-exponent, so that lower order means tropically larger.
Rational valuation(const PuiseuxScalar& p);

std::string to_string(const PuiseuxScalar& p);

class ClassicalPoly {
public:
    using TermMap = std::map<ExponentVec, PuiseuxScalar, MonomialOrder>;

    ClassicalPoly(std::size_t vars, const std::vector<std::pair<ExponentVec, PuiseuxScalar>>& terms);

    std::size_t vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Coefficient at e, zero when absent.
    PuiseuxScalar coeff(const ExponentVec& e) const;

    friend bool operator==(const ClassicalPoly&, const ClassicalPoly&) = default;

private:
    std::size_t vars_;
    TermMap terms_;
};

ClassicalPoly classical_add(const ClassicalPoly& f, const ClassicalPoly& g);
ClassicalPoly classical_sub(const ClassicalPoly& f, const ClassicalPoly& g);
ClassicalPoly classical_mul(const ClassicalPoly& f, const ClassicalPoly& g);
ClassicalPoly classical_scale(const ClassicalPoly& f, const PuiseuxScalar& c);

std::vector<ExponentVec> supp(const ClassicalPoly& f);

/// Exponent mode needed to hold every exponent of f.
ExponentMode exponent_mode_of(const ClassicalPoly& f);

TropPoly tropicalize_poly(const ClassicalPoly& f, SemiringMode mode = SemiringMode::MaxPlus);
TropPoly tropicalize_poly(const ClassicalPoly& f, SemiringMode mode, ExponentMode emode);

struct Elimination {
    ClassicalPoly pbar;
    ClassicalPoly qbar;
    std::optional<TropPoly> p;
    std::optional<TropPoly> q;
};

/// Cancels the monomial h between fbar and gbar: qbar = g_h fbar - f_h gbar,
/// pbar = fbar restricted to the common support outside supp(qbar).
Elimination monomial_eliminate(const ClassicalPoly& fbar, const ClassicalPoly& gbar, const ExponentVec& h,
                               SemiringMode mode = SemiringMode::MaxPlus);

} // namespace laytrop
