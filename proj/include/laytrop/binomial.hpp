#pragma once

#include "laytrop/poly.hpp"

#include <optional>
#include <vector>

namespace laytrop {

/// Monic binomial lambda^e + gamma. Its corner locus is <e, x> = value(gamma).
struct NormalBinomial {
    ExponentVec exponent;
    LayeredScalar constant;

    friend bool operator==(const NormalBinomial&, const NormalBinomial&) = default;
};

std::string to_string(const NormalBinomial& b, SemiringMode mode);
TropPoly to_poly(const NormalBinomial& b, ExponentMode emode, SemiringMode smode);

/// Divide by the larger monomial's coefficient and the smaller monomial:
/// e = e_large - e_small, gamma = c_small / c_large. A ghost leading
/// coefficient against a tangible one reverses the orientation.
NormalBinomial normalize(const TropPoly& f);

NormalBinomial combine(const NormalBinomial& b1, const NormalBinomial& b2, SemiringMode mode);

enum class GeneratorStatus { Proper, Improper, RedundanciesDropped };
const char* to_string(GeneratorStatus s);

struct GeneratorSet {
    std::vector<NormalBinomial> generators;
    GeneratorStatus status = GeneratorStatus::Proper;
    std::vector<std::size_t> redundant;            // input indices dropped
    std::optional<std::size_t> improper_witness;   // input that made the set improper
    std::size_t vars = 0;
};

GeneratorSet reduce(const std::vector<NormalBinomial>& bins, SemiringMode mode);

struct Membership {
    bool generated = false;
    std::vector<Integer> combination; // multipliers over gens.generators
};

Membership is_generated(const NormalBinomial& b, const GeneratorSet& gens, SemiringMode mode);

/// Tangible binomials go through reduce; a half-ghost lambda^e + beta is
/// dropped when the tangible lattice yields lambda^e + gamma with gamma <=nu beta.
GeneratorSet half_ghost_reduce(const std::vector<NormalBinomial>& bins, SemiringMode mode);

struct BinomialFactorization {
    TropPoly monomial;
    NormalBinomial irreducible;
    TropPoly irreducible_poly;
    unsigned multiplicity = 1;
    FnRelation relation = FnRelation::Equal;
    bool verified = false;
};

BinomialFactorization factor_binomial(const TropPoly& b, const CompareOptions& opts = {});

} // namespace laytrop
