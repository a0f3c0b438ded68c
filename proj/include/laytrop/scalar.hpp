#pragma once

#include "laytrop/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace laytrop {

/// The three running settings: max-plus (L = {1}), standard supertropical
/// (L = {1, inf}) and rational layers (L = Q>=1 plus inf).
enum class SemiringMode { MaxPlus, StandardSupertropical, LayeredQ };

const char* to_string(SemiringMode mode);
SemiringMode parse_semiring_mode(std::string_view name);

/// Sort-semiring element: a rational q >= 1 or infinity.
class Layer {
public:
    Layer() : finite_(1) {}
    explicit Layer(Rational q);
    static Layer infinite();
    static Layer one() { return Layer(); }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_one() const noexcept { return !infinite_ && finite_ == 1; }
    /// Finite value; meaningless when infinite.
    const Rational& value() const noexcept { return finite_; }

    friend bool operator==(const Layer& a, const Layer& b);
    friend std::strong_ordering operator<=>(const Layer& a, const Layer& b);

private:
    bool infinite_ = false;
    Rational finite_;
};

std::string to_string(const Layer& k);

Layer layer_add(const Layer& a, const Layer& b, SemiringMode mode);
Layer layer_mul(const Layer& a, const Layer& b, SemiringMode mode);
/// k^e for a nonnegative integer e (e = 0 gives 1).
Layer layer_pow(const Layer& k, const Integer& e, SemiringMode mode);
bool layer_in_mode(const Layer& k, SemiringMode mode);

/// Element a^[k] of the uniform layered domain over (Q, max, +), or the
/// optional adjoined bottom element.
class LayeredScalar {
public:
    /// Tangible zero, the multiplicative identity.
    LayeredScalar() = default;
    LayeredScalar(Rational value, Layer layer) : value_(std::move(value)), layer_(std::move(layer)) {}

    static LayeredScalar tangible(Rational value) { return {std::move(value), Layer::one()}; }
    static LayeredScalar ghost(Rational value) { return {std::move(value), Layer::infinite()}; }
    static LayeredScalar bottom();

    bool is_bottom() const noexcept { return bottom_; }
    bool is_tangible() const noexcept { return !bottom_ && layer_.is_one(); }
    const Rational& value() const noexcept { return value_; }
    const Layer& layer() const noexcept { return layer_; }

    friend bool operator==(const LayeredScalar& a, const LayeredScalar& b);

private:
    bool bottom_ = false;
    Rational value_;
    Layer layer_;
};

LayeredScalar scalar_add(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode);
LayeredScalar scalar_mul(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode);
/// a^e for integer e; negative e requires a tangible.
LayeredScalar scalar_pow(const LayeredScalar& a, const Integer& e, SemiringMode mode);
/// a / b for tangible b.
LayeredScalar scalar_div(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode);

/// Layer-blind comparison of tangible values; bottom sorts below everything.
std::strong_ordering nu_compare(const LayeredScalar& a, const LayeredScalar& b);
inline bool nu_equal(const LayeredScalar& a, const LayeredScalar& b)
{
    return nu_compare(a, b) == 0;
}

/// k = ell + p for some p in L.
bool is_ell_ghost(const Layer& k, const Layer& ell, SemiringMode mode);

/// a = b, or a = b + c with c an s(b)-ghost.
bool surpasses(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode);
bool surpasses_nu(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode);

/// The tangible m-th root; throws GhostRoot unless a has layer 1.
LayeredScalar nth_root(const LayeredScalar& a, const Integer& m);

/// Throws ModeViolation if the layer does not belong to the mode's L.
void check_in_mode(const LayeredScalar& a, SemiringMode mode);

/// `<rational>`, `<rational>[<layer>]`, or `<rational>v` (supertropical only).
LayeredScalar parse_scalar(std::string_view text, SemiringMode mode);
std::string to_string(const LayeredScalar& a, SemiringMode mode);

} // namespace laytrop
