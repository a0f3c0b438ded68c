#include "laytrop/scalar.hpp"

#include "laytrop/error.hpp"

namespace laytrop {

const char* to_string(SemiringMode mode)
{
    switch (mode) {
    case SemiringMode::MaxPlus: return "maxplus";
    case SemiringMode::StandardSupertropical: return "supertropical";
    case SemiringMode::LayeredQ: return "layered";
    }
    return "?";
}

SemiringMode parse_semiring_mode(std::string_view name)
{
    if (name == "maxplus")
        return SemiringMode::MaxPlus;
    if (name == "supertropical")
        return SemiringMode::StandardSupertropical;
    if (name == "layered")
        return SemiringMode::LayeredQ;
    throw Error(ErrorKind::InvalidArgument, "unknown semiring mode '" + std::string(name) + "'");
}

Layer::Layer(Rational q) : finite_(std::move(q))
{
    finite_.canonicalize();
    if (finite_ < 1)
        throw Error(ErrorKind::ModeViolation, "layer " + to_string(finite_) + " is below 1");
}

Layer Layer::infinite()
{
    Layer k;
    k.infinite_ = true;
    return k;
}

bool operator==(const Layer& a, const Layer& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ == b.infinite_;
    return a.finite_ == b.finite_;
}

std::strong_ordering operator<=>(const Layer& a, const Layer& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ <=> b.infinite_;
    int c = cmp(a.finite_, b.finite_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const Layer& k)
{
    return k.is_infinite() ? std::string("inf") : to_string(k.value());
}

Layer layer_add(const Layer& a, const Layer& b, SemiringMode mode)
{
    switch (mode) {
    case SemiringMode::MaxPlus:
        return Layer::one();
    case SemiringMode::StandardSupertropical:
        // every sum of two layers exceeds 1
        return Layer::infinite();
    case SemiringMode::LayeredQ:
        if (a.is_infinite() || b.is_infinite())
            return Layer::infinite();
        return Layer(a.value() + b.value());
    }
    return Layer::one();
}

Layer layer_mul(const Layer& a, const Layer& b, SemiringMode mode)
{
    switch (mode) {
    case SemiringMode::MaxPlus:
        return Layer::one();
    case SemiringMode::StandardSupertropical:
        return (a.is_one() && b.is_one()) ? Layer::one() : Layer::infinite();
    case SemiringMode::LayeredQ:
        if (a.is_infinite() || b.is_infinite())
            return Layer::infinite();
        return Layer(a.value() * b.value());
    }
    return Layer::one();
}

Layer layer_pow(const Layer& k, const Integer& e, SemiringMode mode)
{
    if (e < 0)
        throw Error(ErrorKind::RationalPowerOfGhost, "negative power of layer " + to_string(k));
    if (e == 0 || k.is_one())
        return Layer::one();
    if (mode == SemiringMode::MaxPlus)
        return Layer::one();
    if (k.is_infinite() || mode == SemiringMode::StandardSupertropical)
        return Layer::infinite();
    Integer num = k.value().get_num();
    Integer den = k.value().get_den();
    unsigned long ex = e.get_ui();
    Integer pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), ex);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), ex);
    return Layer(Rational(pn, pd));
}

bool layer_in_mode(const Layer& k, SemiringMode mode)
{
    switch (mode) {
    case SemiringMode::MaxPlus: return k.is_one();
    case SemiringMode::StandardSupertropical: return k.is_one() || k.is_infinite();
    case SemiringMode::LayeredQ: return true;
    }
    return false;
}

LayeredScalar LayeredScalar::bottom()
{
    LayeredScalar b;
    b.bottom_ = true;
    return b;
}

bool operator==(const LayeredScalar& a, const LayeredScalar& b)
{
    if (a.bottom_ || b.bottom_)
        return a.bottom_ == b.bottom_;
    return a.value_ == b.value_ && a.layer_ == b.layer_;
}

LayeredScalar scalar_add(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode)
{
    if (a.is_bottom())
        return b;
    if (b.is_bottom())
        return a;
    int c = cmp(a.value(), b.value());
    if (c > 0)
        return a;
    if (c < 0)
        return b;
    return {a.value(), layer_add(a.layer(), b.layer(), mode)};
}

LayeredScalar scalar_mul(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode)
{
    if (a.is_bottom() || b.is_bottom())
        return LayeredScalar::bottom();
    return {a.value() + b.value(), layer_mul(a.layer(), b.layer(), mode)};
}

LayeredScalar scalar_pow(const LayeredScalar& a, const Integer& e, SemiringMode mode)
{
    if (a.is_bottom())
        return a;
    if (e < 0 && !a.layer().is_one())
        throw Error(ErrorKind::RationalPowerOfGhost,
                    "negative power of non-tangible " + to_string(a, mode));
    Layer k = e < 0 ? Layer::one() : layer_pow(a.layer(), e, mode);
    return {a.value() * Rational(e), k};
}

LayeredScalar scalar_div(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode)
{
    if (b.is_bottom() || !b.layer().is_one())
        throw Error(ErrorKind::InvalidArgument, "division by non-tangible " + to_string(b, mode));
    if (a.is_bottom())
        return a;
    return {a.value() - b.value(), a.layer()};
}

std::strong_ordering nu_compare(const LayeredScalar& a, const LayeredScalar& b)
{
    if (a.is_bottom() || b.is_bottom())
        return b.is_bottom() <=> a.is_bottom();
    int c = cmp(a.value(), b.value());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool is_ell_ghost(const Layer& k, const Layer& ell, SemiringMode mode)
{
    switch (mode) {
    case SemiringMode::MaxPlus:
        return k.is_one();
    case SemiringMode::StandardSupertropical:
        return k.is_infinite();
    case SemiringMode::LayeredQ:
        if (k.is_infinite())
            return true;
        if (ell.is_infinite())
            return false;
        return k.value() - ell.value() >= 1;
    }
    return false;
}

bool surpasses(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode)
{
    if (a == b)
        return true;
    if (a.is_bottom() || b.is_bottom())
        return false;
    // c <_nu b leaves b unchanged; c ~ b adds layers; c >_nu b replaces b.
    // Either of the last two needs s(a) to be an s(b)-ghost.
    return nu_compare(a, b) >= 0 && is_ell_ghost(a.layer(), b.layer(), mode);
}

bool surpasses_nu(const LayeredScalar& a, const LayeredScalar& b, SemiringMode mode)
{
    return nu_equal(a, b) && surpasses(a, b, mode);
}

LayeredScalar nth_root(const LayeredScalar& a, const Integer& m)
{
    if (m <= 0)
        throw Error(ErrorKind::InvalidArgument, "root index must be positive");
    if (a.is_bottom() || !a.layer().is_one())
        throw Error(ErrorKind::GhostRoot, "nth_root of a non-tangible element");
    Rational v = a.value() / Rational(m);
    v.canonicalize();
    return LayeredScalar::tangible(v);
}

void check_in_mode(const LayeredScalar& a, SemiringMode mode)
{
    if (!a.is_bottom() && !layer_in_mode(a.layer(), mode))
        throw Error(ErrorKind::ModeViolation, "layer " + to_string(a.layer()) + " is not allowed in "
                                                  + to_string(mode) + " mode");
}

LayeredScalar parse_scalar(std::string_view text, SemiringMode mode)
{
    std::string_view s = text;
    Layer layer;
    if (!s.empty() && s.back() == ']') {
        auto open = s.rfind('[');
        if (open == std::string_view::npos)
            throw Error(ErrorKind::Parse, "unbalanced layer bracket in '" + std::string(text) + "'");
        auto inner = s.substr(open + 1, s.size() - open - 2);
        if (inner == "inf")
            layer = Layer::infinite();
        else
            layer = Layer(parse_rational(inner));
        s = s.substr(0, open);
    } else if (!s.empty() && s.back() == 'v') {
        if (mode != SemiringMode::StandardSupertropical)
            throw Error(ErrorKind::ModeViolation,
                        "ghost suffix 'v' is only legal in supertropical mode: '" + std::string(text) + "'");
        layer = Layer::infinite();
        s.remove_suffix(1);
    }
    LayeredScalar a(parse_rational(s), layer);
    check_in_mode(a, mode);
    return a;
}

std::string to_string(const LayeredScalar& a, SemiringMode mode)
{
    if (a.is_bottom())
        return "bottom";
    std::string s = to_string(a.value());
    if (a.layer().is_one())
        return s;
    if (mode == SemiringMode::StandardSupertropical && a.layer().is_infinite())
        return s + "v";
    return s + "[" + to_string(a.layer()) + "]";
}

} // namespace laytrop
