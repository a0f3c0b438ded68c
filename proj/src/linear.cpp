#include "laytrop/linear.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace laytrop {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

// Scale so the last nonzero coefficient has absolute value one. Keeps
// duplicate detection cheap.
LinearConstraint normalized(LinearConstraint c)
{
    Rational scale = 0;
    for (auto it = c.coeffs.rbegin(); it != c.coeffs.rend(); ++it)
        if (*it != 0) {
            scale = abs(*it);
            break;
        }
    if (scale == 0)
        scale = c.constant != 0 ? Rational(abs(c.constant)) : Rational(1);
    for (auto& a : c.coeffs)
        a /= scale;
    c.constant /= scale;
    return c;
}

struct ConstraintKey {
    bool operator()(const LinearConstraint& a, const LinearConstraint& b) const
    {
        if (a.relation != b.relation)
            return a.relation < b.relation;
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            int c = cmp(a.coeffs[i], b.coeffs[i]);
            if (c != 0)
                return c < 0;
        }
        return a.constant < b.constant;
    }
};

bool constant_holds(const LinearConstraint& c)
{
    switch (c.relation) {
    case Relation::Strict: return c.constant > 0;
    case Relation::NonStrict: return c.constant >= 0;
    case Relation::Equal: return c.constant == 0;
    }
    return false;
}

} // namespace

bool satisfies(const LinearConstraint& c, const std::vector<Rational>& x)
{
    Rational v = dot(c.coeffs, x) + c.constant;
    switch (c.relation) {
    case Relation::Strict: return v > 0;
    case Relation::NonStrict: return v >= 0;
    case Relation::Equal: return v == 0;
    }
    return false;
}

std::optional<std::vector<Rational>> find_feasible_point(const std::vector<LinearConstraint>& system,
                                                         std::size_t vars)
{
    // levels[k] holds the constraints over x_0..x_k that exist right before
    // x_k is eliminated.
    std::vector<std::vector<LinearConstraint>> levels(vars);
    std::vector<LinearConstraint> current;
    for (const auto& c : system) {
        assert(c.coeffs.size() == vars);
        current.push_back(normalized(c));
    }

    for (std::size_t k = vars; k-- > 0;) {
        levels[k] = current;
        std::vector<LinearConstraint> next;
        std::set<LinearConstraint, ConstraintKey> seen;
        auto push = [&](LinearConstraint c) {
            c = normalized(std::move(c));
            bool trivial = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& a) { return a == 0; });
            if (trivial && constant_holds(c))
                return;
            if (seen.insert(c).second)
                next.push_back(std::move(c));
        };

        auto eq = std::find_if(current.begin(), current.end(), [&](const LinearConstraint& c) {
            return c.relation == Relation::Equal && c.coeffs[k] != 0;
        });
        if (eq != current.end()) {
            // Substitute x_k from the equation into every other constraint.
            LinearConstraint pivot = *eq;
            for (const auto& c : current) {
                if (&c == &*eq)
                    continue;
                if (c.coeffs[k] == 0) {
                    push(c);
                    continue;
                }
                Rational f = c.coeffs[k] / pivot.coeffs[k];
                LinearConstraint r = c;
                for (std::size_t i = 0; i < vars; ++i)
                    r.coeffs[i] -= f * pivot.coeffs[i];
                r.constant -= f * pivot.constant;
                r.coeffs[k] = 0;
                push(std::move(r));
            }
        } else {
            std::vector<const LinearConstraint*> pos, neg;
            for (const auto& c : current) {
                if (c.coeffs[k] > 0)
                    pos.push_back(&c);
                else if (c.coeffs[k] < 0)
                    neg.push_back(&c);
                else
                    push(c);
            }
            for (const auto* p : pos)
                for (const auto* q : neg) {
                    Rational wp = -q->coeffs[k];
                    Rational wq = p->coeffs[k];
                    LinearConstraint r;
                    r.coeffs.resize(vars);
                    for (std::size_t i = 0; i < vars; ++i)
                        r.coeffs[i] = wp * p->coeffs[i] + wq * q->coeffs[i];
                    r.coeffs[k] = 0;
                    r.constant = wp * p->constant + wq * q->constant;
                    r.relation = (p->relation == Relation::Strict || q->relation == Relation::Strict)
                                     ? Relation::Strict
                                     : Relation::NonStrict;
                    push(std::move(r));
                }
        }
        current = std::move(next);
    }

    for (const auto& c : current)
        if (!constant_holds(c))
            return std::nullopt;

    std::vector<Rational> x(vars, Rational(0));
    for (std::size_t k = 0; k < vars; ++k) {
        std::optional<Rational> lo, hi, fixed;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : levels[k]) {
            const Rational& a = c.coeffs[k];
            if (a == 0)
                continue;
            Rational rest = c.constant;
            for (std::size_t i = 0; i < k; ++i)
                rest += c.coeffs[i] * x[i];
            Rational bound = -rest / a;
            if (c.relation == Relation::Equal) {
                fixed = bound;
                continue;
            }
            bool strict = c.relation == Relation::Strict;
            if (a > 0) {
                if (!lo || bound > *lo || (bound == *lo && strict)) {
                    lo = bound;
                    lo_strict = strict;
                }
            } else {
                if (!hi || bound < *hi || (bound == *hi && strict)) {
                    hi = bound;
                    hi_strict = strict;
                }
            }
        }
        if (fixed)
            x[k] = *fixed;
        else if (lo && hi)
            x[k] = (*lo == *hi) ? *lo : Rational((*lo + *hi) / 2);
        else if (lo)
            x[k] = *lo + 1;
        else if (hi)
            x[k] = *hi - 1;
        (void)lo_strict;
        (void)hi_strict;
    }
    for (const auto& c : system)
        if (!satisfies(c, x))
            return std::nullopt; // unreachable for a correct elimination
    return x;
}

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

} // namespace laytrop
