#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gradalg/poly.hpp"

namespace gradalg {

/// Number of sign alternations along the coefficient sequence, zero
/// coefficients skipped.
inline unsigned sign_changes(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sign_changes: zero polynomial");
    unsigned changes = 0;
    int last = 0;
    for (const Integer& c : p.coeffs()) {
        const int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// t^l p(1/t) == (-1)^d p(t), with p read in the degree window [0, l].
inline bool is_self_reciprocal(const IntPoly& p, std::size_t l, unsigned d) {
    if (p.degree() && *p.degree() > l)
        throw std::invalid_argument("is_self_reciprocal: degree exceeds the window");
    const bool negate = (d % 2) != 0;
    for (std::size_t k = 0; k <= l; ++k) {
        Integer mirrored = p.coeff(l - k);
        if (negate) mirrored = -mirrored;
        if (mirrored != p.coeff(k)) return false;
    }
    return true;
}

struct WeightedFactor {
    std::size_t degree;   // i in (1 - t^i)^{n_i}
    std::size_t multiplicity;

    friend bool operator==(const WeightedFactor&, const WeightedFactor&) = default;
};

/// Writes p as prod (1 - t^i)^{n_i}, peeling off the lowest nonzero term at
/// each step. Returns nullopt when that term is positive or a division is
/// inexact. Requires p(0) = 1.
inline std::optional<std::vector<WeightedFactor>> weighted_decompose(const IntPoly& p) {
    if (p.coeff(0) != 1) throw std::invalid_argument("weighted_decompose: requires p(0) = 1");
    std::vector<WeightedFactor> factors;
    IntPoly cur = p;
    while (!cur.is_one()) {
        std::size_t i = 1;
        while (cur.coeff(i) == 0) ++i;
        const Integer c = cur.coeff(i);
        if (c > 0) return std::nullopt;
        // (1 - t^i)^k has degree i*k, which must fit under deg(cur).
        if (Integer(-c) * i > *cur.degree()) return std::nullopt;
        const auto count = static_cast<std::size_t>(-c);
        const IntPoly step = IntPoly::one_minus_power(i);
        for (std::size_t rep = 0; rep < count; ++rep) {
            auto q = exact_divide(cur, step);
            if (!q) return std::nullopt;
            cur = std::move(*q);
        }
        factors.push_back({i, count});
    }
    return factors;
}

inline IntPoly weighted_product(const std::vector<WeightedFactor>& factors) {
    IntPoly acc = IntPoly::constant(1);
    for (const auto& f : factors) acc *= IntPoly::one_minus_power(f.degree).pow(static_cast<unsigned>(f.multiplicity));
    return acc;
}

} // namespace gradalg
