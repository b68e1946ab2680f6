#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gradalg/poly.hpp"

namespace gradalg {

/// First N coefficients of the formal inverse 1/p(t).
struct SeriesPrefix {
    std::vector<Integer> terms;
    IntPoly source;
    /// First n with terms[n] == 0 while some later term is nonzero.
    std::optional<std::size_t> gap_index;
    /// First n with terms[n] < 0.
    std::optional<std::size_t> negative_index;

    std::size_t size() const { return terms.size(); }
    const Integer& operator[](std::size_t n) const { return terms[n]; }
};

namespace detail {

inline std::optional<std::size_t> find_gap(const std::vector<Integer>& terms) {
    std::optional<std::size_t> first_zero;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        if (terms[n] == 0) {
            if (!first_zero) first_zero = n;
        } else if (first_zero) {
            return first_zero;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// a_0 = 1, a_n = -sum_{k=1}^{min(n, deg p)} p_k a_{n-k}.
inline SeriesPrefix series_inverse(const IntPoly& p, std::size_t count) {
    if (p.coeff(0) != 1)
        throw std::invalid_argument("series_inverse: denominator must have constant term 1");
    if (count == 0) throw std::invalid_argument("series_inverse: prefix length must be positive");

    const auto& pc = p.coeffs();
    const std::size_t deg = pc.size() - 1;
    SeriesPrefix out;
    out.source = p;
    out.terms.resize(count);
    out.terms[0] = 1;
    for (std::size_t n = 1; n < count; ++n) {
        Integer acc = 0;
        const std::size_t top = std::min(n, deg);
        for (std::size_t k = 1; k <= top; ++k)
            if (pc[k] != 0) acc += pc[k] * out.terms[n - k];
        out.terms[n] = -acc;
    }
    out.gap_index = detail::find_gap(out.terms);
    auto neg = std::find_if(out.terms.begin(), out.terms.end(), [](const Integer& a) { return a < 0; });
    if (neg != out.terms.end()) out.negative_index = static_cast<std::size_t>(neg - out.terms.begin());
    return out;
}

} // namespace gradalg
