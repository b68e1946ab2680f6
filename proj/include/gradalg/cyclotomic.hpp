#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "gradalg/poly.hpp"

namespace gradalg {

inline unsigned long totient(unsigned long n) {
    if (n == 0) throw std::invalid_argument("totient: n must be positive");
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

class CyclotomicTable {
public:
    static CyclotomicTable& instance() {
        static CyclotomicTable table;
        return table;
    }

    IntPoly get(unsigned long n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(n); it != memo_.end()) return it->second;
        }
        // Built outside the lock; a concurrent duplicate build yields the same value.
        IntPoly phi = build(n);
        std::unique_lock lock(mutex_);
        return memo_.try_emplace(n, std::move(phi)).first->second;
    }

private:
    IntPoly build(unsigned long n) {
        // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
        IntPoly acc = IntPoly::monomial(n) - IntPoly::constant(1);
        for (unsigned long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            auto q = exact_divide(acc, get(d));
            if (!q) throw std::logic_error("cyclotomic: inexact quotient");
            acc = std::move(*q);
        }
        return acc;
    }

    std::shared_mutex mutex_;
    std::map<unsigned long, IntPoly> memo_;
};

} // namespace detail

/// n-th cyclotomic polynomial. Memoized; safe to call from several threads.
inline IntPoly cyclotomic(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
    return detail::CyclotomicTable::instance().get(n);
}

/// Largest k with (1 - t)^k dividing p.
inline unsigned multiplicity_at_one(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("multiplicity_at_one: zero polynomial");
    static const IntPoly one_minus_t{1, -1};
    unsigned k = 0;
    IntPoly cur = p;
    while (cur.degree().value_or(0) > 0) {
        auto q = exact_divide(cur, one_minus_t);
        if (!q) break;
        cur = std::move(*q);
        ++k;
    }
    return k;
}

/// p = (1 - t)^m * prod_j Phi_{indices[j]}(t), indices ascending, each > 1.
struct CycFactorization {
    unsigned m = 0;
    std::vector<unsigned long> indices;

    IntPoly reassemble() const {
        IntPoly acc = IntPoly{1, -1}.pow(m);
        for (unsigned long n : indices) acc *= cyclotomic(n);
        return acc;
    }

    friend bool operator==(const CycFactorization&, const CycFactorization&) = default;
};

/// Factors p into (1 - t)^m times cyclotomic polynomials, or returns nullopt
/// when p has a root that is not a root of unity. Requires p(0) = 1.
///
/// After stripping (1 - t)^m the residual of degree D is trial-divided by
/// every Phi_n with 2 <= n <= 2 D^2 and phi(n) no larger than the current
/// residual degree. Since phi(n) >= sqrt(n / 2), no cyclotomic factor of
/// degree <= D is skipped.
inline std::optional<CycFactorization> cyclotomic_factorization(const IntPoly& p) {
    if (p.coeff(0) != 1) throw std::invalid_argument("cyclotomic_factorization: requires p(0) = 1");
    CycFactorization out;
    out.m = multiplicity_at_one(p);
    IntPoly residual = *exact_divide(p, IntPoly{1, -1}.pow(out.m));

    const std::size_t initial = *residual.degree();
    const unsigned long bound = 2UL * initial * initial;
    for (unsigned long n = 2; n <= bound && *residual.degree() > 0; ++n) {
        if (totient(n) > *residual.degree()) continue;
        const IntPoly phi = cyclotomic(n);
        while (*residual.degree() >= *phi.degree()) {
            auto q = exact_divide(residual, phi);
            if (!q) break;
            residual = std::move(*q);
            out.indices.push_back(n);
        }
    }
    if (!residual.is_one()) return std::nullopt;
    return out;
}

} // namespace gradalg
