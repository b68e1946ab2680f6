#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/integer.hpp"

namespace gradalg {

/// Univariate polynomial over the integers, stored densely by degree.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has no degree (degree() is nullopt).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> cs) {
        coeffs_.reserve(cs.size());
        for (long long c : cs) coeffs_.emplace_back(c);
        trim();
    }
    explicit IntPoly(std::vector<Integer> cs) : coeffs_(std::move(cs)) { trim(); }

    static IntPoly constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

    static IntPoly monomial(std::size_t k, Integer c = 1) {
        std::vector<Integer> cs(k + 1);
        cs[k] = std::move(c);
        return IntPoly(std::move(cs));
    }

    /// 1 - t^k
    static IntPoly one_minus_power(std::size_t k) {
        if (k == 0) return {};
        std::vector<Integer> cs(k + 1);
        cs[0] = 1;
        cs[k] = -1;
        return IntPoly(std::move(cs));
    }

    static IntPoly from_coeffs(std::span<const long long> cs) {
        return IntPoly(std::vector<Integer>(cs.begin(), cs.end()));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient of t^k; zero past the stored range.
    Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer{0}; }

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    const Integer& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    /// Lowest k with a nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> low_degree() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return k;
        return std::nullopt;
    }

    Integer evaluate(const Integer& x) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(out));
    }

    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly pow(unsigned e) const {
        IntPoly result = constant(1);
        IntPoly base = *this;
        while (e != 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e != 0) base *= base;
        }
        return result;
    }

    /// Human-readable form in powers of t, e.g. "1 - 3t + 3t^2 - t^3".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Integer& c = coeffs_[k];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (k == 0 || mag != 1) os << mag;
            if (k >= 1) os << 't';
            if (k >= 2) os << '^' << k;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/// Returns r with divisor * r == dividend, or nullopt when the quotient is
/// not a polynomial over the integers.
inline std::optional<IntPoly> exact_divide(const IntPoly& dividend, const IntPoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("exact_divide: division by the zero polynomial");
    if (dividend.is_zero()) return IntPoly{};
    const std::size_t dn = *dividend.degree();
    const std::size_t dd = *divisor.degree();
    if (dn < dd) return std::nullopt;

    std::vector<Integer> rem = dividend.coeffs();
    const auto& den = divisor.coeffs();
    const Integer& lead = den.back();
    std::vector<Integer> quot(dn - dd + 1);
    Integer q, r;
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Integer& top = rem[k + dd];
        if (top == 0) continue;
        boost::multiprecision::divide_qr(top, lead, q, r);
        if (r != 0) return std::nullopt;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * den[j];
        quot[k] = q;
    }
    for (std::size_t k = 0; k < dd; ++k)
        if (rem[k] != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

} // namespace gradalg
