#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradalg/betti_table.hpp"
#include "gradalg/polycore.hpp"

namespace gradalg {

inline constexpr std::size_t kDefaultTerms = 64;

/// Order of the pole of 1/p(t) at t = 1, or infinite growth when p has a
/// root off the roots of unity.
class GkDimension {
public:
    static GkDimension finite(unsigned m) { return GkDimension(m); }
    static GkDimension infinite() { return GkDimension(std::nullopt); }

    bool is_finite() const { return m_.has_value(); }
    unsigned value() const { return m_.value(); }
    std::string to_string() const { return m_ ? std::to_string(*m_) : std::string("infinite"); }

    friend bool operator==(const GkDimension&, const GkDimension&) = default;

private:
    explicit GkDimension(std::optional<unsigned> m) : m_(m) {}
    std::optional<unsigned> m_;
};

struct GorensteinStatus {
    enum class Kind { Holds, Fails, Unknown };

    Kind kind = Kind::Unknown;
    Shift index = 0;  // the AS-index l, meaningful only when kind == Holds
    std::string reason;

    static GorensteinStatus holds(Shift l) { return {Kind::Holds, l, {}}; }
    static GorensteinStatus fails(std::string why) { return {Kind::Fails, 0, std::move(why)}; }
    static GorensteinStatus unknown(std::string why) { return {Kind::Unknown, 0, std::move(why)}; }

    bool ok() const { return kind == Kind::Holds; }
    friend bool operator==(const GorensteinStatus&, const GorensteinStatus&) = default;
};

enum class Verdict { NotApplicable, Pass, Fail };

enum class Theorem { Parity, GkBound, GeneratorBound, WeightedGeneratorBound, SelfReciprocity, KoszulCorollary };

inline constexpr Theorem kAllTheorems[] = {Theorem::Parity,          Theorem::GkBound,
                                           Theorem::GeneratorBound,  Theorem::WeightedGeneratorBound,
                                           Theorem::SelfReciprocity, Theorem::KoszulCorollary};

inline std::string_view theorem_key(Theorem t) {
    switch (t) {
    case Theorem::Parity: return "parity";
    case Theorem::GkBound: return "gk_bound";
    case Theorem::GeneratorBound: return "generator_bound";
    case Theorem::WeightedGeneratorBound: return "weighted_generator_bound";
    case Theorem::SelfReciprocity: return "self_reciprocity";
    case Theorem::KoszulCorollary: return "koszul_corollary";
    }
    return "?";
}

inline std::string_view verdict_key(Verdict v) {
    switch (v) {
    case Verdict::NotApplicable: return "not_applicable";
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    }
    return "?";
}

struct TheoremVerdict {
    Theorem theorem;
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;

    friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

/// Everything derivable from one Betti table, or from a bare characteristic
/// polynomial when no table is known. In the latter case the table-only
/// predicates (monotonic, pure, minimal) are left empty unless the sign
/// pattern alone settles them.
struct InvariantReport {
    std::string name;
    std::size_t gldim = 0;
    std::optional<BettiTable> table;

    IntPoly char_poly;
    SeriesPrefix hilbert;
    GkDimension gk = GkDimension::infinite();
    std::optional<CycFactorization> factorization;
    unsigned multiplicity_at_one = 0;

    std::optional<bool> monotonic;
    std::optional<bool> pure;
    std::optional<bool> minimal;
    GorensteinStatus gorenstein;
    Shift top_degree = 0;

    std::size_t generators = 0;
    unsigned sign_change_count = 0;
    std::optional<std::vector<WeightedFactor>> weighted;

    std::vector<TheoremVerdict> verdicts;
    std::vector<std::string> notes;

    Verdict verdict(Theorem t) const {
        for (const auto& v : verdicts)
            if (v.theorem == t) return v.verdict;
        return Verdict::NotApplicable;
    }

    bool any_failed_verdict() const {
        return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.verdict == Verdict::Fail; });
    }

    /// Negative or gapped Hilbert coefficients: no connected algebra
    /// generated in degree one has this series.
    bool series_inconsistent() const { return hilbert.negative_index.has_value() || hilbert.gap_index.has_value(); }

    bool consistent() const { return !any_failed_verdict() && !series_inconsistent(); }
};

/// sum_i (-1)^i sum_s t^{alpha_{i,s}}
inline IntPoly characteristic_polynomial(const BettiTable& table) {
    std::vector<Integer> cs(static_cast<std::size_t>(table.top_degree()) + 1);
    for (std::size_t i = 0; i <= table.gldim(); ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (Shift a : table.row(i)) cs[static_cast<std::size_t>(a)] += sign;
    }
    return IntPoly(std::move(cs));
}

inline SeriesPrefix hilbert_prefix(const BettiTable& table, std::size_t terms) {
    return series_inverse(characteristic_polynomial(table), terms);
}

inline GkDimension gk_dimension_of(const IntPoly& p) {
    auto f = cyclotomic_factorization(p);
    return f ? GkDimension::finite(f->m) : GkDimension::infinite();
}

inline GkDimension gk_dimension(const BettiTable& table) { return gk_dimension_of(characteristic_polynomial(table)); }

/// max(row i) <= min(row i+1) for 0 <= i < d.
inline bool is_monotonic(const BettiTable& table) {
    for (std::size_t i = 0; i < table.gldim(); ++i)
        if (table.max_shift(i) > table.min_shift(i + 1)) return false;
    return true;
}

inline bool is_pure(const BettiTable& table) {
    for (const auto& row : table.rows())
        if (row.front() != row.back()) return false;
    return true;
}

/// min(row i) < min(row i+1) for 0 <= i < d.
inline bool minimality_check(const BettiTable& table) {
    for (std::size_t i = 0; i < table.gldim(); ++i)
        if (table.min_shift(i) >= table.min_shift(i + 1)) return false;
    return true;
}

/// max(row i) < max(row i+1) for 0 <= i < d; holds for Gorenstein algebras.
inline bool max_increase_check(const BettiTable& table) {
    for (std::size_t i = 0; i < table.gldim(); ++i)
        if (table.max_shift(i) >= table.max_shift(i + 1)) return false;
    return true;
}

/// Row 1 consists of degree-one shifts only.
inline bool generated_in_degree_one(const BettiTable& table) {
    if (table.gldim() == 0) return true;
    auto r = table.row(1);
    return std::all_of(r.begin(), r.end(), [](Shift a) { return a == 1; });
}

/// Palindromic shape: row d = {l}, n_i = n_{d-i}, and with ascending rows
/// alpha_{i,s} + alpha_{d-i, n_i-s+1} = l. Reports the first violation.
inline GorensteinStatus gorenstein_symmetry(const BettiTable& table) {
    const std::size_t d = table.gldim();
    if (table.rank(d) != 1)
        return GorensteinStatus::fails("top row has " + std::to_string(table.rank(d)) + " shifts, expected 1");
    const Shift l = table.min_shift(d);
    for (std::size_t i = 0; i <= d; ++i) {
        const std::size_t n = table.rank(i);
        if (n != table.rank(d - i))
            return GorensteinStatus::fails("rank: n_" + std::to_string(i) + " = " + std::to_string(n) + " != n_" +
                                           std::to_string(d - i) + " = " + std::to_string(table.rank(d - i)));
        auto lo = table.row(i);
        auto hi = table.row(d - i);
        for (std::size_t s = 0; s < n; ++s) {
            if (lo[s] + hi[n - 1 - s] != l)
                return GorensteinStatus::fails("pairing: " + std::to_string(lo[s]) + "+" +
                                               std::to_string(hi[n - 1 - s]) + " != " + std::to_string(l));
        }
    }
    return GorensteinStatus::holds(l);
}

namespace detail {

inline bool koszul_shaped(const BettiTable& table) {
    for (std::size_t i = 0; i <= table.gldim(); ++i)
        for (Shift a : table.row(i))
            if (a != static_cast<Shift>(i)) return false;
    return true;
}

inline TheoremVerdict koszul_verdict(const BettiTable& table, const IntPoly& p, const GorensteinStatus& gor,
                                     const GkDimension& gk) {
    const std::size_t d = table.gldim();
    TheoremVerdict v{Theorem::KoszulCorollary, Verdict::NotApplicable, {}};
    if (!koszul_shaped(table) || !gor.ok() || !gk.is_finite() || gk.value() + 1 < d) return v;
    const bool ok = p == IntPoly{1, -1}.pow(static_cast<unsigned>(d));
    v.verdict = ok ? Verdict::Pass : Verdict::Fail;
    v.detail = ok ? "p = (1 - t)^" + std::to_string(d) : "p != (1 - t)^" + std::to_string(d);
    return v;
}

inline TheoremVerdict parity_verdict(bool applicable, const GkDimension& gk, std::size_t d) {
    TheoremVerdict v{Theorem::Parity, Verdict::NotApplicable, {}};
    if (!applicable || !gk.is_finite()) return v;
    const bool ok = gk.value() % 2 == d % 2;
    v.verdict = ok ? Verdict::Pass : Verdict::Fail;
    v.detail = std::to_string(gk.value()) + (ok ? " == " : " != ") + std::to_string(d) + " (mod 2)";
    return v;
}

inline TheoremVerdict bound_verdict(Theorem id, bool applicable, std::size_t value, std::size_t d,
                                    std::string_view what) {
    TheoremVerdict v{id, Verdict::NotApplicable, {}};
    if (!applicable) return v;
    const bool ok = value <= d;
    v.verdict = ok ? Verdict::Pass : Verdict::Fail;
    v.detail = std::string(what) + " " + std::to_string(value) + (ok ? " <= " : " > ") + std::to_string(d);
    return v;
}

inline void fill_polynomial_fields(InvariantReport& r, std::size_t terms) {
    r.hilbert = series_inverse(r.char_poly, terms);
    r.factorization = cyclotomic_factorization(r.char_poly);
    r.gk = r.factorization ? GkDimension::finite(r.factorization->m) : GkDimension::infinite();
    r.multiplicity_at_one = multiplicity_at_one(r.char_poly);
    r.sign_change_count = sign_changes(r.char_poly);
    r.weighted = weighted_decompose(r.char_poly);
    if (r.hilbert.negative_index)
        r.notes.push_back("negative Hilbert coefficient at degree " + std::to_string(*r.hilbert.negative_index));
    if (r.hilbert.gap_index)
        r.notes.push_back("Hilbert series vanishes at degree " + std::to_string(*r.hilbert.gap_index) +
                          " but not afterwards");
}

} // namespace detail

inline TheoremVerdict koszul_corollary_check(const BettiTable& table) {
    const IntPoly p = characteristic_polynomial(table);
    return detail::koszul_verdict(table, p, gorenstein_symmetry(table), gk_dimension_of(p));
}

/// Computes every invariant of the table and evaluates each theorem whose
/// hypotheses the table meets. Inconsistent Hilbert prefixes are reported,
/// not thrown.
///
/// The generator bounds additionally require a minimal table generated in
/// degree one; only then is n_1 the negated t-coefficient of p.
inline InvariantReport analyze(const BettiTable& table, std::size_t terms = kDefaultTerms) {
    InvariantReport r;
    r.name = table.name();
    r.gldim = table.gldim();
    r.table = table;
    r.char_poly = characteristic_polynomial(table);
    detail::fill_polynomial_fields(r, terms);

    r.monotonic = is_monotonic(table);
    r.pure = is_pure(table);
    r.minimal = minimality_check(table);
    r.gorenstein = gorenstein_symmetry(table);
    r.top_degree = table.top_degree();
    r.generators = r.gldim >= 1 ? table.rank(1) : 0;

    const std::size_t d = r.gldim;
    const bool mono = *r.monotonic;
    const bool generator_shape = mono && *r.minimal && generated_in_degree_one(table);

    r.verdicts.push_back(detail::parity_verdict(r.gorenstein.ok(), r.gk, d));
    r.verdicts.push_back(detail::bound_verdict(Theorem::GkBound, mono && r.gk.is_finite(),
                                               r.gk.is_finite() ? r.gk.value() : 0, d, "gk"));
    r.verdicts.push_back(detail::bound_verdict(Theorem::GeneratorBound,
                                               generator_shape && r.gk == GkDimension::finite(static_cast<unsigned>(d)),
                                               r.generators, d, "generators"));
    r.verdicts.push_back(detail::bound_verdict(Theorem::WeightedGeneratorBound,
                                               generator_shape && r.weighted.has_value(), r.generators, d,
                                               "generators"));

    TheoremVerdict recip{Theorem::SelfReciprocity, Verdict::NotApplicable, {}};
    if (r.gorenstein.ok()) {
        const bool ok = is_self_reciprocal(r.char_poly, static_cast<std::size_t>(r.gorenstein.index),
                                           static_cast<unsigned>(d));
        recip.verdict = ok ? Verdict::Pass : Verdict::Fail;
        recip.detail = "t^" + std::to_string(r.gorenstein.index) + " p(1/t) " + (ok ? "==" : "!=") + " " +
                       (d % 2 ? "-" : "+") + "p(t)";
    }
    r.verdicts.push_back(std::move(recip));
    r.verdicts.push_back(detail::koszul_verdict(table, r.char_poly, r.gorenstein, r.gk));

    if (!r.gorenstein.ok()) r.notes.push_back("top degree " + std::to_string(r.top_degree) + " (not an AS-index)");
    return r;
}

/// Analysis of a bare Hilbert-series denominator p with a stated global
/// dimension d. Self-reciprocity of p in the window [0, deg p] stands in for
/// the Gorenstein symmetry of the unknown table, and more than d sign
/// changes rules out monotonicity.
inline InvariantReport analyze_polynomial(const IntPoly& p, std::size_t gldim, std::size_t terms = kDefaultTerms,
                                          std::string name = {}) {
    InvariantReport r;
    r.name = std::move(name);
    r.gldim = gldim;
    r.char_poly = p;
    detail::fill_polynomial_fields(r, terms);
    r.top_degree = static_cast<Shift>(p.degree().value_or(0));
    const Integer t1 = -p.coeff(1);
    r.generators = t1 > 0 ? t1.convert_to<std::size_t>() : 0;

    if (r.sign_change_count > gldim) {
        r.monotonic = false;
        r.notes.push_back("sign changes " + std::to_string(r.sign_change_count) + " > " + std::to_string(gldim) +
                          " => not monotonic");
    }
    const bool palindromic = is_self_reciprocal(p, static_cast<std::size_t>(r.top_degree), static_cast<unsigned>(gldim));
    r.gorenstein = GorensteinStatus::unknown(palindromic ? "no table; p is self-reciprocal with sign (-1)^d"
                                                         : "no table; p is not self-reciprocal with sign (-1)^d");

    r.verdicts.push_back(detail::parity_verdict(palindromic, r.gk, gldim));
    for (Theorem t : {Theorem::GkBound, Theorem::GeneratorBound, Theorem::WeightedGeneratorBound,
                      Theorem::SelfReciprocity, Theorem::KoszulCorollary})
        r.verdicts.push_back({t, Verdict::NotApplicable, {}});
    return r;
}

} // namespace gradalg
