#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gradalg/cli/document.hpp"
#include "gradalg/invariants.hpp"

namespace gradalg::cli {

/// Expected values for one corpus entry; unset fields are not compared.
struct CorpusExpectation {
    std::optional<std::vector<long long>> char_poly;
    std::optional<Shift> as_index;
    std::optional<GkDimension> gk;
    std::optional<bool> monotonic;
    std::optional<bool> pure;
    std::optional<unsigned> sign_changes;
    std::optional<unsigned> multiplicity_at_one;
    std::optional<Verdict> parity;
    std::optional<Verdict> koszul_corollary;
    std::optional<bool> consistent;
};

struct CorpusEntry {
    std::string name;
    std::string document;  // JSON table document
    CorpusExpectation expect;
};

/// The five resolution types of AS-regular algebras of dimension 3 and 4
/// generated in degree one, plus the dimension-5 Hilbert series denominator
/// with seven sign changes.
inline std::vector<CorpusEntry> builtin_corpus() {
    using V = Verdict;
    std::vector<CorpusEntry> c;
    c.push_back({"d3-gen3",
                 R"({"name": "d3-gen3", "global_dimension": 3, "shifts": [[0], [1,1,1], [2,2,2], [3]]})",
                 {.char_poly = std::vector<long long>{1, -3, 3, -1},
                  .as_index = 3,
                  .gk = GkDimension::finite(3),
                  .monotonic = true,
                  .pure = true,
                  .parity = V::Pass,
                  .koszul_corollary = V::Pass,
                  .consistent = true}});
    c.push_back({"d3-gen2",
                 R"({"name": "d3-gen2", "global_dimension": 3, "shifts": [[0], [1,1], [3,3], [4]]})",
                 {.char_poly = std::vector<long long>{1, -2, 0, 2, -1},
                  .as_index = 4,
                  .gk = GkDimension::finite(3),
                  .monotonic = true,
                  .pure = true,
                  .parity = V::Pass,
                  .koszul_corollary = V::NotApplicable,
                  .consistent = true}});
    c.push_back({"d4-gen2",
                 R"({"name": "d4-gen2", "global_dimension": 4, "shifts": [[0], [1,1], [3,4], [6,6], [7]]})",
                 {.char_poly = std::vector<long long>{1, -2, 0, 1, 1, 0, -2, 1},
                  .as_index = 7,
                  .gk = GkDimension::finite(4),
                  .monotonic = true,
                  .pure = false,
                  .parity = V::Pass,
                  .consistent = true}});
    c.push_back({"d4-gen3",
                 R"({"name": "d4-gen3", "global_dimension": 4, "shifts": [[0], [1,1,1], [2,2,3,3], [4,4,4], [5]]})",
                 {.char_poly = std::vector<long long>{1, -3, 2, 2, -3, 1},
                  .as_index = 5,
                  .gk = GkDimension::finite(4),
                  .monotonic = true,
                  .pure = false,
                  .parity = V::Pass,
                  .consistent = true}});
    c.push_back({"d4-gen4",
                 R"({"name": "d4-gen4", "global_dimension": 4, "shifts": [[0], [1,1,1,1], [2,2,2,2,2,2], [3,3,3,3], [4]]})",
                 {.char_poly = std::vector<long long>{1, -4, 6, -4, 1},
                  .as_index = 4,
                  .gk = GkDimension::finite(4),
                  .monotonic = true,
                  .pure = true,
                  .parity = V::Pass,
                  .koszul_corollary = V::Pass,
                  .consistent = true}});
    c.push_back({"floystad-dim5",
                 R"({"name": "floystad-dim5", "global_dimension": 5, "raw_polynomial": [1, -2, 0, 1, 1, -1, 0, 1, -1, -1, 0, 2, -1]})",
                 {.char_poly = std::vector<long long>{1, -2, 0, 1, 1, -1, 0, 1, -1, -1, 0, 2, -1},
                  .gk = GkDimension::finite(5),
                  .monotonic = false,
                  .sign_changes = 7,
                  .multiplicity_at_one = 5,
                  .parity = V::Pass,
                  .consistent = true}});
    return c;
}

namespace detail {

template <class T, class F>
void compare_field(std::vector<std::string>& diffs, const char* field, const std::optional<T>& expected,
                   const T& actual, F show) {
    if (expected && !(*expected == actual))
        diffs.push_back(std::string(field) + ": expected " + show(*expected) + ", got " + show(actual));
}

inline std::string show_bool(bool b) { return b ? "true" : "false"; }

inline std::string show_opt_bool(const std::optional<bool>& b) { return b ? show_bool(*b) : "unknown"; }

} // namespace detail

/// Field-level differences between an analysis and its expectation.
inline std::vector<std::string> corpus_diffs(const InvariantReport& r, const CorpusExpectation& e) {
    std::vector<std::string> diffs;
    auto num = [](const auto& v) { return std::to_string(v); };
    if (e.char_poly) {
        const IntPoly want = IntPoly::from_coeffs(*e.char_poly);
        if (want != r.char_poly)
            diffs.push_back("char_poly: expected " + want.to_string() + ", got " + r.char_poly.to_string());
    }
    if (e.as_index) {
        if (!r.gorenstein.ok())
            diffs.push_back("as_index: expected " + num(*e.as_index) + ", got none (" + r.gorenstein.reason + ")");
        else if (r.gorenstein.index != *e.as_index)
            diffs.push_back("as_index: expected " + num(*e.as_index) + ", got " + num(r.gorenstein.index));
    }
    detail::compare_field(diffs, "gk", e.gk, r.gk, [](const GkDimension& g) { return g.to_string(); });
    if (e.monotonic && r.monotonic != e.monotonic)
        diffs.push_back("monotonic: expected " + detail::show_bool(*e.monotonic) + ", got " +
                        detail::show_opt_bool(r.monotonic));
    if (e.pure && r.pure != e.pure)
        diffs.push_back("pure: expected " + detail::show_bool(*e.pure) + ", got " + detail::show_opt_bool(r.pure));
    detail::compare_field(diffs, "sign_changes", e.sign_changes, r.sign_change_count, num);
    detail::compare_field(diffs, "multiplicity_at_one", e.multiplicity_at_one, r.multiplicity_at_one, num);
    auto vk = [](Verdict v) { return std::string(verdict_key(v)); };
    detail::compare_field(diffs, "parity", e.parity, r.verdict(Theorem::Parity), vk);
    detail::compare_field(diffs, "koszul_corollary", e.koszul_corollary, r.verdict(Theorem::KoszulCorollary), vk);
    detail::compare_field(diffs, "consistent", e.consistent, r.consistent(), detail::show_bool);
    return diffs;
}

} // namespace gradalg::cli
