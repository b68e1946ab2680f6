#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "gradalg/betti_table.hpp"
#include "gradalg/invariants.hpp"

namespace gradalg {

/// Search grid and filters for enumerate_tables.
struct SearchSpec {
    std::size_t gldim = 1;
    Shift l_max = 8;
    std::size_t mult_max = 6;
    std::size_t terms = kDefaultTerms;

    bool degree_one = false;              // row 1 shifts all equal 1
    bool quadratic = false;               // row 2 shifts all equal 2
    bool require_gorenstein = false;      // palindromic tables only, built by symmetric completion
    bool require_monotonic = false;
    bool require_cyclotomic = false;      // finite GK dimension
    bool require_positive_nogap = false;  // Hilbert prefix nonnegative and without gaps

    /// Upper limit on the raw number of tables the grid would generate.
    std::uint64_t budget = 20'000'000;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;

    void validate() const {
        if (gldim < 1) throw std::invalid_argument("gldim must be at least 1");
        if (l_max < static_cast<Shift>(gldim))
            throw std::invalid_argument("l_max (" + std::to_string(l_max) + ") must be at least gldim (" +
                                        std::to_string(gldim) + ")");
        if (mult_max < 1) throw std::invalid_argument("mult_max must be at least 1");
        if (terms < 2 * static_cast<std::size_t>(l_max))
            throw std::invalid_argument("terms (" + std::to_string(terms) + ") must be at least 2 * l_max (" +
                                        std::to_string(2 * l_max) + ")");
        if (quadratic && gldim < 2) throw std::invalid_argument("quadratic needs gldim >= 2");
    }
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, Integer size) : std::runtime_error(what), size_(std::move(size)) {}
    const Integer& search_space() const { return size_; }

private:
    Integer size_;
};

struct Candidate {
    BettiTable table;
    InvariantReport report;
};

/// Full Gorenstein-symmetric table from rows 0..floor(d/2): row d-i is
/// {l - alpha : alpha in row i}. For even d the middle row must already be
/// self-paired.
inline BettiTable symmetric_completion(std::vector<ShiftRow> lower, std::size_t d, Shift l, std::string name = {}) {
    if (lower.size() != d / 2 + 1)
        throw InvalidTable("symmetric completion needs rows 0.." + std::to_string(d / 2) + ", got " +
                           std::to_string(lower.size()));
    for (std::size_t i = 1; i < lower.size(); ++i) {
        for (Shift a : lower[i])
            if (a <= 0 || a >= l)
                throw InvalidTable("row " + std::to_string(i) + " shift " + std::to_string(a) + " outside (0, " +
                                   std::to_string(l) + ")");
    }
    for (auto& row : lower) std::sort(row.begin(), row.end());
    if (d % 2 == 0 && d > 0) {
        const auto& mid = lower[d / 2];
        const std::size_t n = mid.size();
        for (std::size_t s = 0; s < n; ++s)
            if (mid[s] + mid[n - 1 - s] != l)
                throw InvalidTable("middle row is not self-paired: " + std::to_string(mid[s]) + "+" +
                                   std::to_string(mid[n - 1 - s]) + " != " + std::to_string(l));
    }
    std::vector<ShiftRow> rows(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        if (i < lower.size()) {
            rows[i] = lower[i];
        } else {
            for (Shift a : lower[d - i]) rows[i].push_back(l - a);
        }
    }
    if (d == 0 && l != 0) throw InvalidTable("a table of length 0 has l = 0");
    return BettiTable(std::move(rows), std::move(name));
}

namespace detail {

inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer r = 1;
    for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// Multisets of size k from `values` distinct values.
inline Integer multiset_count(std::size_t values, std::size_t k) {
    if (k == 0) return 1;
    if (values == 0) return 0;
    return binomial(values + k - 1, k);
}

// Appends all nondecreasing sequences of length k over [lo, hi].
inline void multisets(Shift lo, Shift hi, std::size_t k, std::vector<ShiftRow>& out) {
    if (k == 0) {
        out.emplace_back();
        return;
    }
    if (lo > hi) return;
    ShiftRow cur(k, lo);
    while (true) {
        out.push_back(cur);
        std::size_t pos = k;
        while (pos > 0 && cur[pos - 1] == hi) --pos;
        if (pos == 0) return;
        const Shift next = cur[pos - 1] + 1;
        for (std::size_t j = pos - 1; j < k; ++j) cur[j] = next;
    }
}

inline std::string abbreviate(const Integer& v) {
    std::string s = v.str();
    if (s.size() <= 18) return s;
    return s.substr(0, 1) + "." + s.substr(1, 2) + "e" + std::to_string(s.size() - 1);
}

inline ShiftRow constant_row(Shift v, std::size_t n) { return ShiftRow(n, v); }

enum class RowKind { Free, Middle };

struct RowPlan {
    std::size_t index;
    RowKind kind;
};

// One row position of the grid: which values are allowed and whether it is
// the self-paired middle row of an even-length Gorenstein table.
class Grid {
public:
    explicit Grid(const SearchSpec& spec) : spec_(spec) {}

    std::vector<RowPlan> plan() const {
        std::vector<RowPlan> rows;
        const std::size_t d = spec_.gldim;
        if (spec_.require_gorenstein) {
            for (std::size_t i = 1; i <= d / 2; ++i)
                rows.push_back({i, (d % 2 == 0 && i == d / 2) ? RowKind::Middle : RowKind::Free});
        } else {
            for (std::size_t i = 1; i <= d; ++i) rows.push_back({i, RowKind::Free});
        }
        return rows;
    }

    std::vector<Shift> l_values() const {
        std::vector<Shift> ls;
        if (spec_.require_gorenstein) {
            for (Shift l = std::max<Shift>(1, static_cast<Shift>(spec_.gldim)); l <= spec_.l_max; ++l) ls.push_back(l);
        } else {
            ls.push_back(spec_.l_max);
        }
        return ls;
    }

    // Largest allowed shift in a free row.
    Shift free_hi(Shift l) const { return spec_.require_gorenstein ? l - 1 : l; }

    std::optional<Shift> pinned_value(std::size_t i) const {
        if (spec_.degree_one && i == 1) return 1;
        if (spec_.quadratic && i == 2) return 2;
        return std::nullopt;
    }

    Integer count(const RowPlan& row, Shift l) const {
        Integer total = 0;
        const auto pin = pinned_value(row.index);
        for (std::size_t n = 1; n <= spec_.mult_max; ++n) {
            if (row.kind == RowKind::Free) {
                if (pin) {
                    total += (*pin <= free_hi(l)) ? 1 : 0;
                } else {
                    total += multiset_count(static_cast<std::size_t>(std::max<Shift>(0, free_hi(l))), n);
                }
            } else {
                if (pin) {
                    total += (2 * *pin == l) ? 1 : 0;
                } else if (n % 2 == 0 || l % 2 == 0) {
                    total += multiset_count(static_cast<std::size_t>(l / 2), n / 2);
                }
            }
        }
        return total;
    }

    std::vector<ShiftRow> choices(const RowPlan& row, Shift l) const {
        std::vector<ShiftRow> out;
        const auto pin = pinned_value(row.index);
        for (std::size_t n = 1; n <= spec_.mult_max; ++n) {
            if (row.kind == RowKind::Free) {
                if (pin) {
                    if (*pin <= free_hi(l)) out.push_back(constant_row(*pin, n));
                } else {
                    multisets(1, free_hi(l), n, out);
                }
                continue;
            }
            if (pin) {
                if (2 * *pin == l) out.push_back(constant_row(*pin, n));
                continue;
            }
            if (n % 2 == 1 && l % 2 == 1) continue;
            std::vector<ShiftRow> halves;
            multisets(1, l / 2, n / 2, halves);
            for (auto& half : halves) {
                ShiftRow row_full = half;
                if (n % 2 == 1) row_full.push_back(l / 2);
                for (auto it = half.rbegin(); it != half.rend(); ++it) row_full.push_back(l - *it);
                out.push_back(std::move(row_full));
            }
        }
        return out;
    }

private:
    const SearchSpec& spec_;
};

inline bool passes_filters(const BettiTable& t, const SearchSpec& spec) {
    if (spec.degree_one && !generated_in_degree_one(t)) return false;
    if (spec.quadratic) {
        auto r = t.row(2);
        if (!std::all_of(r.begin(), r.end(), [](Shift a) { return a == 2; })) return false;
    }
    if (!minimality_check(t)) return false;
    if (spec.require_gorenstein && !max_increase_check(t)) return false;
    if (spec.require_monotonic && !is_monotonic(t)) return false;
    if (!spec.require_cyclotomic && !spec.require_positive_nogap) return true;
    const IntPoly p = characteristic_polynomial(t);
    if (spec.require_cyclotomic && !cyclotomic_factorization(p)) return false;
    if (spec.require_positive_nogap) {
        const auto h = series_inverse(p, spec.terms);
        if (h.negative_index || h.gap_index) return false;
    }
    return true;
}

inline std::tuple<Shift, std::size_t, const std::vector<ShiftRow>&> sort_key(const BettiTable& t) {
    return {t.top_degree(), t.total_rank(), t.rows()};
}

} // namespace detail

/// Raw number of tables the grid generates before any filter.
inline Integer search_space_size(const SearchSpec& spec) {
    detail::Grid grid(spec);
    Integer total = 0;
    for (Shift l : grid.l_values()) {
        Integer per_l = 1;
        for (const auto& row : grid.plan()) per_l *= grid.count(row, l);
        total += per_l;
    }
    return total;
}

/// All tables in the grid passing the enabled filters, each with its full
/// invariant report, in canonical order: (top degree, total rank, shifts).
///
/// Filters run cheapest first: the minimality inequality on row minima, the
/// Gorenstein inequality on row maxima (Gorenstein searches only), then
/// monotonicity, cyclotomic factorization, and Hilbert positivity with no
/// gaps when requested. Work is split into (l, row 1) blocks across threads;
/// the final sort makes the result independent of the thread count.
inline std::vector<Candidate> enumerate_tables(const SearchSpec& spec) {
    spec.validate();
    const Integer size = search_space_size(spec);
    if (size > spec.budget)
        throw BudgetExceeded("search space of " + detail::abbreviate(size) + " tables exceeds the budget of " +
                                 std::to_string(spec.budget) + " (l_max = " + std::to_string(spec.l_max) +
                                 ", mult_max = " + std::to_string(spec.mult_max) + ")",
                             size);

    detail::Grid grid(spec);
    const auto plan = grid.plan();
    const std::size_t d = spec.gldim;

    struct Level {
        Shift l;
        std::vector<std::vector<ShiftRow>> choices;  // one list per plan row
    };
    struct Block {
        std::size_t level;
        std::size_t first;  // index into the first plan row's choices
    };
    std::vector<Level> levels;
    std::vector<Block> blocks;
    for (Shift l : grid.l_values()) {
        Level lv{l, {}};
        for (const auto& row : plan) lv.choices.push_back(grid.choices(row, l));
        const std::size_t firsts = plan.empty() ? 1 : lv.choices[0].size();
        for (std::size_t f = 0; f < firsts; ++f) blocks.push_back({levels.size(), f});
        levels.push_back(std::move(lv));
    }

    auto run_block = [&](const Block& b, std::vector<Candidate>& out) {
        const Level& lv = levels[b.level];
        for (const auto& c : lv.choices)
            if (c.empty()) return;
        std::vector<std::size_t> idx(plan.size(), 0);
        if (!plan.empty()) idx[0] = b.first;
        while (true) {
            std::vector<ShiftRow> rows;
            rows.reserve(d + 1);
            rows.push_back({0});
            for (std::size_t k = 0; k < plan.size(); ++k) rows.push_back(lv.choices[k][idx[k]]);
            std::optional<BettiTable> table;
            if (spec.require_gorenstein) {
                table = symmetric_completion(std::move(rows), d, lv.l);
            } else {
                table = BettiTable(std::move(rows));
            }
            if (detail::passes_filters(*table, spec)) {
                auto report = analyze(*table, spec.terms);
                out.push_back({std::move(*table), std::move(report)});
            }
            // odometer over rows 2.., row 1 fixed by the block
            std::size_t k = plan.size();
            while (k > 1) {
                if (++idx[k - 1] < lv.choices[k - 1].size()) break;
                idx[k - 1] = 0;
                --k;
            }
            if (k <= 1) return;
        }
    };

    unsigned workers = spec.threads != 0 ? spec.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, blocks.size())));
    std::vector<std::vector<Candidate>> partial(workers);
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned w) {
        for (std::size_t i = next++; i < blocks.size(); i = next++) run_block(blocks[i], partial[w]);
    };
    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
    }

    std::vector<Candidate> merged;
    for (auto& part : partial)
        for (auto& c : part) merged.push_back(std::move(c));
    std::sort(merged.begin(), merged.end(), [](const Candidate& a, const Candidate& b) {
        return detail::sort_key(a.table) < detail::sort_key(b.table);
    });
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const Candidate& a, const Candidate& b) { return a.table == b.table; }),
                 merged.end());
    return merged;
}

} // namespace gradalg
