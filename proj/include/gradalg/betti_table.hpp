#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gradalg {

using Shift = int;
using ShiftRow = std::vector<Shift>;

class InvalidTable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Graded shifts of a finite free resolution of the trivial module
///
///   0 -> P_d -> ... -> P_1 -> P_0 -> K -> 0,   P_i = sum_s A(-alpha_{i,s}).
///
/// Row i holds the multiset {alpha_{i,s}} sorted ascending. Construction
/// enforces: d + 1 nonempty rows, row 0 == {0}, every shift in rows >= 1
/// strictly positive.
class BettiTable {
public:
    BettiTable(std::vector<ShiftRow> rows, std::string name = {}) : rows_(std::move(rows)), name_(std::move(name)) {
        if (rows_.empty()) throw InvalidTable("table has no rows");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto& row = rows_[i];
            if (row.empty()) throw InvalidTable("row " + std::to_string(i) + " is empty");
            std::sort(row.begin(), row.end());
            if (i == 0) {
                if (row.size() != 1 || row[0] != 0) throw InvalidTable("row 0 must be exactly {0}");
            } else if (row.front() <= 0) {
                throw InvalidTable("row " + std::to_string(i) + " has a non-positive shift " +
                                   std::to_string(row.front()));
            }
        }
    }

    std::size_t gldim() const { return rows_.size() - 1; }
    const std::vector<ShiftRow>& rows() const { return rows_; }
    std::span<const Shift> row(std::size_t i) const { return rows_.at(i); }
    std::size_t rank(std::size_t i) const { return rows_.at(i).size(); }
    const std::string& name() const { return name_; }

    Shift min_shift(std::size_t i) const { return rows_.at(i).front(); }
    Shift max_shift(std::size_t i) const { return rows_.at(i).back(); }

    Shift top_degree() const {
        Shift top = 0;
        for (const auto& row : rows_) top = std::max(top, row.back());
        return top;
    }

    std::size_t total_rank() const {
        std::size_t n = 0;
        for (const auto& row : rows_) n += row.size();
        return n;
    }

    /// [[0],[1,1],[3,3],[4]]
    std::string shifts_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != 0) os << ',';
            os << '[';
            for (std::size_t s = 0; s < rows_[i].size(); ++s) os << (s != 0 ? "," : "") << rows_[i][s];
            os << ']';
        }
        os << ']';
        return os.str();
    }

    /// Equality ignores the label.
    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.rows_ == b.rows_; }

private:
    std::vector<ShiftRow> rows_;
    std::string name_;
};

} // namespace gradalg
