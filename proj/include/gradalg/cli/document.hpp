#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gradalg/betti_table.hpp"
#include "gradalg/invariants.hpp"

namespace gradalg::cli {

using nlohmann::json;

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One table per JSON document:
///
///   {"name": "...", "global_dimension": 3,
///    "shifts": [[0], [1,1,1], [2,2,2], [3]],
///    "raw_polynomial": [1, -3, 3, -1]}
///
/// At least one of shifts / raw_polynomial is present; when both are, the
/// characteristic polynomial of the shifts must equal raw_polynomial.
struct TableDocument {
    std::string name;
    std::size_t global_dimension = 0;
    std::optional<BettiTable> table;
    std::optional<IntPoly> raw_polynomial;

    IntPoly polynomial() const { return table ? characteristic_polynomial(*table) : *raw_polynomial; }

    InvariantReport analyze(std::size_t terms) const {
        if (table) return gradalg::analyze(*table, terms);
        return analyze_polynomial(*raw_polynomial, global_dimension, terms, name);
    }
};

/// Integers go out as JSON numbers when they fit in 64 bits, otherwise as
/// decimal strings; both forms are accepted back.
inline json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline std::optional<Integer> integer_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start) return std::nullopt;
        for (std::size_t k = start; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') return std::nullopt;
        return Integer(s);
    }
    return std::nullopt;
}

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void field_error(const std::string& field, const std::string& what) {
    throw DocumentError("field '" + field + "': " + what);
}

inline long long small_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) field_error(field, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(1) << 30)
        field_error(field, "value out of range");
    const auto v = j.get<long long>();
    if (v < -(1LL << 30) || v > (1LL << 30)) field_error(field, "value out of range");
    return v;
}

} // namespace detail

/// Parses and validates one table document. Every failure is a
/// DocumentError naming the offending line or field.
inline TableDocument parse_table_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw DocumentError("malformed JSON at " + detail::line_col(text, byte));
    }
    if (!root.is_object()) throw DocumentError("document must be a JSON object");

    TableDocument doc;
    if (auto it = root.find("name"); it != root.end()) {
        if (!it->is_string()) detail::field_error("name", "expected a string");
        doc.name = it->get<std::string>();
    }

    auto gd = root.find("global_dimension");
    if (gd == root.end()) detail::field_error("global_dimension", "missing");
    const long long d = detail::small_int(*gd, "global_dimension");
    if (d < 0) detail::field_error("global_dimension", "must be non-negative");
    doc.global_dimension = static_cast<std::size_t>(d);

    auto sh = root.find("shifts");
    auto raw = root.find("raw_polynomial");
    if (sh == root.end() && raw == root.end()) throw DocumentError("document needs 'shifts' or 'raw_polynomial'");

    if (sh != root.end()) {
        if (!sh->is_array()) detail::field_error("shifts", "expected an array of rows");
        if (sh->size() != doc.global_dimension + 1)
            detail::field_error("shifts", "expected " + std::to_string(doc.global_dimension + 1) + " rows, found " +
                                              std::to_string(sh->size()));
        std::vector<ShiftRow> rows;
        for (std::size_t i = 0; i < sh->size(); ++i) {
            const std::string rf = "shifts[" + std::to_string(i) + "]";
            const json& row = (*sh)[i];
            if (!row.is_array()) detail::field_error(rf, "expected an array of shifts");
            if (row.empty()) detail::field_error(rf, "row is empty");
            ShiftRow r;
            for (std::size_t s = 0; s < row.size(); ++s) {
                const std::string f = rf + "[" + std::to_string(s) + "]";
                const long long v = detail::small_int(row[s], f);
                if (v < 0) detail::field_error(f, "negative shift " + std::to_string(v));
                r.push_back(static_cast<Shift>(v));
            }
            rows.push_back(std::move(r));
        }
        try {
            doc.table.emplace(std::move(rows), doc.name);
        } catch (const InvalidTable& e) {
            detail::field_error("shifts", e.what());
        }
    }

    if (raw != root.end()) {
        if (!raw->is_array() || raw->empty()) detail::field_error("raw_polynomial", "expected a nonempty array");
        std::vector<Integer> cs;
        for (std::size_t k = 0; k < raw->size(); ++k) {
            auto v = integer_from_json((*raw)[k]);
            if (!v) detail::field_error("raw_polynomial[" + std::to_string(k) + "]", "expected an integer");
            cs.push_back(std::move(*v));
        }
        IntPoly p(std::move(cs));
        if (p.coeff(0) != 1) detail::field_error("raw_polynomial", "constant term must be 1");
        if (doc.table && characteristic_polynomial(*doc.table) != p)
            detail::field_error("raw_polynomial", "does not match the characteristic polynomial of 'shifts' (" +
                                                      characteristic_polynomial(*doc.table).to_string() + ")");
        doc.raw_polynomial = std::move(p);
    }
    return doc;
}

/// FNV-1a, 64-bit, hex.
inline std::string input_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xF];
    return out;
}

} // namespace gradalg::cli
