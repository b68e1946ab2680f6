#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gradalg/cli/document.hpp"
#include "gradalg/invariants.hpp"

namespace gradalg::cli {

inline constexpr const char* kToolName = "gradalg";
inline constexpr const char* kToolVersion = "1.0.0";

/// InvariantReport flattened to plain values, the machine-readable form.
/// Optional fields are JSON null when absent.
struct ReportDocument {
    struct VerdictEntry {
        std::string verdict;  // pass | fail | not_applicable
        std::string detail;
        friend bool operator==(const VerdictEntry&, const VerdictEntry&) = default;
    };

    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string input_digest;

    std::string name;
    std::size_t global_dimension = 0;
    std::optional<std::vector<std::vector<long long>>> shifts;

    std::vector<Integer> char_poly;
    std::vector<Integer> hilbert;
    std::optional<std::size_t> hilbert_gap_index;
    std::optional<std::size_t> hilbert_negative_index;

    std::optional<unsigned> gk;  // nullopt = infinite
    unsigned multiplicity_at_one = 0;
    std::optional<unsigned> factor_m;
    std::optional<std::vector<unsigned long>> factor_indices;

    std::optional<bool> monotonic;
    std::optional<bool> pure;
    std::optional<bool> minimal;
    std::string gorenstein;  // holds | fails | unknown
    std::optional<long long> as_index;
    std::string gorenstein_reason;
    long long top_degree = 0;

    std::size_t generators = 0;
    unsigned sign_changes = 0;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> weighted;

    std::map<std::string, VerdictEntry> verdicts;
    std::vector<std::string> notes;
    bool consistent = true;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline ReportDocument make_report_document(const InvariantReport& r, std::string digest) {
    ReportDocument doc;
    doc.input_digest = std::move(digest);
    doc.name = r.name;
    doc.global_dimension = r.gldim;
    if (r.table) {
        std::vector<std::vector<long long>> rows;
        for (const auto& row : r.table->rows()) rows.emplace_back(row.begin(), row.end());
        doc.shifts = std::move(rows);
    }
    doc.char_poly = r.char_poly.coeffs();
    doc.hilbert = r.hilbert.terms;
    doc.hilbert_gap_index = r.hilbert.gap_index;
    doc.hilbert_negative_index = r.hilbert.negative_index;
    if (r.gk.is_finite()) doc.gk = r.gk.value();
    doc.multiplicity_at_one = r.multiplicity_at_one;
    if (r.factorization) {
        doc.factor_m = r.factorization->m;
        doc.factor_indices = r.factorization->indices;
    }
    doc.monotonic = r.monotonic;
    doc.pure = r.pure;
    doc.minimal = r.minimal;
    switch (r.gorenstein.kind) {
    case GorensteinStatus::Kind::Holds:
        doc.gorenstein = "holds";
        doc.as_index = r.gorenstein.index;
        break;
    case GorensteinStatus::Kind::Fails: doc.gorenstein = "fails"; break;
    case GorensteinStatus::Kind::Unknown: doc.gorenstein = "unknown"; break;
    }
    doc.gorenstein_reason = r.gorenstein.reason;
    doc.top_degree = r.top_degree;
    doc.generators = r.generators;
    doc.sign_changes = r.sign_change_count;
    if (r.weighted) {
        std::vector<std::pair<std::size_t, std::size_t>> w;
        for (const auto& f : *r.weighted) w.emplace_back(f.degree, f.multiplicity);
        doc.weighted = std::move(w);
    }
    for (const auto& v : r.verdicts)
        doc.verdicts[std::string(theorem_key(v.theorem))] = {std::string(verdict_key(v.verdict)), v.detail};
    doc.notes = r.notes;
    doc.consistent = r.consistent();
    return doc;
}

namespace detail {

template <class T>
json optional_to_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

inline json integers_to_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
}

inline std::vector<Integer> integers_from_json(const json& j, const char* field) {
    std::vector<Integer> out;
    for (const auto& x : j) {
        auto v = integer_from_json(x);
        if (!v) throw DocumentError(std::string("report field '") + field + "': expected integers");
        out.push_back(std::move(*v));
    }
    return out;
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

} // namespace detail

inline json report_to_json(const ReportDocument& d) {
    json j = json::object();
    j["tool"] = d.tool;
    j["version"] = d.version;
    j["input_digest"] = d.input_digest;
    j["name"] = d.name;
    j["global_dimension"] = d.global_dimension;
    j["shifts"] = detail::optional_to_json(d.shifts);
    j["char_poly"] = detail::integers_to_json(d.char_poly);
    j["hilbert"] = detail::integers_to_json(d.hilbert);
    j["hilbert_gap_index"] = detail::optional_to_json(d.hilbert_gap_index);
    j["hilbert_negative_index"] = detail::optional_to_json(d.hilbert_negative_index);
    j["gk"] = d.gk ? json(*d.gk) : json("infinite");
    j["multiplicity_at_one"] = d.multiplicity_at_one;
    j["factor_m"] = detail::optional_to_json(d.factor_m);
    j["factor_indices"] = detail::optional_to_json(d.factor_indices);
    j["monotonic"] = detail::optional_to_json(d.monotonic);
    j["pure"] = detail::optional_to_json(d.pure);
    j["minimal"] = detail::optional_to_json(d.minimal);
    j["gorenstein"] = d.gorenstein;
    j["as_index"] = detail::optional_to_json(d.as_index);
    j["gorenstein_reason"] = d.gorenstein_reason;
    j["top_degree"] = d.top_degree;
    j["generators"] = d.generators;
    j["sign_changes"] = d.sign_changes;
    j["weighted"] = detail::optional_to_json(d.weighted);
    json verdicts = json::object();
    for (const auto& [k, v] : d.verdicts) verdicts[k] = {{"verdict", v.verdict}, {"detail", v.detail}};
    j["verdicts"] = verdicts;
    j["notes"] = d.notes;
    j["consistent"] = d.consistent;
    return j;
}

inline ReportDocument report_from_json(const json& j) {
    try {
        ReportDocument d;
        d.tool = j.at("tool").get<std::string>();
        d.version = j.at("version").get<std::string>();
        d.input_digest = j.at("input_digest").get<std::string>();
        d.name = j.at("name").get<std::string>();
        d.global_dimension = j.at("global_dimension").get<std::size_t>();
        d.shifts = detail::optional_from_json<std::vector<std::vector<long long>>>(j.at("shifts"));
        d.char_poly = detail::integers_from_json(j.at("char_poly"), "char_poly");
        d.hilbert = detail::integers_from_json(j.at("hilbert"), "hilbert");
        d.hilbert_gap_index = detail::optional_from_json<std::size_t>(j.at("hilbert_gap_index"));
        d.hilbert_negative_index = detail::optional_from_json<std::size_t>(j.at("hilbert_negative_index"));
        const json& gk = j.at("gk");
        if (gk.is_string()) {
            if (gk.get<std::string>() != "infinite") throw DocumentError("report field 'gk': bad value");
        } else {
            d.gk = gk.get<unsigned>();
        }
        d.multiplicity_at_one = j.at("multiplicity_at_one").get<unsigned>();
        d.factor_m = detail::optional_from_json<unsigned>(j.at("factor_m"));
        d.factor_indices = detail::optional_from_json<std::vector<unsigned long>>(j.at("factor_indices"));
        d.monotonic = detail::optional_from_json<bool>(j.at("monotonic"));
        d.pure = detail::optional_from_json<bool>(j.at("pure"));
        d.minimal = detail::optional_from_json<bool>(j.at("minimal"));
        d.gorenstein = j.at("gorenstein").get<std::string>();
        d.as_index = detail::optional_from_json<long long>(j.at("as_index"));
        d.gorenstein_reason = j.at("gorenstein_reason").get<std::string>();
        d.top_degree = j.at("top_degree").get<long long>();
        d.generators = j.at("generators").get<std::size_t>();
        d.sign_changes = j.at("sign_changes").get<unsigned>();
        d.weighted = detail::optional_from_json<std::vector<std::pair<std::size_t, std::size_t>>>(j.at("weighted"));
        for (const auto& [k, v] : j.at("verdicts").items())
            d.verdicts[k] = {v.at("verdict").get<std::string>(), v.at("detail").get<std::string>()};
        d.notes = j.at("notes").get<std::vector<std::string>>();
        d.consistent = j.at("consistent").get<bool>();
        return d;
    } catch (const json::exception& e) {
        throw DocumentError(std::string("malformed report: ") + e.what());
    }
}

/// One line of JSON.
inline void write_report_json(std::ostream& os, const ReportDocument& d) { os << report_to_json(d).dump() << '\n'; }

/// "key: value" lines with each value in the same JSON spelling as the
/// machine format, followed by a readable p(t), one line per verdict and the
/// notes.
inline void write_report_text(std::ostream& os, const ReportDocument& d) {
    const json j = report_to_json(d);
    for (const auto& [k, v] : j.items()) {
        if (k == "verdicts" || k == "notes") continue;
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    os << "p(t): " << IntPoly(d.char_poly).to_string() << '\n';
    for (const auto& [k, v] : d.verdicts) {
        os << "verdict " << k << ": " << v.verdict;
        if (!v.detail.empty()) os << " (" << v.detail << ")";
        os << '\n';
    }
    for (const auto& n : d.notes) os << "note: " << n << '\n';
}

} // namespace gradalg::cli
