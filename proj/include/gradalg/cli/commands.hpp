#pragma once

#include <cstddef>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gradalg/cli/corpus.hpp"
#include "gradalg/cli/document.hpp"
#include "gradalg/cli/report.hpp"
#include "gradalg/enumerate.hpp"

namespace gradalg::cli {

enum ExitCode : int { kExitOk = 0, kExitVerdict = 1, kExitMalformed = 2, kExitBudget = 3 };

enum class Format { Text, Json };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    throw DocumentError("unknown format '" + s + "' (expected text or json)");
}

inline void write_report(std::ostream& out, const ReportDocument& doc, Format fmt) {
    if (fmt == Format::Json)
        write_report_json(out, doc);
    else
        write_report_text(out, doc);
}

/// Analyzes one document held in memory. Exit 0 when consistent, 1 on a
/// failed verdict or inconsistent Hilbert prefix, 2 on a malformed document.
inline int analyze_text(const std::string& text, std::size_t terms, Format fmt, std::ostream& out,
                        std::ostream& err) {
    TableDocument doc;
    try {
        doc = parse_table_document(text);
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    if (terms == 0) {
        err << "error: --terms must be positive\n";
        return kExitMalformed;
    }
    InvariantReport report = doc.analyze(terms);
    if (report.name.empty()) report.name = doc.name;
    write_report(out, make_report_document(report, input_digest(text)), fmt);
    return report.consistent() ? kExitOk : kExitVerdict;
}

inline int cmd_analyze(const std::string& path, std::size_t terms, Format fmt, std::ostream& out,
                       std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read '" << path << "'\n";
        return kExitMalformed;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return analyze_text(text, terms, fmt, out, err);
}

inline std::string candidate_summary(const Candidate& c) {
    const auto& r = c.report;
    std::ostringstream os;
    os << c.table.shifts_string() << "  p = " << r.char_poly.to_string();
    if (r.gorenstein.ok())
        os << "  l=" << r.gorenstein.index;
    else
        os << "  top=" << r.top_degree;
    os << "  gk=" << r.gk.to_string() << "  monotonic=" << (*r.monotonic ? "yes" : "no")
       << "  pure=" << (*r.pure ? "yes" : "no") << "  generators=" << r.generators;
    return os.str();
}

/// Exit 0 on success, 2 on an invalid search, 3 when the grid exceeds the
/// budget.
inline int cmd_enumerate(const SearchSpec& spec, Format fmt, std::ostream& out, std::ostream& err) {
    std::vector<Candidate> found;
    try {
        found = enumerate_tables(spec);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid search: " << e.what() << '\n';
        return kExitMalformed;
    }
    for (const auto& c : found) {
        if (fmt == Format::Json) {
            write_report_json(out, make_report_document(c.report, input_digest(c.table.shifts_string())));
        } else {
            out << candidate_summary(c) << '\n';
        }
    }
    if (fmt == Format::Text) out << found.size() << " candidate" << (found.size() == 1 ? "" : "s") << '\n';
    return kExitOk;
}

/// One "OK <name>" line per matching entry; mismatches list field diffs.
inline int cmd_corpus(const std::vector<CorpusEntry>& corpus, std::ostream& out, std::ostream& err,
                      std::size_t terms = kDefaultTerms) {
    bool all_ok = true;
    for (const auto& entry : corpus) {
        std::vector<std::string> diffs;
        try {
            const TableDocument doc = parse_table_document(entry.document);
            diffs = corpus_diffs(doc.analyze(terms), entry.expect);
        } catch (const DocumentError& e) {
            diffs.push_back(std::string("document: ") + e.what());
        }
        if (diffs.empty()) {
            out << "OK " << entry.name << '\n';
            continue;
        }
        all_ok = false;
        out << "MISMATCH " << entry.name << '\n';
        for (const auto& d : diffs) out << "  " << d << '\n';
    }
    if (!all_ok) err << "corpus: mismatches found\n";
    return all_ok ? kExitOk : kExitVerdict;
}

} // namespace gradalg::cli
