#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "gradalg/cli/commands.hpp"

using namespace gradalg;
using namespace gradalg::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run analyze(const std::string& text, Format fmt = Format::Json, std::size_t terms = kDefaultTerms) {
    std::ostringstream out, err;
    const int code = analyze_text(text, terms, fmt, out, err);
    return {code, out.str(), err.str()};
}

Run enumerate(const SearchSpec& spec, Format fmt = Format::Text) {
    std::ostringstream out, err;
    const int code = cmd_enumerate(spec, fmt, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

const char* kD3Gen2 = R"({"name": "t", "global_dimension": 3, "shifts": [[0], [1,1], [3,3], [4]]})";

} // namespace

TEST(CliAnalyze, ConsistentTableExitsZero) {
    const auto r = analyze(kD3Gen2);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["gk"], 3);
    EXPECT_EQ(j["as_index"], 4);
    EXPECT_EQ(j["char_poly"], json::parse("[1,-2,0,2,-1]"));
    EXPECT_EQ(j["tool"], "gradalg");
    EXPECT_EQ(j["consistent"], true);
    EXPECT_EQ(j["verdicts"]["parity"]["verdict"], "pass");
    EXPECT_EQ(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
}

TEST(CliAnalyze, InconsistentTableExitsOne) {
    const auto r = analyze(R"({"global_dimension": 3, "shifts": [[0], [1,1], [2,2], [3]]})");
    EXPECT_EQ(r.code, kExitVerdict);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["hilbert_gap_index"], 4);
    EXPECT_EQ(j["consistent"], false);
}

TEST(CliAnalyze, MalformedDocumentsExitTwo) {
    const auto bad_row0 = analyze(R"({"global_dimension": 1, "shifts": [[1], [2]]})");
    EXPECT_EQ(bad_row0.code, kExitMalformed);
    EXPECT_TRUE(bad_row0.out.empty());
    EXPECT_NE(bad_row0.err.find("row 0"), std::string::npos) << bad_row0.err;

    const auto syntax = analyze("{\n  \"global_dimension\": 3,\n  \"shifts\": [[0], [1,]\n}");
    EXPECT_EQ(syntax.code, kExitMalformed);
    EXPECT_NE(syntax.err.find("line 3"), std::string::npos) << syntax.err;

    const auto negative = analyze(R"({"global_dimension": 1, "shifts": [[0], [-2]]})");
    EXPECT_EQ(negative.code, kExitMalformed);
    EXPECT_NE(negative.err.find("shifts[1][0]"), std::string::npos) << negative.err;

    const auto rows = analyze(R"({"global_dimension": 2, "shifts": [[0], [1]]})");
    EXPECT_EQ(rows.code, kExitMalformed);

    const auto raw = analyze(R"({"global_dimension": 2, "raw_polynomial": [2, 1]})");
    EXPECT_EQ(raw.code, kExitMalformed);

    const auto neither = analyze(R"({"global_dimension": 2})");
    EXPECT_EQ(neither.code, kExitMalformed);

    const auto mismatch = analyze(R"({"global_dimension": 1, "shifts": [[0], [1]], "raw_polynomial": [1, -2]})");
    EXPECT_EQ(mismatch.code, kExitMalformed);

    EXPECT_EQ(analyze(kD3Gen2, Format::Json, 0).code, kExitMalformed);
}

TEST(CliAnalyze, FloystadPolynomial) {
    const auto r = analyze(
        R"({"name": "f", "global_dimension": 5, "raw_polynomial": [1, -2, 0, 1, 1, -1, 0, 1, -1, -1, 0, 2, -1]})");
    EXPECT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["sign_changes"], 7);
    EXPECT_EQ(j["multiplicity_at_one"], 5);
    EXPECT_EQ(j["verdicts"]["parity"]["verdict"], "pass");
    EXPECT_EQ(j["monotonic"], false);
    EXPECT_EQ(j["notes"].back(), "sign changes 7 > 5 => not monotonic");
    EXPECT_TRUE(j["shifts"].is_null());
}

TEST(CliAnalyze, TextAndJsonCarryTheSameValues) {
    const auto js = analyze(kD3Gen2, Format::Json);
    const auto tx = analyze(kD3Gen2, Format::Text);
    ASSERT_EQ(js.code, tx.code);
    const auto j = json::parse(js.out);
    std::map<std::string, std::string> text_values;
    std::vector<std::string> verdict_lines;
    for (const auto& l : lines(tx.out)) {
        if (l.rfind("verdict ", 0) == 0) {
            verdict_lines.push_back(l);
            continue;
        }
        const auto colon = l.find(": ");
        ASSERT_NE(colon, std::string::npos) << l;
        text_values[l.substr(0, colon)] = l.substr(colon + 2);
    }
    for (const auto& [k, v] : j.items()) {
        if (k == "verdicts" || k == "notes") continue;
        ASSERT_TRUE(text_values.count(k)) << k;
        const json parsed = v.is_string() ? json(text_values[k]) : json::parse(text_values[k]);
        EXPECT_EQ(parsed, v) << k;
    }
    EXPECT_EQ(text_values["p(t)"], "1 - 2t + 2t^3 - t^4");
    EXPECT_EQ(verdict_lines.size(), j["verdicts"].size());
    for (const auto& l : verdict_lines) {
        const std::string key = l.substr(8, l.find(':') - 8);
        const std::string verdict = j["verdicts"][key]["verdict"];
        EXPECT_EQ(l.rfind("verdict " + key + ": " + verdict, 0), 0u) << l;
    }
}

TEST(CliReport, JsonRoundTrip) {
    const auto doc = parse_table_document(kD3Gen2);
    const ReportDocument rd = make_report_document(doc.analyze(32), input_digest(kD3Gen2));
    EXPECT_EQ(report_from_json(report_to_json(rd)), rd);
    EXPECT_EQ(report_from_json(json::parse(report_to_json(rd).dump())), rd);
}

TEST(CliReport, BigIntegersTravelAsStrings) {
    const auto doc = parse_table_document(R"({"global_dimension": 2, "shifts": [[0], [1,1,1,1,1], [2]]})");
    const ReportDocument rd = make_report_document(doc.analyze(80), "x");
    ASSERT_GT(rd.hilbert.back(), Integer(std::numeric_limits<std::int64_t>::max()));
    const json j = report_to_json(rd);
    EXPECT_TRUE(j["hilbert"].back().is_string());
    EXPECT_TRUE(j["hilbert"][0].is_number_integer());
    EXPECT_EQ(report_from_json(json::parse(j.dump())), rd);
    EXPECT_EQ(j["gk"], "infinite");
}

TEST(CliReport, RejectsMalformedReports) {
    EXPECT_THROW(report_from_json(json::parse(R"({"tool": "gradalg"})")), DocumentError);
    const auto doc = parse_table_document(kD3Gen2);
    json j = report_to_json(make_report_document(doc.analyze(8), "x"));
    j["char_poly"][1] = "not a number";
    EXPECT_THROW(report_from_json(j), DocumentError);
}

TEST(CliDocument, IntegerJsonForms) {
    EXPECT_EQ(integer_from_json(json(5)), Integer(5));
    EXPECT_EQ(integer_from_json(json("-123456789012345678901234567890")),
              Integer("-123456789012345678901234567890"));
    EXPECT_FALSE(integer_from_json(json("12a")));
    EXPECT_FALSE(integer_from_json(json(1.5)));
    EXPECT_EQ(input_digest("abc"), input_digest("abc"));
    EXPECT_NE(input_digest("abc"), input_digest("abd"));
}

TEST(CliCorpus, BuiltinCorpusPasses) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_corpus(builtin_corpus(), out, err), kExitOk) << out.str();
    const auto ls = lines(out.str());
    ASSERT_EQ(ls.size(), 6u);
    for (const auto& l : ls) EXPECT_EQ(l.rfind("OK ", 0), 0u) << l;
}

TEST(CliCorpus, InjectedWrongExpectationExitsOne) {
    auto corpus = builtin_corpus();
    corpus[1].expect.gk = GkDimension::finite(2);
    std::ostringstream out, err;
    EXPECT_EQ(cmd_corpus(corpus, out, err), kExitVerdict);
    EXPECT_NE(out.str().find("MISMATCH d3-gen2\n  gk: expected 2, got 3"), std::string::npos) << out.str();
    EXPECT_NE(out.str().find("OK d3-gen3"), std::string::npos);
}

TEST(CliEnumerate, ExitCodes) {
    SearchSpec s;
    s.gldim = 3;
    s.degree_one = true;
    s.require_gorenstein = true;
    s.require_cyclotomic = true;
    s.require_positive_nogap = true;
    s.mult_max = 5;
    const auto ok = enumerate(s);
    EXPECT_EQ(ok.code, kExitOk);
    const auto ls = lines(ok.out);
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_EQ(ls.back(), "2 candidates");
    EXPECT_EQ(ls[0].rfind("[[0],[1,1,1],[2,2,2],[3]]  p = 1 - 3t + 3t^2 - t^3  l=3  gk=3", 0), 0u) << ls[0];

    const auto js = enumerate(s, Format::Json);
    EXPECT_EQ(js.code, kExitOk);
    const auto jls = lines(js.out);
    ASSERT_EQ(jls.size(), 2u);
    EXPECT_EQ(json::parse(jls[1])["shifts"], json::parse("[[0],[1,1],[3,3],[4]]"));

    SearchSpec big;
    big.gldim = 4;
    big.l_max = 200;
    big.mult_max = 50;
    big.terms = 400;
    const auto budget = enumerate(big);
    EXPECT_EQ(budget.code, kExitBudget);
    EXPECT_NE(budget.err.find("exceeds the budget"), std::string::npos) << budget.err;

    SearchSpec bad;
    bad.gldim = 5;
    bad.l_max = 3;
    EXPECT_EQ(enumerate(bad).code, kExitMalformed);
}

TEST(CliFiles, BundledTablesAnalyze) {
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(GRADALG_TABLES_DIR)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        std::ostringstream out, err;
        EXPECT_EQ(cmd_analyze(entry.path().string(), kDefaultTerms, Format::Json, out, err), kExitOk)
            << entry.path() << ": " << err.str();
        const auto j = json::parse(out.str());
        EXPECT_TRUE(j["gk"].is_number_integer()) << entry.path();
    }
    EXPECT_GE(seen, 7u);
    std::ostringstream out, err;
    EXPECT_EQ(cmd_analyze("/nonexistent/table.json", kDefaultTerms, Format::Text, out, err), kExitMalformed);
}
