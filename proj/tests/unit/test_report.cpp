#include <gtest/gtest.h>

#include "dodgson/errors.hpp"
#include "dodgson/report.hpp"
#include <nlohmann/json.hpp>
#include "fixtures.hpp"

namespace dodgson {
namespace {

using testing::corpus;

TEST(Digest, StableAndSensitive) {
    const std::string d = matrix_digest(corpus("A1"));
    EXPECT_EQ(d.size(), 16u);
    EXPECT_EQ(d.find_first_not_of("0123456789abcdef"), std::string::npos);
    EXPECT_EQ(d, matrix_digest(corpus("A1")));
    EXPECT_NE(d, matrix_digest(corpus("A2")));
}

TEST(Digest, MatchesHandComputedFnv) {
    // FNV-1a 64 of the CSV form "0\n".
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : std::string("0\n")) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    EXPECT_EQ(matrix_digest(SymMatrix(1)), buf);
}

TEST(Report, FieldsOfAVerifiedRun) {
    const SymMatrix& a = corpus("E2.2");
    const RepairOutcome out = auto_repair(a, Strategy::PerturbOriginal);
    const Report r = make_report(a, Strategy::PerturbOriginal, out, true, false);
    EXPECT_EQ(r.n, 4u);
    EXPECT_EQ(r.determinant, Rational(213));
    EXPECT_EQ(r.oracle_determinant, Rational(213));
    EXPECT_EQ(r.match, true);
    EXPECT_EQ(r.predicted_mult_count, 28u);
    EXPECT_EQ(r.mult_count, r.predicted_mult_count);
    EXPECT_FALSE(r.levels.has_value());
    EXPECT_EQ(r.repair, out.plan);
}

TEST(Report, OracleSkippedWithoutVerify) {
    const SymMatrix& a = corpus("A1");
    const Report r = make_report(a, Strategy::PerturbOriginal, auto_repair(a, Strategy::PerturbOriginal), false, true);
    EXPECT_FALSE(r.oracle_determinant.has_value());
    EXPECT_FALSE(r.match.has_value());
    ASSERT_TRUE(r.levels.has_value());
    EXPECT_EQ(r.levels->size(), 4u);
}

TEST(Report, IntermediateAlwaysChecked) {
    const SymMatrix& a = corpus("E2.2");
    const Report r =
        make_report(a, Strategy::IntermediateReplace, auto_repair(a, Strategy::IntermediateReplace), false, false);
    EXPECT_EQ(r.determinant, Rational(267, 4));
    EXPECT_EQ(r.oracle_determinant, Rational(213));
    EXPECT_EQ(r.match, false);
}

TEST(Report, JsonRoundTrip) {
    for (Strategy s : {Strategy::PerturbOriginal, Strategy::ReplaceEntry, Strategy::ReplaceZeros, Strategy::RowOpClear,
                       Strategy::IntermediateReplace}) {
        for (const char* name : {"E1.1", "E2.3", "A4"}) {
            const SymMatrix& a = corpus(name);
            const Report r = make_report(a, s, auto_repair(a, s), true, true);
            EXPECT_EQ(report_from_json(report_to_json(r)), r) << name << " " << strategy_name(s);
            EXPECT_EQ(report_from_json(report_to_json(r, -1)), r);
        }
    }
}

TEST(Report, JsonFieldsAreStrings) {
    const SymMatrix& a = corpus("A4");
    const Report r = make_report(a, Strategy::PerturbOriginal, auto_repair(a, Strategy::PerturbOriginal), true, false);
    const auto j = nlohmann::json::parse(report_to_json(r));
    EXPECT_EQ(j.at("determinant").get<std::string>(), "11331/2");
    EXPECT_EQ(j.at("strategy").get<std::string>(), "perturb");
    EXPECT_EQ(j.at("match").get<bool>(), true);
    EXPECT_EQ(j.at("input_digest").get<std::string>(), matrix_digest(a));
}

TEST(Report, PlanAndTraceRoundTrip) {
    const RepairOutcome out = auto_repair(corpus("E2.3"), Strategy::ReplaceZeros);
    EXPECT_EQ(repair_plan_from_json(repair_plan_to_json(out.plan)), out.plan);
    EXPECT_EQ(trace_from_json(trace_to_json(out.trace)), out.trace);
}

TEST(Report, MalformedJson) {
    EXPECT_THROW(report_from_json("{"), ParseError);
    EXPECT_THROW(report_from_json("{}"), ParseError);
    EXPECT_THROW(repair_plan_from_json("[1,2]"), ParseError);
    EXPECT_THROW(trace_from_json("null"), ParseError);
}

}  // namespace
}  // namespace dodgson
