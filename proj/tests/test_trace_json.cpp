#include "fibroot/corpus.hpp"
#include "fibroot/trace_json.hpp"

#include <gtest/gtest.h>

using namespace fibroot;

TEST(TraceJson, FieldNamesAndShape) {
    const FibonacciRun run = isqrt_fibonacci(864, DigitRule::ExactLargest);
    const auto j = nlohmann::json::parse(to_json(make_export(run, TableauStyle::PracticaGeometrie)));
    EXPECT_EQ(j.at("radicand"), "864");
    EXPECT_EQ(j.at("rule"), "exact-largest");
    EXPECT_EQ(j.at("style"), "pg");
    EXPECT_EQ(j.at("result").at("root"), "29");
    EXPECT_EQ(j.at("result").at("remainder"), "23");
    const auto& ev = j.at("events");
    ASSERT_EQ(ev.size(), 7u);
    EXPECT_EQ(ev[1].at("step"), 1);
    EXPECT_EQ(ev[1].at("label"), "L:1");
    const auto& cell = ev[1].at("cells")[0];
    EXPECT_EQ(cell.at("column"), 1);
    EXPECT_EQ(cell.at("band"), "root");
    EXPECT_EQ(cell.at("digit"), 2);
    EXPECT_EQ(cell.at("flag"), "normal");
    EXPECT_TRUE(ev[1].contains("note"));
}

TEST(TraceJson, RoundTripIsByteStable) {
    for (const auto& e : corpus()) {
        const std::string first = to_json(make_export(corpus_run(e), e.style));
        const TraceExport parsed = parse_trace_export(first);
        EXPECT_EQ(to_json(parsed), first) << e.id;
        EXPECT_EQ(parsed, make_export(corpus_run(e), e.style));
    }
    const Natural big("31415926535897932384626433832795028841971");
    const std::string j = to_json(make_export(isqrt_fibonacci(big, DigitRule::QuotientTens), TableauStyle::LiberAbaci1202));
    EXPECT_EQ(to_json(parse_trace_export(j)), j);
}

TEST(TraceJson, InsertedFlagSurvives) {
    const std::string j = to_json(make_export(corpus_run(*find_entry("dpg-960")), TableauStyle::PracticaGeometrie));
    EXPECT_NE(j.find("\"inserted\""), std::string::npos);
}

TEST(TraceJson, RejectsMalformedInput) {
    EXPECT_THROW(parse_trace_export("{"), std::invalid_argument);
    EXPECT_THROW(parse_trace_export(R"({"radicand": 864})"), std::invalid_argument);
    const std::string good = to_json(make_export(isqrt_fibonacci(153, DigitRule::ExactLargest), TableauStyle::PracticaGeometrie));
    std::string bad_band = good;
    bad_band.replace(bad_band.find("\"root\""), 6, "\"stem\"");
    EXPECT_THROW(parse_trace_export(bad_band), std::invalid_argument);
    std::string bad_rule = good;
    bad_rule.replace(bad_rule.find("exact-largest"), 13, "guess");
    EXPECT_THROW(parse_trace_export(bad_rule), std::invalid_argument);
}
