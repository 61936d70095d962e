#include "fibroot/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fibroot;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("fibroot_test_" + name);
}

}  // namespace

TEST(CliIsqrt, PrintsRootAndBoard) {
    const Result r = run({"isqrt", "864", "--style", "pg", "--trace"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "root 29 remainder 23\n"
              "            (23_6\n"
              "1_5\n"
              "4_2 0_5\n"
              "*8* *6* *4*\n"
              "    2_1 9_4\n"
              "    4_3\n");
}

TEST(CliIsqrt, ZeroAndRules) {
    EXPECT_EQ(run({"isqrt", "0"}).out, "root 0 remainder 0\n");
    EXPECT_EQ(run({"isqrt", "72340000", "--rule", "exact-largest"}).out, "root 8505 remainder 4975\n");
    for (const char* rule : {"exact-smallest", "q-full", "q-tens", "q-coarse", "q-coarsest"})
        EXPECT_EQ(run({"isqrt", "9876543", "--rule", rule}).out, "root 3142 remainder 4379\n");
}

TEST(CliIsqrt, JsonIsTheTraceExport) {
    const Result r = run({"isqrt", "153", "--json", "--style", "la1228"});
    EXPECT_EQ(r.status, 0);
    const TraceExport x = parse_trace_export(r.out);
    EXPECT_EQ(x.root, 12);
    EXPECT_EQ(x.style, TableauStyle::LiberAbaci1228);
}

TEST(CliIsqrt, UsageErrors) {
    EXPECT_EQ(run({"isqrt", "-5"}).status, 2);
    EXPECT_EQ(run({"isqrt", "12x"}).status, 2);
    EXPECT_EQ(run({"isqrt", "12", "--rule", "guess"}).status, 2);
    EXPECT_EQ(run({"isqrt", "12", "--style", "modern"}).status, 2);
    EXPECT_EQ(run({"isqrt"}).status, 2);
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"frobnicate"}).status, 2);
}

TEST(CliRefine, SquareRootOfTen) {
    const Result r = run({"refine", "10", "--steps", "2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "step 1: 3 1/6 = 19/6, residual -1/36\n"
              "step 2: 3 1/6 - 1/228 = 721/228, residual -1/51984\n");
}

TEST(CliRefine, ExactAndOrder) {
    EXPECT_EQ(run({"refine", "25", "--steps", "1"}).out, "step 1: 5 (exact)\n");
    EXPECT_EQ(run({"refine", "927435"}).out, "step 1: 963 11/321 = 309134/321, residual -121/103041\n");
    EXPECT_EQ(run({"refine", "743", "--fibonacci-order"}).out, "step 1: 7/27 27 = 736/27, residual -49/729\n");
}

TEST(CliRefine, UsageErrors) {
    EXPECT_EQ(run({"refine", "0", "--steps", "1"}).status, 2);
    EXPECT_EQ(run({"refine", "10", "--steps", "0"}).status, 2);
    EXPECT_EQ(run({"refine", "10", "--start", "middle"}).status, 2);
}

TEST(CliCompare, Equal) {
    const Result r = run({"compare", "10", "--steps", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("EQUAL"), std::string::npos);
    EXPECT_NE(r.out.find("1039681/328776"), std::string::npos);
    const Result sq = run({"compare", "25", "--steps", "2"});
    EXPECT_EQ(sq.status, 0);
    EXPECT_NE(sq.out.find("EQUAL"), std::string::npos);
    EXPECT_EQ(run({"compare", "927435", "--steps", "2"}).status, 0);
    EXPECT_EQ(run({"compare", "10", "--start", "ceil"}).status, 0);
    EXPECT_EQ(run({"compare", "1"}).status, 2);
}

TEST(CliScale, Descaled) {
    EXPECT_EQ(run({"scale", "7234", "--pairs", "2"}).out, "root 8505 remainder 4975\ndescaled 85 1/20 1/400 = 34021/400\n");
    EXPECT_EQ(run({"scale", "7234", "--pairs", "2", "--fibonacci-order"}).out,
              "root 8505 remainder 4975\ndescaled 1/400 1/20 85 = 34021/400\n");
    EXPECT_EQ(run({"scale", "10", "--pairs", "0"}).out, "root 3 remainder 1\ndescaled 3 1/6 = 19/6\n");
    EXPECT_EQ(run({"scale", "16", "--pairs", "3"}).out, "root 4000 remainder 0\ndescaled 4 = 4\n");
    EXPECT_EQ(run({"scale", "x"}).status, 2);
}

TEST(CliCorpus, RunListDiff) {
    const Result r = run({"corpus", "run"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("passed 22 of 22"), std::string::npos);
    const Result l = run({"corpus", "list"});
    EXPECT_EQ(std::count(l.out.begin(), l.out.end(), '\n'), 16);
    EXPECT_EQ(run({"corpus", "diff"}).status, 0);
    const Result d = run({"corpus", "diff", "--id", "la-72340000"});
    EXPECT_EQ(d.status, 0);
    EXPECT_NE(d.out.find("inserted: residual 10^5 digit 3 step 6"), std::string::npos);
    EXPECT_NE(d.out.find("MissingCell (10^5, residual) expected 3"), std::string::npos);
    EXPECT_EQ(run({"corpus", "run", "--id", "nope"}).status, 2);
    EXPECT_EQ(run({"corpus", "dance"}).status, 2);
}

TEST(CliCorpus, ExportAndCorruptedFile) {
    const auto path = temp_file("corpus.txt");
    ASSERT_EQ(run({"corpus", "--export-corpus", path.string()}).status, 0);
    std::string text;
    {
        std::ifstream in(path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    EXPECT_EQ(text, run({"corpus", "export"}).out);
    EXPECT_EQ(run({"corpus", "run", "--corpus-file", path.string()}).status, 0);

    const std::string bad = std::string(text).replace(text.find("|29|23|"), 7, "|29|24|");
    {
        std::ofstream out(path);
        out << bad;
    }
    const Result r = run({"corpus", "run", "--corpus-file", path.string()});
    EXPECT_EQ(r.status, 1);
    std::size_t fails = 0;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) fails += line.starts_with("FAIL");
    EXPECT_EQ(fails, 1u);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"corpus", "run", "--corpus-file", path.string()}).status, 2);
}
