#include <gtest/gtest.h>

#include <sstream>
#include <thread>

#include "arches/report.hpp"

using namespace arches;

TEST(Emit, CycloText) {
    EXPECT_EQ((CycloNum(2) + CycloNum::omega()).to_string(), "2+1*w");
}

TEST(Emit, EmptyReportIsValidJson) {
    verify::Report r{"rs", 5};
    std::ostringstream os;
    report::emit(os, r, report::Format::json);
    auto j = nlohmann::json::parse(os.str());
    EXPECT_EQ(j["cases"].size(), 0u);
    EXPECT_EQ(j["seed"], 5);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_FALSE(j.contains("seconds"));
}

TEST(Emit, CensusTsvRoundTrip) {
    for (int n = 1; n <= 5; ++n) {
        auto c = fpl_counts(n);
        std::ostringstream os;
        report::emit(os, c, report::Format::tsv);
        std::istringstream is(os.str());
        auto back = report::parse_census_tsv(is);
        EXPECT_EQ(back.n, n);
        EXPECT_EQ(back.counts, c.counts);
    }
}

TEST(Emit, CensusTsvRejectsJunk) {
    std::istringstream bad("pattern\tcount\n(()\t3\n");
    EXPECT_THROW(report::parse_census_tsv(bad), Error);
    std::istringstream mixed("()\t1\n()()\t1\n");
    EXPECT_THROW(report::parse_census_tsv(mixed), Error);
}

TEST(Verify, UnknownSuite) {
    try {
        verify::run_verify("nope", {}, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
    }
}

TEST(Verify, BoundsChecked) {
    verify::Bounds b;
    b.n_max = 9;
    EXPECT_THROW(verify::run_verify("rs", b, 1), Error);
}

TEST(Verify, RsSmall) {
    verify::Bounds b;
    b.n_max = 3;
    auto r = verify::run_verify("rs", b, 1);
    EXPECT_TRUE(r.ok());
    // 1 + 2 + 5 pattern comparisons plus one total per size
    EXPECT_EQ(r.cases.size(), 8u + 3u);
}

TEST(Verify, PhiCrossSmall) {
    verify::Bounds b;
    b.box_max = 2;
    b.samples = 3;
    auto r = verify::run_verify("phi-cross", b, 1);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.cases.size(), 26u * 3u);
}

TEST(Verify, SameSeedSameBytes) {
    verify::Bounds b;
    b.n_max = 3;
    b.samples = 2;
    b.box_max = 2;
    for (const char* s : {"stochastic", "recurrence", "schur"}) {
        std::ostringstream x, y;
        report::emit(x, verify::run_verify(s, b, 42), report::Format::json);
        report::emit(y, verify::run_verify(s, b, 42), report::Format::json);
        EXPECT_EQ(x.str(), y.str()) << s;
        std::ostringstream z;
        report::emit(z, verify::run_verify(s, b, 43), report::Format::json);
        EXPECT_NE(x.str(), z.str()) << s;
    }
}

TEST(Verify, RecurrenceNotesCarrySigns) {
    verify::Bounds b;
    b.box_max = 1;
    b.samples = 3;
    auto r = verify::run_verify("recurrence", b, 1);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.notes.size(), r.cases.size());
}

TEST(Verify, ExpiredBudgetAborts) {
    verify::Budget b(1e-9);
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    auto r = verify::group_tiling({}, 1, b);
    EXPECT_TRUE(r.aborted);
    EXPECT_FALSE(r.ok());
}
