#include <gtest/gtest.h>

#include "arches/fpl.hpp"
#include "arches/loopmodel.hpp"

using namespace arches;

TEST(FPL, TotalsAreAsmNumbers) {
    const long expect[] = {1, 2, 7, 42, 429};
    for (int n = 1; n <= 5; ++n) {
        auto c = fpl_counts(n);
        EXPECT_EQ(c.total(), expect[n - 1]) << n;
        EXPECT_EQ(c.total(), asm_count(n)) << n;
    }
    EXPECT_EQ(asm_count(6), 7436);
}

TEST(FPL, EveryGridHasDegreeTwo) {
    for (const auto& g : enumerate_fpl(3)) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) EXPECT_EQ(g.h(i, j - 1) + g.h(i, j) + g.v(i - 1, j) + g.v(i, j), 2);
    }
}

TEST(FPL, SizeGuard) {
    EXPECT_THROW(fpl_counts(0), Error);
    EXPECT_THROW(fpl_counts(kFplMaxN + 1), Error);
}

TEST(FPL, BrokenGridIsRejected) {
    auto g = enumerate_fpl(2).front();
    g.set_h(0, 0, !g.h(0, 0));
    EXPECT_THROW(link_pattern_of(g), Error);
}

TEST(FPL, CountsAreRotationInvariant) {
    auto c = fpl_counts(4);
    for (const auto& [p, k] : c.counts) EXPECT_EQ(c.count(p.rotated(1)), k) << p.word();
}

TEST(RazumovStroganov, HomogeneousCensusMatchesUpToFour) {
    for (int n = 1; n <= 4; ++n) {
        auto census = homogeneous_census(n);
        auto fpl = fpl_counts(n);
        auto pats = enumerate_patterns(n);
        ASSERT_EQ(census.size(), pats.size());
        for (std::size_t i = 0; i < pats.size(); ++i)
            EXPECT_EQ(census[i], CycloNum(BigRational(mpq_class(fpl.count(pats[i]))))) << n << " " << pats[i].word();
    }
}
