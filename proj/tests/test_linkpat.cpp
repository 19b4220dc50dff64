#include <gtest/gtest.h>

#include "arches/linkpat.hpp"

using namespace arches;

TEST(LinkPattern, Catalan) {
    const std::size_t cat[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(enumerate_patterns(n).size(), cat[n]);
}

TEST(LinkPattern, RejectsCrossing) {
    EXPECT_THROW(LinkPattern({2, 3, 0, 1}), Error);
    EXPECT_THROW(LinkPattern({1, 0, 2, 3}), Error);
    EXPECT_THROW(LinkPattern::from_word("(()"), Error);
}

TEST(LinkPattern, WordRoundTrip) {
    for (const auto& p : enumerate_patterns(4)) EXPECT_EQ(LinkPattern::from_word(p.word()), p);
}

TEST(LinkPattern, RotationIsCyclic) {
    for (const auto& p : enumerate_patterns(3)) {
        EXPECT_EQ(p.rotated(6), p);
        EXPECT_EQ(p.rotated(2).rotated(-2), p);
    }
}

TEST(LinkPattern, FreeSequencesCoverAllPoints) {
    for (const auto& p : enumerate_patterns(5)) {
        std::size_t total = 0;
        auto seqs = p.free_sequences();
        EXPECT_EQ(seqs.size(), little_arches(p).size());
        for (const auto& s : seqs) {
            total += s.size();
            for (std::size_t x = 0; x < s.size(); ++x)
                for (std::size_t y = x + 1; y < s.size(); ++y) EXPECT_NE(p.mate(s[x]), s[y]);
        }
        EXPECT_EQ(total, 10u);
    }
}

TEST(NestedPattern, ThreeFans) {
    // a=1, b=1, c=1 on 6 points: c fan joins 1-2, a fan joins 3-4... (0-based)
    auto p = nested_pattern({1, 1, 1});
    EXPECT_EQ(p.mate(1), 2);
    EXPECT_EQ(p.mate(3), 4);
    EXPECT_EQ(p.mate(5), 0);
    EXPECT_EQ(little_arches(p).size(), 3u);
    auto q = nested_pattern({0, 3, 0});
    EXPECT_EQ(q.word(), "((()))");
    EXPECT_EQ(little_arches(q).size(), 2u); // (3,4) and the seam arch (6,1)
    EXPECT_THROW(nested_pattern({0, 0, 0}), Error);
}

TEST(NestedPattern, BlockSizes) {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                if (a + b + c == 0) continue;
                auto p = nested_pattern({a, b, c});
                int alpha = b + c, beta = a + c;
                for (int i = 0; i < 2 * (a + b + c); ++i) {
                    int j = p.mate(i);
                    auto block = [&](int x) { return x < alpha ? 0 : (x < alpha + beta ? 1 : 2); };
                    EXPECT_NE(block(i), block(j)) << a << b << c;
                }
            }
}

TEST(LittleArch, RemoveInsertInverse) {
    for (const auto& p : enumerate_patterns(4))
        for (int i : little_arches(p)) EXPECT_EQ(insert_little_arch(remove_little_arch(p, i), i), p);
    auto p = enumerate_patterns(3).front();
    int bad = 0;
    while (p.has_little_arch(bad)) ++bad;
    EXPECT_THROW(remove_little_arch(p, bad), Error);
}
