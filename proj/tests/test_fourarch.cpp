#include <gtest/gtest.h>

#include <random>

#include "arches/fourarch.hpp"

using namespace arches;

TEST(FourArch, DZeroIsRotatedNested) {
    auto [ns, r] = four_arch_as_nested({1, 1, 0, 1, 0});
    EXPECT_EQ(ns.n(), 3);
    EXPECT_EQ(nested_pattern(ns).rotated(r), four_arch_pattern({1, 1, 0, 1, 0}));
    EXPECT_THROW(four_arch_as_nested({1, 1, 0, 1, 1}), Error);
}

TEST(FourArch, DZeroReduction) {
    std::mt19937_64 rng(51);
    for (auto s : {FourArchSpec{1, 1, 0, 1, 0}, FourArchSpec{1, 1, 1, 1, 0}, FourArchSpec{2, 1, 0, 2, 0}, FourArchSpec{1, 2, 1, 1, 0}})
        EXPECT_TRUE(check_four_arch_d0(s, random_spectral(rng, 2 * s.n())).ok) << s.a << s.b << s.e << s.c;
}

TEST(FourArch, FrozenRows) {
    std::mt19937_64 rng(53);
    EXPECT_TRUE(check_four_arch_frozen({2, 1, 0, 1, 1}, FrozenArch::tx, random_spectral(rng, 10)).ok);
    EXPECT_TRUE(check_four_arch_frozen({2, 1, 1, 1, 1}, FrozenArch::tx, random_spectral(rng, 12)).ok);
    EXPECT_TRUE(check_four_arch_frozen({1, 1, 0, 1, 2}, FrozenArch::zt, random_spectral(rng, 10)).ok);
    EXPECT_TRUE(check_four_arch_frozen({1, 1, 1, 1, 2}, FrozenArch::zt, random_spectral(rng, 12)).ok);
    EXPECT_THROW(check_four_arch_frozen({1, 1, 0, 1, 1}, FrozenArch::tx, random_spectral(rng, 8)), Error);
}
