#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "arches/fpl.hpp"
#include "arches/loopmodel.hpp"
#include "arches/tilings.hpp"

using namespace arches;

TEST(Hexagon, Shapes) {
    auto r = build_hexagon(1, 1, 0);
    EXPECT_EQ(r.size(), 2);
    EXPECT_EQ(tiling_count(r), 1);
    EXPECT_EQ(build_hexagon(2, 3, 4).size(), 2 * (6 + 12 + 8));
    EXPECT_EQ(tiling_count(build_hexagon(0, 0, 0)), 1);
}

TEST(Hexagon, CountsAreMacMahon) {
    EXPECT_EQ(enumerate_tilings(build_hexagon(1, 1, 1)).size(), 2u);
    EXPECT_EQ(enumerate_tilings(build_hexagon(1, 2, 3)).size(), 10u);
    EXPECT_EQ(tiling_count(build_hexagon(2, 2, 2)), 20);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) EXPECT_EQ(tiling_count(build_hexagon(a, b, c)), macmahon(a, b, c)) << a << b << c;
}

TEST(Hexagon, PartitionFunctionIsPhi) {
    std::mt19937_64 rng(17);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                if (a + b + c == 0) continue;
                auto p = random_params(rng, {a, b, c});
                auto r = build_hexagon(a, b, c, p);
                CycloNum z = partition_function(r);
                EXPECT_EQ(z, phi_subset({a, b, c}, p)) << a << b << c;
                CycloNum sum(0);
                for (const auto& t : enumerate_tilings(r)) sum += tiling_weight(r, t);
                EXPECT_EQ(sum, z);
            }
    auto p = ParamSet{{CycloNum(0), CycloNum(1)}, {CycloNum(2), CycloNum(3)}, {CycloNum(4), CycloNum(5)}};
    EXPECT_EQ(partition_function(build_hexagon(1, 1, 1, p)), CycloNum(32));
}

TEST(Hexagon, WrongParameterCount) {
    ParamSet p{{CycloNum(1)}, {CycloNum(2)}, {CycloNum(3)}};
    EXPECT_THROW(build_hexagon(1, 1, 1, p), Error);
}

TEST(Paths, ExtractAndRebuild) {
    for (const auto& t : enumerate_tilings(build_hexagon(1, 1, 1))) {
        auto paths = nip_extract(t, build_hexagon(1, 1, 1));
        ASSERT_EQ(paths.size(), 1u);
        EXPECT_EQ(paths[0].steps.size(), 2u);
    }
    EXPECT_TRUE(nip_extract(enumerate_tilings(build_hexagon(2, 1, 0)).front(), build_hexagon(2, 1, 0)).empty());
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                auto r = build_hexagon(a, b, c);
                std::set<NIPFamily> seen;
                std::size_t count = 0;
                for_each_tiling(r, [&](const Tiling& t) {
                    auto f = nip_extract(t, r);
                    EXPECT_EQ(f.size(), static_cast<std::size_t>(a + b > 0 ? c : 0));
                    EXPECT_EQ(nip_rebuild(f, r), t);
                    seen.insert(f);
                    ++count;
                });
                EXPECT_EQ(seen.size(), count) << a << b << c;
            }
}

TEST(Paths, FactorizedSum) {
    std::mt19937_64 rng(23);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c) {
                auto r = build_hexagon(a, b, c, random_params(rng, {a, b, c}));
                EXPECT_EQ(partition_function_paths(r), partition_function(r)) << a << b << c;
            }
}

TEST(Hexagon, FrozenRow) {
    std::mt19937_64 rng(29);
    for (int a = 0; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) EXPECT_TRUE(check_frozen_row({a, b, c}, random_params(rng, {a, b, c}))) << a << b << c;
}

TEST(SwapPieces, HexagonPiece) {
    std::mt19937_64 rng(31);
    for (int k = 0; k <= 3; ++k) {
        auto al = random_spectral(rng, k + 1), be = random_spectral(rng, k + 1), g = random_spectral(rng, 2);
        auto r = swap_hexagon_region(k, al, be, g[0], g[1]);
        CycloNum w = swap_hexagon_weight(k, al, be, g[0], g[1]);
        EXPECT_EQ(partition_function(r), k % 2 ? -w : w) << k;
        EXPECT_EQ(w, swap_hexagon_weight(k, al, be, g[1], g[0]));
        EXPECT_EQ(tiling_count(r), k + 1);
    }
    EXPECT_THROW(swap_hexagon_weight(1, random_spectral(rng, 2), random_spectral(rng, 2), CycloNum(3), CycloNum(3)), Error);
}

TEST(SwapPieces, ParallelogramIsRigid) {
    std::mt19937_64 rng(37);
    auto g = random_spectral(rng, 2);
    auto one = random_spectral(rng, 1);
    EXPECT_EQ(swap_parallelogram_weight(1, one, g[0], g[1]), (one[0] - g[0]) * (one[0] - g[1]));
    for (int k = 1; k <= 3; ++k) {
        auto al = random_spectral(rng, k);
        auto r = swap_parallelogram_region(k, al, g[0], g[1]);
        EXPECT_EQ(tiling_count(r), 1);
        EXPECT_EQ(partition_function(r), swap_parallelogram_weight(k, al, g[0], g[1]));
        EXPECT_EQ(swap_parallelogram_weight(k, al, g[0], g[1]), swap_parallelogram_weight(k, al, g[1], g[0]));
    }
}

TEST(SwapPieces, SwapSymmetry) {
    std::mt19937_64 rng(41);
    auto r = build_hexagon(2, 2, 2, random_params(rng, {2, 2, 2}));
    EXPECT_TRUE(check_swap_symmetry(r, 2, 0, 1));
    EXPECT_TRUE(check_swap_symmetry(build_hexagon(1, 2, 3, random_params(rng, {1, 2, 3})), 0, 0, 1));
    EXPECT_TRUE(check_swap_symmetry(build_hexagon(1, 1, 1, random_params(rng, {1, 1, 1})), 1, 0, 1));
    EXPECT_TRUE(check_swap_symmetry(r, 0, 1, 2, WeightMode::q_difference));
    EXPECT_THROW(check_swap_symmetry(r, 0, 0, 9), Error);
}

TEST(RegionFile, RoundTrip) {
    std::mt19937_64 rng(43);
    auto r = build_hexagon(1, 2, 1, random_params(rng, {1, 2, 1}));
    std::stringstream ss;
    write_region(ss, r);
    auto back = read_region(ss);
    EXPECT_EQ(back.triangles, r.triangles);
    EXPECT_EQ(partition_function(back), partition_function(r));
}

TEST(RegionFile, DentsAndErrors) {
    std::stringstream ss("tri U 0 0\ntri D 0 0\ntri D -1 0  # comment\ndent D -1 0\n");
    auto r = read_region(ss);
    EXPECT_EQ(r.size(), 2);
    EXPECT_EQ(tiling_count(r), 1);
    std::stringstream bad("tri X 0 0\n");
    EXPECT_THROW(read_region(bad), Error);
    std::stringstream bad2("line 0 1 5\ntri U 0 0 0 0 0\n");
    EXPECT_THROW(read_region(bad2), Error);
    EXPECT_THROW(partition_function(r), Error);
}

TEST(FourArchCone, CountsMatchFpl) {
    for (auto s : {FourArchSpec{1, 1, 0, 1, 1}, FourArchSpec{1, 1, 0, 1, 2}, FourArchSpec{1, 1, 0, 2, 1}, FourArchSpec{2, 1, 0, 1, 1},
                   FourArchSpec{1, 2, 0, 1, 1}}) {
        auto fpl = fpl_counts(s.n());
        EXPECT_EQ(four_arch_tiling_count(s), fpl.count(four_arch_pattern(s))) << s.a << s.b << s.e << s.c << s.d;
    }
    EXPECT_EQ(four_arch_tiling_count({1, 1, 0, 1, 1}), 7);
}

TEST(FourArchCone, DZeroIsMacMahon) {
    EXPECT_EQ(four_arch_tiling_count({1, 1, 0, 1, 0}), macmahon(1, 1, 1));
    EXPECT_EQ(four_arch_tiling_count({2, 1, 0, 1, 0}), macmahon(1, 2, 1));
    EXPECT_EQ(four_arch_tiling_count({1, 2, 0, 1, 0}), macmahon(1, 1, 2));
}

TEST(FourArchCone, Geometry) {
    auto fr = build_four_arch({1, 1, 0, 1, 1});
    EXPECT_EQ(fr.region.size(), 16);
    EXPECT_FALSE(fr.region.glued.empty());
    EXPECT_THROW(build_four_arch({1, 1, 1, 1, 1}), Error);
    EXPECT_THROW(build_four_arch({0, 1, 0, 1, 1}), Error);
}
