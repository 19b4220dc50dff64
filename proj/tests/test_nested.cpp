#include <gtest/gtest.h>

#include <random>

#include "arches/loopmodel.hpp"
#include "arches/nested.hpp"

using namespace arches;

namespace {

std::vector<CycloNum> ints(std::initializer_list<long> v) {
    std::vector<CycloNum> z;
    for (long x : v) z.emplace_back(x);
    return z;
}

ParamSet small_example() { return {ints({0, 1}), ints({2, 3}), ints({4, 5})}; }

} // namespace

TEST(PhiSubset, HandValue) {
    EXPECT_EQ(phi_subset({1, 1, 1}, small_example()), CycloNum(32));
    ParamSet p{{}, ints({3}), ints({5})};
    EXPECT_EQ(phi_subset({1, 0, 0}, p), CycloNum(1));
}

TEST(PhiSubset, BaseCaseIsProduct) {
    ParamSet p{ints({2, 7}), ints({3, 11, 13}), ints({1, 1, 1, 1, 1})};
    CycloNum expect(1);
    for (auto& a : p.alphas)
        for (auto& b : p.betas) expect *= a - b;
    EXPECT_EQ(phi_subset({3, 2, 0}, p), expect);
}

TEST(PhiSubset, CoincidentAlphas) {
    ParamSet p{ints({1, 1}), ints({2, 3}), ints({4, 5})};
    EXPECT_THROW(phi_subset({1, 1, 1}, p), Error);
}

TEST(PhiRepresentations, AgreeOnSmallBoxes) {
    std::mt19937_64 rng(11);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                if (a + b + c == 0) continue;
                auto p = random_params(rng, {a, b, c});
                CycloNum ref = phi_subset({a, b, c}, p);
                EXPECT_EQ(phi_det({a, b, c}, p), ref) << a << b << c;
                EXPECT_EQ(phi_lgv({a, b, c}, p), ref) << a << b << c;
            }
    EXPECT_EQ(phi_det({1, 1, 1}, small_example()), CycloNum(32));
    EXPECT_EQ(phi_lgv({1, 1, 1}, small_example()), CycloNum(32));
}

TEST(Propagator, Recurrence) {
    std::mt19937_64 rng(5);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            auto al = random_spectral(rng, b + 1), be = random_spectral(rng, a + 1), ga = random_spectral(rng, a + b);
            CycloNum lhs = propagator_single(a, b, al, be, ga);
            // drop gamma_{a+b}; first term loses beta_{a+1}, second loses alpha_{b+1}
            std::vector<CycloNum> g2(ga.begin(), ga.end() - 1);
            std::vector<CycloNum> be2(be.begin(), be.end() - 1), al2(al.begin(), al.end() - 1);
            CycloNum t1 = (al[b] - ga.back()) / (al[b] - be[a - 1]) * propagator_single(a - 1, b, al, be2, g2);
            CycloNum t2 = (ga.back() - be[a]) / (al[b - 1] - be[a]) * propagator_single(a, b - 1, al2, be, g2);
            EXPECT_EQ(lhs, t1 + t2) << a << b;
        }
    EXPECT_EQ(propagator_single(0, 0, ints({3}), ints({8}), {}), CycloNum(1));
    auto v = propagator_single(1, 0, ints({3}), ints({8, 2}), ints({5}));
    EXPECT_EQ(v, CycloNum(3 - 5) / CycloNum(3 - 8));
}

TEST(Recurrence, SignIsParityOfB) {
    EXPECT_EQ(recurrence_sign({1, 1, 1}, {ints({0, 1}), ints({2, 1}), ints({4, 5})}), -1);
    std::mt19937_64 rng(2);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c) {
                auto p = random_params(rng, {a, b, c});
                EXPECT_TRUE(check_recurrence({a, b, c}, p, b % 2 ? -1 : 1)) << a << b << c;
            }
    EXPECT_THROW(check_recurrence({1, 1, 0}, {ints({1}), ints({2}), ints({3, 4})}, 1), Error);
}

TEST(Schur, JacobiTrudiMatchesTableaux) {
    std::mt19937_64 rng(9);
    auto x = random_spectral(rng, 3);
    for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
            EXPECT_EQ(schur_rect(b, c, x), schur_tableaux(std::vector<int>(static_cast<std::size_t>(b), c), x));
    EXPECT_EQ(schur_rect(1, 1, ints({2, 5})), CycloNum(7));
    EXPECT_EQ(schur_rect(2, 1, ints({2})), CycloNum(0));
}

TEST(Schur, SpecializationMatchesCoincidenceLimit) {
    std::mt19937_64 rng(4);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                if (a + b + c == 0) continue;
                auto g = random_spectral(rng, a + b);
                CycloNum al(3), be(17);
                EXPECT_EQ(phi_schur_specialized({a, b, c}, al, be, g), phi_subset_coincident({a, b, c}, al, be, g)) << a << b << c;
            }
}

TEST(Homogeneous, MacMahonAndNorm) {
    EXPECT_EQ(macmahon(1, 1, 1), 2);
    EXPECT_EQ(macmahon(1, 2, 3), 10);
    EXPECT_EQ(macmahon(2, 2, 2), 20);
    EXPECT_EQ(macmahon(3, 3, 0), 1);
    EXPECT_EQ(phi_homogeneous({1, 1, 0}).norm_sq(), BigRational(3));
    EXPECT_EQ(phi_homogeneous({1, 1, 1}).norm_sq(), BigRational(108));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                if (a + b + c) EXPECT_TRUE(homogeneous_check(a, b, c)) << a << b << c;
    std::vector<CycloNum> g(2, q_power(1));
    auto ev = (g[0] - q_power(2)) / (g[0] - CycloNum(1));
    EXPECT_EQ(ev, -q_power(1));
}

TEST(Symbolic, DegreesAndSymmetry) {
    std::mt19937_64 rng(8);
    for (auto s : {NestedArchSpec{1, 1, 1}, NestedArchSpec{2, 1, 1}, NestedArchSpec{1, 2, 2}}) {
        auto P = phi_subset_symbolic(s);
        auto d = P.degrees();
        EXPECT_EQ(d.total, s.a * s.b + s.b * s.c + s.c * s.a);
        auto p = random_params(rng, s);
        std::vector<CycloNum> pt = p.alphas;
        pt.insert(pt.end(), p.betas.begin(), p.betas.end());
        pt.insert(pt.end(), p.gammas.begin(), p.gammas.end());
        EXPECT_EQ(P.eval(pt), phi_subset(s, p));
    }
}

TEST(LoopModelLink, ComponentsMatchClosedForm) {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 5; ++n) {
        auto z = random_spectral(rng, 2 * n);
        auto gs = ground_state_numeric(n, z);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) {
                NestedArchSpec s{a, b, n - a - b};
                EXPECT_EQ(gs.component(nested_pattern(s)), nested_component(s, z)) << a << b << s.c;
            }
    }
}
