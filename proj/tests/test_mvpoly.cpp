#include <gtest/gtest.h>

#include <random>

#include "arches/mvpoly.hpp"

using namespace arches;

namespace {
auto xyz() { return std::make_shared<const VarTable>(std::vector<std::string>{"x", "y", "z"}); }
} // namespace

TEST(VarTable, RejectsDuplicates) {
    EXPECT_THROW(VarTable({"x", "x"}), Error);
    auto t = xyz();
    EXPECT_EQ(t->index_of("z"), 2u);
    EXPECT_THROW(t->index_of("w"), Error);
}

TEST(MultiPoly, ArithmeticAndEval) {
    auto t = xyz();
    auto x = MultiPoly::variable(t, "x"), y = MultiPoly::variable(t, "y");
    auto p = (x + y) * (x - y);
    auto q = x * x - y * y;
    EXPECT_EQ(p, q);
    std::map<std::string, CycloNum> pt{{"x", CycloNum(3)}, {"y", CycloNum::omega()}, {"z", CycloNum(0)}};
    EXPECT_EQ(p.eval(pt), CycloNum(9) - CycloNum::omega() * CycloNum::omega());
    pt.erase("z"); // p does not involve z
    EXPECT_NO_THROW(p.eval(pt));
    pt.erase("x");
    EXPECT_THROW(p.eval(pt), Error);
    EXPECT_TRUE((p - q).is_zero());
}

TEST(MultiPoly, DegreesAndSymmetry) {
    auto t = xyz();
    auto x = MultiPoly::variable(t, "x"), y = MultiPoly::variable(t, "y"), z = MultiPoly::variable(t, "z");
    auto e2 = x * y + y * z + z * x;
    EXPECT_TRUE(e2.is_homogeneous(2));
    EXPECT_TRUE(e2.is_symmetric(std::vector<std::string>{"x", "y", "z"}));
    auto d = (x * x * y + z).degrees();
    EXPECT_EQ(d.total, 3);
    EXPECT_EQ(d.partial, (std::vector<int>{2, 1, 1}));
    EXPECT_FALSE(MultiPoly(t).degrees().total.has_value());
    EXPECT_FALSE((x * x + y).is_symmetric(std::vector<std::string>{"x", "y"}));
}

TEST(MultiPoly, DivideLinear) {
    auto t = xyz();
    CycloNum q = CycloNum::omega();
    auto f = MultiPoly::linear(t, 0, q, 1, -q * q);
    auto g = MultiPoly::variable(t, "z") * MultiPoly::variable(t, "x") + MultiPoly::constant(t, CycloNum(5));
    auto h = f * g;
    auto back = h.divide_linear(0, q, 1, -q * q);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, g);
    EXPECT_FALSE(g.divide_linear(0, q, 1, -q * q));
}

TEST(MultiPoly, TextRoundTrip) {
    auto t = xyz();
    auto p = MultiPoly::variable(t, "x") * CycloNum(BigRational(1, 3), BigRational(2)) +
             MultiPoly::variable(t, "z") * MultiPoly::variable(t, "z");
    EXPECT_EQ(MultiPoly::from_text(t, p.to_text()), p);
}

TEST(MultiPoly, SpecializeAndSubstitute) {
    auto t = xyz();
    auto x = MultiPoly::variable(t, "x"), y = MultiPoly::variable(t, "y");
    auto p = x * y + x;
    auto s = p.specialize("x", CycloNum(2));
    EXPECT_FALSE(s.depends_on(0));
    EXPECT_EQ(s, y * CycloNum(2) + MultiPoly::constant(t, CycloNum(2)));
    EXPECT_EQ(p.substitute("y", "x"), x * x + x);
    EXPECT_EQ(p.swapped(0, 1), x * y + y);
}

TEST(Interpolation, RecoversRandomPolynomial) {
    auto t = xyz();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    MultiPoly p(t);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 1; ++j)
            for (int k = 0; k <= 3; ++k) p.add_term({i, j, k}, CycloNum(BigRational(d(rng)), BigRational(d(rng))));
    std::map<std::vector<BigRational>, CycloNum> samples;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 1; ++j)
            for (int k = 0; k <= 3; ++k) {
                std::vector<BigRational> pt{BigRational(i), BigRational(j + 5), BigRational(BigRational(k) / BigRational(2))};
                std::vector<CycloNum> c(pt.begin(), pt.end());
                samples[pt] = p.eval(c);
            }
    EXPECT_EQ(interpolate(t, samples, {2, 1, 3}), p);
    EXPECT_THROW(interpolate(t, samples, {2, 2, 3}), Error);
}

TEST(Interpolation, DuplicateNodes) {
    auto t = std::make_shared<const VarTable>(std::vector<std::string>{"x"});
    std::vector<std::vector<BigRational>> nodes{{BigRational(1), BigRational(1)}};
    EXPECT_THROW(interpolate_grid(t, nodes, {CycloNum(1), CycloNum(2)}), Error);
}
