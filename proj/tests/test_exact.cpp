#include <gtest/gtest.h>

#include "arches/exact.hpp"
#include "arches/linalg.hpp"
#include "arches/modular.hpp"

using namespace arches;

TEST(BigRational, Canonical) {
    BigRational a(6, -4);
    EXPECT_EQ(a.to_string(), "-3/2");
    EXPECT_EQ(a.denominator(), 2);
    EXPECT_THROW(BigRational(1, 0), Error);
    EXPECT_THROW(BigRational(1) / BigRational(0), Error);
}

TEST(BigRational, ParseRoundTrip) {
    for (const char* s : {"0", "-7", "12/5", "-123456789012345678901234567891/8"})
        EXPECT_EQ(BigRational::parse(s).to_string(), s);
    EXPECT_EQ(BigRational::parse("+4/6").to_string(), "2/3");
    EXPECT_THROW(BigRational::parse("1/"), Error);
    EXPECT_THROW(BigRational::parse("x"), Error);
}

TEST(CycloNum, OmegaIsCubeRoot) {
    CycloNum w = CycloNum::omega();
    EXPECT_EQ(w * w * w, CycloNum(1));
    EXPECT_EQ(w * w + w + CycloNum(1), CycloNum(0));
    EXPECT_EQ(q_power(-1), w * w);
    EXPECT_EQ(q_power(5), w * w);
}

TEST(CycloNum, InverseAndNorm) {
    CycloNum x(BigRational(3, 2), BigRational(-5));
    EXPECT_EQ(x * x.inv(), CycloNum(1));
    EXPECT_EQ(x * x.conj(), CycloNum(x.norm_sq()));
    EXPECT_THROW(CycloNum(0).inv(), Error);
    EXPECT_EQ(CycloNum(1) + CycloNum::omega(), -(CycloNum::omega() * CycloNum::omega()));
}

TEST(CycloNum, TextRoundTrip) {
    for (const char* s : {"0", "2+1*w", "-1/2-3*w", "5*w", "-7/3"})
        EXPECT_EQ(CycloNum::parse(s).to_string(), s);
    EXPECT_THROW(CycloNum::parse("2+w"), Error);
}

TEST(CycloNum, PowNegative) {
    CycloNum x(2, 1);
    EXPECT_EQ(x.pow(3) * x.pow(-3), CycloNum(1));
}

TEST(Linalg, KernelAndDeterminant) {
    Matrix m(3, 3);
    long v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = CycloNum(v[i][j]);
    EXPECT_EQ(determinant(m), CycloNum(0));
    auto k = kernel(m);
    ASSERT_EQ(k.size(), 1u);
    auto img = m.apply(k[0]);
    for (auto& x : img) EXPECT_TRUE(x.is_zero());
    m(1, 1) = CycloNum::omega();
    EXPECT_FALSE(determinant(m).is_zero());
}

TEST(Modular, RationalReconstruction) {
    const auto& f0 = modular::field(0);
    const auto& f1 = modular::field(1);
    CycloNum x(BigRational(-22, 7), BigRational(5, 3));
    modular::CycloCRT crt(1);
    for (const auto* f : {&f0, &f1}) {
        auto v1 = *f->reduce(x, f->w1), v2 = *f->reduce(x, f->w2);
        auto [a, b] = modular::split_embeddings(*f, v1, v2);
        crt.add(*f, {a}, {b});
    }
    auto r = crt.reconstruct();
    ASSERT_TRUE(r);
    EXPECT_EQ((*r)[0], x);
}

TEST(Modular, FieldsHaveCubeRoots) {
    for (std::size_t k = 0; k < 5; ++k) {
        const auto& f = modular::field(k);
        EXPECT_EQ(f.p % 3, 1u);
        EXPECT_EQ(modular::pow(f.w1, 3, f.p), 1u);
        EXPECT_NE(f.w1, 1u);
        EXPECT_EQ(modular::add(modular::add(f.w1, f.w2, f.p), 1, f.p), 0u);
    }
}
