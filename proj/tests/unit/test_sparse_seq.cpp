#include <gtest/gtest.h>

#include <cmath>

#include "bicomb/errors.hpp"
#include "bicomb/rational.hpp"
#include "bicomb/space.hpp"
#include "bicomb/sparse_seq.hpp"

using namespace bicomb;

namespace {

SparseSeq random_seq(Rng& rng) { return std::get<SparseSeq>(Space::star_seq(-6, 6).random_point(rng)); }

}  // namespace

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, ExactDouble) {
  EXPECT_EQ(exact_rational(0.5), Rational(1, 2));
  EXPECT_EQ(exact_rational(-3.0), Rational(-3));
  EXPECT_EQ(to_double(exact_rational(0.1)), 0.1);
  EXPECT_EQ(to_string(ratio(6, 4)), "3/2");
}

TEST(SparseSeq, CanonicalForm) {
  auto x = SparseSeq::from_entries({{3, Rational(1)}, {-1, Rational(2)}, {0, Rational(0)}});
  ASSERT_EQ(x.support_size(), 2u);
  EXPECT_EQ(x.entries()[0].first, -1);
  EXPECT_EQ(x.entries()[1].first, 3);
  EXPECT_EQ(x.at(0), 0);
  EXPECT_THROW(SparseSeq::from_entries({{1, Rational(1)}, {1, Rational(2)}}), InvalidArgument);
  EXPECT_TRUE((SparseSeq::unit(2) - SparseSeq::unit(2)).is_zero());
}

TEST(StarNorm, WorkedValues) {
  EXPECT_EQ(SparseSeq::unit(0).star_norm_sq(), 2);
  EXPECT_DOUBLE_EQ(star_norm(SparseSeq::unit(0)), std::sqrt(2.0));
  EXPECT_EQ(SparseSeq().star_norm_sq(), 0);
  auto half = Rational(1, 2) * (SparseSeq::unit(0) + SparseSeq::unit(1));
  EXPECT_EQ(half.star_norm_sq(), Rational(3, 2));
  EXPECT_EQ((SparseSeq::unit(0) - SparseSeq::unit(1)).star_norm_sq(), 6);
  EXPECT_NEAR(star_dist(SparseSeq::unit(0), SparseSeq::unit(1)), 2.449489742783178, 1e-15);
}

TEST(StarNorm, HomogeneityIsExact) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    SparseSeq x = random_seq(rng);
    Rational c = ratio(static_cast<long>(rng() % 17) - 8, static_cast<long>(rng() % 7) + 1);
    EXPECT_EQ((c * x).star_norm_sq(), c * c * x.star_norm_sq());
  }
}

// (1/sqrt 2) |x|_* <= |x|_1 <= |x|_*, squared to stay in the rationals.
TEST(StarNorm, EquivalentToL1Exactly) {
  Rng rng(12);
  for (int i = 0; i < 5000; ++i) {
    SparseSeq x = random_seq(rng);
    Rational l1 = x.l1_norm();
    Rational s = x.star_norm_sq();
    EXPECT_LE(s, 2 * l1 * l1);
    EXPECT_LE(l1 * l1, s);
  }
}

TEST(StarNorm, TriangleInequality) {
  Rng rng(13);
  for (int i = 0; i < 10000; ++i) {
    SparseSeq x = random_seq(rng), y = random_seq(rng);
    EXPECT_LE(star_norm(x + y), star_norm(x) + star_norm(y) + 1e-12);
  }
}

TEST(Shift, PreservesNormExactly) {
  Rng rng(14);
  for (int i = 0; i < 2000; ++i) {
    SparseSeq x = random_seq(rng);
    std::int64_t m = static_cast<std::int64_t>(rng() % 21) - 10;
    EXPECT_EQ(x.shifted(m).star_norm_sq(), x.star_norm_sq());
    EXPECT_EQ(x.shifted(m).shifted(-m), x);
  }
  EXPECT_EQ(SparseSeq::unit(0).shifted(1), SparseSeq::unit(1));
}

// x_k = x_{k-1} on a finite support forces x = 0: the largest index of a
// nonzero sequence moves.
TEST(Shift, OnlyZeroIsFixed) {
  Rng rng(15);
  EXPECT_EQ(SparseSeq().shifted(1), SparseSeq());
  for (int i = 0; i < 2000; ++i) {
    SparseSeq x = random_seq(rng);
    if (x.is_zero()) continue;
    EXPECT_NE(x.shifted(1), x);
    EXPECT_NE(x.shifted(1).entries().back().first, x.entries().back().first);
  }
}

TEST(SparseSeq, Affine) {
  Rng rng(16);
  for (int i = 0; i < 500; ++i) {
    SparseSeq x = random_seq(rng), y = random_seq(rng);
    EXPECT_EQ(SparseSeq::affine(x, y, 0), x);
    EXPECT_EQ(SparseSeq::affine(x, y, 1), y);
    EXPECT_EQ(SparseSeq::affine(x, y, Rational(1, 2)), Rational(1, 2) * (x + y));
  }
}
