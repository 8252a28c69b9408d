#include "digitree/digit_space.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace digitree;

const SignedDigitSpace sd;

TEST(SignedDigitSpace, Constants) {
    EXPECT_EQ(sd.contraction(), Rational(1, 2));
    EXPECT_EQ(sd.bound(), Rational(2));
    EXPECT_EQ(sd.well_covering(), Rational(1, 4));
    EXPECT_EQ(sd.basepoint(), Rational(0));
    EXPECT_EQ(sd.image(Digit::minus), Interval(Rational(-1), Rational(0)));
    EXPECT_EQ(sd.image(Digit::zero), Interval(Rational(-1, 2), Rational(1, 2)));
    EXPECT_EQ(sd.image(Digit::plus), Interval(Rational(0), Rational(1)));
    for (Digit d : kDigitOrder) EXPECT_TRUE(palm_maps_unit_into_unit(sd.digit(d)));
}

TEST(SignedDigitSpace, DigitApplyBasic) {
    EXPECT_EQ(sd.digit_apply_basic(Digit::zero, Rational(0), 5), Rational(0));
    EXPECT_EQ(sd.digit_apply_basic(Digit::plus, Rational(-1), 0), Rational(0));
    EXPECT_EQ(sd.digit_apply_basic(Digit::minus, Rational(1, 3), 9), Rational(-1, 3));
    EXPECT_THROW(sd.digit_apply_basic(Digit::zero, Rational(3, 2), 0), std::invalid_argument);
}

TEST(SignedDigitSpace, BallInDigitRange) {
    EXPECT_TRUE(sd.ball_in_digit_range(Rational(0), Rational(1, 4), Digit::zero));
    EXPECT_TRUE(sd.ball_in_digit_range(Rational(1), Rational(1, 4), Digit::plus));
    EXPECT_FALSE(sd.ball_in_digit_range(Rational(0), Rational(1, 4), Digit::plus));
    EXPECT_THROW(sd.ball_in_digit_range(Rational(0), Rational(0), Digit::plus), std::invalid_argument);
    EXPECT_THROW(sd.ball_in_digit_range(Rational(0), Rational(-1, 4), Digit::plus), std::invalid_argument);
}

TEST(SignedDigitSpace, RightInverse) {
    EXPECT_EQ(sd.right_inverse_approx(Digit::plus, Rational(1, 2), 3), Rational(0));
    EXPECT_EQ(sd.right_inverse_approx(Digit::zero, Rational(0), 3), Rational(0));
    EXPECT_EQ(sd.right_inverse_approx(Digit::minus, Rational(-1), 3), Rational(-1));
    EXPECT_THROW(sd.right_inverse_approx(Digit::minus, Rational(1, 2), 3), std::invalid_argument);
}

TEST(SignedDigitSpace, RightInverseModulus) {
    EXPECT_EQ(sd.right_inverse_modulus(0), 2);
    EXPECT_EQ(sd.right_inverse_modulus(3), 5);
    EXPECT_EQ(sd.right_inverse_modulus(10), 12);
}

TEST(SignedDigitSpace, FindCoveringDigit) {
    EXPECT_EQ(sd.find_covering_digit(Rational(-1), Rational(1, 4)), Digit::minus);
    EXPECT_EQ(sd.find_covering_digit(Rational(0), Rational(1, 4)), Digit::zero);
    EXPECT_EQ(sd.find_covering_digit(Rational(7, 8), Rational(1, 4)), Digit::plus);
    // radius 1/2 around 0 fits no digit image
    EXPECT_EQ(sd.find_covering_digit(Rational(0), Rational(3, 4)), std::nullopt);
}

TEST(SignedDigitSpace, PrecisionFunctions) {
    for (int n = 0; n < 20; ++n) {
        EXPECT_EQ(prefix_length_for_precision(sd, n), n + 3);
        EXPECT_EQ(image_depth_for_precision(sd, n), n + 2);
    }
}

TEST(SignedDigitSpace, WordSerialisation) {
    const DigitWord w{Digit::plus, Digit::minus, Digit::zero};
    EXPECT_EQ(word_to_string(w), "+-0");
    EXPECT_EQ(word_from_string("+-0"), w);
    EXPECT_THROW(word_from_string("+x"), std::invalid_argument);
    EXPECT_THROW(digit_from_int(2), std::invalid_argument);
}

TEST(SignedDigitSpace, BranchSet) {
    BranchSet e{Digit::plus, Digit::minus};
    EXPECT_EQ(e.size(), 2u);
    EXPECT_EQ(e.digits(), (std::vector<Digit>{Digit::minus, Digit::plus}));
    EXPECT_EQ(e.to_string(), "{-1,1}");
    EXPECT_TRUE(BranchSet{}.empty());
}

class SignedDigitProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{2024};
};

TEST_F(SignedDigitProperties, CoveringAndWellCovering) {
    std::vector<Rational> points;
    for (auto s : {"-1", "-1/2", "-1/4", "0", "1/4", "1/2", "1"}) points.push_back(Rational::parse(s));
    for (int i = 0; i < 2000; ++i) points.push_back(oracle::random_unit_rational(rng));
    for (const auto& x : points) {
        bool covered = false;
        for (Digit d : kDigitOrder) covered = covered || sd.image(d).contains(x);
        EXPECT_TRUE(covered) << x.to_string();
        const auto d = sd.find_covering_digit(x, Rational(1, 4));
        ASSERT_TRUE(d.has_value()) << x.to_string();
        EXPECT_TRUE(sd.image(*d).contains(x));
    }
}

TEST_F(SignedDigitProperties, RightInverseLawAndContraction) {
    for (int i = 0; i < 1000; ++i) {
        const Digit d = oracle::random_digit(rng);
        const Rational x = oracle::random_unit_rational(rng);
        const Rational y = oracle::random_unit_rational(rng);
        const Rational u = sd.digit(d)(x);
        EXPECT_EQ(sd.digit(d)(sd.right_inverse_approx(d, u, 7)), u);
        EXPECT_EQ(abs(sd.digit(d)(x) - sd.digit(d)(y)), Rational(1, 2) * abs(x - y));
    }
}

}  // namespace
