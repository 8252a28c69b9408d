#include "digitree/stream.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <random>
#include <thread>

namespace {

using namespace digitree;

const DigitStream zeros = DigitStream::constant(Digit::zero);
const DigitStream ones = DigitStream::constant(Digit::plus);
const DigitStream minus_ones = DigitStream::constant(Digit::minus);
// 1, -1, -1, ... has value 0
const DigitStream one_then_minus = DigitStream::cons(Digit::plus, minus_ones);

TEST(StreamPrefix, Examples) {
    EXPECT_TRUE(stream_prefix(ones, 0).empty());
    EXPECT_EQ(stream_prefix(zeros, 3), (DigitWord{Digit::zero, Digit::zero, Digit::zero}));
    EXPECT_EQ(stream_prefix(one_then_minus, 2), (DigitWord{Digit::plus, Digit::minus}));
    EXPECT_THROW(stream_prefix(zeros, -1), std::invalid_argument);
}

TEST(StreamPrefix, ForcesEachCellOnce) {
    auto calls = std::make_shared<std::atomic<int>>(0);
    const DigitStream counted = DigitStream::unfold(0, [calls](int i) {
        ++*calls;
        return std::pair{Digit::plus, i + 1};
    });
    stream_prefix(counted, 5);
    EXPECT_EQ(calls->load(), 5);
    stream_prefix(counted, 5);
    EXPECT_EQ(calls->load(), 5);
    stream_prefix(counted, 7);
    EXPECT_EQ(calls->load(), 7);
}

TEST(StreamPrefix, ConcurrentReadersAgree) {
    std::mt19937_64 rng(5);
    const DigitStream s = cauchy_to_stream(CauchyReal::constant(oracle::random_unit_rational(rng)));
    std::vector<DigitWord> seen(8);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t) threads.emplace_back([&, t] { seen[t] = stream_prefix(s, 60); });
    for (auto& th : threads) th.join();
    for (const auto& w : seen) EXPECT_EQ(w, seen.front());
}

TEST(StreamPeriodic, RepeatsCycleAfterPrefix) {
    const DigitStream s = DigitStream::periodic({Digit::plus}, {Digit::zero, Digit::minus});
    EXPECT_EQ(word_to_string(stream_prefix(s, 6)), "+0-0-0");
    EXPECT_THROW(DigitStream::periodic({}, {}), std::invalid_argument);
}

TEST(StreamValueInterval, Examples) {
    EXPECT_EQ(stream_value_interval(one_then_minus, 0), unit_interval());
    EXPECT_EQ(stream_value_interval(ones, 2), Interval(Rational(1, 2), Rational(1)));
    for (int n = 0; n < 12; ++n) EXPECT_EQ(stream_value_interval(zeros, n), Interval(-pow2(-n), pow2(-n)));
}

TEST(StreamToCauchy, Examples) {
    const CauchyReal z = stream_to_cauchy(zeros);
    const CauchyReal o = stream_to_cauchy(ones);
    const CauchyReal t = stream_to_cauchy(one_then_minus);
    for (int n = 0; n < 15; ++n) {
        EXPECT_EQ(z.query(n), Rational(0));
        EXPECT_EQ(o.query(n), Rational(1) - pow2(-(n + 2)));
        EXPECT_EQ(t.query(n), pow2(-(n + 2)));
    }
}

TEST(CauchyToStream, ConstantOracles) {
    EXPECT_EQ(word_to_string(stream_prefix(cauchy_to_stream(CauchyReal::constant(Rational(0))), 12)), "000000000000");
    EXPECT_EQ(word_to_string(stream_prefix(cauchy_to_stream(CauchyReal::constant(Rational(1))), 12)), "++++++++++++");
    EXPECT_EQ(word_to_string(stream_prefix(cauchy_to_stream(CauchyReal::constant(Rational(-1))), 12)), "------------");
}

TEST(CauchyToStream, DishonestOracleIsReportedOrStaysInCarrier) {
    // Oracle that is not Cauchy: alternates between the endpoints. Digits keep
    // being produced; every residual stays inside [-1,1].
    const CauchyReal flip([](int n) { return n % 2 ? Rational(1) : Rational(-1); });
    const DigitWord w = stream_prefix(cauchy_to_stream(flip), 8);
    EXPECT_EQ(w.size(), 8u);
    EXPECT_THROW(CauchyReal::constant(Rational(2)), std::invalid_argument);
    EXPECT_THROW(CauchyReal::constant(Rational(0)).query(-1), std::invalid_argument);
}

TEST(WordFromBasic, PinsThePoint) {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 50; ++i) {
        const Rational u = oracle::random_unit_rational(rng);
        for (int n = 1; n < 12; ++n) {
            const DigitWord w = word_from_basic(u, n);
            EXPECT_EQ(static_cast<int>(w.size()), n + 2);
            const Interval iv = palm_image(word_palm(SignedDigitSpace{}, w), unit_interval());
            EXPECT_TRUE(iv.contains(u));
            EXPECT_LT(iv.width(), pow2(1 - n));
        }
    }
}

class StreamProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{31337};
};

TEST_F(StreamProperties, NestingAndRecursionLaw) {
    const SignedDigitSpace sd;
    for (int trial = 0; trial < 50; ++trial) {
        const DigitStream a = oracle::random_stream(rng);
        for (int n = 0; n < 20; ++n) {
            const Interval outer = stream_value_interval(a, n);
            const Interval inner = stream_value_interval(a, n + 1);
            EXPECT_TRUE(outer.contains(inner));
            EXPECT_EQ(outer.width(), pow2(1 - n));
        }
        for (Digit d : kDigitOrder)
            for (int n = 0; n < 15; ++n)
                EXPECT_EQ(stream_value_interval(DigitStream::cons(d, a), n + 1),
                          palm_image(sd.digit(d), stream_value_interval(a, n)));
    }
}

TEST_F(StreamProperties, StreamsSharingAPrefixHaveCoincidingIntervals) {
    for (int trial = 0; trial < 50; ++trial) {
        const DigitStream a = oracle::random_stream(rng);
        const auto n = std::uniform_int_distribution<int>(0, 12)(rng);
        DigitWord w = stream_prefix(a, n);
        // b agrees with a on the first n digits and then differs
        const Digit a_next = stream_prefix(a, n + 1).back();
        const Digit b_next = a_next == Digit::plus ? Digit::minus : Digit::plus;
        w.push_back(b_next);
        const DigitStream b = DigitStream::periodic(w, {Digit::zero});
        EXPECT_EQ(stream_value_interval(a, n), stream_value_interval(b, n));
        EXPECT_NE(stream_value_interval(a, n + 1), stream_value_interval(b, n + 1));
    }
}

TEST_F(StreamProperties, CauchyRoundTrip) {
    for (int trial = 0; trial < 30; ++trial) {
        const DigitStream a = oracle::random_stream(rng);
        const DigitStream b = cauchy_to_stream(stream_to_cauchy(a));
        for (int n = 0; n <= 20; ++n) {
            const Interval ia = stream_value_interval(a, n);
            const Interval ib = stream_value_interval(b, n);
            EXPECT_TRUE(ia.intersects(ib)) << "n=" << n;
            EXPECT_EQ(ib.width(), pow2(1 - n));
        }
    }
}

TEST_F(StreamProperties, EmittedDigitsKeepTheValueInside) {
    for (int trial = 0; trial < 30; ++trial) {
        const Rational x = oracle::random_unit_rational(rng);
        const DigitStream s = cauchy_to_stream(CauchyReal::constant(x));
        for (int n = 0; n <= 25; ++n) EXPECT_TRUE(stream_value_interval(s, n).contains(x)) << x.to_string();
    }
}

TEST_F(StreamProperties, ApproximateOraclesStillConverge) {
    // Oracle returning a rational within 2^-(n+1) of x, alternating sides.
    for (int trial = 0; trial < 20; ++trial) {
        const Rational x = oracle::random_unit_rational(rng) * Rational(1, 2);
        const CauchyReal c([x](int n) { return clamp_unit(x + (n % 2 ? pow2(-(n + 1)) : -pow2(-(n + 1)))); });
        const DigitStream s = cauchy_to_stream(c);
        for (int n = 0; n <= 20; ++n) EXPECT_TRUE(stream_value_interval(s, n).contains(x));
    }
}

}  // namespace
