#pragma once

// Digit spaces: a carrier interval together with finitely many contracting
// palms ("digits"), plus the effectivity data the converters consume.
//
// Only the signed digit space ([-1,1] with x -> (x+i)/2, i in {-1,0,1})
// ships. Streams, trees and converters are templates over DigitSpace so a
// user-supplied space with the same digit alphabet can be dropped in. Such a
// space must provide approximable choice:
//   (1) for every digit d and basic u in d[X], right_inverse_approx(d, u, n)
//       is a basic element within 2^-n of some preimage of u;
//   (2) the preimages chosen for nearby u are nearby, with the modulus
//       reported by right_inverse_modulus;
//   (3) ball_in_digit_range decides inclusion of open balls in d[X].

#include "digitree/interval.hpp"
#include "digitree/palm.hpp"
#include "digitree/rational.hpp"

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace digitree {

enum class Digit : std::int8_t { minus = -1, zero = 0, plus = 1 };

/// Fixed preference order used wherever a digit has to be picked.
inline constexpr std::array<Digit, 3> kDigitOrder{Digit::minus, Digit::zero, Digit::plus};

constexpr int to_int(Digit d) { return static_cast<int>(d); }
constexpr std::size_t digit_index(Digit d) { return static_cast<std::size_t>(to_int(d) + 1); }

inline Digit digit_from_int(long value) {
    if (value < -1 || value > 1) throw std::invalid_argument("digit out of range: " + std::to_string(value));
    return static_cast<Digit>(value);
}

constexpr char digit_char(Digit d) { return d == Digit::minus ? '-' : (d == Digit::zero ? '0' : '+'); }

inline Digit digit_from_char(char c) {
    switch (c) {
        case '-': return Digit::minus;
        case '0': return Digit::zero;
        case '+': return Digit::plus;
        default: throw std::invalid_argument(std::string("not a signed digit: '") + c + "'");
    }
}

using DigitWord = std::vector<Digit>;

/// Serialises [1,-1,0] as "+-0".
inline std::string word_to_string(const DigitWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Digit d : w) s.push_back(digit_char(d));
    return s;
}

inline DigitWord word_from_string(std::string_view s) {
    DigitWord w;
    w.reserve(s.size());
    for (char c : s) w.push_back(digit_from_char(c));
    return w;
}

/// A subset of {-1, 0, +1}; iteration follows kDigitOrder.
class BranchSet {
public:
    constexpr BranchSet() = default;
    constexpr BranchSet(std::initializer_list<Digit> ds) {
        for (Digit d : ds) insert(d);
    }

    constexpr void insert(Digit d) { bits_ |= static_cast<std::uint8_t>(1u << digit_index(d)); }
    constexpr bool contains(Digit d) const { return (bits_ >> digit_index(d)) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return ((bits_ >> 0) & 1u) + ((bits_ >> 1) & 1u) + ((bits_ >> 2) & 1u); }
    constexpr std::uint8_t bits() const { return bits_; }

    friend constexpr BranchSet operator|(BranchSet a, BranchSet b) {
        BranchSet r;
        r.bits_ = a.bits_ | b.bits_;
        return r;
    }
    friend constexpr bool operator==(BranchSet, BranchSet) = default;

    std::vector<Digit> digits() const {
        std::vector<Digit> out;
        for (Digit d : kDigitOrder)
            if (contains(d)) out.push_back(d);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        for (Digit d : digits()) {
            if (s.size() > 1) s += ",";
            s += std::to_string(to_int(d));
        }
        return s + "}";
    }

private:
    std::uint8_t bits_ = 0;
};

template <class S>
concept DigitSpace = requires(const S& space, Digit d, const Rational& u, int n) {
    { space.digit(d) } -> std::convertible_to<Palm>;
    { space.contraction() } -> std::convertible_to<Rational>;
    { space.bound() } -> std::convertible_to<Rational>;
    { space.well_covering() } -> std::convertible_to<Rational>;
    { space.basepoint() } -> std::convertible_to<Rational>;
    { space.digit_apply_basic(d, u, n) } -> std::convertible_to<Rational>;
    { space.ball_in_digit_range(u, u, d) } -> std::convertible_to<bool>;
    { space.right_inverse_approx(d, u, n) } -> std::convertible_to<Rational>;
    { space.right_inverse_modulus(n) } -> std::convertible_to<int>;
};

/// The signed digit space ([-1,1], {av_-1, av_0, av_1}, Q = rationals in [-1,1]).
struct SignedDigitSpace {
    /// av_d(x) = (x + d) / 2.
    Palm digit(Digit d) const { return {Rational(1, 2), Rational(to_int(d), 2)}; }
    Interval image(Digit d) const { return palm_image(digit(d), unit_interval()); }

    Rational contraction() const { return Rational(1, 2); }
    Rational bound() const { return Rational(2); }
    Rational well_covering() const { return Rational(1, 4); }
    Rational basepoint() const { return Rational(0); }

    /// Digits act exactly on rationals, so the 2^-n tolerance is never used.
    Rational digit_apply_basic(Digit d, const Rational& u, int /*precision*/) const {
        require_in_carrier(u);
        return digit(d)(u);
    }

    /// Decides (u-theta, u+theta) ∩ [-1,1] ⊆ av_d[[-1,1]].
    bool ball_in_digit_range(const Rational& u, const Rational& theta, Digit d) const {
        require_in_carrier(u);
        if (theta.sign() <= 0) throw std::invalid_argument("ball radius must be positive, got " + theta.to_string());
        const Interval target = image(d);
        return max(u - theta, Rational(-1)) >= target.lo() && min(u + theta, Rational(1)) <= target.hi();
    }

    /// Exact right inverse x -> 2x - d on av_d[[-1,1]].
    Rational right_inverse_approx(Digit d, const Rational& u, int /*precision*/) const {
        if (!image(d).contains(u))
            throw std::invalid_argument(u.to_string() + " is outside the image of digit " + std::to_string(to_int(d)));
        return clamp_unit(Rational(2) * u - Rational(to_int(d)));
    }

    /// Inverses double distances: 2^-(n+2)-close inputs map 2^-(n+1)-close.
    int right_inverse_modulus(int n) const { return n + 2; }

    /// First digit in kDigitOrder whose image contains the theta-ball around u.
    std::optional<Digit> find_covering_digit(const Rational& u, const Rational& theta) const {
        for (Digit d : kDigitOrder)
            if (ball_in_digit_range(u, theta, d)) return d;
        return std::nullopt;
    }

private:
    static void require_in_carrier(const Rational& u) {
        if (!unit_interval().contains(u)) throw std::invalid_argument(u.to_string() + " is outside [-1, 1]");
    }
};

static_assert(DigitSpace<SignedDigitSpace>);

/// Generic covering-digit search for any DigitSpace, in kDigitOrder.
template <DigitSpace Space>
std::optional<Digit> find_covering_digit(const Space& space, const Rational& u, const Rational& theta) {
    for (Digit d : kDigitOrder)
        if (space.ball_in_digit_range(u, theta, d)) return d;
    return std::nullopt;
}

/// min{ i >= 0 : q^(i-1) * M < 2^-n }; words this long pin a point to 2^-n.
template <DigitSpace Space>
int prefix_length_for_precision(const Space& space, int n) {
    const Rational q = space.contraction();
    const Rational target = pow2(-n);
    Rational size = space.bound() / q;  // q^(i-1) * M at i = 0
    int i = 0;
    while (!(size < target)) {
        size *= q;
        ++i;
    }
    return i;
}

/// min{ i >= 0 : q^i * M < 2^-n }; every word image of this length is narrower than 2^-n.
template <DigitSpace Space>
int image_depth_for_precision(const Space& space, int n) {
    const Rational q = space.contraction();
    const Rational target = pow2(-n);
    Rational size = space.bound();
    int i = 0;
    while (!(size < target)) {
        size *= q;
        ++i;
    }
    return i;
}

/// Composite palm d_0 ∘ d_1 ∘ ... ∘ d_{k-1} of a word.
template <DigitSpace Space>
Palm word_palm(const Space& space, const DigitWord& word) {
    Palm h;
    for (Digit d : word) h = palm_compose(h, space.digit(d));
    return h;
}

}  // namespace digitree
