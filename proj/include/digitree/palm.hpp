#pragma once

#include "digitree/interval.hpp"
#include "digitree/rational.hpp"

#include <stdexcept>
#include <string>

namespace digitree {

/// Positive affine linear map x -> u*x + v with rational u > 0.
///
/// Palms form a group under composition; every digit of the signed digit
/// space, every digit inverse, and both maps of the Cantor IFS are palms.
class Palm {
public:
    Palm() : u_(1), v_(0) {}
    Palm(Rational slope, Rational offset) : u_(std::move(slope)), v_(std::move(offset)) {
        if (u_.sign() <= 0) throw std::invalid_argument("palm slope must be positive, got " + u_.to_string());
    }

    static Palm identity() { return {}; }

    const Rational& slope() const { return u_; }
    const Rational& offset() const { return v_; }

    Rational operator()(const Rational& x) const { return u_ * x + v_; }

    friend bool operator==(const Palm&, const Palm&) = default;
    friend auto operator<=>(const Palm& a, const Palm& b) {
        if (auto c = a.u_ <=> b.u_; c != 0) return c;
        return a.v_ <=> b.v_;
    }

    std::string to_string() const { return "Palm(" + u_.to_string() + ", " + v_.to_string() + ")"; }

private:
    Rational u_;
    Rational v_;
};

inline Rational palm_apply(const Palm& h, const Rational& x) { return h(x); }

/// k with k(x) = h(g(x)).
inline Palm palm_compose(const Palm& h, const Palm& g) {
    return {h.slope() * g.slope(), h.slope() * g.offset() + h.offset()};
}

inline Palm palm_invert(const Palm& h) {
    Rational inv = Rational(1) / h.slope();
    return {inv, -(h.offset() * inv)};
}

/// h[[-1,1]] is inside [-1,1] exactly when u + |v| <= 1.
inline bool palm_maps_unit_into_unit(const Palm& h) { return h.slope() + abs(h.offset()) <= Rational(1); }

/// Image of a closed interval under an increasing affine map.
inline Interval palm_image(const Palm& h, const Interval& iv) { return {h(iv.lo()), h(iv.hi())}; }

/// The two contractions of the Cantor IFS: (x-2)/3 and (x+2)/3.
inline Palm cantor_left() { return {Rational(1, 3), Rational(-2, 3)}; }
inline Palm cantor_right() { return {Rational(1, 3), Rational(2, 3)}; }

}  // namespace digitree
