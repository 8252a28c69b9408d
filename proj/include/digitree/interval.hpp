#pragma once

#include "digitree/rational.hpp"

#include <stdexcept>
#include <string>

namespace digitree {

/// Closed rational interval [lo, hi]; lo == hi is allowed.
class Interval {
public:
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi: [" + lo_.to_string() + ", " + hi_.to_string() + "]");
    }
    static Interval point(const Rational& x) { return {x, x}; }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval& a, const Interval& b) {
        if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
        return a.hi_ <=> b.hi_;
    }

    std::string to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

private:
    Rational lo_;
    Rational hi_;
};

/// The carrier [-1, 1].
inline Interval unit_interval() { return {Rational(-1), Rational(1)}; }

inline Rational clamp_unit(const Rational& x) {
    if (x < Rational(-1)) return Rational(-1);
    if (Rational(1) < x) return Rational(1);
    return x;
}

}  // namespace digitree
