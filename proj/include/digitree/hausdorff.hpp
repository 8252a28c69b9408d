#pragma once

// Exact Hausdorff distances between finite rational sets and between finite
// unions of closed intervals.

#include "digitree/interval.hpp"
#include "digitree/palm.hpp"
#include "digitree/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace digitree {

/// Nonempty finite set of rationals in [-1,1], kept sorted and duplicate-free.
class BasicSet {
public:
    explicit BasicSet(std::vector<Rational> elements) : elements_(std::move(elements)) {
        if (elements_.empty()) throw std::invalid_argument("basic set must be nonempty");
        for (const auto& x : elements_)
            if (!unit_interval().contains(x)) throw std::invalid_argument(x.to_string() + " is outside [-1, 1]");
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }
    BasicSet(std::initializer_list<Rational> elements) : BasicSet(std::vector<Rational>(elements)) {}

    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    /// Distance from x to the nearest element.
    Rational distance_to(const Rational& x) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
        Rational best = it != elements_.end() ? *it - x : x - elements_.back();
        if (it != elements_.begin()) best = min(best, x - *std::prev(it));
        return best;
    }

    bool contains(const Rational& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

    friend bool operator==(const BasicSet&, const BasicSet&) = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elements_.size(); ++i) s += (i ? "," : "") + elements_[i].to_string();
        return s + "}";
    }

private:
    std::vector<Rational> elements_;
};

/// sup over y in B of dist(A, y).
inline Rational directed_distance(const BasicSet& a, const BasicSet& b) {
    Rational worst(0);
    for (const auto& y : b) worst = max(worst, a.distance_to(y));
    return worst;
}

inline Rational hausdorff_finite(const BasicSet& a, const BasicSet& b) {
    return max(directed_distance(a, b), directed_distance(b, a));
}

inline BasicSet image(const Palm& h, const BasicSet& s) {
    std::vector<Rational> out;
    out.reserve(s.size());
    for (const auto& x : s) out.push_back(h(x));
    return BasicSet(std::move(out));
}

/// Disjoint, sorted intervals with the same union; touching intervals merge.
inline std::vector<Interval> normalize_union(std::vector<Interval> ivs) {
    std::sort(ivs.begin(), ivs.end());
    std::vector<Interval> out;
    for (auto& iv : ivs) {
        if (!out.empty() && iv.lo() <= out.back().hi()) {
            if (out.back().hi() < iv.hi()) out.back() = Interval(out.back().lo(), iv.hi());
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

namespace detail {

/// Distance from x to a normalized union.
inline Rational distance_to_union(const std::vector<Interval>& u, const Rational& x) {
    auto it = std::upper_bound(u.begin(), u.end(), x, [](const Rational& v, const Interval& iv) { return v < iv.lo(); });
    // it: first interval starting after x.
    Rational best = it != u.end() ? it->lo() - x : x - u.back().hi();
    if (it != u.begin()) {
        const Interval& prev = *std::prev(it);
        if (prev.contains(x)) return Rational(0);
        best = min(best, x - prev.hi());
    }
    return best;
}

/// sup over x in ∪A of dist(x, ∪B), both normalized.
inline Rational directed_union_distance(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    // On an interval of A the distance to ∪B is piecewise linear; its maxima
    // sit at A's endpoints or at midpoints of B's gaps.
    Rational worst(0);
    auto consider = [&](const Rational& x) { worst = max(worst, distance_to_union(b, x)); };
    for (const auto& iv : a) {
        consider(iv.lo());
        consider(iv.hi());
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const Rational mid = (b[i].hi() + b[i + 1].lo()) / Rational(2);
        if (distance_to_union(a, mid).is_zero()) consider(mid);
    }
    return worst;
}

}  // namespace detail

/// Exact Hausdorff distance between ∪A and ∪B.
inline Rational hausdorff_interval_unions(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("interval union must be nonempty");
    const auto na = normalize_union(a);
    const auto nb = normalize_union(b);
    return max(detail::directed_union_distance(na, nb), detail::directed_union_distance(nb, na));
}

inline std::vector<Interval> as_points(const BasicSet& s) {
    std::vector<Interval> out;
    out.reserve(s.size());
    for (const auto& x : s) out.push_back(Interval::point(x));
    return out;
}

}  // namespace digitree
