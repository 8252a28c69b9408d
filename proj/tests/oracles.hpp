#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// library routine it is used to check.

#include "digitree/digitree.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace digitree::oracle {

inline Rational random_unit_rational(std::mt19937_64& rng, long max_den = 1000) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-den, den);
    return Rational(num_dist(rng), den);
}

inline Digit random_digit(std::mt19937_64& rng) {
    return kDigitOrder[std::uniform_int_distribution<int>(0, 2)(rng)];
}

inline DigitWord random_word(std::mt19937_64& rng, std::size_t len) {
    DigitWord w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(random_digit(rng));
    return w;
}

/// Eventually periodic stream: random prefix of length <= 30, random cycle of length 1..4.
inline DigitStream random_stream(std::mt19937_64& rng) {
    const auto prefix_len = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
    const auto cycle_len = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    return DigitStream::periodic(random_word(rng, prefix_len), random_word(rng, cycle_len));
}

inline BranchSet random_branch_set(std::mt19937_64& rng) {
    const int bits = std::uniform_int_distribution<int>(1, 7)(rng);
    BranchSet e;
    for (Digit d : kDigitOrder)
        if (bits & (1 << digit_index(d))) e.insert(d);
    return e;
}

/// Leaves of a random prefix-closed tree: i.i.d. nonempty branch sets per node.
inline std::vector<DigitWord> random_leaves(std::mt19937_64& rng, int depth, DigitWord stem = {}) {
    std::vector<DigitWord> level{std::move(stem)};
    while (static_cast<int>(level.front().size()) < depth) {
        std::vector<DigitWord> next;
        for (const auto& w : level) {
            for (Digit d : random_branch_set(rng).digits()) {
                DigitWord ext = w;
                ext.push_back(d);
                next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }
    return level;
}

inline TreePrefix random_prefix(std::mt19937_64& rng, int depth) { return {depth, random_leaves(rng, depth)}; }

/// Copy of `base` whose subtrees below one randomly chosen word of length k
/// (0 <= k < depth) are regenerated; the two agree at least to height k.
inline TreePrefix perturb_prefix(std::mt19937_64& rng, const TreePrefix& base) {
    const int k = std::uniform_int_distribution<int>(0, base.depth() - 1)(rng);
    const auto& leaves = base.leaves();
    const DigitWord pick = leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
    const DigitWord stem(pick.begin(), pick.begin() + k);
    std::vector<DigitWord> out;
    for (const auto& w : leaves)
        if (!std::equal(stem.begin(), stem.end(), w.begin())) out.push_back(w);
    for (auto& w : random_leaves(rng, base.depth(), stem)) out.push_back(std::move(w));
    return {base.depth(), std::move(out)};
}

/// Word metric 2^-(k+1) where k is the first index at which the words differ.
inline Rational word_distance(const DigitWord& a, const DigitWord& b) {
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
        if (a[k] != b[k]) return pow2(-static_cast<long>(k) - 1);
    return Rational(0);
}

/// Hausdorff distance between two finite word sets under word_distance.
inline Rational brute_word_hausdorff(const std::vector<DigitWord>& a, const std::vector<DigitWord>& b) {
    auto directed = [](const std::vector<DigitWord>& from, const std::vector<DigitWord>& to) {
        Rational worst(0);
        for (const auto& y : to) {
            Rational best = Rational(2);
            for (const auto& x : from) best = min(best, word_distance(x, y));
            worst = max(worst, best);
        }
        return worst;
    };
    return max(directed(a, b), directed(b, a));
}

/// Double-loop Hausdorff distance on finite rational sets.
inline Rational brute_hausdorff(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    auto directed = [](const std::vector<Rational>& from, const std::vector<Rational>& to) {
        Rational worst(0);
        for (const auto& y : to) {
            Rational best = abs(from.front() - y);
            for (const auto& x : from) best = min(best, abs(x - y));
            worst = max(worst, best);
        }
        return worst;
    };
    return max(directed(a, b), directed(b, a));
}

inline std::vector<Rational> random_point_vector(std::mt19937_64& rng, std::size_t max_size = 12, long max_den = 64) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_unit_rational(rng, max_den));
    return out;
}

/// Distance from x to a union of intervals by scanning every interval.
inline Rational brute_distance_to_union(const std::vector<Interval>& u, const Rational& x) {
    Rational best(4);
    for (const auto& iv : u) {
        if (iv.contains(x)) return Rational(0);
        best = min(best, x < iv.lo() ? iv.lo() - x : x - iv.hi());
    }
    return best;
}

/// Hausdorff distance between interval unions with endpoints on the grid
/// (1/grid)Z, by scanning every point of the half-grid inside each union.
/// The distance functions are piecewise linear with breakpoints on that
/// half-grid, so the scan is exact.
inline Rational brute_interval_hausdorff(const std::vector<Interval>& a, const std::vector<Interval>& b, long grid) {
    auto directed = [grid](const std::vector<Interval>& from, const std::vector<Interval>& to) {
        Rational worst(0);
        for (long k = -2 * grid; k <= 2 * grid; ++k) {
            const Rational x(k, 2 * grid);
            if (brute_distance_to_union(from, x).is_zero()) worst = max(worst, brute_distance_to_union(to, x));
        }
        return worst;
    };
    return max(directed(a, b), directed(b, a));
}

/// Points of ∪ covered at the given resolution, as a BasicSet-free check helper.
inline bool union_contains(const std::vector<Interval>& u, const Rational& x) {
    return std::any_of(u.begin(), u.end(), [&](const Interval& iv) { return iv.contains(x); });
}

}  // namespace digitree::oracle
