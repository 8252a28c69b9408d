#pragma once

// The middle-thirds Cantor set on [-1,1] (attractor of x -> (x±2)/3) as a
// digital tree, unfolded corecursively over rational palms h with
// h[[-1,1]] ⊆ [-1,1]: each node stands for h[C].

#include "digitree/digit_space.hpp"
#include "digitree/interval.hpp"
#include "digitree/palm.hpp"
#include "digitree/tree.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace digitree {

/// A palm mapping [-1,1] into itself.
class PalmState {
public:
    explicit PalmState(Palm h) : h_(std::move(h)) {
        if (!palm_maps_unit_into_unit(h_)) throw std::invalid_argument(h_.to_string() + " does not map [-1,1] into itself");
    }
    const Palm& palm() const { return h_; }
    friend bool operator==(const PalmState&, const PalmState&) = default;

private:
    Palm h_;
};

struct CantorStep {
    BranchSet branches;
    std::array<std::optional<PalmState>, 3> children;

    const PalmState& child(Digit d) const {
        if (!children[digit_index(d)]) throw std::out_of_range("digit is not a branch of this step");
        return *children[digit_index(d)];
    }
};

/// Chooses E and child palms h_i with h[C] = ∪_{i∈E} av_i[h_i[C]].
inline CantorStep cantor_step(const PalmState& state) {
    const SignedDigitSpace sd;
    const Palm& h = state.palm();
    const Interval range = palm_image(h, unit_interval());
    CantorStep step;

    for (Digit i : kDigitOrder) {
        if (sd.image(i).contains(range)) {
            step.branches.insert(i);
            step.children[digit_index(i)] = PalmState(palm_compose(palm_invert(sd.digit(i)), h));
            return step;
        }
    }

    // Not contained in any digit image, so a < 0 < b. h∘f_- lands in av_i and
    // h∘f_+ in av_j.
    const Rational& a = range.lo();
    const Rational& b = range.hi();
    if (!(a.sign() < 0 && b.sign() > 0)) throw std::logic_error("cantor_step: non-easy range " + range.to_string());
    const Digit i = a <= Rational(-1, 2) ? Digit::minus : Digit::zero;
    const Digit j = b >= Rational(1, 2) ? Digit::plus : Digit::zero;
    if (i == j) throw std::logic_error("cantor_step: both halves chose digit 0 for " + h.to_string());

    step.branches = BranchSet{i, j};
    step.children[digit_index(i)] = PalmState(palm_compose(palm_invert(sd.digit(i)), palm_compose(h, cantor_left())));
    step.children[digit_index(j)] = PalmState(palm_compose(palm_invert(sd.digit(j)), palm_compose(h, cantor_right())));
    return step;
}

/// Tree for h[C], unfolded lazily from `state`.
inline DigitalTree cantor_subtree(PalmState state) {
    return DigitalTree([state = std::move(state)] {
        const CantorStep step = cantor_step(state);
        DigitalTree::Node node;
        node.branches = step.branches;
        for (Digit d : step.branches.digits()) node.children[digit_index(d)] = cantor_subtree(step.child(d));
        return node;
    });
}

inline DigitalTree cantor_tree() { return cantor_subtree(PalmState(Palm::identity())); }

/// F^n([-1,1]) with F(A) = f_-[A] ∪ f_+[A]: 2^n disjoint intervals of width 2·3^-n.
inline std::vector<Interval> ifs_iterate(int n) {
    if (n < 0) throw std::invalid_argument("negative iteration count");
    std::vector<Interval> level{unit_interval()};
    const Palm left = cantor_left();
    const Palm right = cantor_right();
    for (int k = 0; k < n; ++k) {
        std::vector<Interval> next;
        next.reserve(level.size() * 2);
        for (const auto& iv : level) next.push_back(palm_image(left, iv));
        for (const auto& iv : level) next.push_back(palm_image(right, iv));
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

}  // namespace digitree
