#pragma once

// Converters between digital trees and the Hausdorff-Cauchy representation of
// compact sets (fast Cauchy sequences of basic sets).

#include "digitree/digit_space.hpp"
#include "digitree/errors.hpp"
#include "digitree/hausdorff.hpp"
#include "digitree/stream.hpp"
#include "digitree/tree.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace digitree {

/// Compact K ⊆ [-1,1] given by basic sets query(n) with μ_H(K, query(n)) < 2^-n.
/// Answers are memoized per index; the underlying function must be
/// deterministic and is called at most once per index.
class CauchyCompact {
public:
    using Query = std::function<BasicSet(int)>;

    explicit CauchyCompact(Query query) : state_(std::make_shared<State>(std::move(query))) {}

    const BasicSet& query(int n) const {
        if (n < 0) throw std::invalid_argument("negative precision");
        std::lock_guard lock(state_->mutex);
        auto it = state_->memo.find(n);
        if (it == state_->memo.end()) it = state_->memo.emplace(n, state_->query(n)).first;
        return it->second;
    }

    static CauchyCompact constant(BasicSet s) {
        return CauchyCompact([s = std::move(s)](int) { return s; });
    }

    /// query(n) = levels[min(n, size-1)]; valid only when the last level is exact.
    static CauchyCompact from_levels(std::vector<BasicSet> levels) {
        if (levels.empty()) throw std::invalid_argument("need at least one level");
        return CauchyCompact([levels = std::move(levels)](int n) {
            return levels[std::min<std::size_t>(static_cast<std::size_t>(n), levels.size() - 1)];
        });
    }

private:
    struct State {
        explicit State(Query q) : query(std::move(q)) {}
        Query query;
        std::mutex mutex;
        std::map<int, BasicSet> memo;
    };
    std::shared_ptr<State> state_;
};

inline constexpr std::size_t kDefaultMaxFrontier = std::size_t{1} << 22;

/// query(n) evaluates every word of depth jbar(n+2) at the basepoint.
template <DigitSpace Space = SignedDigitSpace>
CauchyCompact tree_to_cauchy_compact(const DigitalTree& tree, const Space& space = {},
                                     std::size_t max_frontier = kDefaultMaxFrontier) {
    return CauchyCompact([tree, space, max_frontier](int n) {
        const int depth = image_depth_for_precision(space, n + 2);
        std::vector<Rational> points;
        for (const auto& entry : tree_frontier(tree, depth, space, max_frontier))
            points.push_back(entry.palm(space.basepoint()));
        return BasicSet(std::move(points));
    });
}

/// Least m > 2 with 2^-m < eps/8.
inline int split_offset(const Rational& eps) {
    int m = 3;
    while (!(pow2(-m) < eps / Rational(8))) ++m;
    return m;
}

/// Decomposition of a compact set along the digit images:
/// K = ∪_{d∈E} K_d with K_d ⊆ d[X], each K_d approximated by residual(d).
struct SplitResult {
    BranchSet branch_set;
    std::array<std::optional<CauchyCompact>, 3> per_digit;
    int offset;  // m: residual(d).query(n) is drawn from K.query(m + n)

    const CauchyCompact& residual(Digit d) const {
        if (!per_digit[digit_index(d)]) throw std::out_of_range("digit " + std::to_string(to_int(d)) + " not in split");
        return *per_digit[digit_index(d)];
    }
};

namespace detail {

/// C^d_0 = points of C_m whose eps/2-ball fits d[X];
/// C^d_{n+1} = points of C_{m+n+1} within 2^{1-(m+n)} of C^d_n.
class ResidualChain {
public:
    ResidualChain(CauchyCompact source, int offset, BasicSet first)
        : source_(std::move(source)), offset_(offset), levels_{std::move(first)} {}

    BasicSet level(int n) {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(levels_.size()) <= n) {
            const int j = static_cast<int>(levels_.size()) - 1;
            const BasicSet& prev = levels_.back();
            const Rational radius = pow2(1 - (offset_ + j));
            std::vector<Rational> kept;
            for (const auto& y : source_.query(offset_ + j + 1))
                if (prev.distance_to(y) <= radius) kept.push_back(y);
            if (kept.empty())
                throw ContractViolation("split residual level " + std::to_string(j + 1) +
                                        " is empty; the oracle is not a fast Cauchy sequence");
            levels_.emplace_back(std::move(kept));
        }
        return levels_[static_cast<std::size_t>(n)];
    }

private:
    CauchyCompact source_;
    int offset_;
    std::mutex mutex_;
    std::vector<BasicSet> levels_;
};

}  // namespace detail

template <DigitSpace Space = SignedDigitSpace>
SplitResult split(const CauchyCompact& k, const Space& space = {}) {
    const Rational eps = space.well_covering();
    const Rational half = eps / Rational(2);
    const int m = split_offset(eps);
    SplitResult result{{}, {}, m};
    const BasicSet& cm = k.query(m);
    for (Digit d : kDigitOrder) {
        std::vector<Rational> first;
        for (const auto& y : cm)
            if (space.ball_in_digit_range(y, half, d)) first.push_back(y);
        if (first.empty()) continue;
        result.branch_set.insert(d);
        auto chain = std::make_shared<detail::ResidualChain>(k, m, BasicSet(std::move(first)));
        result.per_digit[digit_index(d)] = CauchyCompact([chain](int n) { return chain->level(n); });
    }
    if (result.branch_set.empty())
        throw ContractViolation("split found no digit: no point of C_" + std::to_string(m) + " has a covered ball");
    return result;
}

/// Digital tree whose value is the compact set approximated by k.
///
/// Each node splits its oracle; the child for digit d sees the residual pulled
/// back through d's right inverse, read at precision k(n)+1 so the pulled-back
/// sets are 2^-n-close to the child's compact.
template <DigitSpace Space = SignedDigitSpace>
DigitalTree cauchy_compact_to_tree(CauchyCompact k, const Space& space = {}) {
    return DigitalTree([k = std::move(k), space] {
        const SplitResult parts = split(k, space);
        DigitalTree::Node node;
        node.branches = parts.branch_set;
        for (Digit d : parts.branch_set.digits()) {
            CauchyCompact residual = parts.residual(d);
            const Interval target = palm_image(space.digit(d), unit_interval());
            CauchyCompact pulled([residual, space, d, target](int n) {
                std::vector<Rational> out;
                for (const auto& u : residual.query(space.right_inverse_modulus(n) + 1)) {
                    if (!target.contains(u))
                        throw ContractViolation("residual point " + u.to_string() + " left the digit image " +
                                                target.to_string());
                    out.push_back(space.right_inverse_approx(d, u, n + 1));
                }
                return BasicSet(std::move(out));
            });
            node.children[digit_index(d)] = cauchy_compact_to_tree(std::move(pulled), space);
        }
        return node;
    });
}

}  // namespace digitree
