#pragma once

// Digital trees: corecursive nodes carrying a nonempty branch set E ⊆ {-1,0,1}
// and one lazily computed child per branch. The value of a tree is the set of
// values of its infinite paths, a nonempty compact subset of [-1,1].

#include "digitree/digit_space.hpp"
#include "digitree/errors.hpp"
#include "digitree/interval.hpp"
#include "digitree/lazy.hpp"
#include "digitree/palm.hpp"
#include "digitree/stream.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digitree {

class DigitalTree {
public:
    struct Node;
    using Thunk = std::function<Node()>;

    DigitalTree() = default;
    explicit DigitalTree(Thunk thunk);

    /// Forces this node: computes its branch set, leaves children deferred.
    const Node& force() const;

    BranchSet branches() const;
    const DigitalTree& child(Digit d) const;

    bool empty() const;
    /// Address of the shared cell; equal handles denote the same subtree.
    const void* identity() const;

private:
    std::shared_ptr<const detail::Lazy<Node>> cell_;
};

struct DigitalTree::Node {
    BranchSet branches;
    std::array<DigitalTree, 3> children;
};

inline bool DigitalTree::empty() const { return !cell_; }
inline const void* DigitalTree::identity() const { return cell_.get(); }

inline DigitalTree::DigitalTree(Thunk thunk) : cell_(std::make_shared<const detail::Lazy<Node>>(std::move(thunk))) {}

inline const DigitalTree::Node& DigitalTree::force() const {
    if (!cell_) throw std::logic_error("forcing an empty tree handle");
    const Node& node = cell_->force();
    if (node.branches.empty()) throw ContractViolation("digital tree node with empty branch set");
    return node;
}

inline BranchSet DigitalTree::branches() const { return force().branches; }

inline const DigitalTree& DigitalTree::child(Digit d) const {
    const Node& node = force();
    if (!node.branches.contains(d)) throw std::out_of_range("digit " + std::to_string(to_int(d)) + " is not a branch");
    return node.children[digit_index(d)];
}

/// Finite prefix-closed word set of uniform height: all words of length <= depth
/// that extend to paths. Stored as its sorted length-`depth` words; the shorter
/// words are their prefixes.
class TreePrefix {
public:
    TreePrefix(int depth, std::vector<DigitWord> leaves) : depth_(depth), leaves_(std::move(leaves)) {
        if (depth_ < 0) throw std::invalid_argument("negative truncation depth");
        if (leaves_.empty()) throw std::invalid_argument("tree prefix needs at least one word");
        for (const auto& w : leaves_)
            if (static_cast<int>(w.size()) != depth_)
                throw std::invalid_argument("tree prefix word '" + word_to_string(w) + "' does not have length " +
                                            std::to_string(depth_));
        std::sort(leaves_.begin(), leaves_.end());
        leaves_.erase(std::unique(leaves_.begin(), leaves_.end()), leaves_.end());
    }

    int depth() const { return depth_; }
    const std::vector<DigitWord>& leaves() const { return leaves_; }

    /// Every word of length <= depth, sorted by length then lexicographically.
    std::vector<DigitWord> words() const {
        std::vector<DigitWord> out;
        for (int len = 0; len <= depth_; ++len) {
            auto level = restrict(len).leaves_;
            out.insert(out.end(), level.begin(), level.end());
        }
        return out;
    }

    bool contains(const DigitWord& w) const {
        if (static_cast<int>(w.size()) > depth_) return false;
        auto it = std::lower_bound(leaves_.begin(), leaves_.end(), w);
        return it != leaves_.end() && std::equal(w.begin(), w.end(), it->begin());
    }

    /// Restriction to height n <= depth.
    TreePrefix restrict(int n) const {
        if (n < 0 || n > depth_) throw std::invalid_argument("restriction depth out of range");
        std::vector<DigitWord> out;
        for (const auto& w : leaves_) out.emplace_back(w.begin(), w.begin() + n);
        return {n, std::move(out)};
    }

    /// Branches available after the word w (|w| < depth).
    BranchSet branches_after(const DigitWord& w) const {
        BranchSet e;
        auto it = std::lower_bound(leaves_.begin(), leaves_.end(), w);
        for (; it != leaves_.end() && std::equal(w.begin(), w.end(), it->begin()); ++it) e.insert((*it)[w.size()]);
        return e;
    }

    friend bool operator==(const TreePrefix&, const TreePrefix&) = default;

private:
    int depth_;
    std::vector<DigitWord> leaves_;
};

// ---------------------------------------------------------------------------
// Constructors

/// Single-path tree whose value is {[[alpha]]}.
inline DigitalTree tree_from_stream(DigitStream alpha) {
    return DigitalTree([alpha = std::move(alpha)] {
        DigitalTree::Node node;
        const Digit d = alpha.head();
        node.branches.insert(d);
        node.children[digit_index(d)] = tree_from_stream(alpha.tail());
        return node;
    });
}

/// Tree with all three branches at every node; its value is [-1,1].
/// One shared node, so enumerations can merge equal subtrees.
inline DigitalTree full_tree() {
    static const DigitalTree root = [] {
        auto self = std::make_shared<DigitalTree>();
        *self = DigitalTree([self] {
            DigitalTree::Node node;
            node.branches = BranchSet{Digit::minus, Digit::zero, Digit::plus};
            node.children = {*self, *self, *self};
            return node;
        });
        return *self;
    }();
    return root;
}

/// Tree whose words of length <= depth are those of `prefix`; every leaf
/// continues with the constant `continuation` path.
inline DigitalTree tree_from_prefix(const TreePrefix& prefix, Digit continuation = Digit::zero) {
    auto shared = std::make_shared<const TreePrefix>(prefix);
    struct Builder {
        std::shared_ptr<const TreePrefix> prefix;
        Digit continuation;
        DigitalTree operator()(DigitWord w) const {
            if (static_cast<int>(w.size()) == prefix->depth()) return tree_from_stream(DigitStream::constant(continuation));
            return DigitalTree([self = *this, w = std::move(w)] {
                DigitalTree::Node node;
                node.branches = self.prefix->branches_after(w);
                for (Digit d : node.branches.digits()) {
                    DigitWord next = w;
                    next.push_back(d);
                    node.children[digit_index(d)] = self(std::move(next));
                }
                return node;
            });
        }
    };
    return Builder{std::move(shared), continuation}(DigitWord{});
}

// ---------------------------------------------------------------------------
// Truncations and covers

/// T^{<=n}; forces at most |D|^n nodes.
inline TreePrefix tree_truncate(const DigitalTree& tree, int n) {
    if (n < 0) throw std::invalid_argument("negative truncation depth");
    std::vector<std::pair<DigitWord, DigitalTree>> level{{DigitWord{}, tree}};
    for (int k = 0; k < n; ++k) {
        std::vector<std::pair<DigitWord, DigitalTree>> next;
        for (const auto& [w, t] : level) {
            for (Digit d : t.branches().digits()) {
                DigitWord ext = w;
                ext.push_back(d);
                next.emplace_back(std::move(ext), t.child(d));
            }
        }
        level = std::move(next);
    }
    std::vector<DigitWord> leaves;
    leaves.reserve(level.size());
    for (auto& [w, t] : level) leaves.push_back(std::move(w));
    return {n, std::move(leaves)};
}

/// A subtree reached by some word, with the composite palm of that word.
struct FrontierEntry {
    DigitalTree subtree;
    Palm palm;
};

/// All (subtree, word palm) pairs at depth n, merging pairs that share both
/// the subtree cell and the palm. Throws ResourceLimit if a level would hold
/// more than max_entries pairs.
template <DigitSpace Space = SignedDigitSpace>
std::vector<FrontierEntry> tree_frontier(const DigitalTree& tree, int n, const Space& space = {},
                                         std::size_t max_entries = std::numeric_limits<std::size_t>::max()) {
    if (n < 0) throw std::invalid_argument("negative depth");
    std::array<Palm, 3> digit_palms{space.digit(Digit::minus), space.digit(Digit::zero), space.digit(Digit::plus)};
    std::vector<FrontierEntry> level{{tree, Palm::identity()}};
    for (int k = 0; k < n; ++k) {
        std::vector<FrontierEntry> next;
        for (const auto& [t, h] : level) {
            for (Digit d : t.branches().digits()) {
                if (next.size() >= max_entries)
                    throw ResourceLimit("tree frontier at depth " + std::to_string(k + 1) + " exceeds " +
                                        std::to_string(max_entries) + " entries");
                next.push_back({t.child(d), palm_compose(h, digit_palms[digit_index(d)])});
            }
        }
        std::sort(next.begin(), next.end(), [](const FrontierEntry& a, const FrontierEntry& b) {
            if (a.subtree.identity() != b.subtree.identity())
                return std::less<const void*>{}(a.subtree.identity(), b.subtree.identity());
            return a.palm < b.palm;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const FrontierEntry& a, const FrontierEntry& b) {
                                   return a.subtree.identity() == b.subtree.identity() && a.palm == b.palm;
                               }),
                   next.end());
        level = std::move(next);
    }
    return level;
}

/// {w[X] : w a depth-n word of the tree}, sorted, without duplicates.
template <DigitSpace Space = SignedDigitSpace>
std::vector<Interval> tree_value_cover(const DigitalTree& tree, int n, const Space& space = {}) {
    std::vector<Interval> out;
    for (const auto& entry : tree_frontier(tree, n, space)) out.push_back(palm_image(entry.palm, unit_interval()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Metric and union

/// Either the exact tree distance 2^-n0 (resolved) or the bound 2^-maxdepth.
struct TreeDistance {
    bool resolved;
    int depth;       // n0 when resolved, maxdepth otherwise
    Rational value;  // 2^-depth
};

/// Tree distance 2^-min{n : S^{<=n} != T^{<=n}}, searched up to maxdepth.
/// Walks pairs of subtrees reached by the same word; a pair made of one shared
/// cell can never differ and is dropped, and equal pairs are merged.
inline TreeDistance tree_metric_resolve(const DigitalTree& s, const DigitalTree& t, int maxdepth) {
    if (maxdepth < 0) throw std::invalid_argument("negative maxdepth");
    using Pair = std::pair<DigitalTree, DigitalTree>;
    auto key = [](const Pair& p) { return std::pair{p.first.identity(), p.second.identity()}; };
    std::vector<Pair> level;
    if (s.identity() != t.identity()) level.emplace_back(s, t);
    for (int n = 1; n <= maxdepth && !level.empty(); ++n) {
        std::vector<Pair> next;
        for (const auto& [a, b] : level) {
            const BranchSet ea = a.branches();
            if (!(ea == b.branches())) return {true, n, pow2(-n)};
            for (Digit d : ea.digits())
                if (a.child(d).identity() != b.child(d).identity()) next.emplace_back(a.child(d), b.child(d));
        }
        std::sort(next.begin(), next.end(), [&](const Pair& x, const Pair& y) { return key(x) < key(y); });
        next.erase(std::unique(next.begin(), next.end(), [&](const Pair& x, const Pair& y) { return key(x) == key(y); }),
                   next.end());
        level = std::move(next);
    }
    return {false, maxdepth, pow2(-maxdepth)};
}

/// Tree whose value is the union of the two values.
inline DigitalTree tree_union(DigitalTree s, DigitalTree t) {
    return DigitalTree([s = std::move(s), t = std::move(t)] {
        DigitalTree::Node node;
        const BranchSet es = s.branches();
        const BranchSet et = t.branches();
        node.branches = es | et;
        for (Digit d : node.branches.digits()) {
            if (es.contains(d) && et.contains(d))
                node.children[digit_index(d)] = tree_union(s.child(d), t.child(d));
            else
                node.children[digit_index(d)] = es.contains(d) ? s.child(d) : t.child(d);
        }
        return node;
    });
}

}  // namespace digitree
