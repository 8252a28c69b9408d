#pragma once

// Lazy signed-digit streams and the fast-Cauchy representation of reals.

#include "digitree/digit_space.hpp"
#include "digitree/errors.hpp"
#include "digitree/interval.hpp"
#include "digitree/lazy.hpp"
#include "digitree/palm.hpp"
#include "digitree/rational.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>

namespace digitree {

/// Infinite lazy stream of digits. Cells are forced at most once and shared
/// between copies, so forcing the same prefix twice is linear overall and
/// concurrent readers see identical digits.
class DigitStream {
public:
    struct Cons;
    using Thunk = std::function<Cons()>;

    explicit DigitStream(Thunk thunk);

    Digit head() const;
    DigitStream tail() const;

    static DigitStream cons(Digit d, DigitStream tail);
    static DigitStream constant(Digit d);
    /// prefix followed by cycle repeated forever; cycle must be nonempty.
    static DigitStream periodic(DigitWord prefix, DigitWord cycle);

    /// Corecursive unfold: step(seed) yields (digit, next seed).
    template <class Seed, class Step>
    static DigitStream unfold(Seed seed, Step step);

private:
    std::shared_ptr<const detail::Lazy<Cons>> cell_;
};

struct DigitStream::Cons {
    Digit head;
    DigitStream tail;
};

inline DigitStream::DigitStream(Thunk thunk) : cell_(std::make_shared<const detail::Lazy<Cons>>(std::move(thunk))) {}

inline Digit DigitStream::head() const { return cell_->force().head; }
inline DigitStream DigitStream::tail() const { return cell_->force().tail; }

inline DigitStream DigitStream::cons(Digit d, DigitStream tail) {
    return DigitStream([d, tail = std::move(tail)] { return Cons{d, tail}; });
}

template <class Seed, class Step>
DigitStream DigitStream::unfold(Seed seed, Step step) {
    return DigitStream([seed = std::move(seed), step = std::move(step)] {
        auto [d, next] = step(seed);
        return Cons{d, unfold(std::move(next), step)};
    });
}

inline DigitStream DigitStream::constant(Digit d) {
    return unfold(0, [d](int) { return std::pair{d, 0}; });
}

inline DigitStream DigitStream::periodic(DigitWord prefix, DigitWord cycle) {
    if (cycle.empty()) throw std::invalid_argument("periodic stream needs a nonempty cycle");
    const std::size_t lead = prefix.size();
    prefix.insert(prefix.end(), cycle.begin(), cycle.end());
    return unfold(std::size_t{0}, [word = std::move(prefix), lead, period = cycle.size()](std::size_t i) {
        const std::size_t next = i + 1 < word.size() ? i + 1 : lead + (i + 1 - lead) % period;
        return std::pair{word[i], next};
    });
}

/// The first n digits.
inline DigitWord stream_prefix(const DigitStream& alpha, int n) {
    if (n < 0) throw std::invalid_argument("negative prefix length");
    DigitWord out;
    out.reserve(static_cast<std::size_t>(n));
    DigitStream s = alpha;
    for (int i = 0; i < n; ++i) {
        out.push_back(s.head());
        if (i + 1 < n) s = s.tail();
    }
    return out;
}

/// alpha^{<n}[X]: image of the carrier under the length-n prefix.
template <DigitSpace Space = SignedDigitSpace>
Interval stream_value_interval(const DigitStream& alpha, int n, const Space& space = {}) {
    return palm_image(word_palm(space, stream_prefix(alpha, n)), unit_interval());
}

/// A real in [-1,1] given by rationals query(n) with |x - query(n)| < 2^-n.
class CauchyReal {
public:
    using Query = std::function<Rational(int)>;

    explicit CauchyReal(Query query) : query_(std::move(query)) {}

    static CauchyReal constant(Rational x) {
        if (!unit_interval().contains(x)) throw std::invalid_argument(x.to_string() + " is outside [-1, 1]");
        return CauchyReal([x = std::move(x)](int) { return x; });
    }

    Rational query(int n) const {
        if (n < 0) throw std::invalid_argument("negative precision");
        return query_(n);
    }

private:
    Query query_;
};

/// Evaluates the prefix long enough to pin the value within 2^-n at the basepoint.
template <DigitSpace Space = SignedDigitSpace>
CauchyReal stream_to_cauchy(const DigitStream& alpha, const Space& space = {}) {
    return CauchyReal([alpha, space](int n) {
        const DigitWord w = stream_prefix(alpha, image_depth_for_precision(space, n));
        return word_palm(space, w)(space.basepoint());
    });
}

/// Preimage of u under digit d after projecting u onto d[X].
template <DigitSpace Space>
Rational pull_back(const Space& space, Digit d, const Rational& u, int precision) {
    const Interval target = palm_image(space.digit(d), unit_interval());
    const Rational projected = u < target.lo() ? target.lo() : (target.hi() < u ? target.hi() : u);
    return space.right_inverse_approx(d, projected, precision);
}

/// Least n with 2^-n < eps/2: the query index used to pick each digit.
inline int covering_query_index(const Rational& eps) {
    int n = 0;
    while (!(pow2(-n) < eps / Rational(2))) ++n;
    return n;
}

/// Signed-digit expansion of a Cauchy-represented real.
///
/// Each step reads one approximation u with |x - u| < eps/2, picks the first
/// digit whose image contains the eps-ball around u (so x lies in it), and
/// continues with the residual oracle n -> d'(query(k(n))), which is within
/// 2^-(n+1) of d'(x).
template <DigitSpace Space = SignedDigitSpace>
DigitStream cauchy_to_stream(CauchyReal c, const Space& space = {}) {
    return DigitStream::unfold(std::move(c), [space](const CauchyReal& oracle) {
        const Rational eps = space.well_covering();
        const Rational u = oracle.query(covering_query_index(eps));
        const auto d = find_covering_digit(space, u, eps);
        if (!d) throw ContractViolation("no digit covers the ball around " + u.to_string());
        CauchyReal residual([oracle, space, digit = *d](int n) {
            return pull_back(space, digit, oracle.query(space.right_inverse_modulus(n)), n);
        });
        return std::pair{*d, std::move(residual)};
    });
}

/// Digit word whose image pins the basic element u to within 2^-n.
template <DigitSpace Space = SignedDigitSpace>
DigitWord word_from_basic(const Rational& u, int n, const Space& space = {}) {
    return stream_prefix(cauchy_to_stream(CauchyReal::constant(u), space), prefix_length_for_precision(space, n - 1));
}

}  // namespace digitree
