#pragma once

// Exact rational scalars backed by GMP.
//
// Every value is kept in canonical form: positive denominator and
// gcd(|numerator|, denominator) = 1. GMP's mpq arithmetic already returns
// canonical results, so canonicalisation is only needed on construction
// from raw parts and on parsing.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace digitree {

class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(static_cast<long>(n)) {}     // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    Rational(mpz_class n, mpz_class d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(std::move(n), std::move(d));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_), Canonical{}); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q" in lowest terms, or "p" when q = 1.
    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    double to_double() const { return q_.get_d(); }

    /// Parses "p", "p/q" or a decimal literal such as "-0.125".
    static Rational parse(std::string_view text);
    static Rational parse_decimal(std::string_view text);

private:
    struct Canonical {};
    Rational(mpq_class q, Canonical) : q_(std::move(q)) {}

    mpq_class q_{0};
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// 2^e for any integer exponent.
inline Rational pow2(long e) {
    mpz_class p(1);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline Rational Rational::parse_decimal(std::string_view text) {
    std::string_view s = detail::trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)) ||
        (dot != std::string_view::npos && frac.empty()))
        throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

inline Rational Rational::parse(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.find('.') != std::string_view::npos) return parse_decimal(s);
    const auto slash = s.find('/');
    auto parse_int = [&](std::string_view part, bool allow_sign) {
        std::string_view digits = part;
        if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (!detail::all_digits(digits)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        std::string str(part);
        if (str.front() == '+') str.erase(0, 1);
        return mpz_class(str, 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s, true), mpz_class(1));
    mpz_class den = parse_int(s.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(parse_int(s.substr(0, slash), true), std::move(den));
}

}  // namespace digitree
