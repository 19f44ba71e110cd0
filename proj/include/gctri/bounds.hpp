#pragma once

// Exponent bookkeeping for the Graph-Collision -> Triangle lower-bound transfer.
// Pure rational arithmetic; no empirical content.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "gctri/errors.hpp"

namespace gctri {

class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw InputError("zero denominator");
        normalize();
    }

    /// Accepts "p/q", integers, and finite decimals such as "0.6" (read exactly as 3/5).
    static Rational parse(std::string_view text) {
        if (text.empty()) throw InputError("empty rational");
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
        }
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            const auto frac = text.substr(dot + 1);
            if (frac.size() > 15) throw InputError("too many decimal digits in '" + std::string(text) + "'");
            std::int64_t scale = 1;
            for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
            std::string_view whole = text.substr(0, dot);
            const bool negative = !whole.empty() && whole.front() == '-';
            if (negative || (!whole.empty() && whole.front() == '+')) whole.remove_prefix(1);
            const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
            const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
            if (frac.find_first_not_of("0123456789") != std::string_view::npos) {
                throw InputError("malformed decimal '" + std::string(text) + "'");
            }
            const std::int64_t num = w * scale + f;
            return Rational(negative ? -num : num, scale);
        }
        return Rational(parse_int(text));
    }

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    [[nodiscard]] std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

private:
    static std::int64_t parse_int(std::string_view s) {
        if (s.empty()) throw InputError("malformed number");
        std::size_t pos = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(std::string(s), &pos);
        } catch (const std::exception&) {
            throw InputError("malformed number '" + std::string(s) + "'");
        }
        if (pos != s.size()) throw InputError("malformed number '" + std::string(s) + "'");
        return value;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

struct BoundReport {
    std::uint64_t n = 0;
    std::uint64_t gadget_vertices = 0;
    Rational gc_exponent;
    Rational triangle_exponent;
    bool supertrivial = false;  // gc exponent > 1/2, hence triangle exponent > 1
    double gc_bound = 0.0;        // n^gc_exponent
    double triangle_bound = 0.0;  // n^triangle_exponent
    std::string statement;
};

/// Graph-Collision needing n^a queries forces Triangle on the 3n-vertex gadget to
/// need n^(a + 1/2); a > 1/2 is exactly the regime that beats the trivial n^1.
inline BoundReport bound_report(std::uint64_t n, const Rational& gc_exponent) {
    const Rational half(1, 2);
    if (n == 0) throw InputError("n must be positive");
    if (gc_exponent < half || gc_exponent > Rational(1)) {
        throw InputError("Graph-Collision exponent " + gc_exponent.str() + " outside [1/2, 1]");
    }
    BoundReport r;
    r.n = n;
    r.gadget_vertices = 3 * n;
    r.gc_exponent = gc_exponent;
    r.triangle_exponent = gc_exponent + half;
    r.supertrivial = gc_exponent > half;
    const double nd = static_cast<double>(n);
    r.gc_bound = std::pow(nd, gc_exponent.to_double());
    r.triangle_bound = std::pow(nd, r.triangle_exponent.to_double());
    r.statement = "Q(Graph-Collision) = Omega(n^" + gc_exponent.str() + ") implies Q(Triangle) = Omega(n^" +
                  r.triangle_exponent.str() + ") on " + std::to_string(r.gadget_vertices) + "-vertex graphs; " +
                  (r.supertrivial ? "exceeds the trivial Omega(n) bound" : "matches the trivial Omega(n) bound");
    return r;
}

}  // namespace gctri
