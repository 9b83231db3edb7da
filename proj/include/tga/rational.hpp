#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tga {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Always normalized (gcd 1, positive denominator). Every operation is computed
/// in 128-bit intermediates and throws std::overflow_error if the reduced result
/// does not fit, so results are either exact or an error.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)

    Rational(std::int64_t num, std::int64_t den) { *this = reduce(num, den); }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t out;
            if (__builtin_add_overflow(a.num_, b.num_, &out)) throw std::overflow_error("rational overflow");
            return Rational(out);
        }
        return reduce(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                      static_cast<__int128>(a.den_) * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t out;
            if (__builtin_mul_overflow(a.num_, b.num_, &out)) throw std::overflow_error("rational overflow");
            return Rational(out);
        }
        return reduce(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return reduce(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }

    Rational operator-() const {
        if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
        Rational r = *this;
        r.num_ = -num_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Accepts "3", "-7/2" and plain decimals such as "2.5".
    static Rational parse(std::string_view text) {
        auto fail = [&]() -> Rational {
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        };
        if (text.empty()) return fail();
        auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            std::int64_t n = 0, d = 0;
            if (!parse_int(text.substr(0, slash), n) || !parse_int(text.substr(slash + 1), d) || d == 0)
                return fail();
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot != std::string_view::npos) {
            std::string_view whole = text.substr(0, dot);
            std::string_view frac = text.substr(dot + 1);
            bool negative = !whole.empty() && whole.front() == '-';
            if (negative) whole.remove_prefix(1);
            if (frac.empty() || frac.size() > 18 || frac.find_first_not_of("0123456789") != std::string_view::npos)
                return fail();
            std::int64_t w = 0, f = 0;
            if (!whole.empty() && (!parse_int(whole, w) || w < 0)) return fail();
            if (!parse_int(frac, f)) return fail();
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            Rational r = Rational(w) + Rational(f, scale);
            return negative ? -r : r;
        }
        std::int64_t n = 0;
        if (!parse_int(text, n)) return fail();
        return Rational(n);
    }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static bool parse_int(std::string_view s, std::int64_t& out) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        if (s.empty()) return false;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational reduce(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
        if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace tga

template <>
struct std::hash<tga::Rational> {
    std::size_t operator()(const tga::Rational& r) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(r.num());
        return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
