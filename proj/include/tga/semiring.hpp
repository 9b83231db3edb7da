#pragma once

#include "tga/rational.hpp"

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace tga {

/// Element of the extended rationals Q ∪ {−∞, +∞}.
///
/// Which infinity is the ⊕-unit depends on the semiring: −∞ for max-plus,
/// +∞ for min-plus. The other infinity only ever appears transiently inside
/// residuation.
class Tropical {
public:
    enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

    constexpr Tropical() noexcept = default;  // −∞
    Tropical(Rational value) noexcept : kind_(Kind::finite), value_(value) {}  // NOLINT(implicit)
    Tropical(std::int64_t value) noexcept : kind_(Kind::finite), value_(value) {}  // NOLINT(implicit)
    Tropical(int value) noexcept : kind_(Kind::finite), value_(value) {}  // NOLINT(implicit)

    static constexpr Tropical neg_inf() noexcept { return Tropical(); }
    static constexpr Tropical pos_inf() noexcept {
        Tropical t;
        t.kind_ = Kind::pos_inf;
        return t;
    }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
    constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::neg_inf; }
    constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::pos_inf; }

    const Rational& value() const {
        if (kind_ != Kind::finite) throw std::logic_error("infinite tropical value has no rational value");
        return value_;
    }

    friend bool operator==(const Tropical& a, const Tropical& b) noexcept {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
    }

    friend std::strong_ordering operator<=>(const Tropical& a, const Tropical& b) noexcept {
        if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
        if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    Tropical operator-() const {
        switch (kind_) {
            case Kind::neg_inf: return pos_inf();
            case Kind::pos_inf: return neg_inf();
            default: return Tropical(-value_);
        }
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::neg_inf: return "-inf";
            case Kind::pos_inf: return "+inf";
            default: return value_.to_string();
        }
    }

    static Tropical parse(std::string_view text) {
        if (text == "-inf") return neg_inf();
        if (text == "+inf" || text == "inf") return pos_inf();
        return Tropical(Rational::parse(text));
    }

    friend std::ostream& operator<<(std::ostream& os, const Tropical& t) { return os << t.to_string(); }

private:
    Kind kind_ = Kind::neg_inf;
    Rational value_{};
};

enum class Carrier { extended_rational, natural, boolean, rational };

struct SemiringDescriptor {
    std::string_view name;
    Carrier carrier;
    bool idempotent_plus;
};

// ---------------------------------------------------------------------------
// Semiring instances. Each is a stateless trait: a value type plus static
// operations. Mixing carriers is a compile-time error.

/// (Q ∪ {−∞}, max, +). zero = −∞, one = 0.
struct MaxPlus {
    using value_type = Tropical;
    static constexpr std::string_view name = "maxplus";
    static constexpr SemiringDescriptor descriptor{name, Carrier::extended_rational, true};

    static Tropical zero() noexcept { return Tropical::neg_inf(); }
    static Tropical one() noexcept { return Tropical(0); }
    /// Transient element used by residuation only.
    static Tropical top() noexcept { return Tropical::pos_inf(); }

    static Tropical plus(const Tropical& a, const Tropical& b) { return a < b ? b : a; }
    static Tropical times(const Tropical& a, const Tropical& b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return Tropical::neg_inf();
        if (a.is_pos_inf() || b.is_pos_inf()) return Tropical::pos_inf();
        return Tropical(a.value() + b.value());
    }
    static Tropical from_rational(const Rational& r) { return Tropical(r); }
    static std::string to_string(const Tropical& v) { return v.to_string(); }
    static Tropical parse(std::string_view s) { return Tropical::parse(s); }
};

/// (Q ∪ {+∞}, min, +), the order dual of MaxPlus. zero = +∞, one = 0.
struct MinPlus {
    using value_type = Tropical;
    static constexpr std::string_view name = "minplus";
    static constexpr SemiringDescriptor descriptor{name, Carrier::extended_rational, true};

    static Tropical zero() noexcept { return Tropical::pos_inf(); }
    static Tropical one() noexcept { return Tropical(0); }
    static Tropical top() noexcept { return Tropical::neg_inf(); }

    static Tropical plus(const Tropical& a, const Tropical& b) { return b < a ? b : a; }
    static Tropical times(const Tropical& a, const Tropical& b) {
        if (a.is_pos_inf() || b.is_pos_inf()) return Tropical::pos_inf();
        if (a.is_neg_inf() || b.is_neg_inf()) return Tropical::neg_inf();
        return Tropical(a.value() + b.value());
    }
    static Tropical from_rational(const Rational& r) { return Tropical(r); }
    static std::string to_string(const Tropical& v) { return v.to_string(); }
    static Tropical parse(std::string_view s) { return Tropical::parse(s); }
};

/// (N, +, ×) on 64-bit counters; overflow throws.
struct Natural {
    using value_type = std::uint64_t;
    static constexpr std::string_view name = "nat";
    static constexpr SemiringDescriptor descriptor{name, Carrier::natural, false};

    static std::uint64_t zero() noexcept { return 0; }
    static std::uint64_t one() noexcept { return 1; }
    static std::uint64_t plus(std::uint64_t a, std::uint64_t b) {
        std::uint64_t out;
        if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("natural semiring overflow");
        return out;
    }
    static std::uint64_t times(std::uint64_t a, std::uint64_t b) {
        std::uint64_t out;
        if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("natural semiring overflow");
        return out;
    }
    static std::uint64_t from_rational(const Rational& r) {
        if (!r.is_integer() || r.num() < 0) throw std::invalid_argument("not a natural number: " + r.to_string());
        return static_cast<std::uint64_t>(r.num());
    }
    static std::string to_string(std::uint64_t v) { return std::to_string(v); }
    static std::uint64_t parse(std::string_view s) { return from_rational(Rational::parse(s)); }
};

/// ({false, true}, or, and).
struct Boolean {
    using value_type = bool;
    static constexpr std::string_view name = "bool";
    static constexpr SemiringDescriptor descriptor{name, Carrier::boolean, true};

    static bool zero() noexcept { return false; }
    static bool one() noexcept { return true; }
    static bool plus(bool a, bool b) noexcept { return a || b; }
    static bool times(bool a, bool b) noexcept { return a && b; }
    static bool from_rational(const Rational& r) noexcept { return r != Rational(0); }
    static std::string to_string(bool v) { return v ? "1" : "0"; }
    static bool parse(std::string_view s) { return from_rational(Rational::parse(s)); }
};

/// The field Q used as a semiring (+, ×). Stands in for "a field" in rank claims.
struct RationalField {
    using value_type = Rational;
    static constexpr std::string_view name = "rat";
    static constexpr SemiringDescriptor descriptor{name, Carrier::rational, false};

    static Rational zero() noexcept { return Rational(0); }
    static Rational one() noexcept { return Rational(1); }
    static Rational plus(const Rational& a, const Rational& b) { return a + b; }
    static Rational times(const Rational& a, const Rational& b) { return a * b; }
    static Rational from_rational(const Rational& r) noexcept { return r; }
    static std::string to_string(const Rational& v) { return v.to_string(); }
    static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <class S>
concept Semiring = requires(const typename S::value_type& a, const typename S::value_type& b,
                            const Rational& r, std::string_view text) {
    typename S::value_type;
    { S::name } -> std::convertible_to<std::string_view>;
    { S::descriptor } -> std::convertible_to<SemiringDescriptor>;
    { S::zero() } -> std::same_as<typename S::value_type>;
    { S::one() } -> std::same_as<typename S::value_type>;
    { S::plus(a, b) } -> std::same_as<typename S::value_type>;
    { S::times(a, b) } -> std::same_as<typename S::value_type>;
    { S::from_rational(r) } -> std::same_as<typename S::value_type>;
    { S::to_string(a) } -> std::same_as<std::string>;
    { S::parse(text) } -> std::same_as<typename S::value_type>;
};

template <class S>
concept TropicalSemiring = Semiring<S> && (std::same_as<S, MaxPlus> || std::same_as<S, MinPlus>);

template <Semiring S>
using Value = typename S::value_type;

template <Semiring S>
using Vector = std::vector<typename S::value_type>;

template <Semiring S>
bool is_zero(const Value<S>& v) {
    return v == S::zero();
}

/// a ← a ⊕ b. Also takes std::vector<bool> element proxies.
template <Semiring S, class Ref>
void accumulate(Ref&& a, const Value<S>& b) {
    a = S::plus(a, b);
}

/// Calls fn.template operator()<S>() for the semiring with the given name.
template <class Fn>
decltype(auto) with_semiring(std::string_view name, Fn&& fn) {
    if (name == MaxPlus::name) return fn.template operator()<MaxPlus>();
    if (name == MinPlus::name) return fn.template operator()<MinPlus>();
    if (name == Natural::name) return fn.template operator()<Natural>();
    if (name == RationalField::name) return fn.template operator()<RationalField>();
    if (name == Boolean::name) return fn.template operator()<Boolean>();
    throw std::invalid_argument("unknown semiring '" + std::string(name) + "'");
}

}  // namespace tga
