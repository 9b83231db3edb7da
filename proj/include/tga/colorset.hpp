#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tga {

/// Colors are 1-based. Sets are bitmasks, so at most kMaxColors colors exist.
inline constexpr int kMaxColors = 16;

class ColorSet {
public:
    constexpr ColorSet() noexcept = default;
    ColorSet(std::initializer_list<int> colors) {
        for (int c : colors) insert(c);
    }

    static constexpr ColorSet from_bits(std::uint32_t bits) noexcept {
        ColorSet s;
        s.bits_ = bits;
        return s;
    }

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }

    bool contains(int color) const noexcept {
        return color >= 1 && color <= kMaxColors && (bits_ >> (color - 1)) & 1u;
    }

    void insert(int color) {
        if (color < 1 || color > kMaxColors) throw std::out_of_range("color out of range: " + std::to_string(color));
        bits_ |= 1u << (color - 1);
    }

    void erase(int color) noexcept {
        if (color >= 1 && color <= kMaxColors) bits_ &= ~(1u << (color - 1));
    }

    /// Largest color present, 0 for the empty set.
    constexpr int max_color() const noexcept { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

    bool within(int k) const noexcept { return max_color() <= k; }

    std::vector<int> colors() const {
        std::vector<int> out;
        for (int c = 1; c <= kMaxColors; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }

    friend constexpr ColorSet operator|(ColorSet a, ColorSet b) noexcept { return from_bits(a.bits_ | b.bits_); }
    friend constexpr ColorSet operator&(ColorSet a, ColorSet b) noexcept { return from_bits(a.bits_ & b.bits_); }
    friend constexpr bool operator==(ColorSet, ColorSet) noexcept = default;
    friend constexpr auto operator<=>(ColorSet a, ColorSet b) noexcept { return a.bits_ <=> b.bits_; }

    /// "{1,3}".
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int c : colors()) {
            if (!first) out += ",";
            out += std::to_string(c);
            first = false;
        }
        return out + "}";
    }

private:
    std::uint32_t bits_ = 0;
};

/// Recoloring ρ: 2^[k] → 2^[k] given as explicit rewrite rules; subsets with no
/// rule map to themselves.
class Recoloring {
public:
    Recoloring() = default;
    Recoloring(std::initializer_list<std::pair<const ColorSet, ColorSet>> rules)
        : Recoloring(std::map<ColorSet, ColorSet>(rules)) {}
    explicit Recoloring(std::map<ColorSet, ColorSet> rules) : rules_(std::move(rules)) {
        for (auto it = rules_.begin(); it != rules_.end();) {
            if (it->first == it->second) {
                it = rules_.erase(it);
            } else {
                ++it;
            }
        }
    }

    ColorSet operator()(ColorSet s) const {
        auto it = rules_.find(s);
        return it == rules_.end() ? s : it->second;
    }

    const std::map<ColorSet, ColorSet>& rules() const noexcept { return rules_; }
    bool is_identity() const noexcept { return rules_.empty(); }

    int max_color() const noexcept {
        int m = 0;
        for (const auto& [from, to] : rules_) m = std::max({m, from.max_color(), to.max_color()});
        return m;
    }

    /// True when every singleton and ∅ maps to a set of size at most one and
    /// ∅ is fixed, so single-colored graphs stay single-colored.
    bool preserves_single_colors() const {
        if (!(*this)(ColorSet{}).empty()) return false;
        for (const auto& [from, to] : rules_)
            if (from.size() <= 1 && to.size() > 1) return false;
        return true;
    }

    /// "{1}->{2},{1,2}->{}"; the identity is "id". Used as a table key.
    std::string name() const {
        if (rules_.empty()) return "id";
        std::string out;
        for (const auto& [from, to] : rules_) {
            if (!out.empty()) out += ",";
            out += from.to_string() + "->" + to.to_string();
        }
        return out;
    }

    friend bool operator==(const Recoloring&, const Recoloring&) = default;
    friend auto operator<=>(const Recoloring& a, const Recoloring& b) { return a.rules_ <=> b.rules_; }

private:
    std::map<ColorSet, ColorSet> rules_;
};

}  // namespace tga
