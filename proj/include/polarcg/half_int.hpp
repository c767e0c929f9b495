#ifndef POLARCG_HALF_INT_HPP
#define POLARCG_HALF_INT_HPP

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

#include "polarcg/errors.hpp"

namespace polarcg {

/// Half-integer quantum number stored as a doubled integer. All arithmetic
/// stays on the doubled value; nothing here ever divides by two implicitly.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }

    constexpr bool is_whole() const { return twice % 2 == 0; }
    constexpr bool is_nonnegative() const { return twice >= 0; }

    /// The integer value; the caller asserts wholeness.
    int to_int() const {
        if (!is_whole()) throw domain_error("HalfInt: " + to_string() + " is not a whole integer");
        return twice / 2;
    }

    constexpr HalfInt operator+(HalfInt other) const { return HalfInt{twice + other.twice}; }
    constexpr HalfInt operator-(HalfInt other) const { return HalfInt{twice - other.twice}; }
    constexpr HalfInt operator-() const { return HalfInt{-twice}; }
    constexpr auto operator<=>(const HalfInt&) const = default;

    friend constexpr HalfInt abs(HalfInt h) { return HalfInt{h.twice < 0 ? -h.twice : h.twice}; }

    std::string to_string() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

/// Accepts "p/2"-style fractions or integers ("3/2", "-1/2", "2").
inline HalfInt half_int_from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw domain_error("half-integer: empty input");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            int whole = std::stoi(s, &used);
            if (used != s.size()) throw domain_error("half-integer: trailing characters in '" + s + "'");
            return HalfInt::whole(whole);
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (den != "2" && den != "1")
            throw domain_error("half-integer: denominator must be 1 or 2 in '" + s + "'");
        std::size_t used = 0;
        int numerator = std::stoi(num, &used);
        if (used != num.size()) throw domain_error("half-integer: malformed numerator in '" + s + "'");
        return den == "2" ? HalfInt::from_twice(numerator) : HalfInt::whole(numerator);
    } catch (const std::invalid_argument&) {
        throw domain_error("half-integer: malformed input '" + s + "'");
    } catch (const std::out_of_range&) {
        throw domain_error("half-integer: out of range '" + s + "'");
    }
}

} // namespace polarcg

#endif
