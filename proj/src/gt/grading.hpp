#pragma once

#include <cstdint>
#include <string>

namespace gt {

// Z2 x Z2 degree [a1 a2]. Addition is componentwise mod 2; the pairing
// a1*b2 - a2*b1 mod 2 decides commutator (0) vs anticommutator (1).
struct Grading {
    uint8_t a1 = 0;
    uint8_t a2 = 0;

    constexpr Grading() = default;
    constexpr Grading(int x, int y) : a1(uint8_t(x & 1)), a2(uint8_t(y & 1)) {}

    friend constexpr Grading operator+(Grading a, Grading b) {
        return Grading(a.a1 ^ b.a1, a.a2 ^ b.a2);
    }
    friend constexpr bool operator==(Grading a, Grading b) { return a.a1 == b.a1 && a.a2 == b.a2; }
    friend constexpr bool operator!=(Grading a, Grading b) { return !(a == b); }
    friend constexpr bool operator<(Grading a, Grading b) {
        return (a.a1 * 2 + a.a2) < (b.a1 * 2 + b.a2);
    }
    constexpr bool is_zero() const { return a1 == 0 && a2 == 0; }

    std::string str() const { return std::string("[") + char('0' + a1) + char('0' + a2) + "]"; }
};

inline constexpr int grading_pairing(Grading a, Grading b) { return (a.a1 & b.a2) ^ (a.a2 & b.a1); }

// (-1)^{a.b}
inline constexpr int pairing_sign(Grading a, Grading b) { return grading_pairing(a, b) ? -1 : 1; }

inline constexpr Grading G00{0, 0}, G10{1, 0}, G01{0, 1}, G11{1, 1};

} // namespace gt
