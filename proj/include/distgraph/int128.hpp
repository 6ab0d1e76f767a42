#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>

#include "distgraph/error.hpp"

namespace distgraph {

/// Signed 128-bit integer with overflow-checked arithmetic.
///
/// Coefficients in this domain grow like continued-fraction denominators, so
/// silent wraparound would corrupt results invisibly.  Every +, -, * checks
/// for overflow and throws OverflowError instead of wrapping.
class Int128 {
public:
    constexpr Int128() noexcept : v_(0) {}
    constexpr Int128(int x) noexcept : v_(x) {}
    constexpr Int128(long x) noexcept : v_(x) {}
    constexpr Int128(long long x) noexcept : v_(x) {}
    constexpr Int128(unsigned x) noexcept : v_(x) {}
    constexpr Int128(unsigned long x) noexcept : v_(x) {}
    constexpr Int128(unsigned long long x) noexcept : v_(x) {}

    friend Int128 operator+(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("Int128 addition overflow");
        return Int128(r, raw_tag{});
    }
    friend Int128 operator-(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("Int128 subtraction overflow");
        return Int128(r, raw_tag{});
    }
    friend Int128 operator*(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("Int128 multiplication overflow");
        return Int128(r, raw_tag{});
    }
    friend Int128 operator/(Int128 a, Int128 b) {
        if (b.v_ == 0) throw Error("Int128 division by zero");
        if (a.v_ == min_raw() && b.v_ == -1) throw OverflowError("Int128 division overflow");
        return Int128(a.v_ / b.v_, raw_tag{});
    }
    friend Int128 operator%(Int128 a, Int128 b) {
        if (b.v_ == 0) throw Error("Int128 modulo by zero");
        if (a.v_ == min_raw() && b.v_ == -1) return Int128(0);
        return Int128(a.v_ % b.v_, raw_tag{});
    }
    Int128 operator-() const {
        if (v_ == min_raw()) throw OverflowError("Int128 negation overflow");
        return Int128(-v_, raw_tag{});
    }

    Int128& operator+=(Int128 o) { return *this = *this + o; }
    Int128& operator-=(Int128 o) { return *this = *this - o; }
    Int128& operator*=(Int128 o) { return *this = *this * o; }
    Int128& operator/=(Int128 o) { return *this = *this / o; }

    friend constexpr bool operator==(Int128 a, Int128 b) noexcept { return a.v_ == b.v_; }
    friend constexpr std::strong_ordering operator<=>(Int128 a, Int128 b) noexcept {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Checked narrowing; indices and plot coordinates must fit in 64 bits.
    long long to_long_long() const {
        if (v_ > std::numeric_limits<long long>::max() || v_ < std::numeric_limits<long long>::min())
            throw OverflowError("Int128 does not fit in 64 bits");
        return static_cast<long long>(v_);
    }

    friend std::string to_string(Int128 x) {
        if (x.v_ == 0) return "0";
        unsigned __int128 u = x.v_ < 0 ? -static_cast<unsigned __int128>(x.v_) : static_cast<unsigned __int128>(x.v_);
        std::string digits;
        while (u != 0) {
            digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        if (x.v_ < 0) digits.push_back('-');
        return {digits.rbegin(), digits.rend()};
    }

    friend std::ostream& operator<<(std::ostream& os, Int128 x) { return os << to_string(x); }

    friend struct std::hash<Int128>;

private:
    struct raw_tag {};
    constexpr Int128(__int128 v, raw_tag) noexcept : v_(v) {}
    static constexpr __int128 min_raw() noexcept { return static_cast<__int128>(1) << 127; }

    __int128 v_;
};

inline Int128 abs(Int128 x) { return x < Int128(0) ? -x : x; }

inline int sign(Int128 x) noexcept { return x < Int128(0) ? -1 : (Int128(0) < x ? 1 : 0); }

/// Floor division (rounds toward negative infinity); b != 0.
inline Int128 floor_div(Int128 a, Int128 b) {
    Int128 q = a / b;
    if ((a % b != Int128(0)) && ((a < Int128(0)) != (b < Int128(0)))) q -= Int128(1);
    return q;
}

inline Int128 gcd(Int128 a, Int128 b) {
    a = abs(a);
    b = abs(b);
    while (b != Int128(0)) {
        Int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

struct ExtendedGcd {
    Int128 g, s, t;  // s*a + t*b == g, g >= 0
};

inline ExtendedGcd extended_gcd(Int128 a, Int128 b) {
    Int128 old_r = a, r = b;
    Int128 old_s = 1, s = 0;
    Int128 old_t = 0, t = 1;
    while (r != Int128(0)) {
        Int128 q = old_r / r;
        Int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < Int128(0)) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline Int128 parse_int128(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer");
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw ParseError("integer has no digits: '" + std::string(text) + "'");
    Int128 value = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw ParseError("bad integer: '" + std::string(text) + "'");
        value = value * Int128(10) + Int128(c - '0');
    }
    return negative ? -value : value;
}

}  // namespace distgraph

template <>
struct std::hash<distgraph::Int128> {
    std::size_t operator()(const distgraph::Int128& x) const noexcept {
        auto v = static_cast<unsigned __int128>(x.v_);
        auto lo = static_cast<std::uint64_t>(v);
        auto hi = static_cast<std::uint64_t>(v >> 64);
        std::uint64_t h = lo * 0x9e3779b97f4a7c15ull;
        h ^= hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
