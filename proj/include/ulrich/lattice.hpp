#pragma once

// Rank-7 Picard lattice of the cubic surface (blown-up plane).
// A class (a;b1,...,b6) stands for a*l - sum b_i e_i, so that the
// intersection pairing is a*a' - sum b_i*b_i' (signature (1,6)) and
// D.E_i = b_i reads off directly.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ulrich {

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int64_t checked_add(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw overflow_error("integer overflow in add");
    return r;
}

inline int64_t checked_sub(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw overflow_error("integer overflow in sub");
    return r;
}

inline int64_t checked_mul(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw overflow_error("integer overflow in mul");
    return r;
}

struct DivisorClass {
    int64_t a = 0;
    std::array<int64_t, 6> b{};

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    // lexicographic on (a, b1, ..., b6); the canonical enumeration order
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    DivisorClass r{checked_add(x.a, y.a), {}};
    for (int i = 0; i < 6; ++i) r.b[i] = checked_add(x.b[i], y.b[i]);
    return r;
}

inline DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    DivisorClass r{checked_sub(x.a, y.a), {}};
    for (int i = 0; i < 6; ++i) r.b[i] = checked_sub(x.b[i], y.b[i]);
    return r;
}

inline DivisorClass operator-(const DivisorClass& x) {
    DivisorClass r{checked_sub(0, x.a), {}};
    for (int i = 0; i < 6; ++i) r.b[i] = checked_sub(0, x.b[i]);
    return r;
}

inline DivisorClass operator*(int64_t n, const DivisorClass& x) {
    DivisorClass r{checked_mul(n, x.a), {}};
    for (int i = 0; i < 6; ++i) r.b[i] = checked_mul(n, x.b[i]);
    return r;
}

// hyperplane class, canonical class, and the exceptional class D0 whose
// multiples mD0 (m >= 2) carry Ulrich but no stable Ulrich bundles
inline constexpr DivisorClass H{3, {1, 1, 1, 1, 1, 1}};
inline constexpr DivisorClass K{-3, {-1, -1, -1, -1, -1, -1}};
inline constexpr DivisorClass D0{4, {2, 1, 1, 1, 1, 0}};

inline int64_t intersect(const DivisorClass& x, const DivisorClass& y) {
    int64_t r = checked_mul(x.a, y.a);
    for (int i = 0; i < 6; ++i) r = checked_sub(r, checked_mul(x.b[i], y.b[i]));
    return r;
}

inline int64_t self_intersection(const DivisorClass& x) { return intersect(x, x); }

inline int64_t degree(const DivisorClass& x) { return intersect(x, H); }

// adjunction: p_a = (D^2 + D.K)/2 + 1; nullopt flags the half-integer case
inline std::optional<int64_t> arithmetic_genus(const DivisorClass& x) {
    int64_t t = checked_add(self_intersection(x), intersect(x, K));
    if (t % 2 != 0) return std::nullopt;
    return t / 2 + 1;
}

struct DivisorClassHash {
    size_t operator()(const DivisorClass& x) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        auto mix = [&h](uint64_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        mix(static_cast<uint64_t>(x.a));
        for (auto v : x.b) mix(static_cast<uint64_t>(v));
        return static_cast<size_t>(h);
    }
};

// text form "a;b1,b2,b3,b4,b5,b6"
std::string to_string(const DivisorClass& x);
DivisorClass parse_divisor_class(std::string_view text);  // throws std::invalid_argument

}  // namespace ulrich
