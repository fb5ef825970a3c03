#pragma once

#include <cstdlib>

namespace magnikit {

// Raised by CheckedI64 arithmetic; callers rerun the computation with mpz.
struct IntOverflow {};

// 64-bit integer whose ring operations detect overflow instead of wrapping.
struct CheckedI64 {
    long long v = 0;

    CheckedI64() = default;
    CheckedI64(long long x) : v(x) {}
    CheckedI64(int x) : v(x) {}

    friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw IntOverflow{};
        return r;
    }
    friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw IntOverflow{};
        return r;
    }
    friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw IntOverflow{};
        return r;
    }
    friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) {
        if (b.v == -1 && a.v == LLONG_MIN) throw IntOverflow{};
        return a.v / b.v;
    }
    friend CheckedI64 operator%(CheckedI64 a, CheckedI64 b) {
        if (b.v == -1 && a.v == LLONG_MIN) throw IntOverflow{};
        return a.v % b.v;
    }
    CheckedI64 operator-() const {
        if (v == LLONG_MIN) throw IntOverflow{};
        return -v;
    }
    CheckedI64& operator+=(CheckedI64 b) { return *this = *this + b; }
    CheckedI64& operator-=(CheckedI64 b) { return *this = *this - b; }
    CheckedI64& operator*=(CheckedI64 b) { return *this = *this * b; }

    friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
    friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v != b.v; }
    friend bool operator<(CheckedI64 a, CheckedI64 b) { return a.v < b.v; }
    friend bool operator>(CheckedI64 a, CheckedI64 b) { return a.v > b.v; }
};

inline CheckedI64 abs(CheckedI64 a) { return a.v < 0 ? -a : a; }

}  // namespace magnikit
