#ifndef HOMEX_EXACT_HPP
#define HOMEX_EXACT_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace homex {

using BigInt = boost::multiprecision::cpp_int;

// Signals that a checked int64 operation would overflow; the caller is
// expected to restart the whole computation over BigInt.
struct Int64Overflow {};

/**
 * int64 wrapper whose arithmetic throws Int64Overflow instead of wrapping.
 * Lets the elimination kernels run at machine speed and fall back to exact
 * big integers only when entries actually blow up.
 */
struct Checked64 {
    std::int64_t v = 0;

    Checked64() = default;
    Checked64(std::int64_t x) : v(x) {}

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Int64Overflow{};
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Int64Overflow{};
        return r;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Int64Overflow{};
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (a.v == INT64_MIN && b.v == -1) throw Int64Overflow{};
        return a.v / b.v;
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (a.v == INT64_MIN && b.v == -1) throw Int64Overflow{};
        return a.v % b.v;
    }
    Checked64 operator-() const {
        if (v == INT64_MIN) throw Int64Overflow{};
        return -v;
    }
    Checked64& operator+=(Checked64 b) { return *this = *this + b; }
    Checked64& operator-=(Checked64 b) { return *this = *this - b; }

    friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
    friend bool operator!=(Checked64 a, Checked64 b) { return a.v != b.v; }
    friend bool operator<(Checked64 a, Checked64 b) { return a.v < b.v; }
};

inline Checked64 abs_value(Checked64 a) { return a.v < 0 ? -a : a; }
inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline bool is_zero(Checked64 a) { return a.v == 0; }
inline bool is_zero(const BigInt& a) { return a.is_zero(); }

} // namespace homex

#endif
