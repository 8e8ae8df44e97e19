#pragma once

#include <cstdint>

#include "covercraft/errors.hpp"

namespace covercraft {

using Int = std::int64_t;

// All arithmetic in the toolkit is integer-exact. Inputs are small, but a
// silent wraparound would invalidate a classification run, so every
// arithmetic path goes through these checked helpers.
inline Int checked_add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Element of the Picard group of a minimal-degree surface.
///
/// On a scroll this is a*C0 + b*f (C0 the minimal section, f a fiber).
/// On P2, and on the Veronese surface in line-class units, only `a` is
/// meaningful and `b` stays 0. Pic is free abelian, so all operations are
/// componentwise.
struct DivisorClass {
    Int a{0};
    Int b{0};

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    DivisorClass operator+(const DivisorClass& o) const {
        return {checked_add(a, o.a), checked_add(b, o.b)};
    }
    DivisorClass operator-(const DivisorClass& o) const {
        return {checked_sub(a, o.a), checked_sub(b, o.b)};
    }
    DivisorClass operator-() const { return {checked_sub(0, a), checked_sub(0, b)}; }

    friend DivisorClass operator*(Int k, const DivisorClass& d) {
        return {checked_mul(k, d.a), checked_mul(k, d.b)};
    }

    bool is_zero() const { return a == 0 && b == 0; }

    /// Image under the ruling swap (a,b) -> (b,a) of F0.
    DivisorClass swapped() const { return {b, a}; }
};

}  // namespace covercraft
