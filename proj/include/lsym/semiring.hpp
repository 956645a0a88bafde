/**
 * @file semiring.hpp
 * @brief The three value domains shared by every algorithm in the library.
 *
 * Algorithms are templates over a value type T and only use the operations
 * listed in Arith<T>. Three instantiations are provided:
 *
 *   Rational  exact field (GMP mpq_class), used for identity checks
 *   Trop      integer min-plus semifield: a + b = min, a * b = a + b, a / b = a - b
 *   Poly      sparse multivariate integer polynomials (see poly.hpp)
 *
 * Subtraction-free code (tableau sums, path families, gRSK minor ratios)
 * compiles for all three. Code that needs subtraction, such as determinants,
 * checks Arith<T>::has_subtraction and reports "needs-subtraction" otherwise.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "lsym/error.hpp"

namespace lsym {

using Rational = mpq_class;
using Integer = mpz_class;

/** Parses "p/q" or "p" into a canonical rational. */
Rational parse_rational(const std::string& text);

/** Formats a rational as "p/q", or "p" when the denominator is 1. */
std::string to_string(const Rational& q);

/**
 * Element of the min-plus semifield on Z plus a +infinity sentinel that plays
 * the role of the additive zero. Products involving +infinity stay infinite.
 */
struct Trop {
    std::int64_t v = 0;
    bool inf = false;

    Trop() = default;
    explicit Trop(std::int64_t value) : v(value) {}

    static Trop infinity() {
        Trop t;
        t.inf = true;
        return t;
    }

    std::int64_t value() const {
        if (inf) fail("bad-input", "tropical value is +infinity (empty positive sum)");
        return v;
    }

    friend Trop operator+(const Trop& a, const Trop& b) {
        if (a.inf) return b;
        if (b.inf) return a;
        return Trop(a.v < b.v ? a.v : b.v);
    }
    friend Trop operator*(const Trop& a, const Trop& b) {
        if (a.inf || b.inf) return infinity();
        return Trop(a.v + b.v);
    }
    friend Trop operator/(const Trop& a, const Trop& b) {
        if (b.inf) fail("degenerate-point", "tropical division by +infinity");
        if (a.inf) return infinity();
        return Trop(a.v - b.v);
    }
    Trop& operator+=(const Trop& o) { return *this = *this + o; }
    Trop& operator*=(const Trop& o) { return *this = *this * o; }
    Trop& operator/=(const Trop& o) { return *this = *this / o; }

    friend bool operator==(const Trop& a, const Trop& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.v == b.v;
    }
    friend bool operator!=(const Trop& a, const Trop& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Trop& t) {
        if (t.inf) return os << "inf";
        return os << t.v;
    }
};

/** Operation table used by the generic algorithms. */
template <class T>
struct Arith;

template <>
struct Arith<Rational> {
    static constexpr bool has_subtraction = true;
    static constexpr bool has_division = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long k) { return Rational(k); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational neg(const Rational& a) { return Rational(-a); }
};

template <>
struct Arith<Trop> {
    static constexpr bool has_subtraction = false;
    static constexpr bool has_division = true;
    static Trop zero() { return Trop::infinity(); }
    static Trop one() { return Trop(0); }
    // A positive integer coefficient tropicalizes to 0, the multiplicative unit.
    static Trop from_int(long k) {
        if (k < 0) fail("needs-subtraction", "negative coefficient in min-plus mode");
        return k == 0 ? zero() : one();
    }
    static bool is_zero(const Trop& a) { return a.inf; }
    [[noreturn]] static Trop neg(const Trop&) {
        fail("needs-subtraction", "additive inverse requested in min-plus mode");
    }
};

/** Machine integers, used for nonnegative integer matrices and GT patterns. */
template <>
struct Arith<long> {
    static constexpr bool has_subtraction = true;
    static constexpr bool has_division = false;
    static long zero() { return 0; }
    static long one() { return 1; }
    static long from_int(long k) { return k; }
    static bool is_zero(long a) { return a == 0; }
    static long neg(long a) { return -a; }
};

/** a^e for e >= 0 using only multiplication. */
template <class T>
T power(const T& a, long e) {
    T r = Arith<T>::one();
    for (long k = 0; k < e; ++k) r = r * a;
    return r;
}

/** Sign multiplier: returns a when sign is +1 and -a when sign is -1. */
template <class T>
T signed_value(int sign, const T& a) {
    return sign >= 0 ? a : Arith<T>::neg(a);
}

}  // namespace lsym
