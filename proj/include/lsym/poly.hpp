/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials with arbitrary-precision integer coefficients.
 *
 * Variables are small integer ids; loop variables x_i^j use
 * loop_var(i, j) = 16 * (i - 1) + (j - 1), so i, j must be at most 16.
 * A monomial is its exponent vector with trailing zeros trimmed, so equal
 * monomials compare equal. Zero coefficients are never stored.
 */
#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "lsym/semiring.hpp"

namespace lsym {

using Monomial = std::vector<std::uint16_t>;

inline int loop_var(int i, int j) { return 16 * (i - 1) + (j - 1); }

class Poly {
public:
    Poly() = default;
    explicit Poly(long c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    explicit Poly(const Integer& c) {
        if (sgn(c) != 0) terms_[Monomial{}] = c;
    }

    static Poly var(int id, unsigned exp = 1);
    static Poly loop(int i, int j) { return var(loop_var(i, j)); }

    const std::map<Monomial, Integer>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /** Coefficient of the given monomial, zero when absent. */
    Integer coeff(const Monomial& mono) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /** Substitutes var id -> value; every variable occurring must be mapped. */
    Rational eval(const std::map<int, Rational>& values) const;

    /** Human readable form using x[i,j] for loop variables. */
    std::string str() const;

private:
    void add_term(const Monomial& mono, const Integer& c);

    std::map<Monomial, Integer> terms_;
};

template <>
struct Arith<Poly> {
    static constexpr bool has_subtraction = true;
    static constexpr bool has_division = false;
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    static Poly from_int(long k) { return Poly(k); }
    static bool is_zero(const Poly& a) { return a.is_zero(); }
    static Poly neg(const Poly& a) { return -a; }
};

/** Division is not available for polynomials; generic code that divides throws. */
Poly operator/(const Poly& a, const Poly& b);

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

/** Builds a monomial from (variable id, exponent) pairs. */
Monomial make_monomial(const std::vector<std::pair<int, unsigned>>& factors);

}  // namespace lsym
