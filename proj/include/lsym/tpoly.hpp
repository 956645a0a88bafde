/**
 * @file tpoly.hpp
 * @brief Dense univariate polynomials in the folding variable t.
 *
 * Coefficients live in any ring from semiring.hpp. Only ring operations are
 * provided; the zero polynomial has an empty coefficient list.
 */
#pragma once

#include <vector>

#include "lsym/semiring.hpp"

namespace lsym {

template <class T>
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(const T& c) {
        if (!Arith<T>::is_zero(c)) c_.push_back(c);
    }
    explicit TPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    /** c * t^d */
    static TPoly monomial(const T& c, int d) {
        std::vector<T> v(d + 1, Arith<T>::zero());
        v[d] = c;
        return TPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    T coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return Arith<T>::zero();
        return c_[d];
    }
    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), Arith<T>::zero());
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] + b.c_[k];
        return TPoly(std::move(r));
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }
    TPoly operator-() const {
        std::vector<T> r;
        r.reserve(c_.size());
        for (const T& x : c_) r.push_back(Arith<T>::neg(x));
        return TPoly(std::move(r));
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return TPoly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, Arith<T>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return TPoly(std::move(r));
    }
    friend TPoly operator/(const TPoly&, const TPoly&) {
        fail("bad-input", "division of polynomials in t is not supported");
    }
    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    friend bool operator==(const TPoly& a, const TPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!(a.c_[k] == b.c_[k])) return false;
        return true;
    }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

private:
    void normalize() {
        while (!c_.empty() && Arith<T>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
struct Arith<TPoly<T>> {
    static constexpr bool has_subtraction = Arith<T>::has_subtraction;
    static constexpr bool has_division = false;
    static TPoly<T> zero() { return TPoly<T>(); }
    static TPoly<T> one() { return TPoly<T>(Arith<T>::one()); }
    static TPoly<T> from_int(long k) { return TPoly<T>(Arith<T>::from_int(k)); }
    static bool is_zero(const TPoly<T>& a) { return a.is_zero(); }
    static TPoly<T> neg(const TPoly<T>& a) { return -a; }
};

}  // namespace lsym
