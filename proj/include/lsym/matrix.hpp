/**
 * @file matrix.hpp
 * @brief Dense matrices over the library's value types, with exact minors.
 *
 * Indices are 1-based throughout to match the combinatorial formulas: A(i, j)
 * is the entry in row i and column j. Index sets for minors are plain integer
 * vectors, sorted internally, so Delta_{I,J} always uses increasing order.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "lsym/semiring.hpp"

namespace lsym {

using IndexSet = std::vector<int>;

/** [a, b] as an index set; empty when b < a. */
inline IndexSet interval(int a, int b) {
    IndexSet s;
    for (int k = a; k <= b; ++k) s.push_back(k);
    return s;
}

/** Sorted union of two index sets (duplicates kept once). */
inline IndexSet set_union(IndexSet a, const IndexSet& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

/** All k-element subsets of S, each sorted, in lexicographic order. */
inline std::vector<IndexSet> combinations(const IndexSet& S, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > static_cast<int>(S.size())) return out;
    IndexSet cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t a = start; a < S.size(); ++a) {
            cur.push_back(S[a]);
            self(self, a + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, Arith<T>::zero()) {}
    Matrix(int rows, int cols, const T& fill) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 1; i <= n; ++i) m(i, i) = Arith<T>::one();
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i - 1) * c_ + (j - 1)]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i - 1) * c_ + (j - 1)]; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 1; i <= r_; ++i)
            for (int j = 1; j <= c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const IndexSet& I, const IndexSet& J) const {
        Matrix s(static_cast<int>(I.size()), static_cast<int>(J.size()));
        for (std::size_t a = 0; a < I.size(); ++a)
            for (std::size_t b = 0; b < J.size(); ++b) s(a + 1, b + 1) = (*this)(I[a], J[b]);
        return s;
    }

    friend Matrix operator*(const Matrix& A, const Matrix& B) {
        if (A.c_ != B.r_) fail("minor-shape", "matrix product dimension mismatch");
        Matrix C(A.r_, B.c_);
        for (int i = 1; i <= A.r_; ++i)
            for (int k = 1; k <= A.c_; ++k) {
                const T& aik = A(i, k);
                if (Arith<T>::is_zero(aik)) continue;
                for (int j = 1; j <= B.c_; ++j) C(i, j) = C(i, j) + aik * B(k, j);
            }
        return C;
    }

    friend bool operator==(const Matrix& A, const Matrix& B) {
        if (A.r_ != B.r_ || A.c_ != B.c_) return false;
        for (std::size_t k = 0; k < A.a_.size(); ++k)
            if (!(A.a_[k] == B.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& A, const Matrix& B) { return !(A == B); }

    /** Maps every entry through f, producing a matrix over another type. */
    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
        Matrix<decltype(f(std::declval<T>()))> out(r_, c_);
        for (int i = 1; i <= r_; ++i)
            for (int j = 1; j <= c_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    int r_ = 0;
    int c_ = 0;
    std::vector<T> a_;
};

/**
 * Determinant by expansion over column subsets: row k is matched with one
 * unused column, and the partial signed sums are memoized per column mask.
 * Needs only ring operations, so it serves polynomials and polynomials in t.
 */
template <class T>
T det_expand(const Matrix<T>& A) {
    static_assert(Arith<T>::has_subtraction, "determinant needs subtraction");
    const int k = A.rows();
    if (k != A.cols()) fail("minor-shape", "determinant of a non-square matrix");
    if (k == 0) return Arith<T>::one();
    if (k > 20) fail("minor-shape", "determinant too large for subset expansion");
    std::vector<T> dp(std::size_t(1) << k, Arith<T>::zero());
    std::vector<char> live(std::size_t(1) << k, 0);
    dp[0] = Arith<T>::one();
    live[0] = 1;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (!live[mask]) continue;
        int row = __builtin_popcount(mask) + 1;
        if (row > k) continue;
        for (int c = 0; c < k; ++c) {
            if (mask & (1u << c)) continue;
            const T& entry = A(row, c + 1);
            if (Arith<T>::is_zero(entry)) continue;
            // Columns already used to the right of c are inversions.
            int inv = __builtin_popcount(mask >> (c + 1));
            T term = dp[mask] * entry;
            std::uint32_t next = mask | (1u << c);
            if (inv % 2 == 0) dp[next] = dp[next] + term;
            else dp[next] = dp[next] - term;
            live[next] = 1;
        }
    }
    return dp[(1u << k) - 1];
}

/** Fraction-free Bareiss elimination with row pivoting, exact over Q. */
inline Rational det_bareiss(Matrix<Rational> A) {
    const int k = A.rows();
    if (k != A.cols()) fail("minor-shape", "determinant of a non-square matrix");
    if (k == 0) return Rational(1);
    int sign = 1;
    Rational prev = 1;
    for (int p = 1; p <= k; ++p) {
        int piv = p;
        while (piv <= k && sgn(A(piv, p)) == 0) ++piv;
        if (piv > k) return Rational(0);
        if (piv != p) {
            for (int j = 1; j <= k; ++j) std::swap(A(p, j), A(piv, j));
            sign = -sign;
        }
        for (int i = p + 1; i <= k; ++i) {
            for (int j = p + 1; j <= k; ++j) {
                A(i, j) = (A(i, j) * A(p, p) - A(i, p) * A(p, j)) / prev;
            }
            A(i, p) = 0;
        }
        prev = A(p, p);
    }
    return sign > 0 ? Rational(A(k, k)) : Rational(-A(k, k));
}

/**
 * Determinant in any value domain with subtraction. Rational matrices larger
 * than 4x4 use Bareiss; everything else uses the subset expansion. The
 * min-plus semiring has no subtraction and is rejected.
 */
template <class T>
T det(const Matrix<T>& A) {
    if constexpr (!Arith<T>::has_subtraction) {
        fail("needs-subtraction", "determinants are not defined in min-plus mode");
    } else if constexpr (std::is_same_v<T, Rational>) {
        return A.rows() > 4 ? det_bareiss(A) : det_expand(A);
    } else {
        return det_expand(A);
    }
}

/** Delta_{I,J}(A): rows I, columns J, both taken in increasing order. */
template <class T>
T minor(const Matrix<T>& A, IndexSet I, IndexSet J) {
    if (I.size() != J.size()) fail("minor-shape", "|I| != |J|");
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    for (int i : I)
        if (i < 1 || i > A.rows()) fail("minor-shape", "row index " + std::to_string(i) + " out of range");
    for (int j : J)
        if (j < 1 || j > A.cols()) fail("minor-shape", "column index " + std::to_string(j) + " out of range");
    if (std::adjacent_find(I.begin(), I.end()) != I.end() || std::adjacent_find(J.begin(), J.end()) != J.end())
        fail("minor-shape", "repeated index");
    return det(A.submatrix(I, J));
}

/** Flag minor Delta_{[i,j],[1,j-i+1]}; the empty interval gives 1. */
template <class T>
T flag_minor(const Matrix<T>& A, int i, int j) {
    if (j < i) return Arith<T>::one();
    return minor(A, interval(i, j), interval(1, j - i + 1));
}

/** Unipotent x_i(a) = I + a E_{i,i+1} of size n. */
template <class T>
Matrix<T> unipotent(int n, int i, const T& a) {
    Matrix<T> u = Matrix<T>::identity(n);
    u(i, i + 1) = a;
    return u;
}

template <class T>
std::string matrix_str(const Matrix<T>& A) {
    std::ostringstream os;
    for (int i = 1; i <= A.rows(); ++i) {
        os << "[";
        for (int j = 1; j <= A.cols(); ++j) os << (j > 1 ? ", " : "") << A(i, j);
        os << "]\n";
    }
    return os.str();
}

}  // namespace lsym
