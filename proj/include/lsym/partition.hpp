/**
 * @file partition.hpp
 * @brief Partitions, colored skew shapes and their corners.
 *
 * Cells are (row, column) pairs, 1-based, in English notation. The colored
 * skew shape (lambda/mu)^(r) with period n gives cell (i, j) the color
 * r + i - j reduced to [1, n], so the top-left cell of lambda has color r.
 */
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lsym/error.hpp"
#include "lsym/periodic.hpp"

namespace lsym {

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

    /** k copies of the part a. */
    static Partition rectangle(int a, int k) {
        if (a <= 0 || k <= 0) return Partition();
        return Partition(std::vector<int>(k, a));
    }

    void normalize() {
        for (int v : parts)
            if (v < 0) fail("bad-input", "negative part");
        for (std::size_t k = 1; k < parts.size(); ++k)
            if (parts[k] > parts[k - 1]) fail("bad-input", "parts must be weakly decreasing");
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    /** lambda_i, 1-based, zero beyond the length. */
    int operator[](int i) const {
        return (i >= 1 && i <= static_cast<int>(parts.size())) ? parts[i - 1] : 0;
    }
    int length() const { return static_cast<int>(parts.size()); }
    int size() const {
        int s = 0;
        for (int v : parts) s += v;
        return s;
    }
    bool empty() const { return parts.empty(); }

    Partition conjugate() const {
        std::vector<int> c(parts.empty() ? 0 : parts[0], 0);
        for (int v : parts)
            for (int j = 0; j < v; ++j) ++c[j];
        return Partition(std::move(c));
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu[i] > (*this)[i]) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + std::to_string(parts[k]);
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

/** Builds a partition from its conjugate. */
inline Partition from_conjugate(const std::vector<int>& conj) { return Partition(conj).conjugate(); }

/** All partitions inside the box with at most `rows` parts, each at most `cols`. */
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_part) -> void {
        out.push_back(Partition(cur));
        if (static_cast<int>(cur.size()) == rows) return;
        for (int v = 1; v <= max_part; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    return out;
}

/** All partitions of exactly `size` cells with parts at most max_part. */
inline std::vector<Partition> partitions_of(int size, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int bound) -> void {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int v = std::min(left, bound); v >= 1; --v) {
            cur.push_back(v);
            self(self, left - v, v);
            cur.pop_back();
        }
    };
    rec(rec, size, max_part);
    return out;
}

struct ColoredSkewShape {
    Partition lambda;
    Partition mu;
    int r = 1;
    int n = 1;

    ColoredSkewShape() = default;
    ColoredSkewShape(Partition l, Partition m, int r_, int n_) : lambda(std::move(l)), mu(std::move(m)), n(n_) {
        if (n < 1) fail("bad-input", "period must be positive");
        if (!lambda.contains(mu)) fail("bad-input", "mu is not contained in lambda");
        r = mod1(r_, n);
    }

    int color(int i, int j) const { return mod1(static_cast<long>(r) + i - j, n); }

    bool contains_cell(int i, int j) const { return i >= 1 && j > mu[i] && j <= lambda[i]; }

    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> c;
        for (int i = 1; i <= lambda.length(); ++i)
            for (int j = mu[i] + 1; j <= lambda[i]; ++j) c.emplace_back(i, j);
        return c;
    }

    int size() const { return lambda.size() - mu.size(); }

    /** Cells with neither the cell above nor the cell to the left in the shape. */
    std::vector<std::pair<int, int>> nw_corners() const {
        std::vector<std::pair<int, int>> out;
        for (auto [i, j] : cells())
            if (!contains_cell(i - 1, j) && !contains_cell(i, j - 1)) out.emplace_back(i, j);
        return out;
    }

    /** Cells with neither the cell below nor the cell to the right in the shape. */
    std::vector<std::pair<int, int>> se_corners() const {
        std::vector<std::pair<int, int>> out;
        for (auto [i, j] : cells())
            if (!contains_cell(i + 1, j) && !contains_cell(i, j + 1)) out.emplace_back(i, j);
        return out;
    }

    std::string str() const {
        return lambda.str() + "/" + mu.str() + "^(" + std::to_string(r) + ") n=" + std::to_string(n);
    }
};

/** Every skew shape lambda/mu with lambda inside the rows x cols box, every color. */
inline std::vector<ColoredSkewShape> skew_corpus(int rows, int cols, int n) {
    std::vector<ColoredSkewShape> out;
    auto box = partitions_in_box(rows, cols);
    for (const auto& lam : box)
        for (const auto& mu : box)
            if (lam.contains(mu))
                for (int r = 1; r <= n; ++r) out.emplace_back(lam, mu, r, n);
    return out;
}

}  // namespace lsym
