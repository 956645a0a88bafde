/**
 * @file comb.cpp
 * @brief Insertion algorithms, the GT bijection, charge, and the min-plus
 *        bridges from the geometric formulas back to tableaux.
 */
#include "lsym/comb.hpp"

#include <algorithm>

#include "lsym/energy.hpp"

namespace lsym {

int row_insert(Tableau& T, int v) {
    for (std::size_t r = 0;; ++r) {
        if (r == T.size()) {
            T.push_back({v});
            return static_cast<int>(r);
        }
        auto& row = T[r];
        auto it = std::upper_bound(row.begin(), row.end(), v);
        if (it == row.end()) {
            row.push_back(v);
            return static_cast<int>(r);
        }
        std::swap(*it, v);
    }
}

int column_insert(Tableau& T, int v) {
    for (std::size_t c = 0;; ++c) {
        // Column c consists of T[r][c] for the rows long enough.
        std::size_t r = 0;
        while (r < T.size() && T[r].size() > c && T[r][c] < v) ++r;
        if (r == T.size() || T[r].size() <= c) {
            if (r == T.size()) T.push_back({});
            T[r].push_back(v);
            return static_cast<int>(r);
        }
        std::swap(T[r][c], v);
    }
}

TableauPair rsk(const IntMatrix& a) {
    TableauPair out;
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) {
            if (a(i, j) < 0) fail("bad-input", "negative matrix entry");
            for (long t = 0; t < a(i, j); ++t) {
                int r = row_insert(out.P, j);
                if (r == static_cast<int>(out.Q.size())) out.Q.push_back({});
                out.Q[r].push_back(i);
            }
        }
    return out;
}

TableauPair burge(const IntMatrix& a) {
    TableauPair out;
    const int m = a.rows();
    for (int i = m; i >= 1; --i)
        for (int j = a.cols(); j >= 1; --j) {
            if (a(i, j) < 0) fail("bad-input", "negative matrix entry");
            for (long t = 0; t < a(i, j); ++t) {
                int r = column_insert(out.P, j);
                if (r == static_cast<int>(out.Q.size())) out.Q.push_back({});
                out.Q[r].push_back(m + 1 - i);
            }
        }
    return out;
}

std::vector<int> tableau_shape(const Tableau& T) {
    std::vector<int> s;
    for (const auto& row : T) s.push_back(static_cast<int>(row.size()));
    return s;
}

bool is_semistandard(const Tableau& T) {
    for (std::size_t r = 0; r < T.size(); ++r) {
        if (T[r].empty()) return false;
        if (r > 0 && T[r].size() > T[r - 1].size()) return false;
        for (std::size_t c = 0; c < T[r].size(); ++c) {
            if (T[r][c] < 1) return false;
            if (c > 0 && T[r][c] < T[r][c - 1]) return false;
            if (r > 0 && T[r][c] <= T[r - 1][c]) return false;
        }
    }
    return true;
}

GTPattern<long> gt_of_tableau(const Tableau& T, int height, int width) {
    if (!is_semistandard(T)) fail("bad-input", "not a semistandard tableau");
    GTPattern<long> g(width, height);
    if (static_cast<int>(T.size()) > g.p()) fail("bad-input", "tableau has too many rows for the pattern width");
    for (int i = 1; i <= g.p(); ++i)
        for (int j = i; j <= height; ++j) {
            long cnt = 0;
            if (i <= static_cast<int>(T.size()))
                for (int v : T[i - 1]) {
                    if (v > height) fail("bad-input", "tableau entry exceeds the pattern height");
                    if (v <= j) ++cnt;
                }
            g(i, j) = cnt;
        }
    return g;
}

Tableau tableau_of_gt(const GTPattern<long>& g) {
    for (const auto& [k, v] : g.z)
        if (v < 0) fail("bad-input", "negative GT entry");
    // Interlacing between consecutive rows: z_{i+1,j+1} <= z_{i,j} <= z_{i,j+1}.
    for (int i = 1; i <= g.p(); ++i)
        for (int j = i; j < g.n; ++j)
            if (g(i, j) > g(i, j + 1) || (g.contains(i + 1, j + 1) && g(i + 1, j + 1) > g(i, j)))
                fail("bad-input", "GT interlacing fails");
    Tableau T;
    for (int i = 1; i <= g.p(); ++i) {
        std::vector<int> row;
        long prev = 0;
        for (int j = i; j <= g.n; ++j) {
            for (long t = prev; t < g(i, j); ++t) row.push_back(j);
            prev = g(i, j);
        }
        if (row.empty()) break;
        T.push_back(std::move(row));
    }
    for (std::size_t r = T.size(); r < static_cast<std::size_t>(g.p()); ++r)
        if (g(static_cast<int>(r) + 1, g.n) != 0) fail("bad-input", "GT shape is not a partition");
    if (!is_semistandard(T)) fail("bad-input", "GT pattern does not give a semistandard tableau");
    return T;
}

std::vector<int> tableau_content(const Tableau& T) {
    std::vector<int> c;
    for (const auto& row : T)
        for (int v : row) {
            if (v > static_cast<int>(c.size())) c.resize(v, 0);
            ++c[v - 1];
        }
    return c;
}

namespace {

void require_partition_content(const std::vector<int>& content) {
    for (std::size_t k = 1; k < content.size(); ++k)
        if (content[k] > content[k - 1]) fail("non-partition-content", "cocharge needs weakly decreasing multiplicities");
}

}  // namespace

long charge(const Tableau& T) {
    auto content = tableau_content(T);
    require_partition_content(content);
    std::vector<int> word;
    for (auto it = T.rbegin(); it != T.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
    std::vector<bool> used(word.size(), false);
    std::size_t left = word.size();
    long total = 0;
    const int L = static_cast<int>(word.size());
    while (left > 0) {
        // Letters 1..top are all still present because the remaining content is a partition.
        int top = 0;
        for (int p = 0; p < L; ++p)
            if (!used[p]) top = std::max(top, word[p]);
        // Scan right to left cyclically; the index grows when the next letter is found after wrapping.
        int pos = L;
        long index = 0;
        for (int letter = 1; letter <= top; ++letter) {
            int found = -1;
            bool wrapped = false;
            for (int step = 1; step <= L; ++step) {
                int q = pos - step;
                if (q < 0) {
                    q += L;
                    wrapped = true;
                }
                if (!used[q] && word[q] == letter) {
                    found = q;
                    break;
                }
            }
            if (found < 0) fail("non-partition-content", "missing letter while extracting a standard subword");
            if (letter > 1 && wrapped) ++index;
            total += index;
            used[found] = true;
            --left;
            pos = found;
        }
    }
    return total;
}

long cocharge(const Tableau& T) {
    auto content = tableau_content(T);
    require_partition_content(content);
    long n_mu = 0;
    for (std::size_t i = 0; i < content.size(); ++i) n_mu += static_cast<long>(i) * content[i];
    return n_mu - charge(T);
}

Matrix<Trop> trop_matrix(const IntMatrix& a) {
    Matrix<Trop> t(a.rows(), a.cols());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) t(i, j) = Trop(a(i, j));
    return t;
}

namespace {

GTPattern<long> to_int(const GTPattern<Trop>& z) {
    GTPattern<long> g(z.m, z.n);
    for (const auto& [k, v] : z.z) g.z[k] = v.value();
    return g;
}

}  // namespace

std::pair<GTPattern<long>, GTPattern<long>> trop_grsk(const IntMatrix& a) {
    auto pq = grsk(trop_matrix(a));
    return {to_int(pq.P), to_int(pq.Q)};
}

long trop_energy(const IntMatrix& a) { return energy_D(trop_matrix(a)).value(); }

long trop_energy_product(const IntMatrix& a) { return energy_product(trop_matrix(a)).value(); }

GTPattern<Trop> trop_pattern(const GTPattern<long>& g) {
    GTPattern<Trop> z(g.n, g.n);
    for (auto& [k, v] : z.z) {
        auto it = g.z.find(k);
        v = Trop(it == g.z.end() ? 0 : it->second);
    }
    return z;
}

long trop_cocharge(const GTPattern<long>& g) { return geometric_cocharge(trop_pattern(g)).value(); }

long trop_cocharge_kb(const GTPattern<long>& g) {
    auto z = trop_pattern(g);
    Trop out(0);
    for (int k = 2; k <= z.n; ++k) out = out * kb_sigma(z, k);
    return out.value();
}

std::string tableau_str(const Tableau& T) {
    std::string s;
    for (std::size_t r = 0; r < T.size(); ++r) {
        if (r) s += "/";
        for (int v : T[r]) s += std::to_string(v);
    }
    return s;
}

}  // namespace lsym
