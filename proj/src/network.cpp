#include "lsym/network.hpp"

#include <set>

namespace lsym {

namespace {

void extend_families(int m, const IndexSet& J, std::vector<std::vector<int>>& rows, int col,
                     std::vector<HighwayFamily>& out) {
    const std::size_t k = rows.size();
    if (col > m) {
        for (std::size_t a = 0; a < k; ++a)
            if (rows[a].back() != J[a]) return;
        out.push_back(HighwayFamily{rows});
        return;
    }
    const int remaining = m - col;
    for (std::uint32_t mv = 0; mv < (1u << k); ++mv) {
        bool ok = true;
        std::vector<int> np(k);
        for (std::size_t a = 0; a < k && ok; ++a) {
            np[a] = rows[a].back() - ((mv >> a) & 1u);
            if (np[a] < J[a] || np[a] - J[a] > remaining) ok = false;
            if (a > 0 && np[a] <= np[a - 1]) ok = false;
        }
        if (!ok) continue;
        for (std::size_t a = 0; a < k; ++a) rows[a].push_back(np[a]);
        extend_families(m, J, rows, col + 1, out);
        for (std::size_t a = 0; a < k; ++a) rows[a].pop_back();
    }
}

std::set<Edge> window_edges(const StripWindow& win) {
    std::set<Edge> all;
    for (int r = win.lo; r <= win.hi; ++r)
        for (int c = 0; c <= win.m; ++c) all.insert(Edge{r, c, false});
    // Vertical edges (r, c) -> (r - 1, c), including one boundary edge
    // entering the bottom row and one leaving the top row in every column.
    for (int r = win.lo; r <= win.hi + 1; ++r)
        for (int c = 1; c <= win.m; ++c) all.insert(Edge{r, c, true});
    return all;
}

}  // namespace

std::vector<HighwayFamily> enumerate_highway_families(int m, IndexSet I, IndexSet J) {
    if (I.size() != J.size()) fail("minor-shape", "|I| != |J|");
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    std::vector<HighwayFamily> out;
    for (std::size_t a = 0; a < I.size(); ++a)
        if (I[a] < J[a] || I[a] - J[a] > m) return out;
    std::vector<std::vector<int>> rows;
    for (int i : I) rows.push_back({i});
    extend_families(m, J, rows, 1, out);
    return out;
}

std::vector<Edge> highway_edges(const HighwayFamily& F) {
    std::vector<Edge> edges;
    for (const auto& path : F.rows) {
        const int m = static_cast<int>(path.size()) - 1;
        edges.push_back(Edge{path[0], 0, false});
        for (int c = 1; c <= m; ++c) {
            if (path[c] != path[c - 1]) edges.push_back(Edge{path[c - 1], c, true});
            edges.push_back(Edge{path[c], c, false});
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<UnderwayPath> complement(const HighwayFamily& F, const StripWindow& win) {
    std::set<Edge> free = window_edges(win);
    for (const Edge& e : highway_edges(F)) {
        if (!free.erase(e)) fail("bad-input", "highway family leaves the window or reuses an edge");
    }
    std::vector<UnderwayPath> paths;
    auto take = [&](const Edge& e) {
        auto it = free.find(e);
        if (it == free.end()) return false;
        free.erase(it);
        return true;
    };
    // Start points: left boundary edges and bottom boundary edges.
    std::vector<Edge> starts;
    for (int r = win.lo; r <= win.hi; ++r) starts.push_back(Edge{r, 0, false});
    for (int c = 1; c <= win.m; ++c) starts.push_back(Edge{win.hi + 1, c, true});
    for (const Edge& s : starts) {
        if (!take(s)) continue;
        UnderwayPath p;
        Edge e = s;
        if (e.vertical) p.vertices.push_back({e.row, e.col});
        else p.vertices.push_back({e.row, e.col});
        while (true) {
            int r = e.vertical ? e.row - 1 : e.row;
            int c = e.vertical ? e.col : e.col + 1;
            p.vertices.push_back({r, c});
            if (c == win.m + 1 || r == win.lo - 1) break;
            Edge up{r, c, true};
            Edge right{r, c, false};
            if (!e.vertical) {
                if (!take(up)) fail("bad-input", "complement is not an underway family");
                e = up;
            } else if (take(right)) {
                e = right;
            } else if (take(up)) {
                e = up;
            } else {
                fail("bad-input", "underway path is stuck");
            }
        }
        paths.push_back(std::move(p));
    }
    if (!free.empty()) fail("bad-input", "complement contains a closed loop");
    return paths;
}

HighwayFamily complement_back(const std::vector<UnderwayPath>& U, const StripWindow& win) {
    std::set<Edge> free = window_edges(win);
    for (const auto& p : U)
        for (std::size_t s = 0; s + 1 < p.vertices.size(); ++s) {
            auto [r0, c0] = p.vertices[s];
            auto [r1, c1] = p.vertices[s + 1];
            Edge e = (c0 == c1) ? Edge{r0, c0, true} : Edge{r0, c0, false};
            (void)r1;
            if (!free.erase(e)) fail("bad-input", "underway paths reuse an edge");
        }
    HighwayFamily F;
    for (int r = win.lo; r <= win.hi; ++r) {
        if (!free.count(Edge{r, 0, false})) continue;
        free.erase(Edge{r, 0, false});
        std::vector<int> rows{r};
        int row = r;
        for (int c = 1; c <= win.m; ++c) {
            // Entering (row, c) from the left: turn up if that edge is free.
            if (free.erase(Edge{row, c, true})) --row;
            if (!free.erase(Edge{row, c, false})) fail("bad-input", "highway path is stuck");
            rows.push_back(row);
        }
        F.rows.push_back(std::move(rows));
    }
    return F;
}

}  // namespace lsym
