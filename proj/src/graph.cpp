#include "riglab/graph.hpp"

#include <algorithm>

#include "riglab/errors.hpp"

namespace riglab {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        int bit_row_cap) {
    if (n < 0) throw invalid_parameter("node count must be >= 0");
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw invalid_parameter("edge endpoint out of range");
        if (a == b) throw invalid_parameter("self-loops are not allowed");
        canon.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(canon.size());
    std::vector<int> deg(n, 0);
    for (auto [a, b] : canon) {
        ++deg[a];
        ++deg[b];
    }
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(static_cast<std::size_t>(2) * canon.size());
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [a, b] : canon) {
        g.adj_[cursor[a]++] = b;
        g.adj_[cursor[b]++] = a;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);

    if (n <= bit_row_cap) {
        g.rows_.assign(n, DynBitset(n));
        for (auto [a, b] : canon) {
            g.rows_[a].set(b);
            g.rows_[b].set(a);
        }
    }
    return g;
}

Graph Graph::complete(int n, int bit_row_cap) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, edges, bit_row_cap);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (!rows_.empty()) return rows_[u].test(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < n_; ++v)
        for (int w : neighbors(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

}  // namespace riglab
