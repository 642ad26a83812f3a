#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "riglab/bitset.hpp"

namespace riglab {

/// Immutable simple undirected graph on nodes 0..n-1. Adjacency is kept as
/// sorted neighbor lists (CSR) and, for n up to the bit-row cap, as bitset
/// rows for fast neighborhood intersection.
class Graph {
  public:
    static constexpr int kDefaultBitRowCap = 4096;

    Graph() = default;

    /// Builds from an edge list. Self-loops are rejected; duplicate and
    /// mirrored pairs collapse to one undirected edge.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            int bit_row_cap = kDefaultBitRowCap);

    /// Builds the complete graph on n nodes.
    static Graph complete(int n, int bit_row_cap = kDefaultBitRowCap);

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const std::int32_t> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    int degree(int v) const {
        return static_cast<int>(offsets_[v + 1] - offsets_[v]);
    }

    bool has_edge(int u, int v) const;

    bool has_bit_rows() const { return !rows_.empty(); }
    const DynBitset& row(int v) const { return rows_[v]; }

    /// True when every pair of distinct nodes is adjacent (n <= 1 counts).
    bool is_complete() const {
        return m_ == static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
    }

    /// Edges as (i, j) pairs with i < j, lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const;

  private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_{0};
    std::vector<std::int32_t> adj_;
    std::vector<DynBitset> rows_;
};

}  // namespace riglab
