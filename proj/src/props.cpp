#include "riglab/props.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "riglab/errors.hpp"

namespace riglab {

namespace {

// --- connectivity helpers ---------------------------------------------------

std::vector<int> bfs_component(const Graph& g, int start) {
    std::vector<int> seen(g.node_count(), 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : g.neighbors(queue[qi]))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    return seen;
}

// Connectivity and articulation-point test with one optional vertex removed.
// Reusable buffers make the all-vertices scan in the 3-connectivity path cheap.
class ArticulationChecker {
  public:
    explicit ArticulationChecker(int n)
        : disc_(n, -1), low_(n, 0), parent_(n, -1), idx_(n, 0), stack_() {
        stack_.reserve(n);
    }

    // True iff g minus `excluded` (pass -1 for none) has >= 3 nodes, is
    // connected, and has no articulation point.
    bool biconnected(const Graph& g, int excluded) {
        const int n = g.node_count();
        const int active = n - (excluded >= 0 ? 1 : 0);
        if (active < 3) return false;
        std::fill(disc_.begin(), disc_.end(), -1);
        std::fill(idx_.begin(), idx_.end(), 0);
        int root = (excluded == 0) ? 1 : 0;
        int timer = 0, root_children = 0;
        stack_.clear();
        stack_.push_back(root);
        disc_[root] = low_[root] = timer++;
        parent_[root] = -1;
        while (!stack_.empty()) {
            int v = stack_.back();
            auto nb = g.neighbors(v);
            if (idx_[v] < static_cast<int>(nb.size())) {
                int w = nb[idx_[v]++];
                if (w == excluded || w == parent_[v]) continue;
                if (disc_[w] == -1) {
                    parent_[w] = v;
                    if (v == root) ++root_children;
                    disc_[w] = low_[w] = timer++;
                    stack_.push_back(w);
                } else {
                    low_[v] = std::min(low_[v], disc_[w]);
                }
            } else {
                stack_.pop_back();
                int p = parent_[v];
                if (p >= 0) {
                    low_[p] = std::min(low_[p], low_[v]);
                    if (p != root && low_[v] >= disc_[p]) return false;
                }
            }
        }
        if (timer != active) return false;  // disconnected
        return root_children <= 1;
    }

  private:
    std::vector<int> disc_, low_, parent_, idx_, stack_;
};

// --- node-splitting max-flow (Dinic, unit capacities) -----------------------
//
// Vertex v becomes in(v) = 2v -> out(v) = 2v+1 with capacity 1; each
// undirected edge u~v becomes out(u)->in(v) and out(v)->in(u), capacity 1.
// The flow value between out(s) and in(t) for non-adjacent s, t equals the
// number of internally node-disjoint s-t paths.
class SplitFlowNet {
  public:
    explicit SplitFlowNet(const Graph& g) : n_(g.node_count()) {
        const int nodes = 2 * n_;
        head_.assign(nodes, -1);
        const std::size_t arcs =
            2 * (static_cast<std::size_t>(n_) + 2 * static_cast<std::size_t>(g.edge_count()));
        to_.reserve(arcs);
        nxt_.reserve(arcs);
        cap0_.reserve(arcs);
        for (int v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v)) add_arc(out(v), in(w), 1);
        cap_ = cap0_;
        level_.assign(nodes, -1);
        iter_.assign(nodes, -1);
    }

    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    // Max flow from out(s) to in(t), stopping once `limit` is reached.
    int maxflow(int s, int t, int limit) {
        cap_ = cap0_;
        src_ = out(s);
        snk_ = in(t);
        int flow = 0;
        while (flow < limit && bfs()) {
            iter_ = head_;
            while (flow < limit) {
                int pushed = dfs(src_, limit - flow);
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }

    // After a maxflow call: vertices v with in(v) residual-reachable from the
    // source but out(v) not. These form a minimum s-t vertex cut.
    std::vector<int> cut_vertices() const {
        std::vector<char> reach(head_.size(), 0);
        std::vector<int> queue{src_};
        reach[src_] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int e = head_[v]; e != -1; e = nxt_[e])
                if (cap_[e] > 0 && !reach[to_[e]]) {
                    reach[to_[e]] = 1;
                    queue.push_back(to_[e]);
                }
        }
        std::vector<int> cut;
        for (int v = 0; v < n_; ++v)
            if (reach[in(v)] && !reach[out(v)]) cut.push_back(v);
        return cut;
    }

  private:
    void add_arc(int a, int b, int c) {
        to_.push_back(b);
        nxt_.push_back(head_[a]);
        cap0_.push_back(c);
        head_[a] = static_cast<int>(to_.size()) - 1;
        to_.push_back(a);
        nxt_.push_back(head_[b]);
        cap0_.push_back(0);
        head_[b] = static_cast<int>(to_.size()) - 1;
    }

    bool bfs() {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue{src_};
        level_[src_] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int e = head_[v]; e != -1; e = nxt_[e])
                if (cap_[e] > 0 && level_[to_[e]] == -1) {
                    level_[to_[e]] = level_[v] + 1;
                    queue.push_back(to_[e]);
                }
        }
        return level_[snk_] != -1;
    }

    int dfs(int v, int budget) {
        if (v == snk_) return budget;
        for (int& e = iter_[v]; e != -1; e = nxt_[e]) {
            int w = to_[e];
            if (cap_[e] > 0 && level_[w] == level_[v] + 1) {
                int got = dfs(w, std::min(budget, cap_[e]));
                if (got > 0) {
                    cap_[e] -= got;
                    cap_[e ^ 1] += got;
                    return got;
                }
            }
        }
        return 0;
    }

    int n_;
    int src_ = 0, snk_ = 0;
    std::vector<int> head_, to_, nxt_, cap_, cap0_, level_, iter_;
};

int argmin_degree(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.node_count(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

// The Even-Tarjan pair family rooted at a minimum-degree vertex. Every
// minimum vertex cut separates some pair in the family.
template <typename Visit>
void for_each_cut_pair(const Graph& g, Visit&& visit) {
    const int s = argmin_degree(g);
    for (int t = 0; t < g.node_count(); ++t) {
        if (t == s || g.has_edge(s, t)) continue;
        if (!visit(s, t)) return;
    }
    auto nb = g.neighbors(s);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (g.has_edge(nb[i], nb[j])) continue;
            if (!visit(nb[i], nb[j])) return;
        }
}

bool flow_at_least_k(const Graph& g, int k) {
    SplitFlowNet net(g);
    bool ok = true;
    for_each_cut_pair(g, [&](int a, int b) {
        if (net.maxflow(a, b, k) < k) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

// --- robustness internals ----------------------------------------------------
//
// A set S is k-deficient when every member has < k neighbors outside S. The
// graph fails k-robustness exactly when two disjoint nonempty k-deficient
// sets exist.

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.node_count(), 0);
    for (int v = 0; v < g.node_count(); ++v)
        for (int w : g.neighbors(v)) adj[v] |= (1u << w);
    return adj;
}

std::vector<int> mask_to_nodes(std::uint32_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace

int min_degree(const Graph& g) {
    if (g.node_count() == 0) throw empty_graph_error("min_degree of empty graph");
    int best = g.degree(0);
    for (int v = 1; v < g.node_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g) {
    if (g.node_count() <= 1) return true;
    auto seen = bfs_component(g, 0);
    return std::accumulate(seen.begin(), seen.end(), 0) == g.node_count();
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw invalid_parameter("k must be >= 1");
    const int n = g.node_count();
    if (n == 0) throw empty_graph_error("connectivity of empty graph");
    if (n < k + 1) return false;
    if (g.is_complete()) return true;
    if (min_degree(g) < k) return false;
    switch (k) {
        case 1:
            return is_connected(g);
        case 2:
            return ArticulationChecker(n).biconnected(g, -1);
        case 3: {
            // No cut set of size <= 2 iff every one-vertex deletion leaves a
            // graph that is connected with no articulation point.
            ArticulationChecker checker(n);
            for (int v = 0; v < n; ++v)
                if (!checker.biconnected(g, v)) return false;
            return true;
        }
        default:
            return flow_at_least_k(g, k);
    }
}

int vertex_connectivity(const Graph& g) {
    const int n = g.node_count();
    if (n == 0) throw empty_graph_error("connectivity of empty graph");
    if (n == 1) return 0;
    if (g.is_complete()) return n - 1;
    int best = n - 1;
    SplitFlowNet net(g);
    for_each_cut_pair(g, [&](int a, int b) {
        best = std::min(best, net.maxflow(a, b, best));
        return best > 0;
    });
    return best;
}

ConnectivityVerdict connectivity_verdict(const Graph& g, int k) {
    ConnectivityVerdict verdict;
    verdict.k = k;
    verdict.holds = is_k_connected(g, k);
    if (verdict.holds) return verdict;

    const int n = g.node_count();
    if (n < k + 1) return verdict;  // no separator exists for trivial failures

    if (!is_connected(g)) {
        auto seen = bfs_component(g, 0);
        for (int v = 0; v < n; ++v)
            if (!seen[v]) {
                verdict.has_pair = true;
                verdict.pair_u = 0;
                verdict.pair_v = v;
                return verdict;
            }
    }
    if (min_degree(g) < k) {
        int v = argmin_degree(g);
        auto nb = g.neighbors(v);
        verdict.separator.assign(nb.begin(), nb.end());
        return verdict;
    }
    SplitFlowNet net(g);
    for_each_cut_pair(g, [&](int a, int b) {
        if (net.maxflow(a, b, k) < k) {
            verdict.separator = net.cut_vertices();
            return false;
        }
        return true;
    });
    return verdict;
}

bool verify_robustness_violation(const Graph& g, int k, const std::vector<int>& a,
                                 const std::vector<int>& b) {
    if (a.empty() || b.empty()) return false;
    std::vector<char> in_a(g.node_count(), 0), in_b(g.node_count(), 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    for (int v : a)
        if (in_b[v]) return false;
    auto deficient = [&](const std::vector<int>& set, const std::vector<char>& in_set) {
        for (int v : set) {
            int outside = 0;
            for (int w : g.neighbors(v)) outside += !in_set[w];
            if (outside >= k) return false;
        }
        return true;
    };
    return deficient(a, in_a) && deficient(b, in_b);
}

RobustnessVerdict is_k_robust(const Graph& g, int k, int exhaustive_cap) {
    if (k < 1) throw invalid_parameter("k must be >= 1");
    const int n = g.node_count();
    if (n == 0) throw empty_graph_error("robustness of empty graph");
    if (n > exhaustive_cap || n > 24)
        throw capacity_error(
            "exact robustness limited to n <= " + std::to_string(std::min(exhaustive_cap, 24)) +
            "; use robustness_screen for larger graphs");

    RobustnessVerdict verdict;
    verdict.k = k;
    if (n == 1) {  // degenerate: reported not robust for every k >= 1
        verdict.holds = false;
        return verdict;
    }

    const auto adj = adjacency_masks(g);
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint8_t> deficient(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t rest = s;
        bool def = true;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(adj[v] & ~s) >= k) {
                def = false;
                break;
            }
        }
        deficient[s] = def;
    }
    // contains[s]: some nonempty deficient subset of s exists
    std::vector<std::uint8_t> contains(deficient);
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (contains[s]) continue;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (contains[s ^ (1u << v)]) {
                contains[s] = 1;
                break;
            }
        }
    }
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (!deficient[s] || !contains[full & ~s]) continue;
        // Shrink the complement side to a concrete deficient set.
        std::uint32_t m = full & ~s;
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            std::uint32_t rest = m;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (contains[m ^ (1u << v)]) {
                    m ^= (1u << v);
                    shrunk = true;
                    break;
                }
            }
        }
        std::uint32_t a = s, b = m;
        if (std::countr_zero(a) > std::countr_zero(b)) std::swap(a, b);
        verdict.holds = false;
        verdict.witness_a = mask_to_nodes(a);
        verdict.witness_b = mask_to_nodes(b);
        return verdict;
    }
    verdict.holds = true;
    return verdict;
}

int robustness(const Graph& g, int exhaustive_cap) {
    const int n = g.node_count();
    if (n == 0) throw empty_graph_error("robustness of empty graph");
    if (n == 1) return 0;
    int k = 0;
    while (k < n && is_k_robust(g, k + 1, exhaustive_cap).holds) ++k;
    return k;
}

ScreenResult robustness_screen(const Graph& g, int k, Seed seed, int budget) {
    if (k < 1) throw invalid_parameter("k must be >= 1");
    const int n = g.node_count();
    if (n == 0) throw empty_graph_error("robustness of empty graph");

    ScreenResult result;
    if (n == 1) {
        result.outcome = ScreenOutcome::certified_false;
        result.reason = "min_degree";
        return result;
    }
    if (min_degree(g) < k) {
        result.outcome = ScreenOutcome::certified_false;
        result.reason = "min_degree";
        return result;
    }
    if (!is_k_connected(g, k)) {
        result.outcome = ScreenOutcome::certified_false;
        result.reason = "not_k_connected";
        return result;
    }

    // Randomized falsification: grow candidate sets around low-degree picks
    // and re-verify any hit before reporting it.
    Rng rng = seed.rng();
    auto pick_low_degree = [&]() {
        int a = static_cast<int>(rng.next_below(n));
        int b = static_cast<int>(rng.next_below(n));
        return g.degree(a) <= g.degree(b) ? a : b;
    };
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int iter = 0; iter < budget; ++iter) {
        int u = pick_low_degree();
        int w = pick_low_degree();
        if (w == u) continue;
        std::vector<int> a{u}, b{w};
        for (int x : g.neighbors(u))
            if (x != w && rng.bernoulli(0.5)) a.push_back(x);
        std::fill(in_a.begin(), in_a.end(), 0);
        for (int x : a) in_a[x] = 1;
        for (int x : g.neighbors(w))
            if (!in_a[x] && rng.bernoulli(0.5)) b.push_back(x);
        if (verify_robustness_violation(g, k, a, b)) {
            result.outcome = ScreenOutcome::certified_false;
            result.reason = "witness_pair";
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            result.witness_a = std::move(a);
            result.witness_b = std::move(b);
            return result;
        }
    }
    result.outcome = ScreenOutcome::undecided;
    return result;
}

}  // namespace riglab
