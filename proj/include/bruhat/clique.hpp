#pragma once

// Exact maximum clique: branch and bound over bitset adjacency rows with
// greedy coloring upper bounds and a degeneracy vertex order, plus a
// Bron-Kerbosch enumerator for maximal cliques.  Budgets are nodes and wall
// clock; exceeding either flags the result non-optimal instead of lying.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace bruhat {

class BitGraph {
public:
    explicit BitGraph(int n = 0)
        : n_(n), words_((n + 63) / 64), adj_(std::size_t(n) * words_, 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    void add_edge(int u, int v) {
        adj_[std::size_t(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        adj_[std::size_t(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    bool has_edge(int u, int v) const {
        return (adj_[std::size_t(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }
    const std::uint64_t* row(int v) const { return &adj_[std::size_t(v) * words_]; }

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
        return d;
    }
    long long edge_count() const {
        long long total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> adj_;
};

struct CliqueBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

struct CliqueResult {
    int size = 0;
    std::vector<int> members;     // empty when the seed bound was never beaten
    bool optimal = true;
    std::uint64_t nodes = 0;
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline bool bits_test(const Bits& b, int v) { return (b[v / 64] >> (v % 64)) & 1u; }
inline void bits_reset(Bits& b, int v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
inline bool bits_empty(const Bits& b) {
    for (auto w : b)
        if (w) return false;
    return true;
}

// Smallest-last (degeneracy) order; search branches on high-degeneracy
// vertices last, which keeps the coloring bound tight.
inline std::vector<int> degeneracy_order(const BitGraph& g) {
    const int n = g.size();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        for (int v = 0; v < n; ++v)
            if (!removed[v] && g.has_edge(best, v)) --deg[v];
    }
    return order;
}

class MaxCliqueSearch {
public:
    MaxCliqueSearch(const BitGraph& g, CliqueBudget budget, std::atomic<int>& best)
        : g_(g), budget_(budget), best_(best),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(
                            std::min(budget.max_seconds, 1e9)))) {}

    std::uint64_t nodes = 0;
    bool truncated = false;
    std::vector<int> witness;

    void expand(std::vector<int>& clique, const Bits& cand) {
        if (truncated) return;
        if (++nodes > budget_.max_nodes ||
            (nodes % 1024 == 0 && std::chrono::steady_clock::now() > deadline_)) {
            truncated = true;
            return;
        }
        // greedy coloring of the candidates; color = clique-size upper bound
        std::vector<int> verts, colors;
        Bits uncolored = cand;
        int color = 0;
        while (!bits_empty(uncolored)) {
            ++color;
            Bits cls = uncolored;
            while (!bits_empty(cls)) {
                int v = -1;
                for (std::size_t w = 0; w < cls.size(); ++w)
                    if (cls[w]) {
                        v = int(w * 64 + std::countr_zero(cls[w]));
                        break;
                    }
                bits_reset(cls, v);
                bits_reset(uncolored, v);
                for (std::size_t w = 0; w < cls.size(); ++w)
                    cls[w] &= ~g_.row(v)[w];
                verts.push_back(v);
                colors.push_back(color);
            }
        }
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(clique.size()) + colors[i] <= best_.load()) return;
            const int v = verts[i];
            clique.push_back(v);
            Bits next(g_.words(), 0);
            for (int j = 0; j < i; ++j)
                if (g_.has_edge(v, verts[j])) next[verts[j] / 64] |= std::uint64_t{1} << (verts[j] % 64);
            if (bits_empty(next)) {
                int sz = static_cast<int>(clique.size());
                int prev = best_.load();
                while (sz > prev && !best_.compare_exchange_weak(prev, sz)) {
                }
                if (sz > prev) witness = clique;
            } else {
                expand(clique, next);
            }
            clique.pop_back();
            if (truncated) return;
        }
    }

private:
    const BitGraph& g_;
    CliqueBudget budget_;
    std::atomic<int>& best_;
    std::chrono::steady_clock::time_point deadline_;
};

} // namespace detail

// Exact maximum clique.  `seed` is a known lower bound (e.g. a star
// construction); the returned members are empty iff no clique larger than the
// seed exists.  With threads > 1 the root branches run concurrently and share
// the monotone best-so-far bound, so the optimum is thread-count independent.
inline CliqueResult max_clique(const BitGraph& g, CliqueBudget budget = {},
                               int seed = 0, int threads = 1) {
    const int n = g.size();
    CliqueResult result;
    result.size = seed;
    std::atomic<int> best{seed};
    if (n == 0) return result;

    const std::vector<int> order = detail::degeneracy_order(g);

    if (threads <= 1) {
        detail::MaxCliqueSearch search(g, budget, best);
        detail::Bits all(g.words(), 0);
        for (int v : order) all[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<int> clique;
        search.expand(clique, all);
        result.size = best.load();
        result.members = search.witness;
        result.optimal = !search.truncated;
        result.nodes = search.nodes;
        return result;
    }

    // one root task per vertex: cliques whose earliest vertex (in the
    // degeneracy order) is order[i], i.e. candidates restricted to later ones
    std::atomic<std::size_t> next_task{0};
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> truncated{false};
    std::mutex witness_mu;
    std::vector<int> global_witness;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next_task.fetch_add(1);
            if (i >= order.size()) return;
            detail::MaxCliqueSearch search(g, budget, best);
            const int v = order[i];
            detail::Bits cand(g.words(), 0);
            for (std::size_t j = i + 1; j < order.size(); ++j)
                if (g.has_edge(v, order[j]))
                    cand[order[j] / 64] |= std::uint64_t{1} << (order[j] % 64);
            std::vector<int> clique{v};
            if (detail::bits_empty(cand)) {
                int prev = best.load();
                while (1 > prev && !best.compare_exchange_weak(prev, 1)) {
                }
                if (1 > prev) {
                    std::lock_guard<std::mutex> lk(witness_mu);
                    global_witness = clique;
                }
            } else {
                search.expand(clique, cand);
            }
            total_nodes += search.nodes + 1;
            if (search.truncated) truncated = true;
            if (!search.witness.empty()) {
                std::lock_guard<std::mutex> lk(witness_mu);
                if (static_cast<int>(search.witness.size()) >
                    static_cast<int>(global_witness.size()))
                    global_witness = search.witness;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    result.size = best.load();
    result.members = global_witness;
    result.optimal = !truncated.load();
    result.nodes = total_nodes.load();
    return result;
}

// Bron-Kerbosch with pivoting; calls fn for every maximal clique.
inline void for_each_maximal_clique(const BitGraph& g,
                                    const std::function<void(const std::vector<int>&)>& fn) {
    detail::Bits P(g.words(), 0), X(g.words(), 0);
    for (int v = 0; v < g.size(); ++v) P[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<int> R;
    auto rec = [&](auto&& self, detail::Bits P0, detail::Bits X0) -> void {
        if (detail::bits_empty(P0) && detail::bits_empty(X0)) {
            fn(R);
            return;
        }
        // pivot: maximize |P & N(u)|
        int pivot = -1, best_cover = -1;
        for (int u = 0; u < g.size(); ++u) {
            if (!detail::bits_test(P0, u) && !detail::bits_test(X0, u)) continue;
            int cover = 0;
            for (int w = 0; w < g.words(); ++w)
                cover += std::popcount(P0[w] & g.row(u)[w]);
            if (cover > best_cover) {
                best_cover = cover;
                pivot = u;
            }
        }
        for (int v = 0; v < g.size(); ++v) {
            if (!detail::bits_test(P0, v) || g.has_edge(pivot, v)) continue;
            detail::Bits P1(g.words()), X1(g.words());
            for (int w = 0; w < g.words(); ++w) {
                P1[w] = P0[w] & g.row(v)[w];
                X1[w] = X0[w] & g.row(v)[w];
            }
            R.push_back(v);
            self(self, std::move(P1), std::move(X1));
            R.pop_back();
            detail::bits_reset(P0, v);
            X0[v / 64] |= std::uint64_t{1} << (v % 64);
        }
    };
    rec(rec, std::move(P), std::move(X));
}

} // namespace bruhat
