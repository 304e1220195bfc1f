#pragma once

// Exact maximum t-intersecting family computation: level-restricted and
// whole-lattice searches on Sym(n), plus the generic set-system optimizers
// (separated-set EKR, Hilton-Milner side constraint) used as oracles.

#include "bruhat/clique.hpp"
#include "bruhat/descent_systems.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/genfun.hpp"
#include "bruhat/levels.hpp"
#include "bruhat/permutation.hpp"

#include <chrono>
#include <optional>
#include <string>

namespace bruhat {

inline constexpr int kMaxLevelVertices = 5000;

struct SearchOptions {
    CliqueBudget budget;
    int threads = 1;
    bool canonical_witness = false; // re-search single threaded in fixed order
};

struct SearchOutcome {
    std::string problem;
    long long optimum = 0;
    std::optional<PermFamily> perm_witness;
    std::optional<SetSystem> set_witness;
    bool is_star = false;  // witness is the upset of one rank-t / fixed-point element
    bool optimal = true;   // false when a budget truncated the search
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

// Intersection graph of a set of permutations: edge iff rank(u ^ v) >= t.
// For t = 1 the meet-rank adjacency must coincide with inverse-descent-set
// intersection (Claim-level identity); the builder checks this on every edge
// and refuses to continue on a mismatch.
struct IntersectionGraph {
    std::vector<Permutation> vertices;
    BitGraph adjacency{0};
    int t = 1;
};

inline IntersectionGraph build_intersection_graph(std::vector<Permutation> vertices,
                                                  int t, int threads = 1) {
    IntersectionGraph g;
    g.t = t;
    g.vertices = std::move(vertices);
    const int v = static_cast<int>(g.vertices.size());
    g.adjacency = BitGraph(v);
    std::atomic<bool> mismatch{false};
    auto fill_rows = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            for (int j = i + 1; j < v; ++j) {
                const bool edge = meet(g.vertices[i], g.vertices[j]).rank() >= t;
                if (t == 1) {
                    const bool id_edge = (g.vertices[i].inverse_descents().mask &
                                          g.vertices[j].inverse_descents().mask) != 0;
                    if (edge != id_edge) mismatch = true;
                }
                if (edge) g.adjacency.add_edge(i, j);
            }
    };
    if (threads <= 1 || v < 64) {
        fill_rows(0, v);
    } else {
        // add_edge(i,j) with i<j touches rows i and j; give each worker a
        // disjoint row stripe and set only the (i, j>i) direction, then mirror.
        std::vector<std::vector<std::pair<int, int>>> edges(threads);
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w]() {
                for (int i = w; i < v; i += threads)
                    for (int j = i + 1; j < v; ++j) {
                        const bool edge = meet(g.vertices[i], g.vertices[j]).rank() >= t;
                        if (t == 1) {
                            const bool id_edge = (g.vertices[i].inverse_descents().mask &
                                                  g.vertices[j].inverse_descents().mask) != 0;
                            if (edge != id_edge) mismatch = true;
                        }
                        if (edge) edges[w].emplace_back(i, j);
                    }
            });
        for (auto& th : pool) th.join();
        for (const auto& chunk : edges)
            for (auto [i, j] : chunk) g.adjacency.add_edge(i, j);
    }
    if (mismatch)
        throw std::logic_error("meet-rank and ID-intersection adjacency disagree at t=1");
    return g;
}

namespace detail {

inline void revalidate_perm_witness(const PermFamily& fam, int t) {
    if (!is_t_intersecting(fam, t))
        throw std::logic_error("search returned a witness that is not t-intersecting");
}

// Star analysis at a level: sizes of up(c) of every rank-t center c within
// the level; ties broken toward the lexicographically first center.
struct LevelStar {
    Permutation center;
    long long size = 0;
    PermFamily members;
};

inline LevelStar best_level_star(int n, int t,
                                 const std::vector<Permutation>& level) {
    LevelStar best;
    for (const Permutation& c : enumerate_level(n, t).items) {
        long long sz = 0;
        for (const Permutation& q : level)
            if (leq(c, q)) ++sz;
        if (sz > best.size) {
            best.size = sz;
            best.center = c;
        }
    }
    best.members.n = n;
    for (const Permutation& q : level)
        if (leq(best.center, q)) best.members.members.push_back(q);
    return best;
}

inline PermFamily family_from_clique(int n, const IntersectionGraph& g,
                                     const std::vector<int>& members) {
    PermFamily fam{n, {}};
    for (int idx : members) fam.members.push_back(g.vertices[idx]);
    fam.canonicalize();
    return fam;
}

} // namespace detail

// f_{t,r}(n): exact maximum t-intersecting family inside B_r(n).
inline SearchOutcome max_intersecting_level(int n, int r, int t,
                                            const SearchOptions& opts = {}) {
    if (t < 1 || t > r || r > pair_count(n))
        throw UsageError("max_intersecting_level requires 1 <= t <= r <= C(n,2)");
    detail::Stopwatch clock;
    LevelEnumeration level = enumerate_level(n, r);
    if (static_cast<int>(level.items.size()) > kMaxLevelVertices)
        throw BudgetError("level has more vertices than the search budget allows");

    SearchOutcome out;
    out.problem = "max-intersecting-level";
    detail::LevelStar star = detail::best_level_star(n, t, level.items);
    IntersectionGraph graph = build_intersection_graph(level.items, t, opts.threads);
    CliqueResult clique = max_clique(graph.adjacency, opts.budget,
                                     static_cast<int>(star.size), opts.threads);
    if (opts.canonical_witness && !clique.members.empty()) {
        CliqueBudget unbounded;
        clique.members =
            max_clique(graph.adjacency, unbounded, clique.size - 1, 1).members;
    }
    out.optimum = clique.size;
    out.nodes = clique.nodes;
    out.optimal = clique.optimal;
    if (clique.members.empty()) {
        // nothing beat the star seed
        out.is_star = true;
        out.perm_witness = star.members;
    } else {
        out.is_star = false;
        out.perm_witness = detail::family_from_clique(n, graph, clique.members);
    }
    detail::revalidate_perm_witness(*out.perm_witness, t);
    if (out.perm_witness->size() != out.optimum && out.optimal)
        throw std::logic_error("witness size does not match the optimum");
    out.elapsed_ms = clock.ms();
    return out;
}

// f_t(n) over the whole lattice.  t = 1 uses the complement pairing bound
// plus the star construction (n <= 8); t >= 2 runs the exact clique search
// over all permutations of rank >= t (n <= 6).
inline SearchOutcome max_intersecting_full(int n, int t, const SearchOptions& opts = {}) {
    if (t < 1 || t > pair_count(n)) throw UsageError("max_intersecting_full: bad t");
    detail::Stopwatch clock;
    SearchOutcome out;
    out.problem = "max-intersecting-full";
    if (t == 1) {
        if (n < 2 || n > kFullScanMaxN)
            throw BudgetError("t=1 pairing verification supports 2 <= n <= 8");
        // at most one of each pair {p, reverse_complement(p)} can appear
        long long total = 0;
        PermFamily star{n, {}};
        const Permutation g1 = pi_minimal(GeneratorSet::of(n, {1}));
        for_each_permutation(n, [&](const Permutation& p) {
            ++total;
            if (meet(p, reverse_complement(p)).rank() != 0)
                throw std::logic_error("complement pairing produced a nonzero meet");
            if (leq(g1, p)) star.members.push_back(p);
        });
        if (star.size() * 2 != total)
            throw std::logic_error("rank-1 star does not have size n!/2");
        out.optimum = star.size();
        out.perm_witness = std::move(star);
        out.is_star = true;
        out.nodes = static_cast<std::uint64_t>(total);
        out.elapsed_ms = clock.ms();
        return out;
    }
    if (n > 6) throw BudgetError("whole-lattice search with t >= 2 supports n <= 6");
    std::vector<Permutation> verts;
    for (const Permutation& p : all_permutations(n))
        if (p.rank() >= t) verts.push_back(p);
    // star seed: best full upset of a rank-t center
    long long star_size = 0;
    Permutation star_center;
    for (const Permutation& c : enumerate_level(n, t).items) {
        const long long sz = upset_size_full(c);
        if (sz > star_size) {
            star_size = sz;
            star_center = c;
        }
    }
    IntersectionGraph graph = build_intersection_graph(verts, t, opts.threads);
    CliqueResult clique = max_clique(graph.adjacency, opts.budget,
                                     static_cast<int>(star_size), opts.threads);
    if (opts.canonical_witness && !clique.members.empty()) {
        CliqueBudget unbounded;
        clique.members =
            max_clique(graph.adjacency, unbounded, clique.size - 1, 1).members;
    }
    out.optimum = clique.size;
    out.nodes = clique.nodes;
    out.optimal = clique.optimal;
    if (clique.members.empty()) {
        out.is_star = true;
        PermFamily fam{n, {}};
        for (const Permutation& q : verts)
            if (leq(star_center, q)) fam.members.push_back(q);
        out.perm_witness = std::move(fam);
    } else {
        out.perm_witness = detail::family_from_clique(n, graph, clique.members);
    }
    detail::revalidate_perm_witness(*out.perm_witness, t);
    out.elapsed_ms = clock.ms();
    return out;
}

// All separated r-subsets of {1..m}, ascending mask order.
inline std::vector<std::uint32_t> separated_subsets(int m, int r) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (std::popcount(mask) == r && is_separated_mask(mask)) out.push_back(mask);
    return out;
}

// Largest intersecting system of separated r-subsets of an m-set.
inline SearchOutcome max_separated_intersecting(int m, int r,
                                                const SearchOptions& opts = {}) {
    if (m < 1 || m > 16 || r < 1 || 2 * r > m)
        throw UsageError("max_separated_intersecting requires m <= 16, r <= m/2");
    detail::Stopwatch clock;
    SearchOutcome out;
    out.problem = "max-separated-intersecting";
    const std::vector<std::uint32_t> sets = separated_subsets(m, r);
    // fixed-point star seed
    long long star_size = 0;
    int star_point = 1;
    for (int x = 1; x <= m; ++x) {
        long long sz = 0;
        for (std::uint32_t s : sets)
            if ((s >> (x - 1)) & 1u) ++sz;
        if (sz > star_size) {
            star_size = sz;
            star_point = x;
        }
    }
    BitGraph g(static_cast<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (sets[i] & sets[j]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    CliqueResult clique =
        max_clique(g, opts.budget, static_cast<int>(star_size), opts.threads);
    out.optimum = clique.size;
    out.nodes = clique.nodes;
    out.optimal = clique.optimal;
    SetSystem witness{m, {}};
    if (clique.members.empty()) {
        out.is_star = true;
        for (std::uint32_t s : sets)
            if ((s >> (star_point - 1)) & 1u) witness.sets.push_back(s);
    } else {
        for (int idx : clique.members) witness.sets.push_back(sets[idx]);
    }
    witness.canonicalize();
    if (!is_intersecting(witness))
        throw std::logic_error("separated-set witness is not intersecting");
    for (std::uint32_t s : witness.sets)
        if (!is_separated_mask(s) || std::popcount(s) != r)
            throw std::logic_error("separated-set witness has a bad member");
    out.set_witness = std::move(witness);
    out.elapsed_ms = clock.ms();
    return out;
}

// Largest intersecting system of k-subsets of an m-set with empty common
// intersection (the Hilton-Milner configuration).  k = 1 is degenerate: a
// family of pairwise-intersecting singletons is a single set, which has a
// common element, so the optimum is 0.
inline SearchOutcome max_intersecting_no_common_element(int m, int k,
                                                        const SearchOptions& opts = {}) {
    if (m < 1 || m > 8 || k < 1 || k > 3)
        throw UsageError("max_intersecting_no_common_element supports m <= 8, k <= 3");
    detail::Stopwatch clock;
    SearchOutcome out;
    out.problem = "max-intersecting-no-common";
    if (k == 1) {
        out.set_witness = SetSystem{m, {}};
        out.elapsed_ms = clock.ms();
        return out;
    }
    std::vector<std::uint32_t> sets;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (std::popcount(mask) == k) sets.push_back(mask);
    const int total = static_cast<int>(sets.size());
    long long best = 0;
    std::vector<int> best_members, cur;
    std::uint64_t nodes = 0;
    bool truncated = false;
    const auto deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(std::min(opts.budget.max_seconds, 1e9)));
    auto rec = [&](auto&& self, int from, std::uint32_t common) -> void {
        if (truncated) return;
        if (++nodes > opts.budget.max_nodes ||
            (nodes % 4096 == 0 && std::chrono::steady_clock::now() > deadline)) {
            truncated = true;
            return;
        }
        if (common == 0 && static_cast<long long>(cur.size()) > best) {
            best = static_cast<long long>(cur.size());
            best_members = cur;
        }
        for (int i = from; i < total; ++i) {
            if (static_cast<long long>(cur.size()) + (total - i) <= best) break;
            const std::uint32_t s = sets[i];
            bool compat = true;
            for (int idx : cur)
                if ((sets[idx] & s) == 0) {
                    compat = false;
                    break;
                }
            if (!compat) continue;
            cur.push_back(i);
            self(self, i + 1, cur.size() == 1 ? s : (common & s));
            cur.pop_back();
        }
    };
    rec(rec, 0, (1u << m) - 1);
    out.optimum = best;
    out.nodes = nodes;
    out.optimal = !truncated;
    SetSystem witness{m, {}};
    for (int idx : best_members) witness.sets.push_back(sets[idx]);
    witness.canonicalize();
    if (best > 0) {
        if (!is_intersecting(witness))
            throw std::logic_error("no-common witness is not intersecting");
        std::uint32_t common = (1u << m) - 1;
        for (std::uint32_t s : witness.sets) common &= s;
        if (common != 0)
            throw std::logic_error("no-common witness has a common element");
    }
    out.set_witness = std::move(witness);
    out.elapsed_ms = clock.ms();
    return out;
}

// Tie exploration: all maximum t-intersecting families at a level, reported
// up to the rank-multiset fingerprint.  Desk scale only (n <= 5): maximum
// cliques are collected from the maximal-clique enumeration.
struct MaximumFamilyEnumeration {
    long long optimum = 0;
    std::vector<PermFamily> families;
    std::vector<std::vector<long long>> fingerprints; // distinct rank multisets
};

inline MaximumFamilyEnumeration enumerate_maximum_level_families(int n, int r, int t) {
    if (n > 5) throw BudgetError("maximum-family enumeration supports n <= 5");
    if (t < 1 || t > r || r > pair_count(n))
        throw UsageError("enumerate_maximum_level_families requires 1 <= t <= r <= C(n,2)");
    const LevelEnumeration level = enumerate_level(n, r);
    IntersectionGraph graph = build_intersection_graph(level.items, t);
    MaximumFamilyEnumeration out;
    out.optimum = max_clique(graph.adjacency).size;
    for_each_maximal_clique(graph.adjacency, [&](const std::vector<int>& members) {
        if (static_cast<long long>(members.size()) != out.optimum) return;
        PermFamily fam{n, {}};
        for (int idx : members) fam.members.push_back(graph.vertices[idx]);
        fam.canonicalize();
        out.families.push_back(std::move(fam));
    });
    std::sort(out.families.begin(), out.families.end(),
              [](const PermFamily& a, const PermFamily& b) {
                  return a.members < b.members;
              });
    for (const PermFamily& fam : out.families) {
        auto fp = rank_multiset(fam);
        if (std::find(out.fingerprints.begin(), out.fingerprints.end(), fp) ==
            out.fingerprints.end())
            out.fingerprints.push_back(std::move(fp));
    }
    return out;
}

// The two candidate maximum t-intersecting families over the whole lattice:
// permutations with at least (n+t)/2 inverse descents, and up(rho(t)).
// Reports both sizes; asserts nothing about which wins in general.
struct Q63Exploration {
    int n = 0, t = 0;
    long long id_threshold_size = 0; // |{p : 2|ID(p)| >= n+t}|
    long long rho_upset_size = 0;    // |up(rho(t))|
    std::string larger;              // "id-threshold", "rho-upset", or "tie"
};

inline Q63Exploration explore_q63(int n, int t) {
    if (n < 2 || n > kFullScanMaxN || t < 1 || t > pair_count(n))
        throw UsageError("explore_q63 requires 2 <= n <= 8, 1 <= t <= C(n,2)");
    Q63Exploration q{n, t, 0, 0, ""};
    const Permutation rt = rho(n, t);
    for_each_permutation(n, [&](const Permutation& p) {
        if (2 * p.inverse_descents().size() >= n + t) ++q.id_threshold_size;
        if (leq(rt, p)) ++q.rho_upset_size;
    });
    q.larger = q.id_threshold_size > q.rho_upset_size   ? "id-threshold"
               : q.id_threshold_size < q.rho_upset_size ? "rho-upset"
                                                        : "tie";
    return q;
}

} // namespace bruhat
