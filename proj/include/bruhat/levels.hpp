#pragma once

// Rank levels B_l(n): enumeration, multiplicities of generator sets, and
// level-restricted / full upsets.
//
// Levels are enumerated by extending words left to right in increasing value
// order, pruning on the running inversion count.  Output is lexicographic by
// construction and the first placed symbol splits the search space into
// independent partitions, so the enumeration can fan out over threads and be
// merged in canonical order deterministically.

#include "bruhat/errors.hpp"
#include "bruhat/permutation.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <vector>

namespace bruhat {

inline constexpr int kFullScanMaxN = 8; // whole-lattice operations cap

struct LevelEnumeration {
    int n = 0;
    int ell = 0;
    std::vector<Permutation> items; // lexicographic word order
};

namespace detail {

inline void extend_level(int n, int ell, std::uint32_t used, int placed, int inv,
                         std::vector<int>& word, std::vector<Permutation>& out) {
    // every unplaced value u already owes one inversion per placed value > u
    int forced = 0;
    for (int u = 1; u <= n; ++u)
        if (!((used >> (u - 1)) & 1u)) forced += std::popcount(used >> u);
    if (inv + forced > ell) return;
    const int remaining = n - placed;
    if (inv + forced + pair_count(remaining) < ell) return;
    if (placed == n) {
        out.emplace_back(word);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if ((used >> (v - 1)) & 1u) continue;
        // values already placed that are greater than v each add one inversion
        const int added = std::popcount(used >> v);
        word[placed] = v;
        extend_level(n, ell, used | (1u << (v - 1)), placed + 1, inv + added, word, out);
    }
    word[placed] = 0;
}

inline std::vector<Permutation> level_partition(int n, int ell, int first) {
    std::vector<Permutation> out;
    std::vector<int> word(n, 0);
    word[0] = first;
    extend_level(n, ell, 1u << (first - 1), 1, 0, word, out);
    return out;
}

} // namespace detail

inline LevelEnumeration enumerate_level(int n, int ell, int threads = 1) {
    if (n < 1 || n > kMaxN) throw UsageError("n must be in 1..16");
    if (ell < 0 || ell > pair_count(n)) throw UsageError("level out of range 0..C(n,2)");
    LevelEnumeration lev{n, ell, {}};
    if (n == 1) {
        if (ell == 0) lev.items.push_back(identity(1));
        return lev;
    }
    if (threads > 1) {
        std::vector<std::future<std::vector<Permutation>>> parts;
        parts.reserve(n);
        for (int first = 1; first <= n; ++first)
            parts.push_back(std::async(std::launch::async, detail::level_partition,
                                       n, ell, first));
        for (auto& f : parts) {
            auto part = f.get();
            lev.items.insert(lev.items.end(), part.begin(), part.end());
        }
    } else {
        for (int first = 1; first <= n; ++first) {
            auto part = detail::level_partition(n, ell, first);
            lev.items.insert(lev.items.end(), part.begin(), part.end());
        }
    }
    return lev;
}

// Rank-l permutations whose inverse-descent set is exactly a.
inline std::vector<Permutation> multiplicity_witnesses(const GeneratorSet& a, int n,
                                                       int ell) {
    if (a.n != n) throw UsageError("generator set is on a different ground set");
    std::vector<Permutation> out;
    for (const Permutation& p : enumerate_level(n, ell).items)
        if (p.inverse_descents() == a) out.push_back(p);
    return out;
}

inline long long multiplicity(const GeneratorSet& a, int n, int ell) {
    return static_cast<long long>(multiplicity_witnesses(a, n, ell).size());
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    if (n < 1 || n > kFullScanMaxN)
        throw BudgetError("full-lattice scan supports n <= 8 only");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

// All of Sym(n) in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

// counts[l][mask] = multiplicity of the generator set `mask` at level l.
// One pass over Sym(n); the workhorse behind the multiplicity bound checks.
inline std::vector<std::vector<long long>> multiplicity_census(int n) {
    std::vector<std::vector<long long>> counts(
        pair_count(n) + 1, std::vector<long long>(std::size_t{1} << (n - 1), 0));
    for_each_permutation(n, [&](const Permutation& p) {
        ++counts[p.rank()][p.inverse_descents().mask];
    });
    return counts;
}

// All q of rank r with p <= q.
inline LevelEnumeration upset_level(const Permutation& p, int r) {
    if (r < p.rank() || r > pair_count(p.n()))
        throw UsageError("upset_level: r out of range rank(p)..C(n,2)");
    LevelEnumeration lev = enumerate_level(p.n(), r);
    std::erase_if(lev.items, [&](const Permutation& q) { return !leq(p, q); });
    return lev;
}

// |up(p)| over the whole lattice; n <= 8.
inline long long upset_size_full(const Permutation& p) {
    long long count = 0;
    const PairBits pb = p.inversion_set().bits;
    for_each_permutation(p.n(), [&](const Permutation& q) {
        if (pb.subset_of(q.inversion_set().bits)) ++count;
    });
    return count;
}

} // namespace bruhat
