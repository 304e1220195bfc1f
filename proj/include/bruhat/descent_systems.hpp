#pragma once

// Set systems on the generator ground set and the permutation families they
// generate: pi(A), separated sets, intersecting systems, antichains, maximal
// intersecting antichains, H_{m,r,k}, P(A), min/up/down, generating systems.

#include "bruhat/errors.hpp"
#include "bruhat/levels.hpp"
#include "bruhat/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace bruhat {

// Duplicate-free collection of subsets of {1..ground_size}; element e is bit
// e-1.  The ground set is either G_n (generator indices, m = n-1) or an
// abstract m-set.  Canonical order: ascending mask.
struct SetSystem {
    int ground_size = 0;
    std::vector<std::uint32_t> sets;

    void canonicalize() {
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    }
    static SetSystem of(int ground, std::initializer_list<std::initializer_list<int>> fam) {
        SetSystem s{ground, {}};
        for (const auto& set : fam) {
            std::uint32_t mask = 0;
            for (int e : set) {
                if (e < 1 || e > ground) throw UsageError("set element out of ground range");
                mask |= 1u << (e - 1);
            }
            s.sets.push_back(mask);
        }
        s.canonicalize();
        return s;
    }
    friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

inline std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> out;
    for (int e = 1; mask; ++e, mask >>= 1)
        if (mask & 1u) out.push_back(e);
    return out;
}

// Duplicate-free family of permutations of Sym(n), lexicographic order.
struct PermFamily {
    int n = 0;
    std::vector<Permutation> members;

    void canonicalize() {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }
    long long size() const { return static_cast<long long>(members.size()); }
    friend bool operator==(const PermFamily&, const PermFamily&) = default;
};

// No two consecutive generator indices.
inline bool is_separated(const GeneratorSet& a) { return (a.mask & (a.mask >> 1)) == 0; }

inline bool is_separated_mask(std::uint32_t mask) { return (mask & (mask >> 1)) == 0; }

// pi(A) = join of the generators in A: reverse each maximal block of
// consecutive positions covered by a run of generators.  The unique minimum
// permutation whose inverse-descent set is A.
inline Permutation pi_minimal(const GeneratorSet& a) {
    const int n = a.n;
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    int i = 1;
    while (i < n) {
        if (!a.contains(i)) {
            ++i;
            continue;
        }
        int j = i;
        while (j < n - 1 && a.contains(j + 1)) ++j;
        std::reverse(w.begin() + (i - 1), w.begin() + (j + 1));
        i = j + 2;
    }
    return Permutation(w);
}

// rank(pi(A)) = sum over maximal runs of length r of C(r+1,2).
inline int pi_minimal_rank(const GeneratorSet& a) {
    int total = 0, run = 0;
    for (int i = 1; i < a.n; ++i) {
        if (a.contains(i)) ++run;
        else {
            total += run * (run + 1) / 2;
            run = 0;
        }
    }
    return total + run * (run + 1) / 2;
}

// Pairwise nonempty intersections, self included: no empty member allowed.
inline bool is_intersecting(const SetSystem& s) {
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        if (s.sets[i] == 0) return false;
        for (std::size_t j = i + 1; j < s.sets.size(); ++j)
            if ((s.sets[i] & s.sets[j]) == 0) return false;
    }
    return true;
}

inline bool is_antichain(const SetSystem& s) {
    for (std::size_t i = 0; i < s.sets.size(); ++i)
        for (std::size_t j = 0; j < s.sets.size(); ++j)
            if (i != j && (s.sets[i] & ~s.sets[j]) == 0) return false;
    return true;
}

// Intersecting antichain such that every outside set is disjoint from some
// member or contains some member.  Checked over all 2^m candidate sets.
inline bool is_maximal_intersecting_antichain(const SetSystem& s) {
    if (s.ground_size > 20) throw BudgetError("maximality check supports ground size <= 20");
    if (s.sets.empty() || !is_intersecting(s) || !is_antichain(s)) return false;
    const std::uint32_t full = (s.ground_size == 32) ? ~0u : (1u << s.ground_size) - 1;
    for (std::uint32_t b = 0; b <= full; ++b) {
        if (std::binary_search(s.sets.begin(), s.sets.end(), b)) continue;
        bool witnessed = false;
        for (std::uint32_t a : s.sets)
            if ((a & b) == 0 || (a & ~b) == 0) {
                witnessed = true;
                break;
            }
        if (!witnessed) return false;
    }
    return true;
}

// H_{m,r,k}: all r-subsets of {1..m} meeting {1..2k-1} in at least k elements.
inline SetSystem h_family(int m, int r, int k) {
    if (k < 1 || k > r || 2 * r > m - 1)
        throw UsageError("h_family requires 1 <= k <= r <= (m-1)/2");
    SetSystem s{m, {}};
    const std::uint32_t head = (1u << (2 * k - 1)) - 1;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (std::popcount(mask) == r && std::popcount(mask & head) >= k)
            s.sets.push_back(mask);
    s.canonicalize();
    return s;
}

// Reinterprets abstract elements {1..m} as generator indices of G_n.
// The support must fit inside {1..n-1}.
inline SetSystem to_generator_ground(const SetSystem& s, int n) {
    std::uint32_t support = 0;
    for (std::uint32_t a : s.sets) support |= a;
    if (n < 2 || support >> (n - 1))
        throw UsageError("set system does not fit on the generators of Sym(n)");
    SetSystem out{n - 1, s.sets};
    out.canonicalize();
    return out;
}

// P(A) = up({pi(A) : A in s}) = all p with some member below ID(p).  n <= 8.
inline PermFamily family_P(const SetSystem& s, int n) {
    if (s.ground_size != n - 1)
        throw UsageError("family_P requires ground size n-1");
    PermFamily fam{n, {}};
    for_each_permutation(n, [&](const Permutation& p) {
        const std::uint32_t id = p.inverse_descents().mask;
        for (std::uint32_t a : s.sets)
            if ((a & ~id) == 0) {
                fam.members.push_back(p);
                return;
            }
    });
    return fam;
}

inline PermFamily min_family(const PermFamily& fam) {
    PermFamily out{fam.n, {}};
    for (const Permutation& p : fam.members) {
        bool minimal = true;
        for (const Permutation& q : fam.members)
            if (!(q == p) && leq(q, p)) {
                minimal = false;
                break;
            }
        if (minimal) out.members.push_back(p);
    }
    out.canonicalize();
    return out;
}

inline PermFamily up_family(const PermFamily& fam) {
    PermFamily out{fam.n, {}};
    for_each_permutation(fam.n, [&](const Permutation& q) {
        for (const Permutation& p : fam.members)
            if (leq(p, q)) {
                out.members.push_back(q);
                return;
            }
    });
    return out;
}

inline PermFamily down_family(const PermFamily& fam) {
    PermFamily out{fam.n, {}};
    for_each_permutation(fam.n, [&](const Permutation& q) {
        for (const Permutation& p : fam.members)
            if (leq(q, p)) {
                out.members.push_back(q);
                return;
            }
    });
    return out;
}

// Generating system: {ID(q) : q in min(P)}, deduplicated.
inline SetSystem generating_system(const PermFamily& fam) {
    SetSystem s{fam.n - 1, {}};
    for (const Permutation& p : min_family(fam).members)
        s.sets.push_back(p.inverse_descents().mask);
    s.canonicalize();
    return s;
}

inline SetSystem id_system(const PermFamily& fam) {
    SetSystem s{fam.n - 1, {}};
    for (const Permutation& p : fam.members)
        s.sets.push_back(p.inverse_descents().mask);
    s.canonicalize();
    return s;
}

// rank(meet) >= t for every pair, self included.
inline bool is_t_intersecting(const PermFamily& fam, int t) {
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (fam.members[i].rank() < t) return false;
        for (std::size_t j = i + 1; j < fam.members.size(); ++j)
            if (meet(fam.members[i], fam.members[j]).rank() < t) return false;
    }
    return true;
}

// Count of members per rank; the isomorphism fingerprint that separates the
// two 360-element families built from isomorphic systems.
inline std::vector<long long> rank_multiset(const PermFamily& fam) {
    std::vector<long long> counts(pair_count(fam.n) + 1, 0);
    for (const Permutation& p : fam.members) ++counts[p.rank()];
    return counts;
}

// Every maximal intersecting antichain on {1..ground}; exhaustive DFS over
// intersecting antichains, then the 2^ground maximality filter.  Desk scale
// only (ground <= 6).
inline std::vector<SetSystem> maximal_intersecting_antichains(int ground) {
    if (ground < 1 || ground > 6)
        throw BudgetError("antichain enumeration supports ground size <= 6");
    const std::uint32_t full = (1u << ground) - 1;
    std::vector<SetSystem> out;
    std::vector<std::uint32_t> cur;
    auto consider = [&]() {
        if (cur.empty()) return;
        SetSystem s{ground, cur};
        if (is_maximal_intersecting_antichain(s)) out.push_back(std::move(s));
    };
    auto rec = [&](auto&& self, std::uint32_t start) -> void {
        consider();
        for (std::uint32_t m = start; m <= full; ++m) {
            bool ok = true;
            for (std::uint32_t a : cur)
                if ((a & m) == 0 || (a & ~m) == 0 || (m & ~a) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(m);
            self(self, m + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const SetSystem& a, const SetSystem& b) {
        return a.sets < b.sets;
    });
    return out;
}

} // namespace bruhat
