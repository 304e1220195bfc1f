#pragma once

// Rank generating functions and the closed-form bounds used by the
// verification drivers: q-integers, q-binomials/multinomials, the partition
// function, star-size bounds, Hilton-Milner and Frankl bounds, and the
// rho(t) construction with its upset generating function.

#include "bruhat/errors.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/polynomial.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace bruhat {

// [m] = 1 + x + ... + x^{m-1}
inline IntPolynomial q_int(int m) {
    if (m < 1) throw UsageError("q_int requires m >= 1");
    return IntPolynomial(std::vector<BigInt>(m, 1));
}

// [n]! = [1][2]...[n]; coefficient of x^l is the Mahonian number |B_l(n)|.
inline IntPolynomial q_factorial(int n) {
    if (n < 0) throw UsageError("q_factorial requires n >= 0");
    IntPolynomial p = IntPolynomial::constant(1);
    for (int m = 2; m <= n; ++m) p = p * q_int(m);
    return p;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Gaussian binomial [m choose k]_q.
inline IntPolynomial q_binomial(int m, int k) {
    if (k < 0 || m < 0 || k > m) throw UsageError("q_binomial requires 0 <= k <= m");
    return exact_divide(q_factorial(m), q_factorial(k) * q_factorial(m - k));
}

// q-multinomial for a composition of m: product of q-binomials over prefixes.
// This is the generating function by inversions for permutations of the
// multiset {1^{p_1}, 2^{p_2}, ...}.
inline IntPolynomial q_multinomial(const std::vector<int>& parts) {
    IntPolynomial out = IntPolynomial::constant(1);
    int rest = 0;
    for (int p : parts) {
        if (p < 0) throw UsageError("q_multinomial parts must be nonnegative");
        rest += p;
    }
    for (int p : parts) {
        out = out * q_binomial(rest, p);
        rest -= p;
    }
    return out;
}

// Composition of n induced by a generator set {i_1 < ... < i_k}:
// (i_1, i_2-i_1, ..., n-i_k).  Permutations with this inverse-descent set
// preserve the order within each block.
inline std::vector<int> parts_from_generator_set(const GeneratorSet& a) {
    std::vector<int> parts;
    int prev = 0;
    for (int i : a.indices()) {
        parts.push_back(i - prev);
        prev = i;
    }
    parts.push_back(a.n - prev);
    return parts;
}

// p(l) by Euler's pentagonal number recurrence.
inline BigInt partition_count(int ell) {
    if (ell < 0) throw UsageError("partition_count requires l >= 0");
    static std::vector<BigInt> cache{1};
    while (static_cast<int>(cache.size()) <= ell) {
        const int m = static_cast<int>(cache.size());
        BigInt v = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const BigInt sign = (k % 2 == 1) ? 1 : -1;
            v += sign * cache[m - g1];
            if (g2 <= m) v += sign * cache[m - g2];
        }
        cache.push_back(v);
    }
    return cache[ell];
}

// C(l+k-1,k-1) * e^{k pi sqrt(2l/3)}: upper bound on the multiplicity of any
// k-set of generators at level l.  The single sanctioned floating-point
// quantity; callers always round up before comparing.
inline double multiplicity_bound(int k, int ell) {
    if (k < 1 || ell < 0) throw UsageError("multiplicity_bound requires k >= 1, l >= 0");
    const double comps = static_cast<double>(binomial(ell + k - 1, k - 1));
    return comps * std::exp(k * std::numbers::pi * std::sqrt(2.0 * ell / 3.0));
}

// (exact star size at level r, generic lower bound C(n-2,r-1)).
// The exact value is the coefficient of x^{r-1} in [n]!/(1+x); at r=3 it
// equals C(n-1,2).
inline std::pair<BigInt, BigInt> star_bounds(int n, int r) {
    if (n < 3 || r < 1 || r > pair_count(n)) throw UsageError("star_bounds: bad (n,r)");
    const IntPolynomial quot = exact_divide(q_factorial(n), q_int(2));
    return {quot.coeff(r - 1), binomial(n - 2, r - 1)};
}

// Hilton-Milner: C(m-1,k-1) - C(m-k-1,k-1) + 1.
inline BigInt hm_bound(int m, int k) {
    if (k < 1 || m < 2 * k) throw UsageError("hm_bound requires m >= 2k, k >= 1");
    return binomial(m - 1, k - 1) - binomial(m - k - 1, k - 1) + 1;
}

// Frankl: C(m,k) - C(m-r,k) for systems with no r+1 pairwise disjoint sets.
inline BigInt frankl_bound(int m, int k, int r) {
    if (k < 1 || r < 0 || m < (2 * r + 1) * k - r)
        throw UsageError("frankl_bound requires m >= (2r+1)k - r");
    return binomial(m, k) - binomial(m - r, k);
}

// (r-2) C(2r-2,r-2) e^{3 r^{3/2}} r (r-2) + r, rounded up.  Above this n the
// level-r counting argument closes.
inline BigInt rank_r_threshold(int r) {
    if (r < 3) throw UsageError("rank_r_threshold requires r >= 3");
    const long double expo = std::exp(3.0L * std::pow(static_cast<long double>(r), 1.5L));
    const long double v =
        static_cast<long double>(binomial(2 * r - 2, r - 2)) * (r - 2) * expo * r * (r - 2);
    return BigInt(std::ceil(v)) + r;
}

// t = (n-1) + (n-2) + ... + (n-i) + (n-(i+j+1)) with i maximal and j >= 0.
struct RhoDecomposition {
    int n = 0, t = 0, i = 0, j = 0;
    friend bool operator==(const RhoDecomposition&, const RhoDecomposition&) = default;
};

inline RhoDecomposition rho_decompose(int n, int t) {
    if (n < 1 || n > kMaxN || t < 0 || t > pair_count(n))
        throw UsageError("rho_decompose: t out of range");
    int i = 0, acc = 0;
    while (i + 1 <= n - 1 && acc + (n - (i + 1)) <= t) {
        acc += n - (i + 1);
        ++i;
    }
    const int remainder = t - acc;          // = n-(i+j+1), may be 0
    const int j = n - i - 1 - remainder;
    return {n, t, i, j};
}

// rho(t): start from the identity and t times swap the largest value having a
// smaller value directly before it with that neighbor.  Its inversion set is
// the final t pairs in the canonical pair order.
inline Permutation rho(int n, int t) {
    if (n < 1 || n > kMaxN || t < 0 || t > pair_count(n))
        throw UsageError("rho: t out of range");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    for (int step = 0; step < t; ++step) {
        int best = -1, at = -1;
        for (int i = 1; i < n; ++i)
            if (w[i - 1] < w[i] && w[i] > best) {
                best = w[i];
                at = i;
            }
        std::swap(w[at - 1], w[at]);
    }
    return Permutation(w);
}

// Rank generating function of up(rho(t)), offset so that x^s counts the
// permutations of rank t+s.  Equals [n-i]! / [n-i-j].
inline IntPolynomial rho_upset_genfun(int n, int t) {
    const RhoDecomposition d = rho_decompose(n, t);
    const int m = n - d.i;
    return exact_divide(q_factorial(m), q_int(m - d.j));
}

} // namespace bruhat
