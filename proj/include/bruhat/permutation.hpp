#pragma once

// Permutations of Sym(n) under the weak (right) Bruhat order, with cached
// inversion bitsets and inverse-descent bitsets.
//
// Pair indexing: the value pairs (a,b), 1 <= a < b <= n, are numbered
// (b-1)(b-2)/2 + (a-1), i.e. (1,2),(1,3),(2,3),(1,4),(2,4),(3,4),...
// This order is fixed so serialized bitsets are identical across platforms,
// and it is the order in which rho(t)'s inversion set forms a suffix.

#include "bruhat/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bruhat {

inline constexpr int kMaxN = 16;
inline constexpr int kMaxPairs = kMaxN * (kMaxN - 1) / 2; // 120 bits, two words

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

constexpr int pair_index(int a, int b) { return (b - 1) * (b - 2) / 2 + (a - 1); }

inline std::pair<int, int> pair_at(int index) {
    int b = 2;
    while (pair_count(b) <= index) ++b;
    return {index - pair_count(b - 1) + 1, b};
}

// Fixed 128-bit set over pair indices.
struct PairBits {
    std::uint64_t w0 = 0, w1 = 0;

    bool test(int i) const {
        return ((i < 64 ? w0 >> i : w1 >> (i - 64)) & 1u) != 0;
    }
    void set(int i) {
        if (i < 64) w0 |= std::uint64_t{1} << i;
        else        w1 |= std::uint64_t{1} << (i - 64);
    }
    void reset(int i) {
        if (i < 64) w0 &= ~(std::uint64_t{1} << i);
        else        w1 &= ~(std::uint64_t{1} << (i - 64));
    }
    int count() const { return std::popcount(w0) + std::popcount(w1); }
    bool none() const { return w0 == 0 && w1 == 0; }
    bool subset_of(const PairBits& o) const {
        return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0;
    }
    friend PairBits operator&(PairBits a, PairBits b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
    friend PairBits operator|(PairBits a, PairBits b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
    friend bool operator==(const PairBits&, const PairBits&) = default;
};

// All pair indices valid for a given n.
inline PairBits full_pair_bits(int n) {
    PairBits b;
    for (int i = 0; i < pair_count(n); ++i) b.set(i);
    return b;
}

// Bitset over the value pairs of {1..n}; bit set iff b precedes a in the word.
struct InversionSet {
    int n = 0;
    PairBits bits;

    bool contains(int a, int b) const { return bits.test(pair_index(a, b)); }
    int size() const { return bits.count(); }
    friend bool operator==(const InversionSet&, const InversionSet&) = default;
};

// Biclosed = closed under transitivity and co-transitivity; exactly the sets
// that arise as Inv(p).
inline bool is_biclosed(const InversionSet& s) {
    for (int c = 3; c <= s.n; ++c)
        for (int a = 1; a + 1 < c; ++a)
            for (int b = a + 1; b < c; ++b) {
                const bool ab = s.contains(a, b);
                const bool bc = s.contains(b, c);
                const bool ac = s.contains(a, c);
                if (ab && bc && !ac) return false;
                if (ac && !ab && !bc) return false;
            }
    return true;
}

// Bitset over the generators g_1..g_{n-1}; g_i <-> bit i-1.
struct GeneratorSet {
    int n = 0;
    std::uint32_t mask = 0;

    bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
    int size() const { return std::popcount(mask); }
    bool empty() const { return mask == 0; }
    bool subset_of(const GeneratorSet& o) const { return (mask & ~o.mask) == 0; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 1; i < n; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }
    static GeneratorSet of(int n, std::initializer_list<int> gens) {
        GeneratorSet g{n, 0};
        for (int i : gens) {
            if (i < 1 || i >= n) throw UsageError("generator index out of range");
            g.mask |= 1u << (i - 1);
        }
        return g;
    }
    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(const std::vector<int>& word) { init(word); }

    static Permutation identity(int n) {
        check_n(n);
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return Permutation(w);
    }

    int n() const { return n_; }
    int at(int pos) const { return word_[pos - 1]; } // 1-based position
    int rank() const { return inv_.count(); }

    std::vector<int> word() const {
        return std::vector<int>(word_.begin(), word_.begin() + n_);
    }

    InversionSet inversion_set() const { return {n_, inv_}; }
    GeneratorSet inverse_descents() const { return {n_, id_}; }

    // Packs the word into 4-bit nibbles; total order key and hash input.
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (int i = 0; i < n_; ++i) k = (k << 4) | std::uint64_t(word_[i] - 1);
        return k;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.n_ == b.n_ && a.key() == b.key();
    }
    // Lexicographic order on words.
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.key() < b.key();
    }

private:
    int n_ = 0;
    std::array<std::uint8_t, kMaxN> word_{};
    PairBits inv_;
    std::uint32_t id_ = 0;

    static void check_n(int n) {
        if (n < 1 || n > kMaxN) throw UsageError("n must be in 1..16");
    }

    void init(const std::vector<int>& word) {
        check_n(static_cast<int>(word.size()));
        n_ = static_cast<int>(word.size());
        std::uint32_t seen = 0;
        for (int i = 0; i < n_; ++i) {
            int v = word[i];
            if (v < 1 || v > n_ || (seen >> (v - 1)) & 1u)
                throw UsageError("word is not a permutation of 1..n");
            seen |= 1u << (v - 1);
            word_[i] = static_cast<std::uint8_t>(v);
        }
        std::array<int, kMaxN + 1> pos{};
        for (int i = 0; i < n_; ++i) pos[word_[i]] = i;
        for (int b = 2; b <= n_; ++b)
            for (int a = 1; a < b; ++a)
                if (pos[b] < pos[a]) inv_.set(pair_index(a, b));
        for (int i = 1; i < n_; ++i)
            if (pos[i + 1] < pos[i]) id_ |= 1u << (i - 1);
    }
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        return std::hash<std::uint64_t>{}(p.key() * 0x9e3779b97f4a7c15ull + p.n());
    }
};

inline Permutation identity(int n) { return Permutation::identity(n); }

inline InversionSet inversion_set(const Permutation& p) { return p.inversion_set(); }

inline GeneratorSet inverse_descents(const Permutation& p) { return p.inverse_descents(); }

inline int rank(const Permutation& p) { return p.rank(); }

// Unique permutation with inversion set s; rejects non-biclosed input.
inline Permutation from_inversion_set(const InversionSet& s) {
    if (s.n < 1 || s.n > kMaxN) throw UsageError("n must be in 1..16");
    if (!is_biclosed(s))
        throw NotBiclosedError("pair set is not the inversion set of any permutation");
    const int n = s.n;
    // Value u precedes v (u<v) iff (u,v) is absent; position = #predecessors.
    std::vector<int> w(n, 0);
    for (int v = 1; v <= n; ++v) {
        int pos = 0;
        for (int u = 1; u <= n; ++u) {
            if (u == v) continue;
            const bool u_before_v =
                u < v ? !s.contains(u, v) : s.contains(v, u);
            if (u_before_v) ++pos;
        }
        w[pos] = v;
    }
    Permutation p(w);
    if (!(p.inversion_set() == s))
        throw NotBiclosedError("pair set is not the inversion set of any permutation");
    return p;
}

inline void require_same_n(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw UsageError("permutations have different n");
}

// p <= q in weak order iff Inv(p) is contained in Inv(q).
inline bool leq(const Permutation& p, const Permutation& q) {
    require_same_n(p, q);
    return p.inversion_set().bits.subset_of(q.inversion_set().bits);
}

// All covers of p: swap each adjacent ascent. Returned in lexicographic order.
inline std::vector<Permutation> covers(const Permutation& p) {
    std::vector<Permutation> out;
    std::vector<int> w = p.word();
    for (int i = 0; i + 1 < p.n(); ++i)
        if (w[i] < w[i + 1]) {
            std::swap(w[i], w[i + 1]);
            out.emplace_back(w);
            std::swap(w[i], w[i + 1]);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Weak-order greatest lower bound.
//
// Inv(p ^ q) is the complement of the transitive closure of the
// "definitely before" relation comp(Inv p) | comp(Inv q): a chain
// a < x1 < ... < c of non-inverted steps forces a before c in every common
// lower bound.  Equivalently, the fixpoint of deleting every (a,c) that has
// some intermediate b with neither (a,b) nor (b,c) present (co-closure).
// Oracle-checked exhaustively for n <= 6 against the brute-force maximum-rank
// common lower bound.
inline Permutation meet(const Permutation& p, const Permutation& q) {
    require_same_n(p, q);
    const int n = p.n();
    const PairBits common = p.inversion_set().bits & q.inversion_set().bits;
    // before[a]: bitmask over values b (bit b) with a before b guaranteed.
    std::array<std::uint32_t, kMaxN + 1> before{};
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (!common.test(pair_index(a, b))) before[a] |= 1u << b;
    for (int m = 2; m < n; ++m)
        for (int a = 1; a < m; ++a)
            if ((before[a] >> m) & 1u) before[a] |= before[m];
    InversionSet s{n, {}};
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (!((before[a] >> b) & 1u)) s.bits.set(pair_index(a, b));
    return from_inversion_set(s);
}

// The paired permutation p_n...p_2p_1; Inv and ID complement, order reverses.
inline Permutation reverse_complement(const Permutation& p) {
    std::vector<int> w = p.word();
    std::reverse(w.begin(), w.end());
    return Permutation(w);
}

// Least upper bound via the order-reversing involution.
inline Permutation join(const Permutation& p, const Permutation& q) {
    return reverse_complement(meet(reverse_complement(p), reverse_complement(q)));
}

// Text form: plain digits for n <= 9 ("3214"), comma-separated for n >= 10.
inline std::string to_string(const Permutation& p) {
    std::string out;
    if (p.n() <= 9) {
        for (int v : p.word()) out += static_cast<char>('0' + v);
    } else {
        for (int i = 1; i <= p.n(); ++i) {
            if (i > 1) out += ',';
            out += std::to_string(p.at(i));
        }
    }
    return out;
}

inline Permutation parse_permutation(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string tok = text.substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start);
            if (tok.empty()) throw UsageError("bad permutation literal: " + text);
            w.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw UsageError("bad permutation literal: " + text);
            w.push_back(c - '0');
        }
    }
    if (w.empty()) throw UsageError("bad permutation literal: " + text);
    return Permutation(w);
}

} // namespace bruhat
