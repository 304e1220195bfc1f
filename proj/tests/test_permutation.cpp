#include "bruhat/levels.hpp"
#include "bruhat/permutation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>

using namespace bruhat;

namespace {

// Brute-force oracle: the unique maximum-rank common lower bound, found by
// scanning all of Sym(n).  Independent of the closure-based meet.
Permutation meet_oracle(const Permutation& p, const Permutation& q) {
    const PairBits pb = p.inversion_set().bits;
    const PairBits qb = q.inversion_set().bits;
    std::optional<Permutation> best;
    int ties = 0;
    for_each_permutation(p.n(), [&](const Permutation& z) {
        const PairBits zb = z.inversion_set().bits;
        if (!zb.subset_of(pb) || !zb.subset_of(qb)) return;
        if (!best || z.rank() > best->rank()) {
            best = z;
            ties = 1;
        } else if (z.rank() == best->rank()) {
            ++ties;
        }
    });
    REQUIRE(best.has_value());
    REQUIRE(ties == 1); // the glb is unique
    return *best;
}

std::vector<int> random_word(int n, std::mt19937_64& rng) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

} // namespace

TEST_CASE("identity") {
    CHECK(to_string(identity(4)) == "1234");
    CHECK(identity(4).inversion_set().bits.none());
    CHECK(to_string(identity(1)) == "1");
    CHECK(identity(6).rank() == 0);
    CHECK_THROWS_AS(identity(0), UsageError);
    CHECK_THROWS_AS(identity(17), UsageError);
}

TEST_CASE("inversion sets match the worked examples") {
    auto inv = [](const char* w) {
        std::vector<std::pair<int, int>> pairs;
        const Permutation p = parse_permutation(w);
        for (int b = 2; b <= p.n(); ++b)
            for (int a = 1; a < b; ++a)
                if (p.inversion_set().contains(a, b)) pairs.emplace_back(a, b);
        return pairs;
    };
    CHECK(inv("3214") == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(inv("3241") ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}});
    CHECK(inv("1234").empty());
    CHECK(parse_permutation("3214").rank() == 3);
}

TEST_CASE("inverse descents") {
    CHECK(parse_permutation("3214").inverse_descents() == GeneratorSet::of(4, {1, 2}));
    CHECK(parse_permutation("3241").inverse_descents() == GeneratorSet::of(4, {1, 2}));
    CHECK(parse_permutation("213546").inverse_descents() == GeneratorSet::of(6, {1, 4}));
    CHECK(parse_permutation("213546").rank() == 2);
}

TEST_CASE("from_inversion_set") {
    const Permutation p = parse_permutation("3214");
    CHECK(from_inversion_set(p.inversion_set()) == p);
    CHECK(from_inversion_set(InversionSet{5, {}}) == identity(5));

    InversionSet bad{3, {}};
    bad.bits.set(pair_index(1, 2));
    bad.bits.set(pair_index(2, 3)); // transitivity forces (1,3)
    CHECK_THROWS_AS(from_inversion_set(bad), NotBiclosedError);

    InversionSet co_bad{3, {}};
    co_bad.bits.set(pair_index(1, 3)); // needs (1,2) or (2,3)
    CHECK_THROWS_AS(from_inversion_set(co_bad), NotBiclosedError);
}

TEST_CASE("every inversion set is biclosed and round-trips (n <= 6)") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            REQUIRE(is_biclosed(p.inversion_set()));
            REQUIRE(from_inversion_set(p.inversion_set()) == p);
        });
}

TEST_CASE("leq") {
    CHECK(leq(parse_permutation("3214"), parse_permutation("3241")));
    // incomparable pair with equal inverse-descent sets; the converse of the
    // order-preservation statement must stay false
    const Permutation a = parse_permutation("2431");
    const Permutation b = parse_permutation("4213");
    CHECK_FALSE(leq(a, b));
    CHECK_FALSE(leq(b, a));
    CHECK(a.inverse_descents() == b.inverse_descents());
    CHECK(leq(a, a));
    CHECK_THROWS_AS(leq(identity(3), identity(4)), UsageError);
}

TEST_CASE("covers") {
    auto words = [](const std::vector<Permutation>& ps) {
        std::vector<std::string> out;
        for (const auto& p : ps) out.push_back(to_string(p));
        return out;
    };
    CHECK(words(covers(parse_permutation("1234"))) ==
          std::vector<std::string>{"1243", "1324", "2134"});
    CHECK(covers(parse_permutation("4321")).empty());
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const Permutation p(random_word(8, rng));
        int ascents = 0;
        for (int i = 1; i < 8; ++i)
            if (p.at(i) < p.at(i + 1)) ++ascents;
        REQUIRE(static_cast<int>(covers(p).size()) == ascents);
        for (const Permutation& q : covers(p)) {
            REQUIRE(q.rank() == p.rank() + 1);
            REQUIRE(leq(p, q));
        }
    }
}

TEST_CASE("meet worked examples") {
    CHECK(meet(parse_permutation("3214"), parse_permutation("3241")) ==
          parse_permutation("3214"));
    CHECK(meet(parse_permutation("2431"), parse_permutation("4213")) ==
          parse_permutation("2413"));
    CHECK(meet(parse_permutation("3142"), identity(4)) == identity(4));
    // co-closure needs every intermediate witness: the pair set
    // Inv(3412) & Inv(4132) = {(1,4),(2,4),(2,3)} is not an inversion set
    CHECK(meet(parse_permutation("3412"), parse_permutation("4132")) ==
          parse_permutation("1342"));
}

TEST_CASE("meet equals the brute-force glb exhaustively (n <= 5)") {
    for (int n = 2; n <= 5; ++n) {
        const std::vector<Permutation> all = all_permutations(n);
        for (const Permutation& p : all)
            for (const Permutation& q : all) {
                const Permutation m = meet(p, q);
                REQUIRE(m == meet_oracle(p, q));
                REQUIRE(m.inverse_descents().mask ==
                        (p.inverse_descents().mask & q.inverse_descents().mask));
            }
    }
}

TEST_CASE("join") {
    CHECK(join(parse_permutation("2134"), parse_permutation("1324")) ==
          parse_permutation("3214"));
    CHECK(join(parse_permutation("2134"), identity(4)) == parse_permutation("2134"));
    CHECK(join(parse_permutation("2134"), parse_permutation("4321")) ==
          parse_permutation("4321"));
    // join is the least upper bound: exhaustive for n = 4
    const std::vector<Permutation> all = all_permutations(4);
    for (const Permutation& p : all)
        for (const Permutation& q : all) {
            const Permutation j = join(p, q);
            REQUIRE(leq(p, j));
            REQUIRE(leq(q, j));
            for (const Permutation& z : all)
                if (leq(p, z) && leq(q, z)) REQUIRE(leq(j, z));
        }
}

TEST_CASE("reverse_complement") {
    const Permutation p = parse_permutation("3214");
    const Permutation pbar = reverse_complement(p);
    CHECK(to_string(pbar) == "4123");
    CHECK(pbar.inverse_descents() == GeneratorSet::of(4, {3}));
    CHECK(to_string(reverse_complement(identity(4))) == "4321");
    CHECK(reverse_complement(pbar) == p);
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 10000; ++iter) {
        const Permutation q(random_word(9, rng));
        const Permutation qbar = reverse_complement(q);
        REQUIRE(q.rank() + qbar.rank() == pair_count(9));
        REQUIRE((q.inverse_descents().mask ^ qbar.inverse_descents().mask) ==
                (1u << 8) - 1);
        REQUIRE(reverse_complement(qbar) == q);
    }
}

TEST_CASE("order preservation of inverse descents (random n = 10)") {
    std::mt19937_64 rng(13);
    int comparable = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        const Permutation p(random_word(10, rng));
        Permutation q = p;
        for (int hops = 0; hops < 6; ++hops) {
            auto up = covers(q);
            if (up.empty()) break;
            q = up[std::uniform_int_distribution<std::size_t>(0, up.size() - 1)(rng)];
        }
        REQUIRE(leq(p, q));
        ++comparable;
        REQUIRE(p.inverse_descents().subset_of(q.inverse_descents()));
        REQUIRE(meet(p, q) == p);
        REQUIRE(join(p, q) == q);
    }
    REQUIRE(comparable == 10000);
}

TEST_CASE("meet is identity iff inverse descents are disjoint (n <= 5)") {
    for (int n = 2; n <= 5; ++n) {
        const std::vector<Permutation> all = all_permutations(n);
        for (const Permutation& p : all)
            for (const Permutation& q : all) {
                const bool nonzero = meet(p, q).rank() != 0;
                const bool overlap =
                    (p.inverse_descents().mask & q.inverse_descents().mask) != 0;
                REQUIRE(nonzero == overlap);
            }
    }
}

TEST_CASE("text form") {
    CHECK(to_string(parse_permutation("3214")) == "3214");
    const Permutation big = parse_permutation("10,3,2,1,4,5,6,7,8,9");
    CHECK(big.n() == 10);
    CHECK(to_string(big) == "10,3,2,1,4,5,6,7,8,9");
    CHECK(parse_permutation(to_string(big)) == big);
    CHECK_THROWS_AS(parse_permutation("33"), UsageError);
    CHECK_THROWS_AS(parse_permutation("abc"), UsageError);
    CHECK_THROWS_AS(parse_permutation(""), UsageError);
}

TEST_CASE("n = 16 fits the fixed bitset") {
    std::vector<int> w(16);
    for (int i = 0; i < 16; ++i) w[i] = 16 - i;
    const Permutation top(w);
    CHECK(top.rank() == 120);
    CHECK(pair_index(15, 16) == 119);
    CHECK(pair_at(119) == std::pair<int, int>{15, 16});
    CHECK(pair_at(0) == std::pair<int, int>{1, 2});
    CHECK(reverse_complement(top) == identity(16));
}
