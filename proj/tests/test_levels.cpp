#include "bruhat/descent_systems.hpp"
#include "bruhat/genfun.hpp"
#include "bruhat/levels.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace bruhat;

namespace {

std::vector<std::string> words(const std::vector<Permutation>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

} // namespace

TEST_CASE("enumerate_level basics") {
    CHECK(words(enumerate_level(4, 3).items) ==
          std::vector<std::string>{"1432", "2341", "2413", "3142", "3214", "4123"});
    CHECK(words(enumerate_level(4, 0).items) == std::vector<std::string>{"1234"});
    CHECK_THROWS_AS(enumerate_level(4, 7), UsageError);
    CHECK_THROWS_AS(enumerate_level(4, -1), UsageError);

    std::vector<std::size_t> sizes;
    for (int ell = 0; ell <= 6; ++ell) sizes.push_back(enumerate_level(4, ell).items.size());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1});
}

TEST_CASE("level sizes are the Mahonian coefficients (n <= 7)") {
    for (int n = 1; n <= 7; ++n) {
        const IntPolynomial f = q_factorial(n);
        BigInt total = 0;
        for (int ell = 0; ell <= pair_count(n); ++ell) {
            const auto lev = enumerate_level(n, ell);
            REQUIRE(BigInt(lev.items.size()) == f.coeff(ell));
            for (const Permutation& p : lev.items) REQUIRE(p.rank() == ell);
            REQUIRE(std::is_sorted(lev.items.begin(), lev.items.end()));
            // complement pairing of level sizes
            REQUIRE(BigInt(lev.items.size()) == f.coeff(pair_count(n) - ell));
            total += lev.items.size();
        }
        REQUIRE(total == q_factorial(n).value_at_one());
    }
}

TEST_CASE("threaded enumeration is deterministic") {
    for (int ell : {0, 3, 7, 10}) {
        const auto serial = enumerate_level(6, ell, 1);
        const auto parallel = enumerate_level(6, ell, 4);
        REQUIRE(words(serial.items) == words(parallel.items));
    }
}

TEST_CASE("multiplicity examples") {
    const GeneratorSet a = GeneratorSet::of(6, {1, 4});
    CHECK(multiplicity(a, 6, 2) == 1);
    CHECK(words(multiplicity_witnesses(a, 6, 2)) == std::vector<std::string>{"213546"});
    CHECK(multiplicity(a, 6, 3) == 3);
    CHECK(words(multiplicity_witnesses(a, 6, 3)) ==
          std::vector<std::string>{"213564", "215346", "231546"});
    CHECK(multiplicity(GeneratorSet{5, 0}, 5, 0) == 1);
}

TEST_CASE("multiplicities partition each level (n = 5)") {
    const auto census = multiplicity_census(5);
    for (int ell = 0; ell <= pair_count(5); ++ell) {
        long long total = 0;
        for (long long c : census[ell]) total += c;
        REQUIRE(BigInt(total) == q_factorial(5).coeff(ell));
    }
}

TEST_CASE("separated sets have multiplicity exactly 1 at minimal rank (n <= 6)") {
    for (int n = 2; n <= 6; ++n) {
        const auto census = multiplicity_census(n);
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            const int k = std::popcount(mask);
            if (is_separated_mask(mask)) REQUIRE(census[k][mask] == 1);
            else REQUIRE(census[k][mask] == 0);
        }
    }
}

TEST_CASE("upset_level") {
    CHECK(words(upset_level(parse_permutation("2134"), 3).items) ==
          std::vector<std::string>{"2341", "2413", "3214"});
    CHECK(upset_level(parse_permutation("2134"), 3).items.size() == 3);
    const Permutation p = parse_permutation("3142");
    CHECK(words(upset_level(p, p.rank()).items) == std::vector<std::string>{"3142"});
    CHECK_THROWS_AS(upset_level(p, 2), UsageError);  // below rank(p)
    CHECK_THROWS_AS(upset_level(p, 7), UsageError);
}

TEST_CASE("rank-1 upset level sizes match [n]!/(1+x) (n <= 6)") {
    for (int n = 3; n <= 6; ++n) {
        const IntPolynomial quot = exact_divide(q_factorial(n), q_int(2));
        for (const Permutation& g : enumerate_level(n, 1).items)
            for (int r = 1; r <= pair_count(n); ++r)
                REQUIRE(BigInt(upset_level(g, r).items.size()) == quot.coeff(r - 1));
    }
}

TEST_CASE("upset_size_full") {
    CHECK(upset_size_full(parse_permutation("2134")) == 12);
    CHECK(upset_size_full(identity(5)) == 120);
    CHECK(upset_size_full(parse_permutation("4321")) == 1);
    std::vector<int> w(9);
    for (int i = 0; i < 9; ++i) w[i] = i + 1;
    CHECK_THROWS_AS(upset_size_full(Permutation(w)), BudgetError);
}
