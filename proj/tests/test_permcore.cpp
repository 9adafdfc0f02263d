#include <doctest.h>

#include "hzero/permutation.hpp"
#include "oracle.hpp"

using namespace hzero;

namespace {

Permutation cyc(int n, std::string_view text)
{
    return parse_cycles(n, text);
}

} // namespace

TEST_CASE("compose follows p(q(i))")
{
    CHECK(compose(Permutation::identity(3), Permutation::identity(3)) == Permutation::identity(3));
    Permutation s1 = Permutation::adjacent(3, 1);
    CHECK(compose(s1, s1).is_identity());
    CHECK(compose(s1, Permutation::adjacent(3, 2)) == Permutation({2, 3, 1}));
    CHECK(compose(s1, Permutation::adjacent(3, 2)) == cyc(3, "(1,2,3)"));
    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), invalid_input);
    for (int n = 0; n <= 5; ++n)
        for (const auto& p : oracle::all(n))
            for (const auto& q : oracle::all(n))
                REQUIRE(oracle::line(compose(oracle::perm(p), oracle::perm(q))) == oracle::compose(p, q));
}

TEST_CASE("inverse")
{
    CHECK(inverse(Permutation::identity(4)).is_identity());
    CHECK(inverse(cyc(5, "(1,5,2,4,3)")) == cyc(5, "(1,3,4,2,5)"));
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : all_permutations(n)) {
            REQUIRE(inverse(inverse(p)) == p);
            REQUIRE(compose(p, inverse(p)).is_identity());
        }
}

TEST_CASE("length")
{
    CHECK(length(Permutation::identity(5)) == 0);
    CHECK(length(cyc(3, "(1,3)")) == 3);
    CHECK(length(cyc(3, "(1,2)")) == 1);
    CHECK(length(cyc(3, "(2,3)")) == 1);
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : oracle::all(n))
            REQUIRE(length(oracle::perm(p)) == oracle::inversions(p));
}

TEST_CASE("descents")
{
    CHECK(left_descents(Permutation::identity(4)).empty());
    CHECK(right_descents(longest_element(3)) == std::vector<int>{1, 2});
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : all_permutations(n)) {
            auto right = right_descents(p);
            auto left = left_descents(p);
            for (int i = 1; i < n; ++i) {
                Permutation s = Permutation::adjacent(n, i);
                bool r = std::find(right.begin(), right.end(), i) != right.end();
                bool l = std::find(left.begin(), left.end(), i) != left.end();
                REQUIRE(r == (length(compose(p, s)) < length(p)));
                REQUIRE(l == (length(compose(s, p)) < length(p)));
            }
        }
    }
}

TEST_CASE("longest element and w0 laws")
{
    CHECK(longest_element(1).is_identity());
    CHECK(longest_element(3) == cyc(3, "(1,3)"));
    CHECK(longest_element(0).degree() == 0);
    for (int n = 0; n <= 10; ++n)
        CHECK(length(longest_element(n)) == n * (n - 1) / 2);
    for (int n = 1; n <= 7; ++n) {
        const Permutation w0 = longest_element(n);
        const int top = length(w0);
        for (const auto& w : all_permutations(n)) {
            REQUIRE(length(compose(w, w0)) == top - length(w));
            REQUIRE(length(compose(w0, w)) == top - length(w));
            REQUIRE(length(conj_w0(w)) == length(w));
            REQUIRE(conj_w0(w) == compose(w0, compose(w, w0)));
        }
    }
}

TEST_CASE("conj_adjacent and length_delta_conj")
{
    CHECK(conj_adjacent(Permutation::identity(4), 2).is_identity());
    CHECK(conj_adjacent(cyc(3, "(1,2,3)"), 1) == cyc(3, "(1,3,2)"));
    CHECK(conj_adjacent(cyc(6, "(1,6,2,5,3,4)"), 1) == cyc(6, "(1,5,3,4,2,6)"));
    CHECK(length_delta_conj(Permutation::identity(4), 1) == 0);
    CHECK(length_delta_conj(cyc(6, "(1,6,2,5,3,4)"), 2) == -2);
    CHECK(conj_adjacent(cyc(6, "(1,6,2,5,3,4)"), 2) == cyc(6, "(1,6,3,5,2,4)"));
    CHECK_THROWS_AS(conj_adjacent(Permutation::identity(3), 3), invalid_input);
    for (int n = 2; n <= 7; ++n) {
        for (const auto& p : all_permutations(n)) {
            for (int i = 1; i < n; ++i) {
                Permutation s = Permutation::adjacent(n, i);
                Permutation c = conj_adjacent(p, i);
                REQUIRE(c == compose(s, compose(p, s)));
                int d = length_delta_conj(p, i);
                REQUIRE(d == length(c) - length(p));
                REQUIRE((d == -2 || d == 0 || d == 2));
            }
        }
    }
}

TEST_CASE("conj_w0 is nu")
{
    CHECK(conj_w0(Permutation::identity(5)).is_identity());
    CHECK(conj_w0(Permutation::adjacent(3, 1)) == Permutation::adjacent(3, 2));
    CHECK(conj_w0(cyc(4, "(1,4,2)(3)")) == cyc(4, "(1,3,4)(2)"));
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i < n; ++i)
            CHECK(conj_w0(Permutation::adjacent(n, i)) == Permutation::adjacent(n, n - i));
}

TEST_CASE("cycles, cycle type and orbits")
{
    CHECK(cycles(Permutation::identity(3)).size() == 3);
    auto c = cycles(cyc(6, "(1,6,2,5)(3,4)"));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Cycle({1, 6, 2, 5}));
    CHECK(c[1] == Cycle({3, 4}));
    auto big = cycles(cyc(13, "(1,13,2,12)(3,11,4,10,5)(9,6,8)(7)"));
    REQUIRE(big.size() == 4);
    CHECK(big[2] == Cycle({6, 8, 9}));
    CHECK(Cycle({9, 6, 8}) == Cycle({6, 8, 9}));
    CHECK(cycle_type(Permutation::identity(4)) == Partition({1, 1, 1, 1}));
    CHECK(cycle_type(cyc(6, "(1,6,2,5)(3,4)")) == Partition({4, 2}));
    CHECK(cycle_type(cyc(3, "(1,3)")) == Partition({2, 1}));
    CHECK(even_orbits(Permutation::identity(3)).empty());
    CHECK(even_orbits(cyc(6, "(1,6,2,5)(3,4)")) == OrbitPartition({{1, 2, 5, 6}, {3, 4}}));
    for (int n = 0; n <= 6; ++n) {
        for (const auto& l : oracle::all(n)) {
            Permutation p = oracle::perm(l);
            std::vector<std::vector<int>> blocks;
            for (const auto& cy : cycles(p))
                blocks.emplace_back(cy.entries().begin(), cy.entries().end());
            REQUIRE(Permutation::from_cycles(n, blocks) == p);
            REQUIRE(cycle_type(p) == Partition(oracle::cycle_type(l)));
            REQUIRE(parse_cycles(n, cycle_string(p)) == p);
            std::set<std::set<int>> got;
            const OrbitPartition op = orbit_partition(p);
            for (const auto& b : op.blocks())
                got.insert(std::set<int>(b.begin(), b.end()));
            REQUIRE(got == oracle::orbits(l));
        }
    }
}

TEST_CASE("bruhat order against the subword oracle at n = 4")
{
    for (int n = 1; n <= 6; ++n) {
        const Permutation w0 = longest_element(n);
        for (const auto& w : all_permutations(n)) {
            REQUIRE(bruhat_leq(Permutation::identity(n), w));
            REQUIRE(bruhat_leq(w, w0));
        }
    }
    auto perms = oracle::all(4);
    for (const auto& w : perms) {
        auto below = oracle::bruhat_below(w);
        for (const auto& u : perms)
            REQUIRE(bruhat_leq(oracle::perm(u), oracle::perm(w)) == below.contains(u));
    }
}

TEST_CASE("w0 maps reverse or preserve bruhat order")
{
    for (int n = 1; n <= 5; ++n) {
        const Permutation w0 = longest_element(n);
        auto perms = all_permutations(n);
        for (const auto& u : perms) {
            for (const auto& w : perms) {
                bool le = bruhat_leq(u, w);
                REQUIRE(le == bruhat_leq(compose(w, w0), compose(u, w0)));
                REQUIRE(le == bruhat_leq(compose(w0, w), compose(w0, u)));
                REQUIRE(le == bruhat_leq(conj_w0(u), conj_w0(w)));
            }
        }
    }
}

TEST_CASE("length is subadditive with matching parity")
{
    for (int n = 1; n <= 5; ++n) {
        auto perms = all_permutations(n);
        for (const auto& p : perms)
            for (const auto& q : perms) {
                int l = length(compose(p, q));
                REQUIRE(l <= length(p) + length(q));
                REQUIRE((l - length(p) - length(q)) % 2 == 0);
            }
    }
}

TEST_CASE("invalid permutations are rejected")
{
    CHECK_THROWS_AS(Permutation({1, 1, 2}), invalid_input);
    CHECK_THROWS_AS(Permutation({0, 1}), invalid_input);
    CHECK_THROWS_AS(parse_cycles(3, "(1,4)"), invalid_input);
    CHECK_THROWS_AS(parse_cycles(3, "(1,2)(2,3)"), invalid_input);
    CHECK(cycle_string(Permutation::identity(0)) == "()");
}

TEST_CASE("lex rank is the position in lexicographic order")
{
    for (int n = 0; n <= 6; ++n) {
        auto perms = all_permutations(n);
        for (std::size_t k = 0; k < perms.size(); ++k)
            REQUIRE(lex_rank(perms[k]) == k);
    }
}
