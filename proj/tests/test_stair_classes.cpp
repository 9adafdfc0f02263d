#include <doctest.h>

#include <set>

#include "hzero/cyclic_shift.hpp"
#include "hzero/inductive_product.hpp"
#include "hzero/stair_classes.hpp"
#include "oracle.hpp"

using namespace hzero;

namespace {

Permutation cyc(int n, std::string_view text)
{
    return parse_cycles(n, text);
}

std::vector<Permutation> sorted(int n, std::initializer_list<const char*> texts)
{
    std::vector<Permutation> out;
    for (auto t : texts)
        out.push_back(cyc(n, t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> brute_class(int n, const Composition& alpha)
{
    static std::map<int, std::vector<std::set<oracle::Line>>> cache;
    if (!cache.contains(n))
        cache[n] = oracle::max_classes(n);
    const auto& classes = cache[n];
    std::vector<Permutation> out;
    for (const auto& l : oracle::class_containing(classes, oracle::line(stair_form(alpha))))
        out.push_back(oracle::perm(l));
    std::sort(out.begin(), out.end());
    return out;
}

Composition hook(int k, int n)
{
    std::vector<int> parts{k};
    parts.resize(static_cast<std::size_t>(n - k + 1), 1);
    return Composition(parts);
}

} // namespace

TEST_CASE("stair sequence and stair forms")
{
    CHECK(stair_sequence(6) == std::vector<int>{1, 6, 2, 5, 3, 4});
    CHECK(stair_sequence(5) == std::vector<int>{1, 5, 2, 4, 3});
    CHECK(stair_form({1, 1, 1}).is_identity());
    CHECK(stair_form({4, 2}) == cyc(6, "(1,6,2,5)(3,4)"));
    CHECK(stair_form({3}) == cyc(3, "(1,3,2)"));
    CHECK(stair_form({2, 1}) == cyc(3, "(1,3)"));
    CHECK(stair_form({4, 5, 3, 1}) == cyc(13, "(1,13,2,12)(3,11,4,10,5)(9,6,8)(7)"));
    CHECK(stair_form(Composition{}).degree() == 0);
    for (int n = 1; n <= 10; ++n) {
        auto x = stair_sequence(n);
        std::set<int> values(x.begin(), x.end());
        REQUIRE(values.size() == static_cast<std::size_t>(n));
        REQUIRE(*values.begin() == 1);
        REQUIRE(*values.rbegin() == n);
    }
}

TEST_CASE("stair_is_max")
{
    CHECK(stair_is_max({4, 6, 2, 3, 1, 1}));
    CHECK_FALSE(stair_is_max({6, 4, 3, 2, 1, 1}));
    for (int n = 1; n <= 12; ++n)
        CHECK(stair_is_max(Composition{n}));
}

TEST_CASE("membership criterion")
{
    CHECK(member_sigma_alpha(cyc(5, "(1,3,4,2,5)"), {5}));
    CHECK_FALSE(member_sigma_alpha(cyc(5, "(1,2,3,4,5)"), {5}));
    CHECK_THROWS_AS(member_sigma_alpha(Permutation::identity(3), {1, 2}), invalid_input);
    CHECK_THROWS_AS(member_sigma_alpha(Permutation::identity(3), {2}), invalid_input);
    for (int n = 1; n <= 9; ++n)
        for (const auto& alpha : enumerate_maximal(n))
            REQUIRE(member_sigma_alpha(stair_form(alpha), alpha));
    for (int n = 1; n <= 7; ++n) {
        auto classes = oracle::max_classes(n);
        for (const auto& alpha : enumerate_maximal(n)) {
            auto expected = oracle::class_containing(classes, oracle::line(stair_form(alpha)));
            for (const auto& p : permutations_of_type(sort_to_partition(alpha)))
                REQUIRE(member_sigma_alpha(p, alpha) == expected.contains(oracle::line(p)));
        }
    }
}

TEST_CASE("oscillating and connected intervals on full cycles")
{
    CHECK(is_oscillating_cycle(Permutation::identity(1)));
    CHECK(is_oscillating_cycle(cyc(2, "(1,2)")));
    CHECK(is_oscillating_cycle(cyc(5, "(1,5,2,4,3)")));
    CHECK(is_oscillating_cycle(cyc(5, "(1,3,4,2,5)")));
    CHECK(is_oscillating_cycle(cyc(6, "(1,5,2,6,3,4)")));
    CHECK(has_connected_intervals_cycle(cyc(6, "(1,6,2,5,3,4)")));
    CHECK_FALSE(has_connected_intervals_cycle(cyc(6, "(1,5,2,6,3,4)")));
    CHECK(has_connected_intervals_cycle(Permutation::identity(1)));
    CHECK_THROWS_AS(is_oscillating_cycle(cyc(3, "(1,2)")), invalid_input);

    // Oscillating means sigma([m]) = [n-m+1, n] for some m in {(n-1)/2, n/2, (n+1)/2}.
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : permutations_of_type(Partition({n}))) {
            bool by_definition = false;
            for (int twice_m : {n - 1, n, n + 1}) {
                if (twice_m % 2 != 0 || twice_m <= 0)
                    continue;
                int m = twice_m / 2;
                bool ok = true;
                for (int i = 1; i <= m; ++i)
                    if (p(i) < n - m + 1)
                        ok = false;
                by_definition = by_definition || ok;
            }
            if (n <= 2)
                by_definition = true;
            REQUIRE(is_oscillating_cycle(p) == by_definition);
        }
    }
}

TEST_CASE("cycle standardization")
{
    CHECK(cst(Cycle({3, 11, 4, 10, 5})) == cyc(5, "(1,5,2,4,3)"));
    CHECK(cst(Cycle({7})) == Permutation::identity(1));
    for (const auto& c : cycles(stair_form({4, 5, 3, 1}), false)) {
        Permutation once = cst(c);
        REQUIRE(cst(cycles(once, false).front()) == once);
    }
    Permutation big = stair_form({4, 5, 3, 1});
    CHECK(is_oscillating(big));
    CHECK(has_connected_intervals(big));
    CHECK(is_oscillating(Permutation::identity(4)));
    CHECK(has_connected_intervals(Permutation::identity(4)));
    CHECK(is_oscillating(cyc(6, "(1,5,2,6,3,4)")));
    CHECK_FALSE(has_connected_intervals(cyc(6, "(1,5,2,6,3,4)")));
}

TEST_CASE("single cycle classes")
{
    CHECK(sigma_n(1) == sorted(1, {"(1)"}));
    CHECK(sigma_n(2) == sorted(2, {"(1,2)"}));
    CHECK(sigma_n(3) == sorted(3, {"(1,3,2)", "(1,2,3)"}));
    CHECK(sigma_n(4) == sorted(4, {"(1,4,2,3)", "(1,3,2,4)"}));
    CHECK(sigma_n(5) == sorted(5, {"(1,5,2,4,3)", "(1,5,2,3,4)", "(1,5,3,2,4)", "(1,4,2,3,5)", "(1,4,3,2,5)",
                                  "(1,3,4,2,5)"}));
    CHECK(sigma_n(6) == sorted(6, {"(1,6,2,5,3,4)", "(1,6,2,4,3,5)", "(1,6,3,4,2,5)", "(1,5,2,4,3,6)",
                                  "(1,5,3,4,2,6)", "(1,4,3,5,2,6)"}));
    for (int n = 1; n <= 7; ++n) {
        std::vector<Permutation> filtered;
        for (const auto& p : permutations_of_type(Partition({n})))
            if (is_oscillating(p) && has_connected_intervals(p))
                filtered.push_back(p);
        auto brute = brute_class(n, {n});
        REQUIRE(filtered == brute);
        REQUIRE(sigma_n(n) == brute);
    }
}

TEST_CASE("ins and del")
{
    CHECK(ins(3, 1, cyc(3, "(1,2,3)")) == cyc(4, "(1,3,2,4)"));
    CHECK(del(3, cyc(5, "(1,3,4,2,5)")) == cyc(4, "(1,3,2,4)"));
    CHECK(ins(3, 3, cyc(3, "(1,3,2)")) == cyc(4, "(1,4,2,3)"));
    CHECK_THROWS_AS(ins(1, 1, cyc(3, "(1,2,3)")), invalid_input);
    CHECK_THROWS_AS(ins(3, 0, cyc(3, "(1,2,3)")), invalid_input);
    CHECK_THROWS_AS(ins(5, 1, cyc(3, "(1,2,3)")), invalid_input);
    CHECK_THROWS_AS(del(4, cyc(3, "(1,2,3)")), invalid_input);
    for (int n = 1; n <= 6; ++n)
        for (const auto& s : permutations_of_type(Partition({n})))
            for (int k = 2; k <= n + 1; ++k)
                for (int p = 1; p <= n; ++p)
                    REQUIRE(del(k, ins(k, p, s)) == s);
}

TEST_CASE("psi recursion")
{
    CHECK(psi(4, cyc(3, "(1,2,3)")) == cyc(4, "(1,3,2,4)"));
    CHECK(psi(5, cyc(4, "(1,4,2,3)"), 1) == cyc(5, "(1,5,2,3,4)"));
    const char* expected[2][3] = {
        {"(1,5,3,2,4)", "(1,5,2,3,4)", "(1,5,2,4,3)"},
        {"(1,3,4,2,5)", "(1,4,3,2,5)", "(1,4,2,3,5)"},
    };
    const char* rows[2] = {"(1,4,2,3)", "(1,3,2,4)"};
    for (int r = 0; r < 2; ++r)
        for (int q = 0; q < 3; ++q)
            CHECK(psi(5, cyc(4, rows[r]), q) == cyc(5, expected[r][q]));
    CHECK_THROWS_AS(psi(5, cyc(4, "(1,4,2,3)")), invalid_input);
    CHECK_THROWS_AS(psi(4, cyc(3, "(1,2,3)"), 0), invalid_input);
    CHECK_THROWS_AS(psi(5, cyc(4, "(1,2,3,4)"), 0), invalid_input);
    for (int n = 4; n <= 9; ++n) {
        std::set<Permutation> image;
        std::size_t calls = 0;
        for (const auto& s : sigma_n(n - 1)) {
            std::vector<std::optional<int>> qs{std::nullopt};
            if (n % 2 == 1)
                qs = {0, 1, 2};
            for (auto q : qs) {
                Permutation t = psi(n, s, q);
                ++calls;
                image.insert(t);
                auto back = psi_inverse(t);
                REQUIRE(back.sigma == s);
                REQUIRE(back.q == q);
            }
        }
        REQUIRE(image.size() == calls);
        std::vector<Permutation> as_vector(image.begin(), image.end());
        REQUIRE(as_vector == sigma_n(n));
    }
}

TEST_CASE("hook properties")
{
    CHECK(hook_properties(Permutation::identity(4), {1, 1, 1, 1}));
    CHECK(hook_properties(cyc(5, "(1,5,3)"), {3, 1, 1}));
    CHECK_FALSE(hook_properties(cyc(5, "(2,5,3)"), {3, 1, 1}));
    CHECK_THROWS_AS(hook_properties(cyc(5, "(1,5)"), {3, 1, 1}), invalid_input);
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            Composition alpha = hook(k, n);
            std::vector<Permutation> filtered;
            for (const auto& p : permutations_of_type(sort_to_partition(alpha)))
                if (hook_properties(p, alpha))
                    filtered.push_back(p);
            REQUIRE(filtered == brute_class(n, alpha));
        }
    }
}

TEST_CASE("odd hook bijection")
{
    CHECK(odd_hook_phi(cyc(3, "(1,3,2)"), 4, {3, 1, 1}) == cyc(5, "(1,5,4)"));
    CHECK(odd_hook_phi(cyc(3, "(1,2,3)"), 3, {3, 1, 1}) == cyc(5, "(1,3,5)"));
    CHECK_THROWS_AS(odd_hook_phi(cyc(3, "(1,2,3)"), 5, {3, 1, 1}), invalid_input);
    CHECK_THROWS_AS(odd_hook_phi(cyc(3, "(1,2,3)"), 2, {4, 1}), invalid_input);
    CHECK(sigma_class({3, 1, 1}).elements ==
          sorted(5, {"(1,5,2)", "(1,2,5)", "(1,5,3)", "(1,3,5)", "(1,5,4)", "(1,4,5)"}));
    for (int n = 3; n <= 9; ++n) {
        for (int k = 3; k <= n; k += 2) {
            Composition alpha = hook(k, n);
            const int m = (k - 1) / 2;
            std::set<Permutation> image;
            std::size_t calls = 0;
            for (const auto& tau : sigma_n(k)) {
                for (int j = m + 1; j <= n - m; ++j) {
                    Permutation p = odd_hook_phi(tau, j, alpha);
                    ++calls;
                    image.insert(p);
                    for (const auto& c : cycles(p, false))
                        if (static_cast<int>(c.size()) == k)
                            REQUIRE(cst(c) == tau);
                    REQUIRE(member_sigma_alpha(p, alpha));
                }
            }
            REQUIRE(image.size() == calls);
        }
    }
}

TEST_CASE("even hook lift")
{
    CHECK(even_hook_lift(cyc(4, "(1,4,2,3)"), {4, 1, 1}) == cyc(6, "(1,6,2,5)"));
    CHECK(even_hook_lift(cyc(4, "(1,3,2,4)"), {4, 1, 1}) == cyc(6, "(1,5,2,6)"));
    CHECK(even_hook_lift(cyc(2, "(1,2)"), {2}) == cyc(2, "(1,2)"));
    CHECK(even_hook_lift(cyc(2, "(1,2)"), {2, 1}) == cyc(3, "(1,3)"));
    CHECK(sigma_class({4, 1, 1}).elements == sorted(6, {"(1,6,2,5)", "(1,5,2,6)"}));
    CHECK_THROWS_AS(even_hook_lift(cyc(3, "(1,3,2)"), {3, 1}), invalid_input);
}

TEST_CASE("sigma_class strategies")
{
    CHECK(sigma_strategy({5}) == SigmaStrategy::single_cycle);
    CHECK(sigma_strategy({3, 1, 1}) == SigmaStrategy::odd_hook);
    CHECK(sigma_strategy({1, 1, 1}) == SigmaStrategy::odd_hook);
    CHECK(sigma_strategy({4, 1, 1}) == SigmaStrategy::even_hook);
    CHECK(sigma_strategy({2, 4, 3, 1, 1}) == SigmaStrategy::hookish_product);
    CHECK(sigma_strategy({3, 3}) == SigmaStrategy::predicate_filter);
    CHECK_THROWS_AS(sigma_strategy({1, 2}), invalid_input);
    CHECK(sigma_class({1, 1, 1}).elements == std::vector<Permutation>{Permutation::identity(3)});
    CHECK(sigma_class({5}).elements == sigma_n(5));
    for (int n = 1; n <= 7; ++n) {
        for (const auto& alpha : enumerate_maximal(n)) {
            EquivClass cls = sigma_class(alpha);
            REQUIRE(cls.elements == brute_class(n, alpha));
            REQUIRE(cls.representative == stair_form(alpha));
            REQUIRE(cls.alpha == alpha);
        }
    }
}

TEST_CASE("conjugation by w0 keeps the predicates")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : all_permutations(n))
            if (is_oscillating(p) && has_connected_intervals(p)) {
                REQUIRE(is_oscillating(conj_w0(p)));
                REQUIRE(has_connected_intervals(conj_w0(p)));
            }
}

TEST_CASE("permutations of a given type")
{
    CHECK(permutations_of_type(Partition({3, 3})).size() == 40);
    CHECK(permutations_of_type(Partition({2, 2, 1})).size() == 15);
    for (int n = 0; n <= 6; ++n) {
        std::size_t total = 0;
        for (const auto& lambda : partitions(n)) {
            auto ps = permutations_of_type(lambda);
            for (const auto& p : ps)
                REQUIRE(cycle_type(p) == lambda);
            total += ps.size();
        }
        REQUIRE(total == all_permutations(n).size());
    }
}

TEST_CASE("non-hook odd class (3,3)")
{
    EquivClass cls = sigma_class({3, 3});
    CHECK(cls.elements.size() == 22);
    std::map<OrbitPartition, int> multiplicity;
    for (const auto& p : cls.elements)
        ++multiplicity[orbit_partition(p)];
    std::vector<int> counts;
    for (auto [partition, count] : multiplicity)
        counts.push_back(count);
    std::sort(counts.rbegin(), counts.rend());
    CHECK(counts == std::vector<int>{4, 4, 4, 4, 4, 2});
    auto first_row = sorted(6, {"(1,6,2)(3,4,5)", "(1,2,6)(3,4,5)", "(1,6,2)(3,5,4)", "(1,2,6)(3,5,4)"});
    CHECK(sigma_star({3, 3}) == first_row);
}
