#include "hzero/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace hzero {

namespace {

void require_generator(int n, int i, const char* where)
{
    if (i < 1 || i > n - 1)
        throw invalid_input(std::string(where) + ": generator index " + std::to_string(i) +
                            " out of range for degree " + std::to_string(n));
}

std::vector<int> inverse_images(const Permutation& p)
{
    std::vector<int> inv(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        inv[static_cast<std::size_t>(p(i) - 1)] = i;
    return inv;
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    const int n = degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw invalid_input("one-line images do not form a permutation of [1.." +
                                std::to_string(n) + "]");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 0)
        throw invalid_input("negative degree");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images), unchecked_tag{});
}

Permutation Permutation::adjacent(int n, int i)
{
    require_generator(n, i, "adjacent");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
    return Permutation(std::move(images), unchecked_tag{});
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycle_list)
{
    if (n < 0)
        throw invalid_input("negative degree");
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycle_list) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            int from = c[j];
            int to = c[(j + 1) % c.size()];
            if (from < 1 || from > n)
                throw invalid_input("cycle entry " + std::to_string(from) + " outside [1.." +
                                    std::to_string(n) + "]");
            if (images[static_cast<std::size_t>(from - 1)] != 0)
                throw invalid_input("cycles are not disjoint at entry " + std::to_string(from));
            images[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    for (int i = 1; i <= n; ++i)
        if (images[static_cast<std::size_t>(i - 1)] == 0)
            images[static_cast<std::size_t>(i - 1)] = i;
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

Cycle::Cycle(std::vector<int> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw invalid_input("empty cycle");
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw invalid_input("cycle entries must be distinct");
    std::rotate(entries_.begin(), std::min_element(entries_.begin(), entries_.end()), entries_.end());
}

OrbitPartition::OrbitPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks))
{
    for (auto& b : blocks_) {
        if (b.empty())
            throw invalid_input("empty block in orbit partition");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end());
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.degree() != q.degree())
        throw invalid_input("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                            std::to_string(q.degree()));
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        images[static_cast<std::size_t>(i - 1)] = p(q(i));
    return PermutationBuilder::adopt(std::move(images));
}

Permutation inverse(const Permutation& p)
{
    return PermutationBuilder::adopt(inverse_images(p));
}

int length(const Permutation& p)
{
    int inversions = 0;
    const int n = p.degree();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j))
                ++inversions;
    return inversions;
}

std::vector<int> left_descents(const Permutation& p)
{
    auto inv = inverse_images(p);
    std::vector<int> out;
    for (int i = 1; i < p.degree(); ++i)
        if (inv[static_cast<std::size_t>(i - 1)] > inv[static_cast<std::size_t>(i)])
            out.push_back(i);
    return out;
}

std::vector<int> right_descents(const Permutation& p)
{
    std::vector<int> out;
    for (int i = 1; i < p.degree(); ++i)
        if (p(i) > p(i + 1))
            out.push_back(i);
    return out;
}

Permutation longest_element(int n)
{
    if (n < 0)
        throw invalid_input("negative degree");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        images[static_cast<std::size_t>(i - 1)] = n - i + 1;
    return PermutationBuilder::adopt(std::move(images));
}

Permutation conj_adjacent(const Permutation& p, int i)
{
    const int n = p.degree();
    require_generator(n, i, "conj_adjacent");
    // s p s: swap positions i, i+1 and swap values i, i+1.
    auto swap_value = [i](int v) { return v == i ? i + 1 : (v == i + 1 ? i : v); };
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        int src = swap_value(x);
        images[static_cast<std::size_t>(x - 1)] = swap_value(p(src));
    }
    return PermutationBuilder::adopt(std::move(images));
}

int length_delta_conj(const Permutation& p, int i)
{
    require_generator(p.degree(), i, "length_delta_conj");
    const int a = p(i);
    const int b = p(i + 1);
    if ((a == i && b == i + 1) || (a == i + 1 && b == i))
        return 0; // i, i+1 fixed or a 2-cycle: s_i p s_i = p
    int inv_i = 0;
    int inv_next = 0;
    for (int x = 1; x <= p.degree(); ++x) {
        if (p(x) == i)
            inv_i = x;
        else if (p(x) == i + 1)
            inv_next = x;
    }
    const bool right = a > b;
    const bool left = inv_i > inv_next;
    if (right && left)
        return -2;
    if (!right && !left)
        return 2;
    return 0;
}

Permutation conj_w0(const Permutation& p)
{
    const int n = p.degree();
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        images[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
    return PermutationBuilder::adopt(std::move(images));
}

std::vector<Cycle> cycles(const Permutation& p, bool include_trivial)
{
    const int n = p.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Cycle> out;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)])
            continue;
        std::vector<int> entries;
        for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = p(x)) {
            seen[static_cast<std::size_t>(x - 1)] = true;
            entries.push_back(x);
        }
        if (entries.size() > 1 || include_trivial)
            out.emplace_back(std::move(entries));
    }
    // Starting each scan at the smallest unseen entry already yields
    // canonical rotation and ascending minima.
    return out;
}

Partition cycle_type(const Permutation& p)
{
    std::vector<int> sizes;
    for (const auto& c : cycles(p, true))
        sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return Partition(std::move(sizes));
}

OrbitPartition orbit_partition(const Permutation& p)
{
    std::vector<std::vector<int>> blocks;
    for (const auto& c : cycles(p, true))
        blocks.emplace_back(c.entries().begin(), c.entries().end());
    return OrbitPartition(std::move(blocks));
}

OrbitPartition even_orbits(const Permutation& p)
{
    std::vector<std::vector<int>> blocks;
    for (const auto& c : cycles(p, true))
        if (c.size() % 2 == 0)
            blocks.emplace_back(c.entries().begin(), c.entries().end());
    return OrbitPartition(std::move(blocks));
}

bool bruhat_leq(const Permutation& u, const Permutation& w)
{
    if (u.degree() != w.degree())
        throw invalid_input("bruhat_leq: degree mismatch");
    const int n = u.degree();
    std::vector<int> pu;
    std::vector<int> pw;
    pu.reserve(static_cast<std::size_t>(n));
    pw.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
        for (std::size_t j = 0; j < pu.size(); ++j)
            if (pu[j] > pw[j])
                return false;
    }
    return true;
}

std::string cycle_string(const Permutation& p, bool include_trivial)
{
    auto cs = cycles(p, include_trivial);
    if (cs.empty())
        return "()";
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(c.entries()[j]);
        }
        out += ')';
    }
    return out;
}

Permutation parse_cycles(int n, std::string_view text)
{
    std::vector<std::vector<int>> cycle_list;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw invalid_input("cycle string: expected '(' in \"" + std::string(text) + "\"");
        std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos)
            throw invalid_input("cycle string: unbalanced parenthesis");
        std::string_view body = text.substr(pos + 1, close - pos - 1);
        std::vector<int> entries;
        std::size_t b = 0;
        while (b < body.size()) {
            std::size_t comma = body.find(',', b);
            if (comma == std::string_view::npos)
                comma = body.size();
            std::string_view token = body.substr(b, comma - b);
            while (!token.empty() && token.front() == ' ')
                token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ')
                token.remove_suffix(1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
                throw invalid_input("cycle string: bad entry '" + std::string(token) + "'");
            entries.push_back(value);
            b = comma + 1;
        }
        if (!entries.empty())
            cycle_list.push_back(std::move(entries));
        pos = close + 1;
        skip_space();
    }
    return Permutation::from_cycles(n, cycle_list);
}

std::vector<Permutation> all_permutations(int n)
{
    if (n < 0)
        throw invalid_input("negative degree");
    std::vector<Permutation> out;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        out.push_back(PermutationBuilder::adopt(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::uint64_t lex_rank(const Permutation& p)
{
    const int n = p.degree();
    std::uint64_t rank = 0;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= n; ++i) {
        int smaller = 0;
        for (int v = 1; v < p(i); ++v)
            if (!used[static_cast<std::size_t>(v)])
                ++smaller;
        used[static_cast<std::size_t>(p(i))] = true;
        rank = rank * static_cast<std::uint64_t>(n - i + 1) + static_cast<std::uint64_t>(smaller);
    }
    return rank;
}

} // namespace hzero
