#include "hzero/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace hzero {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int part : parts_)
        if (part < 1)
            throw invalid_input("composition parts must be positive");
}

int Composition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::tail(std::size_t from) const
{
    if (from >= parts_.size())
        return Composition();
    return Composition(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(from), parts_.end()));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw invalid_input("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw invalid_input("partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool is_maximal(const Composition& alpha)
{
    auto parts = alpha.parts();
    std::size_t k = 0;
    while (k < parts.size() && parts[k] % 2 == 0)
        ++k;
    for (std::size_t i = k; i < parts.size(); ++i) {
        if (parts[i] % 2 == 0)
            return false;
        if (i > k && parts[i] > parts[i - 1])
            return false;
    }
    return true;
}

namespace {

// Compositions of `total` into even parts, lexicographic.
void even_compositions(int total, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out)
{
    if (total == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = 2; part <= total; part += 2) {
        prefix.push_back(part);
        even_compositions(total - part, prefix, out);
        prefix.pop_back();
    }
}

// Partitions of `total` into odd parts <= max_part, lexicographic increasing.
void odd_partitions(int total, int max_part, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out)
{
    if (total == 0) {
        out.push_back(prefix);
        return;
    }
    int top = std::min(total, max_part);
    if (top % 2 == 0)
        --top;
    for (int part = 1; part <= top; part += 2) {
        prefix.push_back(part);
        odd_partitions(total - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> enumerate_maximal(int n)
{
    if (n < 0)
        throw invalid_input("enumerate_maximal: n must be nonnegative");
    std::vector<Composition> result;
    std::vector<int> scratch;
    for (int even_total = 0; even_total <= n; even_total += 2) {
        std::vector<std::vector<int>> evens;
        even_compositions(even_total, scratch, evens);
        std::vector<std::vector<int>> odds;
        odd_partitions(n - even_total, n, scratch, odds);
        for (const auto& e : evens) {
            for (const auto& o : odds) {
                std::vector<int> parts = e;
                parts.insert(parts.end(), o.begin(), o.end());
                result.emplace_back(std::move(parts));
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const Composition& a, const Composition& b) {
        auto sa = split_even_odd(a);
        auto sb = split_even_odd(b);
        if (sa.even_prefix != sb.even_prefix)
            return sa.even_prefix < sb.even_prefix;
        return sa.odd_tail < sb.odd_tail;
    });
    return result;
}

std::uint64_t count_maximal(int n)
{
    if (n < 0)
        throw invalid_input("count_maximal: n must be nonnegative");
    // even[t]: compositions of t into even parts.
    std::vector<std::uint64_t> even(static_cast<std::size_t>(n) + 1, 0);
    even[0] = 1;
    for (int t = 2; t <= n; t += 2)
        for (int part = 2; part <= t; part += 2)
            even[static_cast<std::size_t>(t)] += even[static_cast<std::size_t>(t - part)];
    // odd[t]: partitions of t into odd parts.
    std::vector<std::uint64_t> odd(static_cast<std::size_t>(n) + 1, 0);
    odd[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int t = part; t <= n; ++t)
            odd[static_cast<std::size_t>(t)] += odd[static_cast<std::size_t>(t - part)];
    std::uint64_t total = 0;
    for (int t = 0; t <= n; t += 2)
        total += even[static_cast<std::size_t>(t)] * odd[static_cast<std::size_t>(n - t)];
    return total;
}

Partition sort_to_partition(const Composition& alpha)
{
    std::vector<int> parts(alpha.parts().begin(), alpha.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

EvenOddSplit split_even_odd(const Composition& alpha)
{
    if (!is_maximal(alpha))
        throw invalid_input("split_even_odd: composition " + to_string(alpha) + " is not maximal");
    auto parts = alpha.parts();
    std::size_t j = 0;
    while (j < parts.size() && parts[j] % 2 == 0)
        ++j;
    return EvenOddSplit{
        Composition(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(j))),
        alpha.tail(j), static_cast<int>(j)};
}

HookKind hook_kind(const Composition& alpha)
{
    auto parts = alpha.parts();
    if (parts.empty())
        return HookKind::not_hook;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] != 1)
            return HookKind::not_hook;
    return parts[0] % 2 == 1 ? HookKind::odd_hook : HookKind::even_hook;
}

int hook_arm(const Composition& alpha)
{
    if (hook_kind(alpha) == HookKind::not_hook)
        throw invalid_input("composition " + to_string(alpha) + " is not a hook");
    return alpha[0];
}

namespace {

void partitions_rec(int total, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (total == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(total, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(total - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n)
{
    if (n < 0)
        throw invalid_input("partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

Composition parse_composition(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw invalid_input("cannot parse composition part '" + std::string(token) + "'");
        parts.push_back(value);
        pos = end + 1;
        if (end == text.size())
            break;
        if (pos == text.size())
            throw invalid_input("trailing comma in composition");
    }
    return Composition(std::move(parts));
}

std::string to_string(const Composition& alpha)
{
    std::string out = "(";
    for (int i = 0; i < alpha.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(alpha[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

} // namespace hzero
