#include "hzero/stair_classes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hzero/inductive_product.hpp"

namespace hzero {

std::vector<int> stair_sequence(int n)
{
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos) {
        int i = (pos + 1) / 2;
        x[static_cast<std::size_t>(pos - 1)] = (pos % 2 == 1) ? i : n - i + 1;
    }
    return x;
}

Permutation stair_form(const Composition& alpha)
{
    const int n = alpha.size();
    auto x = stair_sequence(n);
    std::vector<std::vector<int>> blocks;
    std::size_t start = 0;
    for (int part : alpha.parts()) {
        blocks.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(start),
                            x.begin() + static_cast<std::ptrdiff_t>(start + static_cast<std::size_t>(part)));
        start += static_cast<std::size_t>(part);
    }
    return Permutation::from_cycles(n, blocks);
}

bool stair_is_max(const Composition& alpha)
{
    return is_maximal(alpha);
}

bool member_sigma_alpha(const Permutation& p, const Composition& alpha)
{
    if (!is_maximal(alpha))
        throw invalid_input("member_sigma_alpha: " + to_string(alpha) + " is not maximal");
    if (alpha.size() != p.degree())
        throw invalid_input("member_sigma_alpha: size of " + to_string(alpha) +
                            " differs from the permutation degree");
    if (cycle_type(p) != sort_to_partition(alpha))
        return false;
    Permutation sf = stair_form(alpha);
    return length(p) == length(sf) && even_orbits(p) == even_orbits(sf);
}

bool is_full_cycle(const Permutation& p)
{
    const int n = p.degree();
    if (n == 0)
        return false;
    int steps = 1;
    for (int x = p(1); x != 1; x = p(x))
        ++steps;
    return steps == n;
}

std::vector<int> cycle_from_one(const Permutation& p)
{
    if (!is_full_cycle(p))
        throw invalid_input("expected a full cycle, got " + cycle_string(p));
    std::vector<int> out{1};
    for (int x = p(1); x != 1; x = p(x))
        out.push_back(x);
    return out;
}

Permutation full_cycle(const std::vector<int>& entries)
{
    return Permutation::from_cycles(static_cast<int>(entries.size()), {entries});
}

bool is_oscillating_cycle(const Permutation& c)
{
    auto e = cycle_from_one(c);
    const int k = c.degree();
    if (k <= 2)
        return true;
    int half = k / 2;
    if (k % 2 == 1) {
        int middle = (k + 1) / 2;
        e.erase(std::find(e.begin(), e.end(), middle));
        half = (k - 1) / 2;
    }
    // Linear alternation from 1 (low) with equally many low and high
    // entries is the same as cyclic alternation.
    for (std::size_t j = 0; j < e.size(); ++j) {
        bool low = e[j] <= half;
        if (low != (j % 2 == 0))
            return false;
    }
    return true;
}

bool has_connected_intervals_cycle(const Permutation& c)
{
    auto e = cycle_from_one(c);
    const int k = c.degree();
    const std::size_t len = e.size();
    for (int i = 1; 2 * i <= k; ++i) {
        auto inside = [&](int v) { return v >= i && v <= k - i + 1; };
        int arc_starts = 0;
        for (std::size_t j = 0; j < len; ++j)
            if (inside(e[j]) && !inside(e[(j + len - 1) % len]))
                ++arc_starts;
        // arc_starts == 0 only when the interval is everything.
        if (arc_starts > 1)
            return false;
    }
    return true;
}

Permutation cst(const Cycle& c)
{
    auto entries = c.entries();
    std::vector<int> sorted(entries.begin(), entries.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ranked;
    ranked.reserve(entries.size());
    for (int v : entries)
        ranked.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return full_cycle(ranked);
}

bool is_oscillating(const Permutation& p)
{
    for (const auto& c : cycles(p, false))
        if (!is_oscillating_cycle(cst(c)))
            return false;
    return true;
}

bool has_connected_intervals(const Permutation& p)
{
    for (const auto& c : cycles(p, false))
        if (!has_connected_intervals_cycle(cst(c)))
            return false;
    return true;
}

bool hook_properties(const Permutation& p, const Composition& alpha)
{
    const int k = hook_arm(alpha);
    if (alpha.size() != p.degree() || cycle_type(p) != sort_to_partition(alpha))
        throw invalid_input("hook_properties: permutation is not of type " + to_string(alpha));
    if (!is_oscillating(p) || !has_connected_intervals(p))
        return false;
    if (k == 1)
        return true;
    const int n = p.degree();
    const int m = (k % 2 == 1) ? (k - 1) / 2 : k / 2;
    std::set<int> long_cycle;
    for (const auto& c : cycles(p, false))
        if (static_cast<int>(c.size()) == k)
            long_cycle.insert(c.entries().begin(), c.entries().end());
    for (int i = 1; i <= m; ++i)
        if (!long_cycle.contains(i) || !long_cycle.contains(n - i + 1))
            return false;
    return true;
}

Permutation ins(int k, int pos, const Permutation& sigma)
{
    const int n = sigma.degree();
    if (k < 2 || k > n + 1)
        throw invalid_input("ins: k = " + std::to_string(k) + " outside [2, " + std::to_string(n + 1) + "]");
    if (pos < 1 || pos > n)
        throw invalid_input("ins: position " + std::to_string(pos) + " outside [1, " + std::to_string(n) + "]");
    auto e = cycle_from_one(sigma);
    for (int& v : e)
        if (v >= k)
            ++v;
    e.insert(e.begin() + pos, k);
    return full_cycle(e);
}

Permutation del(int k, const Permutation& sigma)
{
    const int n = sigma.degree();
    if (k < 2 || k > n)
        throw invalid_input("del: k = " + std::to_string(k) + " outside [2, " + std::to_string(n) + "]");
    auto e = cycle_from_one(sigma);
    e.erase(std::find(e.begin(), e.end(), k));
    for (int& v : e)
        if (v > k)
            --v;
    return full_cycle(e);
}

namespace {

bool in_sigma_single_cycle(const Permutation& p)
{
    return is_full_cycle(p) && is_oscillating_cycle(p) && has_connected_intervals_cycle(p);
}

} // namespace

Permutation psi(int n, const Permutation& sigma, std::optional<int> q)
{
    if (n < 4)
        throw invalid_input("psi: n must be at least 4");
    if (sigma.degree() != n - 1 || !in_sigma_single_cycle(sigma))
        throw invalid_input("psi: " + cycle_string(sigma) + " is not in Sigma_(" + std::to_string(n - 1) + ")");
    auto e = cycle_from_one(sigma);
    auto position_of = [&](int v) {
        return static_cast<int>(std::find(e.begin(), e.end(), v) - e.begin());
    };
    if (n % 2 == 0) {
        if (q)
            throw invalid_input("psi: q must be absent for even n");
        const int half = n / 2;
        const int m = half + 1;
        const int anchor = std::min(inverse(sigma)(half), half);
        return ins(m, position_of(anchor) + 1, sigma);
    }
    if (!q || *q < 0 || *q > 2)
        throw invalid_input("psi: odd n needs q in {0,1,2}");
    const int m = (n + 1) / 2;
    auto in_pair = [m](int v) { return v == m - 1 || v == m; };
    for (std::size_t p = 1; p < e.size(); ++p)
        if (!in_pair(e[p - 1]) && in_pair(e[p]))
            return ins(m, static_cast<int>(p) + *q, sigma);
    throw consistency_error("psi: pair {m-1, m} not found as an arc");
}

PsiPreimage psi_inverse(const Permutation& sigma)
{
    const int n = sigma.degree();
    if (n < 4)
        throw invalid_input("psi_inverse: degree must be at least 4");
    if (!in_sigma_single_cycle(sigma))
        throw invalid_input("psi_inverse: " + cycle_string(sigma) + " is not in Sigma_(" + std::to_string(n) + ")");
    if (n % 2 == 0)
        return {del(n / 2 + 1, sigma), std::nullopt};
    const int m = (n + 1) / 2;
    auto e = cycle_from_one(sigma);
    const std::size_t len = e.size();
    auto in_triple = [m](int v) { return v >= m - 1 && v <= m + 1; };
    std::size_t at_m = static_cast<std::size_t>(std::find(e.begin(), e.end(), m) - e.begin());
    for (std::size_t start = 0; start < len; ++start) {
        if (in_triple(e[start]) && in_triple(e[(start + 1) % len]) && in_triple(e[(start + 2) % len])) {
            int q = static_cast<int>((at_m + len - start) % len);
            return {del(m, sigma), q};
        }
    }
    throw consistency_error("psi_inverse: {m-1, m, m+1} is not connected");
}

std::vector<Permutation> sigma_n(int n)
{
    if (n < 1)
        throw invalid_input("sigma_n: n must be positive");
    std::vector<Permutation> current;
    if (n == 1)
        return {Permutation::identity(1)};
    if (n == 2)
        return {full_cycle({1, 2})};
    current = {full_cycle({1, 2, 3}), full_cycle({1, 3, 2})};
    for (int d = 4; d <= n; ++d) {
        std::vector<Permutation> next;
        next.reserve(current.size() * (d % 2 == 0 ? 1 : 3));
        for (const auto& s : current) {
            if (d % 2 == 0) {
                next.push_back(psi(d, s));
            } else {
                for (int q = 0; q < 3; ++q)
                    next.push_back(psi(d, s, q));
            }
        }
        current = std::move(next);
    }
    for (const auto& s : current)
        if (!in_sigma_single_cycle(s))
            throw consistency_error("psi produced " + cycle_string(s) + " outside Sigma_(n)");
    std::sort(current.begin(), current.end());
    return current;
}

Permutation odd_hook_phi(const Permutation& tau, int j, const Composition& alpha)
{
    if (hook_kind(alpha) != HookKind::odd_hook || alpha[0] < 3)
        throw invalid_input("odd_hook_phi: " + to_string(alpha) + " is not an odd hook with k >= 3");
    const int k = alpha[0];
    const int n = alpha.size();
    const int m = (k - 1) / 2;
    if (tau.degree() != k || !in_sigma_single_cycle(tau))
        throw invalid_input("odd_hook_phi: tau is not in Sigma_(" + std::to_string(k) + ")");
    if (j < m + 1 || j > n - m)
        throw invalid_input("odd_hook_phi: j = " + std::to_string(j) + " outside [" +
                            std::to_string(m + 1) + ", " + std::to_string(n - m) + "]");
    std::vector<int> support;
    for (int i = 1; i <= m; ++i)
        support.push_back(i);
    support.push_back(j);
    for (int i = n - m + 1; i <= n; ++i)
        support.push_back(i);
    std::vector<int> entries;
    for (int r : cycle_from_one(tau))
        entries.push_back(support[static_cast<std::size_t>(r - 1)]);
    return Permutation::from_cycles(n, {entries});
}

Permutation even_hook_lift(const Permutation& tau, const Composition& alpha)
{
    if (hook_kind(alpha) != HookKind::even_hook)
        throw invalid_input("even_hook_lift: " + to_string(alpha) + " is not an even hook");
    const int l = alpha[0];
    if (tau.degree() != l || l % 2 != 0)
        throw invalid_input("even_hook_lift: tau must have even degree " + std::to_string(l));
    if (!in_sigma_single_cycle(tau))
        throw invalid_input("even_hook_lift: tau is not in Sigma_(" + std::to_string(l) + ")");
    return iprod(tau, Permutation::identity(alpha.size() - l));
}

SigmaStrategy sigma_strategy(const Composition& alpha)
{
    if (!is_maximal(alpha))
        throw invalid_input(to_string(alpha) + " is not a maximal composition");
    if (alpha.length() == 1)
        return SigmaStrategy::single_cycle;
    switch (hook_kind(alpha)) {
    case HookKind::odd_hook: return SigmaStrategy::odd_hook;
    case HookKind::even_hook: return SigmaStrategy::even_hook;
    case HookKind::not_hook: break;
    }
    if (odd_tail_is_hook(alpha))
        return SigmaStrategy::hookish_product;
    return SigmaStrategy::predicate_filter;
}

const char* to_string(SigmaStrategy strategy)
{
    switch (strategy) {
    case SigmaStrategy::single_cycle: return "single_cycle";
    case SigmaStrategy::odd_hook: return "odd_hook";
    case SigmaStrategy::even_hook: return "even_hook";
    case SigmaStrategy::hookish_product: return "hookish_product";
    case SigmaStrategy::predicate_filter: return "predicate_filter";
    }
    return "unknown";
}

namespace {

void permutations_of_type_rec(std::vector<int>& images, std::vector<bool>& used,
                              std::map<int, int>& remaining, std::vector<Permutation>& out)
{
    const int n = static_cast<int>(images.size());
    int start = 0;
    for (int x = 1; x <= n; ++x) {
        if (!used[static_cast<std::size_t>(x)]) {
            start = x;
            break;
        }
    }
    if (start == 0) {
        out.push_back(PermutationBuilder::adopt(images));
        return;
    }
    for (auto& [len, count] : remaining) {
        if (count == 0)
            continue;
        --count;
        std::vector<int> cyc{start};
        used[static_cast<std::size_t>(start)] = true;
        // Extend the cycle through every ordered choice of len-1 unused entries.
        auto extend = [&](auto&& self) -> void {
            if (static_cast<int>(cyc.size()) == len) {
                for (std::size_t t = 0; t < cyc.size(); ++t)
                    images[static_cast<std::size_t>(cyc[t] - 1)] = cyc[(t + 1) % cyc.size()];
                permutations_of_type_rec(images, used, remaining, out);
                return;
            }
            for (int y = start + 1; y <= n; ++y) {
                if (used[static_cast<std::size_t>(y)])
                    continue;
                used[static_cast<std::size_t>(y)] = true;
                cyc.push_back(y);
                self(self);
                cyc.pop_back();
                used[static_cast<std::size_t>(y)] = false;
            }
        };
        extend(extend);
        used[static_cast<std::size_t>(start)] = false;
        ++count;
    }
}

long double class_size_estimate(const Partition& type)
{
    // n! / prod(len^count * count!)
    long double size = std::tgamma(static_cast<long double>(type.size()) + 1);
    std::map<int, int> counts;
    for (int part : type.parts())
        ++counts[part];
    for (auto [len, count] : counts)
        size /= std::pow(static_cast<long double>(len), count) * std::tgamma(static_cast<long double>(count) + 1);
    return size;
}

} // namespace

std::vector<Permutation> permutations_of_type(const Partition& type)
{
    const int n = type.size();
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::map<int, int> remaining;
    for (int part : type.parts())
        ++remaining[part];
    std::vector<Permutation> out;
    permutations_of_type_rec(images, used, remaining, out);
    std::sort(out.begin(), out.end());
    return out;
}

EquivClass sigma_class(const Composition& alpha)
{
    const SigmaStrategy strategy = sigma_strategy(alpha);
    const int n = alpha.size();
    std::vector<Permutation> elements;
    switch (strategy) {
    case SigmaStrategy::single_cycle:
        elements = sigma_n(n);
        break;
    case SigmaStrategy::odd_hook: {
        const int k = alpha[0];
        if (k == 1) {
            elements = {Permutation::identity(n)};
            break;
        }
        const int m = (k - 1) / 2;
        for (const auto& tau : sigma_n(k))
            for (int j = m + 1; j <= n - m; ++j)
                elements.push_back(odd_hook_phi(tau, j, alpha));
        break;
    }
    case SigmaStrategy::even_hook:
        for (const auto& tau : sigma_n(alpha[0]))
            elements.push_back(even_hook_lift(tau, alpha));
        break;
    case SigmaStrategy::hookish_product:
        elements = generate_hookish(alpha).elements;
        break;
    case SigmaStrategy::predicate_filter: {
        Partition type = sort_to_partition(alpha);
        if (class_size_estimate(type) > static_cast<long double>(filter_candidate_limit))
            throw resource_limit("Sigma" + to_string(alpha) + ": too many candidates of type for the predicate filter");
        for (auto& p : permutations_of_type(type))
            if (member_sigma_alpha(p, alpha))
                elements.push_back(std::move(p));
        break;
    }
    }

    EquivClass cls = make_class(std::move(elements), alpha);
    cls.representative = stair_form(alpha);
    cls.even_orbit_partition = even_orbits(cls.representative);
    if (!cls.contains(cls.representative))
        throw consistency_error("Sigma" + to_string(alpha) + " misses its stair form");
    for (const auto& p : cls.elements)
        if (!member_sigma_alpha(p, alpha))
            throw consistency_error("Sigma" + to_string(alpha) + " contains " + cycle_string(p) +
                                    " which fails the membership criterion");
    return cls;
}

} // namespace hzero
