#include "hzero/counting.hpp"

#include <map>

#include "hzero/errors.hpp"

namespace hzero {

namespace {

BigInt power(int base, int exponent)
{
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

BigInt size_sigma_n(int n)
{
    if (n < 1)
        throw invalid_input("size_sigma_n: n must be positive");
    if (n <= 2)
        return 1;
    return 2 * power(3, (n - 3) / 2);
}

BigInt size_sigma_odd_hook(const Composition& alpha)
{
    if (hook_kind(alpha) != HookKind::odd_hook)
        throw invalid_input("size_sigma_odd_hook: " + to_string(alpha) + " is not an odd hook");
    const int k = alpha[0];
    const int n = alpha.size();
    if (k == 1)
        return 1;
    return 2 * (n - k + 1) * power(3, (k - 3) / 2);
}

BigInt size_sigma_formula(const Composition& alpha)
{
    const auto split = split_even_odd(alpha);
    const Composition& tail = split.odd_tail;
    if (!tail.empty() && hook_kind(tail) == HookKind::not_hook)
        throw invalid_input("size_sigma_formula: odd parts of " + to_string(alpha) + " do not form a hook");
    int p = 0;
    int half_sum = 0;
    for (int part : split.even_prefix.parts()) {
        if (part >= 4) {
            ++p;
            half_sum += part / 2;
        }
    }
    int q = -2 * p + half_sum;
    const int r = tail.empty() ? 0 : tail[0];
    if (r <= 1)
        return power(2, p) * power(3, q);
    const int n_tail = tail.size();
    return (n_tail - r + 1) * power(2, p + 1) * power(3, q + (r - 3) / 2);
}

BigInt brichard_sum(int n)
{
    if (n < 0)
        throw invalid_input("brichard_sum: n must be nonnegative");
    BigInt total = 0;
    for (const auto& lambda : partitions(n)) {
        std::map<int, int> even_multiplicity;
        int even_parts = 0;
        for (int part : lambda.parts()) {
            if (part % 2 == 0) {
                ++even_multiplicity[part];
                ++even_parts;
            }
        }
        BigInt m = 1;
        for (auto [part, count] : even_multiplicity)
            m *= factorial(count);
        total += factorial(even_parts) / m;
    }
    return total;
}

BigInt count_maximal_exact(int n)
{
    if (n < 0)
        throw invalid_input("count_maximal_exact: n must be nonnegative");
    // odd[m]: partitions of m into odd parts.
    std::vector<BigInt> odd(static_cast<std::size_t>(n) + 1, 0);
    odd[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int m = part; m <= n; ++m)
            odd[static_cast<std::size_t>(m)] += odd[static_cast<std::size_t>(m - part)];
    BigInt total = 0;
    for (int e = 0; e <= n; e += 2) {
        BigInt even_compositions = e == 0 ? BigInt(1) : power(2, e / 2 - 1);
        total += even_compositions * odd[static_cast<std::size_t>(n - e)];
    }
    return total;
}

BigInt dim_center(int n)
{
    BigInt sum = brichard_sum(n);
    if (sum != count_maximal_exact(n))
        throw consistency_error("dim_center: Brichard sum differs from the number of maximal compositions");
    return sum;
}

} // namespace hzero
