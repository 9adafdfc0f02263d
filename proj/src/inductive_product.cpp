#include "hzero/inductive_product.hpp"

#include <algorithm>

#include "hzero/stair_classes.hpp"

namespace hzero {

IprodFrame::IprodFrame(int n1, int n2) : n1_(n1), n2_(n2), k_((n1 + 1) / 2)
{
    if (n1 < 0 || n2 < 0)
        throw invalid_input("inductive product: negative degree");
}

Permutation iprod(const Permutation& s1, const Permutation& s2)
{
    const IprodFrame f(s1.degree(), s2.degree());
    std::vector<int> images(static_cast<std::size_t>(f.n()));
    for (int i = 1; i <= f.n1(); ++i)
        images[static_cast<std::size_t>(f.phi1(i) - 1)] = f.phi1(s1(i));
    for (int i = 1; i <= f.n2(); ++i)
        images[static_cast<std::size_t>(f.phi2(i) - 1)] = f.phi2(s2(i));
    return PermutationBuilder::adopt(std::move(images));
}

std::optional<std::pair<Permutation, Permutation>> iprod_factor(const Permutation& p, int n1, int n2)
{
    if (n1 < 0 || n2 < 0 || n1 + n2 != p.degree())
        throw invalid_input("iprod_factor: n1 + n2 must equal the degree");
    const IprodFrame f(n1, n2);
    std::vector<int> a(static_cast<std::size_t>(n1));
    std::vector<int> b(static_cast<std::size_t>(n2));
    for (int i = 1; i <= n1; ++i) {
        int y = p(f.phi1(i));
        if (!f.in_n1(y))
            return std::nullopt;
        a[static_cast<std::size_t>(i - 1)] = f.phi1_inverse(y);
    }
    for (int i = 1; i <= n2; ++i) {
        int y = p(f.phi2(i));
        if (!f.in_n2(y))
            return std::nullopt;
        b[static_cast<std::size_t>(i - 1)] = f.phi2_inverse(y);
    }
    return std::make_pair(PermutationBuilder::adopt(std::move(a)), PermutationBuilder::adopt(std::move(b)));
}

CrossingCounts crossing_counts(const Permutation& s1)
{
    const int k = (s1.degree() + 1) / 2;
    CrossingCounts c;
    for (int i = 1; i <= s1.degree(); ++i) {
        if (i <= k && s1(i) > k)
            ++c.p;
        else if (i > k && s1(i) <= k)
            ++c.q;
    }
    return c;
}

int iprod_length_law(const Permutation& s1, const Permutation& s2)
{
    if (!is_full_cycle(s1))
        throw invalid_input("iprod_length_law: " + cycle_string(s1) + " is not a full cycle");
    auto [p, q] = crossing_counts(s1);
    return length(s1) + length(s2) + (p + q) * s2.degree();
}

StairFactorization stair_factorization(const Composition& alpha)
{
    if (alpha.empty())
        throw invalid_input("stair_factorization: empty composition");
    StairFactorization out;
    out.head = stair_form(Composition{alpha[0]});
    out.tail = stair_form(alpha.tail(1));
    if (alpha[0] % 2 == 1) {
        out.tail = conj_w0(out.tail);
        out.tail_conjugated = true;
    }
    if (iprod(out.head, out.tail) != stair_form(alpha))
        throw consistency_error("stair form of " + to_string(alpha) + " does not factor");
    return out;
}

namespace {

std::vector<Permutation> products(const std::vector<Permutation>& left, const std::vector<Permutation>& right)
{
    std::vector<Permutation> out;
    out.reserve(left.size() * right.size());
    for (const auto& a : left)
        for (const auto& b : right)
            out.push_back(iprod(a, b));
    std::sort(out.begin(), out.end());
    return out;
}

EquivClass labeled(std::vector<Permutation> elements, const Composition& alpha)
{
    EquivClass cls = make_class(std::move(elements), alpha);
    cls.representative = stair_form(alpha);
    cls.even_orbit_partition = even_orbits(cls.representative);
    return cls;
}

} // namespace

EquivClass class_product(const Composition& alpha)
{
    if (!is_maximal(alpha) || alpha.empty() || alpha[0] % 2 != 0)
        throw invalid_input("class_product: " + to_string(alpha) + " must be maximal with an even first part");
    const Composition rest = alpha.tail(1);
    std::vector<Permutation> right{Permutation::identity(0)};
    if (!rest.empty())
        right = sigma_class(rest).elements;
    return labeled(products(sigma_n(alpha[0]), right), alpha);
}

std::vector<Permutation> sigma_star(const Composition& alpha)
{
    const OrbitPartition target = orbit_partition(stair_form(alpha));
    std::vector<Permutation> out;
    for (const auto& p : sigma_class(alpha).elements)
        if (orbit_partition(p) == target)
            out.push_back(p);
    return out;
}

std::vector<Permutation> sigma_star_product(const Composition& alpha)
{
    if (!is_maximal(alpha) || alpha.empty() || alpha[0] % 2 != 1)
        throw invalid_input("sigma_star_product: " + to_string(alpha) + " must be maximal with an odd first part");
    const Composition rest = alpha.tail(1);
    std::vector<Permutation> right{Permutation::identity(0)};
    if (!rest.empty()) {
        right.clear();
        for (const auto& p : sigma_star(rest))
            right.push_back(conj_w0(p));
    }
    return products(sigma_star(Composition{alpha[0]}), right);
}

bool odd_tail_is_hook(const Composition& alpha)
{
    const auto split = split_even_odd(alpha);
    return split.odd_tail.empty() || hook_kind(split.odd_tail) != HookKind::not_hook;
}

EquivClass generate_hookish(const Composition& alpha)
{
    if (!odd_tail_is_hook(alpha))
        throw invalid_input("generate_hookish: odd parts of " + to_string(alpha) + " do not form a hook");
    const auto split = split_even_odd(alpha);
    std::vector<Permutation> current{Permutation::identity(0)};
    if (!split.odd_tail.empty())
        current = sigma_class(split.odd_tail).elements;
    const auto& evens = split.even_prefix.parts();
    for (auto it = evens.rbegin(); it != evens.rend(); ++it)
        current = products(sigma_n(*it), current);
    return labeled(std::move(current), alpha);
}

} // namespace hzero
