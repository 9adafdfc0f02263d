#include "hzero/hecke0.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hzero/stair_classes.hpp"

namespace hzero {

HeckeElement HeckeElement::basis(const Permutation& w)
{
    HeckeElement x(w.degree());
    x.terms_.emplace(w, 1);
    return x;
}

BigInt HeckeElement::coefficient(const Permutation& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void HeckeElement::add(const Permutation& w, const BigInt& c)
{
    if (w.degree() != n_)
        throw invalid_input("HeckeElement: degree mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other)
{
    if (other.n_ != n_)
        throw invalid_input("HeckeElement: degree mismatch");
    for (const auto& [w, c] : other.terms_)
        add(w, c);
    return *this;
}

HeckeElement operator-(const HeckeElement& a)
{
    HeckeElement out(a.n_);
    for (const auto& [w, c] : a.terms_)
        out.terms_.emplace(w, -c);
    return out;
}

namespace {

void check_generator(int i, int n)
{
    if (i < 1 || i > n - 1)
        throw invalid_input("generator index " + std::to_string(i) + " outside [1, " + std::to_string(n - 1) + "]");
}

} // namespace

HeckeElement left_mul_gen(int i, const HeckeElement& x)
{
    const int n = x.degree();
    check_generator(i, n);
    HeckeElement out(n);
    for (const auto& [w, c] : x.terms()) {
        std::vector<int> images(w.images().begin(), w.images().end());
        auto a = std::find(images.begin(), images.end(), i);
        auto b = std::find(images.begin(), images.end(), i + 1);
        if (a < b) {
            std::swap(*a, *b);
            out.add(PermutationBuilder::adopt(std::move(images)), c);
        } else {
            out.add(w, -c);
        }
    }
    return out;
}

HeckeElement right_mul_gen(const HeckeElement& x, int i)
{
    const int n = x.degree();
    check_generator(i, n);
    HeckeElement out(n);
    for (const auto& [w, c] : x.terms()) {
        if (w(i) < w(i + 1)) {
            std::vector<int> images(w.images().begin(), w.images().end());
            std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
            out.add(PermutationBuilder::adopt(std::move(images)), c);
        } else {
            out.add(w, -c);
        }
    }
    return out;
}

std::vector<int> reduced_word(const Permutation& w)
{
    std::vector<int> images(w.images().begin(), w.images().end());
    std::vector<int> word;
    const int n = w.degree();
    for (;;) {
        int i = 1;
        while (i < n && images[static_cast<std::size_t>(i - 1)] < images[static_cast<std::size_t>(i)])
            ++i;
        if (i >= n)
            break;
        std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
        word.push_back(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

HeckeElement mul(const HeckeElement& a, const HeckeElement& b)
{
    if (a.degree() != b.degree())
        throw invalid_input("mul: degree mismatch");
    HeckeElement out(a.degree());
    for (const auto& [u, c] : a.terms()) {
        auto word = reduced_word(u);
        HeckeElement part = b;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            part = left_mul_gen(*it, part);
        for (const auto& [w, d] : part.terms())
            out.add(w, c * d);
    }
    return out;
}

std::vector<Permutation> order_ideal(const std::vector<Permutation>& generators)
{
    std::set<Permutation> seen(generators.begin(), generators.end());
    std::deque<Permutation> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        Permutation w = std::move(queue.front());
        queue.pop_front();
        const int n = w.degree();
        // Bruhat covers below w: swap positions a < b with w(a) > w(b) and
        // no c in between whose value lies between w(b) and w(a).
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                if (w(a) < w(b))
                    continue;
                bool cover = true;
                for (int c = a + 1; c < b && cover; ++c)
                    if (w(c) < w(a) && w(c) > w(b))
                        cover = false;
                if (!cover)
                    continue;
                std::vector<int> images(w.images().begin(), w.images().end());
                std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
                Permutation v = PermutationBuilder::adopt(std::move(images));
                if (seen.insert(v).second)
                    queue.push_back(std::move(v));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Permutation> order_ideal(const EquivClass& cls)
{
    return order_ideal(cls.elements);
}

HeckeElement sum_of_basis(const std::vector<Permutation>& elements, int n)
{
    HeckeElement x(n);
    for (const auto& w : elements)
        x.add(w, 1);
    return x;
}

HeckeElement t_leq_sigma(const Composition& alpha, int n)
{
    if (!is_maximal(alpha))
        throw invalid_input("t_leq_sigma: " + to_string(alpha) + " is not maximal");
    if (alpha.size() != n)
        throw invalid_input("t_leq_sigma: |alpha| differs from n");
    return sum_of_basis(order_ideal(sigma_class(alpha)), n);
}

bool is_central(const HeckeElement& x)
{
    for (int i = 1; i < x.degree(); ++i)
        if (left_mul_gen(i, x) != right_mul_gen(x, i))
            return false;
    return true;
}

std::size_t integer_rank(std::vector<std::vector<BigInt>> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    BigInt previous = 1;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                rows[r][c] = (rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c]) / previous;
            rows[r][col] = 0;
        }
        previous = rows[rank][col];
        ++rank;
    }
    return rank;
}

CenterReport verify_center_basis(int n, bool force)
{
    if (n > center_basis_limit && !force)
        throw resource_limit("verify_center_basis: n = " + std::to_string(n) + " exceeds " +
                             std::to_string(center_basis_limit) + " (use force)");
    CenterReport report;
    report.n = n;
    report.dim = dim_center(n);
    std::vector<HeckeElement> family;
    std::set<Permutation> support;
    for (const auto& alpha : enumerate_maximal(n)) {
        HeckeElement x = t_leq_sigma(alpha, n);
        report.entries.push_back({alpha, x.terms().size(), is_central(x)});
        for (const auto& [w, c] : x.terms())
            support.insert(w);
        family.push_back(std::move(x));
    }
    std::vector<Permutation> columns(support.begin(), support.end());
    std::vector<std::vector<BigInt>> rows;
    for (const auto& x : family) {
        std::vector<BigInt> row;
        row.reserve(columns.size());
        for (const auto& w : columns)
            row.push_back(x.coefficient(w));
        rows.push_back(std::move(row));
    }
    report.rank = integer_rank(std::move(rows));
    report.all_central = std::all_of(report.entries.begin(), report.entries.end(),
                                     [](const CenterEntry& e) { return e.central; });
    report.independent = report.rank == family.size();
    report.size_matches = BigInt(family.size()) == report.dim;
    return report;
}

} // namespace hzero
