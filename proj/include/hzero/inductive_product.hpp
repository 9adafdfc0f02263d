#pragma once

// The inductive product S_{n1} x S_{n2} -> S_{n1+n2}.
//
// With k = ceil(n1/2), the left factor is relabeled onto
// N1 = [1..k] u [k+n2+1..n] and the right factor onto N2 = [k+1..k+n2],
// both by the increasing bijections phi1, phi2. The cycles of the product
// are the relabeled cycles of the factors.

#include <optional>
#include <utility>
#include <vector>

#include "hzero/cyclic_shift.hpp"
#include "hzero/permutation.hpp"
#include "hzero/shapes.hpp"

namespace hzero {

class IprodFrame {
public:
    IprodFrame(int n1, int n2);

    int n1() const noexcept { return n1_; }
    int n2() const noexcept { return n2_; }
    int n() const noexcept { return n1_ + n2_; }
    int k() const noexcept { return k_; }

    int phi1(int i) const noexcept { return i <= k_ ? i : i + n2_; }
    int phi2(int i) const noexcept { return i + k_; }
    bool in_n1(int x) const noexcept { return x <= k_ || x > k_ + n2_; }
    bool in_n2(int x) const noexcept { return !in_n1(x); }
    int phi1_inverse(int x) const noexcept { return x <= k_ ? x : x - n2_; }
    int phi2_inverse(int x) const noexcept { return x - k_; }

private:
    int n1_;
    int n2_;
    int k_;
};

Permutation iprod(const Permutation& s1, const Permutation& s2);

// The unique (s1, s2) with iprod(s1, s2) == p when p stabilizes N1 and N2.
std::optional<std::pair<Permutation, Permutation>> iprod_factor(const Permutation& p, int n1, int n2);

struct CrossingCounts {
    int p = 0; // i <= k with s1(i) > k
    int q = 0; // i > k with s1(i) <= k
};
CrossingCounts crossing_counts(const Permutation& s1);

// length(iprod(s1, s2)) by length(s1) + length(s2) + (p + q) n2. s1 must
// be a full cycle (degree >= 1).
int iprod_length_law(const Permutation& s1, const Permutation& s2);

struct StairFactorization {
    Permutation head;  // sigma_(alpha_1)
    Permutation tail;  // sigma_(alpha_2..), w0-conjugated when alpha_1 is odd
    bool tail_conjugated = false;
};

// Verifies iprod(head, tail) == stair_form(alpha); throws consistency_error
// otherwise and invalid_input for the empty composition.
StairFactorization stair_factorization(const Composition& alpha);

// Sigma_alpha as Sigma_(alpha_1) (.) Sigma_(alpha_2..) for maximal alpha
// with alpha_1 even.
EquivClass class_product(const Composition& alpha);

// Members of Sigma_alpha whose full orbit partition equals sigma_alpha's.
std::vector<Permutation> sigma_star(const Composition& alpha);

// Sigma^x_(alpha_1) (.) (Sigma^x_(alpha_2..))^{w0} for alpha_1 odd.
std::vector<Permutation> sigma_star_product(const Composition& alpha);

// Sigma_alpha for maximal alpha whose odd parts form a hook (or are
// empty), by folding the even parts right to left onto the odd-tail class.
EquivClass generate_hookish(const Composition& alpha);

// Whether the odd tail of a maximal alpha is empty or a hook.
bool odd_tail_is_hook(const Composition& alpha);

} // namespace hzero
