#pragma once

// Sparse arithmetic in the 0-Hecke algebra H_n(0) on the T_w basis, with
// T_s T_w = T_{sw} if l(sw) > l(w) and -T_w otherwise.

#include <map>
#include <string>
#include <vector>

#include "hzero/counting.hpp"
#include "hzero/cyclic_shift.hpp"
#include "hzero/permutation.hpp"
#include "hzero/shapes.hpp"

namespace hzero {

class HeckeElement {
public:
    using Terms = std::map<Permutation, BigInt>;

    explicit HeckeElement(int n = 0) : n_(n) {}
    static HeckeElement basis(const Permutation& w);

    int degree() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coefficient(const Permutation& w) const;

    // Adds c T_w, dropping the term if it cancels.
    void add(const Permutation& w, const BigInt& c);

    HeckeElement& operator+=(const HeckeElement& other);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(const HeckeElement& a);
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a += -b; }
    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

private:
    int n_;
    Terms terms_;
};

// T_{s_i} x and x T_{s_i}.
HeckeElement left_mul_gen(int i, const HeckeElement& x);
HeckeElement right_mul_gen(const HeckeElement& x, int i);

// Reduced word i_1 ... i_k with w = s_{i_1} ... s_{i_k}, by peeling right
// descents.
std::vector<int> reduced_word(const Permutation& w);

HeckeElement mul(const HeckeElement& a, const HeckeElement& b);

// Downward Bruhat closure of a set of permutations of equal degree.
std::vector<Permutation> order_ideal(const std::vector<Permutation>& generators);
std::vector<Permutation> order_ideal(const EquivClass& cls);

// Sum of T_x over the order ideal of Sigma_alpha.
HeckeElement t_leq_sigma(const Composition& alpha, int n);
HeckeElement sum_of_basis(const std::vector<Permutation>& elements, int n);

bool is_central(const HeckeElement& x);

// Rank over Q of integer row vectors, by fraction-free elimination.
std::size_t integer_rank(std::vector<std::vector<BigInt>> rows);

struct CenterEntry {
    Composition alpha;
    std::size_t ideal_size = 0;
    bool central = false;
};

struct CenterReport {
    int n = 0;
    std::vector<CenterEntry> entries;
    std::size_t rank = 0;
    BigInt dim = 0;
    bool all_central = false;
    bool independent = false;
    bool size_matches = false;

    bool ok() const { return all_central && independent && size_matches; }
};

// Default practical bound for verify_center_basis.
inline constexpr int center_basis_limit = 6;

CenterReport verify_center_basis(int n, bool force = false);

} // namespace hzero
