#pragma once

// Symmetric-group arithmetic in one-line notation.
//
// A Permutation of degree n stores the images p(1), ..., p(n). All public
// indices are 1-based, and generator indices i name the adjacent
// transposition s_i = (i, i+1), 1 <= i <= n-1. Degree 0 is the empty
// permutation of S_0.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hzero/errors.hpp"
#include "hzero/shapes.hpp"

namespace hzero {

class Permutation {
public:
    Permutation() = default;

    // Throws invalid_input unless images is a bijection on [1..images.size()].
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // s_i in S_n.
    static Permutation adjacent(int n, int i);
    // Builds a permutation of degree n from disjoint cycles; entries not
    // mentioned are fixed points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> images() const noexcept { return images_; }
    bool is_identity() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct unchecked_tag {};
    Permutation(std::vector<int> images, unchecked_tag) : images_(std::move(images)) {}
    friend class PermutationBuilder;

    std::vector<int> images_;
};

// Internal fast path for code that already guarantees bijectivity.
class PermutationBuilder {
public:
    static Permutation adopt(std::vector<int> images)
    {
        return Permutation(std::move(images), Permutation::unchecked_tag{});
    }
};

// A cycle written with its minimum entry first.
class Cycle {
public:
    // Rotates to canonical form. Throws invalid_input on an empty or
    // non-distinct entry list.
    explicit Cycle(std::vector<int> entries);

    std::span<const int> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int min_entry() const noexcept { return entries_.front(); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;

private:
    std::vector<int> entries_;
};

// Set partition of [1..n]; blocks are sorted internally and among themselves.
class OrbitPartition {
public:
    OrbitPartition() = default;
    explicit OrbitPartition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    bool empty() const noexcept { return blocks_.empty(); }

    friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
    friend auto operator<=>(const OrbitPartition&, const OrbitPartition&) = default;

private:
    std::vector<std::vector<int>> blocks_;
};

// result(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Number of inversions.
int length(const Permutation& p);

std::vector<int> left_descents(const Permutation& p);
std::vector<int> right_descents(const Permutation& p);

Permutation longest_element(int n);

// s_i p s_i.
Permutation conj_adjacent(const Permutation& p, int i);

// length(s_i p s_i) - length(p), evaluated by the local case analysis on
// p(i), p(i+1), p^-1(i), p^-1(i+1) without recomputing inversions.
int length_delta_conj(const Permutation& p, int i);

// w0 p w0.
Permutation conj_w0(const Permutation& p);

// Disjoint cycles sorted by minimum entry.
std::vector<Cycle> cycles(const Permutation& p, bool include_trivial = true);
Partition cycle_type(const Permutation& p);

OrbitPartition orbit_partition(const Permutation& p);
// The orbits of even size only.
OrbitPartition even_orbits(const Permutation& p);

// Bruhat order by the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// "(1,3)(2)" with trivial cycles included; "()" for degree 0.
std::string cycle_string(const Permutation& p, bool include_trivial = true);
// Accepts "(1,3)(2)" or "(1,3)" with omitted fixed points.
Permutation parse_cycles(int n, std::string_view text);

// All permutations of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);
// Position of p in all_permutations(p.degree()).
std::uint64_t lex_rank(const Permutation& p);

} // namespace hzero
