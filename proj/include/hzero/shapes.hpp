#pragma once

// Compositions, partitions and maximal compositions.
//
// A composition is maximal when its even parts form a prefix and its odd
// parts form a weakly decreasing suffix, e.g. (4,6,2,3,1,1).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hzero/errors.hpp"

namespace hzero {

class Composition {
public:
    Composition() = default;
    // Throws invalid_input if some part is < 1.
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const noexcept { return parts_[i]; }
    int size() const noexcept;
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    // Parts i..end as a new composition (0-based i).
    Composition tail(std::size_t from) const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

class Partition {
public:
    Partition() = default;
    // Throws invalid_input if parts are not positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    int size() const noexcept;
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

bool is_maximal(const Composition& alpha);

// Every maximal composition of n exactly once, ordered by
// (even prefix, odd tail) lexicographically.
std::vector<Composition> enumerate_maximal(int n);

// Same count as enumerate_maximal(n).size(), without materializing.
std::uint64_t count_maximal(int n);

Partition sort_to_partition(const Composition& alpha);

struct EvenOddSplit {
    Composition even_prefix;
    Composition odd_tail;
    int j = 0; // number of even parts
};

// Throws invalid_input for a non-maximal alpha.
EvenOddSplit split_even_odd(const Composition& alpha);

enum class HookKind { not_hook, odd_hook, even_hook };

// (k, 1^{n-k}) is a hook; (1^n) is an odd hook with k = 1. The empty
// composition is not a hook.
HookKind hook_kind(const Composition& alpha);
// The k of a hook (k, 1^{n-k}); throws invalid_input for a non-hook.
int hook_arm(const Composition& alpha);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions(int n);

// "4,2" -> (4,2). The empty string yields the empty composition.
Composition parse_composition(std::string_view text);
std::string to_string(const Composition& alpha);

} // namespace hzero
