#pragma once

// Brute-force cyclic-shift classes on S_n.
//
// For a twist delta in {id, nu} (nu = conjugation by w0) the one-step move
// w -> s_i w delta(s_i) is allowed when it does not increase length. The
// equivalence ~ is mutual reachability, so the classes are the strongly
// connected components of the one-step digraph on S_n.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hzero/permutation.hpp"
#include "hzero/shapes.hpp"

namespace hzero {

enum class Twist { identity, nu };
enum class Stratum { all, min, max };

// Largest n handled by brute force without an explicit override.
inline constexpr int brute_force_limit = 8;

std::string to_string(Twist twist);
std::string to_string(Stratum stratum);
Twist parse_twist(std::string_view text);
Stratum parse_stratum(std::string_view text);

struct EquivClass {
    std::vector<Permutation> elements; // sorted lexicographically
    std::optional<Composition> alpha;
    int common_length = 0;
    OrbitPartition even_orbit_partition;
    // sigma_alpha for labeled max classes, sigma_alpha w0 for labeled
    // nu-min classes, otherwise the lexicographically least element.
    Permutation representative;

    bool contains(const Permutation& p) const;
};

// Sorts and deduplicates elements and fills the derived metadata. Throws
// consistency_error if the elements do not share length or even orbits.
EquivClass make_class(std::vector<Permutation> elements, std::optional<Composition> alpha = std::nullopt);

// s_i w delta(s_i) when its length is <= length(w).
std::optional<Permutation> one_step(const Permutation& w, int i, Twist twist);

// Everything reachable from w by one_step moves, sorted.
std::vector<Permutation> arrow_closure(const Permutation& w, Twist twist);

// Throws resource_limit when n > brute_force_limit and !force.
void check_brute_force_bound(int n, bool force);

// Full one-step digraph on S_n with its SCCs and twisted conjugacy classes.
class ShiftGraph {
public:
    ShiftGraph(int n, Twist twist, bool force = false);

    int degree() const noexcept { return n_; }
    Twist twist() const noexcept { return twist_; }
    const std::vector<Permutation>& vertices() const noexcept { return vertices_; }
    std::size_t index_of(const Permutation& p) const;

    int length_of(std::size_t v) const noexcept { return lengths_[v]; }
    // Targets of the allowed one-step moves from v.
    const std::vector<std::size_t>& edges(std::size_t v) const noexcept { return edges_[v]; }
    std::size_t component_of(std::size_t v) const noexcept { return component_[v]; }
    std::size_t conjugacy_class_of(std::size_t v) const noexcept { return conj_class_[v]; }
    std::size_t component_count() const noexcept { return component_count_; }

    bool in_stratum(std::size_t v, Stratum stratum) const noexcept;

    // Classes meeting the stratum, sorted by least element. Whole SCCs are
    // returned since every SCC has a single length within a single twisted
    // conjugacy class.
    std::vector<EquivClass> classes(Stratum stratum) const;

private:
    void compute_components();

    int n_;
    Twist twist_;
    std::vector<Permutation> vertices_;
    std::vector<int> lengths_;
    std::vector<std::vector<std::size_t>> edges_;
    std::vector<std::size_t> component_;
    std::size_t component_count_ = 0;
    std::vector<std::size_t> conj_class_;
    std::vector<int> conj_min_;
    std::vector<int> conj_max_;
};

std::vector<EquivClass> equiv_classes(int n, Twist twist, Stratum stratum, bool force = false);

// (S_n)_max / ~ labeled by the maximal compositions through stair forms, in
// enumerate_maximal order. Throws consistency_error if the labeling is not
// a bijection.
std::vector<std::pair<Composition, EquivClass>> label_max_classes(int n, bool force = false);

// alpha -> sigma_alpha w0, checked to lie in pairwise distinct nu-classes of
// the nu-min stratum. Throws consistency_error otherwise.
std::vector<std::pair<Composition, Permutation>> min_representatives(int n, bool force = false);

} // namespace hzero
