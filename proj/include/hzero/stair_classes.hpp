#pragma once

// Constructive description of the classes Sigma_alpha.
//
// sigma_alpha is the element in stair form: the list 1, n, 2, n-1, 3, ...
// cut into consecutive blocks of sizes alpha_1, ..., alpha_l, each block
// read as a cycle. Sigma_alpha is its cyclic-shift class. Cycle-valued
// helpers below work on full cycles of S_k written with 1 first.

#include <optional>
#include <utility>
#include <vector>

#include "hzero/cyclic_shift.hpp"
#include "hzero/permutation.hpp"
#include "hzero/shapes.hpp"

namespace hzero {

// x_{2i-1} = i, x_{2i} = n - i + 1.
std::vector<int> stair_sequence(int n);

Permutation stair_form(const Composition& alpha);

// Whether sigma_alpha is of maximal length in its conjugacy class; holds
// exactly for maximal alpha.
bool stair_is_max(const Composition& alpha);

// Membership by cycle type, length and even orbits. Throws invalid_input
// for non-maximal alpha or a size mismatch.
bool member_sigma_alpha(const Permutation& p, const Composition& alpha);

// True iff p is a single cycle through all of [1..n] (n >= 1).
bool is_full_cycle(const Permutation& p);

// Entries of a full cycle read from 1: 1, p(1), p(p(1)), ...
std::vector<int> cycle_from_one(const Permutation& p);
// Inverse of cycle_from_one.
Permutation full_cycle(const std::vector<int>& entries);

// Predicates on full cycles of S_k. Throw invalid_input otherwise.
bool is_oscillating_cycle(const Permutation& c);
bool has_connected_intervals_cycle(const Permutation& c);

// Relabels a cycle by ranks, giving a full cycle of S_k.
Permutation cst(const Cycle& c);

// Predicates applied to cst of every cycle.
bool is_oscillating(const Permutation& p);
bool has_connected_intervals(const Permutation& p);

// alpha = (k, 1^{n-k}) and cycle_type(p) must match it.
bool hook_properties(const Permutation& p, const Composition& alpha);

// Shifts entries >= k up by one and inserts k at index pos of the cycle
// read from 1 (behind the pos-th entry). 2 <= k <= n+1, 1 <= pos <= n.
Permutation ins(int k, int pos, const Permutation& sigma);
// Removes k and shifts entries > k down by one. 2 <= k <= n.
Permutation del(int k, const Permutation& sigma);

// Bijection Sigma_(n-1) -> Sigma_(n) (n even) or
// Sigma_(n-1) x {0,1,2} -> Sigma_(n) (n odd), n >= 4.
Permutation psi(int n, const Permutation& sigma, std::optional<int> q = std::nullopt);

struct PsiPreimage {
    Permutation sigma;
    std::optional<int> q;
};
// Inverse of psi for sigma in Sigma_(n), n >= 4.
PsiPreimage psi_inverse(const Permutation& sigma);

// Sigma_(n) for n >= 1, generated from the n <= 3 base sets by psi.
// Each generated element is checked against the oscillating and
// connected-interval predicates.
std::vector<Permutation> sigma_n(int n);

// The element of type alpha = (k, 1^{n-k}), k >= 3 odd, whose k-cycle has
// support {1..m, j, n-m+1..n} (m = (k-1)/2) and standardization tau.
Permutation odd_hook_phi(const Permutation& tau, int j, const Composition& alpha);

// tau (.) id_{n-l} for an even hook alpha = (l, 1^{n-l}).
Permutation even_hook_lift(const Permutation& tau, const Composition& alpha);

enum class SigmaStrategy { single_cycle, odd_hook, even_hook, hookish_product, predicate_filter };

SigmaStrategy sigma_strategy(const Composition& alpha);
const char* to_string(SigmaStrategy strategy);

// Upper bound on candidates for the predicate-filter fallback.
inline constexpr std::uint64_t filter_candidate_limit = 20'000'000;

// All permutations of S_n with the given cycle type.
std::vector<Permutation> permutations_of_type(const Partition& type);

// Sigma_alpha for maximal alpha, built by the cheapest applicable route.
// Throws resource_limit when only the filter applies and it is too large.
EquivClass sigma_class(const Composition& alpha);

} // namespace hzero
