#pragma once

// Closed-form cardinalities of the classes Sigma_alpha and the dimension
// of the center of H_n(0). Exact integers throughout.

#include <boost/multiprecision/cpp_int.hpp>

#include "hzero/shapes.hpp"

namespace hzero {

using BigInt = boost::multiprecision::cpp_int;

// 1 for n <= 2, else 2 * 3^floor((n-3)/2).
BigInt size_sigma_n(int n);

// alpha = (k, 1^{n-k}) with k odd: 1 for k = 1, else 2 (n-k+1) 3^{(k-3)/2}.
BigInt size_sigma_odd_hook(const Composition& alpha);

// 2^p 3^q |Sigma_alpha'| for maximal alpha whose odd tail alpha' is a hook
// (or empty); P = even parts >= 4, p = |P|, q = -2p + sum(P)/2.
BigInt size_sigma_formula(const Composition& alpha);

// sum over partitions of n of n_lambda! / m_lambda.
BigInt brichard_sum(int n);

// Number of maximal compositions: sum over e of (compositions of e into
// even parts) x (partitions of n-e into odd parts).
BigInt count_maximal_exact(int n);

// brichard_sum(n), checked against count_maximal_exact(n).
BigInt dim_center(int n);

} // namespace hzero
