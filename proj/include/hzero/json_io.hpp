#pragma once

// JSON views of the library values. Objects use sorted keys.

#include <json.hpp>

#include "hzero/cyclic_shift.hpp"
#include "hzero/hecke0.hpp"
#include "hzero/permutation.hpp"
#include "hzero/shapes.hpp"
#include "hzero/verify.hpp"

namespace hzero {

using Json = nlohmann::json;

Json to_json(const Permutation& p);
Json to_json(const Composition& alpha);
Json to_json(const OrbitPartition& partition);

// {"alpha", "length", "size", "representative", "elements"}.
Json class_to_json(const EquivClass& cls);

// Counts of full orbit partitions across the class, sorted by partition.
Json orbit_histogram(const EquivClass& cls);

// {"n", "twist", "classes"}.
Json catalog_to_json(int n, Twist twist, const std::vector<EquivClass>& classes);

// {"alpha", "ideal_size", "terms": [{"w", "c"}, ...]}.
Json hecke_to_json(const Composition& alpha, const HeckeElement& x);

Json report_to_json(const VerifyReport& report);

Permutation permutation_from_json(const Json& j);

} // namespace hzero
