#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypermat/hmatroid.hpp"

namespace hypermat {

// Rank 2 on four elements with circuits {1,2}, {1,3,4}, {2,3,4}.
ClassicalMatroid three_circuit_rank2();

// Every H-matroid over n whose normalized circuit entries (after the
// leading 1) are drawn from `entries`. Signatures that fail duality are
// skipped.
std::vector<HMatroid> enumerate_signatures(const Hyperfield& h, const ClassicalMatroid& n,
                                           std::span<const HElement> entries,
                                           Side side = Side::left);

struct Instance {
  std::string name;
  HMatroid matroid;
};

// All signatures over U(2,3), U(2,4), U(1,3) and three_circuit_rank2 with
// the given entries, followed by their duals.
std::vector<Instance> signature_family(const Hyperfield& h, std::span<const HElement> entries);

// Entry sets used by the test battery: every unit for rank-0 hyperfields,
// grades {0,1} times every residue otherwise.
std::vector<HElement> default_entries(const Hyperfield& h);

}  // namespace hypermat
