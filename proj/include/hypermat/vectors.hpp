#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypermat/hmatroid.hpp"

namespace hypermat {

constexpr double kDefaultBudget = 1e8;

struct EnumerationOptions {
  std::int64_t window = 4;
  unsigned threads = 1;
  double budget = kDefaultBudget;
};

// Vectors whose unit entries all have grades in [-window, window]^rank.
bool in_window(const HVector& v, std::int64_t window);

bool is_vector(const HMatroid& m, const HVector& v);
bool is_covector(const HMatroid& m, const HVector& u);

// Every V in the window box orthogonal to all cocircuits (resp. every U
// orthogonal to all circuits). Sorted.
std::vector<HVector> vectors_enumerate(const HMatroid& m, const EnumerationOptions& opt = {});
std::vector<HVector> covectors_enumerate(const HMatroid& m, const EnumerationOptions& opt = {});

// Closure of windowed circuit scalings under composition (Krasner/sign
// residue) or singleton hypersums (field residue), at most corank many
// factors. Sorted, restricted to the window.
std::vector<HVector> vectors_generate(const HMatroid& m, std::int64_t window);

struct PerfectResult {
  bool perfect = true;
  std::optional<std::pair<HVector, HVector>> witness;  // (vector, covector)
  std::size_t vectors = 0;
  std::size_t covectors = 0;
};

PerfectResult is_perfect(const HMatroid& m, const EnumerationOptions& opt = {});
// Same check for an arbitrary pair of signatures, vectors taken orthogonal
// to d and covectors orthogonal to c.
PerfectResult is_perfect(const CircuitSignature& c, const CircuitSignature& d,
                         const EnumerationOptions& opt = {});

struct VectorAxiomOptions {
  std::int64_t window = 4;
  // Premises of (V1)-(V3) are drawn from members whose grades lie in this
  // smaller box, so that conclusions have room inside the window.
  std::int64_t premise_window = 4;
  Side side = Side::left;
};

Report check_vector_axioms(const Hyperfield& h, std::span<const HVector> vectors,
                           const VectorAxiomOptions& opt = {});

// Matroid with circuits Min(V \ {0}); throws TheoremViolation unless its
// vectors in the window are exactly the input.
HMatroid reconstruct_from_vectors(const Hyperfield& h, const GroundSet& ground,
                                  std::span<const HVector> vectors, std::int64_t window,
                                  Side side = Side::left);

struct FarkasPartition {
  Mask red = 0;
  Mask green = 0;
  Mask blue = 0;
};

struct FarkasWitness {
  enum class Kind { vector, cocircuit };
  Kind kind = Kind::vector;
  HVector witness;
};

// A vector that is 1 on green, 0 on blue and below 1 on red (at most 1 in
// the weak variant), or a cocircuit certifying that none exists. Throws
// TheoremViolation if the window holds neither.
FarkasWitness farkas_witness(const HMatroid& m, const FarkasPartition& p, std::int64_t window,
                             bool weak = false);

// A vector of m lying pointwise in ⊞_i vs[i], with entry 0 at e when e is
// given (requires 0 ∈ ⊞_i vs[i]_e).
HVector eliminate_vectors(const HMatroid& m, std::span<const HVector> vs,
                          std::optional<std::size_t> e, std::int64_t window);

// Scaled circuits whose iterated hypersum is exactly {v}.
std::vector<HVector> decompose_vector(const HMatroid& m, const HVector& v);

// A value x such that inserting x at e turns w into a vector of m, if any.
std::optional<HElement> extension_value(const HMatroid& m, const HVector& w, std::size_t e);

}  // namespace hypermat
