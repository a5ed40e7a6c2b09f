#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermat/homomorphism.hpp"
#include "hypermat/hyperfield.hpp"
#include "hypermat/matroid.hpp"

namespace hypermat {

// Which side scalars act on. Circuits of a left matroid are scaled from the
// left and appear as the left factor of every pairing; its cocircuits are
// scaled from the right.
enum class Side : std::uint8_t { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

struct HVector {
  std::vector<HElement> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const HElement& operator[](std::size_t i) const { return entries[i]; }
  HElement& operator[](std::size_t i) { return entries[i]; }
  Mask support() const;
  bool is_zero() const { return support() == 0; }

  friend bool operator==(const HVector&, const HVector&) = default;
  friend auto operator<=>(const HVector&, const HVector&) = default;
};

HVector zero_vector(std::size_t n);
std::string to_string(const HVector& v);
// Coordinate e removed.
HVector drop(const HVector& v, std::size_t e);
// Coordinate inserted at position e.
HVector insert(const HVector& v, std::size_t e, const HElement& value);

// s·X for Side::left, X·s for Side::right.
HVector scale(const Hyperfield& h, const HVector& x, const HElement& s, Side side);
// The scaling that makes the first nonzero entry 1.
HVector normalize(const Hyperfield& h, const HVector& x, Side side);
HVector compose(const Hyperfield& h, const HVector& x, const HVector& y);
HVector uparrow(const Hyperfield& h, const HVector& x);

// ⊞_e X_e·Y_e with X the left factor.
SymbolicSet pairing(const Hyperfield& h, const HVector& x, const HVector& y);
bool perp(const Hyperfield& h, const HVector& x, const HVector& y);

class CircuitSignature {
 public:
  // Normalizes and deduplicates. Throws DomainMismatch for foreign entries
  // or wrong lengths and InvalidCircuits for a zero vector.
  CircuitSignature(Hyperfield h, GroundSet ground, std::vector<HVector> vectors,
                   Side side);

  const Hyperfield& field() const noexcept { return field_; }
  const GroundSet& ground() const noexcept { return ground_; }
  Side side() const noexcept { return side_; }
  const std::vector<HVector>& representatives() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }
  std::vector<Mask> supports() const;
  const HVector* find(Mask support) const;
  bool contains_class_of(const HVector& x) const;

  friend bool operator==(const CircuitSignature& a, const CircuitSignature& b) {
    return a.field_ == b.field_ && a.ground_ == b.ground_ && a.side_ == b.side_ &&
           a.reps_ == b.reps_;
  }

 private:
  Hyperfield field_;
  GroundSet ground_;
  std::vector<HVector> reps_;  // sorted
  Side side_;
};

struct Finding {
  std::string check;
  std::string detail;
  std::vector<HVector> witness;
};

struct Report {
  std::vector<Finding> failures;
  bool ok() const noexcept { return failures.empty(); }
};

struct PerpResult {
  bool ok = true;
  std::optional<std::pair<HVector, HVector>> witness;
};

// Pairs of representatives whose supports meet in at most k elements
// (every pair when k is nullopt). The left-side family supplies the left
// factors.
PerpResult perp_k(const CircuitSignature& c, const CircuitSignature& d,
                  std::optional<std::size_t> k);

// (C0)-(C2) structurally and (C3) over every modular pair.
Report check_circuit_axioms(const CircuitSignature& c);

// Cocircuit signature forced by orthogonality with the circuits of the
// given underlying matroid. Throws NotAnHMatroid when propagation is
// inconsistent or the result is not 3-orthogonal to c.
CircuitSignature dual_signature(const ClassicalMatroid& underlying, const CircuitSignature& c);

class HMatroid {
 public:
  static HMatroid from_circuits(const Hyperfield& h, const GroundSet& ground,
                                std::vector<HVector> circuits, Side side = Side::left);
  static HMatroid from_signature(const CircuitSignature& c);

  const CircuitSignature& circuits() const noexcept { return circuits_; }
  const CircuitSignature& cocircuits() const noexcept { return cocircuits_; }
  const ClassicalMatroid& underlying() const noexcept { return underlying_; }
  const Hyperfield& field() const noexcept { return circuits_.field(); }
  const GroundSet& ground() const noexcept { return circuits_.ground(); }
  Side side() const noexcept { return circuits_.side(); }

  HMatroid dual() const;

  friend bool operator==(const HMatroid& a, const HMatroid& b) {
    return a.circuits_ == b.circuits_ && a.cocircuits_ == b.cocircuits_;
  }

 private:
  HMatroid(CircuitSignature c, CircuitSignature d, ClassicalMatroid u)
      : circuits_(std::move(c)), cocircuits_(std::move(d)), underlying_(std::move(u)) {}

  CircuitSignature circuits_;
  CircuitSignature cocircuits_;
  ClassicalMatroid underlying_;
};

HMatroid hm_delete(const HMatroid& m, std::size_t e);
HMatroid hm_contract(const HMatroid& m, std::size_t e);
// Circuits X -> X·rho^-1, cocircuits Y -> rho·Y.
HMatroid hm_rescale(const HMatroid& m, const HVector& rho);

// Residue matroid over the rank-0 residue of a catalog hyperfield. Throws
// TheoremViolation if the construction does not produce a consistent pair
// of signatures.
HMatroid residue_matroid(const HMatroid& m);

HMatroid push_forward(const Homomorphism& f, const HMatroid& m);

// (C0)-(C2) plus elimination in the strong form with a prescribed
// coordinate. Requires a Krasner or sign residue.
Report check_c3prime(const CircuitSignature& c);

// δ with δ·W (or W·δ) in targets pointwise; exact even for graded
// hyperfields.
std::optional<HElement> find_scaling(const Hyperfield& h, const HVector& w,
                                     std::span<const SymbolicSet> targets, Side side);

}  // namespace hypermat
