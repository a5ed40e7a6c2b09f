#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypermat {

// Subsets of the ground set as bit masks; bit i is the i-th ground element.
using Mask = std::uint32_t;

constexpr std::size_t kMaxGround = 20;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }
std::size_t popcount(Mask m);
// Drops bit i and shifts the higher bits down.
Mask remove_bit(Mask m, std::size_t i);
// Opens a zero at position i, shifting bits >= i up.
Mask insert_bit(Mask m, std::size_t i);
std::vector<std::size_t> elements_of(Mask m);

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  // Labels "1".."n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t index_of(const std::string& label) const;
  Mask full() const noexcept { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }
  GroundSet without(std::size_t i) const;
  std::string format(Mask m) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

class ClassicalMatroid {
 public:
  // Throws InvalidCircuits on empty circuits, comparable circuits or a
  // failure of circuit elimination.
  static ClassicalMatroid from_circuits(GroundSet ground, std::vector<Mask> circuits);
  // Throws InvalidCircuits unless the family satisfies basis exchange.
  static ClassicalMatroid from_bases(GroundSet ground, std::vector<Mask> bases);

  const GroundSet& ground() const noexcept { return ground_; }
  const std::vector<Mask>& circuits() const noexcept { return circuits_; }
  const std::vector<Mask>& bases() const noexcept { return bases_; }
  std::vector<Mask> cocircuits() const;

  std::size_t rank() const noexcept { return rank_; }
  std::size_t corank() const noexcept { return ground_.size() - rank_; }
  std::size_t rank_of(Mask s) const;
  bool is_independent(Mask s) const;
  bool spans(Mask s) const { return rank_of(s) == rank_; }
  bool is_loop(std::size_t e) const;
  bool is_coloop(std::size_t e) const;

  ClassicalMatroid dual() const;
  ClassicalMatroid delete_element(std::size_t e) const;
  ClassicalMatroid contract_element(std::size_t e) const;

  friend bool operator==(const ClassicalMatroid& a, const ClassicalMatroid& b) {
    return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
  }

 private:
  ClassicalMatroid(GroundSet ground, std::vector<Mask> circuits, std::vector<Mask> bases);

  GroundSet ground_;
  std::vector<Mask> circuits_;  // sorted
  std::vector<Mask> bases_;     // sorted
  std::size_t rank_ = 0;
};

ClassicalMatroid uniform_matroid(std::size_t r, std::size_t n);
// Every matroid on n labelled elements, generated from basis families.
std::vector<ClassicalMatroid> enumerate_matroids(std::size_t n);

// Inclusion-minimal nonempty members, sorted and deduplicated.
std::vector<Mask> minimal_nonempty(std::span<const Mask> family);

struct MintyWitness {
  std::string axiom;  // "M0-circuits", "M0-cocircuits", "M1" or "M2"
  Mask first = 0;
  Mask second = 0;
  std::size_t element = 0;  // the single green element for M2
  Mask blue = 0;
  Mask red = 0;
};

struct MintyResult {
  bool ok = true;
  std::optional<MintyWitness> witness;
};

// (M0) incomparability within each family, (M1) no |C ∩ D| = 1, (M2) every
// painting with one green element g has a circuit inside red+g through g or
// a cocircuit inside blue+g through g.
MintyResult minty_check(const GroundSet& ground, std::span<const Mask> c,
                        std::span<const Mask> d);

// Matroid whose circuits are the minimal nonempty members of c. Requires (M1)
// and (M2) for the pair and throws InvalidPair otherwise.
ClassicalMatroid minty_minimalize(const GroundSet& ground, std::span<const Mask> c,
                                  std::span<const Mask> d);

}  // namespace hypermat
