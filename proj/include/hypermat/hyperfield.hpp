#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermat/element.hpp"
#include "hypermat/symbolic_set.hpp"

namespace hypermat {

enum class ResidueKind : std::uint8_t { krasner, sign, field, table };

// Raw tables of a finite hyperfield. Index 0 is the zero and index 1 the one.
// add[i][j] is a bitmask over indices, mul[i][j] an index.
struct FiniteTable {
  std::vector<std::int64_t> labels;
  std::vector<std::vector<std::uint64_t>> add;
  std::vector<std::vector<std::uint32_t>> mul;

  friend bool operator==(const FiniteTable&, const FiniteTable&) = default;
};

struct HyperfieldSpec {
  enum class Kind : std::uint8_t {
    krasner,
    sign,
    field,
    tropical,
    stringent,
    quotient,
    table
  };

  Kind kind = Kind::krasner;
  ResidueKind residue = ResidueKind::krasner;
  std::uint32_t p = 0;
  std::size_t rank = 0;
  std::vector<std::uint32_t> subgroup;  // quotient only, sorted
  std::optional<FiniteTable> table;     // table only

  friend bool operator==(const HyperfieldSpec&, const HyperfieldSpec&) = default;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<HElement> witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

class Hyperfield {
 public:
  static Hyperfield krasner();
  static Hyperfield sign();
  static Hyperfield field(std::uint32_t p);
  static Hyperfield tropical(std::size_t rank);
  // residue must be krasner, sign or field (p used for field only).
  static Hyperfield stringent(ResidueKind residue, std::size_t rank,
                              std::uint32_t p = 0);
  static Hyperfield from_spec(const HyperfieldSpec& spec);
  // Throws InvalidHyperfield if the tables fail validate_table.
  static Hyperfield from_table(const FiniteTable& table);

  const HyperfieldSpec& spec() const noexcept { return spec_; }
  std::string name() const;
  ResidueKind residue_kind() const noexcept { return spec_.residue; }
  std::size_t rank() const noexcept { return spec_.rank; }
  std::uint32_t modulus() const noexcept { return spec_.p; }
  bool is_table() const noexcept { return table_ != nullptr; }
  // Tables of a finite (table or quotient) hyperfield, nullptr otherwise.
  const FiniteTable* table() const noexcept;
  // Label of a unit of a finite hyperfield.
  std::int64_t label(const HElement& x) const;
  bool is_stringent() const noexcept { return stringent_; }
  bool is_graded() const noexcept { return spec_.rank > 0; }

  HElement zero() const { return HElement::zero(); }
  HElement one() const;
  // Unit with the given residue value and grade. The residue value is
  // ignored for Krasner residues, +1/-1 for sign, reduced mod p for fields
  // and a label for tables.
  HElement make(std::int64_t residue_value, const Grade& g = {}) const;
  HElement graded_one(const Grade& g) const;

  bool contains(const HElement& x) const;
  void require(const HElement& x) const;

  std::vector<ResidueUnit> residue_units() const;
  std::vector<HElement> units_at(const Grade& g) const;
  // 0 followed by every unit whose grade lies in [-window, window]^rank.
  std::vector<HElement> elements(std::int64_t window) const;
  // 0 followed by every unit whose grade lies in [lo, hi]^rank.
  std::vector<HElement> elements_between(std::int64_t lo, std::int64_t hi) const;

  HElement mul(const HElement& a, const HElement& b) const;
  HElement inv(const HElement& a) const;
  HElement neg(const HElement& a) const;

  SymbolicSet hyperadd(const HElement& a, const HElement& b) const;
  // S ⊞ y, lifted to sets.
  SymbolicSet add(const SymbolicSet& s, const HElement& y) const;
  // x ⊞ S, lifted to sets.
  SymbolicSet add(const HElement& x, const SymbolicSet& s) const;
  SymbolicSet add(const SymbolicSet& s, const SymbolicSet& t) const;
  SymbolicSet hyperadd_multi(std::span<const HElement> xs) const;
  // 0 ∈ ⊞ xs, decided without building the set for catalog hyperfields.
  bool sum_contains_zero(std::span<const HElement> xs) const;
  bool is_member(const HElement& x, const SymbolicSet& s) const {
    return s.contains(x);
  }

  HElement compose(const HElement& a, const HElement& b) const;

  SymbolicSet scale_left(const HElement& alpha, const SymbolicSet& s) const;
  SymbolicSet scale_right(const SymbolicSet& s, const HElement& alpha) const;
  SymbolicSet negate(const SymbolicSet& s) const;
  // {0} together with every unit of valuation strictly below |x|.
  SymbolicSet strictly_below(const HElement& x) const;
  // Brings a set built outside this class into the unique normal form.
  SymbolicSet canonical(SymbolicSet s) const;
  SymbolicSet unite(const SymbolicSet& a, const SymbolicSet& b) const {
    return canonical(a.unite(b));
  }
  // Some element of a nonempty set, preferring the finite part.
  HElement pick(const SymbolicSet& s) const;

  // The residue as a plain hyperfield (rank 0); requires a catalog kind.
  Hyperfield residue_field() const;
  // Grade-0 unit of this hyperfield -> the matching residue element.
  HElement to_residue(const HElement& x) const;
  HElement from_residue(const HElement& r) const;

  friend bool operator==(const Hyperfield& a, const Hyperfield& b) {
    return a.spec_ == b.spec_;
  }

 private:
  struct TableData;
  Hyperfield() = default;
  static Hyperfield unchecked_table(const FiniteTable& table,
                                    HyperfieldSpec spec);
  friend AxiomReport validate_table(const FiniteTable& table);
  friend Hyperfield krasner_quotient(std::uint32_t p,
                                     std::vector<std::uint32_t> subgroup);

  std::uint32_t table_index(const HElement& x) const;

  HyperfieldSpec spec_;
  bool stringent_ = true;
  std::shared_ptr<const TableData> table_;
};

// Checks (H0)-(H2), nonemptiness, commutativity, associativity, (R1)-(R3)
// and 0 != 1 on every element (pair, triple) of the window.
AxiomReport validate_axioms(const Hyperfield& h, std::int64_t window = 4);
AxiomReport validate_table(const FiniteTable& table);

struct StringencyResult {
  bool stringent = true;
  std::optional<std::pair<HElement, HElement>> witness;
};
StringencyResult check_stringent(const Hyperfield& h, std::int64_t window = 4);

// Quotient of GF(p) by a subgroup G of its units. Throws InvalidSubgroup.
Hyperfield krasner_quotient(std::uint32_t p, std::vector<std::uint32_t> subgroup);

bool is_prime(std::uint32_t p);

}  // namespace hypermat
