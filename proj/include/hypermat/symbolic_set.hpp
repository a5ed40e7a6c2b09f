#pragma once

#include <optional>
#include <vector>

#include "hypermat/element.hpp"

namespace hypermat {

// A subset of a hyperfield in the normal form "finite part, plus optionally
// every unit of grade strictly below some bound". The finite part is sorted,
// duplicate free, and never lists a unit already covered by the down-set.
// Results handed out by Hyperfield are additionally passed through
// absorb_full_grades, which makes the representation unique.
class SymbolicSet {
 public:
  SymbolicSet() = default;

  static SymbolicSet singleton(const HElement& x);
  static SymbolicSet of(std::vector<HElement> xs,
                        std::optional<Grade> below = std::nullopt);

  bool empty() const noexcept { return finite_.empty() && !below_; }
  bool contains(const HElement& x) const;
  bool contains_zero() const;
  bool is_singleton() const noexcept { return finite_.size() == 1 && !below_; }
  const HElement& only() const { return finite_.front(); }

  const std::vector<HElement>& finite() const noexcept { return finite_; }
  const std::optional<Grade>& below() const noexcept { return below_; }

  SymbolicSet unite(const SymbolicSet& other) const;
  SymbolicSet intersect(const SymbolicSet& other) const;
  bool subset_of(const SymbolicSet& other) const;

  // Moves every grade whose units all sit in the finite part into the
  // down-set. Sets in this form compare equal iff they are equal as sets.
  void absorb_full_grades(std::size_t units_per_grade);

  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;
  friend auto operator<=>(const SymbolicSet&, const SymbolicSet&) = default;

 private:
  void normalize();

  std::vector<HElement> finite_;
  std::optional<Grade> below_;
};

}  // namespace hypermat
