#include "hypermat/symbolic_set.hpp"

#include <algorithm>

namespace hypermat {

SymbolicSet SymbolicSet::singleton(const HElement& x) {
  SymbolicSet s;
  s.finite_.push_back(x);
  return s;
}

SymbolicSet SymbolicSet::of(std::vector<HElement> xs, std::optional<Grade> below) {
  SymbolicSet s;
  s.finite_ = std::move(xs);
  s.below_ = below;
  s.normalize();
  return s;
}

void SymbolicSet::normalize() {
  std::sort(finite_.begin(), finite_.end());
  finite_.erase(std::unique(finite_.begin(), finite_.end()), finite_.end());
  if (below_) {
    const Grade g = *below_;
    std::erase_if(finite_,
                  [&](const HElement& x) { return x.is_unit() && x.grade() < g; });
  }
}

bool SymbolicSet::contains(const HElement& x) const {
  if (below_ && x.is_unit() && x.grade() < *below_) return true;
  return std::binary_search(finite_.begin(), finite_.end(), x);
}

bool SymbolicSet::contains_zero() const {
  return !finite_.empty() && finite_.front().is_zero();
}

SymbolicSet SymbolicSet::unite(const SymbolicSet& other) const {
  SymbolicSet out;
  out.finite_.reserve(finite_.size() + other.finite_.size());
  std::merge(finite_.begin(), finite_.end(), other.finite_.begin(),
             other.finite_.end(), std::back_inserter(out.finite_));
  if (below_ && other.below_) {
    out.below_ = std::max(*below_, *other.below_);
  } else {
    out.below_ = below_ ? below_ : other.below_;
  }
  out.normalize();
  return out;
}

SymbolicSet SymbolicSet::intersect(const SymbolicSet& other) const {
  SymbolicSet out;
  for (const auto& x : finite_) {
    if (other.contains(x)) out.finite_.push_back(x);
  }
  for (const auto& x : other.finite_) {
    if (contains(x)) out.finite_.push_back(x);
  }
  if (below_ && other.below_) out.below_ = std::min(*below_, *other.below_);
  out.normalize();
  return out;
}

bool SymbolicSet::subset_of(const SymbolicSet& other) const {
  for (const auto& x : finite_) {
    if (!other.contains(x)) return false;
  }
  if (below_) {
    if (!other.below_ || *other.below_ < *below_) return false;
  }
  return true;
}

void SymbolicSet::absorb_full_grades(std::size_t units_per_grade) {
  while (below_ && units_per_grade > 0) {
    const Grade g = *below_;
    std::size_t at_g = 0;
    for (const auto& x : finite_) {
      if (x.is_unit() && x.grade() == g) ++at_g;
    }
    if (at_g < units_per_grade) return;
    below_ = g.successor();
    normalize();
  }
}

}  // namespace hypermat
