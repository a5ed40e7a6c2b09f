#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hypermat {

// Element of Z^k under lexicographic order.
class Grade {
 public:
  static constexpr std::size_t kMaxRank = 4;

  Grade() = default;
  Grade(std::initializer_list<std::int64_t> coords);
  explicit Grade(std::span<const std::int64_t> coords);

  static Grade zero(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept {
    return {coords_.data(), rank_};
  }

  Grade operator+(const Grade& other) const;
  Grade operator-(const Grade& other) const;
  Grade operator-() const;

  // Largest grade strictly below this one that differs only in the first
  // coordinate. Only meaningful for rank >= 1.
  Grade step_down() const;
  // Immediate lexicographic successor (last coordinate plus one).
  Grade successor() const;

  std::string to_string() const;

  friend bool operator==(const Grade&, const Grade&) = default;
  friend std::strong_ordering operator<=>(const Grade& a,
                                          const Grade& b) noexcept {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    for (std::size_t i = 0; i < a.rank_; ++i) {
      if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::int64_t, kMaxRank> coords_{};
  std::uint8_t rank_ = 0;
};

// All grades of the given rank with every coordinate in [lo, hi], in
// increasing lexicographic order.
std::vector<Grade> grade_box(std::size_t rank, std::int64_t lo, std::int64_t hi);

struct KrasnerOne {
  friend auto operator<=>(const KrasnerOne&, const KrasnerOne&) = default;
};

struct SignUnit {
  std::int8_t sign = 1;
  friend auto operator<=>(const SignUnit&, const SignUnit&) = default;
};

struct FieldUnit {
  std::uint32_t value = 1;
  std::uint32_t modulus = 2;
  friend auto operator<=>(const FieldUnit&, const FieldUnit&) = default;
};

// Unit of a finite hyperfield given by tables; index into those tables.
struct TableUnit {
  std::uint32_t index = 1;
  friend auto operator<=>(const TableUnit&, const TableUnit&) = default;
};

using ResidueUnit = std::variant<KrasnerOne, SignUnit, FieldUnit, TableUnit>;

class HElement {
 public:
  HElement() = default;

  static HElement zero() { return {}; }
  static HElement unit(ResidueUnit residue, Grade grade = {}) {
    HElement x;
    x.nonzero_ = true;
    x.residue_ = residue;
    x.grade_ = grade;
    return x;
  }

  bool is_zero() const noexcept { return !nonzero_; }
  bool is_unit() const noexcept { return nonzero_; }
  const ResidueUnit& residue() const noexcept { return residue_; }
  const Grade& grade() const noexcept { return grade_; }

  // |x|; nullopt stands for the bottom valuation of 0.
  std::optional<Grade> valuation() const {
    if (!nonzero_) return std::nullopt;
    return grade_;
  }

  friend bool operator==(const HElement&, const HElement&) = default;
  friend auto operator<=>(const HElement&, const HElement&) = default;

 private:
  bool nonzero_ = false;
  ResidueUnit residue_{};
  Grade grade_{};
};

// Compares valuations with 0 below every unit.
std::strong_ordering compare_valuation(const HElement& a, const HElement& b);

std::string to_string(const HElement& x);

}  // namespace hypermat
