#include "hypermat/element.hpp"

#include <sstream>

#include "hypermat/errors.hpp"

namespace hypermat {

Grade::Grade(std::initializer_list<std::int64_t> coords)
    : Grade(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Grade::Grade(std::span<const std::int64_t> coords) {
  if (coords.size() > kMaxRank) {
    throw DomainMismatch("grade rank " + std::to_string(coords.size()) +
                         " exceeds the supported maximum of " +
                         std::to_string(kMaxRank));
  }
  rank_ = static_cast<std::uint8_t>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
}

Grade Grade::zero(std::size_t rank) {
  std::array<std::int64_t, kMaxRank> z{};
  return Grade(std::span<const std::int64_t>(z.data(), rank));
}

Grade Grade::operator+(const Grade& other) const {
  if (rank_ != other.rank_) throw DomainMismatch("grade ranks differ");
  Grade out = *this;
  for (std::size_t i = 0; i < rank_; ++i) out.coords_[i] += other.coords_[i];
  return out;
}

Grade Grade::operator-(const Grade& other) const {
  if (rank_ != other.rank_) throw DomainMismatch("grade ranks differ");
  Grade out = *this;
  for (std::size_t i = 0; i < rank_; ++i) out.coords_[i] -= other.coords_[i];
  return out;
}

Grade Grade::operator-() const {
  Grade out = *this;
  for (std::size_t i = 0; i < rank_; ++i) out.coords_[i] = -coords_[i];
  return out;
}

Grade Grade::step_down() const {
  Grade out = *this;
  if (rank_ > 0) out.coords_[0] -= 1;
  return out;
}

Grade Grade::successor() const {
  Grade out = *this;
  if (rank_ > 0) out.coords_[rank_ - 1] += 1;
  return out;
}

std::string Grade::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::vector<Grade> grade_box(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<Grade> out;
  if (hi < lo) return out;
  std::array<std::int64_t, Grade::kMaxRank> cur{};
  for (std::size_t i = 0; i < rank; ++i) cur[i] = lo;
  while (true) {
    out.emplace_back(std::span<const std::int64_t>(cur.data(), rank));
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (cur[i] < hi) {
        ++cur[i];
        break;
      }
      cur[i] = lo;
      if (i == 0) return out;
    }
    if (rank == 0) return out;
  }
}

std::strong_ordering compare_valuation(const HElement& a, const HElement& b) {
  if (a.is_zero() || b.is_zero()) {
    return static_cast<int>(a.is_unit()) <=> static_cast<int>(b.is_unit());
  }
  return a.grade() <=> b.grade();
}

std::string to_string(const HElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, KrasnerOne>) {
          os << "1";
        } else if constexpr (std::is_same_v<T, SignUnit>) {
          os << (r.sign > 0 ? "+" : "-");
        } else if constexpr (std::is_same_v<T, FieldUnit>) {
          os << r.value;
        } else {
          os << "#" << r.index;
        }
      },
      x.residue());
  if (x.grade().rank() > 0) os << "@" << x.grade().to_string();
  return os.str();
}

}  // namespace hypermat
