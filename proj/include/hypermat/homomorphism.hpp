#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "hypermat/hyperfield.hpp"

namespace hypermat {

// Drops the residue: H -> Tropical(rank of H).
struct ValuationMap {
  friend bool operator==(const ValuationMap&, const ValuationMap&) = default;
};
// Quadratic character GF(p) -> Sign, applied to the residue of graded
// Field(p) hyperfields as well.
struct SignMap {
  friend bool operator==(const SignMap&, const SignMap&) = default;
};
// Explicit element map between finite hyperfields.
struct TableMap {
  std::vector<std::pair<HElement, HElement>> pairs;
  friend bool operator==(const TableMap&, const TableMap&) = default;
};
struct IdentityMap {
  friend bool operator==(const IdentityMap&, const IdentityMap&) = default;
};

class Homomorphism {
 public:
  using Map = std::variant<ValuationMap, SignMap, TableMap, IdentityMap>;

  static Homomorphism valuation(const Hyperfield& domain);
  static Homomorphism sign(const Hyperfield& domain);
  static Homomorphism table(const Hyperfield& domain, const Hyperfield& codomain,
                            std::vector<std::pair<HElement, HElement>> pairs);
  static Homomorphism identity(const Hyperfield& h);
  // r -> rG from GF(p) onto a quotient built by krasner_quotient.
  static Homomorphism coset_map(const Hyperfield& field, const Hyperfield& quotient);

  const Hyperfield& domain() const noexcept { return domain_; }
  const Hyperfield& codomain() const noexcept { return codomain_; }
  const Map& map() const noexcept { return map_; }

  HElement apply(const HElement& x) const;
  SymbolicSet apply(const SymbolicSet& s) const;

 private:
  Homomorphism(Hyperfield d, Hyperfield c, Map m)
      : domain_(std::move(d)), codomain_(std::move(c)), map_(std::move(m)) {}

  Hyperfield domain_;
  Hyperfield codomain_;
  Map map_;
};

// f(0)=0, f(1)=1, f(xy)=f(x)f(y) and f(x⊞y) ⊆ f(x)⊞f(y) on the window.
AxiomReport validate_homomorphism(const Homomorphism& f, std::int64_t window = 4);

}  // namespace hypermat
