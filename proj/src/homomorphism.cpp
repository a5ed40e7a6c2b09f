#include "hypermat/homomorphism.hpp"

#include <algorithm>

#include "hypermat/errors.hpp"

namespace hypermat {

namespace {

int legendre(std::uint32_t v, std::uint32_t p) {
  std::uint64_t r = 1;
  std::uint64_t a = v % p;
  std::uint32_t e = (p - 1) / 2;
  while (e) {
    if (e & 1u) r = r * a % p;
    a = a * a % p;
    e >>= 1u;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

Homomorphism Homomorphism::valuation(const Hyperfield& domain) {
  if (domain.is_table()) {
    throw UnsupportedOperation("valuation map needs a catalog hyperfield, got " +
                               domain.name());
  }
  return {domain, Hyperfield::tropical(domain.rank()), ValuationMap{}};
}

Homomorphism Homomorphism::sign(const Hyperfield& domain) {
  if (domain.residue_kind() != ResidueKind::field || domain.modulus() % 2 == 0) {
    throw DomainMismatch("sign map needs a Field(p) residue with p odd, got " +
                         domain.name());
  }
  return {domain, Hyperfield::stringent(ResidueKind::sign, domain.rank()), SignMap{}};
}

Homomorphism Homomorphism::table(const Hyperfield& domain, const Hyperfield& codomain,
                                 std::vector<std::pair<HElement, HElement>> pairs) {
  if (domain.is_graded() || codomain.is_graded()) {
    throw UnsupportedOperation("table maps need finite hyperfields");
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [x, y] : pairs) {
    domain.require(x);
    codomain.require(y);
  }
  for (const auto& x : domain.elements(0)) {
    auto it = std::lower_bound(
        pairs.begin(), pairs.end(), x,
        [](const auto& pr, const HElement& k) { return pr.first < k; });
    if (it == pairs.end() || it->first != x) {
      throw InvalidInput("table map does not define an image for " + to_string(x));
    }
  }
  return {domain, codomain, TableMap{std::move(pairs)}};
}

Homomorphism Homomorphism::identity(const Hyperfield& h) { return {h, h, IdentityMap{}}; }

Homomorphism Homomorphism::coset_map(const Hyperfield& field, const Hyperfield& quotient) {
  const auto& qs = quotient.spec();
  if (qs.kind != HyperfieldSpec::Kind::quotient || field.spec().kind != HyperfieldSpec::Kind::field ||
      qs.p != field.modulus()) {
    throw DomainMismatch("coset map needs GF(p) and a quotient of it");
  }
  std::vector<std::pair<HElement, HElement>> pairs{{field.zero(), quotient.zero()}};
  for (std::uint32_t r = 1; r < qs.p; ++r) {
    std::uint32_t least = qs.p;
    for (auto g : qs.subgroup) {
      least = std::min<std::uint32_t>(
          least, static_cast<std::uint32_t>(static_cast<std::uint64_t>(r) * g % qs.p));
    }
    pairs.emplace_back(field.make(r), quotient.make(least));
  }
  return table(field, quotient, std::move(pairs));
}

HElement Homomorphism::apply(const HElement& x) const {
  domain_.require(x);
  if (x.is_zero()) return x;
  return std::visit(
      [&](const auto& m) -> HElement {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ValuationMap>) {
          return HElement::unit(KrasnerOne{}, x.grade());
        } else if constexpr (std::is_same_v<T, SignMap>) {
          const auto& f = std::get<FieldUnit>(x.residue());
          return HElement::unit(
              SignUnit{static_cast<std::int8_t>(legendre(f.value, f.modulus))}, x.grade());
        } else if constexpr (std::is_same_v<T, TableMap>) {
          auto it = std::lower_bound(
              m.pairs.begin(), m.pairs.end(), x,
              [](const auto& pr, const HElement& k) { return pr.first < k; });
          return it->second;
        } else {
          return x;
        }
      },
      map_);
}

SymbolicSet Homomorphism::apply(const SymbolicSet& s) const {
  std::vector<HElement> xs;
  for (const auto& x : s.finite()) xs.push_back(apply(x));
  // Valuation and sign maps keep grades, so down-sets map onto down-sets.
  auto out = SymbolicSet::of(std::move(xs), s.below());
  return codomain_.canonical(std::move(out));
}

AxiomReport validate_homomorphism(const Homomorphism& f, std::int64_t window) {
  AxiomReport report;
  const Hyperfield& d = f.domain();
  const Hyperfield& c = f.codomain();
  if (f.apply(d.zero()) != c.zero()) report.violations.push_back({"f(0)=0", {d.zero()}});
  if (f.apply(d.one()) != c.one()) report.violations.push_back({"f(1)=1", {d.one()}});
  const auto els = d.elements(window);
  for (const auto& x : els) {
    for (const auto& y : els) {
      if (f.apply(d.mul(x, y)) != c.mul(f.apply(x), f.apply(y))) {
        report.violations.push_back({"multiplicative", {x, y}});
      }
      const SymbolicSet image = f.apply(d.hyperadd(x, y));
      if (!image.subset_of(c.hyperadd(f.apply(x), f.apply(y)))) {
        report.violations.push_back({"additive", {x, y}});
      }
    }
  }
  return report;
}

}  // namespace hypermat
