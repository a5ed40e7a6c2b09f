#include "hypermat/hyperfield.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "hypermat/errors.hpp"

namespace hypermat {

struct Hyperfield::TableData {
  FiniteTable table;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> inv;
  std::map<std::int64_t, std::uint32_t> index_of_label;
};

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

// At most two residue units plus possibly zero; enough for every catalog
// residue (the largest case is the sign sum 1 ⊞ -1).
struct ResidueSum {
  bool zero = false;
  std::array<ResidueUnit, 2> units{};
  std::size_t count = 0;
  void push(ResidueUnit r) { units[count++] = r; }
};

constexpr std::size_t kMaxWitnessesPerAxiom = 32;

struct ReportBuilder {
  AxiomReport report;
  std::map<std::string, std::size_t> counts;
  void add(const std::string& axiom, std::vector<HElement> witness) {
    if (counts[axiom]++ >= kMaxWitnessesPerAxiom) return;
    report.violations.push_back({axiom, std::move(witness)});
  }
};

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Hyperfield Hyperfield::krasner() {
  Hyperfield h;
  h.spec_.kind = HyperfieldSpec::Kind::krasner;
  h.spec_.residue = ResidueKind::krasner;
  return h;
}

Hyperfield Hyperfield::sign() {
  Hyperfield h;
  h.spec_.kind = HyperfieldSpec::Kind::sign;
  h.spec_.residue = ResidueKind::sign;
  return h;
}

Hyperfield Hyperfield::field(std::uint32_t p) {
  if (!is_prime(p)) {
    throw InvalidHyperfield("field modulus " + std::to_string(p) + " is not prime");
  }
  Hyperfield h;
  h.spec_.kind = HyperfieldSpec::Kind::field;
  h.spec_.residue = ResidueKind::field;
  h.spec_.p = p;
  return h;
}

Hyperfield Hyperfield::tropical(std::size_t rank) {
  return stringent(ResidueKind::krasner, rank);
}

Hyperfield Hyperfield::stringent(ResidueKind residue, std::size_t rank,
                                 std::uint32_t p) {
  if (rank > Grade::kMaxRank) {
    throw InvalidHyperfield("grade rank " + std::to_string(rank) +
                            " exceeds the supported maximum");
  }
  Hyperfield h;
  switch (residue) {
    case ResidueKind::krasner: h = krasner(); break;
    case ResidueKind::sign: h = sign(); break;
    case ResidueKind::field: h = field(p); break;
    case ResidueKind::table:
      throw InvalidHyperfield("graded hyperfields need a catalog residue");
  }
  if (rank == 0) return h;
  h.spec_.rank = rank;
  h.spec_.kind = residue == ResidueKind::krasner ? HyperfieldSpec::Kind::tropical
                                                 : HyperfieldSpec::Kind::stringent;
  return h;
}

Hyperfield Hyperfield::from_spec(const HyperfieldSpec& spec) {
  using K = HyperfieldSpec::Kind;
  switch (spec.kind) {
    case K::krasner: return krasner();
    case K::sign: return sign();
    case K::field: return field(spec.p);
    case K::tropical: return tropical(spec.rank);
    case K::stringent: return stringent(spec.residue, spec.rank, spec.p);
    case K::quotient: return krasner_quotient(spec.p, spec.subgroup);
    case K::table:
      if (!spec.table) throw InvalidHyperfield("table spec without tables");
      return from_table(*spec.table);
  }
  throw InvalidHyperfield("unknown hyperfield kind");
}

Hyperfield Hyperfield::unchecked_table(const FiniteTable& table,
                                       HyperfieldSpec spec) {
  const std::size_t n = table.labels.size();
  auto data = std::make_shared<TableData>();
  data->table = table;
  data->neg.assign(n, 0);
  data->inv.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (table.add[x][y] & 1u) {
        data->neg[x] = y;
        break;
      }
    }
    for (std::uint32_t y = 1; y < n; ++y) {
      if (table.mul[x][y] == 1) {
        data->inv[x] = y;
        break;
      }
    }
    data->index_of_label[table.labels[x]] = x;
  }
  Hyperfield h;
  h.spec_ = std::move(spec);
  h.spec_.residue = ResidueKind::table;
  h.spec_.rank = 0;
  h.stringent_ = true;
  for (std::uint32_t a = 0; a < n && h.stringent_; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (b != data->neg[a] && std::popcount(table.add[a][b]) != 1) {
        h.stringent_ = false;
        break;
      }
    }
  }
  h.table_ = std::move(data);
  return h;
}

Hyperfield Hyperfield::from_table(const FiniteTable& table) {
  const AxiomReport report = validate_table(table);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    std::string msg = "table fails hyperfield axiom " + v.axiom;
    if (!v.witness.empty()) {
      msg += " at";
      for (const auto& w : v.witness) msg += " " + to_string(w);
    }
    throw InvalidHyperfield(msg);
  }
  HyperfieldSpec spec;
  spec.kind = HyperfieldSpec::Kind::table;
  spec.table = table;
  return unchecked_table(table, std::move(spec));
}

const FiniteTable* Hyperfield::table() const noexcept {
  return table_ ? &table_->table : nullptr;
}

std::int64_t Hyperfield::label(const HElement& x) const {
  if (!table_) throw UnsupportedOperation(name() + " has no element labels");
  return table_->table.labels.at(table_index(x));
}

std::string Hyperfield::name() const {
  using K = HyperfieldSpec::Kind;
  auto residue_name = [&] {
    switch (spec_.residue) {
      case ResidueKind::krasner: return std::string("Krasner");
      case ResidueKind::sign: return std::string("Sign");
      case ResidueKind::field: return "Field(" + std::to_string(spec_.p) + ")";
      case ResidueKind::table: return std::string("Table");
    }
    return std::string();
  };
  switch (spec_.kind) {
    case K::krasner:
    case K::sign:
    case K::field: return residue_name();
    case K::tropical: return "Tropical(" + std::to_string(spec_.rank) + ")";
    case K::stringent:
      return "Stringent(" + residue_name() + "," + std::to_string(spec_.rank) + ")";
    case K::quotient: {
      std::string s = "GF(" + std::to_string(spec_.p) + ")/{";
      for (std::size_t i = 0; i < spec_.subgroup.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(spec_.subgroup[i]);
      }
      return s + "}";
    }
    case K::table:
      return "Table(" + std::to_string(table_ ? table_->table.labels.size() : 0) + ")";
  }
  return "?";
}

HElement Hyperfield::one() const { return graded_one(Grade::zero(spec_.rank)); }

HElement Hyperfield::graded_one(const Grade& g) const {
  switch (spec_.residue) {
    case ResidueKind::krasner: return HElement::unit(KrasnerOne{}, g);
    case ResidueKind::sign: return HElement::unit(SignUnit{1}, g);
    case ResidueKind::field: return HElement::unit(FieldUnit{1, spec_.p}, g);
    case ResidueKind::table: return HElement::unit(TableUnit{1}, g);
  }
  return {};
}

HElement Hyperfield::make(std::int64_t r, const Grade& g) const {
  if (g.rank() != spec_.rank) {
    throw DomainMismatch("grade " + g.to_string() + " has the wrong rank for " + name());
  }
  switch (spec_.residue) {
    case ResidueKind::krasner:
      return HElement::unit(KrasnerOne{}, g);
    case ResidueKind::sign:
      if (r != 1 && r != -1) throw DomainMismatch("sign residue must be +1 or -1");
      return HElement::unit(SignUnit{static_cast<std::int8_t>(r)}, g);
    case ResidueKind::field: {
      const auto p = static_cast<std::int64_t>(spec_.p);
      const auto v = static_cast<std::uint32_t>(((r % p) + p) % p);
      if (v == 0) throw DomainMismatch("field residue must be nonzero mod p");
      return HElement::unit(FieldUnit{v, spec_.p}, g);
    }
    case ResidueKind::table: {
      auto it = table_->index_of_label.find(r);
      if (it == table_->index_of_label.end() || it->second == 0) {
        throw DomainMismatch("no unit labelled " + std::to_string(r) + " in " + name());
      }
      return HElement::unit(TableUnit{it->second}, g);
    }
  }
  return {};
}

bool Hyperfield::contains(const HElement& x) const {
  if (x.is_zero()) return true;
  if (x.grade().rank() != spec_.rank) return false;
  const ResidueUnit& r = x.residue();
  switch (spec_.residue) {
    case ResidueKind::krasner: return std::holds_alternative<KrasnerOne>(r);
    case ResidueKind::sign: {
      const auto* s = std::get_if<SignUnit>(&r);
      return s && (s->sign == 1 || s->sign == -1);
    }
    case ResidueKind::field: {
      const auto* f = std::get_if<FieldUnit>(&r);
      return f && f->modulus == spec_.p && f->value >= 1 && f->value < spec_.p;
    }
    case ResidueKind::table: {
      const auto* t = std::get_if<TableUnit>(&r);
      return t && t->index >= 1 && t->index < table_->table.labels.size();
    }
  }
  return false;
}

void Hyperfield::require(const HElement& x) const {
  if (!contains(x)) {
    throw DomainMismatch("element " + to_string(x) + " does not belong to " + name());
  }
}

std::vector<ResidueUnit> Hyperfield::residue_units() const {
  std::vector<ResidueUnit> out;
  switch (spec_.residue) {
    case ResidueKind::krasner: out.emplace_back(KrasnerOne{}); break;
    case ResidueKind::sign:
      out.emplace_back(SignUnit{-1});
      out.emplace_back(SignUnit{1});
      break;
    case ResidueKind::field:
      for (std::uint32_t v = 1; v < spec_.p; ++v) out.emplace_back(FieldUnit{v, spec_.p});
      break;
    case ResidueKind::table:
      for (std::uint32_t i = 1; i < table_->table.labels.size(); ++i) {
        out.emplace_back(TableUnit{i});
      }
      break;
  }
  return out;
}

std::vector<HElement> Hyperfield::units_at(const Grade& g) const {
  std::vector<HElement> out;
  for (const auto& r : residue_units()) out.push_back(HElement::unit(r, g));
  return out;
}

std::vector<HElement> Hyperfield::elements(std::int64_t window) const {
  return elements_between(-window, window);
}

std::vector<HElement> Hyperfield::elements_between(std::int64_t lo,
                                                   std::int64_t hi) const {
  std::vector<HElement> out{HElement::zero()};
  const auto units = residue_units();
  for (const auto& g : grade_box(spec_.rank, lo, hi)) {
    for (const auto& r : units) out.push_back(HElement::unit(r, g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t Hyperfield::table_index(const HElement& x) const {
  if (x.is_zero()) return 0;
  return std::get<TableUnit>(x.residue()).index;
}

HElement Hyperfield::mul(const HElement& a, const HElement& b) const {
  require(a);
  require(b);
  if (a.is_zero() || b.is_zero()) return HElement::zero();
  if (table_) {
    const auto k = table_->table.mul[table_index(a)][table_index(b)];
    if (k == 0) return HElement::zero();
    return HElement::unit(TableUnit{k});
  }
  const Grade g = a.grade() + b.grade();
  switch (spec_.residue) {
    case ResidueKind::krasner: return HElement::unit(KrasnerOne{}, g);
    case ResidueKind::sign:
      return HElement::unit(
          SignUnit{static_cast<std::int8_t>(std::get<SignUnit>(a.residue()).sign *
                                            std::get<SignUnit>(b.residue()).sign)},
          g);
    case ResidueKind::field:
      return HElement::unit(
          FieldUnit{mulmod(std::get<FieldUnit>(a.residue()).value,
                           std::get<FieldUnit>(b.residue()).value, spec_.p),
                    spec_.p},
          g);
    case ResidueKind::table: break;
  }
  return HElement::zero();
}

HElement Hyperfield::inv(const HElement& a) const {
  require(a);
  if (a.is_zero()) throw DomainMismatch("0 has no inverse");
  if (table_) {
    const auto k = table_->inv[table_index(a)];
    return k == 0 ? HElement::zero() : HElement::unit(TableUnit{k});
  }
  const Grade g = -a.grade();
  switch (spec_.residue) {
    case ResidueKind::krasner: return HElement::unit(KrasnerOne{}, g);
    case ResidueKind::sign: return HElement::unit(a.residue(), g);
    case ResidueKind::field:
      return HElement::unit(
          FieldUnit{powmod(std::get<FieldUnit>(a.residue()).value, spec_.p - 2, spec_.p),
                    spec_.p},
          g);
    case ResidueKind::table: break;
  }
  return HElement::zero();
}

HElement Hyperfield::neg(const HElement& a) const {
  require(a);
  if (a.is_zero()) return a;
  if (table_) {
    const auto k = table_->neg[table_index(a)];
    return k == 0 ? HElement::zero() : HElement::unit(TableUnit{k});
  }
  switch (spec_.residue) {
    case ResidueKind::krasner: return a;
    case ResidueKind::sign:
      return HElement::unit(
          SignUnit{static_cast<std::int8_t>(-std::get<SignUnit>(a.residue()).sign)},
          a.grade());
    case ResidueKind::field:
      return HElement::unit(
          FieldUnit{spec_.p - std::get<FieldUnit>(a.residue()).value, spec_.p},
          a.grade());
    case ResidueKind::table: break;
  }
  return a;
}

namespace {

ResidueSum residue_sum(ResidueKind kind, const ResidueUnit& a, const ResidueUnit& b,
                       std::uint32_t p) {
  ResidueSum s;
  switch (kind) {
    case ResidueKind::krasner:
      s.zero = true;
      s.push(KrasnerOne{});
      break;
    case ResidueKind::sign: {
      const auto x = std::get<SignUnit>(a).sign;
      const auto y = std::get<SignUnit>(b).sign;
      if (x == y) {
        s.push(a);
      } else {
        s.zero = true;
        s.push(SignUnit{-1});
        s.push(SignUnit{1});
      }
      break;
    }
    case ResidueKind::field: {
      const auto v = (std::get<FieldUnit>(a).value + std::get<FieldUnit>(b).value) % p;
      if (v == 0) {
        s.zero = true;
      } else {
        s.push(FieldUnit{v, p});
      }
      break;
    }
    case ResidueKind::table: break;
  }
  return s;
}

std::size_t units_per_grade(const HyperfieldSpec& spec) {
  switch (spec.residue) {
    case ResidueKind::krasner: return 1;
    case ResidueKind::sign: return 2;
    case ResidueKind::field: return spec.p - 1;
    case ResidueKind::table: return 0;
  }
  return 0;
}

}  // namespace

SymbolicSet Hyperfield::hyperadd(const HElement& a, const HElement& b) const {
  require(a);
  require(b);
  if (table_) {
    const std::uint64_t mask = table_->table.add[table_index(a)][table_index(b)];
    std::vector<HElement> xs;
    for (std::uint32_t k = 0; k < table_->table.labels.size(); ++k) {
      if (mask >> k & 1u) {
        xs.push_back(k == 0 ? HElement::zero() : HElement::unit(TableUnit{k}));
      }
    }
    return SymbolicSet::of(std::move(xs));
  }
  if (a.is_zero()) return SymbolicSet::singleton(b);
  if (b.is_zero()) return SymbolicSet::singleton(a);
  const auto c = a.grade() <=> b.grade();
  if (c > 0) return SymbolicSet::singleton(a);
  if (c < 0) return SymbolicSet::singleton(b);
  const ResidueSum rs = residue_sum(spec_.residue, a.residue(), b.residue(), spec_.p);
  std::vector<HElement> xs;
  for (std::size_t i = 0; i < rs.count; ++i) {
    xs.push_back(HElement::unit(rs.units[i], a.grade()));
  }
  std::optional<Grade> below;
  if (rs.zero) {
    xs.push_back(HElement::zero());
    if (spec_.rank > 0) below = a.grade();
  }
  auto out = SymbolicSet::of(std::move(xs), below);
  out.absorb_full_grades(units_per_grade(spec_));
  return out;
}

SymbolicSet Hyperfield::add(const SymbolicSet& s, const HElement& y) const {
  require(y);
  if (s.empty()) return s;
  if (y.is_zero() && !table_) return s;
  SymbolicSet out;
  for (const auto& x : s.finite()) out = out.unite(hyperadd(x, y));
  if (s.below()) {
    const Grade g = *s.below();
    // Units of grade below g, added to y.
    if (y.grade() >= g) {
      out = out.unite(SymbolicSet::singleton(y));
    } else {
      out = out.unite(SymbolicSet::of({HElement::zero()}, g));
    }
  }
  out.absorb_full_grades(units_per_grade(spec_));
  return out;
}

SymbolicSet Hyperfield::add(const HElement& x, const SymbolicSet& s) const {
  require(x);
  if (s.empty()) return s;
  if (!table_) return add(s, x);
  SymbolicSet out;
  for (const auto& y : s.finite()) out = out.unite(hyperadd(x, y));
  return out;
}

SymbolicSet Hyperfield::add(const SymbolicSet& s, const SymbolicSet& t) const {
  if (s.empty() || t.empty()) return {};
  SymbolicSet out;
  for (const auto& y : t.finite()) out = out.unite(add(s, y));
  if (t.below()) {
    const SymbolicSet down = SymbolicSet::of({}, *t.below());
    for (const auto& x : s.finite()) out = out.unite(add(x, down));
    if (s.below()) {
      out = out.unite(
          SymbolicSet::of({HElement::zero()}, std::max(*s.below(), *t.below())));
    }
  }
  out.absorb_full_grades(units_per_grade(spec_));
  return out;
}

SymbolicSet Hyperfield::hyperadd_multi(std::span<const HElement> xs) const {
  if (xs.empty()) return SymbolicSet::singleton(HElement::zero());
  require(xs[0]);
  SymbolicSet acc = SymbolicSet::singleton(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) acc = add(acc, xs[i]);
  return acc;
}

bool Hyperfield::sum_contains_zero(std::span<const HElement> xs) const {
  if (table_) return hyperadd_multi(xs).contains_zero();
  // Terms below the top grade are absorbed, so only the residues sitting at
  // the top grade matter.
  const HElement* top = nullptr;
  for (const auto& x : xs) {
    if (x.is_unit() && (!top || top->grade() < x.grade())) top = &x;
  }
  if (!top) return true;
  const Grade g = top->grade();
  std::size_t count = 0;
  bool plus = false;
  bool minus = false;
  std::uint64_t sum = 0;
  for (const auto& x : xs) {
    if (x.is_zero() || x.grade() != g) continue;
    ++count;
    switch (spec_.residue) {
      case ResidueKind::sign:
        (std::get<SignUnit>(x.residue()).sign > 0 ? plus : minus) = true;
        break;
      case ResidueKind::field:
        sum += std::get<FieldUnit>(x.residue()).value;
        break;
      default: break;
    }
  }
  switch (spec_.residue) {
    case ResidueKind::krasner: return count >= 2;
    case ResidueKind::sign: return plus && minus;
    case ResidueKind::field: return sum % spec_.p == 0;
    case ResidueKind::table: break;
  }
  return false;
}

HElement Hyperfield::compose(const HElement& a, const HElement& b) const {
  require(a);
  require(b);
  if (table_ && !stringent_) {
    throw UnsupportedOperation("composition needs a stringent hyperfield; " + name() +
                               " is not stringent");
  }
  if (a == neg(b)) {
    if (table_) {
      return hyperadd(a, b) == SymbolicSet::singleton(HElement::zero()) ? HElement::zero()
                                                                         : a;
    }
    return spec_.residue == ResidueKind::field ? HElement::zero() : a;
  }
  const SymbolicSet s = hyperadd(a, b);
  if (!s.is_singleton()) {
    throw TheoremViolation("hypersum of " + to_string(a) + " and " + to_string(b) +
                           " is not a singleton");
  }
  return s.only();
}

SymbolicSet Hyperfield::scale_left(const HElement& alpha, const SymbolicSet& s) const {
  require(alpha);
  if (s.empty()) return s;
  if (alpha.is_zero()) return SymbolicSet::singleton(HElement::zero());
  std::vector<HElement> xs;
  for (const auto& x : s.finite()) xs.push_back(mul(alpha, x));
  std::optional<Grade> below;
  if (s.below()) below = alpha.grade() + *s.below();
  auto out = SymbolicSet::of(std::move(xs), below);
  out.absorb_full_grades(units_per_grade(spec_));
  return out;
}

SymbolicSet Hyperfield::scale_right(const SymbolicSet& s, const HElement& alpha) const {
  require(alpha);
  if (s.empty()) return s;
  if (alpha.is_zero()) return SymbolicSet::singleton(HElement::zero());
  std::vector<HElement> xs;
  for (const auto& x : s.finite()) xs.push_back(mul(x, alpha));
  std::optional<Grade> below;
  if (s.below()) below = *s.below() + alpha.grade();
  auto out = SymbolicSet::of(std::move(xs), below);
  out.absorb_full_grades(units_per_grade(spec_));
  return out;
}

SymbolicSet Hyperfield::negate(const SymbolicSet& s) const {
  std::vector<HElement> xs;
  for (const auto& x : s.finite()) xs.push_back(neg(x));
  return SymbolicSet::of(std::move(xs), s.below());
}

SymbolicSet Hyperfield::strictly_below(const HElement& x) const {
  if (x.is_zero()) return {};
  if (spec_.rank == 0) return SymbolicSet::singleton(HElement::zero());
  return SymbolicSet::of({HElement::zero()}, x.grade());
}

SymbolicSet Hyperfield::canonical(SymbolicSet s) const {
  s.absorb_full_grades(units_per_grade(spec_));
  return s;
}

HElement Hyperfield::pick(const SymbolicSet& s) const {
  if (!s.finite().empty()) return s.finite().front();
  if (s.below()) return graded_one(s.below()->step_down());
  throw InvalidInput("cannot pick an element of the empty set");
}

Hyperfield Hyperfield::residue_field() const {
  if (table_) return *this;
  return stringent(spec_.residue, 0, spec_.p);
}

HElement Hyperfield::to_residue(const HElement& x) const {
  require(x);
  if (x.is_zero()) return x;
  if (x.grade() != Grade::zero(spec_.rank)) {
    throw DomainMismatch("element " + to_string(x) + " is not in the residue");
  }
  return HElement::unit(x.residue());
}

HElement Hyperfield::from_residue(const HElement& r) const {
  if (r.is_zero()) return r;
  HElement x = HElement::unit(r.residue(), Grade::zero(spec_.rank));
  require(x);
  return x;
}

AxiomReport validate_axioms(const Hyperfield& h, std::int64_t window) {
  ReportBuilder rb;
  const std::vector<HElement> els = h.elements(window);
  const HElement zero = h.zero();
  const HElement one = h.one();
  if (zero == one) rb.add("nontrivial", {zero});

  // Sums of pairs, cached for the triple loops below.
  const std::size_t n = els.size();
  std::vector<SymbolicSet> sums(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sums[i * n + j] = h.hyperadd(els[i], els[j]);
  }
  auto sum = [&](std::size_t i, std::size_t j) -> const SymbolicSet& {
    return sums[i * n + j];
  };
  auto index_of = [&](const HElement& x) -> std::optional<std::size_t> {
    auto it = std::lower_bound(els.begin(), els.end(), x);
    if (it == els.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - els.begin());
  };

  for (std::size_t i = 0; i < n; ++i) {
    const HElement& x = els[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (sum(i, j).empty()) rb.add("nonempty", {x, els[j]});
      if (sum(i, j) != sum(j, i)) rb.add("commutativity", {x, els[j]});
    }
    if (h.hyperadd(x, zero) != SymbolicSet::singleton(x) ||
        h.hyperadd(zero, x) != SymbolicSet::singleton(x)) {
      rb.add("H0", {x});
    }
    std::size_t negatives = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sum(i, j).contains_zero()) ++negatives;
    }
    const HElement nx = h.neg(x);
    if (negatives != 1 || !h.hyperadd(x, nx).contains_zero()) rb.add("H1", {x});
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto nj = index_of(h.neg(els[j]));
      for (std::size_t k = 0; k < n; ++k) {
        const HElement& x = els[i];
        const HElement& y = els[j];
        const HElement& z = els[k];
        // x ∈ y⊞z  <=>  z ∈ (-y)⊞x
        const bool lhs = sum(j, k).contains(x);
        const bool rhs = nj ? sum(*nj, i).contains(z)
                            : h.hyperadd(h.neg(y), x).contains(z);
        if (lhs != rhs) rb.add("H2", {x, y, z});
        if (h.add(x, sum(j, k)) != h.add(sum(i, j), z)) {
          rb.add("associativity", {x, y, z});
        }
        // Distributivity with x as the scalar.
        if (h.scale_left(x, sum(j, k)) != h.hyperadd(h.mul(x, y), h.mul(x, z))) {
          rb.add("R3-left", {x, y, z});
        }
        if (h.scale_right(sum(j, k), x) != h.hyperadd(h.mul(y, x), h.mul(z, x))) {
          rb.add("R3-right", {x, y, z});
        }
        if (x.is_unit() && y.is_unit() && z.is_unit() &&
            h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z))) {
          rb.add("R1-associativity", {x, y, z});
        }
      }
    }
  }

  for (const auto& x : els) {
    if (h.mul(zero, x) != zero || h.mul(x, zero) != zero) rb.add("R2", {x});
    if (x.is_zero()) continue;
    if (h.mul(one, x) != x || h.mul(x, one) != x) rb.add("R1-identity", {x});
    const HElement xi = h.inv(x);
    if (xi.is_zero() || h.mul(x, xi) != one || h.mul(xi, x) != one) {
      rb.add("R1-inverse", {x});
    }
    for (const auto& y : els) {
      if (y.is_unit() && h.mul(x, y).is_zero()) rb.add("R1-closure", {x, y});
    }
  }
  return rb.report;
}

AxiomReport validate_table(const FiniteTable& table) {
  AxiomReport shape;
  const std::size_t n = table.labels.size();
  auto fail = [&](std::string what) {
    shape.violations.push_back({std::move(what), {}});
    return shape;
  };
  if (n < 2) return fail("table-shape: fewer than two elements");
  if (n > 64) return fail("table-shape: more than 64 elements");
  if (table.add.size() != n || table.mul.size() != n) {
    return fail("table-shape: table dimensions differ from the label count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table.add[i].size() != n || table.mul[i].size() != n) {
      return fail("table-shape: ragged row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (n < 64 && (table.add[i][j] >> n) != 0) {
        return fail("table-shape: sum mask out of range");
      }
      if (table.mul[i][j] >= n) return fail("table-shape: product out of range");
    }
  }
  if (std::set<std::int64_t>(table.labels.begin(), table.labels.end()).size() != n) {
    return fail("table-shape: duplicate labels");
  }
  HyperfieldSpec spec;
  spec.kind = HyperfieldSpec::Kind::table;
  spec.table = table;
  return validate_axioms(Hyperfield::unchecked_table(table, spec), 0);
}

StringencyResult check_stringent(const Hyperfield& h, std::int64_t window) {
  const auto els = h.elements(window);
  for (const auto& a : els) {
    for (const auto& b : els) {
      if (a == h.neg(b)) continue;
      if (!h.hyperadd(a, b).is_singleton()) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

Hyperfield krasner_quotient(std::uint32_t p, std::vector<std::uint32_t> subgroup) {
  if (!is_prime(p)) throw InvalidSubgroup("modulus " + std::to_string(p) + " is not prime");
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (subgroup.empty()) throw InvalidSubgroup("subgroup is empty");
  for (auto g : subgroup) {
    if (g == 0 || g >= p) {
      throw InvalidSubgroup("subgroup element " + std::to_string(g) +
                            " is not a unit mod " + std::to_string(p));
    }
  }
  const std::set<std::uint32_t> G(subgroup.begin(), subgroup.end());
  for (auto a : subgroup) {
    for (auto b : subgroup) {
      if (!G.count(mulmod(a, b, p))) {
        throw InvalidSubgroup(std::to_string(a) + "*" + std::to_string(b) +
                              " leaves the subgroup mod " + std::to_string(p));
      }
    }
  }
  // Cosets as sorted element sets, indexed by least representative; the
  // zero coset {0} comes first and G (least representative 1) second.
  std::vector<std::set<std::uint32_t>> cosets{{0}};
  std::vector<std::int64_t> labels{0};
  std::vector<std::uint32_t> coset_of(p, 0);
  for (std::uint32_t r = 1; r < p; ++r) {
    if (coset_of[r] != 0) continue;
    std::set<std::uint32_t> c;
    for (auto g : subgroup) c.insert(mulmod(r, g, p));
    const auto idx = static_cast<std::uint32_t>(cosets.size());
    for (auto x : c) coset_of[x] = idx;
    cosets.push_back(std::move(c));
    labels.push_back(r);
  }
  const std::size_t n = cosets.size();
  FiniteTable t;
  t.labels = labels;
  t.add.assign(n, std::vector<std::uint64_t>(n, 0));
  t.mul.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::set<std::uint32_t> sumset;
      for (auto a : cosets[i]) {
        for (auto b : cosets[j]) sumset.insert((a + b) % p);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (std::includes(sumset.begin(), sumset.end(), cosets[k].begin(),
                          cosets[k].end())) {
          t.add[i][j] |= std::uint64_t{1} << k;
        }
      }
      t.mul[i][j] = coset_of[mulmod(static_cast<std::uint32_t>(labels[i]),
                                    static_cast<std::uint32_t>(labels[j]), p)];
    }
  }
  const AxiomReport report = validate_table(t);
  if (!report.ok()) {
    throw InvalidHyperfield("quotient table fails " + report.violations.front().axiom);
  }
  HyperfieldSpec spec;
  spec.kind = HyperfieldSpec::Kind::quotient;
  spec.p = p;
  spec.subgroup = subgroup;
  return Hyperfield::unchecked_table(t, std::move(spec));
}

}  // namespace hypermat
