#include "hypermat/hmatroid.hpp"

#include <algorithm>
#include <set>

#include "hypermat/errors.hpp"

namespace hypermat {

Mask HVector::support() const {
  Mask m = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_unit()) m |= bit(i);
  }
  return m;
}

HVector zero_vector(std::size_t n) { return HVector{std::vector<HElement>(n)}; }

std::string to_string(const HVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

HVector drop(const HVector& v, std::size_t e) {
  HVector out = v;
  out.entries.erase(out.entries.begin() + static_cast<std::ptrdiff_t>(e));
  return out;
}

HVector insert(const HVector& v, std::size_t e, const HElement& value) {
  HVector out = v;
  out.entries.insert(out.entries.begin() + static_cast<std::ptrdiff_t>(e), value);
  return out;
}

HVector scale(const Hyperfield& h, const HVector& x, const HElement& s, Side side) {
  HVector out = x;
  for (auto& v : out.entries) v = side == Side::left ? h.mul(s, v) : h.mul(v, s);
  return out;
}

HVector normalize(const Hyperfield& h, const HVector& x, Side side) {
  for (const auto& v : x.entries) {
    if (v.is_unit()) return scale(h, x, h.inv(v), side);
  }
  return x;
}

HVector compose(const Hyperfield& h, const HVector& x, const HVector& y) {
  if (x.size() != y.size()) throw DomainMismatch("vectors of different lengths");
  HVector out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = h.compose(x[i], y[i]);
  return out;
}

HVector uparrow(const Hyperfield& h, const HVector& x) {
  const HElement* top = nullptr;
  for (const auto& v : x.entries) {
    h.require(v);
    if (v.is_unit() && (!top || top->grade() < v.grade())) top = &v;
  }
  HVector out = x;
  if (!top) return out;
  const Grade g = top->grade();
  for (auto& v : out.entries) {
    if (v.is_unit() && v.grade() != g) v = HElement::zero();
  }
  return out;
}

namespace {

std::vector<HElement> products(const Hyperfield& h, const HVector& x, const HVector& y) {
  if (x.size() != y.size()) throw DomainMismatch("vectors of different lengths");
  std::vector<HElement> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_unit() && y[i].is_unit()) out.push_back(h.mul(x[i], y[i]));
  }
  return out;
}

}  // namespace

SymbolicSet pairing(const Hyperfield& h, const HVector& x, const HVector& y) {
  const auto p = products(h, x, y);
  return h.hyperadd_multi(p);
}

bool perp(const Hyperfield& h, const HVector& x, const HVector& y) {
  const auto p = products(h, x, y);
  return h.sum_contains_zero(p);
}

CircuitSignature::CircuitSignature(Hyperfield h, GroundSet ground, std::vector<HVector> vectors,
                                   Side side)
    : field_(std::move(h)), ground_(std::move(ground)), side_(side) {
  for (auto& v : vectors) {
    if (v.size() != ground_.size()) {
      throw DomainMismatch("vector " + to_string(v) + " does not match the ground set size");
    }
    for (const auto& x : v.entries) field_.require(x);
    if (v.is_zero()) throw InvalidCircuits("(C0): the zero vector is not a circuit");
    reps_.push_back(normalize(field_, v, side_));
  }
  std::sort(reps_.begin(), reps_.end());
  reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
}

std::vector<Mask> CircuitSignature::supports() const {
  std::vector<Mask> out;
  for (const auto& r : reps_) out.push_back(r.support());
  return out;
}

const HVector* CircuitSignature::find(Mask support) const {
  for (const auto& r : reps_) {
    if (r.support() == support) return &r;
  }
  return nullptr;
}

bool CircuitSignature::contains_class_of(const HVector& x) const {
  if (x.size() != ground_.size() || x.is_zero()) return false;
  return std::binary_search(reps_.begin(), reps_.end(), normalize(field_, x, side_));
}

PerpResult perp_k(const CircuitSignature& c, const CircuitSignature& d,
                  std::optional<std::size_t> k) {
  if (!(c.field() == d.field()) || !(c.ground() == d.ground())) {
    throw DomainMismatch("signatures over different hyperfields or ground sets");
  }
  const bool swap = c.side() == Side::right && d.side() == Side::left;
  const CircuitSignature& lhs = swap ? d : c;
  const CircuitSignature& rhs = swap ? c : d;
  for (const auto& x : lhs.representatives()) {
    for (const auto& y : rhs.representatives()) {
      if (k && popcount(x.support() & y.support()) > *k) continue;
      if (!perp(c.field(), x, y)) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

std::optional<HElement> find_scaling(const Hyperfield& h, const HVector& w,
                                     std::span<const SymbolicSet> targets, Side side) {
  const Mask ws = w.support();
  for (std::size_t f = 0; f < w.size(); ++f) {
    if (!has(ws, f) && !targets[f].contains_zero()) return std::nullopt;
  }
  if (ws == 0) return h.one();
  std::vector<HElement> candidates;
  bool all_below = true;
  std::optional<Grade> lowest;
  for (auto f : elements_of(ws)) {
    const HElement wi = h.inv(w[f]);
    for (const auto& s : targets[f].finite()) {
      if (s.is_unit()) candidates.push_back(side == Side::left ? h.mul(s, wi) : h.mul(wi, s));
    }
    if (!targets[f].below()) {
      all_below = false;
    } else {
      const Grade bound = *targets[f].below() - w[f].grade();
      if (!lowest || bound < *lowest) lowest = bound;
    }
  }
  // A scalar small enough to push every entry into the down-sets.
  if (all_below && lowest) candidates.push_back(h.graded_one(lowest->step_down()));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& delta : candidates) {
    bool ok = true;
    for (auto f : elements_of(ws)) {
      const HElement v = side == Side::left ? h.mul(delta, w[f]) : h.mul(w[f], delta);
      if (!targets[f].contains(v)) {
        ok = false;
        break;
      }
    }
    if (ok) return delta;
  }
  return std::nullopt;
}

namespace {

// γ with γ·Y (or Y·γ) taking the value -X_e at e.
HVector opposing_scaling(const Hyperfield& h, const HVector& x, const HVector& y,
                         std::size_t e, Side side) {
  const HElement target = h.neg(x[e]);
  const HElement gamma =
      side == Side::left ? h.mul(target, h.inv(y[e])) : h.mul(h.inv(y[e]), target);
  return scale(h, y, gamma, side);
}

bool is_modular(Mask a, Mask b, const std::vector<Mask>& supports) {
  const Mask u = a | b;
  std::vector<Mask> inside;
  for (Mask s : supports) {
    if ((s & ~u) == 0) inside.push_back(s);
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      if ((inside[i] | inside[j]) != u) return false;
    }
  }
  return true;
}

void check_structure(const CircuitSignature& c, Report& report) {
  const auto& reps = c.representatives();
  const auto supports = c.supports();
  for (const auto& x : reps) {
    if (x.is_zero()) report.failures.push_back({"C0", "zero vector", {x}});
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i == j) continue;
      if (supports[i] == supports[j] && i < j) {
        report.failures.push_back({"C2", "two classes share a support", {reps[i], reps[j]}});
      } else if (supports[i] != supports[j] && (supports[i] & ~supports[j]) == 0) {
        report.failures.push_back({"C2", "comparable supports", {reps[i], reps[j]}});
      }
    }
  }
}

}  // namespace

Report check_circuit_axioms(const CircuitSignature& c) {
  Report report;
  check_structure(c, report);
  const Hyperfield& h = c.field();
  const auto& reps = c.representatives();
  const auto supports = c.supports();
  const std::size_t n = c.ground().size();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (supports[i] == supports[j] || !is_modular(supports[i], supports[j], supports)) {
        continue;
      }
      const HVector& x = reps[i];
      for (auto e : elements_of(supports[i] & supports[j])) {
        const HVector y = opposing_scaling(h, x, reps[j], e, c.side());
        std::vector<SymbolicSet> targets(n);
        for (std::size_t f = 0; f < n; ++f) {
          targets[f] = f == e ? SymbolicSet::singleton(h.zero()) : h.hyperadd(x[f], y[f]);
        }
        const bool found = std::any_of(reps.begin(), reps.end(), [&](const HVector& w) {
          return find_scaling(h, w, targets, c.side()).has_value();
        });
        if (!found) {
          report.failures.push_back(
              {"C3", "no elimination at " + c.ground().label(e), {x, y}});
        }
      }
    }
  }
  return report;
}

CircuitSignature dual_signature(const ClassicalMatroid& underlying, const CircuitSignature& c) {
  const Hyperfield& h = c.field();
  const GroundSet& ground = c.ground();
  const std::size_t n = ground.size();
  const Side side = c.side();
  const auto& reps = c.representatives();
  std::vector<HVector> cocircuits;
  for (Mask d : underlying.cocircuits()) {
    HVector y = zero_vector(n);
    const std::size_t e0 = elements_of(d).front();
    y[e0] = h.one();
    Mask assigned = bit(e0);
    bool progress = true;
    while (assigned != d && progress) {
      progress = false;
      for (const auto& x : reps) {
        const Mask meet = x.support() & d;
        if (popcount(meet) != 2) continue;
        const Mask fresh = meet & ~assigned;
        if (popcount(fresh) != 1) continue;
        const std::size_t a = elements_of(meet & assigned).front();
        const std::size_t b = elements_of(fresh).front();
        // 0 ∈ X_a Y_a ⊞ X_b Y_b forces X_b Y_b = -(X_a Y_a), with the
        // circuit on the side its signature dictates.
        if (side == Side::left) {
          y[b] = h.mul(h.inv(x[b]), h.neg(h.mul(x[a], y[a])));
        } else {
          y[b] = h.mul(h.neg(h.mul(y[a], x[a])), h.inv(x[b]));
        }
        assigned |= bit(b);
        progress = true;
      }
    }
    if (assigned != d) {
      throw NotAnHMatroid("cocircuit " + ground.format(d) +
                          " is not connected by circuits meeting it in two elements");
    }
    cocircuits.push_back(y);
  }
  CircuitSignature out(h, ground, std::move(cocircuits), opposite(side));
  const PerpResult check = perp_k(c, out, 3);
  if (!check.ok) {
    throw NotAnHMatroid("circuit " + to_string(check.witness->first) +
                        " is not orthogonal to the forced cocircuit " +
                        to_string(check.witness->second));
  }
  return out;
}

HMatroid HMatroid::from_circuits(const Hyperfield& h, const GroundSet& ground,
                                 std::vector<HVector> circuits, Side side) {
  return from_signature(CircuitSignature(h, ground, std::move(circuits), side));
}

HMatroid HMatroid::from_signature(const CircuitSignature& c) {
  auto supports = c.supports();
  std::vector<Mask> sorted = supports;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidCircuits("(C2): two circuit classes share a support");
  }
  ClassicalMatroid u = ClassicalMatroid::from_circuits(c.ground(), std::move(supports));
  CircuitSignature d = dual_signature(u, c);
  return HMatroid(c, std::move(d), std::move(u));
}

HMatroid HMatroid::dual() const { return HMatroid(cocircuits_, circuits_, underlying_.dual()); }

HMatroid hm_delete(const HMatroid& m, std::size_t e) {
  if (e >= m.ground().size()) throw UnknownElement("ground index out of range");
  std::vector<HVector> out;
  for (const auto& x : m.circuits().representatives()) {
    if (x[e].is_zero()) out.push_back(drop(x, e));
  }
  return HMatroid::from_circuits(m.field(), m.ground().without(e), std::move(out), m.side());
}

HMatroid hm_contract(const HMatroid& m, std::size_t e) {
  if (e >= m.ground().size()) throw UnknownElement("ground index out of range");
  std::vector<HVector> traces;
  std::vector<Mask> supports;
  for (const auto& x : m.circuits().representatives()) {
    HVector t = drop(x, e);
    if (t.is_zero()) continue;
    supports.push_back(t.support());
    traces.push_back(std::move(t));
  }
  const auto minimal = minimal_nonempty(supports);
  std::vector<HVector> out;
  for (auto& t : traces) {
    if (std::binary_search(minimal.begin(), minimal.end(), t.support())) out.push_back(t);
  }
  return HMatroid::from_circuits(m.field(), m.ground().without(e), std::move(out), m.side());
}

HMatroid hm_rescale(const HMatroid& m, const HVector& rho) {
  const Hyperfield& h = m.field();
  if (rho.size() != m.ground().size()) throw DomainMismatch("scaling vector has the wrong length");
  for (const auto& r : rho.entries) {
    h.require(r);
    if (r.is_zero()) throw InvalidInput("scaling vector entries must be nonzero");
  }
  // The left-side family is multiplied by rho^-1 on the right, the other
  // family by rho on the left, so every pairing is unchanged.
  auto left_map = [&](const HVector& x) {
    HVector out = x;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = h.mul(x[i], h.inv(rho[i]));
    return out;
  };
  auto right_map = [&](const HVector& y) {
    HVector out = y;
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = h.mul(rho[i], y[i]);
    return out;
  };
  const bool circuits_left = m.side() == Side::left;
  std::vector<HVector> circuits;
  std::vector<HVector> cocircuits;
  for (const auto& x : m.circuits().representatives()) {
    circuits.push_back(circuits_left ? left_map(x) : right_map(x));
  }
  for (const auto& y : m.cocircuits().representatives()) {
    cocircuits.push_back(circuits_left ? right_map(y) : left_map(y));
  }
  HMatroid out = HMatroid::from_circuits(h, m.ground(), std::move(circuits), m.side());
  const CircuitSignature expected(h, m.ground(), std::move(cocircuits), opposite(m.side()));
  if (!(out.cocircuits() == expected)) {
    throw TheoremViolation("rescaled cocircuits differ from the synthesized ones");
  }
  return out;
}

namespace {

// Rescale to top grade 0, keep the top entries, read them in the residue.
std::vector<HVector> top_parts(const Hyperfield& h, const CircuitSignature& s) {
  std::vector<HVector> out;
  for (const auto& x : s.representatives()) {
    const HVector up = uparrow(h, x);
    Grade g;
    for (const auto& v : up.entries) {
      if (v.is_unit()) g = v.grade();
    }
    HVector lifted = scale(h, up, h.graded_one(-g), s.side());
    for (auto& v : lifted.entries) v = h.to_residue(v);
    out.push_back(std::move(lifted));
  }
  return out;
}

std::vector<HVector> minimal_classes(const Hyperfield& r, std::vector<HVector> parts, Side side,
                                     const char* what) {
  std::vector<Mask> supports;
  for (const auto& p : parts) supports.push_back(p.support());
  const auto minimal = minimal_nonempty(supports);
  std::vector<HVector> out;
  for (const auto& p : parts) {
    if (!std::binary_search(minimal.begin(), minimal.end(), p.support())) continue;
    const HVector q = normalize(r, p, side);
    for (const auto& o : out) {
      if (o.support() == q.support() && o != q) {
        throw TheoremViolation(std::string("residue ") + what +
                               " classes disagree on a common support");
      }
    }
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

}  // namespace

HMatroid residue_matroid(const HMatroid& m) {
  const Hyperfield& h = m.field();
  if (h.is_table()) throw UnsupportedOperation("residue matroids need a catalog hyperfield");
  const Hyperfield r = h.residue_field();
  auto c0 = minimal_classes(r, top_parts(h, m.circuits()), m.side(), "circuit");
  auto d0 = minimal_classes(r, top_parts(h, m.cocircuits()), opposite(m.side()), "cocircuit");
  try {
    HMatroid m0 = HMatroid::from_circuits(r, m.ground(), std::move(c0), m.side());
    const CircuitSignature expected(r, m.ground(), std::move(d0), opposite(m.side()));
    if (!(m0.cocircuits() == expected)) {
      throw TheoremViolation("residue cocircuits are not the top parts of the cocircuits");
    }
    return m0;
  } catch (const InvalidCircuits& ex) {
    throw TheoremViolation(std::string("residue circuits are not a matroid: ") + ex.what());
  } catch (const NotAnHMatroid& ex) {
    throw TheoremViolation(std::string("residue signature is not a matroid: ") + ex.what());
  }
}

HMatroid push_forward(const Homomorphism& f, const HMatroid& m) {
  if (!(f.domain() == m.field())) {
    throw DomainMismatch("homomorphism domain " + f.domain().name() + " differs from " +
                         m.field().name());
  }
  std::vector<HVector> images;
  for (const auto& x : m.circuits().representatives()) {
    HVector y = x;
    for (auto& v : y.entries) v = f.apply(v);
    images.push_back(std::move(y));
  }
  try {
    return HMatroid::from_circuits(f.codomain(), m.ground(), std::move(images), m.side());
  } catch (const InvalidCircuits& ex) {
    throw NotAnHMatroid(std::string("push-forward is not a matroid: ") + ex.what());
  }
}

Report check_c3prime(const CircuitSignature& c) {
  const Hyperfield& h = c.field();
  if (h.is_table() ||
      (h.residue_kind() != ResidueKind::krasner && h.residue_kind() != ResidueKind::sign)) {
    throw UnsupportedOperation("strong elimination check needs a Krasner or sign residue");
  }
  Report report;
  check_structure(c, report);
  const auto& reps = c.representatives();
  const std::size_t n = c.ground().size();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const HVector& x = reps[i];
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i == j) continue;
      for (auto e : elements_of(x.support() & reps[j].support())) {
        const HVector y = opposing_scaling(h, x, reps[j], e, c.side());
        for (std::size_t f = 0; f < n; ++f) {
          if (compare_valuation(x[f], y[f]) <= 0) continue;
          std::vector<SymbolicSet> targets(n);
          for (std::size_t g = 0; g < n; ++g) {
            if (g == e) {
              targets[g] = SymbolicSet::singleton(h.zero());
            } else if (g == f) {
              targets[g] = SymbolicSet::singleton(x[f]);
            } else {
              targets[g] =
                  h.unite(h.strictly_below(h.compose(x[g], y[g])), h.hyperadd(x[g], y[g]));
            }
          }
          const bool found = std::any_of(reps.begin(), reps.end(), [&](const HVector& w) {
            return find_scaling(h, w, targets, c.side()).has_value();
          });
          if (!found) {
            report.failures.push_back({"C3'",
                                       "no elimination at " + c.ground().label(e) +
                                           " keeping " + c.ground().label(f),
                                       {x, y}});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace hypermat
