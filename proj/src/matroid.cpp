#include "hypermat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hypermat/errors.hpp"

namespace hypermat {

std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

Mask remove_bit(Mask m, std::size_t i) {
  const Mask low = m & (bit(i) - 1);
  const Mask high = (m >> (i + 1)) << i;
  return low | high;
}

Mask insert_bit(Mask m, std::size_t i) {
  const Mask low = m & (bit(i) - 1);
  const Mask high = (m >> i) << (i + 1);
  return low | high;
}

std::vector<std::size_t> elements_of(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGround) {
    throw InvalidInput("ground sets are limited to " + std::to_string(kMaxGround) +
                       " elements");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidInput("empty ground label");
    if (!seen.insert(l).second) throw InvalidInput("duplicate ground label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::size_t GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownElement("unknown ground element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

GroundSet GroundSet::without(std::size_t i) const {
  if (i >= size()) throw UnknownElement("ground index out of range");
  auto labels = labels_;
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(i));
  return GroundSet(std::move(labels));
}

std::string GroundSet::format(Mask m) const {
  std::string s = "{";
  bool first = true;
  for (auto i : elements_of(m)) {
    if (!first) s += ",";
    first = false;
    s += i < size() ? labels_[i] : std::to_string(i);
  }
  return s + "}";
}

namespace {

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains_circuit(Mask s, const std::vector<Mask>& circuits) {
  return std::any_of(circuits.begin(), circuits.end(),
                     [&](Mask c) { return (c & ~s) == 0; });
}

}  // namespace

ClassicalMatroid::ClassicalMatroid(GroundSet ground, std::vector<Mask> circuits,
                                   std::vector<Mask> bases)
    : ground_(std::move(ground)),
      circuits_(sorted_unique(std::move(circuits))),
      bases_(sorted_unique(std::move(bases))) {
  rank_ = bases_.empty() ? 0 : popcount(bases_.front());
}

ClassicalMatroid ClassicalMatroid::from_circuits(GroundSet ground, std::vector<Mask> circuits) {
  circuits = sorted_unique(std::move(circuits));
  const Mask full = ground.full();
  for (Mask c : circuits) {
    if (c == 0) throw InvalidCircuits("empty circuit");
    if (c & ~full) throw InvalidCircuits("circuit leaves the ground set");
  }
  for (Mask a : circuits) {
    for (Mask b : circuits) {
      if (a != b && (a & ~b) == 0) {
        throw InvalidCircuits("circuits " + ground.format(a) + " and " + ground.format(b) +
                              " are comparable");
      }
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const Mask a = circuits[i];
      const Mask b = circuits[j];
      for (auto e : elements_of(a & b)) {
        const Mask target = (a | b) & ~bit(e);
        if (!contains_circuit(target, circuits)) {
          throw InvalidCircuits("elimination fails for " + ground.format(a) + ", " +
                                ground.format(b) + " at " + ground.label(e));
        }
      }
    }
  }
  // Bases: independent sets of maximum size.
  std::vector<Mask> bases;
  std::size_t best = 0;
  for (Mask s = 0;; ++s) {
    if (!contains_circuit(s, circuits)) {
      const auto k = popcount(s);
      if (k > best) {
        best = k;
        bases.clear();
      }
      if (k == best) bases.push_back(s);
    }
    if (s == full) break;
  }
  return ClassicalMatroid(std::move(ground), std::move(circuits), std::move(bases));
}

ClassicalMatroid ClassicalMatroid::from_bases(GroundSet ground, std::vector<Mask> bases) {
  bases = sorted_unique(std::move(bases));
  if (bases.empty()) throw InvalidCircuits("a matroid needs at least one basis");
  const auto r = popcount(bases.front());
  for (Mask b : bases) {
    if (popcount(b) != r) throw InvalidCircuits("bases of different sizes");
    if (b & ~ground.full()) throw InvalidCircuits("basis leaves the ground set");
  }
  const std::set<Mask> lookup(bases.begin(), bases.end());
  for (Mask a : bases) {
    for (Mask b : bases) {
      for (auto x : elements_of(a & ~b)) {
        bool ok = false;
        for (auto y : elements_of(b & ~a)) {
          if (lookup.count((a & ~bit(x)) | bit(y))) {
            ok = true;
            break;
          }
        }
        if (!ok) throw InvalidCircuits("basis exchange fails");
      }
    }
  }
  auto independent = [&](Mask s) {
    return std::any_of(bases.begin(), bases.end(), [&](Mask b) { return (s & ~b) == 0; });
  };
  std::vector<Mask> circuits;
  const Mask full = ground.full();
  for (Mask s = 1; s != 0 && s <= full; ++s) {
    if (independent(s)) continue;
    bool minimal = true;
    for (auto e : elements_of(s)) {
      if (!independent(s & ~bit(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(s);
    if (s == full) break;
  }
  return ClassicalMatroid(std::move(ground), std::move(circuits), std::move(bases));
}

std::vector<Mask> ClassicalMatroid::cocircuits() const { return dual().circuits(); }

std::size_t ClassicalMatroid::rank_of(Mask s) const {
  std::size_t best = 0;
  for (Mask b : bases_) best = std::max(best, popcount(b & s));
  return best;
}

bool ClassicalMatroid::is_independent(Mask s) const { return !contains_circuit(s, circuits_); }

bool ClassicalMatroid::is_loop(std::size_t e) const {
  return std::find(circuits_.begin(), circuits_.end(), bit(e)) != circuits_.end();
}

bool ClassicalMatroid::is_coloop(std::size_t e) const {
  return std::all_of(bases_.begin(), bases_.end(), [&](Mask b) { return has(b, e); });
}

ClassicalMatroid ClassicalMatroid::dual() const {
  std::vector<Mask> complements;
  for (Mask b : bases_) complements.push_back(ground_.full() & ~b);
  return from_bases(ground_, std::move(complements));
}

ClassicalMatroid ClassicalMatroid::delete_element(std::size_t e) const {
  if (e >= ground_.size()) throw UnknownElement("ground index out of range");
  std::vector<Mask> out;
  for (Mask c : circuits_) {
    if (!has(c, e)) out.push_back(remove_bit(c, e));
  }
  return from_circuits(ground_.without(e), std::move(out));
}

ClassicalMatroid ClassicalMatroid::contract_element(std::size_t e) const {
  if (e >= ground_.size()) throw UnknownElement("ground index out of range");
  std::vector<Mask> traces;
  for (Mask c : circuits_) traces.push_back(remove_bit(c, e));
  return from_circuits(ground_.without(e), minimal_nonempty(traces));
}

ClassicalMatroid uniform_matroid(std::size_t r, std::size_t n) {
  std::vector<Mask> circuits;
  for (Mask s = 0; s < bit(n); ++s) {
    if (popcount(s) == r + 1) circuits.push_back(s);
  }
  return ClassicalMatroid::from_circuits(GroundSet::numbered(n), std::move(circuits));
}

std::vector<ClassicalMatroid> enumerate_matroids(std::size_t n) {
  if (n > 6) throw ResourceLimit("matroid enumeration is limited to 6 elements");
  std::vector<ClassicalMatroid> out;
  const GroundSet ground = GroundSet::numbered(n);
  for (std::size_t r = 0; r <= n; ++r) {
    std::vector<Mask> ksets;
    for (Mask s = 0; s < bit(n); ++s) {
      if (popcount(s) == r) ksets.push_back(s);
    }
    const std::size_t m = ksets.size();
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
      std::vector<Mask> bases;
      for (std::size_t i = 0; i < m; ++i) {
        if (pick >> i & 1u) bases.push_back(ksets[i]);
      }
      try {
        out.push_back(ClassicalMatroid::from_bases(ground, std::move(bases)));
      } catch (const InvalidCircuits&) {
      }
    }
  }
  return out;
}

std::vector<Mask> minimal_nonempty(std::span<const Mask> family) {
  std::vector<Mask> f(family.begin(), family.end());
  std::erase(f, Mask{0});
  f = sorted_unique(std::move(f));
  std::vector<Mask> out;
  for (Mask a : f) {
    const bool minimal = std::none_of(f.begin(), f.end(), [&](Mask b) {
      return b != a && (b & ~a) == 0;
    });
    if (minimal) out.push_back(a);
  }
  return out;
}

MintyResult minty_check(const GroundSet& ground, std::span<const Mask> c,
                        std::span<const Mask> d) {
  auto fail = [](MintyWitness w) { return MintyResult{false, std::move(w)}; };
  for (Mask a : c) {
    if (a == 0) return fail({"M0-circuits", a, a});
    for (Mask b : c) {
      if (a != b && (a & ~b) == 0) return fail({"M0-circuits", a, b});
    }
  }
  for (Mask a : d) {
    if (a == 0) return fail({"M0-cocircuits", a, a});
    for (Mask b : d) {
      if (a != b && (a & ~b) == 0) return fail({"M0-cocircuits", a, b});
    }
  }
  for (Mask a : c) {
    for (Mask b : d) {
      if (popcount(a & b) == 1) return fail({"M1", a, b});
    }
  }
  const std::size_t n = ground.size();
  for (std::size_t g = 0; g < n; ++g) {
    const Mask rest = ground.full() & ~bit(g);
    // Enumerate the red part as a submask of rest; blue is what remains.
    Mask red = rest;
    while (true) {
      const Mask blue = rest & ~red;
      const bool circuit = std::any_of(c.begin(), c.end(), [&](Mask x) {
        return has(x, g) && (x & ~(red | bit(g))) == 0;
      });
      const bool cocircuit = circuit || std::any_of(d.begin(), d.end(), [&](Mask y) {
        return has(y, g) && (y & ~(blue | bit(g))) == 0;
      });
      if (!cocircuit) return fail({"M2", 0, 0, g, blue, red});
      if (red == 0) break;
      red = (red - 1) & rest;
    }
  }
  return {};
}

ClassicalMatroid minty_minimalize(const GroundSet& ground, std::span<const Mask> c,
                                  std::span<const Mask> d) {
  for (Mask a : c) {
    for (Mask b : d) {
      if (popcount(a & b) == 1) {
        throw InvalidPair("(M1) fails for " + ground.format(a) + " and " + ground.format(b));
      }
    }
  }
  const auto c0 = minimal_nonempty(c);
  const auto d0 = minimal_nonempty(d);
  // Minimal members inherit (M1), and (M2) for the pair is equivalent to
  // (M2) for the minimal members.
  const MintyResult check = minty_check(ground, c0, d0);
  if (!check.ok) {
    const auto& w = *check.witness;
    throw InvalidPair("(" + w.axiom + ") fails; green " +
                      (w.axiom == "M2" ? ground.label(w.element) : std::string("-")));
  }
  ClassicalMatroid m = ClassicalMatroid::from_circuits(ground, c0);
  if (m.cocircuits() != d0) {
    throw TheoremViolation("minimal cocircuit family differs from the dual of the result");
  }
  return m;
}

}  // namespace hypermat
