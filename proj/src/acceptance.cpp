#include "hypermat/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "hypermat/catalog.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/vectors.hpp"

namespace hypermat {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t checks = 0;

  // Records a failure; only the first few are spelled out.
  void fail(const std::string& what) {
    if (pass || failures < 3) detail << (failures ? "; " : "") << what;
    pass = false;
    ++failures;
  }
  std::size_t failures = 0;
};

std::vector<Hyperfield> stringent_catalog() {
  return {Hyperfield::krasner(),
          Hyperfield::sign(),
          Hyperfield::field(2),
          Hyperfield::field(3),
          Hyperfield::field(5),
          Hyperfield::field(7),
          Hyperfield::tropical(1),
          Hyperfield::stringent(ResidueKind::sign, 1),
          Hyperfield::stringent(ResidueKind::field, 1, 3)};
}

std::vector<Instance> family(const Hyperfield& h) {
  const auto entries = default_entries(h);
  return signature_family(h, entries);
}

std::vector<Instance> ungraded_family() {
  auto out = family(Hyperfield::sign());
  auto f3 = family(Hyperfield::field(3));
  out.insert(out.end(), f3.begin(), f3.end());
  return out;
}

std::vector<Instance> graded_family() {
  auto out = family(Hyperfield::tropical(1));
  auto s = family(Hyperfield::stringent(ResidueKind::sign, 1));
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<Instance> perfection_family() {
  auto out = ungraded_family();
  auto g = graded_family();
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

EnumerationOptions enum_options(const Hyperfield& h, const AcceptanceOptions& opt) {
  EnumerationOptions e;
  e.window = h.is_graded() ? opt.matroid_window : 0;
  e.threads = opt.threads;
  return e;
}

std::string vec(const HVector& v) { return to_string(v); }

Outcome hyperfield_axioms(const AcceptanceOptions& opt) {
  Outcome out;
  std::vector<Hyperfield> fields = stringent_catalog();
  for (const auto& h : fields) {
    ++out.checks;
    const auto report = validate_axioms(h, opt.hyperfield_window);
    if (!report.ok()) out.fail(h.name() + " violates " + report.violations.front().axiom);
    const auto s = check_stringent(h, opt.hyperfield_window);
    if (!s.stringent) out.fail(h.name() + " is not stringent");
  }
  const Hyperfield q = krasner_quotient(7, {1, 2, 4});
  ++out.checks;
  const auto report = validate_axioms(q, opt.hyperfield_window);
  if (!report.ok()) out.fail(q.name() + " violates " + report.violations.front().axiom);
  const auto s = check_stringent(q, opt.hyperfield_window);
  if (s.stringent) {
    out.fail(q.name() + " reported stringent");
  } else if (!s.witness || !(s.witness->first == q.one()) || !(s.witness->second == q.one())) {
    out.fail(q.name() + " witness is not the pair (G,G)");
  }
  return out;
}

Outcome stringency_law(const AcceptanceOptions& opt) {
  Outcome out;
  for (const auto& h : stringent_catalog()) {
    const auto elems = h.elements(opt.hyperfield_window);
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        if (a == h.neg(b)) continue;
        ++out.checks;
        const auto sum = h.hyperadd(a, b);
        if (!sum.is_singleton()) {
          out.fail(h.name() + ": " + to_string(a) + "+" + to_string(b) + " is not a singleton");
        } else if (!(h.compose(a, b) == sum.only())) {
          out.fail(h.name() + ": composition of " + to_string(a) + "," + to_string(b) +
                   " differs from the sum");
        }
      }
    }
  }
  return out;
}

Outcome perfection(const AcceptanceOptions& opt) {
  Outcome out;
  for (const auto& inst : perfection_family()) {
    ++out.checks;
    const auto r = is_perfect(inst.matroid, enum_options(inst.matroid.field(), opt));
    if (!r.perfect) {
      out.fail(inst.name + ": " + vec(r.witness->first) + " vs " + vec(r.witness->second));
    }
  }
  out.detail << (out.pass ? "" : "; ") << out.checks << " instances";
  return out;
}

Outcome weak_to_strong(const AcceptanceOptions&) {
  Outcome out;
  for (const auto& inst : perfection_family()) {
    const auto& m = inst.matroid;
    ++out.checks;
    if (!perp_k(m.circuits(), m.cocircuits(), 3).ok) {
      out.fail(inst.name + " was accepted without 3-orthogonality");
      continue;
    }
    const auto full = perp_k(m.circuits(), m.cocircuits(), std::nullopt);
    if (!full.ok) {
      out.fail(inst.name + ": " + vec(full.witness->first) + " not orthogonal to " +
               vec(full.witness->second));
    }
  }
  out.detail << (out.pass ? "" : "; ") << out.checks << " instances";
  return out;
}

// Circuits of U(2,4) carrying the weight w_e at every element e.
HMatroid weighted_u24(const Hyperfield& h, const std::array<std::int64_t, 4>& w) {
  std::vector<HVector> circuits;
  const ClassicalMatroid u = uniform_matroid(2, 4);
  for (Mask c : u.circuits()) {
    HVector x = zero_vector(4);
    for (auto e : elements_of(c)) x[e] = h.graded_one(Grade{w[e]});
    circuits.push_back(x);
  }
  return HMatroid::from_circuits(h, GroundSet::numbered(4), circuits);
}

Outcome generation(const AcceptanceOptions&) {
  Outcome out;
  const Hyperfield t = Hyperfield::tropical(1);
  const std::int64_t window = 3;
  const HVector x{{t.graded_one(Grade{2}), t.graded_one(Grade{2}), t.graded_one(Grade{1})}};
  const std::pair<std::string, HMatroid> cases[] = {
      {"U23 (2,2,1)", HMatroid::from_circuits(t, GroundSet::numbered(3), {x})},
      {"U24 (0,0,0,0)", weighted_u24(t, {0, 0, 0, 0})},
      {"U24 (1,0,0,1)", weighted_u24(t, {1, 0, 0, 1})},
  };
  for (const auto& [name, m] : cases) {
    ++out.checks;
    EnumerationOptions e;
    e.window = window;
    const auto a = vectors_enumerate(m, e);
    const auto b = vectors_generate(m, window);
    if (a != b) {
      out.fail(name + ": enumeration has " + std::to_string(a.size()) + " vectors, generation " +
               std::to_string(b.size()));
    } else {
      out.detail << (out.checks > 1 ? ", " : "") << name << ": " << a.size();
    }
  }
  return out;
}

std::set<HVector> dropped(const std::vector<HVector>& vs, std::size_t e, bool vanishing) {
  std::set<HVector> out;
  for (const auto& v : vs) {
    if (!vanishing || v[e].is_zero()) out.insert(drop(v, e));
  }
  return out;
}

Outcome minor_vectors(const AcceptanceOptions& opt) {
  Outcome out;
  for (const auto& inst : ungraded_family()) {
    const auto& m = inst.matroid;
    const auto eo = enum_options(m.field(), opt);
    const auto vs = vectors_enumerate(m, eo);
    for (std::size_t e = 0; e < m.ground().size(); ++e) {
      out.checks += 2;
      const auto contracted = vectors_enumerate(hm_contract(m, e), eo);
      if (std::set<HVector>(contracted.begin(), contracted.end()) != dropped(vs, e, false)) {
        out.fail(inst.name + ": contraction of " + m.ground().label(e));
      }
      const auto deleted = vectors_enumerate(hm_delete(m, e), eo);
      if (std::set<HVector>(deleted.begin(), deleted.end()) != dropped(vs, e, true)) {
        out.fail(inst.name + ": deletion of " + m.ground().label(e));
      }
    }
  }
  out.detail << (out.pass ? "" : "; ") << out.checks << " identities";
  return out;
}

// Top part of x read in the residue, normalized.
HVector residue_top(const Hyperfield& h, const HVector& x, Side side) {
  const HVector up = uparrow(h, x);
  Grade g;
  for (const auto& v : up.entries) {
    if (v.is_unit()) g = v.grade();
  }
  HVector lifted = scale(h, up, h.graded_one(-g), side);
  for (auto& v : lifted.entries) v = h.to_residue(v);
  return normalize(h.residue_field(), lifted, side);
}

void residue_checks(const std::string& name, const HMatroid& m, Outcome& out) {
  const Hyperfield& h = m.field();
  const std::size_t n = m.ground().size();
  const HMatroid m0 = residue_matroid(m);
  ++out.checks;
  const auto& u = m0.underlying();
  const auto again = ClassicalMatroid::from_circuits(u.ground(), u.circuits());
  const auto cocircuit_supports = m0.cocircuits().supports();
  if (!(again == u) || !minty_check(u.ground(), u.circuits(), cocircuit_supports).ok) {
    out.fail(name + ": residue underlying matroid fails validation");
  }
  const HMatroid tropical = push_forward(Homomorphism::valuation(h), m);
  if (!(residue_matroid(tropical).underlying() == u)) {
    out.fail(name + ": residue differs from the residue of the valuation push-forward");
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (!u.is_loop(e)) {
      ++out.checks;
      if (!(residue_matroid(hm_contract(m, e)) == hm_contract(m0, e))) {
        out.fail(name + ": residue does not commute with contracting " + m.ground().label(e));
      }
    }
    if (!u.is_coloop(e)) {
      ++out.checks;
      if (!(residue_matroid(hm_delete(m, e)) == hm_delete(m0, e))) {
        out.fail(name + ": residue does not commute with deleting " + m.ground().label(e));
      }
    }
  }
  // Every residue circuit lifts to a circuit inside any spanning set plus itself.
  for (const auto& c : m0.circuits().representatives()) {
    for (Mask s = 0; s <= m.ground().full(); ++s) {
      if (!u.spans(s)) continue;
      ++out.checks;
      const Mask allowed = s | c.support();
      const auto& reps = m.circuits().representatives();
      const bool found = std::any_of(reps.begin(), reps.end(), [&](const HVector& x) {
        return (x.support() & ~allowed) == 0 && residue_top(h, x, m.side()) == c;
      });
      if (!found) {
        out.fail(name + ": residue circuit " + vec(c) + " has no lift inside " +
                 m.ground().format(s));
      }
    }
  }
}

Outcome residue(const AcceptanceOptions&) {
  Outcome out;
  const Hyperfield t = Hyperfield::tropical(1);
  const HVector x{{t.graded_one(Grade{2}), t.graded_one(Grade{2}), t.graded_one(Grade{1})}};
  const HMatroid example = HMatroid::from_circuits(t, GroundSet::numbered(3), {x});
  const HMatroid m0 = residue_matroid(example);
  ++out.checks;
  std::vector<Mask> cocircuits = m0.cocircuits().supports();
  std::sort(cocircuits.begin(), cocircuits.end());
  if (m0.underlying().circuits() != std::vector<Mask>{bit(0) | bit(1)} ||
      cocircuits != std::vector<Mask>{bit(0) | bit(1), bit(2)}) {
    out.fail("worked example gives the wrong residue circuits or cocircuits");
  }
  for (const auto& inst : graded_family()) {
    try {
      residue_checks(inst.name, inst.matroid, out);
    } catch (const Error& err) {
      out.fail(inst.name + ": " + err.what());
    }
  }
  out.detail << (out.pass ? "" : "; ") << out.checks << " checks";
  return out;
}

Outcome vector_axioms(const AcceptanceOptions& opt) {
  Outcome out;
  for (const auto& inst : perfection_family()) {
    const auto& m = inst.matroid;
    const auto eo = enum_options(m.field(), opt);
    const auto vs = vectors_enumerate(m, eo);
    VectorAxiomOptions vo;
    vo.window = eo.window;
    vo.premise_window = m.field().is_graded() ? std::max<std::int64_t>(0, eo.window - 2) : 0;
    vo.side = m.side();
    ++out.checks;
    const auto report = check_vector_axioms(m.field(), vs, vo);
    if (!report.ok()) {
      const auto& f = report.failures.front();
      std::string w;
      for (const auto& v : f.witness) w += " " + vec(v);
      out.fail(inst.name + ": " + f.check + " " + f.detail + w);
      continue;
    }
    try {
      const HMatroid back = reconstruct_from_vectors(m.field(), m.ground(), vs, eo.window, m.side());
      if (!(back.circuits() == m.circuits())) out.fail(inst.name + ": reconstruction differs");
    } catch (const Error& err) {
      out.fail(inst.name + ": " + err.what());
    }
  }
  out.detail << (out.pass ? "" : "; ") << out.checks << " instances";
  return out;
}

Outcome minty(const AcceptanceOptions&) {
  Outcome out;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& m : enumerate_matroids(n)) {
      ++out.checks;
      const auto d = m.cocircuits();
      const auto r = minty_check(m.ground(), m.circuits(), d);
      if (!r.ok) {
        out.fail("minty_check rejects a matroid on " + std::to_string(n) + " elements (" +
                 r.witness->axiom + ")");
        continue;
      }
      if (!(minty_minimalize(m.ground(), m.circuits(), d) == m)) {
        out.fail("minty_minimalize moves a matroid on " + std::to_string(n) + " elements");
      }
    }
  }
  out.detail << (out.pass ? "" : "; ") << out.checks << " matroids";
  return out;
}

// Independent check of a Farkas witness against the partition.
bool valid_witness(const HMatroid& m, const FarkasPartition& p, const FarkasWitness& w,
                   bool weak) {
  const Hyperfield& h = m.field();
  const Grade zero = Grade::zero(h.rank());
  if (w.kind == FarkasWitness::Kind::vector) {
    const HVector& v = w.witness;
    if (!is_vector(m, v)) return false;
    for (std::size_t e = 0; e < v.size(); ++e) {
      if (has(p.green, e) && !(v[e] == h.one())) return false;
      if (has(p.blue, e) && !v[e].is_zero()) return false;
      if (has(p.red, e) && v[e].is_unit()) {
        if (weak ? zero < v[e].grade() : !(v[e].grade() < zero)) return false;
      }
    }
    return true;
  }
  const HVector& y = w.witness;
  if (!m.cocircuits().contains_class_of(y)) return false;
  bool top_in_green = false;
  std::vector<HElement> greens;
  for (std::size_t e = 0; e < y.size(); ++e) {
    if (!y[e].is_unit()) continue;
    if (has(p.green, e)) {
      greens.push_back(y[e]);
      if (zero < y[e].grade()) return false;
      if (y[e].grade() == zero) top_in_green = true;
    }
    if (has(p.red, e) && (weak ? !(y[e].grade() < zero) : zero < y[e].grade())) return false;
  }
  return top_in_green && !h.sum_contains_zero(greens);
}

Outcome farkas(const AcceptanceOptions& opt) {
  Outcome out;
  for (const auto& inst : perfection_family()) {
    const auto& m = inst.matroid;
    const std::size_t n = m.ground().size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      FarkasPartition p;
      std::size_t c = code;
      for (std::size_t e = 0; e < n; ++e, c /= 3) {
        (c % 3 == 0 ? p.red : c % 3 == 1 ? p.green : p.blue) |= bit(e);
      }
      for (bool weak : {false, true}) {
        ++out.checks;
        try {
          const auto w = farkas_witness(m, p, enum_options(m.field(), opt).window, weak);
          if (!valid_witness(m, p, w, weak)) {
            out.fail(inst.name + ": invalid witness " + vec(w.witness));
          }
        } catch (const TheoremViolation& err) {
          out.fail(inst.name + " partition R=" + m.ground().format(p.red) +
                   " G=" + m.ground().format(p.green) + (weak ? " (weak): " : ": ") + err.what());
        }
      }
    }
  }
  out.detail << (out.pass ? "" : "; ") << out.checks << " partitions";
  return out;
}

// Signatures obtained by changing one entry of a valid signature that duality
// then rejects, taken in a fixed order.
std::vector<CircuitSignature> corrupted(const Hyperfield& h, std::size_t wanted) {
  std::vector<CircuitSignature> out;
  const auto entries = default_entries(h);
  for (const auto& inst : family(h)) {
    const auto& c = inst.matroid.circuits();
    const auto& reps = c.representatives();
    for (std::size_t i = 0; i < reps.size() && out.size() < wanted; ++i) {
      for (auto e : elements_of(reps[i].support())) {
        for (const auto& x : entries) {
          if (x == reps[i][e] || out.size() >= wanted) continue;
          auto changed = reps;
          changed[i][e] = x;
          CircuitSignature sig(h, c.ground(), changed, c.side());
          if (sig.size() != reps.size()) continue;
          try {
            HMatroid::from_signature(sig);
          } catch (const NotAnHMatroid&) {
            out.push_back(std::move(sig));
          }
        }
      }
    }
    if (out.size() >= wanted) break;
  }
  return out;
}

Outcome c3prime(const AcceptanceOptions&) {
  Outcome out;
  std::vector<std::pair<std::string, CircuitSignature>> cases;
  for (const auto& inst : graded_family()) cases.emplace_back(inst.name, inst.matroid.circuits());
  std::size_t bad = 0;
  for (const auto& h : {Hyperfield::tropical(1), Hyperfield::stringent(ResidueKind::sign, 1)}) {
    for (auto& sig : corrupted(h, 10)) {
      cases.emplace_back("corrupted " + h.name() + " " + std::to_string(bad++), std::move(sig));
    }
  }
  if (bad != 20) out.fail("only " + std::to_string(bad) + " corrupted signatures found");
  std::size_t rejected = 0;
  for (const auto& [name, sig] : cases) {
    ++out.checks;
    const bool a = check_circuit_axioms(sig).ok();
    const bool b = check_c3prime(sig).ok();
    if (a != b) {
      out.fail(name + ": modular elimination " + (a ? "passes" : "fails") +
               " but strong elimination " + (b ? "passes" : "fails"));
    }
    const bool corrupt = name.starts_with("corrupted");
    if (corrupt && !a) ++rejected;
    if (corrupt == a) out.fail(name + ": elimination verdict contradicts duality");
  }
  out.detail << (out.pass ? "" : "; ") << out.checks << " signatures, " << rejected
             << " corrupted rejected";
  return out;
}

const char* const kTitles[kCriteria] = {
    "hyperfield axiom suite",
    "stringency law",
    "perfection",
    "weak orthogonality implies strong",
    "vector generation equals enumeration",
    "minor-vector identities",
    "residue machinery",
    "vector axioms round trip",
    "Minty validators",
    "Farkas dichotomy",
    "strong elimination equivalence",
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > kCriteria) throw InvalidInput("no criterion " + std::to_string(id));
  CriterionResult result;
  result.id = id;
  result.title = kTitles[id - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    switch (id) {
      case 1: out = hyperfield_axioms(opt); break;
      case 2: out = stringency_law(opt); break;
      case 3: out = perfection(opt); break;
      case 4: out = weak_to_strong(opt); break;
      case 5: out = generation(opt); break;
      case 6: out = minor_vectors(opt); break;
      case 7: out = residue(opt); break;
      case 8: out = vector_axioms(opt); break;
      case 9: out = minty(opt); break;
      case 10: out = farkas(opt); break;
      default: out = c3prime(opt); break;
    }
  } catch (const std::exception& err) {
    out.fail(std::string("exception: ") + err.what());
  }
  result.pass = out.pass;
  result.detail = out.detail.str();
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opt, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run_criterion(id, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace hypermat
