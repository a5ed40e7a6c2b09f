#include "hypermat/vectors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "hypermat/errors.hpp"

namespace hypermat {

namespace {

using Candidates = std::vector<std::vector<HElement>>;

std::size_t highest_bit(Mask m) {
  std::size_t i = 0;
  while (m >> (i + 1)) ++i;
  return i;
}

// Orthogonality as a constraint on a vector under construction. The
// candidate sits on the left of every pairing when candidate_left is set.
struct OrthogonalSearch {
  const Hyperfield& h;
  const Candidates& cands;
  std::vector<std::vector<const HVector*>> due;  // constraints checked after coordinate i
  bool candidate_left;
  std::size_t limit;

  OrthogonalSearch(const Hyperfield& field, const Candidates& c,
                   const std::vector<HVector>& constraints, bool left, std::size_t lim)
      : h(field), cands(c), due(c.size()), candidate_left(left), limit(lim) {
    for (const auto& y : constraints) {
      const Mask s = y.support();
      if (s == 0) continue;
      due[highest_bit(s)].push_back(&y);
    }
  }

  bool satisfied(const HVector& v, std::size_t i, std::vector<HElement>& buf) const {
    for (const HVector* y : due[i]) {
      buf.clear();
      for (auto f : elements_of(y->support())) {
        if (!v[f].is_unit()) continue;
        buf.push_back(candidate_left ? h.mul(v[f], (*y)[f]) : h.mul((*y)[f], v[f]));
      }
      if (!h.sum_contains_zero(buf)) return false;
    }
    return true;
  }

  void run(HVector& v, std::size_t i, std::vector<HVector>& out,
           std::vector<HElement>& buf) const {
    if (out.size() >= limit) return;
    if (i == cands.size()) {
      out.push_back(v);
      return;
    }
    for (const auto& x : cands[i]) {
      v[i] = x;
      if (satisfied(v, i, buf)) run(v, i + 1, out, buf);
      if (out.size() >= limit) return;
    }
    v[i] = HElement::zero();
  }

  void run_from(std::size_t first, HVector& v, std::vector<HVector>& out) const {
    std::vector<HElement> buf;
    v[0] = cands[0][first];
    if (satisfied(v, 0, buf)) run(v, 1, out, buf);
  }
};

double estimate(const Candidates& cands) {
  double total = 1;
  for (const auto& c : cands) total *= static_cast<double>(c.size());
  return total;
}

std::vector<HVector> enumerate_orthogonal(const Hyperfield& h, const Candidates& cands,
                                          const std::vector<HVector>& constraints,
                                          bool candidate_left, unsigned threads, double budget,
                                          std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  const double work = estimate(cands);
  if (work > budget) {
    throw ResourceLimit("search over " + std::to_string(static_cast<long double>(work)) +
                        " candidates exceeds the budget of " +
                        std::to_string(static_cast<long double>(budget)));
  }
  const std::size_t n = cands.size();
  std::vector<HVector> out;
  if (n == 0) {
    out.push_back(HVector{});
    return out;
  }
  OrthogonalSearch search(h, cands, constraints, candidate_left, limit);
  const std::size_t width = cands[0].size();
  if (threads <= 1 || width < 2 || limit != std::numeric_limits<std::size_t>::max()) {
    HVector v = zero_vector(n);
    std::vector<HElement> buf;
    search.run(v, 0, out, buf);
  } else {
    std::vector<std::vector<HVector>> parts(width);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, width));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        HVector v = zero_vector(n);
        for (std::size_t i = t; i < width; i += workers) search.run_from(i, v, parts[i]);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Candidates full_box(const Hyperfield& h, std::size_t n, std::int64_t window) {
  return Candidates(n, h.elements(window));
}

bool vector_left(Side side) { return side == Side::left; }

std::int64_t max_abs_coord(const HVector& v) {
  std::int64_t m = 0;
  for (const auto& x : v.entries) {
    if (!x.is_unit()) continue;
    for (std::size_t i = 0; i < x.grade().rank(); ++i) {
      m = std::max<std::int64_t>(m, x.grade()[i] < 0 ? -x.grade()[i] : x.grade()[i]);
    }
  }
  return m;
}

bool in_box(const HVector& v, std::int64_t lo, std::int64_t hi) {
  for (const auto& x : v.entries) {
    if (!x.is_unit()) continue;
    for (std::size_t i = 0; i < x.grade().rank(); ++i) {
      if (x.grade()[i] < lo || x.grade()[i] > hi) return false;
    }
  }
  return true;
}

// Every scaling of every representative that can be a factor of a vector in
// the window. Each entry of such a vector is the top entry of some factor,
// so factors stay below the window but may reach under it by their spread.
std::vector<HVector> factor_scalings(const Hyperfield& h, const CircuitSignature& c,
                                     std::int64_t window) {
  std::set<HVector> out;
  for (const auto& x : c.representatives()) {
    const std::int64_t spread = 2 * max_abs_coord(x);
    const std::int64_t reach = h.is_graded() ? window + spread + max_abs_coord(x) : 0;
    for (const auto& s : h.elements_between(-reach, reach)) {
      if (!s.is_unit()) continue;
      HVector y = scale(h, x, s, c.side());
      if (in_box(y, -window - spread, window)) out.insert(std::move(y));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<HElement> pair_products(const Hyperfield& h, const HVector& left,
                                    const HVector& right) {
  std::vector<HElement> out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i].is_unit() && right[i].is_unit()) out.push_back(h.mul(left[i], right[i]));
  }
  return out;
}

bool orthogonal(const Hyperfield& h, const HVector& left, const HVector& right) {
  return h.sum_contains_zero(pair_products(h, left, right));
}

PerfectResult perfect_check(const Hyperfield& h, std::vector<HVector> vs,
                            std::vector<HVector> us, bool vectors_left, unsigned threads) {
  PerfectResult result;
  result.vectors = vs.size();
  result.covectors = us.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, vs.size()));
  // First failing index per worker keeps the witness independent of scheduling.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> found(workers);
  auto scan = [&](std::size_t t) {
    for (std::size_t i = t; i < vs.size(); i += workers) {
      for (std::size_t j = 0; j < us.size(); ++j) {
        const bool ok = vectors_left ? orthogonal(h, vs[i], us[j]) : orthogonal(h, us[j], vs[i]);
        if (!ok) {
          found[t] = std::make_pair(i, j);
          return;
        }
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(scan, t);
    for (auto& th : pool) th.join();
  }
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (const auto& f : found) {
    if (f && (!first || *f < *first)) first = f;
  }
  if (first) {
    result.perfect = false;
    result.witness = std::make_pair(vs[first->first], us[first->second]);
  }
  return result;
}

std::vector<SymbolicSet> pointwise_sum(const Hyperfield& h, const std::vector<SymbolicSet>& s,
                                       const HVector& x) {
  std::vector<SymbolicSet> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = h.add(s[i], x[i]);
  return out;
}

std::vector<SymbolicSet> singletons(const HVector& x) {
  std::vector<SymbolicSet> out;
  for (const auto& v : x.entries) out.push_back(SymbolicSet::singleton(v));
  return out;
}

std::optional<HVector> as_vector(const std::vector<SymbolicSet>& s) {
  HVector v;
  for (const auto& x : s) {
    if (!x.is_singleton()) return std::nullopt;
    v.entries.push_back(x.only());
  }
  return v;
}

bool contained_pointwise(const HVector& z, const std::vector<SymbolicSet>& s) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!s[i].contains(z[i])) return false;
  }
  return true;
}

}  // namespace

bool in_window(const HVector& v, std::int64_t window) {
  for (const auto& x : v.entries) {
    if (!x.is_unit()) continue;
    for (std::size_t i = 0; i < x.grade().rank(); ++i) {
      if (x.grade()[i] < -window || x.grade()[i] > window) return false;
    }
  }
  return true;
}

bool is_vector(const HMatroid& m, const HVector& v) {
  if (v.size() != m.ground().size()) throw DomainMismatch("vector length differs from ground set");
  for (const auto& x : v.entries) m.field().require(x);
  const bool left = vector_left(m.side());
  return std::all_of(m.cocircuits().representatives().begin(),
                     m.cocircuits().representatives().end(), [&](const HVector& y) {
                       return left ? orthogonal(m.field(), v, y) : orthogonal(m.field(), y, v);
                     });
}

bool is_covector(const HMatroid& m, const HVector& u) { return is_vector(m.dual(), u); }

std::vector<HVector> vectors_enumerate(const HMatroid& m, const EnumerationOptions& opt) {
  const Hyperfield& h = m.field();
  return enumerate_orthogonal(h, full_box(h, m.ground().size(), opt.window),
                              m.cocircuits().representatives(), vector_left(m.side()),
                              opt.threads, opt.budget);
}

std::vector<HVector> covectors_enumerate(const HMatroid& m, const EnumerationOptions& opt) {
  return vectors_enumerate(m.dual(), opt);
}

std::vector<HVector> vectors_generate(const HMatroid& m, std::int64_t window) {
  const Hyperfield& h = m.field();
  const std::size_t n = m.ground().size();
  const auto base = factor_scalings(h, m.circuits(), window);
  const std::size_t factors = std::max<std::size_t>(1, m.underlying().corank());
  std::set<HVector> out{zero_vector(n)};
  if (h.residue_kind() == ResidueKind::krasner || h.residue_kind() == ResidueKind::sign) {
    std::set<HVector> seen(base.begin(), base.end());
    std::set<HVector> level = seen;
    for (std::size_t k = 1; k < factors; ++k) {
      std::set<HVector> next;
      for (const auto& v : level) {
        for (const auto& x : base) {
          HVector w = compose(h, v, x);
          if (!seen.contains(w)) next.insert(std::move(w));
        }
      }
      if (next.empty()) break;
      seen.insert(next.begin(), next.end());
      level = std::move(next);
    }
    for (const auto& v : seen) {
      if (in_window(v, window)) out.insert(v);
    }
  } else {
    if (h.is_table()) throw UnsupportedOperation("vector generation needs a catalog hyperfield");
    std::set<std::vector<SymbolicSet>> seen;
    std::vector<std::vector<SymbolicSet>> level;
    for (const auto& x : base) {
      auto s = singletons(x);
      if (seen.insert(s).second) level.push_back(std::move(s));
    }
    for (std::size_t k = 1;; ++k) {
      for (const auto& s : level) {
        if (auto v = as_vector(s); v && in_window(*v, window)) out.insert(*v);
      }
      if (k == factors) break;
      std::vector<std::vector<SymbolicSet>> next;
      for (const auto& s : level) {
        for (const auto& x : base) {
          auto t = pointwise_sum(h, s, x);
          if (seen.insert(t).second) next.push_back(std::move(t));
        }
      }
      if (next.empty()) break;
      level = std::move(next);
    }
  }
  return {out.begin(), out.end()};
}

PerfectResult is_perfect(const HMatroid& m, const EnumerationOptions& opt) {
  return perfect_check(m.field(), vectors_enumerate(m, opt), covectors_enumerate(m, opt),
                       vector_left(m.side()), opt.threads);
}

PerfectResult is_perfect(const CircuitSignature& c, const CircuitSignature& d,
                         const EnumerationOptions& opt) {
  if (!(c.field() == d.field()) || !(c.ground() == d.ground())) {
    throw DomainMismatch("signatures over different hyperfields or ground sets");
  }
  const Hyperfield& h = c.field();
  const bool left = vector_left(c.side());
  const auto box = full_box(h, c.ground().size(), opt.window);
  auto vs = enumerate_orthogonal(h, box, d.representatives(), left, opt.threads, opt.budget);
  auto us = enumerate_orthogonal(h, box, c.representatives(), !left, opt.threads, opt.budget);
  return perfect_check(h, std::move(vs), std::move(us), left, opt.threads);
}

Report check_vector_axioms(const Hyperfield& h, std::span<const HVector> vectors,
                           const VectorAxiomOptions& opt) {
  Report report;
  if (vectors.empty()) {
    report.failures.push_back({"V0", "the set is empty", {}});
    return report;
  }
  const std::size_t n = vectors.front().size();
  std::set<HVector> all;
  for (const auto& v : vectors) {
    if (v.size() != n) throw DomainMismatch("vectors of different lengths");
    for (const auto& x : v.entries) h.require(x);
    all.insert(v);
  }
  if (!all.contains(zero_vector(n))) report.failures.push_back({"V0", "0 is missing", {}});

  std::vector<HVector> premises;
  for (const auto& v : all) {
    if (in_window(v, opt.premise_window)) premises.push_back(v);
  }

  const std::int64_t reach = h.is_graded() ? 2 * opt.window : 0;
  const auto scalars = h.elements_between(-reach, reach);
  for (const auto& v : premises) {
    for (const auto& s : scalars) {
      if (!s.is_unit()) continue;
      HVector w = scale(h, v, s, opt.side);
      if (in_window(w, opt.window) && !all.contains(w)) {
        report.failures.push_back({"V1", "scaling by " + to_string(s) + " is missing", {v, w}});
      }
    }
  }

  const bool field_residue = h.residue_kind() == ResidueKind::field || h.is_table();
  for (const auto& v : premises) {
    for (const auto& w : premises) {
      if (!h.is_table()) {
        HVector c = compose(h, v, w);
        const bool demanded = !field_residue || c.support() == (v.support() | w.support());
        if (demanded && !all.contains(c)) {
          report.failures.push_back({field_residue ? "V2'" : "V2", "composition is missing",
                                     {v, w, c}});
        }
      }
      if (field_residue) {
        HVector z = zero_vector(n);
        bool single = true;
        for (std::size_t f = 0; f < n && single; ++f) {
          const auto s = h.hyperadd(v[f], w[f]);
          if (s.is_singleton()) {
            z[f] = s.only();
          } else {
            single = false;
          }
        }
        if (single && !all.contains(z)) {
          report.failures.push_back({"V2''", "singleton hypersum is missing", {v, w, z}});
        }
      }
    }
  }

  std::map<Mask, std::vector<const HVector*>> by_support;
  for (const auto& z : all) by_support[z.support()].push_back(&z);
  for (std::size_t i = 0; i < premises.size(); ++i) {
    for (std::size_t j = i + 1; j < premises.size(); ++j) {
      const HVector& v = premises[i];
      const HVector& w = premises[j];
      for (std::size_t e = 0; e < n; ++e) {
        if (!v[e].is_unit() || !(w[e] == h.neg(v[e]))) continue;
        std::vector<SymbolicSet> targets(n);
        Mask forced = 0;
        Mask allowed = 0;
        for (std::size_t f = 0; f < n; ++f) {
          targets[f] = f == e ? SymbolicSet::singleton(h.zero()) : h.hyperadd(v[f], w[f]);
          if (!targets[f].contains_zero()) forced |= bit(f);
          if (!(targets[f] == SymbolicSet::singleton(h.zero()))) allowed |= bit(f);
        }
        bool found = false;
        for (const auto& [mask, members] : by_support) {
          if ((mask & forced) != forced || (mask & ~allowed)) continue;
          found = std::any_of(members.begin(), members.end(), [&](const HVector* z) {
            return contained_pointwise(*z, targets);
          });
          if (found) break;
        }
        if (!found) {
          report.failures.push_back(
              {"V3", "no elimination at coordinate " + std::to_string(e + 1), {v, w}});
        }
      }
    }
  }
  return report;
}

HMatroid reconstruct_from_vectors(const Hyperfield& h, const GroundSet& ground,
                                  std::span<const HVector> vectors, std::int64_t window,
                                  Side side) {
  std::set<HVector> given;
  std::vector<Mask> supports;
  for (const auto& v : vectors) {
    if (v.size() != ground.size()) throw DomainMismatch("vector length differs from ground set");
    given.insert(v);
    if (!v.is_zero()) supports.push_back(v.support());
  }
  const auto minimal = minimal_nonempty(supports);
  std::set<HVector> reps;
  for (const auto& v : given) {
    if (!v.is_zero() && std::binary_search(minimal.begin(), minimal.end(), v.support())) {
      reps.insert(normalize(h, v, side));
    }
  }
  if (reps.size() != minimal.size()) {
    throw TheoremViolation("minimal supports of the vector set carry more than one class");
  }
  HMatroid m = [&] {
    try {
      return HMatroid::from_circuits(h, ground, {reps.begin(), reps.end()}, side);
    } catch (const TheoremViolation&) {
      throw;
    } catch (const Error& err) {
      throw TheoremViolation(std::string("minimal vectors are not circuits: ") + err.what());
    }
  }();
  EnumerationOptions opt;
  opt.window = window;
  const auto back = vectors_enumerate(m, opt);
  if (!std::equal(back.begin(), back.end(), given.begin(), given.end())) {
    throw TheoremViolation("vectors of the reconstructed matroid differ from the input");
  }
  return m;
}

FarkasWitness farkas_witness(const HMatroid& m, const FarkasPartition& p, std::int64_t window,
                             bool weak) {
  const Hyperfield& h = m.field();
  const std::size_t n = m.ground().size();
  const Mask full = m.ground().full();
  if ((p.red & p.green) || (p.red & p.blue) || (p.green & p.blue) ||
      (p.red | p.green | p.blue) != full) {
    throw InvalidInput("red, green and blue must partition the ground set");
  }

  // Cocircuit side: scaling only shifts grades uniformly, so the conditions
  // are read off the representative directly.
  const Side dside = m.cocircuits().side();
  for (const auto& y : m.cocircuits().representatives()) {
    const Mask green = y.support() & p.green;
    if (green == 0) continue;
    std::optional<Grade> top_green;
    std::vector<HElement> gs;
    for (auto e : elements_of(green)) {
      gs.push_back(y[e]);
      if (!top_green || *top_green < y[e].grade()) top_green = y[e].grade();
    }
    bool ok = true;
    for (auto e : elements_of(y.support() & p.red)) {
      if (weak ? !(y[e].grade() < *top_green) : *top_green < y[e].grade()) ok = false;
    }
    if (!ok || h.sum_contains_zero(gs)) continue;
    return {FarkasWitness::Kind::cocircuit,
            scale(h, y, h.graded_one(Grade::zero(h.rank()) - *top_green), dside)};
  }

  Candidates cands(n);
  const auto box = h.elements(window);
  for (std::size_t e = 0; e < n; ++e) {
    if (has(p.green, e)) {
      cands[e] = {h.one()};
    } else if (has(p.blue, e)) {
      cands[e] = {h.zero()};
    } else {
      for (const auto& x : box) {
        const auto g = Grade::zero(h.rank());
        if (x.is_zero() || x.grade() < g || (weak && x.grade() == g)) cands[e].push_back(x);
      }
    }
  }
  auto found = enumerate_orthogonal(h, cands, m.cocircuits().representatives(),
                                    vector_left(m.side()), 1, kDefaultBudget, 1);
  if (!found.empty()) return {FarkasWitness::Kind::vector, std::move(found.front())};
  throw TheoremViolation("neither a vector nor a cocircuit witness exists in window " +
                         std::to_string(window));
}

HVector eliminate_vectors(const HMatroid& m, std::span<const HVector> vs,
                          std::optional<std::size_t> e, std::int64_t window) {
  const Hyperfield& h = m.field();
  const std::size_t n = m.ground().size();
  for (const auto& v : vs) {
    if (!is_vector(m, v)) throw InvalidInput(to_string(v) + " is not a vector");
  }
  std::vector<SymbolicSet> sums(n);
  for (std::size_t f = 0; f < n; ++f) {
    std::vector<HElement> column;
    for (const auto& v : vs) column.push_back(v[f]);
    sums[f] = h.hyperadd_multi(column);
  }
  if (e) {
    if (*e >= n) throw UnknownElement("coordinate " + std::to_string(*e + 1));
    if (!sums[*e].contains_zero()) {
      throw InvalidInput("0 is not in the hypersum at coordinate " + m.ground().label(*e));
    }
  }
  Candidates cands(n);
  const auto box = h.elements(window);
  for (std::size_t f = 0; f < n; ++f) {
    if (e && f == *e) {
      cands[f] = {h.zero()};
    } else if (sums[f].is_singleton()) {
      cands[f] = {sums[f].only()};
    } else {
      for (const auto& x : box) {
        if (sums[f].contains(x)) cands[f].push_back(x);
      }
      for (const auto& x : sums[f].finite()) {
        if (std::find(cands[f].begin(), cands[f].end(), x) == cands[f].end()) {
          cands[f].push_back(x);
        }
      }
    }
  }
  auto found = enumerate_orthogonal(h, cands, m.cocircuits().representatives(),
                                    vector_left(m.side()), 1, kDefaultBudget, 1);
  if (found.empty()) {
    throw TheoremViolation("no vector in the hypersum within window " + std::to_string(window));
  }
  return found.front();
}

std::vector<HVector> decompose_vector(const HMatroid& m, const HVector& v) {
  const Hyperfield& h = m.field();
  if (h.is_table() || h.residue_kind() == ResidueKind::krasner) {
    throw UnsupportedOperation("decomposition needs a sign or field residue");
  }
  if (!is_vector(m, v)) throw InvalidInput(to_string(v) + " is not a vector");
  if (v.is_zero()) return {};
  const Mask vs = v.support();
  const Side side = m.side();

  std::set<HVector> pieces;
  for (const auto& x : m.circuits().representatives()) {
    if (x.support() & ~vs) continue;
    for (auto f : elements_of(x.support())) {
      const Grade shift = v[f].grade() - x[f].grade();
      for (const auto& s : h.units_at(shift)) {
        HVector y = scale(h, x, s, side);
        bool below = true;
        for (auto g : elements_of(y.support())) {
          if (v[g].grade() < y[g].grade()) below = false;
        }
        if (below) pieces.insert(std::move(y));
      }
    }
  }
  const std::vector<HVector> cands(pieces.begin(), pieces.end());

  struct Node {
    std::vector<SymbolicSet> sum;
    std::size_t parent;
    std::size_t piece;
  };
  std::vector<Node> nodes;
  std::set<std::vector<SymbolicSet>> seen;
  std::vector<std::size_t> level;
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  const std::size_t depth = popcount(vs);
  for (std::size_t k = 1; k <= depth; ++k) {
    std::vector<std::size_t> next;
    auto expand = [&](std::size_t parent) -> std::optional<std::size_t> {
      for (std::size_t i = 0; i < cands.size(); ++i) {
        auto sum = parent == none ? singletons(cands[i]) : pointwise_sum(h, nodes[parent].sum, cands[i]);
        if (!seen.insert(sum).second) continue;
        nodes.push_back({std::move(sum), parent, i});
        const std::size_t id = nodes.size() - 1;
        if (auto w = as_vector(nodes[id].sum); w && *w == v) return id;
        next.push_back(id);
      }
      return std::nullopt;
    };
    std::optional<std::size_t> hit;
    if (k == 1) {
      hit = expand(none);
    } else {
      for (auto p : level) {
        if ((hit = expand(p))) break;
      }
    }
    if (hit) {
      std::vector<HVector> out;
      for (std::size_t id = *hit; id != none; id = nodes[id].parent) {
        out.push_back(cands[nodes[id].piece]);
      }
      std::reverse(out.begin(), out.end());
      return out;
    }
    level = std::move(next);
  }
  throw TheoremViolation(to_string(v) + " is not a singleton hypersum of circuits");
}

std::optional<HElement> extension_value(const HMatroid& m, const HVector& w, std::size_t e) {
  const Hyperfield& h = m.field();
  if (e > w.size() || w.size() + 1 != m.ground().size()) {
    throw DomainMismatch("vector does not fit the ground set minus one element");
  }
  const HVector base = insert(w, e, h.zero());
  const bool left = vector_left(m.side());
  std::optional<SymbolicSet> allowed;
  for (const auto& y : m.cocircuits().representatives()) {
    const auto prods = left ? pair_products(h, base, y) : pair_products(h, y, base);
    const SymbolicSet s = h.hyperadd_multi(prods);
    if (!y[e].is_unit()) {
      if (!s.contains_zero()) return std::nullopt;
      continue;
    }
    // x·Y_e must lie in -S (or Y_e·x for the right-hand convention).
    const SymbolicSet options =
        left ? h.scale_right(h.negate(s), h.inv(y[e])) : h.scale_left(h.inv(y[e]), h.negate(s));
    allowed = allowed ? h.canonical(allowed->intersect(options)) : options;
    if (allowed->empty()) return std::nullopt;
  }
  if (!allowed) return h.zero();
  return h.pick(*allowed);
}

}  // namespace hypermat
