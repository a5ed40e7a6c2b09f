#include "hypermat/catalog.hpp"

#include <algorithm>

#include "hypermat/errors.hpp"

namespace hypermat {

ClassicalMatroid three_circuit_rank2() {
  return ClassicalMatroid::from_circuits(GroundSet::numbered(4),
                                         {bit(0) | bit(1), bit(0) | bit(2) | bit(3),
                                          bit(1) | bit(2) | bit(3)});
}

std::vector<HMatroid> enumerate_signatures(const Hyperfield& h, const ClassicalMatroid& n,
                                           std::span<const HElement> entries, Side side) {
  for (const auto& x : entries) {
    h.require(x);
    if (x.is_zero()) throw InvalidInput("signature entries must be units");
  }
  const std::size_t size = n.ground().size();
  // Per circuit, every normalized vector on its support.
  std::vector<std::vector<HVector>> choices;
  for (Mask c : n.circuits()) {
    const auto elems = elements_of(c);
    std::vector<HVector> options;
    std::vector<std::size_t> idx(elems.size(), 0);
    for (;;) {
      HVector v = zero_vector(size);
      v[elems[0]] = h.one();
      for (std::size_t k = 1; k < elems.size(); ++k) v[elems[k]] = entries[idx[k]];
      options.push_back(std::move(v));
      std::size_t k = 1;
      while (k < elems.size() && ++idx[k] == entries.size()) idx[k++] = 0;
      if (k >= elems.size()) break;
    }
    choices.push_back(std::move(options));
  }
  std::vector<HMatroid> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    std::vector<HVector> circuits;
    for (std::size_t i = 0; i < choices.size(); ++i) circuits.push_back(choices[i][pick[i]]);
    try {
      out.push_back(HMatroid::from_circuits(h, n.ground(), std::move(circuits), side));
    } catch (const NotAnHMatroid&) {
    } catch (const InvalidCircuits&) {
    }
    std::size_t i = 0;
    while (i < choices.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == choices.size()) break;
  }
  return out;
}

std::vector<Instance> signature_family(const Hyperfield& h, std::span<const HElement> entries) {
  const std::pair<const char*, ClassicalMatroid> bases[] = {
      {"U23", uniform_matroid(2, 3)},
      {"U24", uniform_matroid(2, 4)},
      {"U13", uniform_matroid(1, 3)},
      {"P4", three_circuit_rank2()},
  };
  std::vector<Instance> primal;
  for (const auto& [name, n] : bases) {
    const auto ms = enumerate_signatures(h, n, entries);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      primal.push_back({h.name() + "/" + name + "#" + std::to_string(i), ms[i]});
    }
  }
  std::vector<Instance> out = primal;
  for (const auto& inst : primal) out.push_back({inst.name + "*", inst.matroid.dual()});
  return out;
}

std::vector<HElement> default_entries(const Hyperfield& h) {
  std::vector<HElement> out;
  const auto grades = h.is_graded()
                          ? std::vector<Grade>{Grade::zero(h.rank()), Grade::zero(h.rank()).successor()}
                          : std::vector<Grade>{Grade::zero(0)};
  for (const auto& g : grades) {
    for (const auto& x : h.units_at(g)) out.push_back(x);
  }
  return out;
}

}  // namespace hypermat
