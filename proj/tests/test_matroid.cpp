#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "hypermat/errors.hpp"
#include "hypermat/matroid.hpp"

using namespace hypermat;

namespace {

// Every nonempty family of equal-size subsets of {0..n-1} with basis
// exchange, as sorted basis lists.
std::vector<std::vector<Mask>> basis_families(std::size_t n) {
  std::vector<std::vector<Mask>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Mask> ksets;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) == k) ksets.push_back(s);
    }
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << ksets.size()); ++pick) {
      std::vector<Mask> fam;
      for (std::size_t i = 0; i < ksets.size(); ++i) {
        if ((pick >> i) & 1) fam.push_back(ksets[i]);
      }
      bool ok = true;
      for (Mask a : fam) {
        for (Mask b : fam) {
          for (std::size_t x = 0; ok && x < n; ++x) {
            if (!has(a & ~b, x)) continue;
            bool found = false;
            for (std::size_t y = 0; y < n && !found; ++y) {
              if (has(b & ~a, y)) {
                found = std::binary_search(fam.begin(), fam.end(), (a & ~bit(x)) | bit(y));
              }
            }
            ok = found;
          }
        }
      }
      if (ok) out.push_back(fam);
    }
  }
  return out;
}

// Minimal nonempty sets meeting every basis.
std::vector<Mask> cocircuit_oracle(const ClassicalMatroid& m) {
  const std::size_t n = m.ground().size();
  std::vector<Mask> hitting;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (std::all_of(m.bases().begin(), m.bases().end(), [&](Mask b) { return (b & s) != 0; })) {
      hitting.push_back(s);
    }
  }
  return minimal_nonempty(hitting);
}

std::size_t rank_oracle(const ClassicalMatroid& m, Mask s) {
  std::size_t r = 0;
  for (Mask b : m.bases()) r = std::max<std::size_t>(r, std::popcount(b & s));
  return r;
}

std::vector<ClassicalMatroid> small_matroids(std::size_t max_n) {
  std::vector<ClassicalMatroid> all;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (auto& m : enumerate_matroids(n)) all.push_back(std::move(m));
  }
  return all;
}

Mask set(std::initializer_list<std::size_t> xs) {
  Mask m = 0;
  for (auto x : xs) m |= bit(x);
  return m;
}

}  // namespace

TEST_CASE("enumeration matches the basis-exchange oracle") {
  const std::size_t expected[] = {1, 2, 5, 16, 68, 406};
  for (std::size_t n = 0; n <= 5; ++n) {
    CAPTURE(n);
    const auto ms = enumerate_matroids(n);
    CHECK(ms.size() == expected[n]);
    auto oracle = basis_families(n);
    std::vector<std::vector<Mask>> got;
    for (const auto& m : ms) got.push_back(m.bases());
    std::sort(oracle.begin(), oracle.end());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle);
  }
}

TEST_CASE("from_circuits examples") {
  const auto u23 = ClassicalMatroid::from_circuits(GroundSet::numbered(3), {set({0, 1, 2})});
  CHECK(u23.rank() == 2);
  CHECK(u23 == uniform_matroid(2, 3));
  CHECK_THROWS_AS(ClassicalMatroid::from_circuits(GroundSet::numbered(2), {set({0}), set({0, 1})}),
                  InvalidCircuits);
  CHECK_THROWS_AS(ClassicalMatroid::from_circuits(GroundSet::numbered(2), {0}), InvalidCircuits);
  // {0,1} and {1,2} without {0,2} fails elimination.
  CHECK_THROWS_AS(
      ClassicalMatroid::from_circuits(GroundSet::numbered(3), {set({0, 1}), set({1, 2})}),
      InvalidCircuits);
  std::vector<Mask> triples;
  for (Mask s = 0; s < 16; ++s) {
    if (std::popcount(s) == 3) triples.push_back(s);
  }
  const auto u24 = ClassicalMatroid::from_circuits(GroundSet::numbered(4), triples);
  CHECK(u24.rank() == 2);
  CHECK(u24.bases().size() == 6);
}

TEST_CASE("dual, delete and contract examples") {
  CHECK(uniform_matroid(2, 3).dual() == uniform_matroid(1, 3));
  const auto c = uniform_matroid(2, 3).contract_element(0);
  CHECK(c.circuits() == std::vector<Mask>{set({0, 1})});
  CHECK(c.ground().label(0) == "2");
  const auto d = uniform_matroid(2, 3).delete_element(0);
  CHECK(d.circuits().empty());
  CHECK(d.rank() == 2);
}

TEST_CASE("structural identities on all matroids up to five elements") {
  for (const auto& m : small_matroids(5)) {
    const std::size_t n = m.ground().size();
    REQUIRE(ClassicalMatroid::from_circuits(m.ground(), m.circuits()) == m);
    REQUIRE(m.dual().dual() == m);
    REQUIRE(m.cocircuits() == cocircuit_oracle(m));
    REQUIRE(m.dual().circuits() == m.cocircuits());
    std::vector<Mask> complements;
    for (Mask b : m.bases()) complements.push_back(~b & ((Mask{1} << n) - 1));
    std::sort(complements.begin(), complements.end());
    REQUIRE(m.dual().bases() == complements);
    for (Mask s = 0; s < (Mask{1} << n); ++s) REQUIRE(m.rank_of(s) == rank_oracle(m, s));
    for (std::size_t e = 0; e < n; ++e) {
      REQUIRE(m.contract_element(e).dual() == m.dual().delete_element(e));
      REQUIRE(m.delete_element(e).dual() == m.dual().contract_element(e));
      REQUIRE(m.is_loop(e) == (rank_oracle(m, bit(e)) == 0));
      REQUIRE(m.is_coloop(e) == m.dual().is_loop(e));
    }
  }
}

TEST_CASE("minty examples") {
  const auto u23 = uniform_matroid(2, 3);
  CHECK(minty_check(u23.ground(), u23.circuits(), u23.cocircuits()).ok);

  const std::vector<Mask> c{set({0, 1})};
  const std::vector<Mask> d{set({1, 2})};
  const auto bad = minty_check(GroundSet::numbered(3), c, d);
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.witness->axiom == "M1");
  CHECK(bad.witness->first == set({0, 1}));
  CHECK(bad.witness->second == set({1, 2}));

  const std::vector<Mask> none;
  const std::vector<Mask> singletons{set({0}), set({1}), set({2})};
  CHECK(minty_check(GroundSet::numbered(3), none, singletons).ok);
}

TEST_CASE("minty holds for every matroid and fails without a cocircuit") {
  for (const auto& m : small_matroids(5)) {
    const auto d = m.cocircuits();
    REQUIRE(minty_check(m.ground(), m.circuits(), d).ok);
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto fewer = d;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      REQUIRE_FALSE(minty_check(m.ground(), m.circuits(), fewer).ok);
    }
  }
}

TEST_CASE("minimalize") {
  const auto u23 = uniform_matroid(2, 3);
  CHECK(minty_minimalize(u23.ground(), u23.circuits(), u23.cocircuits()) == u23);

  // Circuits and cocircuits padded with unions of their members.
  auto with_unions = [](std::vector<Mask> f) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) f.push_back(f[i] | f[j]);
    }
    return f;
  };
  for (const auto& m : small_matroids(4)) {
    const auto c = with_unions(m.circuits());
    const auto d = with_unions(m.cocircuits());
    REQUIRE(minty_minimalize(m.ground(), c, d) == m);
  }

  const std::vector<Mask> c{set({0, 1})};
  const std::vector<Mask> d{set({1, 2})};
  CHECK_THROWS_AS(minty_minimalize(GroundSet::numbered(3), c, d), InvalidPair);
}

TEST_CASE("minimal_nonempty") {
  const std::vector<Mask> f{set({0, 1}), 0, set({0, 1, 2}), set({2}), set({0, 1}), set({1, 2})};
  CHECK(minimal_nonempty(f) == std::vector<Mask>{set({0, 1}), set({2})});
}

TEST_CASE("ground sets") {
  const GroundSet g({"a", "b", "c"});
  CHECK(g.index_of("b") == 1);
  CHECK_THROWS_AS(g.index_of("z"), UnknownElement);
  CHECK(g.without(0).label(0) == "b");
  CHECK_THROWS(GroundSet({"a", "a"}));
}
