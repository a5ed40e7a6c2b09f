#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypermat/catalog.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/hmatroid.hpp"
#include "hypermat/homomorphism.hpp"
#include "oracles.hpp"

using namespace hypermat;
using oracle::Poly;

namespace {

const Hyperfield kSign = Hyperfield::sign();
const Hyperfield kTrop = Hyperfield::tropical(1);
const Hyperfield kStr = Hyperfield::stringent(ResidueKind::sign, 1);

HVector signs(std::initializer_list<int> xs) {
  HVector v;
  for (int x : xs) v.entries.push_back(x == 0 ? kSign.zero() : kSign.make(x));
  return v;
}

// Tropical vector from grades; INT64_MIN marks a zero entry.
constexpr std::int64_t kNone = INT64_MIN;
HVector grades(std::initializer_list<std::int64_t> gs) {
  HVector v;
  for (auto g : gs) v.entries.push_back(g == kNone ? kTrop.zero() : kTrop.make(1, Grade{g}));
  return v;
}

CircuitSignature sig(const Hyperfield& h, std::vector<HVector> vs, Side side = Side::left) {
  const std::size_t n = vs.empty() ? 0 : vs.front().size();
  return CircuitSignature(h, GroundSet::numbered(n), std::move(vs), side);
}

std::vector<Instance> families() {
  std::vector<Instance> out;
  for (const auto& h : {Hyperfield::sign(), Hyperfield::field(3), Hyperfield::tropical(1),
                        Hyperfield::stringent(ResidueKind::sign, 1)}) {
    const auto entries = default_entries(h);
    for (auto& inst : signature_family(h, entries)) out.push_back(std::move(inst));
  }
  return out;
}

// 2 x n matrices [I | B] with B drawn from the given entries.
template <class T>
std::vector<oracle::Matrix<T>> identity_prefixed(std::size_t n, const std::vector<T>& pool,
                                                 std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<oracle::Matrix<T>> out;
  for (std::size_t k = 0; k < count; ++k) {
    oracle::Matrix<T> a(2, std::vector<T>(n, T(0L)));
    a[0][0] = T(1L);
    a[1][1] = T(1L);
    for (std::size_t i = 2; i < n; ++i) {
      a[0][i] = pool[pick(rng)];
      a[1][i] = pool[pick(rng)];
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("pairing and perp") {
  CHECK(perp(kSign, signs({1, 0, 0}), signs({0, 1, 1})));
  CHECK(perp(kSign, signs({1, 1, 0}), signs({1, -1, 0})));
  CHECK_FALSE(perp(kSign, signs({1, 1, 0}), signs({1, 1, 0})));
  CHECK(perp(kTrop, grades({2, 2, 1}), grades({0, 0, kNone})));
  CHECK_FALSE(perp(kTrop, grades({2, 1, 1}), grades({0, 0, kNone})));
  CHECK(pairing(kSign, signs({1, 0}), signs({0, 1})) == SymbolicSet::singleton(kSign.zero()));
  CHECK_THROWS_AS(pairing(kSign, signs({1, 0}), signs({1})), DomainMismatch);
}

TEST_CASE("dual signature examples") {
  const auto m = HMatroid::from_circuits(kSign, GroundSet::numbered(3), {signs({1, 1, 1})});
  CHECK(m.cocircuits() ==
        sig(kSign, {signs({1, -1, 0}), signs({1, 0, -1}), signs({0, 1, -1})}, Side::right));

  const auto t = HMatroid::from_circuits(kTrop, GroundSet::numbered(3), {grades({2, 2, 1})});
  const HVector* y13 = t.cocircuits().find(0b101);
  REQUIRE(y13);
  CHECK((*y13)[2].grade()[0] == (*y13)[0].grade()[0] + 1);

  const auto k = Hyperfield::krasner();
  for (const auto& n : enumerate_matroids(4)) {
    std::vector<HVector> cs;
    for (Mask c : n.circuits()) {
      HVector v = zero_vector(4);
      for (auto e : elements_of(c)) v[e] = k.one();
      cs.push_back(v);
    }
    const auto km = HMatroid::from_circuits(k, n.ground(), cs);
    auto got = km.cocircuits().supports();
    std::sort(got.begin(), got.end());
    auto want = n.cocircuits();
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("perp_k examples") {
  for (const auto& inst : families()) {
    const auto& m = inst.matroid;
    REQUIRE(perp_k(m.circuits(), m.cocircuits(), 3).ok);
    REQUIRE(perp_k(m.circuits(), m.cocircuits(), std::nullopt).ok);
  }
  const auto c = sig(kSign, {signs({1, 1, 0})});
  const auto d = sig(kSign, {signs({0, 0, 1})}, Side::right);
  CHECK(perp_k(c, d, 0).ok);
  const auto bad = perp_k(c, sig(kSign, {signs({1, 1, 0})}, Side::right), std::nullopt);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness);
}

TEST_CASE("circuit axiom checks") {
  CHECK(check_circuit_axioms(sig(kSign, {signs({1, 1, 1})})).ok());
  CHECK(check_circuit_axioms(CircuitSignature(kSign, GroundSet::numbered(3), {}, Side::left)).ok());
  const auto shared = check_circuit_axioms(sig(kSign, {signs({1, 1, 1}), signs({1, -1, 1})}));
  REQUIRE_FALSE(shared.ok());
  CHECK(shared.failures.front().check == "C2");
  CHECK_THROWS_AS(sig(kSign, {signs({0, 0, 0})}), InvalidCircuits);

  // Every triple of U(2,4) signed (+,+,+): eliminating 1 between {1,2,3}
  // and -{1,2,4} needs opposite signs on 3 and 4, which no circuit has.
  const auto u24 = uniform_matroid(2, 4);
  std::vector<HVector> plus;
  for (Mask s : u24.circuits()) {
    HVector v = zero_vector(4);
    for (auto e : elements_of(s)) v[e] = kSign.one();
    plus.push_back(v);
  }
  const auto p = sig(kSign, plus);
  CHECK_FALSE(check_circuit_axioms(p).ok());
  CHECK_FALSE(check_c3prime(p).ok());
  CHECK_THROWS_AS(HMatroid::from_signature(p), NotAnHMatroid);
}

TEST_CASE("tropical Pluecker vectors on U(2,4)") {
  // p over the six pairs; circuits X_C(i) = p(C - i). The circuits form a
  // valuated matroid exactly when the three-term relation has a double max.
  const std::vector<Mask> pairs{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  std::size_t plucker = 0;
  std::size_t rejected = 0;
  const auto u24 = uniform_matroid(2, 4);
  std::vector<std::int64_t> p(6, 0);
  for (int code = 0; code < 729; ++code) {
    int c = code;
    for (auto& x : p) {
      x = c % 3;
      c /= 3;
    }
    auto val = [&](Mask s) {
      return p[std::find(pairs.begin(), pairs.end(), s) - pairs.begin()];
    };
    std::vector<std::int64_t> terms{val(0b0011) + val(0b1100), val(0b0101) + val(0b1010),
                                    val(0b1001) + val(0b0110)};
    std::sort(terms.begin(), terms.end());
    const bool relation = terms[1] == terms[2];

    std::vector<HVector> circuits;
    for (Mask s : u24.circuits()) {
      HVector v = zero_vector(4);
      for (auto e : elements_of(s)) v[e] = kTrop.make(1, Grade{val(s & ~bit(e))});
      circuits.push_back(v);
    }
    const auto cs = sig(kTrop, circuits);
    CAPTURE(code);
    REQUIRE(check_circuit_axioms(cs).ok() == relation);
    REQUIRE(check_c3prime(cs).ok() == relation);
    if (!relation) {
      REQUIRE_THROWS_AS(HMatroid::from_signature(cs), NotAnHMatroid);
      ++rejected;
      continue;
    }
    ++plucker;
    const auto m = HMatroid::from_signature(cs);
    // Cocircuits Y_h(i) = p({h, i}).
    std::vector<HVector> cocircuits;
    for (std::size_t h = 0; h < 4; ++h) {
      HVector y = zero_vector(4);
      for (std::size_t i = 0; i < 4; ++i) {
        if (i != h) y[i] = kTrop.make(1, Grade{val(bit(h) | bit(i))});
      }
      cocircuits.push_back(y);
    }
    REQUIRE(m.cocircuits() == sig(kTrop, cocircuits, Side::right));
  }
  CHECK(plucker > 0);
  CHECK(rejected > 0);
}

TEST_CASE("GF(p) matroids match linear algebra") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto h = Hyperfield::field(p);
    std::vector<long> pool;
    for (long x = 0; x < static_cast<long>(p); ++x) pool.push_back(x);
    for (std::size_t n : {3u, 4u, 5u}) {
      for (const auto& a : identity_prefixed<long>(n, pool, 12, p * 10 + n)) {
        const oracle::ModP sp{p, a};
        const auto ker = oracle::keep_minimal(sp.to_h(h, sp.kernel()));
        const auto row = oracle::keep_minimal(sp.to_h(h, sp.row_space()));
        const auto ground = GroundSet::numbered(n);
        const auto m = HMatroid::from_circuits(h, ground, ker);
        REQUIRE(m.cocircuits() == CircuitSignature(h, ground, row, Side::right));
        REQUIRE(m.dual().dual() == m);

        // Deleting a column, and rescaling columns by rho, on the matrix side.
        for (std::size_t e = 0; e < n; ++e) {
          oracle::Matrix<long> del = a;
          for (auto& r : del) r.erase(r.begin() + static_cast<std::ptrdiff_t>(e));
          const oracle::ModP sd{p, del};
          const auto kd = oracle::keep_minimal(sd.to_h(h, sd.kernel()));
          REQUIRE(hm_delete(m, e).circuits() ==
                  CircuitSignature(h, ground.without(e), kd, Side::left));
        }
        if (p > 2) {
          oracle::Matrix<long> scaled = a;
          HVector rho = zero_vector(n);
          for (std::size_t i = 0; i < n; ++i) {
            const long r = static_cast<long>(1 + i % (p - 1));
            rho[i] = h.make(r);
            for (auto& row : scaled) row[i] = row[i] * r % p;
          }
          const oracle::ModP ss{p, scaled};
          const auto ks = oracle::keep_minimal(ss.to_h(h, ss.kernel()));
          REQUIRE(hm_rescale(m, rho).circuits() == CircuitSignature(h, ground, ks, Side::left));
        }
      }
    }
  }
}

TEST_CASE("realizable oriented matroids") {
  std::vector<long> pool{-2, -1, 0, 1, 2, 3};
  for (std::size_t n : {3u, 4u, 5u}) {
    for (const auto& a : identity_prefixed<long>(n, pool, 40, 7 + n)) {
      auto sgn = [](long x) { return x == 0 ? kSign.zero() : kSign.make(x > 0 ? 1 : -1); };
      const auto c = oracle::rank2_circuits(a, sgn);
      const auto d = oracle::rank2_cocircuits(a, sgn);
      const auto ground = GroundSet::numbered(n);
      const auto m = HMatroid::from_circuits(kSign, ground, c);
      REQUIRE(m.cocircuits() == CircuitSignature(kSign, ground, d, Side::right));
      REQUIRE(check_c3prime(m.circuits()).ok());
    }
  }
}

TEST_CASE("Stringent(Sign,1) matroids from polynomial matrices") {
  const std::vector<Poly> pool{Poly(0L),
                               Poly(1L),
                               Poly(-1L),
                               Poly::mono(1, 1),
                               Poly::mono(-1, 1),
                               Poly::mono(2, 2),
                               Poly(1L) + Poly::mono(1, 1),
                               Poly(1L) - Poly::mono(1, 2),
                               Poly::mono(1, 1) - Poly(3L)};
  std::size_t count = 0;
  for (std::size_t n : {3u, 4u, 5u}) {
    for (const auto& a : identity_prefixed<Poly>(n, pool, 30, 100 + n)) {
      auto to_s = [](const Poly& x) { return oracle::lead(kStr, x); };
      auto to_t = [](const Poly& x) { return oracle::lead(kTrop, x); };
      const auto ground = GroundSet::numbered(n);
      const auto m = HMatroid::from_circuits(kStr, ground, oracle::rank2_circuits(a, to_s));
      REQUIRE(m.cocircuits() ==
              CircuitSignature(kStr, ground, oracle::rank2_cocircuits(a, to_s), Side::right));
      REQUIRE(check_c3prime(m.circuits()).ok());
      REQUIRE(perp_k(m.circuits(), m.cocircuits(), std::nullopt).ok);

      // The valuation image is the tropical matroid of the same matrix.
      const auto t = push_forward(Homomorphism::valuation(kStr), m);
      REQUIRE(t.circuits() ==
              CircuitSignature(kTrop, ground, oracle::rank2_circuits(a, to_t), Side::left));
      REQUIRE(t.cocircuits() ==
              CircuitSignature(kTrop, ground, oracle::rank2_cocircuits(a, to_t), Side::right));
      ++count;
    }
  }
  CHECK(count == 90);
}

TEST_CASE("minors, duality and rescaling on the signature families") {
  for (const auto& inst : families()) {
    CAPTURE(inst.name);
    const auto& m = inst.matroid;
    const auto& h = m.field();
    REQUIRE(m.dual().dual() == m);
    for (std::size_t e = 0; e < m.ground().size(); ++e) {
      REQUIRE(hm_contract(m, e).dual() == hm_delete(m.dual(), e));
      REQUIRE(hm_delete(m, e).dual() == hm_contract(m.dual(), e));
    }
    HVector ones = zero_vector(m.ground().size());
    for (auto& x : ones.entries) x = h.one();
    REQUIRE(hm_rescale(m, ones) == m);
    REQUIRE(push_forward(Homomorphism::identity(h), m) == m);
    // Rescaling keeps circuits and cocircuits orthogonal.
    HVector rho = ones;
    const auto units = default_entries(h);
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = units[(i + 1) % units.size()];
    const auto r = hm_rescale(m, rho);
    REQUIRE(perp_k(r.circuits(), r.cocircuits(), std::nullopt).ok);
    REQUIRE(r.underlying() == m.underlying());
  }
}

TEST_CASE("rescale example") {
  const auto t = HMatroid::from_circuits(kTrop, GroundSet::numbered(3), {grades({2, 2, 1})});
  const auto r = hm_rescale(t, grades({1, 0, 0}));
  CHECK(r.circuits() == sig(kTrop, {grades({1, 2, 1})}));
  CHECK_THROWS_AS(hm_rescale(t, grades({1, kNone, 0})), InvalidInput);
}

TEST_CASE("uparrow") {
  CHECK(uparrow(kTrop, grades({2, 2, 1})).support() == 0b011);
  CHECK(uparrow(kTrop, grades({3, 3, 3})) == grades({3, 3, 3}));
  CHECK(uparrow(kTrop, zero_vector(3)) == zero_vector(3));
}

TEST_CASE("residue examples") {
  const auto t = HMatroid::from_circuits(kTrop, GroundSet::numbered(3), {grades({2, 2, 1})});
  const auto r = residue_matroid(t);
  CHECK(r.field() == Hyperfield::krasner());
  CHECK(r.underlying().circuits() == std::vector<Mask>{0b011});
  CHECK(r.underlying().is_coloop(2));
  auto co = r.cocircuits().supports();
  std::sort(co.begin(), co.end());
  CHECK(co == std::vector<Mask>{0b011, 0b100});

  auto st = [](int s, std::int64_t g) { return kStr.make(s, Grade{g}); };
  const auto so = HMatroid::from_circuits(kStr, GroundSet::numbered(3),
                                          {HVector{{st(1, 2), st(1, 2), st(1, 1)}}});
  const auto rs = residue_matroid(so);
  CHECK(rs.field() == kSign);
  CHECK(rs.circuits() == sig(kSign, {signs({1, 1, 0})}));

  // Flat grades: the residue keeps the signs.
  const auto flat = HMatroid::from_circuits(kStr, GroundSet::numbered(3),
                                            {HVector{{st(1, 0), st(-1, 0), st(1, 0)}}});
  CHECK(residue_matroid(flat).circuits() == sig(kSign, {signs({1, -1, 1})}));
}

TEST_CASE("residue of the valuation image") {
  for (const auto& inst : families()) {
    const auto& m = inst.matroid;
    if (m.field().rank() == 0) continue;
    CAPTURE(inst.name);
    const auto r = residue_matroid(m);
    const auto v = push_forward(Homomorphism::valuation(m.field()), m);
    REQUIRE(residue_matroid(v).underlying() == r.underlying());
    REQUIRE(minty_check(r.ground(), r.underlying().circuits(), r.underlying().cocircuits()).ok);
  }
}

TEST_CASE("push-forward along the quadratic character") {
  const auto f7 = Hyperfield::field(7);
  const auto f = Homomorphism::sign(f7);
  const auto m = HMatroid::from_circuits(
      f7, GroundSet::numbered(3), {HVector{{f7.make(1), f7.make(1), f7.make(5)}}});
  CHECK(push_forward(f, m).circuits() == sig(kSign, {signs({1, 1, -1})}));

  // The character is not additive, so images of larger GF(7) matroids can
  // fail to be oriented matroids; those are rejected, the rest validate.
  std::vector<long> pool{1, 2, 3, 4, 5, 6};
  std::size_t ok = 0;
  std::size_t rejected = 0;
  for (const auto& a : identity_prefixed<long>(4, pool, 60, 77)) {
    const oracle::ModP sp{7, a};
    const auto src = HMatroid::from_circuits(f7, GroundSet::numbered(4),
                                             oracle::keep_minimal(sp.to_h(f7, sp.kernel())));
    try {
      const auto img = push_forward(f, src);
      REQUIRE(check_circuit_axioms(img.circuits()).ok());
      ++ok;
    } catch (const NotAnHMatroid&) {
      ++rejected;
    }
  }
  MESSAGE("sign images: " << ok << " valid, " << rejected << " rejected");
  CHECK(ok > 0);
}
