#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypermat/catalog.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/json_io.hpp"

using namespace hypermat;

namespace {

std::vector<Hyperfield> fields() {
  return {Hyperfield::krasner(),
          Hyperfield::sign(),
          Hyperfield::field(5),
          Hyperfield::tropical(1),
          Hyperfield::tropical(2),
          Hyperfield::stringent(ResidueKind::sign, 1),
          Hyperfield::stringent(ResidueKind::field, 2, 3),
          Hyperfield::stringent(ResidueKind::krasner, 1),
          krasner_quotient(7, {1, 2, 4})};
}

// Message of the InvalidInput thrown by f, or "" if nothing is thrown.
template <class F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

bool mentions(const std::string& msg, const std::string& part) {
  return msg.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("hyperfields and elements round-trip") {
  for (const auto& h : fields()) {
    CAPTURE(h.name());
    const auto j = hyperfield_to_json(h);
    const auto back = hyperfield_from_json(parse_json(j.dump(), "mem"));
    REQUIRE(back == h);
    for (const auto& x : h.elements(2)) {
      const auto ej = element_to_json(h, x);
      REQUIRE(element_from_json(h, parse_json(ej.dump(), "mem")) == x);
    }
  }
}

TEST_CASE("element encoding") {
  const auto s = Hyperfield::sign();
  CHECK(element_to_json(s, s.zero()) == Json("0"));
  CHECK(element_to_json(s, s.make(-1)).dump() == R"({"r":"-"})");
  const auto k = Hyperfield::krasner();
  CHECK(element_to_json(k, k.one()) == Json("1"));
  const auto t = Hyperfield::tropical(2);
  CHECK(element_to_json(t, t.make(1, {3, -1})).dump() == R"({"g":[3,-1]})");
  const auto st = Hyperfield::stringent(ResidueKind::field, 1, 5);
  CHECK(element_to_json(st, st.make(3, {2})).dump() == R"({"r":3,"g":[2]})");
  // Bare residue shorthand.
  CHECK(element_from_json(s, Json("+")) == s.make(1));
  CHECK(element_from_json(Hyperfield::field(5), Json(7)) == Hyperfield::field(5).make(2));
}

TEST_CASE("table hyperfields round-trip through their tables") {
  const auto text = R"({"kind": "table", "labels": [0, 1, -1],
    "add": [[[0], [1], [-1]], [[1], [1], [0, 1, -1]], [[-1], [0, 1, -1], [-1]]],
    "mul": [[0, 0, 0], [0, 1, -1], [0, -1, 1]]})";
  const auto h = hyperfield_from_json(parse_json(text, "mem"));
  CHECK(h.is_table());
  CHECK(hyperfield_from_json(hyperfield_to_json(h)) == h);
  const auto raw = table_from_json(parse_json(text, "mem"));
  CHECK(raw.labels == std::vector<std::int64_t>{0, 1, -1});
}

TEST_CASE("matroids round-trip") {
  for (const auto& h : {Hyperfield::sign(), Hyperfield::field(3), Hyperfield::tropical(1),
                        Hyperfield::stringent(ResidueKind::sign, 1)}) {
    for (const auto& inst : signature_family(h, default_entries(h))) {
      CAPTURE(inst.name);
      const auto j = hmatroid_to_json(inst.matroid);
      const auto back = hmatroid_from_json(parse_json(j.dump(), "mem"));
      REQUIRE(back == inst.matroid);
      REQUIRE(hmatroid_to_json(back) == j);
      Json bare = j;
      bare.erase("schema");
      bare.erase("cocircuits");
      REQUIRE(hmatroid_from_json(bare) == inst.matroid);
    }
  }
  for (const auto& m : enumerate_matroids(4)) {
    REQUIRE(classical_from_json(classical_to_json(m)) == m);
  }
}

TEST_CASE("parse errors carry their location") {
  CHECK(mentions(error_of([] { parse_json("{\"a\": ", "x.json"); }), "x.json"));
  CHECK(mentions(error_of([] { read_json_file("/nonexistent/m.json"); }), "m.json"));
  CHECK(mentions(error_of([] { hyperfield_from_json(Json{{"kind", "octonion"}}); }), "/kind"));
  CHECK(mentions(error_of([] { hyperfield_from_json(Json{{"kind", "field"}}); }), "\"p\""));

  const auto base = R"({"hyperfield": {"kind": "sign"}, "ground": ["a", "b", "c"],
    "circuits": [["+", "+", "+"]]})";
  CHECK_NOTHROW(hmatroid_from_json(parse_json(base, "mem")));

  auto with = [&](const char* ptr, Json value) {
    auto j = parse_json(base, "mem");
    j[Json::json_pointer(ptr)] = value;
    return error_of([&] { hmatroid_from_json(j); });
  };
  CHECK(mentions(with("/circuits/0/2", "*"), "/circuits/0/2"));
  CHECK(mentions(with("/circuits/0", Json::array({"+", "+"})), "/circuits/0"));
  CHECK(mentions(with("/ground/1", "a"), "/ground"));
  CHECK(mentions(with("/side", "middle"), "/side"));
  CHECK(mentions(with("/schema", "hypermat/9"), "/schema"));
  // Cocircuits that disagree with the circuits.
  CHECK(mentions(with("/cocircuits", Json::array({Json::array({"+", "+", "0"})})),
                 "/cocircuits"));
}

TEST_CASE("signatures parse without matroid validation") {
  const auto j = parse_json(R"({"hyperfield": {"kind": "sign"}, "ground": ["1", "2", "3"],
    "circuits": [["+", "+", "+"], ["+", "-", "+"]]})",
                            "mem");
  const auto c = signature_from_json(j);
  CHECK(c.size() == 2);
  CHECK_THROWS_AS(hmatroid_from_json(j), InvalidCircuits);
}
