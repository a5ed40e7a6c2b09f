#include "hypermat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hypermat/errors.hpp"

namespace hypermat {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidInput((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

ResidueKind residue_kind(const std::string& s, const std::string& where) {
  if (s == "krasner") return ResidueKind::krasner;
  if (s == "sign") return ResidueKind::sign;
  if (s == "field") return ResidueKind::field;
  bad(where, "unknown residue \"" + s + "\"");
}

const char* residue_name(ResidueKind k) {
  switch (k) {
    case ResidueKind::krasner: return "krasner";
    case ResidueKind::sign: return "sign";
    case ResidueKind::field: return "field";
    case ResidueKind::table: return "table";
  }
  return "?";
}

std::uint32_t small_positive(const Json& j, const std::string& where) {
  const auto v = integer(j, where);
  if (v <= 0 || v > 1'000'000) bad(where, "out of range");
  return static_cast<std::uint32_t>(v);
}

std::size_t table_index_of(const std::vector<std::int64_t>& labels, const Json& j,
                           const std::string& where) {
  const auto v = integer(j, where);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == v) return i;
  }
  bad(where, "unknown label " + std::to_string(v));
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw InvalidInput(source + ": byte " + std::to_string(err.byte) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Json hyperfield_to_json(const Hyperfield& h) {
  using K = HyperfieldSpec::Kind;
  const auto& s = h.spec();
  Json j;
  switch (s.kind) {
    case K::krasner: j["kind"] = "krasner"; break;
    case K::sign: j["kind"] = "sign"; break;
    case K::field:
      j["kind"] = "field";
      j["p"] = s.p;
      break;
    case K::tropical:
      j["kind"] = "tropical";
      j["rank"] = s.rank;
      break;
    case K::stringent:
      j["kind"] = "stringent";
      j["residue"] = residue_name(s.residue);
      if (s.residue == ResidueKind::field) j["p"] = s.p;
      j["rank"] = s.rank;
      break;
    case K::quotient:
      j["kind"] = "quotient";
      j["p"] = s.p;
      j["subgroup"] = s.subgroup;
      break;
    case K::table: {
      const FiniteTable& t = *s.table;
      j["kind"] = "table";
      j["labels"] = t.labels;
      Json add = Json::array();
      Json mul = Json::array();
      for (std::size_t a = 0; a < t.labels.size(); ++a) {
        Json add_row = Json::array();
        Json mul_row = Json::array();
        for (std::size_t b = 0; b < t.labels.size(); ++b) {
          Json cell = Json::array();
          for (std::size_t k = 0; k < t.labels.size(); ++k) {
            if ((t.add[a][b] >> k) & 1u) cell.push_back(t.labels[k]);
          }
          add_row.push_back(cell);
          mul_row.push_back(t.labels[t.mul[a][b]]);
        }
        add.push_back(add_row);
        mul.push_back(mul_row);
      }
      j["add"] = add;
      j["mul"] = mul;
      break;
    }
  }
  return j;
}

FiniteTable table_from_json(const Json& j, const std::string& where) {
  FiniteTable t;
  const Json& labels = field(j, "labels", where);
  if (!labels.is_array()) bad(where + "/labels", "expected an array");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    t.labels.push_back(integer(labels[i], where + "/labels/" + std::to_string(i)));
  }
  const std::size_t n = t.labels.size();
  if (n > 64) bad(where + "/labels", "at most 64 elements");
  const Json& add = field(j, "add", where);
  const Json& mul = field(j, "mul", where);
  if (!add.is_array() || add.size() != n) bad(where + "/add", "expected an n by n table");
  if (!mul.is_array() || mul.size() != n) bad(where + "/mul", "expected an n by n table");
  t.add.assign(n, std::vector<std::uint64_t>(n, 0));
  t.mul.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const std::string ra = where + "/add/" + std::to_string(a);
    const std::string rm = where + "/mul/" + std::to_string(a);
    if (!add[a].is_array() || add[a].size() != n) bad(ra, "expected a row of length n");
    if (!mul[a].is_array() || mul[a].size() != n) bad(rm, "expected a row of length n");
    for (std::size_t b = 0; b < n; ++b) {
      const std::string ca = ra + "/" + std::to_string(b);
      if (!add[a][b].is_array()) bad(ca, "expected a list of labels");
      for (std::size_t k = 0; k < add[a][b].size(); ++k) {
        t.add[a][b] |= std::uint64_t{1}
                     << table_index_of(t.labels, add[a][b][k], ca + "/" + std::to_string(k));
      }
      t.mul[a][b] = static_cast<std::uint32_t>(
          table_index_of(t.labels, mul[a][b], rm + "/" + std::to_string(b)));
    }
  }
  return t;
}

Hyperfield hyperfield_from_json(const Json& j, const std::string& where) {
  const std::string kind = text(field(j, "kind", where), where + "/kind");
  try {
    if (kind == "krasner") return Hyperfield::krasner();
    if (kind == "sign") return Hyperfield::sign();
    if (kind == "field") return Hyperfield::field(small_positive(field(j, "p", where), where + "/p"));
    if (kind == "tropical") {
      return Hyperfield::tropical(
          static_cast<std::size_t>(integer(field(j, "rank", where), where + "/rank")));
    }
    if (kind == "stringent") {
      const auto res = residue_kind(text(field(j, "residue", where), where + "/residue"),
                                    where + "/residue");
      const auto rank =
          static_cast<std::size_t>(integer(field(j, "rank", where), where + "/rank"));
      std::uint32_t p = 0;
      if (res == ResidueKind::field) p = small_positive(field(j, "p", where), where + "/p");
      return Hyperfield::stringent(res, rank, p);
    }
    if (kind == "quotient") {
      const auto p = small_positive(field(j, "p", where), where + "/p");
      const Json& g = field(j, "subgroup", where);
      if (!g.is_array()) bad(where + "/subgroup", "expected an array");
      std::vector<std::uint32_t> sub;
      for (std::size_t i = 0; i < g.size(); ++i) {
        sub.push_back(small_positive(g[i], where + "/subgroup/" + std::to_string(i)));
      }
      return krasner_quotient(p, sub);
    }
    if (kind == "table") return Hyperfield::from_table(table_from_json(j, where));
  } catch (const InvalidInput&) {
    throw;
  } catch (const Error& err) {
    bad(where, err.what());
  }
  bad(where + "/kind", "unknown hyperfield kind \"" + kind + "\"");
}

Json element_to_json(const Hyperfield& h, const HElement& x) {
  if (x.is_zero()) return "0";
  Json j = Json::object();
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, SignUnit>) {
          j["r"] = r.sign > 0 ? "+" : "-";
        } else if constexpr (std::is_same_v<T, FieldUnit>) {
          j["r"] = r.value;
        } else if constexpr (std::is_same_v<T, TableUnit>) {
          j["r"] = h.label(x);
        }
      },
      x.residue());
  if (x.grade().rank() > 0) {
    Json g = Json::array();
    for (std::size_t i = 0; i < x.grade().rank(); ++i) g.push_back(x.grade()[i]);
    j["g"] = g;
  }
  if (j.empty()) return "1";  // the Krasner unit
  return j;
}

HElement element_from_json(const Hyperfield& h, const Json& j, const std::string& where) {
  if ((j.is_string() && j.get<std::string>() == "0") || (j.is_number_integer() && j == 0)) {
    return h.zero();
  }
  // Rank-0 shorthands: "+", "-", "1" and bare integers.
  if (!h.is_graded() && (j.is_string() || j.is_number_integer())) {
    try {
      if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "+") return h.make(1);
        if (s == "-") return h.make(-1);
        if (s == "1") return h.one();
        bad(where, "unknown element \"" + s + "\"");
      }
      return h.make(j.get<std::int64_t>());
    } catch (const InvalidInput&) {
      throw;
    } catch (const Error& err) {
      bad(where, err.what());
    }
  }
  if (!j.is_object()) bad(where, "expected \"0\" or an object with r and g");
  Grade g = Grade::zero(0);
  if (auto it = j.find("g"); it != j.end()) {
    if (!it->is_array() || it->size() > Grade::kMaxRank) bad(where + "/g", "expected a short array");
    std::vector<std::int64_t> coords;
    for (std::size_t i = 0; i < it->size(); ++i) {
      coords.push_back(integer((*it)[i], where + "/g/" + std::to_string(i)));
    }
    g = Grade(std::span<const std::int64_t>(coords));
  }
  std::int64_t r = 1;
  if (auto it = j.find("r"); it != j.end()) {
    if (it->is_string()) {
      const auto s = it->get<std::string>();
      if (s == "+") {
        r = 1;
      } else if (s == "-") {
        r = -1;
      } else {
        bad(where + "/r", "expected \"+\", \"-\" or an integer");
      }
    } else {
      r = integer(*it, where + "/r");
    }
  } else if (h.residue_kind() != ResidueKind::krasner) {
    bad(where, "missing \"r\"");
  }
  try {
    return h.make(r, g);
  } catch (const Error& err) {
    bad(where, err.what());
  }
}

Json vector_to_json(const Hyperfield& h, const HVector& v) {
  Json out = Json::array();
  for (const auto& x : v.entries) out.push_back(element_to_json(h, x));
  return out;
}

HVector vector_from_json(const Hyperfield& h, const Json& j, std::size_t size,
                         const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of elements");
  if (j.size() != size) bad(where, "expected " + std::to_string(size) + " entries");
  HVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.entries.push_back(element_from_json(h, j[i], where + "/" + std::to_string(i)));
  }
  return v;
}

namespace {

GroundSet ground_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of labels");
  if (j.size() > kMaxGround) bad(where, "at most " + std::to_string(kMaxGround) + " elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    labels.push_back(text(j[i], where + "/" + std::to_string(i)));
  }
  try {
    return GroundSet(labels);
  } catch (const Error& err) {
    bad(where, err.what());
  }
}

Json vectors_to_json(const Hyperfield& h, const std::vector<HVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(h, v));
  return out;
}

}  // namespace

Json hmatroid_to_json(const HMatroid& m) {
  Json j;
  j["schema"] = kSchema;
  j["hyperfield"] = hyperfield_to_json(m.field());
  j["ground"] = m.ground().labels();
  j["side"] = m.side() == Side::left ? "left" : "right";
  j["circuits"] = vectors_to_json(m.field(), m.circuits().representatives());
  j["cocircuits"] = vectors_to_json(m.field(), m.cocircuits().representatives());
  return j;
}

CircuitSignature signature_from_json(const Json& j) {
  if (!j.is_object()) bad("", "expected an object");
  if (auto it = j.find("schema"); it != j.end() && *it != kSchema) {
    bad("/schema", "unsupported schema " + it->dump());
  }
  const Hyperfield h = hyperfield_from_json(field(j, "hyperfield", ""), "/hyperfield");
  const GroundSet ground = ground_from_json(field(j, "ground", ""), "/ground");
  Side side = Side::left;
  if (auto it = j.find("side"); it != j.end()) {
    const auto s = text(*it, "/side");
    if (s == "right") {
      side = Side::right;
    } else if (s != "left") {
      bad("/side", "expected \"left\" or \"right\"");
    }
  }
  const Json& cs = field(j, "circuits", "");
  if (!cs.is_array()) bad("/circuits", "expected an array");
  std::vector<HVector> circuits;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    circuits.push_back(vector_from_json(h, cs[i], ground.size(), "/circuits/" + std::to_string(i)));
  }
  return CircuitSignature(h, ground, std::move(circuits), side);
}

HMatroid hmatroid_from_json(const Json& j) {
  const CircuitSignature sig = signature_from_json(j);
  const Hyperfield& h = sig.field();
  const GroundSet& ground = sig.ground();
  const Side side = sig.side();
  HMatroid m = HMatroid::from_signature(sig);
  if (auto it = j.find("cocircuits"); it != j.end()) {
    if (!it->is_array()) bad("/cocircuits", "expected an array");
    std::vector<HVector> given;
    for (std::size_t i = 0; i < it->size(); ++i) {
      given.push_back(
          vector_from_json(h, (*it)[i], ground.size(), "/cocircuits/" + std::to_string(i)));
    }
    if (!(CircuitSignature(h, ground, std::move(given), opposite(side)) == m.cocircuits())) {
      bad("/cocircuits", "differ from the cocircuits forced by the circuits");
    }
  }
  return m;
}

Json classical_to_json(const ClassicalMatroid& m) {
  Json j;
  j["ground"] = m.ground().labels();
  Json cs = Json::array();
  for (Mask c : m.circuits()) {
    Json one = Json::array();
    for (auto e : elements_of(c)) one.push_back(m.ground().label(e));
    cs.push_back(one);
  }
  j["circuits"] = cs;
  return j;
}

ClassicalMatroid classical_from_json(const Json& j) {
  const GroundSet ground = ground_from_json(field(j, "ground", ""), "/ground");
  const Json& cs = field(j, "circuits", "");
  if (!cs.is_array()) bad("/circuits", "expected an array");
  std::vector<Mask> circuits;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string w = "/circuits/" + std::to_string(i);
    if (!cs[i].is_array()) bad(w, "expected an array of labels");
    Mask m = 0;
    for (std::size_t k = 0; k < cs[i].size(); ++k) {
      const std::string wk = w + "/" + std::to_string(k);
      try {
        m |= bit(ground.index_of(text(cs[i][k], wk)));
      } catch (const UnknownElement&) {
        bad(wk, "unknown element");
      }
    }
    circuits.push_back(m);
  }
  return ClassicalMatroid::from_circuits(ground, std::move(circuits));
}

}  // namespace hypermat
