#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypermat/acceptance.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/json_io.hpp"
#include "hypermat/vectors.hpp"

using namespace hypermat;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Config {
  std::int64_t window = 4;
  bool window_set = false;
  unsigned threads = 1;
  std::string output;
  std::string input;
};

class ReportBuilder {
 public:
  ReportBuilder(std::string command, const Config& cfg) : cfg_(cfg) {
    doc_["schema"] = kSchema;
    doc_["tool"] = "hypermat";
    doc_["version"] = kVersion;
    doc_["command"] = std::move(command);
    doc_["checks"] = Json::array();
  }

  // Runs f, which returns (passed, witness), and records it with its timing.
  template <class F>
  bool check(const std::string& id, F&& f, bool windowed = false) {
    const auto start = std::chrono::steady_clock::now();
    auto [ok, witness] = f();
    Json rec;
    rec["check"] = id;
    rec["status"] = ok ? "pass" : "fail";
    if (!witness.is_null()) rec["witness"] = witness;
    if (windowed) rec["window"] = cfg_.window;
    rec["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc_["checks"].push_back(rec);
    if (!ok) failed_ = true;
    return ok;
  }

  void skip(const std::string& id, const std::string& why) {
    Json rec;
    rec["check"] = id;
    rec["status"] = "skipped";
    rec["witness"] = why;
    rec["elapsed_ms"] = 0.0;
    doc_["checks"].push_back(rec);
  }

  Json& doc() { return doc_; }
  bool failed() const { return failed_; }

 private:
  const Config& cfg_;
  Json doc_;
  bool failed_ = false;
};

using Outcome = std::pair<bool, Json>;

int emit(ReportBuilder& r, const Config& cfg) {
  const std::string text = r.doc().dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw InvalidInput(cfg.output + ": cannot write");
    out << text;
  }
  return r.failed() ? 1 : 0;
}

Json vectors_json(const Hyperfield& h, const std::vector<HVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(h, v));
  return out;
}

Json sets_json(const GroundSet& g, const std::vector<Mask>& sets) {
  Json out = Json::array();
  for (Mask s : sets) {
    Json one = Json::array();
    for (auto e : elements_of(s)) one.push_back(g.label(e));
    out.push_back(one);
  }
  return out;
}

EnumerationOptions enum_opts(const Config& cfg) {
  EnumerationOptions o;
  o.window = cfg.window;
  o.threads = cfg.threads;
  return o;
}

HMatroid load_matroid(const Config& cfg) { return hmatroid_from_json(read_json_file(cfg.input)); }

Json findings_json(const Hyperfield& h, const Report& rep) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rep.failures.size() && i < 8; ++i) {
    const auto& f = rep.failures[i];
    Json one;
    one["check"] = f.check;
    one["detail"] = f.detail;
    one["vectors"] = vectors_json(h, f.witness);
    out.push_back(one);
  }
  return out;
}

Json axiom_json(const Hyperfield& h, const AxiomReport& rep) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rep.violations.size() && i < 8; ++i) {
    Json one;
    one["axiom"] = rep.violations[i].axiom;
    Json els = Json::array();
    for (const auto& x : rep.violations[i].witness) els.push_back(element_to_json(h, x));
    one["elements"] = els;
    out.push_back(one);
  }
  return out;
}

void stringency(ReportBuilder& r, const Hyperfield& h, const Config& cfg) {
  const auto s = check_stringent(h, cfg.window);
  r.doc()["stringent"] = s.stringent;
  if (s.witness) {
    r.doc()["stringency_witness"] =
        Json::array({element_to_json(h, s.witness->first), element_to_json(h, s.witness->second)});
  }
}

// Violations of a raw table, with elements shown by their labels.
Json table_violations(const FiniteTable& t, const AxiomReport& rep) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rep.violations.size() && i < 8; ++i) {
    Json one;
    one["axiom"] = rep.violations[i].axiom;
    Json els = Json::array();
    for (const auto& x : rep.violations[i].witness) {
      const auto* u = std::get_if<TableUnit>(&x.residue());
      els.push_back(x.is_zero() ? Json(t.labels.at(0))
                  : u         ? Json(t.labels.at(u->index))
                              : Json(to_string(x)));
    }
    one["elements"] = els;
    out.push_back(one);
  }
  return out;
}

int cmd_check_hyperfield(const Config& cfg) {
  ReportBuilder r("check-hyperfield", cfg);
  const Json j = read_json_file(cfg.input);
  if (j.is_object() && j.value("kind", "") == "table") {
    const FiniteTable t = table_from_json(j);
    const auto rep = validate_table(t);
    if (!rep.ok()) {
      r.doc()["hyperfield"] = j;
      r.check("axioms", [&]() -> Outcome { return {false, table_violations(t, rep)}; });
      return emit(r, cfg);
    }
  }
  const Hyperfield h = hyperfield_from_json(j);
  r.doc()["hyperfield"] = hyperfield_to_json(h);
  r.doc()["name"] = h.name();
  r.check(
      "axioms",
      [&]() -> Outcome {
        const auto rep = validate_axioms(h, cfg.window);
        return {rep.ok(), rep.ok() ? Json() : axiom_json(h, rep)};
      },
      h.rank() > 0);
  stringency(r, h, cfg);
  return emit(r, cfg);
}

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw InvalidInput("--subgroup: \"" + item + "\" is not a positive integer");
    }
  }
  return out;
}

int cmd_quotient(const Config& cfg, std::uint32_t p, const std::string& subgroup) {
  ReportBuilder r("quotient", cfg);
  const Hyperfield q = krasner_quotient(p, parse_list(subgroup));
  r.doc()["hyperfield"] = hyperfield_to_json(q);
  Json table = hyperfield_to_json(Hyperfield::from_table(*q.table()));
  table.erase("kind");
  r.doc()["table"] = table;
  r.check("axioms", [&]() -> Outcome {
    const auto rep = validate_axioms(q);
    return {rep.ok(), rep.ok() ? Json() : axiom_json(q, rep)};
  });
  r.check("coset-map", [&]() -> Outcome {
    const auto rep = validate_homomorphism(Homomorphism::coset_map(Hyperfield::field(p), q));
    return {rep.ok(), rep.ok() ? Json() : axiom_json(q, rep)};
  });
  stringency(r, q, cfg);
  return emit(r, cfg);
}

int cmd_matroid_check(const Config& cfg) {
  ReportBuilder r("matroid check", cfg);
  const Json j = read_json_file(cfg.input);
  std::optional<CircuitSignature> sig;
  r.check("signature", [&]() -> Outcome {
    try {
      sig.emplace(signature_from_json(j));
      return {true, Json()};
    } catch (const InvalidCircuits& err) {
      return {false, err.what()};
    }
  });
  if (!sig) return emit(r, cfg);
  const Hyperfield& h = sig->field();
  r.check("circuit-axioms", [&]() -> Outcome {
    const auto rep = check_circuit_axioms(*sig);
    return {rep.ok(), rep.ok() ? Json() : findings_json(h, rep)};
  });
  if (!h.is_table() &&
      (h.residue_kind() == ResidueKind::krasner || h.residue_kind() == ResidueKind::sign)) {
    r.check("strong-elimination", [&]() -> Outcome {
      const auto rep = check_c3prime(*sig);
      return {rep.ok(), rep.ok() ? Json() : findings_json(h, rep)};
    });
  } else {
    r.skip("strong-elimination", "needs a Krasner or sign residue");
  }
  std::optional<HMatroid> m;
  r.check("duality", [&]() -> Outcome {
    try {
      m.emplace(HMatroid::from_signature(*sig));
      return {true, Json()};
    } catch (const NotAnHMatroid& err) {
      return {false, err.what()};
    } catch (const InvalidCircuits& err) {
      return {false, err.what()};
    }
  });
  if (m) {
    r.check("full-orthogonality", [&]() -> Outcome {
      const auto p = perp_k(m->circuits(), m->cocircuits(), std::nullopt);
      if (p.ok) return {true, Json()};
      return {false, Json::array({vector_to_json(h, p.witness->first),
                                  vector_to_json(h, p.witness->second)})};
    });
    r.doc()["matroid"] = hmatroid_to_json(*m);
  }
  return emit(r, cfg);
}

int emit_matroid(const std::string& command, const Config& cfg, const HMatroid& m) {
  ReportBuilder r(command, cfg);
  r.doc()["matroid"] = hmatroid_to_json(m);
  return emit(r, cfg);
}

int cmd_minor(const Config& cfg, const std::string& del, const std::string& con) {
  if (del.empty() == con.empty()) throw InvalidInput("give exactly one of --delete and --contract");
  const HMatroid m = load_matroid(cfg);
  const std::size_t e = m.ground().index_of(del.empty() ? con : del);
  return emit_matroid("matroid minor", cfg, del.empty() ? hm_contract(m, e) : hm_delete(m, e));
}

int cmd_rescale(const Config& cfg, const std::string& rho_text) {
  const HMatroid m = load_matroid(cfg);
  const HVector rho =
      vector_from_json(m.field(), parse_json(rho_text, "--rho"), m.ground().size(), "--rho");
  return emit_matroid("matroid rescale", cfg, hm_rescale(m, rho));
}

int cmd_residue(const Config& cfg) {
  ReportBuilder r("matroid residue", cfg);
  const HMatroid m = load_matroid(cfg);
  std::optional<HMatroid> m0;
  r.check("residue", [&]() -> Outcome {
    try {
      m0.emplace(residue_matroid(m));
      return {true, Json()};
    } catch (const TheoremViolation& err) {
      return {false, err.what()};
    }
  });
  if (m0) {
    r.doc()["matroid"] = hmatroid_to_json(*m0);
    Json u = classical_to_json(m0->underlying());
    u["cocircuits"] = sets_json(m0->ground(), m0->underlying().cocircuits());
    r.doc()["underlying"] = u;
  }
  return emit(r, cfg);
}

int cmd_vectors(const Config& cfg, bool generate, bool covectors) {
  ReportBuilder r("matroid vectors", cfg);
  const HMatroid m = load_matroid(cfg);
  if (generate && covectors) throw InvalidInput("--generate does not apply to covectors");
  const auto vs = covectors ? covectors_enumerate(m, enum_opts(cfg))
                  : generate ? vectors_generate(m, cfg.window)
                             : vectors_enumerate(m, enum_opts(cfg));
  r.doc()["method"] = generate ? "generate" : "enumerate";
  r.doc()["window"] = cfg.window;
  r.doc()["count"] = vs.size();
  r.doc()[covectors ? "covectors" : "vectors"] = vectors_json(m.field(), vs);
  return emit(r, cfg);
}

int cmd_perfect(const Config& cfg) {
  ReportBuilder r("matroid perfect", cfg);
  const HMatroid m = load_matroid(cfg);
  r.check(
      "perfect",
      [&]() -> Outcome {
        const auto res = is_perfect(m, enum_opts(cfg));
        r.doc()["vectors"] = res.vectors;
        r.doc()["covectors"] = res.covectors;
        if (res.perfect) return {true, Json()};
        return {false, Json::array({vector_to_json(m.field(), res.witness->first),
                                    vector_to_json(m.field(), res.witness->second)})};
      },
      true);
  return emit(r, cfg);
}

int cmd_vector_axioms(const Config& cfg, const std::string& vectors_path,
                      std::optional<std::int64_t> premise) {
  ReportBuilder r("matroid vector-axioms", cfg);
  const HMatroid m = load_matroid(cfg);
  std::vector<HVector> vs;
  if (vectors_path.empty()) {
    vs = vectors_enumerate(m, enum_opts(cfg));
  } else {
    const Json j = read_json_file(vectors_path);
    const Json& arr = j.is_object() && j.contains("vectors") ? j.at("vectors") : j;
    if (!arr.is_array()) throw InvalidInput(vectors_path + ": expected an array of vectors");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      vs.push_back(vector_from_json(m.field(), arr[i], m.ground().size(),
                                    vectors_path + ":/" + std::to_string(i)));
    }
  }
  VectorAxiomOptions vo;
  vo.window = cfg.window;
  vo.premise_window = premise.value_or(m.field().rank() > 0 ? std::max<std::int64_t>(0, cfg.window - 2) : 0);
  vo.side = m.side();
  r.doc()["premise_window"] = vo.premise_window;
  const bool axioms = r.check(
      "vector-axioms",
      [&]() -> Outcome {
        const auto rep = check_vector_axioms(m.field(), vs, vo);
        return {rep.ok(), rep.ok() ? Json() : findings_json(m.field(), rep)};
      },
      true);
  if (axioms) {
    r.check(
        "reconstruction",
        [&]() -> Outcome {
          try {
            const HMatroid back =
                reconstruct_from_vectors(m.field(), m.ground(), vs, cfg.window, m.side());
            r.doc()["matroid"] = hmatroid_to_json(back);
            if (vectors_path.empty() && !(back.circuits() == m.circuits())) {
              return {false, "recovered circuits differ from the input"};
            }
            return {true, Json()};
          } catch (const TheoremViolation& err) {
            return {false, err.what()};
          }
        },
        true);
  } else {
    r.skip("reconstruction", "vector axioms fail");
  }
  return emit(r, cfg);
}

int cmd_pushforward(const Config& cfg, const std::string& hom) {
  const HMatroid m = load_matroid(cfg);
  const Homomorphism f = hom == "valuation" ? Homomorphism::valuation(m.field())
                         : hom == "sign"    ? Homomorphism::sign(m.field())
                         : hom == "identity"
                             ? Homomorphism::identity(m.field())
                             : throw InvalidInput("--hom must be valuation, sign or identity");
  return emit_matroid("matroid pushforward", cfg, push_forward(f, m));
}

Mask parse_part(const GroundSet& g, const std::string& part) {
  Mask m = 0;
  std::stringstream ss(part);
  std::string label;
  while (std::getline(ss, label, ',')) {
    if (!label.empty()) m |= bit(g.index_of(label));
  }
  return m;
}

int cmd_farkas(const Config& cfg, const std::string& partition, bool weak) {
  ReportBuilder r("matroid farkas", cfg);
  const HMatroid m = load_matroid(cfg);
  const auto a = partition.find('|');
  const auto b = a == std::string::npos ? a : partition.find('|', a + 1);
  if (b == std::string::npos || partition.find('|', b + 1) != std::string::npos) {
    throw InvalidInput("--partition must look like \"R|G|B\"");
  }
  FarkasPartition p;
  p.red = parse_part(m.ground(), partition.substr(0, a));
  p.green = parse_part(m.ground(), partition.substr(a + 1, b - a - 1));
  p.blue = parse_part(m.ground(), partition.substr(b + 1));
  r.doc()["weak"] = weak;
  r.check(
      "farkas",
      [&]() -> Outcome {
        try {
          const auto w = farkas_witness(m, p, cfg.window, weak);
          Json out;
          out["kind"] = w.kind == FarkasWitness::Kind::vector ? "vector" : "cocircuit";
          out["value"] = vector_to_json(m.field(), w.witness);
          r.doc()["witness"] = out;
          return {true, Json()};
        } catch (const TheoremViolation& err) {
          return {false, err.what()};
        }
      },
      true);
  return emit(r, cfg);
}

int cmd_suite(const Config& cfg) {
  ReportBuilder r("suite", cfg);
  AcceptanceOptions opt;
  opt.threads = cfg.threads;
  if (cfg.window_set) opt.matroid_window = cfg.window;
  r.doc()["matroid_window"] = opt.matroid_window;
  for (int id = 1; id <= kCriteria; ++id) {
    r.check("criterion-" + std::to_string(id), [&]() -> Outcome {
      const auto res = run_criterion(id, opt);
      std::cerr << (res.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << res.title
                << "): " << res.detail << "\n";
      return {res.pass, res.detail};
    });
  }
  return emit(r, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroids over hyperfields: checks, constructions and reports"};
  app.require_subcommand(1);
  Config cfg;
  auto* window = app.add_option("--window", cfg.window, "grade window bound")
                     ->envname("HYPERMAT_WINDOW")
                     ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output,-o", cfg.output, "write the report here instead of stdout");
  app.fallthrough();

  auto* chf = app.add_subcommand("check-hyperfield", "validate a hyperfield file");
  chf->add_option("file", cfg.input)->required();

  std::uint32_t p = 0;
  std::string subgroup;
  auto* quo = app.add_subcommand("quotient", "Krasner quotient of GF(p) by a subgroup");
  quo->add_option("--p", p)->required();
  quo->add_option("--subgroup", subgroup)->required();

  auto* mat = app.add_subcommand("matroid", "operations on a matroid file");
  mat->require_subcommand(1);
  auto file = [&](CLI::App* sub) { sub->add_option("file", cfg.input)->required(); };
  auto* mcheck = mat->add_subcommand("check", "validate circuits and duality");
  auto* mdual = mat->add_subcommand("dual", "dual matroid");
  std::string del, con;
  auto* mminor = mat->add_subcommand("minor", "deletion or contraction");
  mminor->add_option("--delete", del);
  mminor->add_option("--contract", con);
  std::string rho;
  auto* mrescale = mat->add_subcommand("rescale", "rescale by a vector of units");
  mrescale->add_option("--rho", rho, "JSON array of units")->required();
  auto* mresidue = mat->add_subcommand("residue", "residue matroid");
  bool generate = false, enumerate = false, covectors = false;
  auto* mvectors = mat->add_subcommand("vectors", "vectors in the window");
  auto* gen = mvectors->add_flag("--generate", generate);
  auto* en = mvectors->add_flag("--enumerate", enumerate);
  gen->excludes(en);
  mvectors->add_flag("--covectors", covectors);
  auto* mperfect = mat->add_subcommand("perfect", "vectors orthogonal to covectors");
  std::string vectors_path;
  std::optional<std::int64_t> premise;
  auto* maxioms = mat->add_subcommand("vector-axioms", "vector axioms and reconstruction");
  maxioms->add_option("--vectors", vectors_path, "JSON file with a vector set");
  maxioms->add_option("--premise-window", premise)->check(CLI::NonNegativeNumber);
  std::string hom;
  auto* mpush = mat->add_subcommand("pushforward", "push forward along a homomorphism");
  mpush->add_option("--hom", hom, "valuation, sign or identity")->required();
  std::string partition;
  bool weak = false;
  auto* mfarkas = mat->add_subcommand("farkas", "vector or cocircuit witness for a partition");
  mfarkas->add_option("--partition", partition, "R|G|B with comma-separated labels")->required();
  mfarkas->add_flag("--weak", weak);
  for (auto* sub : {mcheck, mdual, mminor, mrescale, mresidue, mvectors, mperfect, maxioms, mpush,
                    mfarkas}) {
    file(sub);
  }
  auto* suite = app.add_subcommand("suite", "run the acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.window_set = window->count() > 0 || std::getenv("HYPERMAT_WINDOW") != nullptr;

  try {
    if (*chf) return cmd_check_hyperfield(cfg);
    if (*quo) return cmd_quotient(cfg, p, subgroup);
    if (*suite) return cmd_suite(cfg);
    if (*mcheck) return cmd_matroid_check(cfg);
    if (*mdual) return emit_matroid("matroid dual", cfg, load_matroid(cfg).dual());
    if (*mminor) return cmd_minor(cfg, del, con);
    if (*mrescale) return cmd_rescale(cfg, rho);
    if (*mresidue) return cmd_residue(cfg);
    if (*mvectors) return cmd_vectors(cfg, generate, covectors);
    if (*mperfect) return cmd_perfect(cfg);
    if (*maxioms) return cmd_vector_axioms(cfg, vectors_path, premise);
    if (*mpush) return cmd_pushforward(cfg, hom);
    if (*mfarkas) return cmd_farkas(cfg, partition, weak);
  } catch (const TheoremViolation& e) {
    std::cerr << "hypermat: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "hypermat: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
