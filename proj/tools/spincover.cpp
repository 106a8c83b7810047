// Command-line front end: enumeration, classification reports and the
// verification harness.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spincover/serialize.hpp"
#include "spincover/spincover.hpp"

#include "fixture_set.hpp"

#ifndef SPINCOVER_FIXTURE_PATH
#define SPINCOVER_FIXTURE_PATH "fixtures/fixtures.json"
#endif

using namespace spincover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::size_t g = 1;
  std::string rho;
  std::string r;
  std::string format = "text";
};

bool json_out(const Common& c) { return c.format == "json"; }

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

GF2Vec bits_or_zero(const std::string& s, std::size_t len, const char* what) {
  if (s.empty()) return GF2Vec(len);
  GF2Vec v = GF2Vec::parse(s);
  if (v.size() != len) {
    throw ShapeError(std::string(what) + " needs " + std::to_string(len) + " bits, got " + std::to_string(v.size()));
  }
  return v;
}

SectionParams params_of(const Common& c) {
  return SectionParams(c.g, bits_or_zero(c.rho, c.g + 1, "--rho"), bits_or_zero(c.r, 2 * c.g, "--r"));
}

GF2Mat read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read matrix file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return GF2Mat::parse(ss.str());
}

void print_orbits(const OrbitReport& rep) {
  for (const auto& o : rep.orbits) {
    std::cout << "  " << o.label << " (" << o.size() << "):";
    for (const auto& m : o.members) std::cout << " " << m.to_string();
    std::cout << "\n";
  }
}

void add_common(CLI::App* sub, Common& c, bool rho, bool r) {
  sub->add_option("--g", c.g, "genus (the N-surface has g+1 cross-caps)")->check(CLI::Range(1, 20));
  if (rho) sub->add_option("--rho", c.rho, "linear section bits rho_0..rho_g (default 0)");
  if (r) sub->add_option("--r", c.r, "quadratic section bits r_1..r_2g (default 0)");
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

int cmd_enumerate(const Common& c, bool epi) {
  Json doc = document("enumerate");
  doc["g"] = c.g;
  if (!epi) {
    auto all = specials(c.g);
    if (!json_out(c)) std::cout << all.size() << " special coverings (values on vbar_0..vbar_g, h)\n";
    Json list = Json::array();
    for (const auto& psi : all) {
      unsigned cls = weak_class(psi);
      if (json_out(c)) {
        Json e;
        e["values"] = psi.values().to_string();
        e["weak_class"] = cls;
        list.push_back(e);
      } else {
        std::cout << "  " << psi.values().to_string() << "  weak class " << cls << "\n";
      }
    }
    doc["count"] = all.size();
    doc["coverings"] = list;
  } else {
    auto all = epi_set(c.g);
    auto params = params_of(c);
    if (!json_out(c)) std::cout << all.size() << " members of E_pi (values on cbar_1..cbar_2g, h)\n";
    Json list = Json::array();
    for (const auto& m : all) {
      unsigned a = arf_of(m.phi, params);
      if (json_out(c)) {
        Json e;
        e["values"] = m.phi.values().to_string();
        e["psi"] = {m.psi_a.values().to_string(), m.psi_b.values().to_string()};
        e["arf"] = a;
        list.push_back(e);
      } else {
        std::cout << "  " << m.phi.values().to_string() << "  from psi " << m.psi_a.values().to_string() << " / "
                  << m.psi_b.values().to_string() << "  arf " << a << "\n";
      }
    }
    doc["count"] = all.size();
    doc["epi"] = list;
  }
  if (json_out(c)) emit(doc);
  return kExitOk;
}

int regen_fixtures(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return kExitFail;
  }
  out << oracle::build_fixtures().dump(2) << "\n";
  std::cout << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_verify(const Common& c, VerifyOptions opts, bool all, const std::string& theorem, bool g_given) {
  if (!c.rho.empty()) opts.rho = GF2Vec::parse(c.rho);
  if (!c.r.empty()) opts.r = GF2Vec::parse(c.r);
  if (g_given) opts.g = c.g;
  std::vector<const TheoremEntry*> selected;
  if (!theorem.empty()) {
    const TheoremEntry* t = find_theorem(theorem);
    if (!t) {
      std::cerr << "unknown theorem '" << theorem << "'; known:";
      for (const auto& e : theorem_registry()) std::cerr << " " << e.name;
      std::cerr << "\n";
      return kExitUsage;
    }
    selected.push_back(t);
  } else if (all) {
    for (const auto& e : theorem_registry()) selected.push_back(&e);
  } else {
    std::cerr << "verify: pass --all or --theorem NAME\n";
    return kExitUsage;
  }

  bool ok = true;
  Json results = Json::array();
  for (const auto* t : selected) {
    auto res = run_theorem(*t, opts);
    ok = ok && res.report.passed;
    if (json_out(c)) {
      Json e = to_json(res.report);
      e["title"] = t->title;
      e["genera"] = res.genera;
      results.push_back(e);
    } else {
      std::cout << (res.report.passed ? "PASS " : "FAIL ") << t->name << " (" << t->title << ") g=";
      for (std::size_t i = 0; i < res.genera.size(); ++i) std::cout << (i ? "," : "") << res.genera[i];
      std::cout << " cases=" << res.report.cases << "\n";
      if (!res.report.passed) std::cout << "  counterexample: " << res.report.failure << "\n";
      if (selected.size() == 1) {
        for (const auto& [k, v] : res.report.facts) std::cout << "  " << k << " = " << v << "\n";
      }
    }
  }
  if (json_out(c)) {
    Json doc = document("verify");
    doc["passed"] = ok;
    doc["results"] = results;
    emit(doc);
  } else {
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_classify_o(const Common& c, const std::string& engine_name) {
  auto params = params_of(c);
  OrbitEngine engine = engine_name == "full" ? OrbitEngine::FullGroup
                       : engine_name == "gens" ? OrbitEngine::Generators
                                               : OrbitEngine::Auto;
  auto rep = classify_A1(c.g, params, engine);
  if (json_out(c)) {
    Json doc = document("classify-o");
    doc["g"] = c.g;
    doc["rho"] = params.rho().to_string();
    doc["sizes"] = rep.sorted_sizes();
    doc["orbits"] = to_json(rep);
    emit(doc);
  } else {
    std::cout << "A_1 orbits on special coverings, g=" << c.g << " rho=" << params.rho().to_string()
              << " sizes " << join_sizes(rep.sorted_sizes()) << "\n";
    print_orbits(rep);
  }
  return kExitOk;
}

int cmd_stabilizer(const Common& c, int alpha) {
  auto which = alpha == 0 ? AlphaRep::Alpha0 : AlphaRep::Alpha1;
  auto rep = stabilizer_check(c.g, which);
  if (json_out(c)) {
    Json doc = document("stabilizer");
    doc["g"] = c.g;
    doc["alpha"] = alpha_form(c.g, which).to_string();
    doc["report"] = to_json(rep.check);
    emit(doc);
  } else {
    std::cout << "isotropy of alpha_" << alpha << " = " << alpha_form(c.g, which).to_string() << ", g=" << c.g << "\n";
    std::cout << "  |O| = " << rep.group_order << ", |Stab| = " << rep.stabilizer_order
              << ", |<generators>| = " << rep.closure_order
              << ", without transvection = " << rep.closure_without_transvection << "\n";
    std::cout << "  " << (rep.check.passed ? "generators match" : "MISMATCH: " + rep.check.failure) << "\n";
  }
  return rep.check.passed ? kExitOk : kExitFail;
}

int cmd_classify_sp(const Common& c, const std::string& mode_name) {
  auto params = params_of(c);
  EpiMode mode = mode_name == "gs" ? EpiMode::Gs : mode_name == "both" ? EpiMode::Both : EpiMode::Kt;
  auto res = classify_epi(c.g, params, mode);
  bool ok = !res.partitions_agree || *res.partitions_agree;
  if (json_out(c)) {
    Json doc = document("classify-sp");
    doc["g"] = c.g;
    doc["r"] = params.r().to_string();
    doc["mode"] = mode_name;
    doc["exceptional"] = params.exceptional();
    doc["sizes"] = res.report.sorted_sizes();
    if (res.partitions_agree) doc["partitions_agree"] = *res.partitions_agree;
    doc["orbits"] = to_json(res.report);
    emit(doc);
  } else {
    std::cout << "E_pi orbits, g=" << c.g << " r=" << params.r().to_string() << " mode " << mode_name << " sizes "
              << join_sizes(res.report.sorted_sizes()) << (params.exceptional() ? " (exceptional r)" : "") << "\n";
    print_orbits(res.report);
    if (res.partitions_agree) std::cout << "  G_s and K_t partitions " << (ok ? "agree" : "DIFFER") << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_factor(const Common& c, const std::string& path, const std::string& subspace) {
  auto params = params_of(c);
  auto space = FormSpace::symplectic(c.g);
  auto f = Isometry::make(space, read_matrix(path));
  std::vector<GF2Vec> v = subspace == "kt" ? kt_subspace(params) : std::vector<GF2Vec>{};
  auto ys = factorize_transvections(f, v);
  bool ok = transvection_product(*space, ys) == f.mat();
  if (json_out(c)) {
    Json doc = document("factor");
    doc["g"] = c.g;
    doc["subspace"] = subspace;
    doc["transvections"] = to_json(ys);
    doc["reproduces"] = ok;
    emit(doc);
  } else {
    std::cout << ys.size() << " transvection(s), product " << (ok ? "reproduces" : "DOES NOT reproduce") << " f\n";
    for (const auto& y : ys) std::cout << "  T_" << y.to_string() << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_weak(const Common& c, const std::string& psi_s, const std::string& psi2_s) {
  auto psi = SpecialCovering::on_n(c.g, bits_or_zero(psi_s, c.g + 1, "--psi"));
  auto psi2 = SpecialCovering::on_n(c.g, bits_or_zero(psi2_s, c.g + 1, "--psi2"));
  auto w = weak_witness(psi, psi2);
  if (json_out(c)) {
    Json doc = document("weak");
    doc["g"] = c.g;
    doc["class"] = {weak_class(psi), weak_class(psi2)};
    doc["equivalent"] = w.has_value();
    if (w) {
      doc["delta"] = w->delta().to_string();
      doc["witness"] = to_json(w->mat);
      doc["realizable"] = is_realizable(*w);
    }
    emit(doc);
  } else {
    std::cout << "weak classes " << weak_class(psi) << " / " << weak_class(psi2) << ": "
              << (w ? "weakly equivalent" : "not weakly equivalent") << "\n";
    if (w) std::cout << "  witness delta = " << w->delta().to_string() << ", realizable " << is_realizable(*w) << "\n"
                     << w->mat.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_lift(const Common& c, const std::string& path) {
  auto big_f = Isometry::make(FormSpace::dot(c.g + 1), read_matrix(path));
  auto f = lift_to_symp(big_f);
  bool ok = is_lift_pair(f, big_f);
  if (json_out(c)) {
    Json doc = document("lift");
    doc["g"] = c.g;
    doc["f"] = to_json(f.mat());
    doc["commutes"] = ok;
    emit(doc);
  } else {
    std::cout << "symplectic lift (c-basis):\n" << f.mat().to_string() << "\n";
    std::cout << "F pi_* = pi_* f: " << (ok ? "yes" : "NO") << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_project(const Common& c, const std::string& path) {
  auto f = Isometry::make(FormSpace::symplectic(c.g), read_matrix(path));
  auto fs = project_to_orth(f);
  if (json_out(c)) {
    Json doc = document("project");
    doc["g"] = c.g;
    Json list = Json::array();
    for (const auto& m : fs) list.push_back(to_json(m.mat()));
    doc["projections"] = list;
    emit(doc);
  } else {
    if (fs.empty()) std::cout << "no orthogonal projection (A^t S A != S)\n";
    for (const auto& m : fs) std::cout << "orthogonal projection:\n" << m.mat().to_string() << "\n";
  }
  return kExitOk;
}

int cmd_presentation(const Common& c, const std::string& psi_s) {
  auto psi = SpecialCovering::on_n(c.g, bits_or_zero(psi_s, c.g + 1, "--psi"));
  auto p = presentation(psi);
  if (json_out(c)) {
    Json doc = document("presentation");
    doc["g"] = c.g;
    doc["psi"] = psi.values().to_string();
    doc["presentation"] = to_json(p);
    emit(doc);
  } else {
    std::cout << p.text() << "\n";
    for (const auto& e : p.embedding_text()) std::cout << "  " << e << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin structures on circle bundles over non-orientable surfaces"};
  app.require_subcommand(0, 1);

  Common c;
  bool epi = false;
  auto* enumerate = app.add_subcommand("enumerate", "list special coverings (or E_pi with --epi)");
  add_common(enumerate, c, false, true);
  enumerate->add_flag("--epi", epi, "list E_pi on the orientable side");

  VerifyOptions vopts;
  bool all = false;
  std::string theorem;
  std::string regen;
  auto* verify = app.add_subcommand("verify", "replay the theorem suite");
  add_common(verify, c, true, true);
  verify->add_flag("--all", all, "run every registered check");
  verify->add_option("--max-g", vopts.max_g, "upper genus for default ranges");
  verify->add_option("--theorem", theorem, "run one check by name");
  verify->add_option("--seed", vopts.seed, "seed for sampled parameters");
  verify->add_flag("--full-gs", vopts.full_gs, "filter all of Sp at genus 3 for G_s");
  verify->add_option("--regen-fixtures", regen, "rewrite the golden fixture file")
      ->expected(0, 1)
      ->default_str(SPINCOVER_FIXTURE_PATH);

  std::string engine = "auto";
  auto* classify_o = app.add_subcommand("classify-o", "orbits of the orthogonal action");
  add_common(classify_o, c, true, false);
  classify_o->add_option("--engine", engine, "auto, full or gens")->check(CLI::IsMember({"auto", "full", "gens"}));

  int alpha = 1;
  auto* stabilizer = app.add_subcommand("stabilizer", "isotropy subgroup of alpha_0 or alpha_1");
  add_common(stabilizer, c, false, false);
  stabilizer->add_option("--alpha", alpha, "0 or 1")->check(CLI::IsMember({0, 1}));

  std::string mode = "kt";
  auto* classify_sp = app.add_subcommand("classify-sp", "orbits of the quadratic action on E_pi");
  add_common(classify_sp, c, false, true);
  classify_sp->add_option("--mode", mode, "kt, gs or both")->check(CLI::IsMember({"kt", "gs", "both"}));

  std::string matrix, subspace = "kt";
  auto* factor = app.add_subcommand("factor", "write a symplectic map as a product of transvections");
  add_common(factor, c, false, true);
  factor->add_option("--matrix", matrix, "file with rows of 0/1 (c-basis)")->required();
  factor->add_option("--subspace", subspace, "kt (ker pi_* + Z_2 t) or zero")->check(CLI::IsMember({"kt", "zero"}));

  std::string psi, psi2;
  auto* weak = app.add_subcommand("weak", "weak equivalence of two special coverings");
  add_common(weak, c, false, false);
  weak->add_option("--psi", psi, "values on vbar_0..vbar_g")->required();
  weak->add_option("--psi2", psi2, "values on vbar_0..vbar_g")->required();

  auto* lift = app.add_subcommand("lift", "symplectic lift of an orthogonal map");
  add_common(lift, c, false, false);
  lift->add_option("--matrix", matrix, "file with rows of 0/1")->required();

  auto* project = app.add_subcommand("project", "orthogonal projections of a symplectic map");
  add_common(project, c, false, false);
  project->add_option("--matrix", matrix, "file with rows of 0/1 (c-basis)")->required();

  auto* pres = app.add_subcommand("presentation", "presentation of the covering group");
  add_common(pres, c, false, false);
  pres->add_option("--psi", psi, "values on vbar_0..vbar_g")->required();

  if (argc <= 1) {
    std::cerr << app.help();
    return kExitUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(c, epi);
    if (*verify) {
      if (verify->count("--regen-fixtures")) return regen_fixtures(regen.empty() ? SPINCOVER_FIXTURE_PATH : regen);
      return cmd_verify(c, vopts, all, theorem, verify->count("--g") > 0);
    }
    if (*classify_o) return cmd_classify_o(c, engine);
    if (*stabilizer) return cmd_stabilizer(c, alpha);
    if (*classify_sp) return cmd_classify_sp(c, mode);
    if (*factor) return cmd_factor(c, matrix, subspace);
    if (*weak) return cmd_weak(c, psi, psi2);
    if (*lift) return cmd_lift(c, matrix);
    if (*project) return cmd_project(c, matrix);
    if (*pres) return cmd_presentation(c, psi);
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DefectError& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return kExitFail;
  }
  std::cerr << app.help();
  return kExitUsage;
}
