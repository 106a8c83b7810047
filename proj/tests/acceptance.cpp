// One PASS/FAIL line per acceptance criterion, each with its time bound.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include <sys/wait.h>

#include "spincover/spincover.hpp"

using namespace spincover;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) detail = why;
    ok = ok && cond;
  }
  void absorb(const CheckReport& rep) { require(rep.passed, rep.name + ": " + rep.failure); }
};

int failures = 0;

void criterion(int id, const std::string& title, double bound_s, const std::function<void(Outcome&)>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= bound_s) out.require(false, "took " + std::to_string(secs) + " s, bound " + std::to_string(bound_s) + " s");
  std::printf("%s %2d %-40s %8.2f s (bound %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs, bound_s,
              out.ok ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
  failures += !out.ok;
}

std::vector<GF2Vec> sample(std::size_t len, std::size_t exhaustive_up_to, std::size_t count, Rng& rng) {
  if (len <= exhaustive_up_to) return all_vectors(len);
  std::vector<GF2Vec> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_vector(len, rng));
  return out;
}

}  // namespace

int main() {
  Rng rng(20240917);
  VerifyOptions opts;

  criterion(1, "counting", 1, [](Outcome& o) {
    for (std::size_t g = 1; g <= 8; ++g) {
      o.require(specials(g).size() == std::size_t{2} << g, "specials g=" + std::to_string(g));
      auto epi = epi_set(g);
      o.require(epi.size() == std::size_t{1} << g, "E_pi g=" + std::to_string(g));
      for (const auto& m : epi) o.require(in_epi(m.phi), "member outside E_pi");
    }
  });

  criterion(2, "orthogonal action orbits g<=5", 30, [&](Outcome& o) {
    for (std::size_t g = 1; g <= 5; ++g) {
      for (const auto& rho : sample(g + 1, 4, 16, rng)) {
        auto params = SectionParams::with_rho(g, rho);
        auto rep = classify_A1(g, params);
        std::string tag = "g=" + std::to_string(g) + " rho=" + rho.to_string();
        o.require(rep.sorted_sizes() == expected_A1_sizes(g), tag + " sizes " + join_sizes(rep.sorted_sizes()));
        std::size_t fixed = 0;
        std::set<FormClass> seen;
        for (const auto& orbit : rep.orbits) {
          fixed += orbit.size() == 1;
          FormClass c = classify_form(orbit.smallest().slice(0, g + 1) + rho);
          for (const auto& p : orbit.members) o.require(classify_form(p.slice(0, g + 1) + rho) == c, tag + " mixed orbit");
          o.require(seen.insert(c).second, tag + " class split over orbits");
          GF2Vec theta = orbit.smallest().slice(0, g + 1) + rho;
          std::string want = c == FormClass::Theta0   ? "psi0"
                             : c == FormClass::Theta1 ? "psi1"
                                                      : "sum" + std::to_string(theta.sum());
          o.require(orbit.label == want, tag + " label " + orbit.label + " expected " + want);
        }
        o.require(fixed == 2, tag + " fixed points " + std::to_string(fixed));
      }
    }
  });

  criterion(3, "stabilizers and their generators", 60, [](Outcome& o) {
    auto run = [&](AlphaRep which, std::size_t g_max, std::size_t needs_from) {
      for (std::size_t g = 1; g <= g_max; ++g) {
        auto rep = stabilizer_check(g, which);
        o.absorb(rep.check);
        o.require(rep.closure_order == rep.stabilizer_order, rep.check.name + " closure differs");
        bool needed = rep.closure_without_transvection != rep.stabilizer_order;
        o.require(needed == (g >= needs_from), rep.check.name + " transvection requirement");
        o.require(rep.transvection_listed == (g >= needs_from), rep.check.name + " transvection listing");
      }
    };
    run(AlphaRep::Alpha1, 5, 4);
    run(AlphaRep::Alpha0, 4, 3);
  });

  criterion(4, "symplectic orbits are Arf level sets", 90, [&](Outcome& o) {
    for (std::size_t g = 1; g <= 3; ++g) {
      for (const auto& r : sample(2 * g, 4, 8, rng)) {
        auto params = SectionParams::with_r(g, r);
        std::string tag = "g=" + std::to_string(g) + " r=" + r.to_string();
        auto c = classify_epi(g, params, g <= 2 ? EpiMode::Both : EpiMode::Kt);
        if (g <= 2) o.require(c.partitions_agree && *c.partitions_agree, tag + " G_s and K_t differ");
        o.require(c.report.sorted_sizes() == expected_epi_sizes(g, params), tag + " sizes " + join_sizes(c.report.sorted_sizes()));
        bool single = c.report.orbits.size() == 1;
        o.require(single == params.exceptional(), tag + " exceptional case");
        std::set<unsigned> levels;
        for (const auto& orbit : c.report.orbits) {
          unsigned a = arf_of(SpecialCovering(Host::TotalO, g, orbit.smallest()), params);
          for (const auto& p : orbit.members) o.require(arf_of(SpecialCovering(Host::TotalO, g, p), params) == a, tag + " Arf varies on orbit");
          levels.insert(a);
        }
        o.require(levels.size() == c.report.orbits.size(), tag + " Arf does not separate");
      }
    }
  });

  criterion(5, "Arf closed form", 30, [](Outcome& o) {
    std::size_t mismatches = 0;
    for (std::size_t g = 1; g <= 3; ++g) {
      for (const auto& r : all_vectors(2 * g)) {
        auto params = SectionParams::with_r(g, r);
        for (const auto& m : epi_set(g)) {
          auto [basis, closed] = arf_closed_form(m.phi, params);
          mismatches += basis != closed;
        }
      }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  });

  criterion(6, "transvection factorization", 30, [&](Outcome& o) {
    for (std::size_t g = 2; g <= 5; ++g) o.absorb(checks::genkt(g, opts, rng));
  });

  criterion(7, "lifts, projections, extensions g<=4", 30, [&](Outcome& o) {
    for (std::size_t g = 1; g <= 4; ++g) {
      o.absorb(checks::symsym(g, opts, rng));
      o.absorb(checks::gene(g, opts, rng));
    }
  });

  criterion(8, "weak equivalence g<=4", 60, [](Outcome& o) {
    for (std::size_t g = 1; g <= 4; ++g) o.absorb(thm_an_crosscheck(g));
  });

  criterion(9, "property suites", 30, [](Outcome& o) {
    for (std::size_t g = 1; g <= 3; ++g) {
      auto sp = FormSpace::symplectic(g);
      auto vecs = all_vectors(2 * g);
      for (const auto& r : vecs) {
        auto params = SectionParams::with_r(g, r);
        for (const auto& a : vecs) {
          for (const auto& b : vecs) {
            GF2Vec rhs = s_eval(params, a) + s_eval(params, b);
            if (sp->pair(a, b)) rhs += TotalO{g}.h();
            o.require(s_eval(params, a + b) == rhs, "quadratic section law");
          }
        }
      }
      for (const auto& vals : vecs) {
        QuadForm q(sp, vals);
        for (const auto& x : vecs) {
          for (const auto& y : vecs) o.require(q(x + y) == (q(x) ^ q(y) ^ sp->pair(x, y)), "refinement law");
        }
      }
    }
    for (std::size_t g = 1; g <= 2; ++g) {
      auto group = enumerate_isometries(FormSpace::symplectic(g));
      for (const auto& r : all_vectors(2 * g)) {
        auto params = SectionParams::with_r(g, r);
        for (const auto& f : group) {
          GF2Mat fs = f_s_matrix(f, params).mat;
          for (const auto& x : all_vectors(2 * g)) o.require(fs.apply(s_eval(params, x)) == s_eval(params, f(x)), "f_s relations");
        }
      }
    }
    for (std::size_t g = 1; g <= 5; ++g) o.absorb(uti_check(g));
    for (std::size_t g = 2; g <= 6; ++g) o.absorb(trans_check(g));
    for (std::size_t g = 1; g <= 4; ++g) {
      for (const auto& rho : all_vectors(g + 1)) o.absorb(jn_check(g, SectionParams::with_rho(g, rho)));
    }
  });

  criterion(10, "verify --all --max-g 3", 120, [](Outcome& o) {
    std::string cmd = std::string(SPINCOVER_CLI_PATH) + " verify --all --max-g 3 > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "exit status " + std::to_string(status));
  });

  return failures;
}
