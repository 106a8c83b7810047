#pragma once

// The theorem registry behind `verify`: every named check replays one result
// over a range of genera, sweeping rho / r exhaustively at small genus and
// sampling them (from a fixed seed) above.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spincover/action_orth.hpp"
#include "spincover/action_symp.hpp"
#include "spincover/liftweak.hpp"

namespace spincover {

struct VerifyOptions {
  /// Run a single genus instead of the registry's default range.
  std::optional<std::size_t> g;
  std::size_t max_g = 3;
  std::optional<GF2Vec> rho;
  std::optional<GF2Vec> r;
  std::uint64_t seed = 20240917;
  /// Filter all of Sp(Z_2, 6) for G_s at genus 3 (slow).
  bool full_gs = false;
  EnumerationLimits limits;
};

using Rng = std::mt19937_64;

inline GF2Vec random_vector(std::size_t len, Rng& rng) { return GF2Vec(len, rng() & low_mask(len)); }

inline GF2Vec random_nonzero(std::size_t len, Rng& rng) {
  for (;;) {
    GF2Vec v = random_vector(len, rng);
    if (!v.is_zero()) return v;
  }
}

/// A product of random transvections, so a random element of Sp(Z_2, 2g)
/// (not uniform, but every element has positive probability).
inline GF2Mat random_symplectic(std::size_t g, Rng& rng, std::size_t factors = 0) {
  auto sp = FormSpace::symplectic(g);
  if (factors == 0) factors = 4 * g + 2;
  GF2Mat m = GF2Mat::identity(2 * g);
  for (std::size_t k = 0; k < factors; ++k) m = m * transvection_matrix(*sp, random_nonzero(2 * g, rng));
  return m;
}

/// A random word in the orthogonal generators.
inline GF2Mat random_orthogonal(std::size_t n, Rng& rng, std::size_t length = 0) {
  auto gens = orth_generators(n);
  if (length == 0) length = 6 * n;
  GF2Mat m = GF2Mat::identity(n);
  for (std::size_t k = 0; k < length; ++k) m = m * gens[rng() % gens.size()].mat();
  return m;
}

/// Vectors to sweep: the fixed one if given, all of them up to `exhaustive`
/// bits, otherwise `samples` random ones (the zero vector first).
inline std::vector<GF2Vec> sweep(std::size_t len, const std::optional<GF2Vec>& fixed, std::size_t exhaustive,
                                 std::size_t samples, Rng& rng) {
  if (fixed) {
    if (fixed->size() != len) throw ShapeError("expected " + std::to_string(len) + " bits, got " + fixed->to_string());
    return {*fixed};
  }
  if (len <= exhaustive) return all_vectors(len);
  std::vector<GF2Vec> out{GF2Vec(len)};
  while (out.size() < samples) out.push_back(random_vector(len, rng));
  return out;
}

/// r values for genus g: all up to genus 2, otherwise r = 0, one exceptional
/// r and random ones up to `samples`.
inline std::vector<GF2Vec> r_sweep(std::size_t g, const VerifyOptions& opts, std::size_t samples, Rng& rng) {
  if (opts.r || g <= 2) return sweep(2 * g, opts.r, 4, samples, rng);
  GF2Vec exc(2 * g);
  for (std::size_t i = 0; i < g; ++i) exc.set(2 * i, 1);
  std::vector<GF2Vec> out{GF2Vec(2 * g), exc};
  while (out.size() < samples) out.push_back(random_vector(2 * g, rng));
  return out;
}

namespace checks {

inline CheckReport kernon(std::size_t g, const VerifyOptions&, Rng&) {
  CheckReport rep("kernon g=" + std::to_string(g));
  for (const auto& psi : specials(g)) {
    auto p = presentation(psi);
    unsigned eps = psi.base_values().sum();
    rep.expect(p.epsilon == eps && weak_class(psi) == eps, [&] { return "epsilon mismatch for psi=" + psi.base_values().to_string(); });
    rep.expect(p.generators.size() == g + 2 && p.generators.back() == "k", [&] { return std::string("generator list"); });
    bool has_k = p.main_relator().find("k^1") != std::string::npos;
    rep.expect(has_k == (eps == 1), [&] { return "relator " + p.main_relator() + " for psi=" + psi.base_values().to_string(); });
    for (std::size_t i = 0; i <= g; ++i) {
      rep.expect(p.embedding_exponents[i] == psi.values()[i], [&] { return "embedding exponent of w" + std::to_string(i); });
    }
  }
  for (const auto& psi : specials(g)) {
    for (const auto& psi2 : specials(g)) {
      rep.expect((presentation(psi).epsilon == presentation(psi2).epsilon) == (weak_class(psi) == weak_class(psi2)),
                 [] { return std::string("epsilon equality differs from class equality"); });
    }
  }
  rep.fact("coverings", std::to_string(specials(g).size()));
  return rep;
}

inline CheckReport jn(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("J_n g=" + std::to_string(g));
  for (const auto& rho : sweep(g + 1, opts.rho, 3, 8, rng)) rep.absorb(jn_check(g, SectionParams::with_rho(g, rho), opts.limits));
  return rep;
}

inline CheckReport mi(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("linear forms g=" + std::to_string(g));
  const std::size_t n = g + 1;
  auto mats = orth_group_or_generators(n, OrbitEngine::Auto, opts.limits);
  auto forms = all_vectors(n);
  auto orbits = orbit_decompose(forms, mats, [](const GF2Vec& p, const GF2Mat& m) { return m.pullback(p); });
  try {
    label_orbits(orbits, [](const GF2Vec& th) { return to_string(classify_form(th)); });
  } catch (const DefectError& e) {
    rep.fail(e.what());
  }
  std::set<std::string> labels;
  for (const auto& o : orbits.orbits) {
    rep.expect(labels.insert(o.label).second, [&] { return "label " + o.label + " covers two orbits"; });
  }
  rep.expect(orbits.orbits[orbits.orbit_of(GF2Vec(n))].size() == 1 && orbits.orbits[orbits.orbit_of(GF2Vec::ones(n))].size() == 1,
             [] { return std::string("zero or all-ones form is not fixed"); });

  auto space = FormSpace::dot(n);
  auto check_pair = [&](const GF2Vec& a, const GF2Vec& b) {
    auto w = equivalence_witness(a, b);
    bool same = classify_form(a) == classify_form(b);
    bool trivial = classify_form(a) == FormClass::Theta0 || classify_form(a) == FormClass::Theta1;
    if (!same) {
      rep.expect(!w, [&] { return "witness for inequivalent " + a.to_string() + " " + b.to_string(); });
    } else if (!trivial || a == b) {
      rep.expect(w && is_isometry(*space, w->mat()) && w->mat().pullback(a) == b,
                 [&] { return "bad witness for " + a.to_string() + " -> " + b.to_string(); });
    }
  };
  if (g <= 3) {
    for (const auto& a : forms) {
      for (const auto& b : forms) check_pair(a, b);
    }
  } else {
    for (std::size_t k = 0; k < 200; ++k) {
      GF2Vec a = random_vector(n, rng);
      GF2Vec b = random_orthogonal(n, rng).pullback(a);
      check_pair(a, b);
    }
  }
  rep.fact("orbit_sizes", join_sizes(orbits.sorted_sizes()));
  return rep;
}

inline CheckReport thm1(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("orthogonal orbits g=" + std::to_string(g));
  const auto expected = expected_A1_sizes(g);
  for (const auto& rho : sweep(g + 1, opts.rho, 4, 16, rng)) {
    auto params = SectionParams::with_rho(g, rho);
    OrbitReport report;
    try {
      report = classify_A1(g, params, OrbitEngine::Auto, opts.limits);
    } catch (const DefectError& e) {
      rep.fail("rho=" + rho.to_string() + ": " + e.what());
      continue;
    }
    rep.expect(report.sorted_sizes() == expected, [&] {
      return "rho=" + rho.to_string() + ": sizes " + join_sizes(report.sorted_sizes()) + " expected " + join_sizes(expected);
    });
    std::set<std::string> labels;
    for (const auto& o : report.orbits) {
      rep.expect(labels.insert(o.label).second, [&] { return "rho=" + rho.to_string() + ": label " + o.label + " repeats"; });
      if (o.label == "psi0" || o.label == "psi1") {
        rep.expect(o.size() == 1, [&] { return "rho=" + rho.to_string() + ": " + o.label + " is not fixed"; });
      }
    }
    if (g + 1 <= kAutoFullOrthDim && !opts.rho) {
      auto by_gens = classify_A1(g, params, OrbitEngine::Generators, opts.limits);
      rep.expect(by_gens.partition() == report.partition(), [&] { return "generator orbits differ at rho=" + rho.to_string(); });
    }
  }
  // right action law and specialness on random triples
  auto params = SectionParams::with_rho(g, opts.rho ? *opts.rho : random_vector(g + 1, rng));
  auto space = FormSpace::dot(g + 1);
  for (std::size_t k = 0; k < 50; ++k) {
    auto f = Isometry::trusted(space, random_orthogonal(g + 1, rng));
    auto f2 = Isometry::trusted(space, random_orthogonal(g + 1, rng));
    auto psi = SpecialCovering::on_n(g, random_vector(g + 1, rng));
    auto lhs = act_A1(act_A1(psi, f, params), f2, params);
    rep.expect(lhs == act_A1(psi, f * f2, params), [] { return std::string("right action law fails"); });
  }
  rep.fact("expected_sizes", join_sizes(expected));
  return rep;
}

inline CheckReport thm1234(std::size_t g, const VerifyOptions& opts, Rng&) {
  CheckReport rep("isotropy g=" + std::to_string(g));
  rep.absorb(stabilizer_check(g, AlphaRep::Alpha1, opts.limits).check);
  if (g <= 4) rep.absorb(stabilizer_check(g, AlphaRep::Alpha0, opts.limits).check);
  return rep;
}

inline CheckReport uti(std::size_t g, const VerifyOptions& opts, Rng&) { return uti_check(g, opts.limits); }
inline CheckReport trans(std::size_t g, const VerifyOptions& opts, Rng&) { return trans_check(g, opts.limits); }
inline CheckReport lemma01(std::size_t g, const VerifyOptions& opts, Rng&) { return lemma01_check(g, opts.limits); }

inline CheckReport prop_s(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("sections g=" + std::to_string(g));
  auto sp = FormSpace::symplectic(g);
  GF2Mat po = p_o_star(g);
  GF2Mat pn = p_n_star(g);
  TotalO tot{g};
  for (const auto& r : r_sweep(g, opts, 8, rng)) {
    auto params = SectionParams::with_r(g, r);
    auto vecs = all_vectors(2 * g);
    for (const auto& a : vecs) {
      GF2Vec sa = s_eval(params, a);
      rep.expect(po.apply(sa) == a, [&] { return "p_o s != id at " + a.to_string(); });
      for (const auto& b : vecs) {
        GF2Vec rhs = sa + s_eval(params, b);
        if (sp->pair(a, b)) rhs += tot.h();
        rep.expect(s_eval(params, a + b) == rhs, [&] { return "quadratic law fails r=" + r.to_string() + " a=" + a.to_string() + " b=" + b.to_string(); });
      }
    }
    for (std::size_t k = 1; k <= 2 * g; ++k) {
      GF2Vec c = OSurface{g}.c(k);
      GF2Vec d = tot.bar(c);
      if (r[k - 1]) d += tot.h();
      rep.expect(s_eval(params, c) == d, [&] { return "s(c_" + std::to_string(k) + ") != d_" + std::to_string(k); });
    }
  }
  for (const auto& rho : sweep(g + 1, opts.rho, 4, 8, rng)) {
    auto params = SectionParams::with_rho(g, rho);
    for (const auto& x : all_vectors(g + 1)) {
      rep.expect(pn.apply(sigma_eval(params, x)) == x, [&] { return "p_n sigma != id at " + x.to_string(); });
    }
  }
  return rep;
}

inline CheckReport prop_2g(std::size_t g, const VerifyOptions&, Rng&) {
  CheckReport rep("E_pi g=" + std::to_string(g));
  auto members = epi_set(g);
  rep.expect(members.size() == (std::size_t{1} << g), [&] { return "E_pi has " + std::to_string(members.size()) + " elements"; });
  GF2Mat tp = tilde_pi_star(g);
  std::set<GF2Vec> from_psi;
  for (const auto& psi : specials(g)) from_psi.insert(tp.pullback(psi.values()));
  std::set<GF2Vec> listed;
  for (const auto& m : members) {
    listed.insert(m.phi.values());
    rep.expect(in_epi(m.phi), [&] { return "member outside E_pi: " + m.phi.values().to_string(); });
    rep.expect(tp.pullback(m.psi_a.values()) == m.phi.values() && tp.pullback(m.psi_b.values()) == m.phi.values(),
               [&] { return "psi does not factor phi=" + m.phi.values().to_string(); });
    rep.expect(m.psi_b.base_values() == m.psi_a.base_values() + GF2Vec::ones(g + 1), [] { return std::string("psi_b != psi_a + 1"); });
  }
  rep.expect(listed == from_psi, [] { return std::string("E_pi differs from the image of the special coverings"); });
  rep.expect(p_n_star(g) * tp == pi_star(g) * p_o_star(g), [] { return std::string("projection square does not commute"); });
  rep.expect(rank(pi_star(g)) == g, [] { return std::string("rank pi_* != g"); });
  for (const auto& k : OSurface{g}.ker_pi_basis()) {
    rep.expect(pi_star(g).apply(k).is_zero(), [&] { return "pi_*(" + k.to_string() + ") != 0"; });
  }
  // Im(pi_*)^perp = Z_2 (v_0 + ... + v_g)
  auto perp = kernel_basis(pi_star(g).transpose());
  rep.expect(perp.size() == 1 && perp[0] == GF2Vec::ones(g + 1), [] { return std::string("Im(pi_*)^perp is not spanned by the all-ones vector"); });
  rep.fact("size", std::to_string(members.size()));
  return rep;
}

inline CheckReport bot(std::size_t g, const VerifyOptions&, Rng&) {
  CheckReport rep("common kernel g=" + std::to_string(g));
  // an independent subset spans the same forms and fits the solver
  std::vector<GF2Vec> rows;
  for (const auto& phi : epi_values(g)) {
    rows.push_back(phi);
    if (rank(GF2Mat::from_rows(rows, 2 * g + 1)) < rows.size()) rows.pop_back();
  }
  auto common = kernel_basis(GF2Mat::from_rows(rows, 2 * g + 1));
  auto ker = kernel_basis(tilde_pi_star(g));
  auto both = common;
  both.insert(both.end(), ker.begin(), ker.end());
  std::size_t rc = rank(GF2Mat::from_rows(common, 2 * g + 1));
  std::size_t rk = rank(GF2Mat::from_rows(ker, 2 * g + 1));
  std::size_t rb = rank(GF2Mat::from_rows(both, 2 * g + 1));
  rep.expect(rc == rk && rk == rb && rk == g, [&] {
    return "dims " + std::to_string(rc) + "/" + std::to_string(rk) + "/" + std::to_string(rb);
  });
  auto named = TotalO{g}.ker_tilde_pi_basis();
  named.insert(named.end(), ker.begin(), ker.end());
  rep.expect(rank(GF2Mat::from_rows(named, 2 * g + 1)) == g, [] { return std::string("kernel is not spanned by ebar'_i"); });
  return rep;
}

inline CheckReport gs(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("G_s g=" + std::to_string(g));
  auto sp = FormSpace::symplectic(g);
  auto epi = epi_values(g);
  std::set<GF2Vec> epi_set_values(epi.begin(), epi.end());
  auto vecs = all_vectors(2 * g);
  auto relations = [&](const GF2Mat& f, const SectionParams& params) {
    GF2Mat fs = f_s_raw(f, params.r());
    for (const auto& x : vecs) {
      if (!(fs.apply(s_eval(params, x)) == s_eval(params, f.apply(x)))) return false;
    }
    return true;
  };
  for (const auto& r : r_sweep(g, opts, 4, rng)) {
    auto params = SectionParams::with_r(g, r);
    GF2Vec r0 = r;
    for (std::size_t i = 0; i < g; ++i) r0.set(2 * i + 1, r[2 * i] ^ 1u);
    auto params_t0 = SectionParams::with_r(g, r0);
    auto visit = [&](const GF2Mat& f) {
      GF2Mat fs = f_s_raw(f, r);
      bool member = detail::in_Gs_raw(fs, g);
      bool preserves = true;
      for (const auto& phi : epi) preserves = preserves && epi_set_values.count(fs.pullback(phi));
      rep.expect(member == preserves, [&] { return "G_s membership differs from preserving E_pi:\n" + f.to_string(); });
      rep.expect(relations(f, params), [&] { return "f_s(s(x)) != s(f(x)) for\n" + f.to_string(); });
      if (detail::in_Kt_raw(f, params)) {
        rep.expect(detail::in_Kt_raw(f, params_t0), [&] { return "K_t element outside K_0:\n" + f.to_string(); });
      }
    };
    if (g <= 2) {
      for_each_isometry(*sp, visit, opts.limits);
    } else {
      for (std::size_t k = 0; k < 100; ++k) visit(random_symplectic(g, rng));
    }
    for (std::size_t k = 0; k < 50; ++k) {
      GF2Mat a = random_symplectic(g, rng), b = random_symplectic(g, rng);
      rep.expect(f_s_raw(a * b, r) == f_s_raw(a, r) * f_s_raw(b, r), [] { return std::string("(fg)_s != f_s g_s"); });
    }
    rep.absorb(kt_in_gs_check(g, params, opts.limits));
  }
  return rep;
}

inline CheckReport genkt(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("transvection generation g=" + std::to_string(g));
  auto sp = FormSpace::symplectic(g);
  for (const auto& r : r_sweep(g, opts, 4, rng)) {
    auto params = SectionParams::with_r(g, r);
    auto v = kt_subspace(params);
    auto replay = [&](const GF2Mat& f) {
      auto ys = factorize_transvections(Isometry::trusted(sp, f), v);
      rep.expect(transvection_product(*sp, ys) == f, [&] { return "product differs from\n" + f.to_string(); });
      rep.expect(ys.size() <= 4 * g, [&] { return "factorization of length " + std::to_string(ys.size()); });
      for (const auto& y : ys) {
        for (const auto& w : v) rep.expect(sp->pair(y, w) == 0, [&] { return "factor " + y.to_string() + " not orthogonal to V"; });
      }
    };
    std::vector<GF2Mat> gens;
    for (const auto& t : kt_generators(g, params)) gens.push_back(t.mat());
    if (g <= 2) {
      std::vector<GF2Mat> filtered;
      for_each_isometry(*sp, [&](const GF2Mat& f) {
        if (detail::in_Kt_raw(f, params)) filtered.push_back(f);
      }, opts.limits);
      std::sort(filtered.begin(), filtered.end());
      auto closed = matrix_closure(gens, 2 * g);
      rep.expect(closed == filtered, [&] {
        return "r=" + r.to_string() + ": closure " + std::to_string(closed.size()) + " vs K_t " + std::to_string(filtered.size());
      });
      for (const auto& f : filtered) replay(f);
    } else {
      std::vector<GF2Vec> admissible;
      for (const auto& y : span_elements(OSurface{g}.ker_pi_basis(), 2 * g)) {
        if (!y.is_zero() && !sp->pair(y, params.t())) admissible.push_back(y);
      }
      for (std::size_t k = 0; k < 100 && !admissible.empty(); ++k) {
        GF2Mat f = GF2Mat::identity(2 * g);
        for (std::size_t j = 0; j < 2 * g; ++j) f = f * transvection_matrix(*sp, admissible[rng() % admissible.size()]);
        replay(f);
      }
    }
  }
  return rep;
}

inline CheckReport thm24(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("Arf classification g=" + std::to_string(g));
  for (const auto& r : r_sweep(g, opts, 8, rng)) {
    auto params = SectionParams::with_r(g, r);
    EpiMode mode = (g <= 2 || (opts.full_gs && g <= kGsMaxGenus)) ? EpiMode::Both : EpiMode::Kt;
    EpiClassification c;
    try {
      c = classify_epi(g, params, mode, opts.limits);
    } catch (const DefectError& e) {
      rep.fail("r=" + r.to_string() + ": Arf not constant on an orbit: " + e.what());
      continue;
    }
    if (c.partitions_agree) rep.expect(*c.partitions_agree, [&] { return "r=" + r.to_string() + ": G_s and K_t orbits differ"; });
    auto expected = expected_epi_sizes(g, params);
    rep.expect(c.report.sorted_sizes() == expected, [&] {
      return "r=" + r.to_string() + ": sizes " + join_sizes(c.report.sorted_sizes()) + " expected " + join_sizes(expected);
    });
    std::set<std::string> labels;
    for (const auto& o : c.report.orbits) labels.insert(o.label);
    rep.expect(labels.size() == c.report.orbits.size(), [&] { return "r=" + r.to_string() + ": Arf does not separate orbits"; });
    for (const auto& m : epi_set(g)) {
      auto [basis, closed] = arf_closed_form(m.phi, params);
      rep.expect(basis == closed, [&] { return "r=" + r.to_string() + " phi=" + m.phi.values().to_string() + ": Arf closed form mismatch"; });
    }
  }
  return rep;
}

inline CheckReport cor(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("transvection witnesses g=" + std::to_string(g));
  GF2Mat tp = tilde_pi_star(g);
  for (const auto& r : r_sweep(g, opts, 4, rng)) {
    auto params = SectionParams::with_r(g, r);
    auto orbits = classify_epi(g, params, EpiMode::Kt, opts.limits).report;
    for (const auto& psi : specials(g)) {
      for (const auto& psi2 : specials(g)) {
        GF2Vec phi = tp.pullback(psi.values());
        GF2Vec phi2 = tp.pullback(psi2.values());
        auto w = cor_witness(psi, psi2, params);
        GF2Vec delta = psi.base_values() + psi2.base_values();
        unsigned cond = 0;
        for (std::size_t j = 1; j <= g; ++j) cond ^= params.beta()[j - 1] & (delta[0] ^ delta[j]);
        bool same = orbits.same_orbit(phi, phi2);
        rep.expect(w.has_value() == (cond == 0) && w.has_value() == same, [&] {
          return "r=" + r.to_string() + " psi=" + psi.base_values().to_string() + " psi'=" + psi2.base_values().to_string();
        });
        if (w) {
          rep.expect(in_Kt(*w, params), [] { return std::string("witness outside K_t"); });
          rep.expect(f_s_raw(w->mat(), r).pullback(phi) == phi2, [&] {
            return "witness does not carry psi=" + psi.base_values().to_string() + " to psi'=" + psi2.base_values().to_string();
          });
        }
      }
    }
  }
  return rep;
}

/// Matrices [[A,0],[C,D]] in the basis (e, e') with D = (A^t)^-1 and A^t C
/// symmetric, returned in c-coordinates.
inline GF2Mat block_symplectic(const GF2Mat& a, const GF2Mat& sym, const OSurface& o) {
  const std::size_t g = o.g;
  GF2Mat d = *mat_inv(a.transpose());
  GF2Mat m(2 * g, 2 * g);
  m.set_block(0, 0, a);
  m.set_block(g, 0, d * sym);
  m.set_block(g, g, d);
  GF2Mat p = o.change_to_e_eprime();
  return p * m * *mat_inv(p);
}

inline std::vector<GF2Mat> symmetric_matrices(std::size_t g) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i; j < g; ++j) slots.emplace_back(i, j);
  }
  std::vector<GF2Mat> out;
  for (Word bits = 0; bits < (Word{1} << slots.size()); ++bits) {
    GF2Mat s(g, g);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((bits >> k) & 1u) {
        s.set(slots[k].first, slots[k].second, 1);
        s.set(slots[k].second, slots[k].first, 1);
      }
    }
    out.push_back(s);
  }
  return out;
}

inline CheckReport symsym(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("lifts and projections g=" + std::to_string(g));
  const std::size_t expected_count = g % 2 ? 2 : 1;
  auto ortho = enumerate_isometries(FormSpace::dot(g + 1), opts.limits);
  for (const auto& big_f : ortho) {
    auto f = lift_to_symp(big_f);
    rep.expect(is_lift_pair(f, big_f), [&] { return "lift does not commute with pi_* for\n" + big_f.mat().to_string(); });
    auto back = project_to_orth(f);
    rep.expect(back.size() == expected_count && std::find(back.begin(), back.end(), big_f) != back.end(),
               [&] { return "roundtrip misses\n" + big_f.mat().to_string(); });
  }
  rep.fact("orthogonal_maps", std::to_string(ortho.size()));

  OSurface o{g};
  auto sp = o.space();
  GF2Mat s = restricted_gram(g);
  auto syms = symmetric_matrices(g);
  std::size_t admissible = 0, block_maps = 0;
  for (Word bits = 0; bits < (Word{1} << (g * g)); ++bits) {
    GF2Mat a(g, g);
    for (std::size_t k = 0; k < g * g; ++k) {
      if ((bits >> k) & 1u) a.set(k / g, k % g, 1);
    }
    if (rank(a) != g) continue;
    bool ok = a.transpose() * s * a == s;
    admissible += ok;
    std::vector<GF2Mat> cs;
    if (g <= 3 || ok) {
      cs = syms;
    } else {
      cs = {syms.front(), syms[rng() % syms.size()]};
    }
    for (const auto& c : cs) {
      ++block_maps;
      auto f = Isometry::make(sp, block_symplectic(a, c, o));
      auto proj = project_to_orth(f);
      rep.expect(proj.size() == (ok ? expected_count : 0), [&] {
        return std::to_string(proj.size()) + " projections for A=\n" + a.to_string();
      });
      for (const auto& big_f : proj) rep.expect(is_lift_pair(f, big_f), [] { return std::string("projection does not commute with pi_*"); });
    }
  }
  rep.fact("admissible_A", std::to_string(admissible));
  rep.fact("block_maps", std::to_string(block_maps));

  // maps that move ker(pi_*) are rejected
  for (std::size_t k = 0; k < 20; ++k) {
    GF2Mat f = random_symplectic(g, rng);
    GF2Mat m = *mat_inv(o.change_to_e_eprime()) * f * o.change_to_e_eprime();
    if (m.block(0, g, g, g) == GF2Mat(g, g)) continue;
    bool threw = false;
    try {
      project_to_orth(Isometry::trusted(sp, f));
    } catch (const DomainError&) {
      threw = true;
    }
    rep.expect(threw, [] { return std::string("map moving ker pi_* was projected"); });
  }
  return rep;
}

/// Extension counts for every hyperplane E^perp of Z_2^{g+1}, every isometry
/// of it and every v outside it.
inline CheckReport gene(std::size_t g, const VerifyOptions& opts, Rng&) {
  CheckReport rep("hyperplane extensions g=" + std::to_string(g));
  const std::size_t n = g + 1;
  const GF2Vec ones = GF2Vec::ones(n);
  std::size_t instances = 0;
  for (const auto& big_e : all_vectors(n)) {
    if (big_e.is_zero()) continue;
    GF2Mat row = GF2Mat::from_rows({big_e}, n);
    auto h_basis = kernel_basis(row);
    const std::size_t k = h_basis.size();
    GF2Mat gram(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) gram.set(i, j, dot(h_basis[i], h_basis[j]));
    }
    bool e_in_h = dot(big_e, big_e) == 0;
    std::vector<std::vector<GF2Vec>> images;
    for_each_isometry(*FormSpace::general(gram), [&](const GF2Mat& m) {
      std::vector<GF2Vec> img;
      for (std::size_t j = 0; j < k; ++j) {
        GF2Vec x(n);
        for (std::size_t i = 0; i < k; ++i) {
          if (m(i, j)) x += h_basis[i];
        }
        img.push_back(x);
      }
      images.push_back(img);
    }, opts.limits);
    for (const auto& img : images) {
      for (const auto& v : all_vectors(n)) {
        if (dot(v, big_e) == 0) continue;
        ++instances;
        auto ext = lemma_gene_extend(h_basis, img, big_e, v);
        rep.expect(ext.solutions.size() == 2 && ext.solutions[0] + ext.solutions[1] == big_e,
                   [&] { return "E=" + big_e.to_string() + ": solutions do not differ by E"; });
        rep.expect(ext.admissible.size() == (e_in_h ? 2u : 1u),
                   [&] { return "E=" + big_e.to_string() + ": " + std::to_string(ext.admissible.size()) + " admissible"; });
        if (big_e == ones) {
          for (const auto& v2 : ext.admissible) {
            rep.expect(dot(v2, v2) == dot(v, v), [] { return std::string("v'.v' != v.v"); });
            GF2Mat big_f = assemble_extension(h_basis, img, v, v2);
            rep.expect(is_isometry(*FormSpace::dot(n), big_f), [] { return std::string("extension is not orthogonal"); });
          }
        }
      }
    }
  }
  rep.fact("instances", std::to_string(instances));
  return rep;
}

inline CheckReport ader(std::size_t g, const VerifyOptions& opts, Rng& rng) {
  CheckReport rep("realizable automorphisms g=" + std::to_string(g));
  auto group = realizable_group(g, opts.limits);
  std::set<GF2Mat> members;
  for (const auto& a : group) {
    members.insert(a.mat);
    rep.expect(is_realizable(a), [&] { return "listed automorphism fails the criterion:\n" + a.mat.to_string(); });
  }
  std::size_t orth_order = enumerate_isometries(FormSpace::dot(g + 1), opts.limits).size();
  rep.expect(members.size() == orth_order << g, [&] { return "order " + std::to_string(members.size()); });
  for (const auto& a : group) {
    for (const auto& b : group) {
      if (!members.count(a.mat * b.mat)) {
        rep.fail("not closed under composition");
        break;
      }
    }
    auto inv = mat_inv(a.mat);
    rep.expect(inv && members.count(*inv), [] { return std::string("not closed under inverses"); });
    for (const auto& psi : specials(g)) {
      rep.expect(a.mat.pullback(psi.values())[g + 1] == 1, [] { return std::string("image of a special covering is not special"); });
    }
  }
  // every A_1^sigma lift is realizable
  for (const auto& rho : sweep(g + 1, opts.rho, 4, 8, rng)) {
    for (const auto& m : orth_group_or_generators(g + 1, OrbitEngine::FullGroup, opts.limits)) {
      rep.expect(is_realizable(TotalAut{g, lift_matrix(m, rho)}), [&] { return "F_sigma not realizable, rho=" + rho.to_string(); });
    }
  }
  // moving h, odd delta, or a non-orthogonal block is rejected
  TotalAut moved{g, GF2Mat::identity(g + 2)};
  moved.mat.set(0, g + 1, 1);
  rep.expect(!is_realizable(moved), [] { return std::string("automorphism moving h accepted"); });
  rep.expect(!is_realizable(make_total_aut(GF2Mat::identity(g + 1), GF2Vec::unit(g + 1, 0))), [] { return std::string("odd delta accepted"); });
  rep.fact("order", std::to_string(members.size()));
  return rep;
}

inline CheckReport an(std::size_t g, const VerifyOptions& opts, Rng&) { return thm_an_crosscheck(g, opts.limits); }

}  // namespace checks

struct TheoremEntry {
  std::string name;
  std::string title;
  /// Genera run by default, capped by --max-g.
  std::size_t max_g;
  std::function<CheckReport(std::size_t, const VerifyOptions&, Rng&)> run;
};

inline const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> registry = {
      {"kernon", "presentation of the covering group", 8, checks::kernon},
      {"jn", "J_n is a monomorphism", 4, checks::jn},
      {"mi", "classification of linear forms", 5, checks::mi},
      {"1", "orbits of the orthogonal action", 5, checks::thm1},
      {"1234", "isotropy subgroups and generators", 5, checks::thm1234},
      {"uti", "orthogonal maps fix the all-ones vector", 5, checks::uti},
      {"trans", "transitivity on H_0 and H_1", 5, checks::trans},
      {"01", "fixed points and their sums", 5, checks::lemma01},
      {"s", "quadratic and linear sections", 3, checks::prop_s},
      {"2g", "E_pi has 2^g elements", 8, checks::prop_2g},
      {"bot", "common kernel of E_pi", 8, checks::bot},
      {"gs", "G_s and K_t membership", 3, checks::gs},
      {"genKt", "K_t is generated by transvections", 5, checks::genkt},
      {"2=4", "Arf classification of E_pi", 3, checks::thm24},
      {"cor", "transvection witnesses", 2, checks::cor},
      {"symsym", "lifting and projecting between O and Sp", 4, checks::symsym},
      {"gene", "extensions from a hyperplane", 4, checks::gene},
      {"ader", "realizable automorphisms form a group", 3, checks::ader},
      {"an", "weak equivalence", 4, checks::an},
  };
  return registry;
}

inline const TheoremEntry* find_theorem(const std::string& name) {
  for (const auto& t : theorem_registry()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

struct TheoremResult {
  std::string name;
  std::vector<std::size_t> genera;
  CheckReport report;
  double seconds = 0;
};

inline std::vector<std::size_t> genera_for(const TheoremEntry& t, const VerifyOptions& opts) {
  if (opts.g) return {*opts.g};
  std::vector<std::size_t> out;
  for (std::size_t g = 1; g <= std::min(t.max_g, opts.max_g); ++g) out.push_back(g);
  return out;
}

inline TheoremResult run_theorem(const TheoremEntry& t, const VerifyOptions& opts) {
  TheoremResult res{t.name, genera_for(t, opts), CheckReport(t.name), 0};
  auto start = std::chrono::steady_clock::now();
  for (std::size_t g : res.genera) {
    std::seed_seq seq{opts.seed, static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(std::hash<std::string>{}(t.name))};
    Rng rng(seq);
    try {
      res.report.absorb(t.run(g, opts, rng));
    } catch (const GuardError& e) {
      res.report.fail("g=" + std::to_string(g) + ": " + e.what());
    } catch (const DefectError& e) {
      res.report.fail("g=" + std::to_string(g) + ": defect: " + e.what());
    }
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

inline std::vector<TheoremResult> run_all(const VerifyOptions& opts) {
  std::vector<TheoremResult> out;
  for (const auto& t : theorem_registry()) out.push_back(run_theorem(t, opts));
  return out;
}

}  // namespace spincover
