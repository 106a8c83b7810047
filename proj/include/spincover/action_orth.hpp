#pragma once

// The orthogonal group O(Z_2^{g+1}) acting on the special coverings of the
// total space over N_{g+1} through the lifts F_sigma.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "spincover/forms.hpp"
#include "spincover/homology.hpp"
#include "spincover/orbits.hpp"
#include "spincover/report.hpp"

namespace spincover {

/// The lift [[A,0],[d,1]] of an orthogonal map to total N.
struct LiftedAut {
  std::size_t g;
  GF2Mat mat;
};

/// Lift fixed by F_sigma(sigma(v_i)) = sigma(F(v_i)) and F_sigma(h) = h, so
/// d_j = sum_i rho_i a_ij + rho_j, i.e. d = rho A + rho.
inline GF2Mat lift_matrix(const GF2Mat& a, const GF2Vec& rho) {
  const std::size_t n = a.rows();
  GF2Mat m(n + 1, n + 1);
  m.set_block(0, 0, a);
  m.set_row(n, (a.pullback(rho) + rho).concat(GF2Vec(1, 1)));
  return m;
}

inline LiftedAut lift_F_sigma(const Isometry& f, const SectionParams& params) {
  const std::size_t n = params.g() + 1;
  if (f.mat().rows() != n || !f.mat().is_square()) throw ShapeError("lift_F_sigma: map must act on Z_2^{g+1}");
  if (!is_isometry(*FormSpace::dot(n), f.mat())) throw DomainError("lift_F_sigma: map is not orthogonal");
  return {params.g(), lift_matrix(f.mat(), params.rho())};
}

/// psi -> psi o F_sigma.
inline SpecialCovering act_A1(const SpecialCovering& psi, const Isometry& f, const SectionParams& params) {
  if (psi.host() != Host::TotalN || psi.g() != params.g()) throw DomainError("act_A1: covering must live on total N");
  auto lifted = lift_F_sigma(f, params);
  return SpecialCovering(Host::TotalN, psi.g(), lifted.mat.pullback(psi.values()));
}

/// theta = psi o sigma, a linear form on the N-surface.
inline GF2Vec theta_of(const SpecialCovering& psi, const SectionParams& params) {
  return psi.base_values() + params.rho();
}

inline GF2Mat permutation_matrix(const std::vector<std::size_t>& image) {
  const std::size_t n = image.size();
  GF2Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set(image[j], j, 1);
  return m;
}

/// Swaps coordinates i and j.
inline GF2Mat swap_matrix(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<std::size_t> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = k;
  std::swap(img[i], img[j]);
  return permutation_matrix(img);
}

/// Adjacent transpositions plus every transvection T_a with weight(a) = 4.
inline std::vector<Isometry> orth_generators(std::size_t n) {
  auto space = FormSpace::dot(n);
  std::vector<Isometry> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(Isometry::trusted(space, swap_matrix(n, i, i + 1)));
  if (n >= 4 && n <= 20) {
    for (Word w = 0; w < (Word{1} << n); ++w) {
      if (std::popcount(w) == 4) gens.push_back(transvection(space, GF2Vec(n, w)));
    }
  }
  return gens;
}

enum class FormClass { Theta0, Theta1, Orb0, Orb1 };

inline std::string to_string(FormClass c) {
  switch (c) {
    case FormClass::Theta0:
      return "theta0";
    case FormClass::Theta1:
      return "theta1";
    case FormClass::Orb0:
      return "orb0";
    case FormClass::Orb1:
      return "orb1";
  }
  return "?";
}

inline FormClass classify_form(const GF2Vec& theta) {
  if (theta.is_zero()) return FormClass::Theta0;
  if (theta == GF2Vec::ones(theta.size())) return FormClass::Theta1;
  return theta.sum() ? FormClass::Orb1 : FormClass::Orb0;
}

namespace detail {

/// Orthogonal T with theta o T = (1, lambda, 0, ..., 0) where lambda =
/// sum(theta) + 1: a coordinate permutation putting a 0 then a 1 in front,
/// followed by T_a with a = (1, 1+lambda, m_2, ..., m_g).
inline GF2Mat reduce_form(const GF2Vec& theta) {
  const std::size_t n = theta.size();
  std::size_t zero = n, one = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!theta[i] && zero == n) zero = i;
    if (theta[i] && one == n) one = i;
  }
  if (zero == n || one == n) throw DomainError("reduce_form: constant form has no reduction");
  std::vector<std::size_t> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = k;
  // put `zero` at position 0 and `one` at position 1
  std::swap(img[0], img[zero]);
  std::size_t at = static_cast<std::size_t>(std::find(img.begin(), img.end(), one) - img.begin());
  std::swap(img[1], img[at]);
  GF2Mat perm = permutation_matrix(img);
  GF2Vec m = perm.pullback(theta);

  unsigned lambda = 0;
  for (std::size_t i = 2; i < n; ++i) lambda ^= m[i];
  GF2Vec a(n);
  a.set(0, 1);
  a.set(1, 1u ^ lambda);
  for (std::size_t i = 2; i < n; ++i) a.set(i, m[i]);
  return perm * transvection_matrix(*FormSpace::dot(n), a);
}

}  // namespace detail

/// An orthogonal T with theta o T = theta', or nullopt when the two forms lie
/// in different orbits.
inline std::optional<Isometry> equivalence_witness(const GF2Vec& theta, const GF2Vec& theta2) {
  if (theta.size() != theta2.size()) throw ShapeError("equivalence_witness: forms on different spaces");
  auto space = FormSpace::dot(theta.size());
  if (theta == theta2) return Isometry::identity(space);
  if (classify_form(theta) != classify_form(theta2)) return std::nullopt;
  auto c = classify_form(theta);
  if (c == FormClass::Theta0 || c == FormClass::Theta1) return std::nullopt;
  GF2Mat t1 = detail::reduce_form(theta);
  GF2Mat t2 = detail::reduce_form(theta2);
  return Isometry::trusted(space, t1 * *mat_inv(t2));
}

enum class OrbitEngine { Auto, FullGroup, Generators };

/// Largest N-surface dimension for which Auto uses the full group.
inline constexpr std::size_t kAutoFullOrthDim = 6;

inline std::vector<GF2Mat> orth_group_or_generators(std::size_t n, OrbitEngine engine,
                                                    const EnumerationLimits& limits) {
  bool full = engine == OrbitEngine::FullGroup || (engine == OrbitEngine::Auto && n <= kAutoFullOrthDim);
  std::vector<GF2Mat> mats;
  if (full) {
    for_each_isometry(*FormSpace::dot(n), [&](const GF2Mat& m) { mats.push_back(m); }, limits);
  } else {
    for (const auto& g : orth_generators(n)) mats.push_back(g.mat());
  }
  return mats;
}

inline std::string a1_label(const GF2Vec& psi_values, const SectionParams& params) {
  GF2Vec theta = psi_values.slice(0, params.g() + 1) + params.rho();
  switch (classify_form(theta)) {
    case FormClass::Theta0:
      return "psi0";
    case FormClass::Theta1:
      return "psi1";
    default:
      return "sum" + std::to_string(theta.sum());
  }
}

/// Orbits of A_1^sigma on all 2^{g+1} special coverings, sorted by (size,
/// smallest member). Labels: psi0, psi1 for the fixed points, sum0/sum1 for
/// the remaining classes by sum(psi(vbar_i) + rho_i).
inline OrbitReport classify_A1(std::size_t g, const SectionParams& params, OrbitEngine engine = OrbitEngine::Auto,
                               const EnumerationLimits& limits = {}) {
  if (params.g() != g) throw ShapeError("classify_A1: parameters for another genus");
  std::vector<GF2Mat> lifts;
  for (const auto& a : orth_group_or_generators(g + 1, engine, limits)) lifts.push_back(lift_matrix(a, params.rho()));
  std::vector<GF2Vec> points;
  for (const auto& s : specials(g)) points.push_back(s.values());
  auto report = orbit_decompose(points, lifts, [](const GF2Vec& p, const GF2Mat& m) { return m.pullback(p); });
  label_orbits(report, [&](const GF2Vec& p) { return a1_label(p, params); });
  report.sort_by_size();
  return report;
}

/// Sizes of the four classes predicted by the orbit theorem for genus g:
/// two fixed points, then the sum-0 and sum-1 classes.
inline std::vector<std::size_t> expected_A1_sizes(std::size_t g) {
  std::size_t half = std::size_t{1} << g;
  if (g == 1) return {1, 1, 2};
  if (g % 2 == 0) return {1, 1, half - 1, half - 1};
  return {1, 1, half - 2, half};
}

/// J_n is a homomorphism into the invertible matrices and injective on the
/// whole orthogonal group.
inline CheckReport jn_check(std::size_t g, const SectionParams& params, const EnumerationLimits& limits = {}) {
  CheckReport rep("J_n monomorphism g=" + std::to_string(g) + " rho=" + params.rho().to_string());
  std::vector<GF2Mat> group;
  for_each_isometry(*FormSpace::dot(g + 1), [&](const GF2Mat& m) { group.push_back(m); }, limits);
  std::vector<GF2Mat> lifts;
  std::unordered_set<GF2Mat> distinct;
  for (const auto& a : group) {
    lifts.push_back(lift_matrix(a, params.rho()));
    distinct.insert(lifts.back());
    rep.expect(rank(lifts.back()) == g + 2, [&] { return "lift not invertible for\n" + a.to_string(); });
  }
  rep.expect(distinct.size() == group.size(), [] { return std::string("two orthogonal maps share a lift"); });
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j) {
      if (!(lift_matrix(group[i] * group[j], params.rho()) == lifts[i] * lifts[j])) {
        rep.fail("J(AB) != J(A)J(B) for A=\n" + group[i].to_string() + "\nB=\n" + group[j].to_string());
      }
      ++rep.cases;
    }
  }
  rep.fact("group_order", std::to_string(group.size()));
  return rep;
}

/// Finds the two fixed points of the action for each rho by orbit
/// computation and checks the sums of their values on vbar_i.
inline CheckReport lemma01_check(std::size_t g, const EnumerationLimits& limits = {}) {
  CheckReport rep("fixed-point sums g=" + std::to_string(g));
  for (const auto& rho : all_vectors(g + 1)) {
    auto params = SectionParams::with_rho(g, rho);
    auto report = classify_A1(g, params, OrbitEngine::Auto, limits);
    std::vector<GF2Vec> fixed;
    for (const auto& o : report.orbits) {
      if (o.size() == 1) fixed.push_back(o.smallest());
    }
    if (!rep.expect(fixed.size() == 2, [&] { return "rho=" + rho.to_string() + ": fixed point count " + std::to_string(fixed.size()); })) {
      continue;
    }
    for (const auto& psi : fixed) {
      GF2Vec theta = psi.slice(0, g + 1) + rho;
      unsigned s = psi.slice(0, g + 1).sum();
      if (theta.is_zero()) {
        rep.expect(s == rho.sum(), [&] { return "psi0 sum mismatch at rho=" + rho.to_string(); });
      } else {
        rep.expect(theta == GF2Vec::ones(g + 1), [&] { return "fixed point is neither psi0 nor psi1"; });
        rep.expect(s == ((g + 1 + rho.sum()) & 1u), [&] { return "psi1 sum mismatch at rho=" + rho.to_string(); });
      }
    }
  }
  return rep;
}

enum class AlphaRep { Alpha0, Alpha1 };

/// alpha_0 = (1,1,0,...,0), alpha_1 = (1,0,...,0) on v_0..v_g.
inline GF2Vec alpha_form(std::size_t g, AlphaRep which) {
  GF2Vec a = GF2Vec::unit(g + 1, 0);
  if (which == AlphaRep::Alpha0) a.set(1, 1);
  return a;
}

/// The generators of the isotropy subgroup as listed by the stabilizer
/// theorem; the transvection is appended when g reaches its threshold
/// (g >= 4 for alpha_1, g >= 3 for alpha_0) and include_transvection is set.
inline std::vector<GF2Mat> stabilizer_generators(std::size_t g, AlphaRep which, bool include_transvection,
                                                 const EnumerationLimits& limits = {}) {
  const std::size_t n = g + 1;
  auto space = FormSpace::dot(n);
  std::vector<GF2Mat> gens;
  if (which == AlphaRep::Alpha1) {
    for (std::size_t i = 1; i + 1 <= g; ++i) gens.push_back(swap_matrix(n, i, i + 1));
    if (g >= 4 && include_transvection) {
      gens.push_back(transvection_matrix(*space, GF2Vec::parse("01111").concat(GF2Vec(n - 5))));
    }
  } else {
    gens.push_back(swap_matrix(n, 0, 1));
    // every element of O(Z_2^{g-1}) acting on v_2..v_g
    for_each_isometry(*FormSpace::dot(g - 1), [&](const GF2Mat& m) {
      GF2Mat big = GF2Mat::identity(n);
      big.set_block(2, 2, m);
      gens.push_back(big);
    }, limits);
    if (g >= 3 && include_transvection) {
      gens.push_back(transvection_matrix(*space, GF2Vec::parse("1111").concat(GF2Vec(n - 4))));
    }
  }
  return gens;
}

struct StabilizerReport {
  CheckReport check;
  std::size_t group_order = 0;
  std::size_t stabilizer_order = 0;
  std::size_t closure_order = 0;
  std::size_t closure_without_transvection = 0;
  bool transvection_listed = false;
};

inline StabilizerReport stabilizer_check(std::size_t g, AlphaRep which, const EnumerationLimits& limits = {}) {
  require_genus(g);
  const std::size_t n = g + 1;
  const std::string tag = which == AlphaRep::Alpha0 ? "alpha0" : "alpha1";
  StabilizerReport out{CheckReport("stabilizer " + tag + " g=" + std::to_string(g))};
  auto& rep = out.check;
  GF2Vec alpha = alpha_form(g, which);

  std::vector<GF2Mat> stab;
  std::size_t order = 0;
  for_each_isometry(*FormSpace::dot(n), [&](const GF2Mat& m) {
    ++order;
    if (m.pullback(alpha) == alpha) stab.push_back(m);
  }, limits);
  std::sort(stab.begin(), stab.end());
  out.group_order = order;
  out.stabilizer_order = stab.size();

  out.transvection_listed = which == AlphaRep::Alpha1 ? g >= 4 : g >= 3;
  auto closure_full = matrix_closure(stabilizer_generators(g, which, true, limits), n);
  auto closure_bare = matrix_closure(stabilizer_generators(g, which, false, limits), n);
  out.closure_order = closure_full.size();
  out.closure_without_transvection = closure_bare.size();
  rep.expect(closure_full == stab, [&] {
    return "generator closure (" + std::to_string(closure_full.size()) + ") differs from stabilizer (" +
           std::to_string(stab.size()) + ")";
  });
  if (out.transvection_listed) {
    rep.expect(closure_bare.size() < stab.size(), [] { return std::string("listed transvection is redundant"); });
  }

  if (which == AlphaRep::Alpha1) {
    // Stab(alpha_1) = {F : F(v_0) = v_0}, restricting bijectively onto O(Z_2^g).
    std::vector<GF2Mat> fixing_v0;
    for_each_isometry(*FormSpace::dot(n), [&](const GF2Mat& m) {
      if (m.apply(GF2Vec::unit(n, 0)) == GF2Vec::unit(n, 0)) fixing_v0.push_back(m);
    }, limits);
    std::sort(fixing_v0.begin(), fixing_v0.end());
    rep.expect(fixing_v0 == stab, [] { return std::string("stabilizer differs from {F : F(v_0) = v_0}"); });
    std::vector<GF2Mat> restricted;
    for (const auto& m : stab) restricted.push_back(m.block(1, 1, g, g));
    std::sort(restricted.begin(), restricted.end());
    std::vector<GF2Mat> small;
    for_each_isometry(*FormSpace::dot(g), [&](const GF2Mat& m) { small.push_back(m); }, limits);
    std::sort(small.begin(), small.end());
    bool injective = std::adjacent_find(restricted.begin(), restricted.end()) == restricted.end();
    rep.expect(injective && restricted == small,
               [] { return std::string("restriction to span(v_1..v_g) is not a bijection onto O(Z_2^g)"); });
  } else {
    GF2Vec v01 = GF2Vec::unit(n, 0) + GF2Vec::unit(n, 1);
    std::vector<GF2Mat> fixing;
    for_each_isometry(*FormSpace::dot(n), [&](const GF2Mat& m) {
      if (m.apply(v01) == v01) fixing.push_back(m);
    }, limits);
    std::sort(fixing.begin(), fixing.end());
    rep.expect(fixing == stab, [] { return std::string("stabilizer differs from {F : F(v_0+v_1) = v_0+v_1}"); });
  }
  rep.fact("group_order", std::to_string(out.group_order));
  rep.fact("stabilizer_order", std::to_string(out.stabilizer_order));
  rep.fact("closure_order", std::to_string(out.closure_order));
  rep.fact("closure_without_transvection", std::to_string(out.closure_without_transvection));
  rep.fact("transvection_listed", out.transvection_listed ? "true" : "false");
  return out;
}

/// Every orthogonal map of Z_2^{g+1} fixes v_0+...+v_g.
inline CheckReport uti_check(std::size_t g, const EnumerationLimits& limits = {}) {
  CheckReport rep("fixed sum g=" + std::to_string(g));
  const GF2Vec all = GF2Vec::ones(g + 1);
  std::size_t count = 0;
  for_each_isometry(*FormSpace::dot(g + 1), [&](const GF2Mat& m) {
    ++count;
    rep.expect(m.apply(all) == all, [&] { return "map does not fix the all-ones vector:\n" + m.to_string(); });
  }, limits);
  rep.fact("orthogonal_maps_checked", std::to_string(count));
  return rep;
}

/// O(Z_2^g) is transitive on H_0 and on H_1 (nonzero x != e with x.e = 0,
/// resp. 1, where e is the all-ones vector).
inline CheckReport trans_check(std::size_t g, const EnumerationLimits& limits = {}) {
  CheckReport rep("transitivity g=" + std::to_string(g));
  const GF2Vec e = GF2Vec::ones(g);
  std::vector<GF2Vec> h0, h1;
  for (const auto& x : all_vectors(g)) {
    if (x.is_zero() || x == e) continue;
    (dot(x, e) ? h1 : h0).push_back(x);
  }
  std::vector<GF2Mat> group;
  for_each_isometry(*FormSpace::dot(g), [&](const GF2Mat& m) { group.push_back(m); }, limits);
  auto act = [](const GF2Vec& x, const GF2Mat& m) { return m.apply(x); };
  for (auto* set : {&h0, &h1}) {
    auto orbits = orbit_decompose(*set, group, act);
    const char* name = set == &h0 ? "H0" : "H1";
    rep.expect(orbits.orbits.size() <= 1, [&] {
      return std::string(name) + " splits into " + std::to_string(orbits.orbits.size()) + " orbits";
    });
    rep.fact(std::string(name) + "_size", std::to_string(set->size()));
  }
  return rep;
}

inline CheckReport lemma_checks(std::size_t g, const EnumerationLimits& limits = {}) {
  CheckReport rep("fixed sum and transitivity g=" + std::to_string(g));
  rep.absorb(uti_check(g, limits));
  rep.absorb(trans_check(g, limits));
  return rep;
}

}  // namespace spincover
