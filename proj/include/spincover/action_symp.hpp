#pragma once

// The symplectic side: lifts f_s through the quadratic section, the subgroups
// G_s and K_t, transvection factorization and the Arf classification of E_pi.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spincover/forms.hpp"
#include "spincover/homology.hpp"
#include "spincover/orbits.hpp"
#include "spincover/report.hpp"

namespace spincover {

/// The lift [[L,0],[Delta,1]] of a symplectic map to total O.
struct LiftedSymp {
  std::size_t g;
  GF2Mat mat;
};

/// b_j = sum_i a_ij r_i + S_j + r_j with S_j = sum_k a_{2k,j} a_{2k-1,j}.
inline GF2Mat f_s_raw(const GF2Mat& l, const GF2Vec& r) {
  const std::size_t n = l.rows();
  GF2Vec delta = l.pullback(r) + r;
  for (std::size_t j = 0; j < n; ++j) {
    unsigned s = 0;
    for (std::size_t k = 0; k + 1 < n; k += 2) s ^= l(k, j) & l(k + 1, j);
    if (s) delta.flip(j);
  }
  GF2Mat m(n + 1, n + 1);
  m.set_block(0, 0, l);
  m.set_row(n, delta.concat(GF2Vec(1, 1)));
  return m;
}

inline LiftedSymp f_s_matrix(const Isometry& f, const SectionParams& params) {
  const std::size_t n = 2 * params.g();
  if (f.mat().rows() != n || !f.mat().is_square()) throw ShapeError("f_s_matrix: map must act on Z_2^{2g}");
  if (!is_isometry(*FormSpace::symplectic(params.g()), f.mat())) throw DomainError("f_s_matrix: map is not symplectic");
  return {params.g(), f_s_raw(f.mat(), params.r())};
}

namespace detail {

/// w lies in span(ebar'_i): no h component and equal coordinates in each pair.
inline bool in_ker_tilde_pi(const GF2Vec& w, std::size_t g) {
  if (w[2 * g]) return false;
  for (std::size_t i = 0; i < g; ++i) {
    if (w[2 * i] != w[2 * i + 1]) return false;
  }
  return true;
}

inline bool in_Gs_raw(const GF2Mat& fs, std::size_t g) {
  TotalO tot{g};
  for (const auto& k : tot.ker_tilde_pi_basis()) {
    if (!in_ker_tilde_pi(fs.apply(k), g)) return false;
  }
  return true;
}

inline bool in_Kt_raw(const GF2Mat& f, const SectionParams& params) {
  const std::size_t g = params.g();
  const FormSpace sp = *FormSpace::symplectic(g);
  OSurface o{g};
  auto against = o.ker_pi_basis();
  against.push_back(params.t());
  for (std::size_t j = 0; j < 2 * g; ++j) {
    GF2Vec moved = f.col(j) + GF2Vec::unit(2 * g, j);
    for (const auto& w : against) {
      if (sp.pair(moved, w)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// f_s maps ker(tilde_pi_*) = span(ebar'_i) into itself.
inline bool in_Gs(const Isometry& f, const SectionParams& params) {
  return detail::in_Gs_raw(f_s_matrix(f, params).mat, params.g());
}

/// Im(f - id) is orthogonal to ker(pi_*) + Z_2 t.
inline bool in_Kt(const Isometry& f, const SectionParams& params) {
  if (f.mat().rows() != 2 * params.g()) throw ShapeError("in_Kt: map must act on Z_2^{2g}");
  return detail::in_Kt_raw(f.mat(), params);
}

/// All transvections T_Y with 0 != Y in ker(pi_*) and Y.t = 0.
inline std::vector<Isometry> kt_generators(std::size_t g, const SectionParams& params) {
  auto space = FormSpace::symplectic(g);
  OSurface o{g};
  std::vector<Isometry> gens;
  for (const auto& y : span_elements(o.ker_pi_basis(), 2 * g)) {
    if (y.is_zero() || space->pair(y, params.t())) continue;
    gens.push_back(transvection(space, y));
  }
  return gens;
}

/// Writes f in G_V = {f symplectic : Im(f - id) perp V} as T_{Y_1} ... T_{Y_m}
/// with every Y_k in Im(f - id), hence orthogonal to V. Each step either
/// peels Y = f(z) - z for the first z with f(z).z = 1, shrinking Im(f - id),
/// or, when f(z).z = 0 for all z, peels e = f(u) - u for the first moved u,
/// which makes the next step of the first kind.
inline std::vector<GF2Vec> factorize_transvections(const Isometry& f, const std::vector<GF2Vec>& v_basis) {
  const FormSpace& sp = f.space();
  if (sp.kind() != FormSpace::Kind::Symplectic) throw DomainError("factorize_transvections: needs a symplectic space");
  const std::size_t n = sp.dim();
  if (n > 20) throw GuardError("factorize_transvections: dimension too large for vector scans");
  if (!is_isometry(sp, f.mat())) throw DomainError("factorize_transvections: map is not symplectic");
  GF2Mat ident = GF2Mat::identity(n);
  GF2Mat moved = f.mat() + ident;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& v : v_basis) {
      if (sp.pair(moved.col(j), v)) throw DomainError("factorize_transvections: Im(f - id) is not orthogonal to V");
    }
  }

  const std::size_t guard = 2 * n;  // 4g
  std::vector<GF2Vec> factors;
  GF2Mat cur = f.mat();
  while (!(cur == ident)) {
    if (factors.size() >= guard) throw DefectError("factorize_transvections: step guard exceeded");
    std::optional<GF2Vec> y;
    for (Word k = 0; k < (Word{1} << n) && !y; ++k) {
      GF2Vec z = GF2Vec::nth_in_order(n, k);
      if (sp.pair(cur.apply(z), z)) y = cur.apply(z) + z;
    }
    if (!y) {
      for (Word k = 0; k < (Word{1} << n) && !y; ++k) {
        GF2Vec u = GF2Vec::nth_in_order(n, k);
        GF2Vec e = cur.apply(u) + u;
        if (!e.is_zero()) y = e;
      }
    }
    factors.push_back(*y);
    cur = transvection_matrix(sp, *y) * cur;
  }
  return factors;
}

/// Product T_{Y_1} ... T_{Y_m}.
inline GF2Mat transvection_product(const FormSpace& sp, const std::vector<GF2Vec>& ys) {
  GF2Mat m = GF2Mat::identity(sp.dim());
  for (const auto& y : ys) m = m * transvection_matrix(sp, y);
  return m;
}

/// V = ker(pi_*) + Z_2 t as a spanning list.
inline std::vector<GF2Vec> kt_subspace(const SectionParams& params) {
  auto v = OSurface{params.g()}.ker_pi_basis();
  if (!params.t().is_zero()) v.push_back(params.t());
  return v;
}

/// The quadratic form phi o s on the O-surface.
inline QuadForm quad_of(const SpecialCovering& phi, const SectionParams& params) {
  auto space = FormSpace::symplectic(params.g());
  return QuadForm::from_function(space, [&](const GF2Vec& x) { return phi(s_eval(params, x)); });
}

/// (Arf of phi o s over the basis (e_i, e'_i), r + phi(tbar)) where
/// tbar = sum beta_i ebar_i. The two must agree.
inline std::pair<unsigned, unsigned> arf_closed_form(const SpecialCovering& phi, const SectionParams& params) {
  if (phi.host() != Host::TotalO || phi.g() != params.g() || !in_epi(phi)) {
    throw DomainError("arf_closed_form: form is not in E_pi");
  }
  unsigned by_basis = arf(quad_of(phi, params), OSurface{params.g()}.basis_e_eprime());
  unsigned closed = params.r_const() ^ phi(TotalO{params.g()}.bar(params.t()));
  return {by_basis, closed};
}

inline unsigned arf_of(const SpecialCovering& phi, const SectionParams& params) {
  return arf(quad_of(phi, params), OSurface{params.g()}.basis_e_eprime());
}

enum class EpiMode { Kt, Gs, Both };

/// Largest genus for which G_s is obtained by filtering the whole of Sp.
inline constexpr std::size_t kGsMaxGenus = 3;

/// Every f in Sp(Z_2, 2g) with f_s preserving ker(tilde_pi_*), as f_s matrices.
inline std::vector<GF2Mat> gs_lifts(std::size_t g, const SectionParams& params, const EnumerationLimits& limits = {}) {
  if (g > kGsMaxGenus) throw GuardError("G_s needs the full symplectic group; genus above " + std::to_string(kGsMaxGenus));
  std::vector<GF2Mat> out;
  for_each_isometry(*FormSpace::symplectic(g), [&](const GF2Mat& m) {
    GF2Mat fs = f_s_raw(m, params.r());
    if (detail::in_Gs_raw(fs, g)) out.push_back(std::move(fs));
  }, limits);
  return out;
}

struct EpiClassification {
  OrbitReport report;
  /// Set in mode Both: the G_s and K_t partitions coincide.
  std::optional<bool> partitions_agree;
  std::size_t generator_count = 0;
};

/// Orbits of phi -> phi o f_s on E_pi, labelled "arf0"/"arf1" by the Arf
/// invariant of phi o s.
inline EpiClassification classify_epi(std::size_t g, const SectionParams& params, EpiMode mode,
                                      const EnumerationLimits& limits = {}) {
  if (params.g() != g) throw ShapeError("classify_epi: parameters for another genus");
  if (g > 10) throw GuardError("classify_epi: genus above 10");
  auto points = epi_values(g);
  auto act = [](const GF2Vec& p, const GF2Mat& m) { return m.pullback(p); };
  auto label = [&](const GF2Vec& p) {
    return "arf" + std::to_string(arf_of(SpecialCovering(Host::TotalO, g, p), params));
  };

  EpiClassification out;
  std::optional<OrbitReport> kt, gs;
  if (mode != EpiMode::Gs) {
    std::vector<GF2Mat> lifts;
    for (const auto& t : kt_generators(g, params)) lifts.push_back(f_s_raw(t.mat(), params.r()));
    kt = orbit_decompose(points, lifts, act);
    out.generator_count = lifts.size();
  }
  if (mode != EpiMode::Kt) {
    auto lifts = gs_lifts(g, params, limits);
    gs = orbit_decompose(points, lifts, act);
    if (mode == EpiMode::Gs) out.generator_count = lifts.size();
  }
  if (kt && gs) out.partitions_agree = kt->partition() == gs->partition();
  out.report = kt ? *kt : *gs;
  label_orbits(out.report, label);
  out.report.sort_by_size();
  return out;
}

/// Orbit sizes predicted by the Arf classification.
inline std::vector<std::size_t> expected_epi_sizes(std::size_t g, const SectionParams& params) {
  if (params.exceptional()) return {std::size_t{1} << g};
  return {std::size_t{1} << (g - 1), std::size_t{1} << (g - 1)};
}

/// Every f in K_t lies in G_s; K_t is enumerated from the full group for
/// g <= 2 and as the closure of its transvections for larger g. Also checks
/// (T_Y)_s(ebar'_i) = ebar'_i for Y in ker(pi_*).
inline CheckReport kt_in_gs_check(std::size_t g, const SectionParams& params, const EnumerationLimits& limits = {}) {
  CheckReport rep("K_t in G_s g=" + std::to_string(g) + " r=" + params.r().to_string());
  auto space = FormSpace::symplectic(g);
  std::vector<GF2Mat> kt;
  if (g <= 2) {
    for_each_isometry(*space, [&](const GF2Mat& m) {
      if (detail::in_Kt_raw(m, params)) kt.push_back(m);
    }, limits);
  } else {
    std::vector<GF2Mat> gens;
    for (const auto& t : kt_generators(g, params)) gens.push_back(t.mat());
    kt = matrix_closure(gens, 2 * g);
  }
  for (const auto& f : kt) {
    rep.expect(detail::in_Gs_raw(f_s_raw(f, params.r()), g), [&] { return "K_t element outside G_s:\n" + f.to_string(); });
  }
  rep.fact("kt_order", std::to_string(kt.size()));

  OSurface o{g};
  TotalO tot{g};
  for (const auto& y : span_elements(o.ker_pi_basis(), 2 * g)) {
    GF2Mat fs = f_s_raw(transvection_matrix(*space, y), params.r());
    for (const auto& k : tot.ker_tilde_pi_basis()) {
      rep.expect(fs.apply(k) == k, [&] { return "(T_Y)_s moves " + k.to_string() + " for Y=" + y.to_string(); });
    }
  }
  return rep;
}

/// For psi, psi' on total N with delta_j = (psi' - psi)(vbar_j): when
/// sum_{j>=1} beta_j (delta_0 + delta_j) = 0, the transvection T_V with
/// V = sum_{j>=1} (delta_0 + delta_j) e'_j, which carries psi o tilde_pi_*
/// to psi' o tilde_pi_*. The j = 0 terms vanish identically.
inline std::optional<Isometry> cor_witness(const SpecialCovering& psi, const SpecialCovering& psi2,
                                           const SectionParams& params) {
  if (psi.host() != Host::TotalN || psi2.host() != Host::TotalN) throw DomainError("cor_witness: coverings must live on total N");
  const std::size_t g = params.g();
  if (psi.g() != g || psi2.g() != g) throw ShapeError("cor_witness: genus mismatch");
  GF2Vec delta = psi2.base_values() + psi.base_values();
  GF2Vec beta = params.beta();
  OSurface o{g};
  unsigned cond = 0;
  GF2Vec v(2 * g);
  for (std::size_t j = 1; j <= g; ++j) {
    unsigned d = delta[0] ^ delta[j];
    cond ^= beta[j - 1] & d;
    if (d) v += o.e_prime(j);
  }
  if (cond) return std::nullopt;
  return transvection(o.space(), v);
}

}  // namespace spincover
