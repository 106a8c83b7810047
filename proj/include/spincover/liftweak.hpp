#pragma once

// Lifting orthogonal maps of the N-surface to symplectic maps of the
// orientation cover and projecting back, and the realizability criterion
// that decides weak equivalence of special coverings.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spincover/action_orth.hpp"
#include "spincover/forms.hpp"
#include "spincover/homology.hpp"
#include "spincover/report.hpp"

namespace spincover {

/// Columns v_0, v_0+v_1, ..., v_0+v_g.
inline GF2Mat change_to_v0_u(std::size_t g) {
  std::vector<GF2Vec> cols{GF2Vec::unit(g + 1, 0)};
  for (std::size_t i = 1; i <= g; ++i) cols.push_back(GF2Vec::unit(g + 1, 0) + GF2Vec::unit(g + 1, i));
  return GF2Mat::from_columns(cols, g + 1);
}

/// Gram matrix of the dot product restricted to Im(pi_*) in the basis
/// v_0 + v_i: S_ij = 1 + delta_ij.
inline GF2Mat restricted_gram(std::size_t g) {
  GF2Mat s(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) s.set(i, j, i == j ? 0 : 1);
  }
  return s;
}

/// F o pi_* = pi_* o f.
inline bool is_lift_pair(const GF2Mat& f, const GF2Mat& big_f) {
  const std::size_t g = f.rows() / 2;
  if (f.rows() != 2 * g || !f.is_square() || big_f.rows() != g + 1 || !big_f.is_square()) {
    throw ShapeError("is_lift_pair: expected a 2g x 2g and a (g+1) x (g+1) matrix");
  }
  GF2Mat pi = pi_star(g);
  return big_f * pi == pi * f;
}

inline bool is_lift_pair(const Isometry& f, const Isometry& big_f) { return is_lift_pair(f.mat(), big_f.mat()); }

struct GeneExtension {
  /// All v' with v'.Fhat(x) = v.x on H (two of them, differing by E).
  std::vector<GF2Vec> solutions;
  /// The solutions outside H.
  std::vector<GF2Vec> admissible;
};

/// Extension vectors for an isometry Fhat of the hyperplane H = E^perp of
/// (Z_2^n, dot): solves v'.Fhat(h_j) = v.h_j over a basis h_j of H.
inline GeneExtension lemma_gene_extend(const std::vector<GF2Vec>& h_basis, const std::vector<GF2Vec>& h_images,
                                       const GF2Vec& big_e, const GF2Vec& v) {
  if (h_basis.size() != h_images.size()) throw ShapeError("lemma_gene_extend: basis and images differ in length");
  const std::size_t n = big_e.size();
  for (std::size_t i = 0; i < h_basis.size(); ++i) {
    if (dot(h_basis[i], big_e) || dot(h_images[i], big_e)) throw DomainError("lemma_gene_extend: vector outside E^perp");
    for (std::size_t j = 0; j < h_basis.size(); ++j) {
      if (dot(h_basis[i], h_basis[j]) != dot(h_images[i], h_images[j])) {
        throw DomainError("lemma_gene_extend: map does not preserve the form on H");
      }
    }
  }
  if (dot(v, big_e) != 1) throw DomainError("lemma_gene_extend: v lies in H");

  GF2Mat system = GF2Mat::from_rows(h_images, n);
  GF2Vec rhs(h_basis.size());
  for (std::size_t j = 0; j < h_basis.size(); ++j) rhs.set(j, dot(v, h_basis[j]));
  auto sol = solve(system, rhs);
  if (!sol) throw DefectError("lemma_gene_extend: extension system is inconsistent");
  GeneExtension out;
  out.solutions = span_elements(sol->kernel, n);
  for (auto& s : out.solutions) s += sol->particular;
  std::sort(out.solutions.begin(), out.solutions.end());
  for (const auto& s : out.solutions) {
    if (dot(s, big_e)) out.admissible.push_back(s);
  }
  return out;
}

/// The linear map sending v to v2 and h_j to h_images[j].
inline GF2Mat assemble_extension(const std::vector<GF2Vec>& h_basis, const std::vector<GF2Vec>& h_images,
                                 const GF2Vec& v, const GF2Vec& v2) {
  const std::size_t n = v.size();
  std::vector<GF2Vec> src{v}, dst{v2};
  src.insert(src.end(), h_basis.begin(), h_basis.end());
  dst.insert(dst.end(), h_images.begin(), h_images.end());
  auto inv = mat_inv(GF2Mat::from_columns(src, n));
  if (!inv) throw DomainError("assemble_extension: v together with the basis of H is not a basis");
  return GF2Mat::from_columns(dst, n) * *inv;
}

/// Orthogonal projections F of a symplectic f (c-basis): requires the matrix
/// of f in the basis (e, e') to be [[A,0],[C,D]]. Returns the empty list when
/// A^t S A != S, otherwise one extension for g even and two for g odd.
inline std::vector<Isometry> project_to_orth(const Isometry& f) {
  const std::size_t g = f.mat().rows() / 2;
  if (f.mat().rows() != 2 * g || g == 0 || !is_isometry(*FormSpace::symplectic(g), f.mat())) {
    throw DomainError("project_to_orth: map is not symplectic on Z_2^{2g}");
  }
  GF2Mat p = OSurface{g}.change_to_e_eprime();
  GF2Mat m = *mat_inv(p) * f.mat() * p;
  if (!(m.block(0, g, g, g) == GF2Mat(g, g))) throw DomainError("project_to_orth: map does not preserve ker pi_*");
  GF2Mat a = m.block(0, 0, g, g);
  GF2Mat s = restricted_gram(g);
  if (!(a.transpose() * s * a == s)) return {};

  // Fhat on H = Im(pi_*) = span(u_j), u_j = v_0 + v_j
  GF2Mat q = change_to_v0_u(g);
  std::vector<GF2Vec> h_basis, h_images;
  for (std::size_t j = 0; j < g; ++j) {
    h_basis.push_back(q.col(j + 1));
    GF2Vec img(g + 1);
    for (std::size_t i = 0; i < g; ++i) {
      if (a(i, j)) img += q.col(i + 1);
    }
    h_images.push_back(img);
  }
  const GF2Vec big_e = GF2Vec::ones(g + 1);
  const GF2Vec v0 = GF2Vec::unit(g + 1, 0);
  auto ext = lemma_gene_extend(h_basis, h_images, big_e, v0);
  auto space = FormSpace::dot(g + 1);
  std::vector<Isometry> out;
  for (const auto& v2 : ext.admissible) {
    GF2Mat big_f = assemble_extension(h_basis, h_images, v0, v2);
    if (!is_isometry(*space, big_f) || !is_lift_pair(f.mat(), big_f)) throw DefectError("project_to_orth: extension is not an orthogonal projection");
    out.push_back(Isometry::trusted(space, big_f));
  }
  return out;
}

/// Symplectic lift of an orthogonal F: with A the matrix of F on Im(pi_*) in
/// the basis v_0 + v_i, f = [[A,0],[0,(A^t)^-1]] in the basis (e, e').
inline Isometry lift_to_symp(const Isometry& big_f) {
  const std::size_t n = big_f.mat().rows();
  if (n < 2 || !is_isometry(*FormSpace::dot(n), big_f.mat())) throw DomainError("lift_to_symp: map is not orthogonal");
  const std::size_t g = n - 1;
  GF2Mat q = change_to_v0_u(g);
  GF2Mat mf = *mat_inv(q) * big_f.mat() * q;
  if (!(mf.block(0, 1, 1, g) == GF2Mat(1, g))) throw DefectError("lift_to_symp: orthogonal map moves Im(pi_*)");
  GF2Mat a = mf.block(1, 1, g, g);
  auto a_inv_t = mat_inv(a.transpose());
  if (!a_inv_t) throw DefectError("lift_to_symp: restriction to Im(pi_*) is singular");
  GF2Mat m(2 * g, 2 * g);
  m.set_block(0, 0, a);
  m.set_block(g, g, *a_inv_t);
  GF2Mat p = OSurface{g}.change_to_e_eprime();
  GF2Mat l = p * m * *mat_inv(p);
  auto space = FormSpace::symplectic(g);
  if (!is_isometry(*space, l)) throw DefectError("lift_to_symp: lift is not symplectic");
  return Isometry::trusted(space, l);
}

/// An automorphism of H_1(total N) read as F~(xbar) = overline(F(x)) + delta(x) h.
struct TotalAut {
  std::size_t g;
  GF2Mat mat;

  GF2Mat base_block() const { return mat.block(0, 0, g + 1, g + 1); }
  GF2Vec delta() const { return mat.row(g + 1).slice(0, g + 1); }
  GF2Vec image_of_h() const { return mat.col(g + 1); }
};

/// F~(h) = h, F orthogonal, and delta(v_0 + ... + v_g) = 0.
inline bool is_realizable(const TotalAut& aut) {
  const std::size_t n = aut.g + 2;
  if (aut.mat.rows() != n || !aut.mat.is_square()) throw ShapeError("is_realizable: matrix must be (g+2) x (g+2)");
  if (!(aut.image_of_h() == GF2Vec::unit(n, n - 1))) return false;
  if (!is_isometry(*FormSpace::dot(aut.g + 1), aut.base_block())) return false;
  return aut.delta().sum() == 0;
}

inline TotalAut make_total_aut(const GF2Mat& base, const GF2Vec& delta) {
  const std::size_t n = base.rows();
  GF2Mat m(n + 1, n + 1);
  m.set_block(0, 0, base);
  m.set_row(n, delta.concat(GF2Vec(1, 1)));
  return {n - 1, m};
}

/// sum_i psi(vbar_i) mod 2.
inline unsigned weak_class(const SpecialCovering& psi) {
  if (psi.host() != Host::TotalN) throw DomainError("weak_class: covering must live on total N");
  return psi.base_values().sum();
}

/// [[I,0],[delta,1]] with delta_j = (psi' - psi)(vbar_j) when the weak classes
/// agree.
inline std::optional<TotalAut> weak_witness(const SpecialCovering& psi, const SpecialCovering& psi2) {
  if (psi.g() != psi2.g()) throw ShapeError("weak_witness: genus mismatch");
  if (weak_class(psi) != weak_class(psi2)) return std::nullopt;
  return make_total_aut(GF2Mat::identity(psi.g() + 1), psi2.base_values() + psi.base_values());
}

/// Every realizable automorphism: orthogonal F with any delta of even weight.
inline std::vector<TotalAut> realizable_group(std::size_t g, const EnumerationLimits& limits = {}) {
  std::vector<GF2Vec> deltas;
  for (const auto& d : all_vectors(g + 1)) {
    if (d.sum() == 0) deltas.push_back(d);
  }
  std::vector<TotalAut> out;
  for_each_isometry(*FormSpace::dot(g + 1), [&](const GF2Mat& m) {
    for (const auto& d : deltas) out.push_back(make_total_aut(m, d));
  }, limits);
  return out;
}

/// For every pair of special coverings, the four descriptions of one
/// equivalence agree: reachable by a realizable automorphism, equal
/// presentation exponent, equal sum of values on vbar_i, and same A_1^sigma
/// orbit for some rho. Also replays the explicit rho choice that puts two
/// distinct coverings of one class into a common orbit.
inline CheckReport thm_an_crosscheck(std::size_t g, const EnumerationLimits& limits = {}) {
  CheckReport rep("weak equivalence g=" + std::to_string(g));
  auto all = specials(g);
  const std::size_t count = all.size();
  auto index_of = [&](const GF2Vec& values) {
    for (std::size_t i = 0; i < count; ++i) {
      if (all[i].values() == values) return i;
    }
    throw DefectError("covering outside the special set");
  };

  // property 1 by brute force over all realizable automorphisms
  std::vector<std::vector<bool>> reach(count, std::vector<bool>(count, false));
  for (const auto& aut : realizable_group(g, limits)) {
    for (std::size_t i = 0; i < count; ++i) reach[i][index_of(aut.mat.pullback(all[i].values()))] = true;
  }
  // property 4: some rho puts both in one orbit
  std::vector<OrbitReport> per_rho;
  std::vector<GF2Vec> rhos = all_vectors(g + 1);
  for (const auto& rho : rhos) per_rho.push_back(classify_A1(g, SectionParams::with_rho(g, rho), OrbitEngine::Auto, limits));

  std::size_t consistent = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const auto& psi = all[i];
      const auto& psi2 = all[j];
      bool p1 = reach[i][j];
      auto wit = weak_witness(psi, psi2);
      bool p1w = wit && is_realizable(*wit) && wit->mat.pullback(psi.values()) == psi2.values();
      bool p2 = presentation(psi).epsilon == presentation(psi2).epsilon;
      bool p3 = weak_class(psi) == weak_class(psi2);
      bool p4 = false;
      for (const auto& rep_rho : per_rho) p4 = p4 || rep_rho.same_orbit(psi.values(), psi2.values());
      bool ok = p1 == p1w && p1 == p2 && p2 == p3 && p3 == p4;
      if (rep.expect(ok, [&] {
            return "psi=" + psi.base_values().to_string() + " psi'=" + psi2.base_values().to_string() + " props " +
                   std::to_string(p1) + std::to_string(p1w) + std::to_string(p2) + std::to_string(p3) + std::to_string(p4);
          })) {
        ++consistent;
      }

      if (p3 && i != j) {
        // rho_a = psi(vbar_a), rho_b = psi'(vbar_b) at two differing indices
        GF2Vec diff = psi.base_values() + psi2.base_values();
        std::size_t a = static_cast<std::size_t>(std::countr_zero(diff.word()));
        std::size_t b = static_cast<std::size_t>(std::countr_zero(diff.word() & (diff.word() - 1)));
        GF2Vec rho(g + 1);
        rho.set(a, psi.base_values()[a]);
        rho.set(b, psi2.base_values()[b]);
        auto orbit = classify_A1(g, SectionParams::with_rho(g, rho), OrbitEngine::Auto, limits);
        rep.expect(orbit.same_orbit(psi.values(), psi2.values()), [&] {
          return "explicit rho=" + rho.to_string() + " fails for psi=" + psi.base_values().to_string() +
                 " psi'=" + psi2.base_values().to_string();
        });
      }
    }
  }
  rep.fact("pairs", std::to_string(count * count));
  rep.fact("consistent", std::to_string(consistent));
  return rep;
}

}  // namespace spincover
