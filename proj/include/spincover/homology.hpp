#pragma once

// Mod-2 first homology of the surfaces and total spaces, the structure maps
// between them, the linear and quadratic sections, and the sets of special
// coverings.
//
// Coordinates:
//   N-surface   Z_2^{g+1}  v_0..v_g
//   total N     Z_2^{g+2}  vbar_0..vbar_g, h
//   O-surface   Z_2^{2g}   c_1..c_{2g}      (index k holds c_{k+1})
//   total O     Z_2^{2g+1} cbar_1..cbar_{2g}, h
// Linear forms are stored as their values on these bases.

#include <cstddef>
#include <string>
#include <vector>

#include "spincover/forms.hpp"
#include "spincover/gf2.hpp"

namespace spincover {

inline void require_genus(std::size_t g) {
  if (g < 1) throw DomainError("genus must be at least 1");
  if (2 * g + 1 > kMaxDim) throw ShapeError("genus too large for packed vectors");
}

struct NSurface {
  std::size_t g;
  std::size_t dim() const { return g + 1; }
  SpacePtr space() const { return FormSpace::dot(g + 1); }
  GF2Vec v(std::size_t i) const { return GF2Vec::unit(dim(), i); }
  /// v_0 + ... + v_g
  GF2Vec sum_all() const { return GF2Vec::ones(dim()); }
};

struct OSurface {
  std::size_t g;
  std::size_t dim() const { return 2 * g; }
  SpacePtr space() const { return FormSpace::symplectic(g); }
  /// c_k for k = 1..2g
  GF2Vec c(std::size_t k) const { return GF2Vec::unit(dim(), k - 1); }
  /// e_i = c_{2i-1}, i = 1..g
  GF2Vec e(std::size_t i) const { return c(2 * i - 1); }
  /// e'_i = c_{2i-1} + c_{2i}, i = 1..g
  GF2Vec e_prime(std::size_t i) const { return c(2 * i - 1) + c(2 * i); }

  std::vector<GF2Vec> ker_pi_basis() const {
    std::vector<GF2Vec> b;
    for (std::size_t i = 1; i <= g; ++i) b.push_back(e_prime(i));
    return b;
  }

  SymplecticBasis basis_e_eprime() const {
    SymplecticBasis b;
    for (std::size_t i = 1; i <= g; ++i) b.emplace_back(e(i), e_prime(i));
    return b;
  }

  /// Columns e_1..e_g, e'_1..e'_g in c-coordinates.
  GF2Mat change_to_e_eprime() const {
    std::vector<GF2Vec> cols;
    for (std::size_t i = 1; i <= g; ++i) cols.push_back(e(i));
    for (std::size_t i = 1; i <= g; ++i) cols.push_back(e_prime(i));
    return GF2Mat::from_columns(cols, dim());
  }
};

struct TotalN {
  std::size_t g;
  std::size_t dim() const { return g + 2; }
  std::size_t h_index() const { return g + 1; }
  GF2Vec vbar(std::size_t i) const { return GF2Vec::unit(dim(), i); }
  GF2Vec h() const { return GF2Vec::unit(dim(), h_index()); }
  /// x -> xbar with the zero section.
  GF2Vec bar(const GF2Vec& x) const { return x.concat(GF2Vec(1)); }
};

struct TotalO {
  std::size_t g;
  std::size_t dim() const { return 2 * g + 1; }
  std::size_t h_index() const { return 2 * g; }
  GF2Vec h() const { return GF2Vec::unit(dim(), h_index()); }
  GF2Vec bar(const GF2Vec& y) const { return y.concat(GF2Vec(1)); }

  /// ebar'_i spans the kernel of the lifted projection.
  std::vector<GF2Vec> ker_tilde_pi_basis() const {
    std::vector<GF2Vec> b;
    for (const auto& v : OSurface{g}.ker_pi_basis()) b.push_back(bar(v));
    return b;
  }
};

/// The free choices behind the linear section sigma (rho) and the quadratic
/// section s (r).
class SectionParams {
 public:
  SectionParams(std::size_t g, GF2Vec rho, GF2Vec r) : g_(g), rho_(rho), r_(r) {
    require_genus(g);
    if (rho_.size() != g + 1) throw ShapeError("rho must have g+1 bits");
    if (r_.size() != 2 * g) throw ShapeError("r must have 2g bits");
  }

  static SectionParams zero(std::size_t g) { return SectionParams(g, GF2Vec(g + 1), GF2Vec(2 * g)); }
  static SectionParams with_rho(std::size_t g, GF2Vec rho) { return SectionParams(g, rho, GF2Vec(2 * g)); }
  static SectionParams with_r(std::size_t g, GF2Vec r) { return SectionParams(g, GF2Vec(g + 1), r); }

  std::size_t g() const { return g_; }
  const GF2Vec& rho() const { return rho_; }
  const GF2Vec& r() const { return r_; }

  /// beta_i = r_{2i-1} + r_{2i} + 1, stored at index i-1.
  GF2Vec beta() const {
    GF2Vec b(g_);
    for (std::size_t i = 0; i < g_; ++i) b.set(i, r_[2 * i] ^ r_[2 * i + 1] ^ 1u);
    return b;
  }

  /// t = sum beta_i e_i on the O-surface.
  GF2Vec t() const {
    GF2Vec t(2 * g_);
    auto b = beta();
    for (std::size_t i = 0; i < g_; ++i) t.set(2 * i, b[i]);
    return t;
  }

  /// sum r_{2i-1} r_{2i}
  unsigned r_const() const {
    unsigned s = 0;
    for (std::size_t i = 0; i < g_; ++i) s ^= r_[2 * i] & r_[2 * i + 1];
    return s;
  }

  /// r_{2i-1} + r_{2i} = 1 for every i, i.e. t = 0.
  bool exceptional() const { return beta().is_zero(); }

 private:
  std::size_t g_;
  GF2Vec rho_;
  GF2Vec r_;
};

/// pi_*: O-surface -> N-surface, c_{2i-1}, c_{2i} -> v_0 + v_i.
inline GF2Mat pi_star(std::size_t g) {
  require_genus(g);
  GF2Mat m(g + 1, 2 * g);
  for (std::size_t i = 1; i <= g; ++i) {
    for (std::size_t col : {2 * i - 2, 2 * i - 1}) {
      m.set(0, col, 1);
      m.set(i, col, 1);
    }
  }
  return m;
}

/// The lift of pi_* to the total spaces; h -> h.
inline GF2Mat tilde_pi_star(std::size_t g) {
  GF2Mat m(g + 2, 2 * g + 1);
  m.set_block(0, 0, pi_star(g));
  m.set(g + 1, 2 * g, 1);
  return m;
}

/// (p_n)_*: total N -> N-surface, forgets h.
inline GF2Mat p_n_star(std::size_t g) {
  GF2Mat m(g + 1, g + 2);
  m.set_block(0, 0, GF2Mat::identity(g + 1));
  return m;
}

/// (p_o)_*: total O -> O-surface, forgets h.
inline GF2Mat p_o_star(std::size_t g) {
  GF2Mat m(2 * g, 2 * g + 1);
  m.set_block(0, 0, GF2Mat::identity(2 * g));
  return m;
}

/// sigma(x) = sum x_i (vbar_i + rho_i h).
inline GF2Vec sigma_eval(const SectionParams& params, const GF2Vec& x) {
  if (x.size() != params.g() + 1) throw ShapeError("sigma_eval: expected g+1 coordinates");
  return x.concat(GF2Vec(1, dot(x, params.rho())));
}

/// Matrix of sigma, (g+2) x (g+1).
inline GF2Mat sigma_matrix(const SectionParams& params) {
  const std::size_t n = params.g() + 1;
  GF2Mat m(n + 1, n);
  m.set_block(0, 0, GF2Mat::identity(n));
  m.set_row(n, params.rho());
  return m;
}

/// The quadratic section: s(sum x_i c_i) = sum x_i (cbar_i + r_i h)
/// + (sum x_{2i-1} x_{2i}) h.
inline GF2Vec s_eval(const SectionParams& params, const GF2Vec& a) {
  if (a.size() != 2 * params.g()) throw ShapeError("s_eval: expected 2g coordinates");
  unsigned hc = dot(a, params.r());
  for (std::size_t i = 0; i < params.g(); ++i) hc ^= a[2 * i] & a[2 * i + 1];
  return a.concat(GF2Vec(1, hc));
}

enum class Host { TotalN, TotalO };

/// A linear form psi on a total space with psi(h) = 1.
class SpecialCovering {
 public:
  SpecialCovering(Host host, std::size_t g, GF2Vec values) : host_(host), g_(g), values_(values) {
    require_genus(g);
    if (values_.size() != host_dim()) throw ShapeError("SpecialCovering: value vector has wrong length");
    if (values_[values_.size() - 1] != 1) throw DomainError("SpecialCovering: value on h must be 1");
  }

  /// From the values on vbar_i (resp. cbar_i); h gets 1.
  static SpecialCovering on_n(std::size_t g, const GF2Vec& vbar_values) {
    if (vbar_values.size() != g + 1) throw ShapeError("special covering on total N needs g+1 values");
    return SpecialCovering(Host::TotalN, g, vbar_values.concat(GF2Vec(1, 1)));
  }
  static SpecialCovering on_o(std::size_t g, const GF2Vec& cbar_values) {
    if (cbar_values.size() != 2 * g) throw ShapeError("special covering on total O needs 2g values");
    return SpecialCovering(Host::TotalO, g, cbar_values.concat(GF2Vec(1, 1)));
  }

  Host host() const { return host_; }
  std::size_t g() const { return g_; }
  const GF2Vec& values() const { return values_; }
  /// Values on the non-fiber basis vectors.
  GF2Vec base_values() const { return values_.slice(0, values_.size() - 1); }
  unsigned operator()(const GF2Vec& x) const { return dot(values_, x); }

  friend bool operator==(const SpecialCovering& a, const SpecialCovering& b) = default;

 private:
  std::size_t host_dim() const { return host_ == Host::TotalN ? g_ + 2 : 2 * g_ + 1; }

  Host host_;
  std::size_t g_;
  GF2Vec values_;
};

/// All 2^{g+1} special coverings of total N in ascending order of their
/// values on vbar_0..vbar_g.
inline std::vector<SpecialCovering> specials(std::size_t g) {
  require_genus(g);
  std::vector<SpecialCovering> out;
  for (const auto& v : all_vectors(g + 1)) out.push_back(SpecialCovering::on_n(g, v));
  return out;
}

struct EpiMember {
  SpecialCovering phi;
  /// The two psi with phi = psi o tilde_pi_*; the second is the first plus
  /// the all-ones shift on vbar_i.
  SpecialCovering psi_a;
  SpecialCovering psi_b;
};

/// The phi on total O that factor through tilde_pi_*: phi(h) = 1 and phi
/// vanishes on every ebar'_i. There are 2^g of them.
inline std::vector<EpiMember> epi_set(std::size_t g) {
  require_genus(g);
  std::vector<EpiMember> out;
  for (const auto& b : all_vectors(g)) {
    GF2Vec phi(2 * g);
    GF2Vec psi(g + 1);
    for (std::size_t i = 0; i < g; ++i) {
      phi.set(2 * i, b[i]);
      phi.set(2 * i + 1, b[i]);
      psi.set(i + 1, b[i]);
    }
    out.push_back({SpecialCovering::on_o(g, phi), SpecialCovering::on_n(g, psi),
                   SpecialCovering::on_n(g, psi + GF2Vec::ones(g + 1))});
  }
  return out;
}

inline std::vector<GF2Vec> epi_values(std::size_t g) {
  std::vector<GF2Vec> out;
  for (const auto& m : epi_set(g)) out.push_back(m.phi.values());
  return out;
}

inline bool in_epi(const SpecialCovering& phi) {
  if (phi.host() != Host::TotalO) return false;
  for (const auto& k : TotalO{phi.g()}.ker_tilde_pi_basis()) {
    if (phi(k) != 0) return false;
  }
  return true;
}

/// The presentation of the covering group: generators w_0..w_g, k; relators
/// [w_j, k] and w_0^2 ... w_g^2 k^epsilon; embedding w_i -> u_i h^{eps_i},
/// k -> h^2.
struct Presentation {
  std::size_t g;
  std::vector<std::string> generators;
  unsigned epsilon;
  std::vector<unsigned> embedding_exponents;

  std::string main_relator() const {
    std::string s;
    for (std::size_t j = 0; j <= g; ++j) {
      if (j) s += ' ';
      s += "w" + std::to_string(j) + "^2";
    }
    if (epsilon) s += " k^1";
    return s;
  }

  std::string text() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? "," : "") + generators[i];
    s += " | ";
    for (std::size_t j = 0; j <= g; ++j) s += "[w" + std::to_string(j) + ",k],";
    s += " " + main_relator() + ">";
    return s;
  }

  std::vector<std::string> embedding_text() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i <= g; ++i) {
      out.push_back("w" + std::to_string(i) + " -> u" + std::to_string(i) +
                    (embedding_exponents[i] ? " h" : ""));
    }
    out.emplace_back("k -> h^2");
    return out;
  }
};

inline Presentation presentation(const SpecialCovering& psi) {
  if (psi.host() != Host::TotalN) throw DomainError("presentation: covering must live on total N");
  Presentation p{psi.g(), {}, 0, {}};
  for (std::size_t j = 0; j <= psi.g(); ++j) {
    p.generators.push_back("w" + std::to_string(j));
    p.embedding_exponents.push_back(psi.values()[j]);
  }
  p.generators.emplace_back("k");
  p.epsilon = psi.base_values().sum();
  return p;
}

}  // namespace spincover
