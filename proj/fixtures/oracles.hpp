#pragma once

// Brute-force reference implementations. Deliberately naive: plain int
// vectors, triple loops, no bit packing, nothing shared with include/.
// Formulas are written from the defining relations, not from the closed
// forms the library uses.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Bits = std::vector<int>;
using Mat = std::vector<Bits>;

inline std::string str(const Bits& b) {
  std::string s;
  for (int x : b) s += x ? '1' : '0';
  return s;
}

inline Bits bits(const std::string& s) {
  Bits b;
  for (char c : s) b.push_back(c == '1');
  return b;
}

inline std::vector<std::string> rows(const Mat& m) {
  std::vector<std::string> out;
  for (const auto& r : m) out.push_back(str(r));
  return out;
}

inline Mat from_rows(const std::vector<std::string>& rs) {
  Mat m;
  for (const auto& r : rs) m.push_back(bits(r));
  return m;
}

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Bits(c, 0)); }

inline Mat ident(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat c = zeros(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      int s = 0;
      for (std::size_t l = 0; l < k; ++l) s ^= a[i][l] & b[l][j];
      c[i][j] = s;
    }
  return c;
}

inline Mat transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat t = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Bits mat_apply(const Mat& m, const Bits& x) {
  Bits y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] ^= m[i][j] & x[j];
  return y;
}

inline int dotp(const Bits& a, const Bits& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s ^= a[i] & b[i];
  return s;
}

inline Bits add(Bits a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  return a;
}

inline Bits unit(std::size_t n, std::size_t i) {
  Bits b(n, 0);
  b[i] = 1;
  return b;
}

inline Bits col(const Mat& m, std::size_t j) {
  Bits c;
  for (const auto& r : m) c.push_back(r[j]);
  return c;
}

inline int rank(Mat m) {
  int r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && !m[piv][c]) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != static_cast<std::size_t>(r) && m[i][c])
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
    ++r;
  }
  return r;
}

/// Bit i of idx goes to entry (i / n, i % n).
inline Mat matrix_from_index(std::size_t n, std::uint64_t idx) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m[i / n][i % n] = (idx >> i) & 1;
  return m;
}

inline std::vector<Bits> all_bits(std::size_t n) {
  std::vector<Bits> out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = (k >> i) & 1;
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Mat symplectic_gram(std::size_t g) {
  Mat j = zeros(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) j[2 * i][2 * i + 1] = j[2 * i + 1][2 * i] = 1;
  return j;
}

inline int omega(const Bits& a, const Bits& b) { return dotp(a, mat_apply(symplectic_gram(a.size() / 2), b)); }

inline bool is_orth(const Mat& m) { return mul(transpose(m), m) == ident(m.size()); }
inline bool is_symp(const Mat& m) {
  Mat j = symplectic_gram(m.size() / 2);
  return mul(mul(transpose(m), j), m) == j;
}

/// All dim x dim matrices satisfying pred; guard dim <= 4.
inline std::vector<Mat> enumerate_matrices(std::size_t dim, const std::function<bool(const Mat&)>& pred) {
  if (dim > 4) throw std::invalid_argument("oracle enumeration limited to dimension 4");
  std::vector<Mat> out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << (dim * dim)); ++k) {
    Mat m = matrix_from_index(dim, k);
    if (pred(m)) out.push_back(m);
  }
  return out;
}

/// Union-find over every (point, image) pair; returns the partition with
/// each block sorted and blocks sorted.
template <class Point, class G, class Act>
std::vector<std::vector<Point>> orbit_naive(const std::vector<Point>& points, const std::vector<G>& group, Act act) {
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto index = [&](const Point& p) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == p) return i;
    throw std::logic_error("oracle: action leaves the point set");
  };
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const auto& g : group) parent[find(i)] = find(index(act(points[i], g)));
  std::map<std::size_t, std::vector<Point>> blocks;
  for (std::size_t i = 0; i < points.size(); ++i) blocks[find(i)].push_back(points[i]);
  std::vector<std::vector<Point>> out;
  for (auto& [root, b] : blocks) {
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Point>
std::vector<std::size_t> block_sizes(const std::vector<std::vector<Point>>& part) {
  std::vector<std::size_t> s;
  for (const auto& b : part) s.push_back(b.size());
  std::sort(s.begin(), s.end());
  return s;
}

// --- the N side -----------------------------------------------------------

/// psi o F_sigma on the values psi(vbar_i), from F_sigma(sigma(x)) =
/// sigma(F(x)), F_sigma(h) = h, vbar_i = sigma(v_i) + rho_i h and
/// psi(sigma(x)) = sum_k x_k (psi_k + rho_k).
inline Bits act_orth(const Bits& psi, const Mat& f, const Bits& rho) {
  std::size_t n = psi.size();
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) {
    int v = rho[i];
    for (std::size_t k = 0; k < n; ++k) v ^= f[k][i] & (psi[k] ^ rho[k]);
    out[i] = v;
  }
  return out;
}

/// The d row of F_sigma: coefficient of h in F_sigma(vbar_j).
inline Bits lift_row(const Mat& f, const Bits& rho) {
  std::size_t n = rho.size();
  Bits d(n);
  for (std::size_t j = 0; j < n; ++j) {
    // F_sigma(vbar_j) = sigma(F v_j) + rho_j h; sigma(y) = ybar + (rho.y) h
    d[j] = dotp(rho, col(f, j)) ^ rho[j];
  }
  return d;
}

// --- the O side -----------------------------------------------------------

/// h-coefficient of s(x), built from s(c_i) = cbar_i + r_i h and the law
/// s(a + b) = s(a) + s(b) + (a.b) h, summed pair by pair.
inline int s_h(const Bits& r, const Bits& x) {
  int v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) v ^= x[i] & r[i];
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v ^= x[i] & x[j] & omega(unit(x.size(), i), unit(x.size(), j));
  return v;
}

/// phi(s(x)) for phi given by its values on cbar_i (phi(h) = 1).
inline int phi_s(const Bits& phi, const Bits& r, const Bits& x) { return dotp(phi, x) ^ s_h(r, x); }

/// phi o f_s on cbar_j: cbar_j = s(c_j) + r_j h, so f_s(cbar_j) = s(f c_j) + r_j h.
inline Bits act_symp(const Bits& phi, const Mat& f, const Bits& r) {
  std::size_t n = phi.size();
  Bits out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = phi_s(phi, r, col(f, j)) ^ r[j];
  return out;
}

inline Bits e_prime(std::size_t g, std::size_t i) { return add(unit(2 * g, 2 * i), unit(2 * g, 2 * i + 1)); }

inline Bits t_vector(const Bits& r) {
  std::size_t g = r.size() / 2;
  Bits t(2 * g, 0);
  for (std::size_t i = 0; i < g; ++i) t[2 * i] = r[2 * i] ^ r[2 * i + 1] ^ 1;
  return t;
}

inline std::vector<Bits> epi_members(std::size_t g) {
  std::vector<Bits> out;
  for (const auto& b : all_bits(2 * g)) {
    bool ok = true;
    for (std::size_t i = 0; i < g; ++i) ok = ok && b[2 * i] == b[2 * i + 1];
    if (ok) out.push_back(b);
  }
  return out;
}

/// f_s(ebar'_i) = s(f e'_i) + beta_i h stays in span(ebar'_i).
inline bool in_gs(const Mat& f, const Bits& r) {
  std::size_t g = r.size() / 2;
  for (std::size_t i = 0; i < g; ++i) {
    Bits y = mat_apply(f, e_prime(g, i));
    for (std::size_t k = 0; k < g; ++k)
      if (y[2 * k] != y[2 * k + 1]) return false;
    int beta = r[2 * i] ^ r[2 * i + 1] ^ 1;
    if ((s_h(r, y) ^ beta) != 0) return false;
  }
  return true;
}

inline bool in_kt(const Mat& f, const Bits& r) {
  std::size_t g = r.size() / 2;
  std::vector<Bits> against;
  for (std::size_t i = 0; i < g; ++i) against.push_back(e_prime(g, i));
  against.push_back(t_vector(r));
  for (std::size_t j = 0; j < 2 * g; ++j) {
    Bits moved = add(col(f, j), unit(2 * g, j));
    for (const auto& w : against)
      if (omega(moved, w)) return false;
  }
  return true;
}

/// Arf by counting: q has 2^{2g-1} + 2^{g-1} zeros iff its Arf invariant is 0.
inline int arf_by_count(const std::function<int(const Bits&)>& q, std::size_t g) {
  std::size_t zeros = 0;
  for (const auto& x : all_bits(2 * g)) zeros += q(x) == 0;
  return zeros > (std::size_t{1} << (2 * g - 1)) ? 0 : 1;
}

inline Mat transvection_symp(const Bits& y) {
  std::size_t n = y.size();
  Mat m = ident(n);
  for (std::size_t j = 0; j < n; ++j)
    if (omega(unit(n, j), y))
      for (std::size_t i = 0; i < n; ++i) m[i][j] ^= y[i];
  return m;
}

inline Mat transvection_dot(const Bits& y) {
  std::size_t n = y.size();
  Mat m = ident(n);
  for (std::size_t j = 0; j < n; ++j)
    if (y[j])
      for (std::size_t i = 0; i < n; ++i) m[i][j] ^= y[i];
  return m;
}

/// pi_*: c_{2i-1}, c_{2i} -> v_0 + v_i.
inline Mat pi_star(std::size_t g) {
  Mat m = zeros(g + 1, 2 * g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t c : {2 * i, 2 * i + 1}) {
      m[0][c] = 1;
      m[i + 1][c] ^= 1;
    }
  return m;
}

}  // namespace oracle
