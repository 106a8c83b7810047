#pragma once

// Bilinear form spaces over GF(2), their isometry groups, transvections,
// quadratic refinements and the Arf invariant.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spincover/gf2.hpp"

namespace spincover {

class FormSpace;
using SpacePtr = std::shared_ptr<const FormSpace>;

/// A coordinate space Z_2^dim with a symmetric bilinear form given by its Gram
/// matrix.
class FormSpace {
 public:
  enum class Kind { Dot, Symplectic, General };

  /// Z_2^n with the dot product <v_i, v_j> = delta_ij.
  static SpacePtr dot(std::size_t n) {
    return SpacePtr(new FormSpace(Kind::Dot, GF2Mat::identity(n)));
  }

  /// Z_2^{2g} with c_{2i-1}.c_{2i} = 1 and every other basis product zero.
  static SpacePtr symplectic(std::size_t g) {
    GF2Mat gram(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
      gram.set(2 * i, 2 * i + 1, 1);
      gram.set(2 * i + 1, 2 * i, 1);
    }
    return SpacePtr(new FormSpace(Kind::Symplectic, std::move(gram)));
  }

  static SpacePtr general(GF2Mat gram) {
    if (!gram.is_square()) throw ShapeError("FormSpace: Gram matrix is not square");
    if (!(gram.transpose() == gram)) throw DomainError("FormSpace: Gram matrix is not symmetric");
    return SpacePtr(new FormSpace(Kind::General, std::move(gram)));
  }

  std::size_t dim() const { return gram_.rows(); }
  const GF2Mat& gram() const { return gram_; }
  Kind kind() const { return kind_; }

  unsigned pair(const GF2Vec& u, const GF2Vec& v) const {
    if (u.size() != dim() || v.size() != dim()) throw ShapeError("pair: vector length differs from space dimension");
    return pair_words(u.word(), v.word());
  }

  unsigned pair_words(Word u, Word v) const {
    switch (kind_) {
      case Kind::Dot:
        return parity(u & v);
      case Kind::Symplectic: {
        constexpr Word kEven = 0x5555555555555555ULL;
        Word swapped = ((v & kEven) << 1) | ((v >> 1) & kEven);
        return parity(u & swapped);
      }
      case Kind::General:
        break;
    }
    return parity(u & gram_.apply(GF2Vec(dim(), v)).word());
  }

  bool is_alternating() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      if (gram_(i, i)) return false;
    }
    return true;
  }

 private:
  FormSpace(Kind kind, GF2Mat gram) : kind_(kind), gram_(std::move(gram)) {}

  Kind kind_;
  GF2Mat gram_;
};

inline unsigned pair(const FormSpace& space, const GF2Vec& u, const GF2Vec& v) { return space.pair(u, v); }

/// True iff m^t G m = G and m is invertible.
inline bool is_isometry(const FormSpace& space, const GF2Mat& m) {
  const std::size_t n = space.dim();
  if (m.rows() != n || m.cols() != n) throw ShapeError("is_isometry: matrix size differs from space dimension");
  std::vector<Word> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = m.col(j).word();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (space.pair_words(cols[i], cols[j]) != space.gram()(i, j)) return false;
    }
  }
  return rank(m) == n;
}

/// An isometry of a form space. Construction through make() validates it.
class Isometry {
 public:
  static Isometry make(SpacePtr space, GF2Mat mat) {
    if (!is_isometry(*space, mat)) throw DomainError("matrix is not an isometry of the form");
    return Isometry(std::move(space), std::move(mat));
  }

  /// Skips validation; for matrices already known to preserve the form.
  static Isometry trusted(SpacePtr space, GF2Mat mat) { return Isometry(std::move(space), std::move(mat)); }

  static Isometry identity(SpacePtr space) {
    auto n = space->dim();
    return Isometry(std::move(space), GF2Mat::identity(n));
  }

  const FormSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const GF2Mat& mat() const { return mat_; }

  GF2Vec operator()(const GF2Vec& x) const { return mat_.apply(x); }

  /// Composition: (a * b)(x) = a(b(x)).
  friend Isometry operator*(const Isometry& a, const Isometry& b) { return Isometry(a.space_, a.mat_ * b.mat_); }
  friend bool operator==(const Isometry& a, const Isometry& b) { return a.mat_ == b.mat_; }
  friend bool operator<(const Isometry& a, const Isometry& b) { return a.mat_ < b.mat_; }

  Isometry inverse() const {
    auto inv = mat_inv(mat_);
    if (!inv) throw DefectError("isometry matrix is singular");
    return Isometry(space_, *inv);
  }

 private:
  Isometry(SpacePtr space, GF2Mat mat) : space_(std::move(space)), mat_(std::move(mat)) {}

  SpacePtr space_;
  GF2Mat mat_;
};

/// Matrix of x -> x + <x,y> y.
inline GF2Mat transvection_matrix(const FormSpace& space, const GF2Vec& y) {
  const std::size_t n = space.dim();
  if (y.size() != n) throw ShapeError("transvection: vector length differs from space dimension");
  GF2Mat m = GF2Mat::identity(n);
  // column j gains <e_j, y> y, so row i gains y_i * (G y)^t
  Word gy = 0;
  for (std::size_t j = 0; j < n; ++j) gy |= Word{space.pair_words(Word{1} << j, y.word())} << j;
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i]) m.set_row(i, m.row(i) + GF2Vec(n, gy));
  }
  return m;
}

/// The transvection T_y. Over a non-alternating form y must be isotropic.
inline Isometry transvection(SpacePtr space, const GF2Vec& y) {
  if (y.size() != space->dim()) throw ShapeError("transvection: vector length differs from space dimension");
  if (space->pair(y, y) != 0) throw DomainError("transvection: non-isotropic vector " + y.to_string());
  auto m = transvection_matrix(*space, y);
  return Isometry::trusted(std::move(space), std::move(m));
}

struct EnumerationLimits {
  std::size_t dot_max_dim = 8;
  std::size_t symplectic_max_dim = 12;
  std::size_t general_max_dim = 8;

  std::size_t bound_for(FormSpace::Kind kind) const {
    switch (kind) {
      case FormSpace::Kind::Dot:
        return dot_max_dim;
      case FormSpace::Kind::Symplectic:
        return symplectic_max_dim;
      case FormSpace::Kind::General:
        return general_max_dim;
    }
    return 0;
  }
};

/// Visits every isometry exactly once by backtracking over images of the basis
/// vectors: the image of e_j must pair with itself and with the earlier images
/// as the Gram matrix prescribes.
inline void for_each_isometry(const FormSpace& space, const std::function<void(const GF2Mat&)>& visit,
                              const EnumerationLimits& limits = {}) {
  const std::size_t n = space.dim();
  if (n > limits.bound_for(space.kind())) {
    throw GuardError("enumerate_isometries: dimension " + std::to_string(n) + " too large, use generators");
  }
  if (n == 0) {
    visit(GF2Mat(0, 0));
    return;
  }
  const GF2Mat& gram = space.gram();
  const bool check_rank = space.kind() == FormSpace::Kind::General;
  std::vector<Word> images(n, 0);
  const Word count = Word{1} << n;

  std::function<void(std::size_t)> extend = [&](std::size_t j) {
    if (j == n) {
      GF2Mat m = GF2Mat::from_columns([&] {
        std::vector<GF2Vec> cols;
        cols.reserve(n);
        for (Word w : images) cols.emplace_back(n, w);
        return cols;
      }(), n);
      if (check_rank && rank(m) != n) return;
      visit(m);
      return;
    }
    for (Word w = 1; w < count; ++w) {
      if (space.pair_words(w, w) != gram(j, j)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = space.pair_words(images[i], w) == gram(i, j);
      if (!ok) continue;
      images[j] = w;
      extend(j + 1);
    }
  };
  extend(0);
}

inline std::vector<Isometry> enumerate_isometries(const SpacePtr& space, const EnumerationLimits& limits = {}) {
  std::vector<Isometry> out;
  for_each_isometry(*space, [&](const GF2Mat& m) { out.push_back(Isometry::trusted(space, m)); }, limits);
  return out;
}

/// A quadratic refinement q of an alternating form: q(x+y) = q(x) + q(y) + x.y.
/// Stored by its values on the coordinate basis.
class QuadForm {
 public:
  QuadForm(SpacePtr space, GF2Vec basis_values) : space_(std::move(space)), values_(basis_values) {
    if (!space_->is_alternating()) throw DomainError("QuadForm: form is not alternating");
    if (values_.size() != space_->dim()) throw ShapeError("QuadForm: value vector length differs from dimension");
  }

  /// Reads off the basis values of a function assumed to satisfy the law.
  static QuadForm from_function(SpacePtr space, const std::function<unsigned(const GF2Vec&)>& q) {
    GF2Vec vals(space->dim());
    for (std::size_t i = 0; i < space->dim(); ++i) vals.set(i, q(GF2Vec::unit(space->dim(), i)));
    return QuadForm(std::move(space), vals);
  }

  const FormSpace& space() const { return *space_; }
  const GF2Vec& basis_values() const { return values_; }

  /// q(sum x_i b_i) = sum x_i q(b_i) + sum_{i<j} x_i x_j (b_i.b_j).
  unsigned operator()(const GF2Vec& x) const {
    if (x.size() != space_->dim()) throw ShapeError("QuadForm: argument length differs from dimension");
    const GF2Mat& gram = space_->gram();
    unsigned q = parity(x.word() & values_.word());
    Word rest = x.word();
    while (rest) {
      auto i = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      q ^= parity(gram.row_word(i) & rest);
    }
    return q;
  }

 private:
  SpacePtr space_;
  GF2Vec values_;
};

using SymplecticBasis = std::vector<std::pair<GF2Vec, GF2Vec>>;

inline bool is_symplectic_basis(const FormSpace& space, const SymplecticBasis& basis) {
  if (2 * basis.size() != space.dim()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& [e_i, f_i] = basis[i];
      const auto& [e_j, f_j] = basis[j];
      if (space.pair(e_i, f_j) != (i == j ? 1u : 0u)) return false;
      if (space.pair(e_i, e_j) != 0 || space.pair(f_i, f_j) != 0) return false;
    }
  }
  return true;
}

/// Arf invariant: sum of q(e_i) q(e'_i) over a symplectic basis.
inline unsigned arf(const QuadForm& q, const SymplecticBasis& basis) {
  if (!is_symplectic_basis(q.space(), basis)) throw DomainError("arf: pairs do not form a symplectic basis");
  unsigned a = 0;
  for (const auto& [e, f] : basis) a ^= q(e) & q(f);
  return a;
}

}  // namespace spincover
