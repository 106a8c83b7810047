#pragma once

// Bit-packed linear algebra over the two-element field.
//
// Coordinate i of a vector is bit i of its packed word; the text form prints
// coordinate 0 first. Vectors are limited to 64 coordinates, which covers every
// space this library builds (the largest is 2g+1 for the genus guard g <= 10).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spincover/errors.hpp"

namespace spincover {

using Word = std::uint64_t;

inline constexpr std::size_t kMaxDim = 64;

inline Word low_mask(std::size_t len) {
  return len >= 64 ? ~Word{0} : ((Word{1} << len) - 1);
}

inline unsigned parity(Word w) { return static_cast<unsigned>(std::popcount(w) & 1); }

class GF2Vec {
 public:
  GF2Vec() = default;

  explicit GF2Vec(std::size_t len) : len_(len) {
    if (len > kMaxDim) throw ShapeError("GF2Vec: length " + std::to_string(len) + " exceeds 64");
  }

  GF2Vec(std::size_t len, Word bits) : GF2Vec(len) { bits_ = bits & low_mask(len); }

  static GF2Vec unit(std::size_t len, std::size_t i) {
    GF2Vec v(len);
    v.set(i, 1);
    return v;
  }

  static GF2Vec ones(std::size_t len) { return GF2Vec(len, ~Word{0}); }

  /// Parses '0'/'1' characters, coordinate 0 first.
  static GF2Vec parse(std::string_view text) {
    GF2Vec v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        v.bits_ |= Word{1} << i;
      } else if (text[i] != '0') {
        throw std::invalid_argument("bitstring: unexpected character '" + std::string(1, text[i]) + "'");
      }
    }
    return v;
  }

  /// The k-th vector of length len in ascending bitstring order.
  static GF2Vec nth_in_order(std::size_t len, Word k) {
    GF2Vec v(len);
    for (std::size_t i = 0; i < len; ++i) {
      if ((k >> (len - 1 - i)) & 1) v.bits_ |= Word{1} << i;
    }
    return v;
  }

  std::size_t size() const { return len_; }
  Word word() const { return bits_; }

  unsigned operator[](std::size_t i) const { return static_cast<unsigned>((bits_ >> i) & 1); }

  unsigned get(std::size_t i) const {
    check_index(i);
    return (*this)[i];
  }

  void set(std::size_t i, unsigned bit) {
    check_index(i);
    if (bit & 1) {
      bits_ |= Word{1} << i;
    } else {
      bits_ &= ~(Word{1} << i);
    }
  }

  void flip(std::size_t i) {
    check_index(i);
    bits_ ^= Word{1} << i;
  }

  std::size_t weight() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_zero() const { return bits_ == 0; }

  /// Sum of coordinates mod 2.
  unsigned sum() const { return parity(bits_); }

  GF2Vec& operator+=(const GF2Vec& o) {
    check_same(o);
    bits_ ^= o.bits_;
    return *this;
  }

  friend GF2Vec operator+(GF2Vec a, const GF2Vec& b) {
    a += b;
    return a;
  }

  /// Plain coordinate dot product sum(a_i b_i).
  friend unsigned dot(const GF2Vec& a, const GF2Vec& b) {
    a.check_same(b);
    return parity(a.bits_ & b.bits_);
  }

  friend bool operator==(const GF2Vec& a, const GF2Vec& b) = default;

  /// Ascending bitstring order: lexicographic on the text form. Shorter vectors
  /// sort first.
  friend bool operator<(const GF2Vec& a, const GF2Vec& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    Word d = a.bits_ ^ b.bits_;
    if (d == 0) return false;
    return ((a.bits_ >> std::countr_zero(d)) & 1) == 0;
  }

  /// Concatenation: this vector's coordinates first.
  GF2Vec concat(const GF2Vec& tail) const {
    GF2Vec v(len_ + tail.len_);
    v.bits_ = bits_ | (tail.bits_ << len_);
    return v;
  }

  GF2Vec slice(std::size_t from, std::size_t count) const {
    if (from + count > len_) throw ShapeError("GF2Vec::slice out of range");
    return GF2Vec(count, bits_ >> from);
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
      if ((*this)[i]) s[i] = '1';
    }
    return s;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= len_) throw ShapeError("GF2Vec: index " + std::to_string(i) + " out of range");
  }
  void check_same(const GF2Vec& o) const {
    if (len_ != o.len_) {
      throw ShapeError("GF2Vec: length mismatch " + std::to_string(len_) + " vs " + std::to_string(o.len_));
    }
  }

  std::size_t len_ = 0;
  Word bits_ = 0;
};

/// Every vector of length len, in ascending bitstring order.
inline std::vector<GF2Vec> all_vectors(std::size_t len) {
  if (len > 24) throw GuardError("all_vectors: length " + std::to_string(len) + " too large to list");
  std::vector<GF2Vec> out;
  out.reserve(std::size_t{1} << len);
  for (Word k = 0; k < (Word{1} << len); ++k) out.push_back(GF2Vec::nth_in_order(len, k));
  return out;
}

class GF2Mat {
 public:
  GF2Mat() = default;

  GF2Mat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, 0) {
    if (cols > kMaxDim) throw ShapeError("GF2Mat: " + std::to_string(cols) + " columns exceeds 64");
  }

  static GF2Mat identity(std::size_t n) {
    GF2Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i] = Word{1} << i;
    return m;
  }

  static GF2Mat from_rows(const std::vector<GF2Vec>& rows, std::size_t cols) {
    GF2Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("GF2Mat::from_rows: ragged rows");
      m.rows_[i] = rows[i].word();
    }
    return m;
  }

  static GF2Mat from_columns(const std::vector<GF2Vec>& cols, std::size_t rows) {
    GF2Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw ShapeError("GF2Mat::from_columns: ragged columns");
      for (std::size_t i = 0; i < rows; ++i) {
        if (cols[j][i]) m.rows_[i] |= Word{1} << j;
      }
    }
    return m;
  }

  /// Rows of '0'/'1' separated by newlines or ';'. Blank lines and lines
  /// starting with '#' are skipped.
  static GF2Mat parse(std::string_view text) {
    std::vector<GF2Vec> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find_first_of("\n;", start);
      if (end == std::string_view::npos) end = text.size();
      std::string line;
      for (char c : text.substr(start, end - start)) {
        if (c != ' ' && c != '\t' && c != '\r') line.push_back(c);
      }
      if (!line.empty() && line[0] != '#') rows.push_back(GF2Vec::parse(line));
      start = end + 1;
    }
    if (rows.empty()) throw std::invalid_argument("matrix text: no rows");
    return from_rows(rows, rows.front().size());
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_.size() == cols_; }

  unsigned operator()(std::size_t i, std::size_t j) const { return static_cast<unsigned>((rows_[i] >> j) & 1); }

  unsigned get(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  void set(std::size_t i, std::size_t j, unsigned bit) {
    check_index(i, j);
    if (bit & 1) {
      rows_[i] |= Word{1} << j;
    } else {
      rows_[i] &= ~(Word{1} << j);
    }
  }

  GF2Vec row(std::size_t i) const { return GF2Vec(cols_, rows_.at(i)); }
  Word row_word(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, const GF2Vec& v) {
    if (v.size() != cols_) throw ShapeError("GF2Mat::set_row: length mismatch");
    rows_.at(i) = v.word();
  }

  GF2Vec col(std::size_t j) const {
    if (j >= cols_) throw ShapeError("GF2Mat::col out of range");
    GF2Vec v(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if ((rows_[i] >> j) & 1) v.set(i, 1);
    }
    return v;
  }

  GF2Mat transpose() const {
    GF2Mat t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((rows_[i] >> j) & 1) t.rows_[j] |= Word{1} << i;
      }
    }
    return t;
  }

  /// Matrix times column vector.
  GF2Vec apply(const GF2Vec& x) const {
    if (x.size() != cols_) throw ShapeError("GF2Mat::apply: vector length mismatch");
    Word out = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) out |= Word{parity(rows_[i] & x.word())} << i;
    return GF2Vec(rows_.size(), out);
  }

  /// Row vector times matrix: the linear form x -> form(M x).
  GF2Vec pullback(const GF2Vec& form) const {
    if (form.size() != rows_.size()) throw ShapeError("GF2Mat::pullback: form length mismatch");
    Word out = 0;
    Word f = form.word();
    while (f) {
      out ^= rows_[static_cast<std::size_t>(std::countr_zero(f))];
      f &= f - 1;
    }
    return GF2Vec(cols_, out);
  }

  GF2Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_.size() || c0 + nc > cols_) throw ShapeError("GF2Mat::block out of range");
    GF2Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) b.rows_[i] = (rows_[r0 + i] >> c0) & low_mask(nc);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const GF2Mat& b) {
    if (r0 + b.rows() > rows_.size() || c0 + b.cols() > cols_) throw ShapeError("GF2Mat::set_block out of range");
    Word mask = low_mask(b.cols()) << c0;
    for (std::size_t i = 0; i < b.rows(); ++i) {
      rows_[r0 + i] = (rows_[r0 + i] & ~mask) | (b.rows_[i] << c0);
    }
  }

  GF2Mat& operator+=(const GF2Mat& o) {
    if (o.rows() != rows() || o.cols_ != cols_) throw ShapeError("GF2Mat: sum shape mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] ^= o.rows_[i];
    return *this;
  }

  friend GF2Mat operator+(GF2Mat a, const GF2Mat& b) {
    a += b;
    return a;
  }

  friend GF2Mat operator*(const GF2Mat& a, const GF2Mat& b) {
    if (a.cols_ != b.rows()) {
      throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols_) + " times " +
                       std::to_string(b.rows()) + "x" + std::to_string(b.cols_));
    }
    GF2Mat c(a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Word r = a.rows_[i];
      Word acc = 0;
      while (r) {
        acc ^= b.rows_[static_cast<std::size_t>(std::countr_zero(r))];
        r &= r - 1;
      }
      c.rows_[i] = acc;
    }
    return c;
  }

  friend bool operator==(const GF2Mat& a, const GF2Mat& b) = default;

  /// Row-major order on packed rows; used only for deterministic sorting.
  friend bool operator<(const GF2Mat& a, const GF2Mat& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a.rows_[i] != b.rows_[i]) return a.row(i) < b.row(i);
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(cols_ * 131 + rows_.size());
    for (Word w : rows_) h = (h ^ std::hash<Word>{}(w)) * 0x100000001b3ULL;
    return h;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s.push_back('\n');
      s += row(i).to_string();
    }
    return s;
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= cols_) throw ShapeError("GF2Mat: index out of range");
  }

  std::size_t cols_ = 0;
  std::vector<Word> rows_;
};

inline GF2Mat mat_mul(const GF2Mat& a, const GF2Mat& b) { return a * b; }

namespace detail {

/// In-place reduced row echelon form; returns pivot column of each pivot row.
inline std::vector<std::size_t> rref(std::vector<Word>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    Word bit = Word{1} << c;
    std::size_t p = r;
    while (p < rows.size() && !(rows[p] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(const GF2Mat& a) {
  std::vector<Word> rows(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows[i] = a.row_word(i);
  return detail::rref(rows, a.cols()).size();
}

/// Inverse, or nullopt when singular.
inline std::optional<GF2Mat> mat_inv(const GF2Mat& a) {
  if (!a.is_square()) throw ShapeError("mat_inv: matrix is not square");
  const std::size_t n = a.rows();
  if (n > 32) throw ShapeError("mat_inv: dimension above 32");
  std::vector<Word> aug(n);
  for (std::size_t i = 0; i < n; ++i) aug[i] = a.row_word(i) | (Word{1} << (n + i));
  auto pivots = detail::rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  GF2Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.set_row(i, GF2Vec(n, aug[i] >> n));
  return inv;
}

struct Solution {
  GF2Vec particular;
  std::vector<GF2Vec> kernel;
};

/// Solves a x = b. Returns a particular solution together with a basis of the
/// homogeneous solution space, or nullopt when the system is inconsistent.
inline std::optional<Solution> solve(const GF2Mat& a, const GF2Vec& b) {
  if (a.rows() != b.size()) throw ShapeError("solve: right-hand side length differs from row count");
  const std::size_t n = a.cols();
  if (n >= 64) throw ShapeError("solve: needs fewer than 64 unknowns");
  std::vector<Word> aug(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) aug[i] = a.row_word(i) | (Word{b[i]} << n);
  auto pivots = detail::rref(aug, n);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    if ((aug[i] >> n) & 1) return std::nullopt;
  }
  Solution sol{GF2Vec(n), {}};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular.set(pivots[r], (aug[r] >> n) & 1);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    GF2Vec k = GF2Vec::unit(n, free);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if ((aug[r] >> free) & 1) k.set(pivots[r], 1);
    }
    sol.kernel.push_back(k);
  }
  return sol;
}

inline std::vector<GF2Vec> kernel_basis(const GF2Mat& a) { return solve(a, GF2Vec(a.rows()))->kernel; }

/// Every element of the span of the given vectors, in ascending bitstring order.
inline std::vector<GF2Vec> span_elements(const std::vector<GF2Vec>& basis, std::size_t len) {
  if (basis.size() > 24) throw GuardError("span_elements: basis too large");
  std::vector<GF2Vec> out;
  for (Word k = 0; k < (Word{1} << basis.size()); ++k) {
    GF2Vec v(len);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((k >> i) & 1) v += basis[i];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace spincover

template <>
struct std::hash<spincover::GF2Vec> {
  std::size_t operator()(const spincover::GF2Vec& v) const noexcept {
    return std::hash<spincover::Word>{}(v.word() * 0x9e3779b97f4a7c15ULL + v.size());
  }
};

template <>
struct std::hash<spincover::GF2Mat> {
  std::size_t operator()(const spincover::GF2Mat& m) const noexcept { return m.hash(); }
};
