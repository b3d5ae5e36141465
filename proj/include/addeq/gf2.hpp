#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "addeq/errors.hpp"

namespace addeq {

/// Packed bit vector over F_2.
struct BitVec {
  std::size_t bits = 0;
  std::vector<std::uint64_t> words;

  BitVec() = default;
  explicit BitVec(std::size_t n) : bits(n), words((n + 63) / 64, 0) {}

  bool get(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words[i >> 6] |= m;
    else
      words[i >> 6] &= ~m;
  }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= o.words[w];
    return *this;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words) n += std::popcount(w);
    return n;
  }

  bool is_zero() const {
    for (std::uint64_t w : words)
      if (w) return false;
    return true;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec& a, const BitVec& b) {
    return a.words <=> b.words;
  }
};

/// Dense bit-packed matrix over F_2, one row per run of 64-bit words.
/// Tail bits past `cols` are kept zero.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
        data_(rows * wpr_, 0) {}

  static BinaryMatrix identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    if (v)
      data_[r * wpr_ + (c >> 6)] |= m;
    else
      data_[r * wpr_ + (c >> 6)] &= ~m;
  }

  void xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = &data_[dst * wpr_];
    const std::uint64_t* s = &data_[src * wpr_];
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(&data_[i * wpr_], &data_[i * wpr_] + wpr_,
                     &data_[j * wpr_]);
  }

  bool row_is_zero(std::size_t r) const {
    const std::uint64_t* p = &data_[r * wpr_];
    for (std::size_t w = 0; w < wpr_; ++w)
      if (p[w]) return false;
    return true;
  }

  BitVec row_vec(std::size_t r) const {
    BitVec v(cols_);
    std::copy(&data_[r * wpr_], &data_[r * wpr_] + wpr_, v.words.begin());
    return v;
  }

  void set_row(std::size_t r, const BitVec& v) {
    std::copy(v.words.begin(), v.words.end(), &data_[r * wpr_]);
  }

  void xor_row_with_vec(std::size_t r, const BitVec& v) {
    std::uint64_t* d = &data_[r * wpr_];
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= v.words[w];
  }

  void append_row(const BitVec& v) {
    data_.resize(data_.size() + wpr_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
  }

  BinaryMatrix transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  /// M * x for a column vector x of length cols(); returns length rows().
  BitVec mul_vec(const BitVec& x) const {
    BitVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      const std::uint64_t* p = &data_[r * wpr_];
      for (std::size_t w = 0; w < wpr_; ++w) acc ^= p[w] & x.words[w];
      y.set(r, std::popcount(acc) & 1);
    }
    return y;
  }

  /// Row-combination product: result row i = XOR of rows j of `m` with
  /// this(i, j) set. Requires cols() == m.rows().
  BinaryMatrix times(const BinaryMatrix& m) const {
    BinaryMatrix out(rows_, m.cols());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) out.xor_rows_from(i, m, j);
    return out;
  }

  /// Reduce to the unique reduced row echelon form in place; returns rank.
  std::size_t rref_in_place() {
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < cols_ && pivot < rows_; ++c) {
      std::size_t sel = pivot;
      while (sel < rows_ && !get(sel, c)) ++sel;
      if (sel == rows_) continue;
      swap_rows(pivot, sel);
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != pivot && get(r, c)) xor_rows(r, pivot);
      ++pivot;
    }
    return pivot;
  }

  std::string to_text() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
      out += '\n';
    }
    return out;
  }

  static BinaryMatrix from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) lines.push_back(line);
    if (lines.empty()) return BinaryMatrix(0, 0);
    BinaryMatrix m(lines.size(), lines[0].size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
      if (lines[r].size() != lines[0].size())
        throw ParseError("ragged binary matrix text");
      for (std::size_t c = 0; c < lines[r].size(); ++c) {
        if (lines[r][c] != '0' && lines[r][c] != '1')
          throw ParseError("binary matrix text must be '0'/'1'");
        m.set(r, c, lines[r][c] == '1');
      }
    }
    return m;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  void xor_rows_from(std::size_t dst, const BinaryMatrix& src,
                     std::size_t srow) {
    std::uint64_t* d = &data_[dst * wpr_];
    const std::uint64_t* s = &src.data_[srow * src.wpr_];
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
  }

  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

inline std::pair<BinaryMatrix, std::size_t> rref(const BinaryMatrix& m) {
  BinaryMatrix out = m;
  std::size_t rank = out.rref_in_place();
  return {std::move(out), rank};
}

inline std::size_t rank(const BinaryMatrix& m) {
  BinaryMatrix tmp = m;
  return tmp.rref_in_place();
}

inline bool row_space_equal(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("row_space_equal: column count mismatch");
  auto [ra, ka] = rref(a);
  auto [rb, kb] = rref(b);
  if (ka != kb) return false;
  for (std::size_t r = 0; r < ka; ++r)
    if (ra.row_vec(r) != rb.row_vec(r)) return false;
  return true;
}

/// Subspace of F_2^n held as a canonical RREF basis (no zero rows, pivot
/// columns strictly increasing). Canonical form makes equality structural.
class BinarySubspace {
 public:
  BinarySubspace() = default;

  static BinarySubspace zero(std::size_t ambient) {
    BinarySubspace s;
    s.ambient_ = ambient;
    s.basis_ = BinaryMatrix(0, ambient);
    return s;
  }

  static BinarySubspace full(std::size_t ambient) {
    return from_generators(BinaryMatrix::identity(ambient));
  }

  /// Canonicalize an arbitrary spanning set.
  static BinarySubspace from_generators(const BinaryMatrix& gens) {
    auto [r, k] = rref(gens);
    BinarySubspace s;
    s.ambient_ = gens.cols();
    s.basis_ = BinaryMatrix(k, gens.cols());
    for (std::size_t i = 0; i < k; ++i) s.basis_.set_row(i, r.row_vec(i));
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const BinaryMatrix& basis() const { return basis_; }

  bool contains(const BitVec& v) const {
    BitVec x = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      std::size_t p = pivot_col(r);
      if (x.get(p)) x ^= basis_.row_vec(r);
    }
    return x.is_zero();
  }

  bool contains(const BinarySubspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row_vec(r))) return false;
    return true;
  }

  friend bool operator==(const BinarySubspace&, const BinarySubspace&) = default;

 private:
  std::size_t pivot_col(std::size_t r) const {
    for (std::size_t c = 0; c < ambient_; ++c)
      if (basis_.get(r, c)) return c;
    return ambient_;
  }

  std::size_t ambient_ = 0;
  BinaryMatrix basis_;
};

/// {x : Mx = 0}, dimension cols - rank.
inline BinarySubspace nullspace(const BinaryMatrix& m) {
  auto [r, k] = rref(m);
  std::size_t n = m.cols();
  std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
  std::vector<char> is_pivot(n, 0);
  {
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < k; ++c)
      if (r.get(row, c)) {
        pivot_of_col[c] = row;
        is_pivot[c] = 1;
        ++row;
      }
  }
  BinaryMatrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(n);
    v.set(f, true);
    for (std::size_t c = 0; c < n; ++c)
      if (is_pivot[c] && r.get(pivot_of_col[c], f)) v.set(c, true);
    basis.append_row(v);
  }
  return BinarySubspace::from_generators(basis);
}

inline BinarySubspace subspace_sum(const BinarySubspace& u,
                                   const BinarySubspace& v) {
  if (u.ambient() != v.ambient())
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  BinaryMatrix stacked(0, u.ambient());
  for (std::size_t r = 0; r < u.dim(); ++r)
    stacked.append_row(u.basis().row_vec(r));
  for (std::size_t r = 0; r < v.dim(); ++r)
    stacked.append_row(v.basis().row_vec(r));
  return BinarySubspace::from_generators(stacked);
}

/// U ∩ V via the kernel of the stacked system [U^T | V^T].
inline BinarySubspace intersect(const BinarySubspace& u,
                                const BinarySubspace& v) {
  if (u.ambient() != v.ambient())
    throw std::invalid_argument("intersect: ambient mismatch");
  std::size_t a = u.dim(), b = v.dim(), n = u.ambient();
  BinaryMatrix t(n, a + b);
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t c = 0; c < n; ++c)
      if (u.basis().get(j, c)) t.set(c, j, true);
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t c = 0; c < n; ++c)
      if (v.basis().get(j, c)) t.set(c, a + j, true);
  BinarySubspace ker = nullspace(t);
  BinaryMatrix gens(0, n);
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    BitVec xy = ker.basis().row_vec(r);
    BitVec w(n);
    for (std::size_t j = 0; j < a; ++j)
      if (xy.get(j)) w ^= u.basis().row_vec(j);
    gens.append_row(w);
  }
  return BinarySubspace::from_generators(gens);
}

/// Visit all 2^dim vectors of S (Gray-code order). Guard: dim <= 24.
template <typename Fn>
void enumerate_vectors(const BinarySubspace& s, Fn&& visit) {
  std::size_t d = s.dim();
  if (d > 24) throw GuardError("enumerate_vectors: dimension exceeds 24");
  BitVec cur(s.ambient());
  visit(cur);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << d); ++i) {
    cur ^= s.basis().row_vec(std::countr_zero(i));
    visit(cur);
  }
}

inline std::vector<BitVec> all_vectors(const BinarySubspace& s) {
  std::vector<BitVec> out;
  out.reserve(std::size_t{1} << s.dim());
  enumerate_vectors(s, [&](const BitVec& v) { out.push_back(v); });
  return out;
}

/// Number of d-dimensional subspaces of an m-dimensional space over F_2,
/// saturating at `cap`.
inline std::uint64_t gaussian_binomial(std::size_t m, std::size_t d,
                                       std::uint64_t cap = UINT64_MAX) {
  if (d > m) return 0;
  // [m,d] = [m-1,d-1] + 2^d [m-1,d]
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = std::min(d, i); j > 0; --j) {
      unsigned __int128 v =
          (unsigned __int128)row[j] * ((std::uint64_t{1} << std::min<std::size_t>(j, 63))) +
          row[j - 1];
      row[j] = v > cap ? cap : static_cast<std::uint64_t>(v);
    }
  }
  return row[d];
}

/// Visit every d-dimensional subspace of S exactly once, via canonical RREF
/// profiles in S-coordinates mapped through S's basis. The visit count is
/// the Gaussian binomial [dim(S), d]_2; it must not exceed `guard`.
template <typename Fn>
void enumerate_subspaces(const BinarySubspace& s, std::size_t d, Fn&& visit,
                         std::uint64_t guard = (std::uint64_t{1} << 20)) {
  std::size_t m = s.dim();
  if (d > m) return;
  if (gaussian_binomial(m, d) > guard)
    throw GuardError("enumerate_subspaces: subspace count exceeds guard");
  if (d == 0) {
    visit(BinarySubspace::zero(s.ambient()));
    return;
  }
  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  auto emit_for_pivots = [&]() {
    std::vector<char> is_pivot(m, 0);
    for (std::size_t p : pivots) is_pivot[p] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = pivots[i] + 1; j < m; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pos.size());
         ++mask) {
      BinaryMatrix gens(0, s.ambient());
      for (std::size_t i = 0; i < d; ++i) {
        BitVec w = s.basis().row_vec(pivots[i]);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          if (free_pos[t].first == i && ((mask >> t) & 1))
            w ^= s.basis().row_vec(free_pos[t].second);
        gens.append_row(w);
      }
      visit(BinarySubspace::from_generators(gens));
    }
  };
  // iterate over all d-combinations of 0..m-1
  while (true) {
    emit_for_pivots();
    std::size_t i = d;
    while (i > 0 && pivots[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

inline std::vector<BinarySubspace> all_subspaces(
    const BinarySubspace& s, std::size_t d,
    std::uint64_t guard = (std::uint64_t{1} << 20)) {
  std::vector<BinarySubspace> out;
  enumerate_subspaces(s, d, [&](const BinarySubspace& x) { out.push_back(x); },
                      guard);
  return out;
}

}  // namespace addeq
