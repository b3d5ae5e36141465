#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "addeq/errors.hpp"
#include "addeq/field.hpp"
#include "addeq/gf2.hpp"

namespace addeq {

/// An additive code over F_{2^r}: the F_2-row span of a k x n generator
/// matrix with F_2-independent rows, so |C| = 2^k. Codes are immutable.
class AdditiveCode {
 public:
  AdditiveCode(FieldPtr field, SymbolMatrix gen)
      : field_(std::move(field)), gen_(std::move(gen)) {
    if (!field_) throw std::invalid_argument("null field");
    for (Symbol s : gen_.data)
      if (s >= field_->order())
        throw std::invalid_argument("generator entry outside the field");
    if (rank(binary_image()) != gen_.rows)
      throw std::invalid_argument("generator rows are F2-dependent");
  }

  /// Build from an arbitrary spanning set: dependent rows are dropped by
  /// canonicalizing the binary image.
  static AdditiveCode from_spanning_rows(FieldPtr field, const SymbolMatrix& rows);

  const FieldContext& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  unsigned degree() const { return field_->degree(); }
  std::size_t length() const { return gen_.cols; }
  std::size_t dim() const { return gen_.rows; }  // k = log2 |C|
  const SymbolMatrix& gen() const { return gen_; }

  /// k x rn matrix of basis coefficients: symbol at coordinate i expands to
  /// bits i*r .. i*r+r-1 (bit j is the coefficient of a^j).
  BinaryMatrix binary_image() const {
    const unsigned r = degree();
    BinaryMatrix img(gen_.rows, gen_.cols * r);
    for (std::size_t row = 0; row < gen_.rows; ++row)
      for (std::size_t c = 0; c < gen_.cols; ++c) {
        Symbol s = gen_.at(row, c);
        for (unsigned j = 0; j < r; ++j)
          if ((s >> j) & 1) img.set(row, c * r + j, true);
      }
    return img;
  }

  std::vector<Symbol> word_from_bits(const BitVec& bits) const {
    const unsigned r = degree();
    std::vector<Symbol> word(length(), 0);
    for (std::size_t c = 0; c < length(); ++c) {
      Symbol s = 0;
      for (unsigned j = 0; j < r; ++j)
        if (bits.get(c * r + j)) s |= Symbol(1) << j;
      word[c] = s;
    }
    return word;
  }

  /// Visit all 2^k codewords in Gray-code order. Guard: k <= 20.
  template <typename Fn>
  void enumerate_codewords(Fn&& visit) const {
    if (dim() > 20) throw GuardError("codeword enumeration: k exceeds 20");
    std::vector<Symbol> cur(length(), 0);
    visit(cur);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << dim()); ++m) {
      gen_.xor_row_into(std::countr_zero(m), cur);
      visit(cur);
    }
  }

  bool contains(const std::vector<Symbol>& word) const {
    BinaryMatrix img = binary_image();
    const unsigned r = degree();
    BitVec bits(length() * r);
    for (std::size_t c = 0; c < length(); ++c)
      for (unsigned j = 0; j < r; ++j)
        if ((word[c] >> j) & 1) bits.set(c * r + j, true);
    return BinarySubspace::from_generators(img).contains(bits);
  }

 private:
  FieldPtr field_;
  SymbolMatrix gen_;
};

inline AdditiveCode AdditiveCode::from_spanning_rows(FieldPtr field,
                                                     const SymbolMatrix& rows) {
  const unsigned r = field->degree();
  BinaryMatrix img(rows.rows, rows.cols * r);
  for (std::size_t row = 0; row < rows.rows; ++row)
    for (std::size_t c = 0; c < rows.cols; ++c) {
      Symbol s = rows.at(row, c);
      for (unsigned j = 0; j < r; ++j)
        if ((s >> j) & 1) img.set(row, c * r + j, true);
    }
  auto basis = BinarySubspace::from_generators(img);
  SymbolMatrix gen(basis.dim(), rows.cols);
  for (std::size_t row = 0; row < basis.dim(); ++row) {
    BitVec bits = basis.basis().row_vec(row);
    for (std::size_t c = 0; c < rows.cols; ++c) {
      Symbol s = 0;
      for (unsigned j = 0; j < r; ++j)
        if (bits.get(c * r + j)) s |= Symbol(1) << j;
      gen.at(row, c) = s;
    }
  }
  return AdditiveCode(std::move(field), std::move(gen));
}

/// Same F_2-row span (field degree and length must match for true).
inline bool code_equal(const AdditiveCode& a, const AdditiveCode& b) {
  if (a.degree() != b.degree() || a.length() != b.length()) return false;
  return row_space_equal(a.binary_image(), b.binary_image());
}

/// Counts A_0..A_n of codewords by symbol weight. Guard: k <= 20.
inline std::vector<std::uint64_t> weight_distribution(const AdditiveCode& c) {
  std::vector<std::uint64_t> counts(c.length() + 1, 0);
  c.enumerate_codewords(
      [&](const std::vector<Symbol>& w) { ++counts[symbol_weight(w)]; });
  return counts;
}

// ---------------------------------------------------------------------------
// Dual and hull. The inner product is the trace-Euclidean form
// <x, y> = trace(sum_i x_i y_i), which restricts to the standard binary dual
// at r = 1 and keeps dim C + dim C~ = rn for every r.

namespace detail {

/// r x r matrix T[j][l] = trace(a^j a^l) of the trace pairing on basis
/// coefficients. Nondegenerate for every r.
inline std::vector<std::vector<int>> trace_gram(const FieldContext& f) {
  const unsigned r = f.degree();
  std::vector<std::vector<int>> t(r, std::vector<int>(r, 0));
  for (unsigned j = 0; j < r; ++j)
    for (unsigned l = 0; l < r; ++l) {
      Symbol aj = f.pow(f.degree() == 1 ? Symbol{1} : Symbol{2}, j);
      Symbol al = f.pow(f.degree() == 1 ? Symbol{1} : Symbol{2}, l);
      t[j][l] = f.trace(f.mul(aj, al));
    }
  return t;
}

}  // namespace detail

inline AdditiveCode dual(const AdditiveCode& c) {
  const unsigned r = c.degree();
  const std::size_t n = c.length();
  auto gram = detail::trace_gram(c.field());
  // Constraint matrix: x is dual iff for every generator g,
  // sum_i sum_j x_i^(j) * (sum_l T[j][l] g_i^(l)) = 0.
  BinaryMatrix m(c.dim(), n * r);
  for (std::size_t row = 0; row < c.dim(); ++row)
    for (std::size_t i = 0; i < n; ++i) {
      Symbol g = c.gen().at(row, i);
      for (unsigned j = 0; j < r; ++j) {
        int acc = 0;
        for (unsigned l = 0; l < r; ++l)
          if ((g >> l) & 1) acc ^= gram[j][l];
        if (acc) m.set(row, i * r + j, true);
      }
    }
  BinarySubspace null = nullspace(m);
  SymbolMatrix gen(null.dim(), n);
  for (std::size_t row = 0; row < null.dim(); ++row) {
    BitVec bits = null.basis().row_vec(row);
    for (std::size_t i = 0; i < n; ++i) {
      Symbol s = 0;
      for (unsigned j = 0; j < r; ++j)
        if (bits.get(i * r + j)) s |= Symbol(1) << j;
      gen.at(row, i) = s;
    }
  }
  return AdditiveCode(c.field_ptr(), std::move(gen));
}

/// H(C) = C intersect dual(C), mapped back to symbol form.
inline AdditiveCode hull(const AdditiveCode& c) {
  auto u = BinarySubspace::from_generators(c.binary_image());
  auto v = BinarySubspace::from_generators(dual(c).binary_image());
  auto w = intersect(u, v);
  SymbolMatrix gen(w.dim(), c.length());
  for (std::size_t row = 0; row < w.dim(); ++row) {
    auto word = c.word_from_bits(w.basis().row_vec(row));
    for (std::size_t i = 0; i < c.length(); ++i) gen.at(row, i) = word[i];
  }
  return AdditiveCode(c.field_ptr(), std::move(gen));
}

/// Code of the same length with coordinate `i` (0-based) set to zero in
/// every word. The dimension can drop.
inline AdditiveCode truncate_zero(const AdditiveCode& c, std::size_t i) {
  if (i >= c.length()) throw std::invalid_argument("coordinate out of range");
  SymbolMatrix gen = c.gen();
  for (std::size_t row = 0; row < gen.rows; ++row) gen.at(row, i) = 0;
  return AdditiveCode::from_spanning_rows(c.field_ptr(), gen);
}

// ---------------------------------------------------------------------------
// Equivalence witnesses.

/// Permutation of the 2^r field symbols at one coordinate, as a table.
using SymbolPerm = std::vector<Symbol>;

inline SymbolPerm identity_perm(std::uint32_t q) {
  SymbolPerm p(q);
  std::iota(p.begin(), p.end(), Symbol{0});
  return p;
}

inline bool perm_is_additive(const SymbolPerm& p) {
  const std::uint32_t q = static_cast<std::uint32_t>(p.size());
  if (p[0] != 0) return false;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = x; y < q; ++y)
      if (p[x ^ y] != (p[x] ^ p[y])) return false;
  return true;
}

inline bool perm_fixes_zero(const SymbolPerm& p) { return p[0] == 0; }

/// Witness for code equivalence: an invertible F_2 row transform, a column
/// permutation, and one symbol permutation per target coordinate. The row
/// transform never changes the code as a set; it pins down a row-for-row
/// correspondence between the two generator matrices.
struct EquivalenceWitness {
  BinaryMatrix row_transform;         // k x k, invertible over F_2
  std::vector<std::size_t> col_perm;  // source coordinate -> target coordinate
  std::vector<SymbolPerm> sigma;      // indexed by target coordinate

  bool all_sigma_additive() const {
    for (const auto& p : sigma)
      if (!perm_is_additive(p)) return false;
    return true;
  }
  bool all_sigma_fix_zero() const {
    for (const auto& p : sigma)
      if (!perm_fixes_zero(p)) return false;
    return true;
  }
  bool all_sigma_identity() const {
    for (const auto& p : sigma)
      for (std::size_t s = 0; s < p.size(); ++s)
        if (p[s] != s) return false;
    return true;
  }

  static EquivalenceWitness identity(std::size_t k, std::size_t n,
                                     std::uint32_t q) {
    EquivalenceWitness w;
    w.row_transform = BinaryMatrix::identity(k);
    w.col_perm.resize(n);
    std::iota(w.col_perm.begin(), w.col_perm.end(), std::size_t{0});
    w.sigma.assign(n, identity_perm(q));
    return w;
  }
};

namespace detail {

inline void check_witness_shape(const AdditiveCode& c,
                                const EquivalenceWitness& w) {
  if (w.row_transform.rows() != c.dim() || w.row_transform.cols() != c.dim())
    throw std::invalid_argument("witness row transform has wrong shape");
  if (w.col_perm.size() != c.length() || w.sigma.size() != c.length())
    throw std::invalid_argument("witness does not match the code length");
  std::vector<char> hit(c.length(), 0);
  for (std::size_t t : w.col_perm) {
    if (t >= c.length() || hit[t])
      throw std::invalid_argument("witness column map is not a permutation");
    hit[t] = 1;
  }
  for (const auto& p : w.sigma) {
    if (p.size() != c.field().order())
      throw std::invalid_argument("witness symbol map has wrong domain");
    std::vector<char> seen(p.size(), 0);
    for (Symbol s : p) {
      if (s >= p.size() || seen[s])
        throw std::invalid_argument("witness symbol map is not a bijection");
      seen[s] = 1;
    }
  }
}

}  // namespace detail

/// Apply row transform, then the column permutation, then the coordinate
/// symbol maps. With additive symbol maps the generator transforms row by
/// row; otherwise all codewords are mapped and the image must come out
/// additively closed.
inline AdditiveCode apply_witness(const AdditiveCode& c,
                                  const EquivalenceWitness& w) {
  detail::check_witness_shape(c, w);
  if (rank(w.row_transform) != c.dim())
    throw std::invalid_argument("witness row transform is singular");
  const std::size_t n = c.length();
  if (w.all_sigma_additive()) {
    SymbolMatrix out(c.dim(), n);
    for (std::size_t row = 0; row < c.dim(); ++row) {
      std::vector<Symbol> combined(n, 0);
      for (std::size_t b = 0; b < c.dim(); ++b)
        if (w.row_transform.get(row, b)) c.gen().xor_row_into(b, combined);
      for (std::size_t j = 0; j < n; ++j)
        out.at(row, w.col_perm[j]) = w.sigma[w.col_perm[j]][combined[j]];
    }
    return AdditiveCode(c.field_ptr(), std::move(out));
  }
  // General symbol permutations: map the full codeword set and check that
  // the image is still an F_2-subspace.
  const unsigned r = c.degree();
  BinaryMatrix images(0, n * r);
  c.enumerate_codewords([&](const std::vector<Symbol>& word) {
    BitVec bits(n * r);
    for (std::size_t j = 0; j < n; ++j) {
      Symbol s = w.sigma[w.col_perm[j]][word[j]];
      for (unsigned b = 0; b < r; ++b)
        if ((s >> b) & 1) bits.set(w.col_perm[j] * r + b, true);
    }
    images.append_row(bits);
  });
  if (rank(images) != c.dim())
    throw std::invalid_argument(
        "non-additive symbol maps produced a set that is not additively closed");
  auto basis = BinarySubspace::from_generators(images);
  SymbolMatrix gen(basis.dim(), n);
  for (std::size_t row = 0; row < basis.dim(); ++row) {
    BitVec bits = basis.basis().row_vec(row);
    for (std::size_t j = 0; j < n; ++j) {
      Symbol s = 0;
      for (unsigned b = 0; b < r; ++b)
        if (bits.get(j * r + b)) s |= Symbol(1) << b;
      gen.at(row, j) = s;
    }
  }
  return AdditiveCode(c.field_ptr(), std::move(gen));
}

// ---------------------------------------------------------------------------
// Brute-force equivalence search.

enum class EquivClass { Identity, Additive, ZeroFixing, All };

inline const char* to_string(EquivClass c) {
  switch (c) {
    case EquivClass::Identity: return "identity";
    case EquivClass::Additive: return "additive";
    case EquivClass::ZeroFixing: return "zero-fixing";
    case EquivClass::All: return "all";
  }
  return "?";
}

namespace detail {

/// All candidate symbol maps for one coordinate in the given class.
inline std::vector<SymbolPerm> coordinate_maps(const FieldContext& f,
                                               EquivClass cls) {
  const std::uint32_t q = f.order();
  const unsigned r = f.degree();
  std::vector<SymbolPerm> out;
  switch (cls) {
    case EquivClass::Identity:
      out.push_back(identity_perm(q));
      break;
    case EquivClass::Additive: {
      // invertible F_2-linear maps on the r basis coefficients
      std::vector<Symbol> cols(r);
      auto rec = [&](auto&& self, unsigned col) -> void {
        if (col == r) {
          SymbolPerm p(q);
          for (std::uint32_t x = 0; x < q; ++x) {
            Symbol y = 0;
            for (unsigned j = 0; j < r; ++j)
              if ((x >> j) & 1) y ^= cols[j];
            p[x] = y;
          }
          std::vector<char> seen(q, 0);
          for (Symbol s : p) {
            if (seen[s]) return;
            seen[s] = 1;
          }
          out.push_back(std::move(p));
          return;
        }
        for (std::uint32_t v = 1; v < q; ++v) {
          cols[col] = static_cast<Symbol>(v);
          self(self, col + 1);
        }
      };
      rec(rec, 0);
      break;
    }
    case EquivClass::ZeroFixing: {
      SymbolPerm base(q);
      std::iota(base.begin(), base.end(), Symbol{0});
      do {
        out.push_back(base);
      } while (std::next_permutation(base.begin() + 1, base.end()));
      break;
    }
    case EquivClass::All: {
      SymbolPerm base(q);
      std::iota(base.begin(), base.end(), Symbol{0});
      std::sort(base.begin(), base.end());
      do {
        out.push_back(base);
      } while (std::next_permutation(base.begin(), base.end()));
      break;
    }
  }
  return out;
}

/// Solve S * A = B over F_2 for S (A is k x m with rank k; B is any number
/// of rows of width m). Fails when some row of B is outside A's row space.
inline std::optional<BinaryMatrix> solve_row_transform(const BinaryMatrix& a,
                                                       const BinaryMatrix& b) {
  const std::size_t k = a.rows(), m = a.cols();
  // Reduce [A | I]; each row of B is then expressed in A's row basis by
  // cancelling pivots.
  BinaryMatrix work(k, m + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) work.set(i, j, a.get(i, j));
    work.set(i, m + i, true);
  }
  std::size_t pivot = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < m && pivot < k; ++c) {
    std::size_t sel = pivot;
    while (sel < k && !work.get(sel, c)) ++sel;
    if (sel == k) continue;
    work.swap_rows(pivot, sel);
    for (std::size_t r2 = 0; r2 < k; ++r2)
      if (r2 != pivot && work.get(r2, c)) work.xor_rows(r2, pivot);
    pivot_cols.push_back(c);
    ++pivot;
  }
  if (pivot != k) return std::nullopt;
  BinaryMatrix s(b.rows(), k);
  for (std::size_t row = 0; row < b.rows(); ++row) {
    BitVec residual = b.row_vec(row);
    BitVec coeffs(k);
    for (std::size_t p = 0; p < k; ++p)
      if (residual.get(pivot_cols[p])) {
        for (std::size_t j = 0; j < m; ++j)
          if (work.get(p, j)) residual.set(j, !residual.get(j));
        for (std::size_t j = 0; j < k; ++j)
          if (work.get(p, m + j)) coeffs.set(j, !coeffs.get(j));
      }
    if (!residual.is_zero()) return std::nullopt;
    s.set_row(row, coeffs);
  }
  return s;
}

}  // namespace detail

struct EquivSearchOptions {
  EquivClass cls = EquivClass::ZeroFixing;
  std::uint64_t budget = 10'000'000;  // max (column perm, symbol map) candidates
};

/// Exhaustive search for an equivalence witness. Guards: n <= 8, r <= 2 for
/// classes other than identity, and the candidate count n! * |class|^n must
/// fit the budget. Returns a validated witness or nothing.
inline std::optional<EquivalenceWitness> brute_force_equivalence(
    const AdditiveCode& c, const AdditiveCode& cprime,
    const EquivSearchOptions& opts = {}) {
  if (c.degree() != cprime.degree()) return std::nullopt;
  if (c.length() != cprime.length()) return std::nullopt;
  if (c.dim() != cprime.dim()) return std::nullopt;
  const std::size_t n = c.length();
  const unsigned r = c.degree();
  if (n > 8) throw GuardError("brute_force_equivalence: n exceeds 8");
  if (opts.cls != EquivClass::Identity && r > 2)
    throw GuardError("brute_force_equivalence: r exceeds 2 for this class");

  auto maps = detail::coordinate_maps(c.field(), opts.cls);
  double cand = 1;
  for (std::size_t i = 2; i <= n; ++i) cand *= double(i);
  for (std::size_t i = 0; i < n; ++i) cand *= double(maps.size());
  if (cand > double(opts.budget))
    throw GuardError("brute_force_equivalence: candidate count exceeds budget");

  // target membership structure
  auto target_space = BinarySubspace::from_generators(cprime.binary_image());

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> choice(n, 0);

  auto try_candidate = [&](const std::vector<std::size_t>& p,
                           const std::vector<std::size_t>& pick)
      -> std::optional<EquivalenceWitness> {
    EquivalenceWitness w;
    w.row_transform = BinaryMatrix::identity(c.dim());
    w.col_perm = p;
    w.sigma.resize(n);
    for (std::size_t j = 0; j < n; ++j) w.sigma[p[j]] = maps[pick[j]];

    bool additive = true;
    for (std::size_t j = 0; j < n && additive; ++j)
      additive = perm_is_additive(w.sigma[j]);

    if (additive) {
      // generator rows map to a spanning set of the image
      BinaryMatrix mapped(c.dim(), n * r);
      for (std::size_t row = 0; row < c.dim(); ++row) {
        for (std::size_t j = 0; j < n; ++j) {
          Symbol s = w.sigma[p[j]][c.gen().at(row, j)];
          for (unsigned b = 0; b < r; ++b)
            if ((s >> b) & 1) mapped.set(row, p[j] * r + b, true);
        }
        if (!target_space.contains(mapped.row_vec(row))) return std::nullopt;
      }
      // All rows land in the target and stay independent, so they span it.
      // Solve S * mapped = G'; additive maps commute with row combinations,
      // so the same S works when applied before the columns.
      if (auto s = detail::solve_row_transform(mapped, cprime.binary_image()))
        w.row_transform = *s;
      return w;
    }

    // general maps: every codeword must land in the target set
    bool ok = true;
    c.enumerate_codewords([&](const std::vector<Symbol>& word) {
      if (!ok) return;
      BitVec bits(n * r);
      for (std::size_t j = 0; j < n; ++j) {
        Symbol s = w.sigma[p[j]][word[j]];
        for (unsigned b = 0; b < r; ++b)
          if ((s >> b) & 1) bits.set(p[j] * r + b, true);
      }
      if (!target_space.contains(bits)) ok = false;
    });
    if (!ok) return std::nullopt;
    return w;
  };

  std::sort(perm.begin(), perm.end());
  do {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      if (auto w = try_candidate(perm, choice)) return w;
      std::size_t pos = 0;
      while (pos < n && ++choice[pos] == maps.size()) {
        choice[pos] = 0;
        ++pos;
      }
      if (pos == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Invariant-based inequivalence certificates.

/// Sound one-sided test: any mismatch certifies inequivalence under
/// witnesses whose symbol maps fix zero. Hull data enters only for binary
/// codes, where it is permutation-invariant; over proper extensions the
/// hull can change under additive coordinate maps, so it is not compared.
struct CertificateResult {
  bool inequivalent = false;
  std::string reason;  // empty when inconclusive
};

inline CertificateResult invariant_certificate(const AdditiveCode& a,
                                               const AdditiveCode& b) {
  if (a.length() != b.length()) return {true, "length"};
  if (a.degree() != b.degree()) return {true, "field degree"};
  if (a.dim() != b.dim()) return {true, "code size"};
  if (a.dim() > 20) throw GuardError("invariant_certificate: k exceeds 20");
  if (weight_distribution(a) != weight_distribution(b))
    return {true, "weight distribution"};
  if (a.degree() == 1) {
    AdditiveCode ha = hull(a), hb = hull(b);
    if (ha.dim() != hb.dim()) return {true, "hull dimension"};
    if (weight_distribution(ha) != weight_distribution(hb))
      return {true, "hull weight distribution"};
  }
  return {false, ""};
}

// ---------------------------------------------------------------------------
// Code file format: header "r n k", then k lines of n hex symbols.

inline std::string format_code(const AdditiveCode& c) {
  std::ostringstream out;
  out << c.degree() << ' ' << c.length() << ' ' << c.dim() << '\n';
  for (std::size_t row = 0; row < c.dim(); ++row) {
    for (std::size_t j = 0; j < c.length(); ++j) {
      if (j) out << ' ';
      out << symbol_to_hex(c.gen().at(row, j));
    }
    out << '\n';
  }
  return out.str();
}

inline AdditiveCode parse_code(const std::string& text) {
  std::istringstream in(text);
  unsigned r = 0;
  std::size_t n = 0, k = 0;
  if (!(in >> r >> n >> k)) throw ParseError("code file: bad header");
  if (r < 1 || r > 16) throw ParseError("code file: degree out of range");
  SymbolMatrix gen(k, n);
  for (std::size_t row = 0; row < k; ++row)
    for (std::size_t j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("code file: truncated matrix");
      gen.at(row, j) = symbol_from_hex(tok, r);
    }
  std::string extra;
  if (in >> extra) throw ParseError("code file: trailing data");
  try {
    return AdditiveCode(make_field(r), std::move(gen));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("code file: ") + e.what());
  }
}

inline AdditiveCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

inline void save_code(const AdditiveCode& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write code file: " + path);
  out << format_code(c);
}

}  // namespace addeq
