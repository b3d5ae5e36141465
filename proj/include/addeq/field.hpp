#pragma once

#include <charconv>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "addeq/errors.hpp"

namespace addeq {

/// A field element of F_{2^r}, encoded as the coefficient vector of the
/// basis {1, a, ..., a^{r-1}} packed into the low r bits (a is the root of
/// the primitive polynomial; bit j is the coefficient of a^j).
using Symbol = std::uint16_t;

namespace detail {

// Primitive polynomials over F_2, one per degree 1..16, full bit mask
// including the leading term. Each is verified at context construction:
// x must have multiplicative order exactly 2^r - 1.
inline constexpr std::uint32_t kPrimitivePoly[17] = {
    0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,  0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};

}  // namespace detail

/// Arithmetic context for F_{2^r}, r <= 16. Multiplication and inversion go
/// through log/antilog tables with respect to the primitive element e = a.
/// Immutable after construction; all operations are const and thread-safe.
class FieldContext {
 public:
  explicit FieldContext(unsigned degree) : r_(degree) {
    if (degree < 1 || degree > 16)
      throw std::invalid_argument("field degree must be in 1..16");
    poly_ = detail::kPrimitivePoly[degree];
    const std::uint32_t q = 1u << r_;
    qm1_ = q - 1;
    log_.assign(q, 0);
    antilog_.assign(qm1_, 0);
    std::vector<char> seen(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < qm1_; ++i) {
      if (seen[x]) throw std::logic_error("primitive polynomial table broken");
      seen[x] = 1;
      antilog_[i] = static_cast<Symbol>(x);
      log_[x] = static_cast<Symbol>(i);
      x <<= 1;
      if (x & q) x ^= poly_;
    }
    if (x != 1) throw std::logic_error("primitive polynomial table broken");
    trace_.assign(q, 0);
    for (std::uint32_t s = 1; s < q; ++s) {
      Symbol acc = 0, t = static_cast<Symbol>(s);
      for (unsigned j = 0; j < r_; ++j) {
        acc = static_cast<Symbol>(acc ^ t);
        t = mul(t, t);
      }
      if (acc > 1) throw std::logic_error("trace left the prime subfield");
      trace_[s] = acc;
    }
  }

  unsigned degree() const { return r_; }
  std::uint32_t order() const { return qm1_ + 1; }

  /// The primitive element e. For r = 1 this is 1; otherwise the polynomial
  /// root a itself (encoding 2).
  Symbol primitive_element() const { return antilog_[r_ == 1 ? 0 : 1 % qm1_]; }

  static Symbol add(Symbol a, Symbol b) { return a ^ b; }

  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= qm1_) s -= qm1_;
    return antilog_[s];
  }

  Symbol inv(Symbol a) const {
    if (a == 0) throw std::invalid_argument("inversion of zero");
    return antilog_[(qm1_ - log_[a]) % qm1_];
  }

  Symbol pow(Symbol a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? Symbol{1} : Symbol{0};
    return antilog_[(log_[a] * (k % qm1_)) % qm1_];
  }

  /// e^k for k >= 0.
  Symbol power_of_e(std::uint64_t k) const {
    return pow(primitive_element(), k);
  }

  /// Trace map onto F_2: a + a^2 + a^4 + ... + a^(2^(r-1)); returns 0 or 1.
  Symbol trace(Symbol a) const { return trace_[a]; }

 private:
  unsigned r_;
  std::uint32_t poly_ = 0;
  std::uint32_t qm1_ = 0;
  std::vector<Symbol> log_, antilog_, trace_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

inline FieldPtr make_field(unsigned degree) {
  return std::make_shared<const FieldContext>(degree);
}

/// Minimal extension degree r with 2^r > h, so that e^0..e^(h-1) are
/// pairwise distinct and nonzero.
inline unsigned choose_degree(unsigned h) {
  if (h < 1) throw std::invalid_argument("choose_degree: h must be >= 1");
  unsigned r = 1;
  while ((1u << r) <= h) ++r;
  return r;
}

inline std::string symbol_to_hex(Symbol s) {
  char buf[8];
  auto res = std::to_chars(buf, buf + sizeof buf, s, 16);
  return std::string(buf, res.ptr);
}

inline Symbol symbol_from_hex(std::string_view text, unsigned degree) {
  std::uint32_t value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ParseError("bad field element: '" + std::string(text) + "'");
  if (value >= (1u << degree))
    throw ParseError("field element out of range: '" + std::string(text) + "'");
  return static_cast<Symbol>(value);
}

/// Dense row-major matrix of field symbols.
struct SymbolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Symbol> data;

  SymbolMatrix() = default;
  SymbolMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Symbol& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Symbol at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::vector<Symbol> row(std::size_t r) const {
    return std::vector<Symbol>(data.begin() + r * cols,
                               data.begin() + (r + 1) * cols);
  }

  void xor_row_into(std::size_t src, std::vector<Symbol>& dst) const {
    for (std::size_t c = 0; c < cols; ++c) dst[c] ^= at(src, c);
  }

  friend bool operator==(const SymbolMatrix&, const SymbolMatrix&) = default;
};

/// Number of nonzero symbols in a word.
inline std::size_t symbol_weight(const std::vector<Symbol>& word) {
  std::size_t w = 0;
  for (Symbol s : word) w += (s != 0);
  return w;
}

}  // namespace addeq
