#pragma once

// Shared helpers for the test suites: seeded random codes, random witnesses,
// and small brute-force oracles kept independent of the library paths they
// check.

#include <random>
#include <vector>

#include "addeq/codes.hpp"
#include "addeq/random.hpp"

namespace testutil {

using namespace addeq;

/// Random additive code with exactly k F_2-independent generator rows.
inline AdditiveCode random_code(unsigned r, std::size_t n, std::size_t k,
                                std::mt19937_64& rng) {
  FieldPtr f = make_field(r);
  while (true) {
    SymbolMatrix gen(k, n);
    for (Symbol& s : gen.data)
      s = static_cast<Symbol>(uniform_below(rng, f->order()));
    BinaryMatrix img(k, n * r);
    for (std::size_t row = 0; row < k; ++row)
      for (std::size_t c = 0; c < n; ++c)
        for (unsigned j = 0; j < r; ++j)
          if ((gen.at(row, c) >> j) & 1) img.set(row, c * r + j, true);
    if (rank(img) == k) return AdditiveCode(f, std::move(gen));
  }
}

inline BinaryMatrix random_invertible(std::size_t k, std::mt19937_64& rng) {
  while (true) {
    BinaryMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        m.set(i, j, rng() & 1);
    if (rank(m) == k) return m;
  }
}

/// Random invertible additive symbol map on F_{2^r} as a table.
inline SymbolPerm random_additive_perm(unsigned r, std::mt19937_64& rng) {
  const std::uint32_t q = 1u << r;
  while (true) {
    std::vector<Symbol> cols(r);
    for (unsigned j = 0; j < r; ++j)
      cols[j] = static_cast<Symbol>(1 + uniform_below(rng, q - 1));
    SymbolPerm p(q);
    std::vector<char> seen(q, 0);
    bool bij = true;
    for (std::uint32_t x = 0; x < q && bij; ++x) {
      Symbol y = 0;
      for (unsigned j = 0; j < r; ++j)
        if ((x >> j) & 1) y ^= cols[j];
      p[x] = y;
      if (seen[y]) bij = false;
      seen[y] = 1;
    }
    if (bij) return p;
  }
}

inline EquivalenceWitness random_additive_witness(const AdditiveCode& c,
                                                  std::mt19937_64& rng) {
  const std::size_t n = c.length();
  EquivalenceWitness w;
  w.row_transform = random_invertible(c.dim(), rng);
  w.col_perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.col_perm[i] = i;
  for (std::size_t i = n; i > 1; --i)
    std::swap(w.col_perm[i - 1], w.col_perm[uniform_below(rng, i)]);
  w.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    w.sigma[i] = random_additive_perm(c.degree(), rng);
  return w;
}

/// Oracle dual: scan every vector of F_{2^r}^n and keep those orthogonal to
/// all codewords under trace(sum x_i y_i). Exponential; tiny inputs only.
inline std::vector<std::vector<Symbol>> oracle_dual(const AdditiveCode& c) {
  const FieldContext& f = c.field();
  const std::uint32_t q = f.order();
  const std::size_t n = c.length();
  std::vector<std::vector<Symbol>> words;
  c.enumerate_codewords(
      [&](const std::vector<Symbol>& w) { words.push_back(w); });
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> x(n, 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      for (const auto& w : words) {
        Symbol acc = 0;
        for (std::size_t i = 0; i < n; ++i)
          acc = FieldContext::add(acc, f.mul(x[i], w[i]));
        if (f.trace(acc) != 0) return;
      }
      out.push_back(x);
      return;
    }
    for (std::uint32_t s = 0; s < q; ++s) {
      x[pos] = static_cast<Symbol>(s);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace testutil
