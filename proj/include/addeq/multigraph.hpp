#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "addeq/errors.hpp"
#include "addeq/field.hpp"
#include "addeq/random.hpp"

namespace addeq {

/// Weighted edge, 1-based endpoints, u < v. A weight w stands for w parallel
/// edges between u and v.
struct Edge {
  unsigned u = 0, v = 0, w = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct VertexBijection {
  std::vector<unsigned> image;  // image[v-1] = sigma(v), 1-based

  unsigned size() const { return static_cast<unsigned>(image.size()); }
  unsigned operator()(unsigned v) const { return image[v - 1]; }

  bool is_permutation() const {
    std::vector<char> seen(image.size(), 0);
    for (unsigned t : image) {
      if (t < 1 || t > image.size() || seen[t - 1]) return false;
      seen[t - 1] = 1;
    }
    return true;
  }

  VertexBijection inverse() const {
    VertexBijection inv;
    inv.image.resize(image.size());
    for (unsigned v = 1; v <= image.size(); ++v) inv.image[image[v - 1] - 1] = v;
    return inv;
  }

  static VertexBijection identity(unsigned n) {
    VertexBijection b;
    b.image.resize(n);
    std::iota(b.image.begin(), b.image.end(), 1u);
    return b;
  }

  friend bool operator==(const VertexBijection&, const VertexBijection&) = default;
};

/// Multigraph with weights in {1..h}. No loops; at most one entry per vertex
/// pair; the edge list is kept sorted lexicographically by (u, v), which is
/// the canonical edge order.
class MultiGraph {
 public:
  MultiGraph(unsigned n, unsigned h, std::vector<Edge> edges)
      : n_(n), h_(h), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("multigraph needs n >= 1");
    if (h_ < 1) throw std::invalid_argument("multigraph needs h >= 1");
    const std::uint64_t pairs = std::uint64_t{n_} * (n_ - 1) / 2;
    if (n_ >= 2 && h_ > pairs)
      throw std::invalid_argument("h exceeds n(n-1)/2");
    for (Edge& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 1 || e.v > n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.w < 1 || e.w > h_)
        throw std::invalid_argument("edge weight out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw std::invalid_argument("duplicate vertex pair");
  }

  unsigned vertex_count() const { return n_; }
  unsigned max_weight() const { return h_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges of weight at least i (E_i), in canonical order. E_1 is all edges.
  std::vector<Edge> edges_of_weight_at_least(unsigned i) const {
    if (i < 1 || i > h_)
      throw std::invalid_argument("weight level out of range");
    std::vector<Edge> out;
    for (const Edge& e : edges_)
      if (e.w >= i) out.push_back(e);
    return out;
  }

  /// Sorted multiset of incident weights per vertex, an isomorphism
  /// invariant used for search pruning.
  std::vector<std::vector<unsigned>> weight_profiles() const {
    std::vector<std::vector<unsigned>> prof(n_);
    for (const Edge& e : edges_) {
      prof[e.u - 1].push_back(e.w);
      prof[e.v - 1].push_back(e.w);
    }
    for (auto& p : prof) std::sort(p.begin(), p.end());
    return prof;
  }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  unsigned n_, h_;
  std::vector<Edge> edges_;
};

/// Incidence matrix over F_{2^r}: one row per edge in canonical order, one
/// column per vertex. The row of edge (u, v, w) carries e^(w-1) in columns
/// u and v. Requires 2^r > h so the h encodings are distinct and nonzero.
inline SymbolMatrix incidence_matrix(const MultiGraph& g,
                                     const FieldContext& field) {
  if (field.order() <= g.max_weight())
    throw std::invalid_argument("field too small for the weight range");
  SymbolMatrix a(g.edge_count(), g.vertex_count());
  for (std::size_t r = 0; r < g.edge_count(); ++r) {
    const Edge& e = g.edges()[r];
    Symbol s = field.power_of_e(e.w - 1);
    a.at(r, e.u - 1) = s;
    a.at(r, e.v - 1) = s;
  }
  return a;
}

inline MultiGraph apply_bijection(const MultiGraph& g,
                                  const VertexBijection& sigma) {
  if (sigma.size() != g.vertex_count() || !sigma.is_permutation())
    throw std::invalid_argument("bijection does not match the vertex set");
  std::vector<Edge> mapped;
  mapped.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    mapped.push_back(Edge{sigma(e.u), sigma(e.v), e.w});
  return MultiGraph(g.vertex_count(), g.max_weight(), std::move(mapped));
}

// ---------------------------------------------------------------------------
// Text format: first line "n [h]" (h defaults to the maximum edge weight),
// then one edge per line "u v [w]" (w defaults to 1). '#' starts a comment.

namespace detail {

inline std::vector<unsigned> numeric_tokens(const std::string& line,
                                            std::size_t lineno) {
  std::istringstream ls(line);
  std::vector<unsigned> out;
  std::string tok;
  while (ls >> tok) {
    unsigned value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
      throw ParseError("line " + std::to_string(lineno) + ": bad token '" +
                       tok + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

inline MultiGraph parse_multigraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<unsigned> n;
  std::optional<unsigned> declared_h;
  std::vector<Edge> edges;
  unsigned max_w = 1;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto toks = detail::numeric_tokens(line, lineno);
    if (toks.empty()) continue;
    if (!n) {
      if (toks.size() > 2)
        throw ParseError("line " + std::to_string(lineno) +
                         ": header is 'n [h]'");
      n = toks[0];
      if (toks.size() == 2) declared_h = toks[1];
      continue;
    }
    if (toks.size() < 2 || toks.size() > 3)
      throw ParseError("line " + std::to_string(lineno) +
                       ": edge is 'u v [w]'");
    Edge e{toks[0], toks[1], toks.size() == 3 ? toks[2] : 1};
    edges.push_back(e);
    max_w = std::max(max_w, e.w);
  }
  if (!n) throw ParseError("empty graph text");
  unsigned h = declared_h.value_or(max_w);
  try {
    return MultiGraph(*n, h, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

inline std::string format_multigraph(const MultiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.max_weight() << '\n';
  for (const Edge& e : g.edges())
    out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

inline MultiGraph load_multigraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_multigraph(buf.str());
}

// ---------------------------------------------------------------------------

/// Exhaustive weight-preserving isomorphism search with weight-profile
/// pruning. Guard: n <= 10.
inline std::optional<VertexBijection> brute_force_isomorphism(
    const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() > 10 || b.vertex_count() > 10)
    throw GuardError("brute_force_isomorphism: n exceeds 10");
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return std::nullopt;
  const unsigned n = a.vertex_count();

  auto profs_a = a.weight_profiles();
  auto profs_b = b.weight_profiles();
  {
    auto sa = profs_a, sb = profs_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // adjacency weight lookup, 0 = no edge
  auto adj = [n](const MultiGraph& g) {
    std::vector<unsigned> m(std::size_t{n} * n, 0);
    for (const Edge& e : g.edges()) {
      m[std::size_t(e.u - 1) * n + (e.v - 1)] = e.w;
      m[std::size_t(e.v - 1) * n + (e.u - 1)] = e.w;
    }
    return m;
  };
  auto wa = adj(a), wb = adj(b);

  std::vector<unsigned> image(n, 0);
  std::vector<char> used(n, 0);
  auto backtrack = [&](auto&& self, unsigned v) -> bool {
    if (v == n) return true;
    for (unsigned t = 0; t < n; ++t) {
      if (used[t] || profs_a[v] != profs_b[t]) continue;
      bool ok = true;
      for (unsigned u = 0; u < v && ok; ++u)
        ok = wa[std::size_t(v) * n + u] == wb[std::size_t(t) * n + (image[u] - 1)];
      if (!ok) continue;
      image[v] = t + 1;
      used[t] = 1;
      if (self(self, v + 1)) return true;
      used[t] = 0;
      image[v] = 0;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;
  VertexBijection sigma;
  sigma.image = image;
  return sigma;
}

/// Each vertex pair is an edge with probability `density`; weights uniform
/// in 1..h. Deterministic for a given seed.
inline MultiGraph random_multigraph(unsigned n, unsigned h, double density,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (unsigned u = 1; u <= n; ++u)
    for (unsigned v = u + 1; v <= n; ++v)
      if (bernoulli(rng, density))
        edges.push_back(
            Edge{u, v, static_cast<unsigned>(1 + uniform_below(rng, h))});
  return MultiGraph(n, h, std::move(edges));
}

inline VertexBijection random_bijection(unsigned n, std::mt19937_64& rng) {
  VertexBijection sigma = VertexBijection::identity(n);
  for (unsigned i = n; i > 1; --i)
    std::swap(sigma.image[i - 1], sigma.image[uniform_below(rng, i)]);
  return sigma;
}

inline std::pair<MultiGraph, VertexBijection> random_isomorphic_copy(
    const MultiGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VertexBijection sigma = random_bijection(g.vertex_count(), rng);
  return {apply_bijection(g, sigma), sigma};
}

}  // namespace addeq
