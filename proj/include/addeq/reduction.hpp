#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "addeq/codes.hpp"
#include "addeq/errors.hpp"
#include "addeq/field.hpp"
#include "addeq/multigraph.hpp"

namespace addeq {

// The generator of the code attached to a multigraph is laid out as
//
//   [ D | D | ... | D  |  [0; D_2] | ... | [0; D_h]  |  A ]
//
// where D is the all-edges diagonal block with entry e^(w-1) for an edge of
// weight w, D_i is the same diagonal restricted to the edges of weight at
// least i, and A is the incidence matrix. Rows are ordered by (weight, u, v),
// which nests the weight-level blocks: for every i the D_i rows are exactly
// the bottom |E_i| rows, so the zero block sits literally on top. The full
// construction uses h+2 diagonal copies; the reduced h = 2 variant uses 3.
//
// The row of a weight-w edge then has symbol weight copies + (w-1) + 2 with
// every nonzero coordinate equal to e^(w-1), and any sum of two or more rows
// has at least 2*copies nonzeros in the diagonal copies alone, which keeps
// every non-row codeword above the weight of every row.

struct Zone {
  enum class Kind { DiagCopy, WeightLevel, Vertex };
  Kind kind;
  unsigned index;    // copy number 1..copies, or weight level 2..h; 0 for vertex
  unsigned member;   // display row of the edge, or the vertex id (1-based)

  friend bool operator==(const Zone&, const Zone&) = default;
  friend auto operator<=>(const Zone&, const Zone&) = default;
};

enum class ReductionVariant { Full, H2Reduced };

/// N = (h+2)|E_1| + |E_2| + ... + |E_h| + |V| for the full construction.
inline std::size_t reduction_length(const MultiGraph& g) {
  const unsigned h = g.max_weight();
  std::size_t n = (std::size_t{h} + 2) * g.edge_count() + g.vertex_count();
  for (unsigned i = 2; i <= h; ++i)
    n += g.edges_of_weight_at_least(i).size();
  return n;
}

inline std::size_t reduction_length_h2(const MultiGraph& g) {
  if (g.max_weight() != 2)
    throw std::invalid_argument("reduced construction requires h = 2");
  return 3 * g.edge_count() + g.edges_of_weight_at_least(2).size() +
         g.vertex_count();
}

class ReductionCode {
 public:
  ReductionCode(MultiGraph graph, ReductionVariant variant)
      : graph_(std::move(graph)),
        variant_(variant),
        field_(make_field(choose_degree(graph_.max_weight()))),
        code_(build(graph_, variant, field_, row_edges_, zones_)) {}

  const MultiGraph& graph() const { return graph_; }
  ReductionVariant variant() const { return variant_; }
  const AdditiveCode& code() const { return code_; }
  const FieldContext& field() const { return *field_; }
  const std::vector<Zone>& zones() const { return zones_; }

  /// Display row -> index into graph().edges() (canonical order).
  const std::vector<std::size_t>& row_edges() const { return row_edges_; }

  unsigned copies() const {
    return variant_ == ReductionVariant::Full ? graph_.max_weight() + 2 : 3;
  }

  /// No edges: the code has zero rows and the construction degenerates.
  bool degenerate() const { return graph_.edge_count() == 0; }

  unsigned row_weight_expected(std::size_t display_row) const {
    return copies() + edge_of_row(display_row).w + 1;
  }

  const Edge& edge_of_row(std::size_t display_row) const {
    return graph_.edges()[row_edges_[display_row]];
  }

 private:
  static AdditiveCode build(const MultiGraph& g, ReductionVariant variant,
                            const FieldPtr& field,
                            std::vector<std::size_t>& row_edges,
                            std::vector<Zone>& zones) {
    if (variant == ReductionVariant::H2Reduced && g.max_weight() != 2)
      throw std::invalid_argument("reduced construction requires h = 2");
    const unsigned h = g.max_weight();
    const unsigned copies = variant == ReductionVariant::Full ? h + 2 : 3;
    const std::size_t k = g.edge_count();

    // display order: weight-major, then canonical (u, v)
    row_edges.resize(k);
    for (std::size_t i = 0; i < k; ++i) row_edges[i] = i;
    std::stable_sort(row_edges.begin(), row_edges.end(),
                     [&](std::size_t a, std::size_t b) {
                       return g.edges()[a].w < g.edges()[b].w;
                     });

    std::size_t n = std::size_t{copies} * k + g.vertex_count();
    for (unsigned i = 2; i <= h; ++i)
      n += g.edges_of_weight_at_least(i).size();

    SymbolMatrix gen(k, n);
    zones.clear();
    zones.reserve(n);
    std::size_t col = 0;
    auto entry = [&](std::size_t display_row) {
      return field->power_of_e(g.edges()[row_edges[display_row]].w - 1);
    };
    for (unsigned b = 1; b <= copies; ++b)
      for (std::size_t row = 0; row < k; ++row) {
        gen.at(row, col) = entry(row);
        zones.push_back(
            Zone{Zone::Kind::DiagCopy, b, static_cast<unsigned>(row)});
        ++col;
      }
    for (unsigned i = 2; i <= h; ++i)
      for (std::size_t row = 0; row < k; ++row) {
        if (g.edges()[row_edges[row]].w < i) continue;
        gen.at(row, col) = entry(row);
        zones.push_back(
            Zone{Zone::Kind::WeightLevel, i, static_cast<unsigned>(row)});
        ++col;
      }
    for (unsigned v = 1; v <= g.vertex_count(); ++v) {
      for (std::size_t row = 0; row < k; ++row) {
        const Edge& e = g.edges()[row_edges[row]];
        if (e.u == v || e.v == v) gen.at(row, col) = entry(row);
      }
      zones.push_back(Zone{Zone::Kind::Vertex, 0, v});
      ++col;
    }
    return AdditiveCode(field, std::move(gen));
  }

  MultiGraph graph_;
  ReductionVariant variant_;
  FieldPtr field_;
  std::vector<std::size_t> row_edges_;
  std::vector<Zone> zones_;
  AdditiveCode code_;

};

inline ReductionCode build_reduction(const MultiGraph& g) {
  return ReductionCode(g, ReductionVariant::Full);
}

inline ReductionCode build_reduction_h2(const MultiGraph& g) {
  return ReductionCode(g, ReductionVariant::H2Reduced);
}

// ---------------------------------------------------------------------------
// Structural verification.

/// Each generator row must have symbol weight copies + w + 1 (h + 3 + w for
/// the full construction) with every nonzero coordinate equal to e^(w-1).
struct RowWeightReport {
  struct Violation {
    std::size_t row;
    std::size_t found_weight;
    std::size_t expected_weight;
    bool bad_alphabet;
  };
  std::vector<Violation> violations;
  bool clean() const { return violations.empty(); }
};

/// Row check against explicit expectations: per row, the required symbol
/// weight and the single allowed nonzero symbol.
inline RowWeightReport verify_row_weights(
    const AdditiveCode& c,
    const std::vector<std::pair<std::size_t, Symbol>>& expected) {
  RowWeightReport report;
  for (std::size_t row = 0; row < c.dim(); ++row) {
    std::size_t weight = 0;
    bool bad_alpha = false;
    for (std::size_t j = 0; j < c.length(); ++j) {
      Symbol s = c.gen().at(row, j);
      if (s == 0) continue;
      ++weight;
      if (s != expected[row].second) bad_alpha = true;
    }
    if (weight != expected[row].first || bad_alpha)
      report.violations.push_back({row, weight, expected[row].first, bad_alpha});
  }
  return report;
}

inline RowWeightReport verify_row_weights(const ReductionCode& rc) {
  std::vector<std::pair<std::size_t, Symbol>> expected;
  for (std::size_t row = 0; row < rc.code().dim(); ++row)
    expected.emplace_back(rc.row_weight_expected(row),
                          rc.field().power_of_e(rc.edge_of_row(row).w - 1));
  return verify_row_weights(rc.code(), expected);
}

/// Exhaustively check that every nonzero codeword of symbol weight at most
/// 2h+3 is a generator row. Emits the full weight distribution as a side
/// product. Guard: |E| <= 20.
struct LowWeightReport {
  struct Violation {
    std::vector<Symbol> word;
    std::size_t weight;
  };
  std::vector<Violation> violations;
  std::vector<std::uint64_t> weight_distribution;
  std::size_t bound = 0;
  bool clean() const { return violations.empty(); }
};

inline LowWeightReport verify_low_weight_codewords(const ReductionCode& rc) {
  const AdditiveCode& c = rc.code();
  if (c.dim() > 20)
    throw GuardError("verify_low_weight_codewords: |E| exceeds 20");
  LowWeightReport report;
  report.bound = 2u * rc.graph().max_weight() + 3;
  report.weight_distribution.assign(c.length() + 1, 0);

  std::set<std::vector<Symbol>> rows;
  for (std::size_t row = 0; row < c.dim(); ++row) rows.insert(c.gen().row(row));

  c.enumerate_codewords([&](const std::vector<Symbol>& word) {
    std::size_t w = symbol_weight(word);
    ++report.weight_distribution[w];
    if (w != 0 && w <= report.bound && !rows.count(word))
      report.violations.push_back({word, w});
  });
  return report;
}

// ---------------------------------------------------------------------------
// Isomorphism -> witness (the forward direction).

/// Build the equivalence witness induced by a multigraph isomorphism: the
/// column permutation acts as the edge permutation on each diagonal copy and
/// each weight-level block and as sigma on the vertex block, the row
/// transform is the edge permutation, and every symbol map is the identity.
inline EquivalenceWitness witness_from_isomorphism(
    const ReductionCode& rc, const ReductionCode& rcp,
    const VertexBijection& sigma) {
  const MultiGraph& g = rc.graph();
  const MultiGraph& gp = rcp.graph();
  if (rc.variant() != rcp.variant())
    throw std::invalid_argument("reduction variants differ");
  if (g.max_weight() != gp.max_weight())
    throw std::invalid_argument("declared weight ranges differ");
  if (sigma.size() != g.vertex_count() || !sigma.is_permutation() ||
      gp.vertex_count() != g.vertex_count() ||
      !(apply_bijection(g, sigma) == gp))
    throw std::invalid_argument("bijection is not an isomorphism");

  const std::size_t k = g.edge_count();
  const std::size_t n = rc.code().length();

  // display-row permutation induced on the edges
  std::map<Edge, std::size_t> display_of_edge;
  for (std::size_t row = 0; row < k; ++row)
    display_of_edge[rcp.edge_of_row(row)] = row;
  std::vector<std::size_t> row_map(k);
  for (std::size_t row = 0; row < k; ++row) {
    Edge e = rc.edge_of_row(row);
    unsigned mu = sigma(e.u), mv = sigma(e.v);
    if (mu > mv) std::swap(mu, mv);
    row_map[row] = display_of_edge.at(Edge{mu, mv, e.w});
  }

  // column lookup on the target by zone
  std::map<Zone, std::size_t> col_of_zone;
  for (std::size_t col = 0; col < n; ++col) col_of_zone[rcp.zones()[col]] = col;

  EquivalenceWitness w;
  w.row_transform = BinaryMatrix(k, k);
  for (std::size_t row = 0; row < k; ++row)
    w.row_transform.set(row_map[row], row, true);
  w.col_perm.resize(n);
  for (std::size_t col = 0; col < n; ++col) {
    Zone z = rc.zones()[col];
    if (z.kind == Zone::Kind::Vertex)
      z.member = sigma(z.member);
    else
      z.member = static_cast<unsigned>(row_map[z.member]);
    w.col_perm[col] = col_of_zone.at(z);
  }
  w.sigma.assign(n, identity_perm(rc.field().order()));

  // the transformed generator must reproduce the target matrix exactly
  AdditiveCode moved = apply_witness(rc.code(), w);
  if (!(moved.gen() == rcp.code().gen()))
    throw std::logic_error("induced witness failed to reproduce the target");
  return w;
}

/// Convenience overload building both codes with the full construction.
inline EquivalenceWitness witness_from_isomorphism(
    const MultiGraph& g, const MultiGraph& gp, const VertexBijection& sigma,
    ReductionVariant variant = ReductionVariant::Full) {
  ReductionCode rc(g, variant), rcp(gp, variant);
  return witness_from_isomorphism(rc, rcp, sigma);
}

// ---------------------------------------------------------------------------
// Witness -> isomorphism (the converse direction).

/// Extract a vertex bijection from a valid equivalence witness between two
/// reduction codes. Interchangeable identical columns are re-matched first
/// so that vertex columns map into the vertex block: a witness may swap a
/// degree-one vertex column with a diagonal column of identical content.
/// The result is validated as a multigraph isomorphism before returning.
inline VertexBijection isomorphism_from_witness(const ReductionCode& rc,
                                                const ReductionCode& rcp,
                                                const EquivalenceWitness& w) {
  const AdditiveCode& c = rc.code();
  const AdditiveCode& cp = rcp.code();
  if (c.length() != cp.length() || c.dim() != cp.dim() ||
      c.degree() != cp.degree())
    throw std::invalid_argument("witness connects incompatible codes");
  detail::check_witness_shape(c, w);
  for (const auto& p : w.sigma)
    if (!perm_fixes_zero(p))
      throw std::invalid_argument(
          "witness symbol maps must fix zero for extraction");

  const unsigned n_vertices = rc.graph().vertex_count();
  if (rcp.graph().vertex_count() != n_vertices)
    throw std::invalid_argument("vertex counts differ");

  if (rc.degenerate()) {
    // no edges: every column is a vertex column and any content matches
    if (!rcp.degenerate())
      throw std::invalid_argument("witness connects incompatible codes");
    VertexBijection sigma;
    sigma.image.resize(n_vertices);
    for (std::size_t col = 0; col < c.length(); ++col)
      sigma.image[rc.zones()[col].member - 1] =
          rcp.zones()[w.col_perm[col]].member;
    if (!sigma.is_permutation())
      throw std::invalid_argument("witness does not respect the vertex block");
    return sigma;
  }

  if (!code_equal(apply_witness(c, w), cp))
    throw std::invalid_argument("witness is not a valid equivalence");

  const std::size_t k = c.dim();
  const std::size_t n = c.length();

  // Map each generator row through the witness; every image must be a row
  // of the target (zero-fixing maps preserve the weight, and low-weight
  // codewords of a reduction code are exactly its rows).
  std::map<std::vector<Symbol>, std::size_t> target_rows;
  for (std::size_t row = 0; row < k; ++row)
    target_rows[cp.gen().row(row)] = row;
  std::vector<std::size_t> row_map(k);
  for (std::size_t row = 0; row < k; ++row) {
    std::vector<Symbol> image(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      image[w.col_perm[j]] = w.sigma[w.col_perm[j]][c.gen().at(row, j)];
    auto it = target_rows.find(image);
    if (it == target_rows.end())
      throw std::invalid_argument(
          "witness does not map generator rows to generator rows");
    row_map[row] = it->second;
  }

  // Column contents keyed by the row correspondence: source column j as seen
  // on the target side equals target column col_perm(j) entry for entry.
  auto target_key = [&](std::size_t col) {
    std::vector<std::pair<std::size_t, Symbol>> key;
    for (std::size_t row = 0; row < k; ++row)
      if (Symbol s = cp.gen().at(row, col); s != 0) key.emplace_back(row, s);
    return key;
  };
  auto source_key = [&](std::size_t col) {
    std::vector<std::pair<std::size_t, Symbol>> key;
    for (std::size_t row = 0; row < k; ++row)
      if (Symbol s = c.gen().at(row, col); s != 0)
        key.emplace_back(row_map[row], w.sigma[w.col_perm[col]][s]);
    std::sort(key.begin(), key.end());
    return key;
  };

  // Pools of target vertex columns per content class, minus the ones already
  // hit directly.
  std::map<std::vector<std::pair<std::size_t, Symbol>>, std::vector<std::size_t>>
      free_vertex_targets;
  std::vector<char> directly_hit(n, 0);
  for (std::size_t col = 0; col < n; ++col) {
    if (rc.zones()[col].kind == Zone::Kind::Vertex &&
        rcp.zones()[w.col_perm[col]].kind == Zone::Kind::Vertex)
      directly_hit[w.col_perm[col]] = 1;
  }
  for (std::size_t t = 0; t < n; ++t)
    if (rcp.zones()[t].kind == Zone::Kind::Vertex && !directly_hit[t])
      free_vertex_targets[target_key(t)].push_back(t);

  VertexBijection sigma;
  sigma.image.assign(n_vertices, 0);
  for (std::size_t col = 0; col < n; ++col) {
    if (rc.zones()[col].kind != Zone::Kind::Vertex) continue;
    unsigned v = rc.zones()[col].member;
    std::size_t t = w.col_perm[col];
    if (rcp.zones()[t].kind != Zone::Kind::Vertex) {
      auto key = source_key(col);
      auto it = free_vertex_targets.find(key);
      if (it == free_vertex_targets.end() || it->second.empty())
        throw std::invalid_argument(
            "witness normalization failed: no vertex column with matching "
            "content");
      t = it->second.back();
      it->second.pop_back();
    }
    sigma.image[v - 1] = rcp.zones()[t].member;
  }

  if (!sigma.is_permutation())
    throw std::invalid_argument("witness does not respect the vertex block");
  if (!(apply_bijection(rc.graph(), sigma) == rcp.graph()))
    throw std::invalid_argument(
        "extracted vertex map is not a multigraph isomorphism");
  return sigma;
}

// ---------------------------------------------------------------------------
// Zone map sidecar: "h <h>", "variant <full|h2-reduced>", one "row" line per
// display row with its edge, then one "col" line per column.

inline std::string format_zone_map(const ReductionCode& rc) {
  std::ostringstream out;
  out << "h " << rc.graph().max_weight() << '\n';
  out << "variant "
      << (rc.variant() == ReductionVariant::Full ? "full" : "h2-reduced")
      << '\n';
  for (std::size_t row = 0; row < rc.code().dim(); ++row) {
    const Edge& e = rc.edge_of_row(row);
    out << "row " << row + 1 << ' ' << e.u << ' ' << e.v << ' ' << e.w << '\n';
  }
  for (const Zone& z : rc.zones()) {
    switch (z.kind) {
      case Zone::Kind::DiagCopy:
        out << "col copy " << z.index << ' ' << z.member + 1 << '\n';
        break;
      case Zone::Kind::WeightLevel:
        out << "col level " << z.index << ' ' << z.member + 1 << '\n';
        break;
      case Zone::Kind::Vertex:
        out << "col vertex " << z.member << '\n';
        break;
    }
  }
  return out.str();
}

/// Reconstruct a ReductionCode from a code file plus its zone map. The
/// generator is rebuilt from the recorded graph structure and must match the
/// stored matrix exactly.
inline ReductionCode parse_reduction(const AdditiveCode& code,
                                     const std::string& zone_text) {
  std::istringstream in(zone_text);
  std::string line;
  unsigned h = 0;
  bool have_h = false;
  ReductionVariant variant = ReductionVariant::Full;
  bool have_variant = false;
  std::vector<Edge> edges_by_row;
  std::size_t cols = 0;
  std::size_t lineno = 0;
  unsigned max_vertex = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "h") {
      if (!(ls >> h)) throw ParseError("zone map: bad h line");
      have_h = true;
    } else if (tag == "variant") {
      std::string v;
      if (!(ls >> v)) throw ParseError("zone map: bad variant line");
      if (v == "full")
        variant = ReductionVariant::Full;
      else if (v == "h2-reduced")
        variant = ReductionVariant::H2Reduced;
      else
        throw ParseError("zone map: unknown variant '" + v + "'");
      have_variant = true;
    } else if (tag == "row") {
      std::size_t idx;
      Edge e;
      if (!(ls >> idx >> e.u >> e.v >> e.w))
        throw ParseError("zone map: bad row line " + std::to_string(lineno));
      if (idx != edges_by_row.size() + 1)
        throw ParseError("zone map: row lines out of order");
      edges_by_row.push_back(e);
      max_vertex = std::max({max_vertex, e.u, e.v});
    } else if (tag == "col") {
      std::string kind;
      if (!(ls >> kind)) throw ParseError("zone map: bad col line");
      if (kind == "vertex") {
        unsigned v;
        if (!(ls >> v)) throw ParseError("zone map: bad vertex col");
        max_vertex = std::max(max_vertex, v);
      }
      ++cols;
    } else {
      throw ParseError("zone map: unknown tag '" + tag + "'");
    }
  }
  if (!have_h || !have_variant) throw ParseError("zone map: missing header");
  unsigned n_vertices = 0;
  {
    // vertex count = number of vertex columns
    std::istringstream again(zone_text);
    while (std::getline(again, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      std::istringstream ls(line);
      std::string tag, kind;
      if ((ls >> tag >> kind) && tag == "col" && kind == "vertex") ++n_vertices;
    }
  }
  if (cols != code.length())
    throw ParseError("zone map: column count does not match the code");
  if (n_vertices == 0) throw ParseError("zone map: no vertex columns");
  MultiGraph g(n_vertices, h,
               std::vector<Edge>(edges_by_row.begin(), edges_by_row.end()));
  ReductionCode rc(g, variant);
  if (!(rc.code().gen() == code.gen()))
    throw ParseError("zone map does not reproduce the stored generator");
  return rc;
}

inline ReductionCode load_reduction(const std::string& code_path,
                                    const std::string& zone_path) {
  AdditiveCode code = load_code(code_path);
  std::ifstream in(zone_path);
  if (!in) throw ParseError("cannot open zone map: " + zone_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_reduction(code, buf.str());
}

}  // namespace addeq
