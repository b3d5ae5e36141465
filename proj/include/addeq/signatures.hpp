#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "addeq/codes.hpp"
#include "addeq/errors.hpp"
#include "addeq/gf2.hpp"
#include "addeq/multigraph.hpp"
#include "addeq/reduction.hpp"

namespace addeq {

// Coordinate signatures in the style of support splitting. A coordinate of
// the generator matrix spans a subspace of F_2^k (the coordinate span); the
// coordinate can be truncated to any subspace of that span, and invariants
// of the truncated codes, aggregated over all subspaces of a fixed
// dimension, attach a label to the coordinate that survives additive
// equivalence. Matching labels between two codes narrows the candidate
// column correspondences.

/// Span in F_2^k of the r basis-coefficient vectors of generator column i.
/// Unchanged by any invertible additive map applied to that coordinate.
inline BinarySubspace coordinate_span(const AdditiveCode& c, std::size_t i) {
  if (i >= c.length()) throw std::invalid_argument("coordinate out of range");
  const unsigned r = c.degree();
  BinaryMatrix gens(r, c.dim());
  for (unsigned j = 0; j < r; ++j)
    for (std::size_t row = 0; row < c.dim(); ++row)
      if ((c.gen().at(row, i) >> j) & 1) gens.set(j, row, true);
  return BinarySubspace::from_generators(gens);
}

/// Replace column i so that its coefficient vectors are the canonical RREF
/// basis of `pi` assigned to ascending powers of the field generator, padded
/// with zeros. Requires pi to be a subspace of coordinate_span(c, i). With
/// pi = {0} this is truncate_zero; with pi equal to the full span the new
/// column carries the same span in canonical form.
inline AdditiveCode truncate_to_subspace(const AdditiveCode& c, std::size_t i,
                                         const BinarySubspace& pi) {
  if (i >= c.length()) throw std::invalid_argument("coordinate out of range");
  if (pi.ambient() != c.dim())
    throw std::invalid_argument("subspace lives in the wrong space");
  if (!coordinate_span(c, i).contains(pi))
    throw std::invalid_argument("not a subspace of the coordinate span");
  SymbolMatrix gen = c.gen();
  for (std::size_t row = 0; row < gen.rows; ++row) {
    Symbol s = 0;
    for (std::size_t j = 0; j < pi.dim(); ++j)
      if (pi.basis().get(j, row)) s |= Symbol(1) << j;
    gen.at(row, i) = s;
  }
  // Keep the original rows when they stay independent so the new column
  // still reads off `pi` against the same basis; re-derive a basis only on
  // an actual dimension drop.
  const unsigned r = c.degree();
  BinaryMatrix img(gen.rows, gen.cols * r);
  for (std::size_t row = 0; row < gen.rows; ++row)
    for (std::size_t col = 0; col < gen.cols; ++col)
      for (unsigned j = 0; j < r; ++j)
        if ((gen.at(row, col) >> j) & 1) img.set(row, col * r + j, true);
  if (rank(img) == gen.rows) return AdditiveCode(c.field_ptr(), gen);
  return AdditiveCode::from_spanning_rows(c.field_ptr(), gen);
}

// ---------------------------------------------------------------------------
// Signatures.

/// One record per truncation subspace. The weight distribution of the
/// truncated code is invariant under every witness whose symbol maps fix
/// zero and is the part used for matching at every degree. Hull data joins
/// the canonical payload only for binary codes, where witnesses cannot twist
/// coordinates and the hull is a true invariant; over proper extensions an
/// additive coordinate map can change the hull, so there the hull entries
/// are reported as observations and kept out of comparisons.
struct SignatureRecord {
  std::vector<std::uint64_t> wd;
  std::optional<std::size_t> hull_dim;
  std::optional<std::vector<std::uint64_t>> hull_wd;

  friend bool operator==(const SignatureRecord&, const SignatureRecord&) = default;
  friend auto operator<=>(const SignatureRecord&, const SignatureRecord&) = default;
};

struct HullObservation {
  std::size_t hull_dim;
  std::vector<std::uint64_t> hull_wd;
};

struct Signature {
  std::size_t coordinate = 0;
  std::size_t subspace_dim = 0;
  std::vector<SignatureRecord> payload;       // sorted, canonical
  std::vector<HullObservation> observations;  // informational only

  /// Canonical payload text. Deliberately excludes the coordinate index so
  /// equal payloads compare equal across coordinates and codes.
  std::string canonical_text() const {
    std::ostringstream out;
    out << "dim " << subspace_dim << '\n';
    for (const auto& rec : payload) {
      out << "wd";
      for (auto a : rec.wd) out << ' ' << a;
      if (rec.hull_dim) {
        out << " hull " << *rec.hull_dim;
        for (auto a : *rec.hull_wd) out << ' ' << a;
      }
      out << '\n';
    }
    return out.str();
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.subspace_dim == b.subspace_dim && a.payload == b.payload;
  }
};

/// Signature of one coordinate: the multiset over all d-dimensional
/// subspaces of the coordinate span of the truncated-code records. The
/// aggregation over subspaces makes the payload independent of any basis
/// choice. A dimension larger than the span yields an empty payload.
inline Signature subspace_signature(const AdditiveCode& c, std::size_t i,
                                    std::size_t d) {
  if (i >= c.length()) throw std::invalid_argument("coordinate out of range");
  if (d > c.degree())
    throw std::invalid_argument("subspace dimension exceeds the field degree");
  Signature sig;
  sig.coordinate = i;
  sig.subspace_dim = d;
  BinarySubspace span = coordinate_span(c, i);
  enumerate_subspaces(span, d, [&](const BinarySubspace& pi) {
    AdditiveCode trunc = truncate_to_subspace(c, i, pi);
    SignatureRecord rec;
    rec.wd = weight_distribution(trunc);
    AdditiveCode h = hull(trunc);
    sig.observations.push_back({h.dim(), weight_distribution(h)});
    if (c.degree() == 1) {
      rec.hull_dim = h.dim();
      rec.hull_wd = weight_distribution(h);
    }
    sig.payload.push_back(std::move(rec));
  });
  std::sort(sig.payload.begin(), sig.payload.end());
  return sig;
}

/// Binary signature of a coordinate: hull weight distributions of the
/// coordinate-zeroed code and of the coordinate-zeroed dual. When the hull
/// of the code is trivial, at least one of the two is nontrivial except in
/// the degenerate case where the unit vector at i lies in the code or its
/// dual.
inline Signature binary_signature(const AdditiveCode& c, std::size_t i) {
  if (c.degree() != 1)
    throw std::invalid_argument("binary_signature requires degree 1");
  if (i >= c.length()) throw std::invalid_argument("coordinate out of range");
  Signature sig;
  sig.coordinate = i;
  sig.subspace_dim = 0;
  for (const AdditiveCode& base : {c, dual(c)}) {
    AdditiveCode trunc = truncate_zero(base, i);
    AdditiveCode h = hull(trunc);
    SignatureRecord rec;
    rec.wd = weight_distribution(trunc);
    rec.hull_dim = h.dim();
    rec.hull_wd = weight_distribution(h);
    sig.observations.push_back({h.dim(), *rec.hull_wd});
    sig.payload.push_back(std::move(rec));
  }
  std::sort(sig.payload.begin(), sig.payload.end());
  return sig;
}

// ---------------------------------------------------------------------------
// Coordinate matching by signature refinement.

struct CoordinateMatch {
  /// False when some signature class has different multiplicities in the two
  /// codes; additively equivalent codes can never reach that state.
  bool compatible = true;
  /// Groups of mutually indistinguishable coordinates, source and target.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      groups;
  /// Full coordinate permutation when every group is a singleton.
  std::optional<std::vector<std::size_t>> permutation;
  std::size_t rounds = 0;
};

/// Group the coordinates of both codes by signature, then refine by zeroing
/// already-discriminated coordinates and re-signing, until the partition is
/// stable. Sound for additive equivalence: corresponding coordinates always
/// carry equal payloads.
inline CoordinateMatch match_coordinates(const AdditiveCode& c,
                                         const AdditiveCode& cprime,
                                         std::size_t d) {
  if (c.length() != cprime.length())
    throw std::invalid_argument("codes have different lengths");
  if (c.degree() != cprime.degree())
    throw std::invalid_argument("codes have different field degrees");
  const std::size_t n = c.length();

  std::vector<std::string> key_a(n), key_b(n);
  auto resign = [&](const AdditiveCode& code, std::vector<std::string>& key) {
    for (std::size_t i = 0; i < n; ++i)
      key[i] += subspace_signature(code, i, d).canonical_text();
  };
  resign(c, key_a);
  resign(cprime, key_b);

  CoordinateMatch result;
  AdditiveCode work_a = c, work_b = cprime;
  std::vector<char> zeroed(n, 0);
  for (result.rounds = 1; result.rounds <= n; ++result.rounds) {
    std::map<std::string, std::pair<std::vector<std::size_t>,
                                    std::vector<std::size_t>>>
        classes;
    for (std::size_t i = 0; i < n; ++i) classes[key_a[i]].first.push_back(i);
    for (std::size_t i = 0; i < n; ++i) classes[key_b[i]].second.push_back(i);
    for (const auto& [key, cls] : classes)
      if (cls.first.size() != cls.second.size()) {
        result.compatible = false;
        result.groups.clear();
        for (const auto& [k2, c2] : classes) result.groups.push_back(c2);
        return result;
      }

    // zero the freshly discriminated coordinates and re-sign the rest
    bool changed = false;
    for (const auto& [key, cls] : classes)
      if (cls.first.size() == 1 && !zeroed[cls.first[0]]) {
        work_a = truncate_zero(work_a, cls.first[0]);
        work_b = truncate_zero(work_b, cls.second[0]);
        zeroed[cls.first[0]] = 1;
        changed = true;
      }
    std::size_t singletons = 0;
    for (const auto& [key, cls] : classes) singletons += cls.first.size() == 1;
    if (!changed || singletons == n) {
      result.groups.clear();
      for (const auto& [k2, c2] : classes) result.groups.push_back(c2);
      break;
    }
    resign(work_a, key_a);
    resign(work_b, key_b);
  }

  if (result.groups.empty()) {
    std::map<std::string,
             std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
        classes;
    for (std::size_t i = 0; i < n; ++i) classes[key_a[i]].first.push_back(i);
    for (std::size_t i = 0; i < n; ++i) classes[key_b[i]].second.push_back(i);
    for (const auto& [k2, c2] : classes) result.groups.push_back(c2);
  }

  bool all_singletons = true;
  for (const auto& g : result.groups)
    all_singletons = all_singletons && g.first.size() == 1;
  if (all_singletons) {
    std::vector<std::size_t> perm(n);
    for (const auto& g : result.groups) perm[g.first[0]] = g.second[0];
    result.permutation = perm;
  }
  return result;
}

// ---------------------------------------------------------------------------
// The hull property behind binary truncation signatures.

/// Per-coordinate verification that zeroing a coordinate of a trivial-hull
/// binary code leaves a nontrivial hull on the code side or the dual side.
/// The proof object is the decomposition unit_i = u + v with u in C and v in
/// the dual: whichever of the two carries a zero at coordinate i lands in
/// the corresponding truncated hull. A coordinate is degenerate when the
/// unit vector itself lies in C or its dual; the membership argument then
/// only produces the zero vector and both hulls can be trivial.
struct TruncationHullReport {
  struct Coordinate {
    std::size_t index;
    bool degenerate;
    std::size_t hull_dim_code;
    std::size_t hull_dim_dual;
    bool proof_object_ok;
    bool nontrivial;  // hull_dim_code > 0 or hull_dim_dual > 0
  };
  std::vector<Coordinate> coordinates;
  bool all_nondegenerate_nontrivial = true;
  bool all_proof_objects_ok = true;
};

inline TruncationHullReport verify_truncation_hulls(const AdditiveCode& c) {
  if (c.degree() != 1)
    throw std::invalid_argument("verify_truncation_hulls requires degree 1");
  if (hull(c).dim() != 0)
    throw std::invalid_argument("verify_truncation_hulls requires a trivial hull");
  const std::size_t n = c.length();
  AdditiveCode d = dual(c);

  // basis of F_2^n split as C + dual(C); the decomposition is unique
  BinaryMatrix stacked(0, n);
  for (std::size_t r = 0; r < c.dim(); ++r)
    stacked.append_row(c.binary_image().row_vec(r));
  for (std::size_t r = 0; r < d.dim(); ++r)
    stacked.append_row(d.binary_image().row_vec(r));

  TruncationHullReport report;
  for (std::size_t i = 0; i < n; ++i) {
    TruncationHullReport::Coordinate entry{};
    entry.index = i;
    BitVec unit(n);
    unit.set(i, true);

    auto cspace = BinarySubspace::from_generators(c.binary_image());
    auto dspace = BinarySubspace::from_generators(d.binary_image());
    entry.degenerate = cspace.contains(unit) || dspace.contains(unit);

    // solve unit = u + v with u from the C block, v from the dual block
    auto coeffs = detail::solve_row_transform(
        stacked, [&] {
          BinaryMatrix m(1, n);
          m.set_row(0, unit);
          return m;
        }());
    BitVec u(n), v(n);
    if (coeffs) {
      for (std::size_t j = 0; j < c.dim(); ++j)
        if (coeffs->get(0, j)) u ^= c.binary_image().row_vec(j);
      for (std::size_t j = 0; j < d.dim(); ++j)
        if (coeffs->get(0, c.dim() + j)) v ^= d.binary_image().row_vec(j);
    }
    BitVec sum = u;
    sum ^= v;
    entry.proof_object_ok = coeffs.has_value() && sum == unit;

    AdditiveCode ci = truncate_zero(c, i);
    AdditiveCode di = truncate_zero(d, i);
    entry.hull_dim_code = hull(ci).dim();
    entry.hull_dim_dual = hull(di).dim();
    entry.nontrivial = entry.hull_dim_code > 0 || entry.hull_dim_dual > 0;

    if (entry.proof_object_ok) {
      // case analysis on (u_i, v_i): exactly one of them is 1
      bool ui = u.get(i), vi = v.get(i);
      entry.proof_object_ok = (ui != vi);
      if (entry.proof_object_ok) {
        if (ui) {
          // v has a zero at i: v lies in the truncated code and its dual
          auto ci_space = BinarySubspace::from_generators(ci.binary_image());
          bool in_code = ci_space.contains(v);
          bool orthogonal = true;
          for (std::size_t r = 0; r < ci.dim(); ++r) {
            BitVec w = ci.binary_image().row_vec(r);
            std::size_t dot = 0;
            for (std::size_t b = 0; b < n; ++b)
              dot ^= (w.get(b) && v.get(b)) ? 1 : 0;
            orthogonal = orthogonal && dot == 0;
          }
          entry.proof_object_ok = in_code && orthogonal;
        } else {
          auto di_space = BinarySubspace::from_generators(di.binary_image());
          bool in_dual_trunc = di_space.contains(u);
          bool orthogonal = true;
          for (std::size_t r = 0; r < di.dim(); ++r) {
            BitVec w = di.binary_image().row_vec(r);
            std::size_t dot = 0;
            for (std::size_t b = 0; b < n; ++b)
              dot ^= (w.get(b) && u.get(b)) ? 1 : 0;
            orthogonal = orthogonal && dot == 0;
          }
          entry.proof_object_ok = in_dual_trunc && orthogonal;
        }
      }
    }

    report.all_proof_objects_ok &= entry.proof_object_ok;
    if (!entry.degenerate)
      report.all_nondegenerate_nontrivial &= entry.nontrivial;
    report.coordinates.push_back(entry);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hull statistics over random reductions.

struct HullExperimentParams {
  unsigned n_min = 4;
  unsigned n_max = 4;
  unsigned h = 1;
  unsigned trials = 10;
  std::uint64_t seed = 0;
  double density = 0.5;
};

struct HullExperimentRow {
  unsigned trial;
  unsigned n;
  unsigned h;
  std::size_t edges;
  std::size_t length;
  std::size_t hull_dim;
};

struct HullExperimentResult {
  std::vector<HullExperimentRow> rows;
  std::map<std::size_t, unsigned> histogram;  // hull dim -> count

  std::string to_csv() const {
    std::ostringstream out;
    out << "trial,n,h,|E|,N,hull_dim\n";
    for (const auto& r : rows)
      out << r.trial << ',' << r.n << ',' << r.h << ',' << r.edges << ','
          << r.length << ',' << r.hull_dim << '\n';
    return out.str();
  }
};

/// Hull dimension of the reduction code of random multigraphs. Deterministic
/// for a fixed seed; rows come out in trial order.
inline HullExperimentResult hull_experiment(const HullExperimentParams& p) {
  if (p.n_min < 2 || p.n_max < p.n_min)
    throw std::invalid_argument("hull_experiment: bad vertex range");
  if (p.h < 1 || p.h > p.n_min * (p.n_min - 1) / 2)
    throw std::invalid_argument("hull_experiment: h out of range for n");
  HullExperimentResult result;
  std::mt19937_64 rng(p.seed);
  for (unsigned t = 0; t < p.trials; ++t) {
    unsigned n = p.n_min + static_cast<unsigned>(
                               uniform_below(rng, p.n_max - p.n_min + 1));
    MultiGraph g = random_multigraph(n, p.h, p.density, rng());
    ReductionCode rc(g, ReductionVariant::Full);
    std::size_t hd = rc.degenerate() ? 0 : hull(rc.code()).dim();
    result.rows.push_back(
        {t, n, p.h, g.edge_count(), rc.code().length(), hd});
    ++result.histogram[hd];
  }
  return result;
}

}  // namespace addeq
