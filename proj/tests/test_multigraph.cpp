#include <catch2/catch_amalgamated.hpp>

#include "addeq/multigraph.hpp"

using namespace addeq;

TEST_CASE("parse and serialize round trip") {
  MultiGraph g = parse_multigraph("3\n1 2 1\n1 3 1\n2 3 1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.max_weight() == 1);
  CHECK(g.edge_count() == 3);
  CHECK(parse_multigraph(format_multigraph(g)) == g);

  // edges given out of order come back canonically sorted
  MultiGraph h = parse_multigraph("4 2\n3 4 2\n2 1\n# comment\n1 3 2\n");
  CHECK(h.edges()[0] == Edge{1, 2, 1});
  CHECK(h.edges()[1] == Edge{1, 3, 2});
  CHECK(h.edges()[2] == Edge{3, 4, 2});
  CHECK(parse_multigraph(format_multigraph(h)) == h);
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(parse_multigraph("2\n1 1 1\n"), ParseError);      // loop
  CHECK_THROWS_AS(parse_multigraph("3 2\n1 2 5\n"), ParseError);    // w > h
  CHECK_THROWS_AS(parse_multigraph("3\n1 2 1\n2 1 1\n"), ParseError);  // dup
  CHECK_THROWS_AS(parse_multigraph("3\n1 2 1 7 9\n"), ParseError);
  CHECK_THROWS_AS(parse_multigraph("3\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_multigraph(""), ParseError);
  CHECK_THROWS_AS(parse_multigraph("3\n1 4 1\n"), ParseError);  // out of range
  // undeclared h defaults to the max weight but still obeys the pair bound
  CHECK_THROWS_AS(parse_multigraph("3\n1 2 5\n"), ParseError);  // h=5 > 3
}

TEST_CASE("edges of weight at least i") {
  MultiGraph tri = parse_multigraph("3\n1 2\n1 3\n2 3\n");
  CHECK(tri.edges_of_weight_at_least(1).size() == 3);
  CHECK_THROWS_AS(tri.edges_of_weight_at_least(2), std::invalid_argument);

  MultiGraph tri2 = parse_multigraph("3 2\n1 2\n1 3\n2 3\n");
  CHECK(tri2.edges_of_weight_at_least(2).empty());

  MultiGraph mixed = parse_multigraph("3 2\n1 2 1\n1 3 2\n2 3 2\n");
  auto e2 = mixed.edges_of_weight_at_least(2);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == Edge{1, 3, 2});
  CHECK(e2[1] == Edge{2, 3, 2});
}

TEST_CASE("incidence matrix") {
  FieldPtr f1 = make_field(1);
  MultiGraph tri = parse_multigraph("3\n1 2\n1 3\n2 3\n");
  SymbolMatrix a = incidence_matrix(tri, *f1);
  REQUIRE(a.rows == 3);
  REQUIRE(a.cols == 3);
  CHECK(a.row(0) == std::vector<Symbol>{1, 1, 0});
  CHECK(a.row(1) == std::vector<Symbol>{1, 0, 1});
  CHECK(a.row(2) == std::vector<Symbol>{0, 1, 1});

  // weighted: entry is e^(w-1)
  FieldPtr f2 = make_field(2);
  MultiGraph wg = parse_multigraph("3 2\n1 2 1\n2 3 2\n");
  SymbolMatrix b = incidence_matrix(wg, *f2);
  Symbol e = f2->primitive_element();
  CHECK(b.row(0) == std::vector<Symbol>{1, 1, 0});
  CHECK(b.row(1) == std::vector<Symbol>{0, e, e});

  // every row has exactly two nonzeros
  for (std::size_t r = 0; r < b.rows; ++r) {
    auto row = b.row(r);
    CHECK(symbol_weight(row) == 2);
  }

  // isolated vertex gives a zero column
  MultiGraph iso = parse_multigraph("4\n1 2\n1 3\n2 3\n");
  SymbolMatrix c = incidence_matrix(iso, *f1);
  for (std::size_t r = 0; r < c.rows; ++r) CHECK(c.at(r, 3) == 0);

  // field too small
  MultiGraph big = parse_multigraph("4 3\n1 2 3\n");
  CHECK_THROWS_AS(incidence_matrix(big, *f1), std::invalid_argument);
}

TEST_CASE("apply_bijection") {
  MultiGraph tri = parse_multigraph("3\n1 2\n1 3\n2 3\n");
  CHECK(apply_bijection(tri, VertexBijection::identity(3)) == tri);

  VertexBijection rot{{2, 3, 1}};
  CHECK(apply_bijection(tri, rot) == tri);

  MultiGraph path = parse_multigraph("3\n1 2\n2 3\n");
  VertexBijection swap13{{3, 2, 1}};
  CHECK(apply_bijection(path, swap13) == path);

  VertexBijection wrong{{1, 1, 2}};
  CHECK_THROWS_AS(apply_bijection(path, wrong), std::invalid_argument);
}

TEST_CASE("brute force isomorphism") {
  MultiGraph tri = parse_multigraph("3\n1 2\n1 3\n2 3\n");
  auto [tri2, sigma] = random_isomorphic_copy(tri, 42);
  auto found = brute_force_isomorphism(tri, tri2);
  REQUIRE(found.has_value());
  CHECK(apply_bijection(tri, *found) == tri2);

  // triangle plus isolated vertex versus the path on four vertices
  MultiGraph tri_iso = parse_multigraph("4\n1 2\n1 3\n2 3\n");
  MultiGraph path4 = parse_multigraph("4\n1 2\n2 3\n3 4\n");
  CHECK(!brute_force_isomorphism(tri_iso, path4).has_value());

  // weights must be preserved
  MultiGraph wa = parse_multigraph("3 2\n1 2 1\n2 3 2\n");
  MultiGraph wb = parse_multigraph("3 2\n1 2 2\n2 3 1\n");
  auto wit = brute_force_isomorphism(wa, wb);
  REQUIRE(wit.has_value());
  CHECK(apply_bijection(wa, *wit) == wb);

  MultiGraph wc = parse_multigraph("3 2\n1 2 2\n1 3 2\n");
  CHECK(!brute_force_isomorphism(wa, wc).has_value());

  MultiGraph big = parse_multigraph("11\n1 2\n");
  CHECK_THROWS_AS(brute_force_isomorphism(big, big), GuardError);
}

TEST_CASE("random generation") {
  CHECK(random_multigraph(5, 2, 0.0, 1).edge_count() == 0);
  MultiGraph full = random_multigraph(3, 1, 1.0, 1);
  CHECK(full.edge_count() == 3);  // the triangle

  CHECK(random_multigraph(6, 3, 0.5, 99) == random_multigraph(6, 3, 0.5, 99));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    MultiGraph g = random_multigraph(2 + seed % 6, 1 + seed % 3, 0.6, seed);
    auto [copy, sigma] = random_isomorphic_copy(g, seed * 7 + 1);
    CHECK(apply_bijection(g, sigma) == copy);
    auto found = brute_force_isomorphism(g, copy);
    REQUIRE(found.has_value());
    CHECK(apply_bijection(g, *found) == copy);
  }
}

TEST_CASE("graph invariants rule out mismatched profiles") {
  // same degree sequence ignoring weights, different weight profiles
  MultiGraph a = parse_multigraph("4 2\n1 2 1\n3 4 2\n");
  MultiGraph b = parse_multigraph("4 2\n1 2 1\n3 4 1\n");
  CHECK(!brute_force_isomorphism(a, b).has_value());
}
