#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "addeq/gf2.hpp"
#include "addeq/random.hpp"

using namespace addeq;

namespace {

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols,
                           std::mt19937_64& rng) {
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  auto id = BinaryMatrix::identity(3);
  auto [r, k] = rref(id);
  CHECK(r == id);
  CHECK(k == 3);

  BinaryMatrix dup(2, 2);
  dup.set(0, 0, true);
  dup.set(0, 1, true);
  dup.set(1, 0, true);
  dup.set(1, 1, true);
  auto [rd, kd] = rref(dup);
  CHECK(kd == 1);
  CHECK(rd.get(0, 0));
  CHECK(rd.get(0, 1));
  CHECK(rd.row_is_zero(1));

  BinaryMatrix zero(3, 4);
  CHECK(rref(zero).second == 0);
}

TEST_CASE("rref is idempotent and rank transpose-invariant") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix(1 + rng() % 8, 1 + rng() % 10, rng);
    auto [r1, k1] = rref(m);
    auto [r2, k2] = rref(r1);
    CHECK(r1 == r2);
    CHECK(k1 == k2);
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("row_space_equal") {
  BinaryMatrix a(2, 3), b(2, 3);
  a.set(0, 0, true);
  a.set(1, 1, true);
  b.set(0, 1, true);  // rows permuted
  b.set(1, 0, true);
  CHECK(row_space_equal(a, b));

  BinaryMatrix c = a;
  c.xor_rows(0, 1);  // replace row by a sum: same span
  CHECK(row_space_equal(a, c));

  BinaryMatrix d(1, 2), e(1, 2);
  d.set(0, 0, true);
  e.set(0, 1, true);
  CHECK(!row_space_equal(d, e));
  BinaryMatrix f(1, 3);
  CHECK_THROWS_AS(row_space_equal(d, f), std::invalid_argument);
}

TEST_CASE("nullspace") {
  BinaryMatrix m(1, 2);
  m.set(0, 0, true);
  m.set(0, 1, true);
  auto ns = nullspace(m);
  CHECK(ns.dim() == 1);
  BitVec v(2);
  v.set(0, true);
  v.set(1, true);
  CHECK(ns.contains(v));

  CHECK(nullspace(BinaryMatrix::identity(4)).dim() == 0);
  CHECK(nullspace(BinaryMatrix(1, 3)).dim() == 3);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto a = random_matrix(1 + rng() % 7, 1 + rng() % 9, rng);
    auto ns2 = nullspace(a);
    CHECK(ns2.dim() + rank(a) == a.cols());
    // every basis vector really lies in the kernel
    for (std::size_t r = 0; r < ns2.dim(); ++r)
      CHECK(a.mul_vec(ns2.basis().row_vec(r)).is_zero());
  }
}

TEST_CASE("intersection and the modular law") {
  BinarySubspace plane = BinarySubspace::full(2);
  BinaryMatrix diag(1, 2);
  diag.set(0, 0, true);
  diag.set(0, 1, true);
  auto line = BinarySubspace::from_generators(diag);
  CHECK(intersect(plane, line) == line);
  CHECK(intersect(line, line) == line);

  BinaryMatrix ex(1, 2), ey(1, 2);
  ex.set(0, 0, true);
  ey.set(0, 1, true);
  auto x = BinarySubspace::from_generators(ex);
  auto y = BinarySubspace::from_generators(ey);
  CHECK(intersect(x, y).dim() == 0);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng() % 8;
    auto u = BinarySubspace::from_generators(random_matrix(1 + rng() % n, n, rng));
    auto v = BinarySubspace::from_generators(random_matrix(1 + rng() % n, n, rng));
    auto cap = intersect(u, v);
    auto cup = subspace_sum(u, v);
    CHECK(cap.dim() + cup.dim() == u.dim() + v.dim());
    CHECK(u.contains(cap));
    CHECK(v.contains(cap));
  }
}

TEST_CASE("vector enumeration") {
  auto z = BinarySubspace::zero(5);
  CHECK(all_vectors(z).size() == 1);
  CHECK(all_vectors(z)[0].is_zero());

  BinaryMatrix diag(1, 2);
  diag.set(0, 0, true);
  diag.set(0, 1, true);
  auto line = BinarySubspace::from_generators(diag);
  auto vecs = all_vectors(line);
  REQUIRE(vecs.size() == 2);
  CHECK((vecs[0].is_zero() || vecs[1].is_zero()));

  std::mt19937_64 rng(17);
  BinarySubspace big;
  do {
    big = BinarySubspace::from_generators(random_matrix(10, 14, rng));
  } while (big.dim() != 10);
  auto all = all_vectors(big);
  std::sort(all.begin(), all.end());
  CHECK(all.size() == 1024);
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

  BinarySubspace huge = BinarySubspace::full(25);
  CHECK_THROWS_AS(enumerate_vectors(huge, [](const BitVec&) {}), GuardError);
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  CHECK(gaussian_binomial(2, 1) == 3);
  CHECK(gaussian_binomial(3, 2) == 7);
  CHECK(gaussian_binomial(4, 2) == 35);

  auto space = BinarySubspace::full(3);
  CHECK(all_subspaces(space, 0).size() == 1);
  CHECK(all_subspaces(space, 0)[0].dim() == 0);
  CHECK(all_subspaces(space, 1).size() == 7);
  CHECK(all_subspaces(space, 2).size() == 7);
  CHECK(all_subspaces(space, 3).size() == 1);

  // distinct, correct dimension, all inside the ambient space
  auto subs = all_subspaces(BinarySubspace::full(4), 2);
  CHECK(subs.size() == 35);
  for (auto& s : subs) CHECK(s.dim() == 2);
  std::sort(subs.begin(), subs.end(),
            [](const BinarySubspace& a, const BinarySubspace& b) {
              return a.basis().to_text() < b.basis().to_text();
            });
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(!(subs[i] == subs[i - 1]));

  // enumeration inside a proper subspace
  std::mt19937_64 rng(19);
  auto host = BinarySubspace::from_generators(random_matrix(3, 6, rng));
  auto inner = all_subspaces(host, 2);
  CHECK(inner.size() == gaussian_binomial(host.dim(), 2));
  for (auto& s : inner) CHECK(host.contains(s));

  CHECK_THROWS_AS(all_subspaces(BinarySubspace::full(24), 12, 1000), GuardError);
}

TEST_CASE("matrix text round trip") {
  std::mt19937_64 rng(23);
  auto m = random_matrix(4, 9, rng);
  CHECK(BinaryMatrix::from_text(m.to_text()) == m);
  CHECK_THROWS_AS(BinaryMatrix::from_text("01\n0\n"), ParseError);
  CHECK_THROWS_AS(BinaryMatrix::from_text("0x\n"), ParseError);
}
