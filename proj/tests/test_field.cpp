#include <catch2/catch_amalgamated.hpp>

#include "addeq/field.hpp"

using namespace addeq;

TEST_CASE("degenerate field F_2") {
  FieldContext f(1);
  CHECK(f.order() == 2);
  CHECK(f.primitive_element() == 1);
  CHECK(f.pow(f.primitive_element(), 1) == 1);  // order 1 = 2^1 - 1
  CHECK(f.trace(1) == 1);
  CHECK(f.trace(0) == 0);
}

TEST_CASE("F_4 arithmetic is forced by x^2 + x + 1") {
  FieldContext f(2);
  Symbol e = f.primitive_element();
  CHECK(e == 2);
  CHECK(f.mul(e, e) == (e ^ 1));  // e^2 = e + 1
  CHECK(FieldContext::add(3, 3) == 0);
  CHECK(f.trace(e) == 1);  // e + e^2 = 1
  CHECK(f.trace(1) == 0);
}

TEST_CASE("F_8 inverses") {
  FieldContext f(3);
  Symbol e = f.primitive_element();
  CHECK(f.mul(e, f.inv(e)) == 1);
  CHECK(f.pow(e, 7) == 1);
  for (unsigned k = 1; k < 7; ++k) CHECK(f.pow(e, k) != 1);
  CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
}

TEST_CASE("all sixteen degrees have a primitive table entry") {
  for (unsigned r = 1; r <= 16; ++r) {
    FieldContext f(r);
    Symbol e = f.primitive_element();
    // e^(q-1) = 1 and all smaller powers distinct from 1
    CHECK(f.pow(e, f.order() - 1) == 1);
    if (r <= 10) {
      std::vector<char> seen(f.order(), 0);
      for (std::uint32_t k = 0; k < f.order() - 1; ++k) {
        Symbol p = f.pow(e, k);
        CHECK(!seen[p]);
        seen[p] = 1;
      }
    }
  }
  CHECK_THROWS_AS(FieldContext(0), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext(17), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for small degrees") {
  for (unsigned r = 1; r <= 4; ++r) {
    FieldContext f(r);
    const std::uint32_t q = f.order();
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        Symbol sa = Symbol(a), sb = Symbol(b);
        CHECK(f.mul(sa, sb) == f.mul(sb, sa));
        for (std::uint32_t c = 0; c < q; ++c) {
          Symbol sc = Symbol(c);
          CHECK(f.mul(f.mul(sa, sb), sc) == f.mul(sa, f.mul(sb, sc)));
          CHECK(f.mul(sa, FieldContext::add(sb, sc)) ==
                FieldContext::add(f.mul(sa, sb), f.mul(sa, sc)));
        }
      }
  }
}

TEST_CASE("trace is F_2-linear and balanced") {
  for (unsigned r = 1; r <= 8; ++r) {
    FieldContext f(r);
    const std::uint32_t q = f.order();
    std::uint32_t zeros = 0;
    for (std::uint32_t a = 0; a < q; ++a) {
      if (f.trace(Symbol(a)) == 0) ++zeros;
      for (std::uint32_t b = 0; b < q; ++b)
        CHECK(f.trace(Symbol(a ^ b)) ==
              (f.trace(Symbol(a)) ^ f.trace(Symbol(b))));
    }
    CHECK(zeros == q / 2);
  }
}

TEST_CASE("choose_degree picks the minimal extension") {
  CHECK(choose_degree(1) == 1);
  CHECK(choose_degree(2) == 2);
  CHECK(choose_degree(3) == 2);
  CHECK(choose_degree(4) == 3);
  CHECK(choose_degree(7) == 3);
  CHECK(choose_degree(8) == 4);
  CHECK_THROWS_AS(choose_degree(0), std::invalid_argument);
  // e^0..e^(h-1) pairwise distinct and nonzero at the chosen degree
  for (unsigned h = 1; h <= 16; ++h) {
    FieldContext f(choose_degree(h));
    std::set<Symbol> powers;
    for (unsigned w = 0; w < h; ++w) {
      Symbol p = f.power_of_e(w);
      CHECK(p != 0);
      powers.insert(p);
    }
    CHECK(powers.size() == h);
  }
}

TEST_CASE("hex round trip") {
  CHECK(symbol_to_hex(3) == "3");
  CHECK(symbol_to_hex(0x1f) == "1f");
  CHECK(symbol_from_hex("3", 2) == 3);
  CHECK(symbol_from_hex("1f", 5) == 0x1f);
  CHECK_THROWS_AS(symbol_from_hex("4", 2), ParseError);
  CHECK_THROWS_AS(symbol_from_hex("zz", 4), ParseError);
}
