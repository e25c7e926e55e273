#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "core/ring.hpp"
#include "core/ring_spec.hpp"

using namespace icg;

namespace {

FiniteRing ring_of(const char* spec) {
  return build_ring(parse_ring_spec(spec));
}

std::set<uint32_t> as_set(const std::vector<uint32_t>& v) {
  return {v.begin(), v.end()};
}

// every catalog ring with order <= 64, plus a few products
std::vector<const char*> corpus() {
  return {"Z2",   "Z3",    "Z4",    "Z5",   "Z7",  "Z8",   "Z9",
          "Z16",  "Z25",   "Z27",   "Z32",  "Z49", "Z64",  "GF(4)",
          "GF(8)", "GF(9)", "GF(16)", "GF(25)", "GF(27)", "GF(32)",
          "GF(49)", "GF(64)", "Z2X2", "Z2X3", "Z4A",  "Z2XY", "Z4B",
          "Z4 x Z3", "Z2 x Z2", "Z3 x Z5", "Z8 x Z8", "Z2 x Z3 x Z5",
          "GF(4) x Z3", "Z2XY x Z3", "Z4 x Z4 x Z2"};
}

void check_axioms(const FiniteRing& r) {
  const uint32_t n = r.order();
  CHECK(r.zero() != r.one());
  for (uint32_t x = 0; x < n; ++x) {
    CHECK(r.add(x, r.zero()) == x);
    CHECK(r.mul(x, r.one()) == x);
    CHECK(r.add(x, r.neg(x)) == r.zero());
  }
  auto triple = [&](uint32_t x, uint32_t y, uint32_t z) {
    CHECK(r.add(r.add(x, y), z) == r.add(x, r.add(y, z)));
    CHECK(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)));
    CHECK(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)));
    CHECK(r.add(x, y) == r.add(y, x));
    CHECK(r.mul(x, y) == r.mul(y, x));
  };
  if (n <= 64) {
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y)
        for (uint32_t z = 0; z < n; ++z) triple(x, y, z);
  } else {
    std::mt19937 rng(7);
    std::uniform_int_distribution<uint32_t> pick(0, n - 1);
    for (int i = 0; i < 10000; ++i) triple(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

TEST_CASE("catalog orders and characteristics") {
  CHECK(ring_of("Z8").order() == 8);
  CHECK(ring_of("Z8").characteristic() == 8);
  CHECK(ring_of("Z2XY").order() == 8);
  CHECK(ring_of("Z2XY").characteristic() == 2);
  CHECK(ring_of("Z4B").characteristic() == 4);
  CHECK(ring_of("Z4A").characteristic() == 4);
  CHECK(ring_of("Z2X3").characteristic() == 2);
  CHECK(ring_of("GF(9)").characteristic() == 3);
  FiniteRing z12 = ring_of("Z4 x Z3");
  CHECK(z12.order() == 12);
  CHECK(z12.characteristic() == 12);
}

TEST_CASE("ring axioms hold on the corpus plus a large sampled ring") {
  for (const char* s : corpus()) check_axioms(ring_of(s));
  check_axioms(ring_of("Z125"));
  check_axioms(ring_of("GF(81)"));
}

TEST_CASE("arithmetic examples") {
  FiniteRing z8 = ring_of("Z8");
  CHECK(z8.mul(3, 3) == 1);  // 9 mod 8
  FiniteRing z2x2 = ring_of("Z2[x]/(x^2)");
  // x has index 2; x*x = 0
  CHECK(z2x2.mul(2, 2) == 0);
  CHECK(z2x2.label(2) == "x");
  CHECK(z2x2.label(3) == "1+x");
}

TEST_CASE("involutions") {
  CHECK(as_set(ring_of("Z8").involutions()) ==
        std::set<uint32_t>{1, 3, 5, 7});
  CHECK(as_set(ring_of("Z16").involutions()) ==
        std::set<uint32_t>{1, 7, 9, 15});
  CHECK(ring_of("GF(4)").involutions() == std::vector<uint32_t>{1});
  for (const char* s : corpus()) {
    FiniteRing r = ring_of(s);
    size_t count = r.involutions().size();
    CHECK((count & (count - 1)) == 0);  // power of two
    // contains 1 and -1
    CHECK(std::count(r.involutions().begin(), r.involutions().end(),
                     r.one()) == 1);
    CHECK(std::count(r.involutions().begin(), r.involutions().end(),
                     r.neg(r.one())) == 1);
    for (uint32_t u : r.involutions()) CHECK(r.mul(u, u) == r.one());
  }
}

TEST_CASE("involutions of a product are componentwise") {
  FiniteRing a = ring_of("Z8");
  FiniteRing b = ring_of("Z9");
  FiniteRing prod = ring_of("Z8 x Z9");
  // product index = xa * 9 + xb
  std::set<uint32_t> expected;
  for (uint32_t u : a.involutions())
    for (uint32_t v : b.involutions()) expected.insert(u * 9 + v);
  CHECK(as_set(prod.involutions()) == expected);
}

TEST_CASE("units") {
  CHECK(as_set(ring_of("Z12").units()) == std::set<uint32_t>{1, 5, 7, 11});
  CHECK(ring_of("GF(25)").units().size() == 24);
  FiniteRing z4b = ring_of("Z4[x]/(x^2,2x)");
  // units are 1, 3, 1+x, 3+x -> indices 1, 3, 5, 7
  CHECK(as_set(z4b.units()) == std::set<uint32_t>{1, 3, 5, 7});
}

TEST_CASE("idempotents") {
  CHECK(as_set(ring_of("Z12").idempotents()) ==
        std::set<uint32_t>{0, 1, 4, 9});
  CHECK(ring_of("Z8").idempotents() == std::vector<uint32_t>{0, 1});
  CHECK(ring_of("Z27").idempotents() == std::vector<uint32_t>{0, 1});
  CHECK(ring_of("Z2 x Z2").idempotents().size() == 4);
}

TEST_CASE("locality and maximal ideals") {
  CHECK(is_local(ring_of("Z9")));
  CHECK(is_local(ring_of("Z2XY")));
  CHECK(!is_local(ring_of("Z12")));
  CHECK(!is_local(ring_of("Z2 x Z3")));

  CHECK(as_set(maximal_ideal(ring_of("Z9"))) == std::set<uint32_t>{0, 3, 6});
  FiniteRing z2xy = ring_of("Z2XY");
  // M = {0, x, y, x+y} = indices {0, 2, 4, 6}; M^2 = 0
  auto m = maximal_ideal(z2xy);
  CHECK(as_set(m) == std::set<uint32_t>{0, 2, 4, 6});
  for (uint32_t a : m)
    for (uint32_t b : m) CHECK(z2xy.mul(a, b) == 0);

  CHECK_THROWS_AS(maximal_ideal(ring_of("Z12")), std::invalid_argument);
}

TEST_CASE("local rings have prime-power order, ideal, characteristic") {
  for (const char* s : corpus()) {
    FiniteRing r = ring_of(s);
    if (!is_local(r)) continue;
    auto m = maximal_ideal(r);
    uint32_t p = 2;
    for (uint32_t d = 2; d <= r.order(); ++d)
      if (r.order() % d == 0) {
        p = d;
        break;
      }
    auto is_pow = [p](uint32_t v) {
      while (v % p == 0) v /= p;
      return v == 1;
    };
    CHECK(is_pow(r.order()));
    CHECK((m.size() == 1 || is_pow(static_cast<uint32_t>(m.size()))));
    CHECK(is_pow(r.characteristic()));
  }
}

TEST_CASE("local decomposition of Z12") {
  FiniteRing z12 = ring_of("Z12");
  LocalDecomposition d = local_decomposition(z12);
  REQUIRE(d.factors.size() == 2);
  // ascending by order: Z3 via idempotent 4, then Z4 via idempotent 9
  CHECK(d.factors[0].order() == 3);
  CHECK(d.factors[1].order() == 4);
  CHECK(d.idempotents == std::vector<uint32_t>{4, 9});
  // projections are ring maps onto the factors
  for (uint32_t x = 0; x < 12; ++x)
    for (uint32_t y = 0; y < 12; ++y) {
      CHECK(d.projections[0][z12.mul(x, y)] ==
            d.factors[0].mul(d.projections[0][x], d.projections[0][y]));
      CHECK(d.projections[1][z12.add(x, y)] ==
            d.factors[1].add(d.projections[1][x], d.projections[1][y]));
    }
}

TEST_CASE("local decomposition examples") {
  LocalDecomposition d30 = local_decomposition(ring_of("Z30"));
  REQUIRE(d30.factors.size() == 3);
  CHECK(d30.factors[0].order() == 2);
  CHECK(d30.factors[1].order() == 3);
  CHECK(d30.factors[2].order() == 5);
  CHECK(d30.idempotents == std::vector<uint32_t>{15, 10, 6});

  LocalDecomposition d8 = local_decomposition(ring_of("Z8"));
  CHECK(d8.factors.size() == 1);
  CHECK(d8.factors[0].order() == 8);

  // idempotents are pairwise orthogonal and sum to one
  FiniteRing z60 = ring_of("Z60");
  LocalDecomposition d = local_decomposition(z60);
  uint32_t sum = 0;
  for (size_t i = 0; i < d.idempotents.size(); ++i) {
    for (size_t j = i + 1; j < d.idempotents.size(); ++j)
      CHECK(z60.mul(d.idempotents[i], d.idempotents[j]) == 0);
    sum = z60.add(sum, d.idempotents[i]);
  }
  CHECK(sum == z60.one());
}

TEST_CASE("decomposition factor orders match the prime-power factorization") {
  for (uint32_t n = 2; n <= 64; ++n) {
    FiniteRing r = build_ring(RingSpec::zn(n));
    LocalDecomposition d = local_decomposition(r);
    std::vector<uint32_t> orders;
    for (const auto& f : d.factors) orders.push_back(f.order());
    std::vector<uint32_t> expected;
    uint32_t m = n;
    for (uint32_t p = 2; p <= m; ++p) {
      if (m % p != 0) continue;
      uint32_t q = 1;
      while (m % p == 0) {
        q *= p;
        m /= p;
      }
      expected.push_back(q);
    }
    std::sort(orders.begin(), orders.end());
    std::sort(expected.begin(), expected.end());
    CHECK(orders == expected);
  }
}

TEST_CASE("ring isomorphism") {
  CHECK(ring_isomorphic(ring_of("Z4"), ring_of("Z2X2")) == Tri::False);
  CHECK(ring_isomorphic(ring_of("Z2XY"), ring_of("Z4B")) == Tri::False);
  CHECK(ring_isomorphic(ring_of("Z6"), ring_of("Z2 x Z3")) == Tri::True);
  CHECK(ring_isomorphic(ring_of("Z12"), ring_of("Z4 x Z3")) == Tri::True);
  CHECK(ring_isomorphic(ring_of("Z12"), ring_of("Z2 x Z6")) == Tri::False);
  CHECK(ring_isomorphic(ring_of("GF(4)"), ring_of("Z4")) == Tri::False);
  CHECK(ring_isomorphic(ring_of("Z2X3"), ring_of("Z2XY")) == Tri::False);
  CHECK(ring_isomorphic(ring_of("Z4A"), ring_of("Z4B")) == Tri::False);
  CHECK(ring_isomorphic(ring_of("Z4A"), ring_of("Z4A")) == Tri::True);
  // budget exhaustion is reported, not conflated with "no"
  CHECK(ring_isomorphic(ring_of("Z16"), ring_of("Z16"), 3) == Tri::Unknown);
}

TEST_CASE("decomposition round-trips through the product, up to isomorphism") {
  for (const char* s : {"Z6", "Z12", "Z15", "Z4 x Z3", "Z2 x Z2",
                        "Z10", "Z14", "Z2 x Z8"}) {
    FiniteRing r = ring_of(s);
    LocalDecomposition d = local_decomposition(r);
    FiniteRing rebuilt = product_ring(d.factors);
    CHECK(ring_isomorphic(r, rebuilt) == Tri::True);
  }
}

TEST_CASE("generic structure-constants constructor validates axioms") {
  // Z3 by explicit tables
  std::vector<std::vector<uint32_t>> add(3, std::vector<uint32_t>(3));
  std::vector<std::vector<uint32_t>> mul(3, std::vector<uint32_t>(3));
  for (uint32_t x = 0; x < 3; ++x)
    for (uint32_t y = 0; y < 3; ++y) {
      add[x][y] = (x + y) % 3;
      mul[x][y] = (x * y) % 3;
    }
  FiniteRing z3 = ring_from_tables(3, add, mul, 1);
  CHECK(z3.characteristic() == 3);
  CHECK(z3.units().size() == 2);

  // breaking distributivity must be rejected
  auto bad_mul = mul;
  bad_mul[2][2] = 2;  // 2*2 = 2 instead of 1
  CHECK_THROWS_AS(ring_from_tables(3, add, bad_mul, 1),
                  std::invalid_argument);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(build_ring(RingSpec::zn(1)), std::invalid_argument);
  CHECK_THROWS_AS(build_ring(RingSpec::gf(6, 1)), std::invalid_argument);
  CHECK_THROWS_AS(build_ring(RingSpec::zn(5000)), std::invalid_argument);
}
