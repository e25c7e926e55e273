#include <doctest.h>

#include <random>

#include "core/ring_spec.hpp"

using namespace icg;

TEST_CASE("atoms parse") {
  RingSpec s = parse_ring_spec("Z8");
  CHECK(s.kind == RingSpec::Kind::Atom);
  CHECK(s.atom == AtomKind::Zn);
  CHECK(s.params == std::vector<uint64_t>{8});

  CHECK(parse_ring_spec("GF(4)") == RingSpec::gf(2, 2));
  CHECK(parse_ring_spec("GF(2,2)") == RingSpec::gf(2, 2));
  CHECK(parse_ring_spec("GF(27)") == RingSpec::gf(3, 3));
  CHECK(parse_ring_spec("GF(7)") == RingSpec::gf(7, 1));
}

TEST_CASE("products parse") {
  RingSpec s = parse_ring_spec("Z9 x Z5 x Z2");
  REQUIRE(s.kind == RingSpec::Kind::Product);
  REQUIRE(s.children.size() == 3);
  CHECK(s.children[0] == RingSpec::zn(9));
  CHECK(s.children[1] == RingSpec::zn(5));
  CHECK(s.children[2] == RingSpec::zn(2));

  CHECK(parse_ring_spec("GF(4) x Z3") ==
        RingSpec::product({RingSpec::gf(2, 2), RingSpec::zn(3)}));
  CHECK(parse_ring_spec("Z9xZ5") ==
        RingSpec::product({RingSpec::zn(9), RingSpec::zn(5)}));
  // nested grouping is preserved
  RingSpec nested = parse_ring_spec("(Z2 x Z3) x Z5");
  REQUIRE(nested.children.size() == 2);
  CHECK(nested.children[0].kind == RingSpec::Kind::Product);
}

TEST_CASE("quotient aliases parse to the intended atoms") {
  CHECK(parse_ring_spec("Z2[x]/(x^2)") == RingSpec::named(AtomKind::Z2X2));
  CHECK(parse_ring_spec("Z2[x]/(x^3)") == RingSpec::named(AtomKind::Z2X3));
  CHECK(parse_ring_spec("Z4[x]/(2x,x^2-2)") == RingSpec::named(AtomKind::Z4A));
  CHECK(parse_ring_spec("Z2[x,y]/(x^2,xy,y^2)") ==
        RingSpec::named(AtomKind::Z2XY));
  CHECK(parse_ring_spec("Z4[x]/(x^2,2x)") == RingSpec::named(AtomKind::Z4B));
  // short ids too
  CHECK(parse_ring_spec("Z2XY") == RingSpec::named(AtomKind::Z2XY));
  CHECK(parse_ring_spec("Z4B x Z3") ==
        RingSpec::product(
            {RingSpec::named(AtomKind::Z4B), RingSpec::zn(3)}));
}

TEST_CASE("canonical formatting") {
  CHECK(format_ring_spec(RingSpec::product({RingSpec::zn(4),
                                            RingSpec::zn(3)})) == "Z4 x Z3");
  CHECK(format_ring_spec(RingSpec::gf(2, 3)) == "GF(8)");
  CHECK(format_ring_spec(RingSpec::named(AtomKind::Z4B)) == "Z4[x]/(x^2,2x)");
}

TEST_CASE("diagnostics carry positions") {
  auto position_of = [](const char* text) {
    try {
      parse_ring_spec(text);
    } catch (const ParseError& e) {
      return e.diagnostic.position;
    }
    return SIZE_MAX;
  };
  CHECK(position_of("Z1") == 1);            // at the bad modulus
  CHECK(position_of("GF(12)") == 3);        // not a prime power
  CHECK(position_of("GF(4,2)") == 3);       // base not prime
  CHECK(position_of("Z3^2") == 2);          // exponent sugar rejected
  CHECK(position_of("Z3 x") == 4);          // missing term
  CHECK(position_of("") == 0);
  CHECK(position_of("Q8") == 0);
  CHECK(position_of("Z3 Z5") == 3);         // missing separator

  // prefix-valid input fails at the first invalid token
  try {
    parse_ring_spec("Z4 x GF(6)");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.diagnostic.position == 8);
    CHECK(!e.diagnostic.message.empty());
  }
}

namespace {

RingSpec random_spec(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> atom_pick(0, 8);
  std::uniform_int_distribution<int> arity(2, 4);
  auto make_atom = [&]() -> RingSpec {
    switch (atom_pick(rng)) {
      case 0:
        return RingSpec::zn(2 + rng() % 63);
      case 1:
        return RingSpec::gf(2, 1 + rng() % 4);
      case 2:
        return RingSpec::gf(3, 1 + rng() % 3);
      case 3:
        return RingSpec::gf(5, 1 + rng() % 2);
      case 4:
        return RingSpec::named(AtomKind::Z2X2);
      case 5:
        return RingSpec::named(AtomKind::Z2X3);
      case 6:
        return RingSpec::named(AtomKind::Z4A);
      case 7:
        return RingSpec::named(AtomKind::Z2XY);
      default:
        return RingSpec::named(AtomKind::Z4B);
    }
  };
  if (depth == 0 || rng() % 3 != 0) return make_atom();
  std::vector<RingSpec> children;
  int n = arity(rng);
  for (int i = 0; i < n; ++i) children.push_back(random_spec(rng, depth - 1));
  return RingSpec::product(std::move(children));
}

}  // namespace

TEST_CASE("round trip over 1000 generated specs") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 1000; ++i) {
    RingSpec s = random_spec(rng, 2);
    RingSpec back = parse_ring_spec(format_ring_spec(s));
    CHECK(back == s);
  }
}
