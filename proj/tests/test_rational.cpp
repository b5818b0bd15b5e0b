#include "rootcfg/rational.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace rootcfg;

TEST_CASE("rationals are canonical: reduced, positive denominator") {
  const Rat x = Rat(-25) / Rat(-100);
  CHECK(num(x) == 1);
  CHECK(den(x) == 4);
  CHECK(sign(x) == 1);
  const Rat y = Rat(Int(25), Int(100));
  CHECK(num(y) == 1);
  CHECK(den(y) == 4);
  const Rat z = Rat(3) / Rat(-7);
  CHECK(den(z) == 7);
  CHECK(sign(z) == -1);
  CHECK(sign(Rat(0)) == 0);
}

TEST_CASE("to_string emits n or n/d") {
  CHECK(to_string(Rat(4)) == "4");
  CHECK(to_string(Rat(-4, 6)) == "-2/3");
  CHECK(to_string(Rat(0)) == "0");
}

TEST_CASE("parse_rational accepts integers, fractions and finite decimals") {
  CHECK(*parse_rational("-6") == Rat(-6));
  CHECK(*parse_rational("25/100") == Rat(1, 4));
  CHECK(*parse_rational("-3/9") == Rat(-1, 3));
  CHECK(*parse_rational("0.25") == Rat(1, 4));
  CHECK(*parse_rational("-12.5") == Rat(-25, 2));
  CHECK(*parse_rational("0") == Rat(0));
}

TEST_CASE("parse_rational rejects malformed tokens") {
  for (const char* bad : {"", "-", "x", "1/0", "1/-2", "+5", "1.", ".5", "1/2/3",
                          "1.2.3", "2e3", " 1", "1 "}) {
    CAPTURE(bad);
    CHECK(!parse_rational(bad).has_value());
  }
}

TEST_CASE("parse round-trips to_string") {
  test::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rat x = gen.rat(1000, 1000);
    CHECK(*parse_rational(to_string(x)) == x);
  }
}
