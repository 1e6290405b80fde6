#include <doctest.h>

#include <optional>

#include "dyadic.hpp"
#include "error.hpp"
#include "support/testutil.hpp"

using tgf::BigInt;
using tgf::Dyadic;
using tgf::Error;
using tgf::ErrorCode;
using tgftest::Rational;

namespace {

template <typename Fn>
std::optional<ErrorCode> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("dyadic") {

TEST_CASE("normalization strips powers of two") {
  const Dyadic a = Dyadic::normalized(BigInt(4), 3);
  CHECK(a.numerator() == 1);
  CHECK(a.exponent() == 1);

  const Dyadic zero = Dyadic::normalized(BigInt(0), 5);
  CHECK(zero.numerator() == 0);
  CHECK(zero.exponent() == 0);
  CHECK(zero.is_zero());

  const Dyadic seven = Dyadic::normalized(BigInt(7), 0);
  CHECK(seven.numerator() == 7);
  CHECK(seven.exponent() == 0);
  CHECK(seven.is_integer());
}

TEST_CASE("arithmetic matches hand values") {
  const Dyadic half = Dyadic::parse("1/2^1");
  const Dyadic quarter = Dyadic::parse("1/2^2");
  CHECK(half + quarter == Dyadic::parse("3/2^2"));
  CHECK(half + Dyadic(0) == half);
  CHECK(Dyadic::parse("3/2^3") + Dyadic::parse("5/2^3") == Dyadic(1));

  CHECK(half * Dyadic::parse("3/2^2") == Dyadic::parse("3/2^3"));
  CHECK(Dyadic::parse("5/2^3").mul_pow2(3) == Dyadic(5));
  CHECK(Dyadic(1).mul_pow2(-2) == Dyadic::parse("1/2^2"));
}

TEST_CASE("comparison and floor") {
  CHECK(Dyadic::parse("1/2^1") < Dyadic::parse("3/2^2"));
  CHECK(Dyadic::parse("-1/2^1").floor_int() == -1);
  CHECK(Dyadic::parse("7/2^1").floor_int() == 3);
  CHECK(Dyadic(4).floor_int() == 4);
  CHECK(Dyadic::parse("-1/2^1").ceil_int() == 0);
  CHECK(Dyadic::parse("7/2^1").ceil_int() == 4);
}

TEST_CASE("results stay canonical and agree with the rational oracle") {
  tgftest::Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    const Dyadic a = tgftest::random_dyadic(rng, -40, 40, 8);
    const Dyadic b = tgftest::random_dyadic(rng, -40, 40, 8);
    for (const Dyadic& v : {a + b, a - b, a * b, -a}) {
      CHECK((v.exponent() == 0 || v.numerator() % 2 != 0));
    }
    CHECK(tgftest::to_rational(a + b) ==
          tgftest::to_rational(a) + tgftest::to_rational(b));
    CHECK(tgftest::to_rational(a - b) ==
          tgftest::to_rational(a) - tgftest::to_rational(b));
    CHECK(tgftest::to_rational(a * b) ==
          tgftest::to_rational(a) * tgftest::to_rational(b));
  }
}

TEST_CASE("ring axioms hold exactly on random samples") {
  tgftest::Rng rng(202);
  for (int i = 0; i < 300; ++i) {
    const Dyadic a = tgftest::random_dyadic(rng, -20, 20, 6);
    const Dyadic b = tgftest::random_dyadic(rng, -20, 20, 6);
    const Dyadic c = tgftest::random_dyadic(rng, -20, 20, 6);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("compare agrees with subtraction; floor brackets the value") {
  tgftest::Rng rng(303);
  for (int i = 0; i < 300; ++i) {
    const Dyadic a = tgftest::random_dyadic(rng, -20, 20, 6);
    const Dyadic b = tgftest::random_dyadic(rng, -20, 20, 6);
    CHECK((a < b) == (tgf::sign(a - b) < 0));
    CHECK((a == b) == ((a - b).is_zero()));
    const BigInt fl = a.floor_int();
    CHECK(Dyadic(fl.convert_to<long long>()) <= a);
    CHECK(a < Dyadic(fl.convert_to<long long>() + 1));
  }
}

TEST_CASE("text round trip") {
  tgftest::Rng rng(404);
  for (int i = 0; i < 300; ++i) {
    const Dyadic a = tgftest::random_dyadic(rng, -100, 100, 10);
    CHECK(Dyadic::parse(a.str()) == a);
  }
  CHECK(Dyadic(5).str() == "5");
  CHECK(Dyadic::parse("-3/2^2").str() == "-3/2^2");
  CHECK(Dyadic::parse("6/2^6") == Dyadic::parse("3/2^5"));
  CHECK(Dyadic::parse("7") == Dyadic(7));
  CHECK(Dyadic::parse("+7") == Dyadic(7));
}

TEST_CASE("parse rejects non-dyadic text") {
  for (const char* bad : {"", "x", "1/3", "1/2^", "--1", "1/2^-1", "1.5",
                          "1/2^99999999", "2/4", "1 /2^1"}) {
    CHECK(code_of([bad] { Dyadic::parse(bad); }) == ErrorCode::kNonDyadic);
  }
}

}  // TEST_SUITE
