#include <doctest.h>

#include <optional>
#include <utility>
#include <vector>

#include "dyadic.hpp"
#include "error.hpp"
#include "plmap.hpp"
#include "support/testutil.hpp"

using tgf::Dyadic;
using tgf::Error;
using tgf::ErrorCode;
using tgf::FMap;
using tgf::TLikeMap;
using tgf::Vertex;
using tgftest::Rational;

namespace {

Vertex vx(const char* x, const char* y) {
  return {Dyadic::parse(x), Dyadic::parse(y)};
}

// The one-break slope-2 element: x on (-inf,0], 2x on [0,1], x+1 on [1,inf).
FMap one_break_doubler() {
  return FMap::validate({vx("0", "0"), vx("1", "2")}, 0, 1);
}

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

TEST_SUITE("plmap") {

TEST_CASE("validate accepts the six-condition examples") {
  CHECK_NOTHROW(one_break_doubler());
  const FMap t3 = FMap::validate({}, 3, 3);
  CHECK(t3 == FMap::translation(3));
  CHECK(code_of([] { FMap::validate({}, 3, 2); }) == ErrorCode::kTailMismatch);
}

TEST_CASE("validate rejects bad slopes, order, and tails") {
  CHECK(code_of([] {
          FMap::validate({vx("0", "0"), vx("1", "3")}, 0, 2);
        }) == ErrorCode::kBadSlope);
  CHECK(code_of([] {
          FMap::validate({vx("1", "1"), vx("0", "0")}, 0, 0);
        }) == ErrorCode::kNonMonotone);
  CHECK(code_of([] {
          FMap::validate({vx("0", "0"), vx("1", "0")}, 0, -1);
        }) == ErrorCode::kNonMonotone);
  CHECK(code_of([] {
          FMap::validate({vx("0", "5"), vx("1", "6")}, 0, 5);
        }) == ErrorCode::kTailMismatch);
  CHECK(code_of([] {
          FMap::validate({vx("0", "0"), vx("1", "2")}, 0, 2);
        }) == ErrorCode::kTailMismatch);
}

TEST_CASE("validate_tlike accepts the identity core and embeddings") {
  const TLikeMap id = TLikeMap::validate(
      Dyadic(0), Dyadic(0), {vx("-1", "-1"), vx("0", "0"), vx("1", "1")});
  CHECK(id == TLikeMap::identity());

  tgftest::Rng rng(111);
  for (int i = 0; i < 50; ++i) {
    CHECK_NOTHROW(tgf::embed_as_tlike(tgftest::random_fmap(rng)));
  }
}

TEST_CASE("validate_tlike rejects broken periodicity seeds and anchors") {
  CHECK(code_of([] {
          TLikeMap::validate(Dyadic(0), Dyadic(0),
                             {vx("-1", "0"), vx("1", "1")});
        }) == ErrorCode::kPeriodSeedMismatch);
  CHECK(code_of([] {
          TLikeMap::validate(Dyadic(1), Dyadic(1),
                             {vx("0", "0"), vx("2", "2")});
        }) == ErrorCode::kTailMismatch);
  CHECK(code_of([] {
          TLikeMap::validate(Dyadic(0), Dyadic(1),
                             {vx("-1", "-1"), vx("1", "1")});
        }) == ErrorCode::kTailMismatch);
}

TEST_CASE("evaluation: tails, segments, and far periodic reduction") {
  const FMap f = one_break_doubler();
  CHECK(f.eval(Dyadic::parse("1/2^1")) == Dyadic(1));
  CHECK(f.eval(Dyadic(0)) == Dyadic(0));
  CHECK(f.eval(Dyadic(-5)) == Dyadic(-5));
  CHECK(f.eval(Dyadic::parse("-3/2^2")) == Dyadic::parse("-3/2^2"));
  CHECK(f.eval(Dyadic(7)) == Dyadic(8));

  const TLikeMap id = TLikeMap::identity();
  const Dyadic big = Dyadic::parse("2000001/2^1");  // 10^6 + 1/2
  CHECK(id.eval(big) == big);
  CHECK(id.eval(-big) == -big);
}

TEST_CASE("random evaluation agrees with the rational oracle") {
  tgftest::Rng rng(222);
  for (int i = 0; i < 60; ++i) {
    const FMap f = tgftest::random_fmap(rng);
    const tgftest::OracleF of = tgftest::OracleF::from(f);
    const TLikeMap g = tgftest::random_tlike(rng);
    const tgftest::OracleT og = tgftest::OracleT::from(g);
    for (int k = 0; k < 40; ++k) {
      const Dyadic x = tgftest::random_dyadic(rng, -40, 40, 6);
      const Rational xr = tgftest::to_rational(x);
      CHECK(tgftest::to_rational(f.eval(x)) == of.eval(xr));
      CHECK(tgftest::to_rational(g.eval(x)) == og.eval(xr));
    }
  }
}

TEST_CASE("eventually T-like periodicity") {
  tgftest::Rng rng(333);
  for (int i = 0; i < 40; ++i) {
    const TLikeMap g = tgftest::random_tlike(rng);
    for (int k = 0; k < 30; ++k) {
      // Sample x outside (L-1, R): either below L-1 or at/above R.
      const Dyadic x = rng.pick(0, 1) == 0
                           ? g.left_anchor() - Dyadic(1) -
                                 tgftest::random_dyadic(rng, 0, 20, 5)
                           : g.right_anchor() +
                                 tgftest::random_dyadic(rng, 0, 20, 5);
      CHECK(g.eval(x + Dyadic(1)) == g.eval(x) + Dyadic(1));
    }
  }
}

TEST_CASE("composition matches hand values and the grid oracle") {
  const FMap t1 = FMap::translation(1);
  CHECK(tgf::compose(t1, t1) == FMap::translation(2));

  const FMap f = one_break_doubler();
  CHECK(tgf::compose(f, FMap::identity()) == f);
  CHECK(tgf::compose(FMap::identity(), f) == f);

  const FMap ff = tgf::compose(f, f);
  const FMap frozen = FMap::validate(
      {vx("0", "0"), vx("1/2^1", "2"), vx("1", "3")}, 0, 2);
  CHECK(ff == frozen);

  // Grid oracle: pointwise rational evaluation of f(f(x)) on a dyadic grid.
  const tgftest::OracleF of = tgftest::OracleF::from(f);
  const tgftest::OracleF off = tgftest::OracleF::from(ff);
  for (int n = -64; n <= 64; ++n) {
    const Rational x(n, 16);
    CHECK(off.eval(x) == of.eval(of.eval(x)));
  }
}

TEST_CASE("composition evaluates pointwise") {
  tgftest::Rng rng(444);
  for (int i = 0; i < 60; ++i) {
    const FMap f = tgftest::random_fmap(rng);
    const FMap h = tgftest::random_fmap(rng);
    const FMap fh = tgf::compose(f, h);
    for (int k = 0; k < 20; ++k) {
      const Dyadic x = tgftest::random_dyadic(rng, -30, 30, 5);
      CHECK(fh.eval(x) == f.eval(h.eval(x)));
    }
  }
}

TEST_CASE("inversion of F elements") {
  CHECK(tgf::invert(FMap::translation(3)) ==
        FMap::translation(-3));

  const FMap f = one_break_doubler();
  const FMap fi = tgf::invert(f);
  CHECK(fi == FMap::validate({vx("0", "0"), vx("2", "1")}, 0, -1));
  CHECK(tgf::compose(f, fi) == FMap::identity());
  CHECK(tgf::compose(fi, f) == FMap::identity());

  tgftest::Rng rng(555);
  for (int i = 0; i < 80; ++i) {
    const FMap g = tgftest::random_fmap(rng);
    const FMap gi = tgf::invert(g);
    CHECK(tgf::compose(g, gi) == FMap::identity());
    CHECK(tgf::invert(gi) == g);
  }
}

TEST_CASE("inversion of eventually T-like maps") {
  CHECK(tgf::invert(TLikeMap::identity()) == TLikeMap::identity());

  tgftest::Rng rng(666);
  for (int i = 0; i < 50; ++i) {
    const TLikeMap g = tgftest::random_tlike(rng);
    const TLikeMap gi = tgf::invert(g);
    const tgftest::OracleT og = tgftest::OracleT::from(g);
    const tgftest::OracleT ogi = tgftest::OracleT::from(gi);
    const TLikeMap gii = tgf::invert(gi);
    for (int k = 0; k < 25; ++k) {
      const Dyadic x = tgftest::random_dyadic(rng, -30, 30, 5);
      const Rational xr = tgftest::to_rational(x);
      // gi is the functional inverse; anchors may be re-clamped, so the
      // double inverse is compared pointwise rather than structurally.
      CHECK(ogi.eval(xr) == og.inverse_eval(xr));
      CHECK(tgftest::to_rational(gi.eval(g.eval(x))) == xr);
      CHECK(tgftest::to_rational(gii.eval(x)) == og.eval(xr));
    }
  }
}

TEST_CASE("canonicalization removes spurious breaks only") {
  CHECK(FMap::validate({vx("0", "0"), vx("1", "1"), vx("2", "2")}, 0, 0) ==
        FMap::identity());
  CHECK(FMap::validate({vx("0", "0"), vx("1/2^1", "1"), vx("1", "2")}, 0, 1) ==
        FMap::validate({vx("0", "0"), vx("1", "2")}, 0, 1));

  const std::vector<Vertex> canonical = {vx("0", "0"), vx("1", "2")};
  CHECK(tgf::canonicalize_breaks(canonical) == canonical);
  const std::vector<Vertex> once = tgf::canonicalize_breaks(
      {vx("0", "0"), vx("1/2^1", "1"), vx("1", "2"), vx("2", "3")});
  CHECK(tgf::canonicalize_breaks(once) == once);
}

TEST_CASE("embedding F elements as eventually T-like maps") {
  CHECK(tgf::embed_as_tlike(FMap::identity()) == TLikeMap::identity());

  const TLikeMap t1 = tgf::embed_as_tlike(FMap::translation(1));
  for (const Dyadic& x : {Dyadic(-3), Dyadic::parse("1/2^2"), Dyadic(9)}) {
    CHECK(t1.eval(x) == x + Dyadic(1));
  }

  tgftest::Rng rng(777);
  for (int i = 0; i < 30; ++i) {
    const FMap f = tgftest::random_fmap(rng);
    const TLikeMap e = tgf::embed_as_tlike(f);
    for (int k = 0; k < 100; ++k) {
      const Dyadic x = tgftest::random_dyadic(rng, -40, 40, 6);
      CHECK(e.eval(x) == f.eval(x));
    }
  }
}

TEST_CASE("translational parts and variation") {
  const auto [l, r] = tgf::translational_parts(one_break_doubler());
  CHECK(l == 0);
  CHECK(r == 1);

  for (const Dyadic& x : {Dyadic(-2), Dyadic(0), Dyadic::parse("5/2^1")}) {
    CHECK(tgf::variation(TLikeMap::identity(), x).is_zero());
  }

  // Tail variation stays within 1 of its anchor value.
  tgftest::Rng rng(888);
  for (int i = 0; i < 40; ++i) {
    const TLikeMap g = tgftest::random_tlike(rng);
    const Dyadic vr = tgf::variation(g, g.right_anchor());
    const Dyadic vl = tgf::variation(g, g.left_anchor());
    for (int k = 0; k < 25; ++k) {
      const Dyadic xr =
          g.right_anchor() + tgftest::random_dyadic(rng, 0, 30, 5);
      const Dyadic dr = tgf::variation(g, xr) - vr;
      CHECK(tgf::abs(dr) < Dyadic(1));
      const Dyadic xl = g.left_anchor() - tgftest::random_dyadic(rng, 0, 30, 5);
      const Dyadic dl = tgf::variation(g, xl) - vl;
      CHECK(tgf::abs(dl) < Dyadic(1));
    }
  }
}

}  // TEST_SUITE
