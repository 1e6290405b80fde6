#include "plmap.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "error.hpp"

namespace tgf {

namespace {

// v = odd * 2^result for v != 0.
std::int64_t two_adic_valuation(BigInt v, BigInt* odd) {
  std::int64_t s = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++s;
  }
  *odd = std::move(v);
  return s;
}

// Slope of the segment a -> b as an exact power of two.  Caller guarantees
// b.x > a.x and b.y > a.y.
std::int64_t segment_exponent(const Vertex& a, const Vertex& b) {
  const Dyadic dx = b.x - a.x;
  const Dyadic dy = b.y - a.y;
  BigInt ox, oy;
  const std::int64_t sx = two_adic_valuation(dx.numerator(), &ox);
  const std::int64_t sy = two_adic_valuation(dy.numerator(), &oy);
  if (ox != oy) {
    throw Error(ErrorCode::kBadSlope,
                "slope between x=" + a.x.str() + " and x=" + b.x.str() +
                    " is not a power of two");
  }
  return (sy - dy.exponent()) - (sx - dx.exponent());
}

void check_monotone(const std::vector<Vertex>& vs) {
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (!(vs[i - 1].x < vs[i].x)) {
      throw Error(ErrorCode::kNonMonotone,
                  "break x-coordinates must be strictly increasing");
    }
    if (!(vs[i - 1].y < vs[i].y)) {
      throw Error(ErrorCode::kNonMonotone,
                  "break y-coordinates must be strictly increasing");
    }
  }
}

std::vector<std::int64_t> segment_exponents(const std::vector<Vertex>& vs) {
  std::vector<std::int64_t> out;
  out.reserve(vs.size() > 0 ? vs.size() - 1 : 0);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    out.push_back(segment_exponent(vs[i - 1], vs[i]));
  }
  return out;
}

// Value at x of the piecewise-linear graph through vs; x must lie within
// [vs.front().x, vs.back().x].
Dyadic interpolate(const std::vector<Vertex>& vs,
                   const std::vector<std::int64_t>& exps, const Dyadic& x) {
  auto it = std::upper_bound(
      vs.begin(), vs.end(), x,
      [](const Dyadic& value, const Vertex& v) { return value < v.x; });
  if (it == vs.begin()) {
    if (x == vs.front().x) {
      return vs.front().y;
    }
    throw Error(ErrorCode::kInternal, "interpolation outside the core");
  }
  const std::size_t i = static_cast<std::size_t>(it - vs.begin()) - 1;
  if (vs[i].x == x) {
    return vs[i].y;
  }
  if (i + 1 >= vs.size()) {
    throw Error(ErrorCode::kInternal, "interpolation outside the core");
  }
  return vs[i].y + (x - vs[i].x).mul_pow2(exps[i]);
}

// Value at any x of the unit-periodic extension of the graph through vs:
// one period beyond each end of the span repeats with offset (1, 1).
Dyadic periodic_eval(const std::vector<Vertex>& vs,
                     const std::vector<std::int64_t>& exps, const Dyadic& x) {
  const Dyadic& lo = vs.front().x;
  const Dyadic& hi = vs.back().x;
  if (x < lo) {
    const Dyadic n{(lo - x).ceil_int()};
    return interpolate(vs, exps, x + n) - n;
  }
  if (x > hi) {
    const Dyadic n{(x - hi).ceil_int()};
    return interpolate(vs, exps, x - n) + n;
  }
  return interpolate(vs, exps, x);
}

constexpr long kMaxWindowLength = 100000;

// All x in [lo, hi] where the periodic extension of vs may change slope,
// together with lo and hi themselves.
std::vector<Dyadic> periodic_break_positions(const std::vector<Vertex>& vs,
                                             const Dyadic& lo,
                                             const Dyadic& hi) {
  std::vector<Dyadic> out;
  if (hi < lo) {
    return out;
  }
  if (hi - lo > Dyadic(kMaxWindowLength)) {
    throw Error(ErrorCode::kWindowInconsistency,
                "break enumeration window is too large");
  }
  out.push_back(lo);
  out.push_back(hi);
  const Dyadic& s = vs.front().x;
  const Dyadic& t = vs.back().x;
  for (const Vertex& v : vs) {
    if (lo <= v.x && v.x <= hi) {
      out.push_back(v.x);
    }
    if (v.x >= t - Dyadic(1)) {  // right seed tiles forward
      BigInt n = (lo - v.x).ceil_int();
      if (n < 1) {
        n = 1;
      }
      const BigInt n_hi = (hi - v.x).floor_int();
      for (; n <= n_hi; ++n) {
        out.push_back(v.x + Dyadic(n));
      }
    }
    if (v.x <= s + Dyadic(1)) {  // left seed tiles backward
      BigInt n = (v.x - hi).ceil_int();
      if (n < 1) {
        n = 1;
      }
      const BigInt n_hi = (v.x - lo).floor_int();
      for (; n <= n_hi; ++n) {
        out.push_back(v.x - Dyadic(n));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Canonical interior: drop vertices with equal slopes on both sides but
// always keep the two span endpoints.
std::vector<Vertex> canonicalize_interior(std::vector<Vertex> vs) {
  if (vs.size() <= 2) {
    return vs;
  }
  std::vector<Vertex> out;
  out.reserve(vs.size());
  out.push_back(vs.front());
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    const Dyadic in_dx = vs[i].x - vs[i - 1].x;
    const Dyadic in_dy = vs[i].y - vs[i - 1].y;
    const Dyadic out_dx = vs[i + 1].x - vs[i].x;
    const Dyadic out_dy = vs[i + 1].y - vs[i].y;
    if (in_dy * out_dx != out_dy * in_dx) {
      out.push_back(vs[i]);
    }
  }
  out.push_back(vs.back());
  return out;
}

}  // namespace

std::vector<Vertex> canonicalize_breaks(std::vector<Vertex> breaks) {
  check_monotone(breaks);
  if (breaks.empty()) {
    return breaks;
  }
  const std::size_t n = breaks.size();
  std::vector<Vertex> out;
  out.reserve(n);
  const Dyadic one(1);
  for (std::size_t i = 0; i < n; ++i) {
    const Dyadic in_dx = i == 0 ? one : breaks[i].x - breaks[i - 1].x;
    const Dyadic in_dy = i == 0 ? one : breaks[i].y - breaks[i - 1].y;
    const Dyadic out_dx = i + 1 == n ? one : breaks[i + 1].x - breaks[i].x;
    const Dyadic out_dy = i + 1 == n ? one : breaks[i + 1].y - breaks[i].y;
    if (in_dy * out_dx != out_dy * in_dx) {
      out.push_back(breaks[i]);
    }
  }
  return out;
}

FMap FMap::validate(std::vector<Vertex> breaks, std::int64_t left,
                    std::int64_t right) {
  check_monotone(breaks);
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    segment_exponent(breaks[i - 1], breaks[i]);  // power-of-two check
  }
  breaks = canonicalize_breaks(std::move(breaks));
  if (breaks.empty()) {
    if (left != right) {
      throw Error(ErrorCode::kTailMismatch,
                  "a map with no breaks needs equal tail translations, got " +
                      std::to_string(left) + " and " + std::to_string(right));
    }
  } else {
    if (breaks.front().y != breaks.front().x + Dyadic(left)) {
      throw Error(ErrorCode::kTailMismatch,
                  "left tail x + " + std::to_string(left) +
                      " does not meet the first break");
    }
    if (breaks.back().y != breaks.back().x + Dyadic(right)) {
      throw Error(ErrorCode::kTailMismatch,
                  "right tail x + " + std::to_string(right) +
                      " does not meet the last break");
    }
  }
  FMap f;
  f.slope_exponents_ = segment_exponents(breaks);
  f.breaks_ = std::move(breaks);
  f.left_ = left;
  f.right_ = right;
  return f;
}

FMap FMap::identity() {
  return translation(0);
}

FMap FMap::translation(std::int64_t t) {
  FMap f;
  f.left_ = t;
  f.right_ = t;
  return f;
}

Dyadic FMap::eval(const Dyadic& x) const {
  if (breaks_.empty() || x <= breaks_.front().x) {
    return x + Dyadic(left_);
  }
  if (x >= breaks_.back().x) {
    return x + Dyadic(right_);
  }
  auto it = std::upper_bound(
      breaks_.begin(), breaks_.end(), x,
      [](const Dyadic& value, const Vertex& v) { return value < v.x; });
  const std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
  if (breaks_[i].x == x) {
    return breaks_[i].y;
  }
  return breaks_[i].y + (x - breaks_[i].x).mul_pow2(slope_exponents_[i]);
}

FMap compose(const FMap& f, const FMap& h) {
  const FMap h_inv = invert(h);
  std::vector<Dyadic> xs;
  xs.reserve(f.breaks().size() + h.breaks().size());
  for (const Vertex& v : h.breaks()) {
    xs.push_back(v.x);
  }
  for (const Vertex& v : f.breaks()) {
    xs.push_back(h_inv.eval(v.x));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Vertex> verts;
  verts.reserve(xs.size());
  for (const Dyadic& x : xs) {
    verts.push_back({x, f.eval(h.eval(x))});
  }
  return FMap::validate(std::move(verts),
                        f.left_translation() + h.left_translation(),
                        f.right_translation() + h.right_translation());
}

FMap invert(const FMap& f) {
  std::vector<Vertex> verts;
  verts.reserve(f.breaks().size());
  for (const Vertex& v : f.breaks()) {
    verts.push_back({v.y, v.x});
  }
  return FMap::validate(std::move(verts), -f.left_translation(),
                        -f.right_translation());
}

TLikeMap TLikeMap::validate(Dyadic left_anchor, Dyadic right_anchor,
                            std::vector<Vertex> core) {
  if (sign(left_anchor) > 0) {
    throw Error(ErrorCode::kTailMismatch, "left anchor must be <= 0");
  }
  if (sign(right_anchor) < 0) {
    throw Error(ErrorCode::kTailMismatch, "right anchor must be >= 0");
  }
  check_monotone(core);
  if (core.size() < 2 || core.front().x != left_anchor - Dyadic(1) ||
      core.back().x != right_anchor + Dyadic(1)) {
    throw Error(ErrorCode::kTailMismatch,
                "core must span exactly [L - 1, R + 1]");
  }
  std::vector<std::int64_t> exps = segment_exponents(core);
  // Both tails repeat with offset (1, 1); the seam values must agree.
  const Dyadic at_left = interpolate(core, exps, left_anchor);
  if (at_left != core.front().y + Dyadic(1)) {
    throw Error(ErrorCode::kPeriodSeedMismatch,
                "value at L must be the value at L - 1 plus 1");
  }
  const Dyadic at_right = interpolate(core, exps, right_anchor);
  if (core.back().y != at_right + Dyadic(1)) {
    throw Error(ErrorCode::kPeriodSeedMismatch,
                "value at R + 1 must be the value at R plus 1");
  }
  core = canonicalize_interior(std::move(core));
  TLikeMap g;
  g.slope_exponents_ = segment_exponents(core);
  g.core_ = std::move(core);
  g.left_anchor_ = std::move(left_anchor);
  g.right_anchor_ = std::move(right_anchor);
  return g;
}

TLikeMap TLikeMap::identity() {
  return validate(Dyadic(0), Dyadic(0),
                  {{Dyadic(-1), Dyadic(-1)}, {Dyadic(1), Dyadic(1)}});
}

Dyadic TLikeMap::eval(const Dyadic& x) const {
  return periodic_eval(core_, slope_exponents_, x);
}

std::vector<Dyadic> TLikeMap::break_positions_in(const Dyadic& lo,
                                                 const Dyadic& hi) const {
  return periodic_break_positions(core_, lo, hi);
}

TLikeMap invert(const TLikeMap& g) {
  std::vector<Vertex> reflected;
  reflected.reserve(g.core().size());
  for (const Vertex& v : g.core()) {
    reflected.push_back({v.y, v.x});
  }
  const std::vector<std::int64_t> exps = segment_exponents(reflected);
  // The inverse repeats outside (g(L) - 1, g(R)); by the seam equations
  // g(L) and g(R) sit one unit inside the reflected span.
  const Dyadic g_left = reflected.front().x + Dyadic(1);
  const Dyadic g_right = reflected.back().x - Dyadic(1);
  // Anchors must stay astride zero; widening the window never hurts.
  const Dyadic new_left = std::min(g_left, Dyadic(0));
  const Dyadic new_right = std::max(g_right, Dyadic(0));
  const std::vector<Dyadic> xs = periodic_break_positions(
      reflected, new_left - Dyadic(1), new_right + Dyadic(1));
  std::vector<Vertex> core;
  core.reserve(xs.size());
  for (const Dyadic& x : xs) {
    core.push_back({x, periodic_eval(reflected, exps, x)});
  }
  return TLikeMap::validate(new_left, new_right, std::move(core));
}

TLikeMap embed_as_tlike(const FMap& f) {
  const Dyadic zero(0);
  const Dyadic left =
      f.breaks().empty() ? zero : std::min(zero, f.breaks().front().x);
  const Dyadic right =
      f.breaks().empty() ? zero : std::max(zero, f.breaks().back().x);
  std::vector<Vertex> core;
  core.reserve(f.breaks().size() + 2);
  const Dyadic lo = left - Dyadic(1);
  const Dyadic hi = right + Dyadic(1);
  core.push_back({lo, f.eval(lo)});
  for (const Vertex& v : f.breaks()) {
    core.push_back(v);
  }
  core.push_back({hi, f.eval(hi)});
  return TLikeMap::validate(left, right, std::move(core));
}

std::pair<std::int64_t, std::int64_t> translational_parts(const FMap& f) {
  return {f.left_translation(), f.right_translation()};
}

Dyadic variation(const TLikeMap& g, const Dyadic& x) {
  return g.eval(x) - x;
}

}  // namespace tgf
