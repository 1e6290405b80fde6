#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dyadic.hpp"

namespace tgf {

struct Vertex {
  Dyadic x, y;
  bool operator==(const Vertex& other) const = default;
};

// Removes every vertex whose incoming and outgoing slopes coincide; the
// half-lines beyond the ends count as slope one.  Idempotent.
std::vector<Vertex> canonicalize_breaks(std::vector<Vertex> breaks);

// Orientation-preserving piecewise-linear self-homeomorphism of the line:
// finitely many breaks, power-of-two slopes, dyadic break coordinates, and
// integer translations x + l / x + r on the left/right tails.
// Invariant: the break list is canonical (no vertex with equal slopes on
// both sides), so structural equality is semantic equality.
class FMap {
 public:
  // Checks every condition, canonicalizes, throws Error on failure.
  static FMap validate(std::vector<Vertex> breaks, std::int64_t left,
                       std::int64_t right);
  static FMap identity();
  static FMap translation(std::int64_t t);

  const std::vector<Vertex>& breaks() const { return breaks_; }
  std::int64_t left_translation() const { return left_; }
  std::int64_t right_translation() const { return right_; }

  Dyadic eval(const Dyadic& x) const;

  bool operator==(const FMap& other) const {
    return left_ == other.left_ && right_ == other.right_ &&
           breaks_ == other.breaks_;
  }

 private:
  FMap() = default;
  std::vector<Vertex> breaks_;
  std::vector<std::int64_t> slope_exponents_;  // one per interior segment
  std::int64_t left_ = 0;
  std::int64_t right_ = 0;
};

FMap compose(const FMap& f, const FMap& h);  // x -> f(h(x))
FMap invert(const FMap& f);

// Piecewise-linear self-homeomorphism with the same local conditions as
// FMap but unit-periodic tails: g(x + 1) = g(x) + 1 for every x outside
// the open interval (L - 1, R), where L <= 0 <= R.  The stored core is the
// graph on [L - 1, R + 1]; one period on each side seeds the tails.
class TLikeMap {
 public:
  static TLikeMap validate(Dyadic left_anchor, Dyadic right_anchor,
                           std::vector<Vertex> core);
  static TLikeMap identity();

  const Dyadic& left_anchor() const { return left_anchor_; }
  const Dyadic& right_anchor() const { return right_anchor_; }
  const std::vector<Vertex>& core() const { return core_; }

  Dyadic eval(const Dyadic& x) const;

  // x-coordinates in [lo, hi] where the map may change slope (core vertices
  // and their periodic translates), plus lo and hi themselves.  Sorted.
  std::vector<Dyadic> break_positions_in(const Dyadic& lo,
                                         const Dyadic& hi) const;

  bool operator==(const TLikeMap& other) const {
    return left_anchor_ == other.left_anchor_ &&
           right_anchor_ == other.right_anchor_ && core_ == other.core_;
  }

 private:
  TLikeMap() = default;
  Dyadic left_anchor_, right_anchor_;
  std::vector<Vertex> core_;
  std::vector<std::int64_t> slope_exponents_;  // one per core segment
};

TLikeMap invert(const TLikeMap& g);

// The same map, re-expressed with periodic (here: pure translation) tails.
TLikeMap embed_as_tlike(const FMap& f);

std::pair<std::int64_t, std::int64_t> translational_parts(const FMap& f);

// g(x) - x.
Dyadic variation(const TLikeMap& g, const Dyadic& x);

}  // namespace tgf
