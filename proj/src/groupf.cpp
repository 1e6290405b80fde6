#include "groupf.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "error.hpp"

namespace tgf {

AbPair ab(const FMap& f) {
  return {f.left_translation(), f.right_translation()};
}

bool is_derived_element(const FMap& f) {
  return f.left_translation() == 0 && f.right_translation() == 0;
}

FMap rev(const FMap& f) {
  std::vector<Vertex> verts;
  verts.reserve(f.breaks().size());
  for (auto it = f.breaks().rbegin(); it != f.breaks().rend(); ++it) {
    verts.push_back({-it->x, -it->y});
  }
  return FMap::validate(std::move(verts), -f.right_translation(),
                        -f.left_translation());
}

FMap conj_by_tlike(const FMap& f, const TLikeMap& g) {
  const TLikeMap g_inv = invert(g);
  const FMap f_inv = invert(f);
  const std::int64_t fl = f.left_translation();
  const std::int64_t fr = f.right_translation();

  // Outside [lo, hi] the conjugate is a pure translation by f's tails: the
  // bound follows from |g(x) - x - variation(g, anchor)| < 1 past the
  // anchors, so break hunting can stop there.
  const Dyadic zero(0);
  const Dyadic rf =
      f.breaks().empty() ? zero : std::max(zero, f.breaks().back().x);
  const Dyadic lf =
      f.breaks().empty() ? zero : std::min(zero, f.breaks().front().x);
  const Dyadic vr = variation(g, g.right_anchor());
  const Dyadic vl = variation(g, g.left_anchor());
  const Dyadic hi = abs(g.right_anchor()) + abs(rf) + abs(vr) +
                    Dyadic(std::abs(fr)) + Dyadic(1);
  const Dyadic lo = -(abs(g.left_anchor()) + abs(lf) + abs(vl) +
                      Dyadic(std::abs(fl)) + Dyadic(1));

  // Breaks of g o f o g^-1 can only sit at images under g of: breaks of g,
  // breaks of f, and preimages under f of breaks of g.
  std::vector<Dyadic> xs;
  const Dyadic a = g_inv.eval(lo);
  const Dyadic b = g_inv.eval(hi);
  for (const Dyadic& p : g.break_positions_in(a, b)) {
    xs.push_back(g.eval(p));
  }
  for (const Vertex& v : f.breaks()) {
    const Dyadic c = g.eval(v.x);
    if (lo <= c && c <= hi) {
      xs.push_back(c);
    }
  }
  for (const Dyadic& p : g.break_positions_in(f.eval(a), f.eval(b))) {
    xs.push_back(g.eval(f_inv.eval(p)));
  }
  xs.push_back(lo);
  xs.push_back(hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Midpoints are a tripwire: a genuine break between two candidates would
  // survive canonicalization and fail validation below.
  std::vector<Dyadic> pts;
  pts.reserve(2 * xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pts.push_back(xs[i]);
    if (i + 1 < xs.size()) {
      pts.push_back((xs[i] + xs[i + 1]).mul_pow2(-1));
    }
  }
  std::vector<Vertex> verts;
  verts.reserve(pts.size());
  for (const Dyadic& x : pts) {
    verts.push_back({x, g.eval(f.eval(g_inv.eval(x)))});
  }
  try {
    return FMap::validate(std::move(verts), fl, fr);
  } catch (const Error& e) {
    throw Error(ErrorCode::kWindowInconsistency,
                std::string("conjugate failed validation: ") + e.what());
  }
}

FMap apply_aut(const AutWord& w, const FMap& f) {
  FMap cur = f;
  for (const AutFactor& factor : w.factors()) {
    if (std::holds_alternative<RevFactor>(factor)) {
      cur = rev(cur);
    } else {
      cur = conj_by_tlike(cur, std::get<ConjFactor>(factor).g);
    }
  }
  return cur;
}

IntMatrix h1_matrix_via_probes(const AutWord& w) {
  // Probe elements with abelianizations (1, 1) and (0, 1): together they
  // span Z x Z, so two images determine the matrix.
  const FMap p1 = FMap::translation(1);
  const FMap p2 = FMap::validate(
      {{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(2)}}, 0, 1);
  const AbPair a1 = ab(apply_aut(w, p1));
  const AbPair a2 = ab(apply_aut(w, p2));
  IntMatrix h(2, 2);
  h.at(0, 0) = a1.l - a2.l;
  h.at(0, 1) = a2.l;
  h.at(1, 0) = a1.r - a2.r;
  h.at(1, 1) = a2.r;
  return h;
}

IntMatrix h1_matrix(const AutWord& w) {
  std::size_t rev_count = 0;
  for (const AutFactor& factor : w.factors()) {
    if (std::holds_alternative<RevFactor>(factor)) {
      ++rev_count;
    }
  }
  IntMatrix analytic = IntMatrix::identity(2);
  if (rev_count % 2 == 1) {
    analytic.at(0, 0) = 0;
    analytic.at(0, 1) = -1;
    analytic.at(1, 0) = -1;
    analytic.at(1, 1) = 0;
  }
  const IntMatrix probed = h1_matrix_via_probes(w);
  if (!(analytic == probed)) {
    throw Error(ErrorCode::kProbeMismatch,
                "probe images disagree with the analytic abelianized matrix");
  }
  return analytic;
}

bool verify_class_shift_identity(const FMap& g, const FMap& k, const FMap& x,
                                 const AutWord& phi) {
  const FMap phi_x_inv = apply_aut(phi, invert(x));
  const FMap lhs = compose(compose(compose(x, g), phi_x_inv), k);
  const FMap twisted = compose(compose(invert(k), phi_x_inv), k);
  const FMap rhs = compose(compose(x, compose(g, k)), twisted);
  return lhs == rhs;
}

std::vector<BigInt> project_class(const FMap& f, const AutWord& phi) {
  const AbPair v = ab(f);
  return class_rep({BigInt(v.l), BigInt(v.r)}, h1_matrix(phi));
}

}  // namespace tgf
