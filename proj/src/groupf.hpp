#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "plmap.hpp"
#include "zlinalg.hpp"

namespace tgf {

// Image of an element under the abelianization map: the pair of tail
// translations.  The map is a homomorphism onto Z x Z.
struct AbPair {
  std::int64_t l = 0;
  std::int64_t r = 0;
  bool operator==(const AbPair& other) const = default;
  friend AbPair operator+(const AbPair& a, const AbPair& b) {
    return {a.l + b.l, a.r + b.r};
  }
  friend AbPair operator-(const AbPair& a, const AbPair& b) {
    return {a.l - b.l, a.r - b.r};
  }
};

AbPair ab(const FMap& f);

// Derived subgroup = kernel of ab = maps that are the identity near both
// infinities.
bool is_derived_element(const FMap& f);

// Conjugation by x -> -x:  rev(f)(x) = -f(-x).
FMap rev(const FMap& f);

// g o f o g^-1 for eventually periodic g.  The result is again an FMap
// with the same tail translations as f.
FMap conj_by_tlike(const FMap& f, const TLikeMap& g);

struct RevFactor {
  bool operator==(const RevFactor& other) const = default;
};
struct ConjFactor {
  TLikeMap g;
  bool operator==(const ConjFactor& other) const = default;
};
using AutFactor = std::variant<RevFactor, ConjFactor>;

// Automorphism given as a composition of generators, applied left to right.
// The empty word is the identity automorphism.
class AutWord {
 public:
  AutWord() = default;
  explicit AutWord(std::vector<AutFactor> factors)
      : factors_(std::move(factors)) {}

  const std::vector<AutFactor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  bool operator==(const AutWord& other) const = default;

 private:
  std::vector<AutFactor> factors_;
};

FMap apply_aut(const AutWord& w, const FMap& f);

// Matrix of the induced map on the abelianization Z x Z, acting on column
// vectors (l, r).  Computed analytically (conjugation factors act trivially,
// each Rev contributes [[0,-1],[-1,0]]) and cross-checked against probe
// elements; disagreement raises Error(kProbeMismatch).
IntMatrix h1_matrix(const AutWord& w);
IntMatrix h1_matrix_via_probes(const AutWord& w);

// Checks the identity relating a twisted class shifted by k to a class of
// the automorphism twisted by conjugation with k^-1:
//   (x g phi(x^-1)) k == x (g k) (tau o phi)(x^-1),  tau(z) = k^-1 z k.
bool verify_class_shift_identity(const FMap& g, const FMap& k, const FMap& x,
                                 const AutWord& phi);

// class_rep(ab(f), h1_matrix(phi)): a complete invariant of the image of
// f's twisted class in the abelianization.
std::vector<BigInt> project_class(const FMap& f, const AutWord& phi);

}  // namespace tgf
