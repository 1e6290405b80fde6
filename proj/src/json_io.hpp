#pragma once

#include <string>
#include <vector>

#include "groupf.hpp"
#include "plmap.hpp"
#include "zlinalg.hpp"

namespace tgf {

// JSON document formats.
//
// FMap:     {"type":"F","l":0,"r":1,"breaks":[{"x":"0","y":"0"}, ...]}
// TLikeMap: {"type":"TLike","L":"0","R":"0","core":[{"x":"-1","y":"-1"}, ...]}
// AutWord:  {"factors":[{"kind":"rev"},{"kind":"conj","g":<TLikeMap>}, ...]}
// IntMatrix {"rows":2,"cols":2,"entries":["0","-1","-1","0"]}
//           (parsing also accepts nested arrays: [[0,-1],[-1,0]])
// vectors   ["0","3"]  (entries may be JSON integers or decimal strings)
//
// Dyadic values are strings in the canonical text form; JSON integers are
// accepted on input.  Emission is single-line, keys in the order above, so
// parse-then-format is byte-stable.

FMap parse_fmap(const std::string& text);
TLikeMap parse_tlike(const std::string& text);
AutWord parse_autword(const std::string& text);
IntMatrix parse_matrix(const std::string& text);
std::vector<BigInt> parse_int_vector(const std::string& text);

std::string format_fmap(const FMap& f);
std::string format_tlike(const TLikeMap& g);
std::string format_autword(const AutWord& w);
std::string format_matrix(const IntMatrix& a);
std::string format_int_vector(const std::vector<BigInt>& v);

}  // namespace tgf
