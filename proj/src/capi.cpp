#include "tgf/tgf.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include <json.hpp>

#include "error.hpp"
#include "groupf.hpp"
#include "json_io.hpp"
#include "plmap.hpp"
#include "zlinalg.hpp"

struct tgf_fmap {
  tgf::FMap value;
};
struct tgf_tlike {
  tgf::TLikeMap value;
};
struct tgf_autword {
  tgf::AutWord value;
};
struct tgf_matrix {
  tgf::IntMatrix value;
};

namespace {

thread_local std::string t_last_error = "{\"error\":\"ok\",\"detail\":\"\"}";

tgf_status status_of(tgf::ErrorCode code) {
  using tgf::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
      return TGF_ERR_PARSE;
    case ErrorCode::kNonDyadic:
      return TGF_ERR_NON_DYADIC;
    case ErrorCode::kNonMonotone:
      return TGF_ERR_NON_MONOTONE;
    case ErrorCode::kBadSlope:
      return TGF_ERR_BAD_SLOPE;
    case ErrorCode::kTailMismatch:
      return TGF_ERR_TAIL_MISMATCH;
    case ErrorCode::kPeriodSeedMismatch:
      return TGF_ERR_PERIOD_SEED_MISMATCH;
    case ErrorCode::kWindowInconsistency:
      return TGF_ERR_WINDOW_INCONSISTENCY;
    case ErrorCode::kProbeMismatch:
      return TGF_ERR_PROBE_MISMATCH;
    case ErrorCode::kNotAutomorphism:
      return TGF_ERR_NOT_AUTOMORPHISM;
    case ErrorCode::kDimensionMismatch:
      return TGF_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kInternal:
      return TGF_ERR_INTERNAL;
  }
  return TGF_ERR_INTERNAL;
}

void set_error(const char* code_name, const std::string& detail) {
  nlohmann::ordered_json j;
  j["error"] = code_name;
  j["detail"] = detail;
  t_last_error = j.dump();
}

tgf_status null_argument(const char* where) {
  set_error("null_argument", std::string("null argument passed to ") + where);
  return TGF_ERR_NULL_ARGUMENT;
}

template <typename Fn>
tgf_status guarded(Fn&& fn) {
  try {
    fn();
    return TGF_OK;
  } catch (const tgf::Error& e) {
    const tgf_status s = status_of(e.code());
    set_error(e.code_name(), e.what());
    return s;
  } catch (const std::exception& e) {
    set_error("internal_error", e.what());
    return TGF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* tgf_status_name(tgf_status status) {
  switch (status) {
    case TGF_OK:
      return "ok";
    case TGF_ERR_PARSE:
      return "parse_error";
    case TGF_ERR_NON_DYADIC:
      return "non_dyadic";
    case TGF_ERR_NON_MONOTONE:
      return "non_monotone";
    case TGF_ERR_BAD_SLOPE:
      return "bad_slope";
    case TGF_ERR_TAIL_MISMATCH:
      return "tail_mismatch";
    case TGF_ERR_PERIOD_SEED_MISMATCH:
      return "period_seed_mismatch";
    case TGF_ERR_WINDOW_INCONSISTENCY:
      return "window_inconsistency";
    case TGF_ERR_PROBE_MISMATCH:
      return "probe_mismatch";
    case TGF_ERR_NOT_AUTOMORPHISM:
      return "not_automorphism";
    case TGF_ERR_DIMENSION_MISMATCH:
      return "dimension_mismatch";
    case TGF_ERR_NULL_ARGUMENT:
      return "null_argument";
    case TGF_ERR_INTERNAL:
      return "internal_error";
  }
  return "internal_error";
}

const char* tgf_last_error(void) {
  return t_last_error.c_str();
}

void tgf_string_free(char* s) {
  std::free(s);
}

/* ---- lifecycle -------------------------------------------------------- */

tgf_status tgf_fmap_parse(const char* json, tgf_fmap** out) {
  if (!json || !out) return null_argument("tgf_fmap_parse");
  return guarded([&] { *out = new tgf_fmap{tgf::parse_fmap(json)}; });
}

tgf_status tgf_fmap_format(const tgf_fmap* f, char** json_out) {
  if (!f || !json_out) return null_argument("tgf_fmap_format");
  return guarded([&] { *json_out = dup_string(tgf::format_fmap(f->value)); });
}

void tgf_fmap_free(tgf_fmap* f) {
  delete f;
}

tgf_status tgf_tlike_parse(const char* json, tgf_tlike** out) {
  if (!json || !out) return null_argument("tgf_tlike_parse");
  return guarded([&] { *out = new tgf_tlike{tgf::parse_tlike(json)}; });
}

tgf_status tgf_tlike_format(const tgf_tlike* g, char** json_out) {
  if (!g || !json_out) return null_argument("tgf_tlike_format");
  return guarded([&] { *json_out = dup_string(tgf::format_tlike(g->value)); });
}

void tgf_tlike_free(tgf_tlike* g) {
  delete g;
}

tgf_status tgf_autword_parse(const char* json, tgf_autword** out) {
  if (!json || !out) return null_argument("tgf_autword_parse");
  return guarded([&] { *out = new tgf_autword{tgf::parse_autword(json)}; });
}

tgf_status tgf_autword_format(const tgf_autword* w, char** json_out) {
  if (!w || !json_out) return null_argument("tgf_autword_format");
  return guarded(
      [&] { *json_out = dup_string(tgf::format_autword(w->value)); });
}

void tgf_autword_free(tgf_autword* w) {
  delete w;
}

tgf_status tgf_matrix_parse(const char* json, tgf_matrix** out) {
  if (!json || !out) return null_argument("tgf_matrix_parse");
  return guarded([&] { *out = new tgf_matrix{tgf::parse_matrix(json)}; });
}

tgf_status tgf_matrix_format(const tgf_matrix* a, char** json_out) {
  if (!a || !json_out) return null_argument("tgf_matrix_format");
  return guarded([&] { *json_out = dup_string(tgf::format_matrix(a->value)); });
}

void tgf_matrix_free(tgf_matrix* a) {
  delete a;
}

/* ---- piecewise-linear maps -------------------------------------------- */

tgf_status tgf_fmap_eval(const tgf_fmap* f, const char* x, char** y_out) {
  if (!f || !x || !y_out) return null_argument("tgf_fmap_eval");
  return guarded([&] {
    *y_out = dup_string(f->value.eval(tgf::Dyadic::parse(x)).str());
  });
}

tgf_status tgf_tlike_eval(const tgf_tlike* g, const char* x, char** y_out) {
  if (!g || !x || !y_out) return null_argument("tgf_tlike_eval");
  return guarded([&] {
    *y_out = dup_string(g->value.eval(tgf::Dyadic::parse(x)).str());
  });
}

tgf_status tgf_fmap_compose(const tgf_fmap* f, const tgf_fmap* h,
                            tgf_fmap** out) {
  if (!f || !h || !out) return null_argument("tgf_fmap_compose");
  return guarded(
      [&] { *out = new tgf_fmap{tgf::compose(f->value, h->value)}; });
}

tgf_status tgf_fmap_invert(const tgf_fmap* f, tgf_fmap** out) {
  if (!f || !out) return null_argument("tgf_fmap_invert");
  return guarded([&] { *out = new tgf_fmap{tgf::invert(f->value)}; });
}

tgf_status tgf_tlike_invert(const tgf_tlike* g, tgf_tlike** out) {
  if (!g || !out) return null_argument("tgf_tlike_invert");
  return guarded([&] { *out = new tgf_tlike{tgf::invert(g->value)}; });
}

tgf_status tgf_fmap_embed(const tgf_fmap* f, tgf_tlike** out) {
  if (!f || !out) return null_argument("tgf_fmap_embed");
  return guarded([&] { *out = new tgf_tlike{tgf::embed_as_tlike(f->value)}; });
}

/* ---- group layer ------------------------------------------------------ */

tgf_status tgf_fmap_ab(const tgf_fmap* f, int64_t* l_out, int64_t* r_out) {
  if (!f || !l_out || !r_out) return null_argument("tgf_fmap_ab");
  return guarded([&] {
    const tgf::AbPair p = tgf::ab(f->value);
    *l_out = p.l;
    *r_out = p.r;
  });
}

tgf_status tgf_fmap_rev(const tgf_fmap* f, tgf_fmap** out) {
  if (!f || !out) return null_argument("tgf_fmap_rev");
  return guarded([&] { *out = new tgf_fmap{tgf::rev(f->value)}; });
}

tgf_status tgf_fmap_conjugate(const tgf_fmap* f, const tgf_tlike* g,
                              tgf_fmap** out) {
  if (!f || !g || !out) return null_argument("tgf_fmap_conjugate");
  return guarded(
      [&] { *out = new tgf_fmap{tgf::conj_by_tlike(f->value, g->value)}; });
}

tgf_status tgf_aut_apply(const tgf_autword* w, const tgf_fmap* f,
                         tgf_fmap** out) {
  if (!w || !f || !out) return null_argument("tgf_aut_apply");
  return guarded(
      [&] { *out = new tgf_fmap{tgf::apply_aut(w->value, f->value)}; });
}

tgf_status tgf_aut_h1_matrix(const tgf_autword* w, tgf_matrix** out) {
  if (!w || !out) return null_argument("tgf_aut_h1_matrix");
  return guarded([&] { *out = new tgf_matrix{tgf::h1_matrix(w->value)}; });
}

tgf_status tgf_project_class(const tgf_fmap* f, const tgf_autword* w,
                             char** rep_json_out) {
  if (!f || !w || !rep_json_out) return null_argument("tgf_project_class");
  return guarded([&] {
    *rep_json_out = dup_string(
        tgf::format_int_vector(tgf::project_class(f->value, w->value)));
  });
}

/* ---- integer linear algebra ------------------------------------------- */

tgf_status tgf_matrix_identity(uint32_t n, tgf_matrix** out) {
  if (!out) return null_argument("tgf_matrix_identity");
  return guarded(
      [&] { *out = new tgf_matrix{tgf::IntMatrix::identity(n)}; });
}

tgf_status tgf_matrix_sub(const tgf_matrix* a, const tgf_matrix* b,
                          tgf_matrix** out) {
  if (!a || !b || !out) return null_argument("tgf_matrix_sub");
  return guarded([&] { *out = new tgf_matrix{a->value - b->value}; });
}

tgf_status tgf_matrix_det(const tgf_matrix* a, char** det_out) {
  if (!a || !det_out) return null_argument("tgf_matrix_det");
  return guarded(
      [&] { *det_out = dup_string(tgf::determinant(a->value).str()); });
}

tgf_status tgf_matrix_snf(const tgf_matrix* a, tgf_matrix** u_out,
                          tgf_matrix** d_out, tgf_matrix** v_out) {
  if (!a || !u_out || !d_out || !v_out) return null_argument("tgf_matrix_snf");
  return guarded([&] {
    tgf::SnfResult s = tgf::snf(a->value);
    *u_out = new tgf_matrix{std::move(s.u)};
    *d_out = new tgf_matrix{std::move(s.d)};
    *v_out = new tgf_matrix{std::move(s.v)};
  });
}

tgf_status tgf_matrix_coker(const tgf_matrix* a, char** json_out) {
  if (!a || !json_out) return null_argument("tgf_matrix_coker");
  return guarded([&] {
    const tgf::CokerInvariants inv = tgf::coker_invariants(a->value);
    nlohmann::ordered_json j;
    nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
    for (const tgf::BigInt& t : inv.torsion) {
      torsion.push_back(t.str());
    }
    j["torsion"] = std::move(torsion);
    j["free_rank"] = inv.free_rank;
    *json_out = dup_string(j.dump());
  });
}

tgf_status tgf_matrix_reidemeister(const tgf_matrix* a, int* infinite_out,
                                   char** count_out) {
  if (!a || !infinite_out || !count_out)
    return null_argument("tgf_matrix_reidemeister");
  return guarded([&] {
    const tgf::ReidemeisterNumber r = tgf::reidemeister_of_matrix(a->value);
    *infinite_out = r.infinite ? 1 : 0;
    *count_out = r.infinite ? nullptr : dup_string(r.count.str());
  });
}

tgf_status tgf_twisted_equiv(const tgf_matrix* a, const char* u_json,
                             const char* v_json, int* equivalent_out) {
  if (!a || !u_json || !v_json || !equivalent_out)
    return null_argument("tgf_twisted_equiv");
  return guarded([&] {
    *equivalent_out =
        tgf::twisted_equiv_abelian(tgf::parse_int_vector(u_json),
                                   tgf::parse_int_vector(v_json), a->value)
            ? 1
            : 0;
  });
}

tgf_status tgf_class_rep(const tgf_matrix* a, const char* v_json,
                         char** rep_json_out) {
  if (!a || !v_json || !rep_json_out) return null_argument("tgf_class_rep");
  return guarded([&] {
    *rep_json_out = dup_string(tgf::format_int_vector(
        tgf::class_rep(tgf::parse_int_vector(v_json), a->value)));
  });
}

} /* extern "C" */
