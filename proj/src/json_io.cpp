#include "json_io.hpp"

#include <cctype>
#include <cstdint>
#include <utility>

#include <json.hpp>

#include "error.hpp"

namespace tgf {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kParse, "malformed JSON document");
  }
  return doc;
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) {
    throw Error(ErrorCode::kParse, "expected a JSON object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kParse, std::string("missing field \"") + key +
                                       "\"");
  }
  return *it;
}

std::int64_t int_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kParse,
                std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

BigInt parse_bigint_text(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorCode::kParse, "invalid integer literal: \"" + text + "\"");
  }
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::kParse,
                  "invalid integer literal: \"" + text + "\"");
    }
  }
  return BigInt(text);
}

BigInt bigint_value(const Json& v) {
  if (v.is_number_integer()) {
    return BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    return parse_bigint_text(v.get<std::string>());
  }
  throw Error(ErrorCode::kParse,
              "integer entries must be JSON integers or decimal strings");
}

Dyadic dyadic_value(const Json& v) {
  if (v.is_number_integer()) {
    return Dyadic(BigInt(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    return Dyadic::parse(v.get<std::string>());
  }
  throw Error(ErrorCode::kParse,
              "dyadic values must be strings or JSON integers");
}

std::vector<Vertex> vertex_list(const Json& arr, const char* what) {
  if (!arr.is_array()) {
    throw Error(ErrorCode::kParse,
                std::string("\"") + what + "\" must be an array");
  }
  std::vector<Vertex> out;
  out.reserve(arr.size());
  for (const Json& item : arr) {
    out.push_back({dyadic_value(field(item, "x")), dyadic_value(field(item, "y"))});
  }
  return out;
}

void require_type(const Json& doc, const char* expected) {
  const Json& t = field(doc, "type");
  if (!t.is_string() || t.get<std::string>() != expected) {
    throw Error(ErrorCode::kParse,
                std::string("expected an element of type \"") + expected +
                    "\"");
  }
}

TLikeMap tlike_from_json(const Json& doc) {
  require_type(doc, "TLike");
  return TLikeMap::validate(dyadic_value(field(doc, "L")),
                            dyadic_value(field(doc, "R")),
                            vertex_list(field(doc, "core"), "core"));
}

Json vertices_to_json(const std::vector<Vertex>& vs) {
  Json arr = Json::array();
  for (const Vertex& v : vs) {
    Json item;
    item["x"] = v.x.str();
    item["y"] = v.y.str();
    arr.push_back(std::move(item));
  }
  return arr;
}

Json tlike_to_json(const TLikeMap& g) {
  Json doc;
  doc["type"] = "TLike";
  doc["L"] = g.left_anchor().str();
  doc["R"] = g.right_anchor().str();
  doc["core"] = vertices_to_json(g.core());
  return doc;
}

}  // namespace

FMap parse_fmap(const std::string& text) {
  const Json doc = parse_document(text);
  require_type(doc, "F");
  return FMap::validate(vertex_list(field(doc, "breaks"), "breaks"),
                        int_field(doc, "l"), int_field(doc, "r"));
}

TLikeMap parse_tlike(const std::string& text) {
  return tlike_from_json(parse_document(text));
}

AutWord parse_autword(const std::string& text) {
  const Json doc = parse_document(text);
  const Json& factors = field(doc, "factors");
  if (!factors.is_array()) {
    throw Error(ErrorCode::kParse, "\"factors\" must be an array");
  }
  std::vector<AutFactor> out;
  out.reserve(factors.size());
  for (const Json& item : factors) {
    const Json& kind = field(item, "kind");
    if (kind.is_string() && kind.get<std::string>() == "rev") {
      out.emplace_back(RevFactor{});
    } else if (kind.is_string() && kind.get<std::string>() == "conj") {
      out.emplace_back(ConjFactor{tlike_from_json(field(item, "g"))});
    } else {
      throw Error(ErrorCode::kParse,
                  "factor \"kind\" must be \"rev\" or \"conj\"");
    }
  }
  return AutWord(std::move(out));
}

IntMatrix parse_matrix(const std::string& text) {
  const Json doc = parse_document(text);
  if (doc.is_array()) {  // nested array form
    const std::size_t rows = doc.size();
    if (rows == 0) {
      throw Error(ErrorCode::kParse, "matrix must have at least one row");
    }
    std::vector<BigInt> entries;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      const Json& row = doc[i];
      if (!row.is_array() || row.empty()) {
        throw Error(ErrorCode::kParse, "matrix rows must be non-empty arrays");
      }
      if (i == 0) {
        cols = row.size();
      } else if (row.size() != cols) {
        throw Error(ErrorCode::kParse, "matrix rows must have equal length");
      }
      for (const Json& e : row) {
        entries.push_back(bigint_value(e));
      }
    }
    return IntMatrix(rows, cols, std::move(entries));
  }
  const std::int64_t rows = int_field(doc, "rows");
  const std::int64_t cols = int_field(doc, "cols");
  if (rows <= 0 || cols <= 0) {
    throw Error(ErrorCode::kParse, "matrix dimensions must be positive");
  }
  const Json& arr = field(doc, "entries");
  if (!arr.is_array() ||
      arr.size() != static_cast<std::size_t>(rows * cols)) {
    throw Error(ErrorCode::kParse,
                "\"entries\" must be an array of rows*cols integers");
  }
  std::vector<BigInt> entries;
  entries.reserve(arr.size());
  for (const Json& e : arr) {
    entries.push_back(bigint_value(e));
  }
  return IntMatrix(static_cast<std::size_t>(rows),
                   static_cast<std::size_t>(cols), std::move(entries));
}

std::vector<BigInt> parse_int_vector(const std::string& text) {
  const Json doc = parse_document(text);
  if (!doc.is_array() || doc.empty()) {
    throw Error(ErrorCode::kParse,
                "expected a non-empty JSON array of integers");
  }
  std::vector<BigInt> out;
  out.reserve(doc.size());
  for (const Json& e : doc) {
    out.push_back(bigint_value(e));
  }
  return out;
}

std::string format_fmap(const FMap& f) {
  Json doc;
  doc["type"] = "F";
  doc["l"] = f.left_translation();
  doc["r"] = f.right_translation();
  doc["breaks"] = vertices_to_json(f.breaks());
  return doc.dump();
}

std::string format_tlike(const TLikeMap& g) {
  return tlike_to_json(g).dump();
}

std::string format_autword(const AutWord& w) {
  Json factors = Json::array();
  for (const AutFactor& factor : w.factors()) {
    Json item;
    if (std::holds_alternative<RevFactor>(factor)) {
      item["kind"] = "rev";
    } else {
      item["kind"] = "conj";
      item["g"] = tlike_to_json(std::get<ConjFactor>(factor).g);
    }
    factors.push_back(std::move(item));
  }
  Json doc;
  doc["factors"] = std::move(factors);
  return doc.dump();
}

std::string format_matrix(const IntMatrix& a) {
  Json doc;
  doc["rows"] = a.rows();
  doc["cols"] = a.cols();
  Json entries = Json::array();
  for (const BigInt& e : a.entries()) {
    entries.push_back(e.str());
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

std::string format_int_vector(const std::vector<BigInt>& v) {
  Json arr = Json::array();
  for (const BigInt& e : v) {
    arr.push_back(e.str());
  }
  return arr.dump();
}

}  // namespace tgf
