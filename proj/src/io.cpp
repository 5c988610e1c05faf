#include "pls/io.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <set>
#include <sstream>

#include "pls/error.hpp"

namespace pls {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string index_array(const Face& f) {
  std::string out = "[";
  bool first = true;
  for (auto v : f) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

}  // namespace

ComplexFile parse_complex_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("complex file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "labels" && key != "facets" && key != "trace")
      parse_error("unexpected key '" + key + "' in complex file");
  }
  if (!doc.contains("name") || !doc["name"].is_string()) parse_error("missing string 'name'");
  if (!doc.contains("labels") || !doc["labels"].is_array()) parse_error("missing array 'labels'");
  if (!doc.contains("facets") || !doc["facets"].is_array()) parse_error("missing array 'facets'");

  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) parse_error("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<Face> facets;
  for (const auto& f : doc["facets"]) {
    if (!f.is_array()) parse_error("each facet must be an array of indices");
    Face face;
    std::int64_t prev = -1;
    for (const auto& x : f) {
      if (!x.is_number_integer()) parse_error("facet entries must be integers");
      const auto v = x.get<std::int64_t>();
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
        parse_error("facet index " + std::to_string(v) + " out of range");
      if (v <= prev) parse_error("facet indices must be strictly increasing");
      prev = v;
      face.insert(static_cast<std::uint32_t>(v));
    }
    if (!facets.empty() && !(facets.back() < face))
      parse_error("facets must be sorted lexicographically without duplicates");
    facets.push_back(face);
  }
  if (facets.empty()) parse_error("facet list is empty");
  VertexSet used;
  for (const auto& f : facets) used |= f;
  if (used.size() != labels.size()) parse_error("label table lists a vertex used by no facet");

  ComplexFile out{SimplicialComplex::from_parts(labels, facets, doc["name"].get<std::string>()),
                  {}};
  if (out.complex.labels() != labels || out.complex.facets() != facets)
    parse_error("complex is not in normal form");
  if (doc.contains("trace")) {
    if (!doc["trace"].is_array()) parse_error("'trace' must be an array of strings");
    for (const auto& t : doc["trace"]) {
      if (!t.is_string()) parse_error("'trace' must be an array of strings");
      out.trace.push_back(t.get<std::string>());
    }
  }
  return out;
}

std::string complex_to_json(const SimplicialComplex& k, const std::vector<std::string>& trace) {
  std::ostringstream out;
  out << "{\n  \"name\": " << quoted(k.name()) << ",\n  \"labels\": [";
  for (std::size_t i = 0; i < k.labels().size(); ++i)
    out << (i ? "," : "") << quoted(k.labels()[i]);
  out << "],\n  \"facets\": [";
  for (std::size_t i = 0; i < k.facets().size(); ++i)
    out << (i ? "," : "") << "\n    " << index_array(k.facets()[i]);
  out << "\n  ]";
  if (!trace.empty()) {
    out << ",\n  \"trace\": [";
    for (std::size_t i = 0; i < trace.size(); ++i)
      out << (i ? "," : "") << "\n    " << quoted(trace[i]);
    out << "\n  ]";
  }
  out << "\n}\n";
  return out.str();
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::kInternal, "SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string complex_hash(const SimplicialComplex& k) {
  std::string canonical = "[";
  for (std::size_t i = 0; i < k.labels().size(); ++i)
    canonical += (i ? "," : "") + quoted(k.labels()[i]);
  canonical += "];[";
  for (std::size_t i = 0; i < k.facets().size(); ++i)
    canonical += (i ? "," : "") + index_array(k.facets()[i]);
  canonical += "]";

  return sha256_hex(canonical);
}

CharMatrix parse_certificate_json(const std::string& text, const SimplicialComplex& k) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("complex") || !doc.contains("ring") ||
      !doc.contains("matrix"))
    parse_error("certificate needs 'complex', 'ring' and 'matrix'");
  const auto& c = doc["complex"];
  if (!c.is_object() || !c.contains("hash") || !c["hash"].is_string())
    parse_error("certificate 'complex' needs a string 'hash'");
  if (c["hash"].get<std::string>() != complex_hash(k))
    throw Error(ErrorCode::kInvalidInputCertificate,
                "certificate was issued for a different complex");
  if (!doc["ring"].is_string()) parse_error("'ring' must be a string");
  const Ring ring = parse_ring(doc["ring"].get<std::string>());
  if (!doc["matrix"].is_array()) parse_error("'matrix' must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : doc["matrix"]) {
    if (!r.is_array()) parse_error("'matrix' must be an array of rows");
    std::vector<std::int64_t> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) parse_error("matrix entries must be integers");
      row.push_back(x.get<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  auto lambda = CharMatrix::from_rows(ring, rows);
  auto check = verify_charmap(k, lambda);
  if (!check.valid)
    throw Error(ErrorCode::kInvalidInputCertificate,
                "stored certificate does not verify: " + check.reason);
  return lambda;
}

std::string certificate_to_json(const SimplicialComplex& k, const CharMatrix& lambda) {
  std::ostringstream out;
  out << "{\n  \"complex\": {\"name\": " << quoted(k.name()) << ", \"hash\": "
      << quoted(complex_hash(k)) << "},\n  \"ring\": " << quoted(ring_name(lambda.ring()))
      << ",\n  \"matrix\": [";
  for (std::size_t r = 0; r < lambda.rows(); ++r) {
    out << (r ? "," : "") << "\n    [";
    for (std::size_t c = 0; c < lambda.cols(); ++c) out << (c ? "," : "") << lambda.at(r, c);
    out << "]";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

}  // namespace pls
