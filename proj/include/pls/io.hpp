#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pls/charmap.hpp"
#include "pls/complex.hpp"

namespace pls {

/// Complex file: {"name", "labels", "facets"} plus an optional "trace" array
/// of strings. Facets are sorted 0-based index arrays, sorted
/// lexicographically. Anything else is rejected with ParseError.
struct ComplexFile {
  SimplicialComplex complex;
  std::vector<std::string> trace;
};

ComplexFile parse_complex_json(const std::string& text);
/// Canonical text; byte-identical for equal inputs.
std::string complex_to_json(const SimplicialComplex& k, const std::vector<std::string>& trace = {});

/// "sha256:<hex>" of raw bytes.
std::string sha256_hex(std::string_view data);

/// "sha256:<hex>" over the canonical label table and facet list.
std::string complex_hash(const SimplicialComplex& k);

/// Certificate file: {"complex": {"name", "hash"}, "ring", "matrix"}.
/// Parsing checks the hash against `k` and re-verifies the matrix; raises
/// ShapeMismatch / InvalidInputCertificate / ParseError.
CharMatrix parse_certificate_json(const std::string& text, const SimplicialComplex& k);
std::string certificate_to_json(const SimplicialComplex& k, const CharMatrix& lambda);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pls
