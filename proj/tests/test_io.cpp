#include <doctest.h>

#include <string>

#include "pls/charmap.hpp"
#include "pls/error.hpp"
#include "pls/family.hpp"
#include "pls/io.hpp"
#include "pls/operations.hpp"

using namespace pls;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_complex_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a rejection of: " << text);
  return ErrorCode::kInternal;
}

ErrorCode certificate_code(const std::string& text, const SimplicialComplex& k) {
  try {
    parse_certificate_json(text, k);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a rejection of: " << text);
  return ErrorCode::kInternal;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("complex files round trip byte for byte") {
  for (const char* spec : {"pentagon", "octahedron", "c47", "interval"}) {
    auto k = named_complex(spec);
    const auto text = complex_to_json(k, {"base:x", "wedge:1"});
    auto parsed = parse_complex_json(text);
    CHECK(parsed.complex == k);
    CHECK(parsed.complex.name() == spec);
    CHECK(parsed.trace == std::vector<std::string>{"base:x", "wedge:1"});
    CHECK(complex_to_json(parsed.complex, parsed.trace) == text);
  }
  // Labels that need escaping.
  auto k = wedge(polygon(3), 0, "q\"uote");
  CHECK(parse_complex_json(complex_to_json(k)).complex == k);
}

TEST_CASE("canonical text") {
  auto text = complex_to_json(polygon(3));
  CHECK(text ==
        "{\n  \"name\": \"polygon-3\",\n  \"labels\": [\"1\",\"2\",\"3\"],\n  \"facets\": [\n"
        "    [0,1],\n    [0,2],\n    [1,2]\n  ]\n}\n");
}

TEST_CASE("non-normal complex files are rejected") {
  const std::string ok = R"({"name":"t","labels":["1","2","3"],"facets":[[0,1],[0,2],[1,2]]})";
  CHECK(parse_complex_json(ok).complex.facets().size() == 3);

  CHECK(parse_code("not json") == ErrorCode::kParse);
  CHECK(parse_code("[]") == ErrorCode::kParse);
  CHECK(parse_code(R"({"labels":["1","2"],"facets":[[0],[1]]})") == ErrorCode::kParse);
  CHECK(parse_code(R"({"name":"t","labels":["1","2"],"facets":[[0],[1]],"extra":1})") ==
        ErrorCode::kParse);
  // Unsorted facet list.
  CHECK(parse_code(R"({"name":"t","labels":["1","2","3"],"facets":[[0,2],[0,1],[1,2]]})") ==
        ErrorCode::kParse);
  // Unsorted indices inside a facet.
  CHECK(parse_code(R"({"name":"t","labels":["1","2","3"],"facets":[[1,0],[0,2],[1,2]]})") ==
        ErrorCode::kParse);
  // Duplicate facet.
  CHECK(parse_code(R"({"name":"t","labels":["1","2"],"facets":[[0],[0],[1]]})") ==
        ErrorCode::kParse);
  // Index out of range, negative index, non-integer index.
  CHECK(parse_code(R"({"name":"t","labels":["1","2"],"facets":[[0],[2]]})") == ErrorCode::kParse);
  CHECK(parse_code(R"({"name":"t","labels":["1","2"],"facets":[[-1],[0]]})") == ErrorCode::kParse);
  CHECK(parse_code(R"({"name":"t","labels":["1","2"],"facets":[[0.5],[1]]})") == ErrorCode::kParse);
  // Ghost vertex.
  CHECK(parse_code(R"({"name":"t","labels":["1","2","3"],"facets":[[0],[1]]})") ==
        ErrorCode::kParse);
  // Empty facet list.
  CHECK(parse_code(R"({"name":"t","labels":[],"facets":[]})") == ErrorCode::kParse);
  // Not pure, not maximal, duplicate label, bad label.
  CHECK(parse_code(R"({"name":"t","labels":["1","2","3"],"facets":[[0,1],[2]]})") ==
        ErrorCode::kNotPure);
  CHECK(parse_code(R"({"name":"t","labels":["1","2"],"facets":[[0],[0,1]]})") ==
        ErrorCode::kNonMaximalFacet);
  CHECK(parse_code(R"({"name":"t","labels":["1","1"],"facets":[[0],[1]]})") ==
        ErrorCode::kLabelCollision);
  CHECK(parse_code(R"({"name":"t","labels":["a b","c"],"facets":[[0],[1]]})") ==
        ErrorCode::kInvalidLabel);
  CHECK(parse_code(R"({"name":"t","labels":["1","2"],"facets":[[0],[1]],"trace":[1]})") ==
        ErrorCode::kParse);
}

TEST_CASE("certificate files") {
  auto c47 = cyclic_boundary(4, 7);
  auto cert = *find_int_certificate(c47);
  const auto text = certificate_to_json(c47, cert);
  CHECK(parse_certificate_json(text, c47) == cert);
  CHECK(certificate_to_json(c47, parse_certificate_json(text, c47)) == text);
  CHECK(complex_hash(c47).rfind("sha256:", 0) == 0);
  CHECK(complex_hash(c47).size() == 7 + 64);
  CHECK(complex_hash(c47) == complex_hash(cyclic_boundary(4, 7)));
  CHECK(complex_hash(c47) != complex_hash(polygon(5)));

  // Issued for another complex.
  CHECK(certificate_code(text, polygon(5)) == ErrorCode::kInvalidInputCertificate);

  // Same complex, broken matrix.
  auto broken = cert;
  broken.at(0, 0) = 2;
  CHECK(certificate_code(certificate_to_json(c47, broken), c47) ==
        ErrorCode::kInvalidInputCertificate);

  const auto hash = complex_hash(c47);
  CHECK(certificate_code(R"({"complex":{"hash":")" + hash + R"("},"ring":"Z","matrix":[]})", c47) ==
        ErrorCode::kInvalidArgument);
  CHECK(certificate_code(R"({"complex":{"hash":")" + hash + R"("},"ring":"Int","matrix":[[1,0],[1]]})",
                         c47) == ErrorCode::kShapeMismatch);
  CHECK(certificate_code(R"({"complex":{"hash":")" + hash + R"("},"ring":"Int"})", c47) ==
        ErrorCode::kParse);
  CHECK(certificate_code(R"({"complex":{"hash":")" + hash + R"("},"ring":"Int","matrix":[[1,0,0,0,0,0,0]]})",
                         c47) == ErrorCode::kShapeMismatch);
}

TEST_CASE("sha256 of known input") {
  CHECK(sha256_hex("abc") ==
        "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // TEST_SUITE
