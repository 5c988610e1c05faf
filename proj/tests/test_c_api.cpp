// Exercises the shared library through pls.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "pls/pls.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out(s);
  pls_string_free(s);
  return out;
}

pls_complex* named(const char* spec) {
  pls_complex* k = nullptr;
  REQUIRE(pls_complex_named(spec, &k) == PLS_OK);
  return k;
}

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(pls_status_name(PLS_OK)) == "Ok");
  CHECK(std::string(pls_status_name(PLS_ERR_NOT_PURE)) == "NotPure");
  CHECK(std::string(pls_status_name(PLS_ERR_INTERNAL)) == "InternalError");
  CHECK(std::string(pls_status_name(static_cast<pls_status>(999))) == "Unknown");

  pls_complex* k = nullptr;
  CHECK(pls_complex_from_label_facets(R"([["1","2","3"],["3","4"]])", "bad", &k) ==
        PLS_ERR_NOT_PURE);
  CHECK(k == nullptr);
  CHECK(std::strlen(pls_last_error()) > 0);

  CHECK(pls_complex_named(nullptr, &k) == PLS_ERR_INVALID_ARGUMENT);
  CHECK(pls_complex_parse("{", &k) == PLS_ERR_PARSE);
  CHECK(pls_complex_named("pentagon", nullptr) == PLS_ERR_INVALID_ARGUMENT);

  auto* p5 = named("pentagon");
  CHECK(std::string(pls_last_error()).empty());
  pls_complex_free(p5);
}

TEST_CASE("last error is per thread") {
  pls_complex* k = nullptr;
  CHECK(pls_complex_parse("{", &k) == PLS_ERR_PARSE);
  std::string other;
  std::thread t([&] { other = pls_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(pls_last_error()) > 0);
}

TEST_CASE("complex round trip and operations") {
  auto* p5 = named("pentagon");
  CHECK(pls_complex_vertex_count(p5) == 5);
  CHECK(pls_complex_facet_count(p5) == 5);
  CHECK(pls_complex_dimension(p5) == 1);

  pls_complex* w = nullptr;
  REQUIRE(pls_wedge(p5, "1", nullptr, &w) == PLS_OK);
  CHECK(pls_complex_facet_count(w) == 8);
  pls_complex* w2 = nullptr;
  REQUIRE(pls_wedge_via_nonfaces(p5, "1", nullptr, &w2) == PLS_OK);

  char* text = nullptr;
  REQUIRE(pls_complex_to_json(w, &text) == PLS_OK);
  const auto wt = take(text);
  REQUIRE(pls_complex_to_json(w2, &text) == PLS_OK);
  CHECK(take(text) == wt);

  pls_complex* back = nullptr;
  REQUIRE(pls_complex_parse(wt.c_str(), &back) == PLS_OK);
  REQUIRE(pls_complex_to_json(back, &text) == PLS_OK);
  CHECK(take(text) == wt);

  pls_complex* s = nullptr;
  REQUIRE(pls_stellar_subdivision(w, "1,1#1", nullptr, &s) == PLS_OK);
  pls_complex* susp = nullptr;
  REQUIRE(pls_suspension(p5, nullptr, nullptr, &susp) == PLS_OK);
  REQUIRE(pls_isomorphism_json(s, susp, &text) == PLS_OK);
  auto iso = json::parse(take(text));
  CHECK(iso["isomorphic"] == true);
  CHECK(iso["map"].size() == 7);

  pls_complex* l = nullptr;
  REQUIRE(pls_link(w, "1#1", &l) == PLS_OK);
  REQUIRE(pls_isomorphism_json(l, p5, &text) == PLS_OK);
  CHECK(json::parse(take(text))["isomorphic"] == true);
  CHECK(pls_link(p5, "1,3", &l) == PLS_ERR_NOT_A_FACE);
  CHECK(pls_link(p5, "9", &l) == PLS_ERR_NOT_A_VERTEX);

  const uint32_t j[] = {2, 2, 1, 1, 1};
  const uint32_t sel[] = {1, 1, 0, 0, 0};
  REQUIRE(pls_assembled_face(p5, j, sel, 5, &text) == PLS_OK);
  CHECK(take(text) == "1#1,2#1");
  const uint32_t out_of_range[] = {2, 0, 0, 0, 0};
  CHECK(pls_assembled_face(p5, j, out_of_range, 5, &text) == PLS_ERR_BOUNDS_VIOLATION);
  pls_complex* kj = nullptr;
  CHECK(pls_j_construction(p5, j, 2, &kj) == PLS_ERR_LENGTH_MISMATCH);

  for (auto* k : {p5, w, w2, back, s, susp, l}) pls_complex_free(k);
}

TEST_CASE("queries") {
  auto* oct = named("octahedron");
  char* text = nullptr;
  REQUIRE(pls_minimal_non_faces_json(oct, &text) == PLS_OK);
  CHECK(json::parse(take(text))["minimal_non_faces"] ==
        json::parse(R"([["1","4"],["2","5"],["3","6"]])"));

  REQUIRE(pls_f_vector_json(oct, 1000, &text) == PLS_OK);
  auto f = json::parse(take(text));
  CHECK(f["counts"] == json::parse("[6,12,8]"));
  CHECK(f["euler_characteristic"] == 2);

  REQUIRE(pls_classify_json(oct, &text) == PLS_OK);
  auto c = json::parse(take(text));
  CHECK(c["seed"]["value"] == true);
  CHECK(c["suspended"]["value"] == true);
  CHECK(c["suspended"]["witness"] == json::parse(R"(["1","4"])"));
  CHECK(c["pairs"].size() == 3);
  CHECK(c["pairs"][0]["kind"] == "suspended_pair");

  REQUIRE(pls_evidence_json(oct, 1000, &text) == PLS_OK);
  auto e = json::parse(take(text));
  CHECK(e["ok"] == true);
  CHECK(e["betti"] == json::parse("[1,0,1]"));

  REQUIRE(pls_decompose_json(oct, &text) == PLS_OK);
  auto d = json::parse(take(text));
  CHECK(d["J"] == json::parse("[1,1,1,1,1,1]"));
  CHECK(d["round_trip"] == true);
  pls_complex_free(oct);
}

TEST_CASE("certificates") {
  auto* c47 = named("c47");
  pls_charmap* cert = nullptr;
  REQUIRE(pls_charmap_search(c47, PLS_RING_INT, 1, 2, &cert) == PLS_OK);
  REQUIRE(cert != nullptr);
  CHECK(pls_charmap_ring(cert) == PLS_RING_INT);

  char* text = nullptr;
  REQUIRE(pls_charmap_to_json(cert, c47, &text) == PLS_OK);
  const auto ct = take(text);
  pls_charmap* back = nullptr;
  REQUIRE(pls_charmap_parse(ct.c_str(), c47, &back) == PLS_OK);
  REQUIRE(pls_charmap_to_json(back, c47, &text) == PLS_OK);
  CHECK(take(text) == ct);

  pls_charmap* mod2 = nullptr;
  REQUIRE(pls_charmap_mod2(cert, &mod2) == PLS_OK);
  CHECK(pls_charmap_ring(mod2) == PLS_RING_GF2);
  REQUIRE(pls_charmap_verify_json(c47, mod2, 1, &text) == PLS_OK);
  CHECK(json::parse(take(text))["valid"] == true);

  REQUIRE(pls_inequality_json(c47, cert, &text) == PLS_OK);
  CHECK(json::parse(take(text))["status"] == "tight");

  auto* p5 = named("pentagon");
  CHECK(pls_charmap_parse(ct.c_str(), p5, &back) == PLS_ERR_INVALID_INPUT_CERTIFICATE);

  pls_charmap* flat = nullptr;
  REQUIRE(pls_charmap_from_rows("[[1,1,1,1,1],[0,0,0,0,0]]", PLS_RING_INT, &flat) == PLS_OK);
  REQUIRE(pls_charmap_verify_json(p5, flat, 1, &text) == PLS_OK);
  auto v = json::parse(take(text));
  CHECK(v["valid"] == false);
  CHECK(v["failing_facet"] == json::parse(R"(["1","2"])"));
  pls_charmap* out = nullptr;
  CHECK(pls_charmap_wedge_propagate(p5, flat, "1", &out) == PLS_ERR_INVALID_INPUT_CERTIFICATE);
  CHECK(pls_charmap_from_rows("[[1,2],[1]]", PLS_RING_INT, &out) == PLS_ERR_SHAPE_MISMATCH);

  // The complete graph K4 has no certificate; the search reports absence.
  pls_complex* k4 = nullptr;
  REQUIRE(pls_complex_from_label_facets(R"([["1","2"],["1","3"],["1","4"],["2","3"],["2","4"],["3","4"]])",
                                        "k4", &k4) == PLS_OK);
  pls_charmap* none = reinterpret_cast<pls_charmap*>(&text);
  REQUIRE(pls_charmap_search(k4, PLS_RING_GF2, 0, 1, &none) == PLS_OK);
  CHECK(none == nullptr);

  pls_charmap* p5cert = nullptr;
  REQUIRE(pls_charmap_search(p5, PLS_RING_INT, 0, 1, &p5cert) == PLS_OK);
  pls_charmap* wc = nullptr;
  REQUIRE(pls_charmap_wedge_propagate(p5, p5cert, "1", &wc) == PLS_OK);
  pls_complex* w = nullptr;
  REQUIRE(pls_wedge(p5, "1", nullptr, &w) == PLS_OK);
  REQUIRE(pls_charmap_verify_json(w, wc, 1, &text) == PLS_OK);
  CHECK(json::parse(take(text))["valid"] == true);
  pls_charmap* sc = nullptr;
  REQUIRE(pls_charmap_stellar_propagate(w, wc, "1,1#1", &sc) == PLS_OK);

  for (auto* m : {cert, back, mod2, flat, p5cert, wc, sc}) pls_charmap_free(m);
  for (auto* k : {c47, p5, k4, w}) pls_complex_free(k);
}

TEST_CASE("families") {
  pls_family* f = nullptr;
  REQUIRE(pls_family_generate(4, 0, 1000000, 1, &f) == PLS_OK);
  REQUIRE(pls_family_size(f) == 10);
  char* text = nullptr;
  REQUIRE(pls_family_member_json(f, 9, &text) == PLS_OK);
  auto top = json::parse(take(text));
  CHECK(top["m"] == 15);
  CHECK(top["non_suspended"] == true);
  CHECK(top["certificate_valid"] == true);
  CHECK(top["certificate_mod2_valid"] == true);
  CHECK(top["inequality"]["status"] == "tight");
  CHECK(top["evidence"].is_null());
  CHECK(pls_family_complex(f, 9) != nullptr);
  CHECK(pls_family_complex(f, 10) == nullptr);
  CHECK(pls_family_member_json(f, 10, &text) == PLS_ERR_INVALID_ARGUMENT);
  pls_family_free(f);

  CHECK(pls_family_generate(7, 0, 1000, 1, &f) == PLS_ERR_UNSUPPORTED_P);

  REQUIRE(pls_family_remark(1, 1000000, &f) == PLS_OK);
  REQUIRE(pls_family_member_json(f, 0, &text) == PLS_OK);
  auto r = json::parse(take(text));
  CHECK(r["m"] == 9);
  CHECK(r["evidence"]["ok"] == true);
  pls_family_free(f);

  auto* oct = named("octahedron");
  CHECK(pls_family_theorem_seed(oct, nullptr, "1,2", &f) == PLS_ERR_HYPOTHESIS_VIOLATED);
  auto* p5 = named("pentagon");
  REQUIRE(pls_family_theorem_seed(p5, nullptr, "1,2", &f) == PLS_OK);
  REQUIRE(pls_family_member_json(f, 0, &text) == PLS_OK);
  auto t = json::parse(take(text));
  CHECK(t["m"] == 8);
  CHECK(t["non_suspended"] == true);
  pls_family_free(f);
  pls_complex_free(oct);
  pls_complex_free(p5);
}

TEST_CASE("sha256") {
  char* text = nullptr;
  REQUIRE(pls_sha256("abc", 3, &text) == PLS_OK);
  CHECK(take(text) == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
