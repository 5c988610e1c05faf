#include "pls/pls.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pls/charmap.hpp"
#include "pls/classify.hpp"
#include "pls/complex.hpp"
#include "pls/error.hpp"
#include "pls/evidence.hpp"
#include "pls/family.hpp"
#include "pls/io.hpp"
#include "pls/operations.hpp"

struct pls_complex {
  pls::SimplicialComplex k;
  std::vector<std::string> trace;
};

struct pls_charmap {
  pls::CharMatrix m;
};

struct pls_family {
  std::vector<pls::FamilyMember> members;
  // Handle views of each member, built once so borrowed pointers stay valid.
  std::vector<pls_complex> complexes;
  std::vector<pls_charmap> certificates;
};

namespace {

using json = nlohmann::ordered_json;

static_assert(static_cast<int>(pls::ErrorCode::kInternal) + 1 == PLS_ERR_INTERNAL,
              "pls_status must mirror pls::ErrorCode");

thread_local std::string g_last_error;

pls_status to_status(pls::ErrorCode code) {
  return static_cast<pls_status>(static_cast<int>(code) + 1);
}

pls_status fail(pls_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
pls_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return PLS_OK;
  } catch (const pls::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(PLS_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PLS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PLS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PLS_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw pls::Error(pls::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_labels(const char* text) {
  require(text, "label list");
  std::vector<std::string> out;
  std::string s(text);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

pls::Face face_of(const pls::SimplicialComplex& k, const char* text) {
  const auto labels = split_labels(text);
  const auto face = k.face_from_labels(labels);
  if (face.size() != labels.size())
    throw pls::Error(pls::ErrorCode::kInvalidArgument, "repeated label in '" + std::string(text) + "'");
  return face;
}

pls::Ring ring_of(pls_ring ring) {
  switch (ring) {
    case PLS_RING_GF2: return pls::Ring::kGF2;
    case PLS_RING_INT: return pls::Ring::kInt;
  }
  throw pls::Error(pls::ErrorCode::kInvalidArgument, "unknown ring");
}

void emit(pls_complex** out, pls::SimplicialComplex k, std::vector<std::string> trace) {
  require(out, "out");
  *out = new pls_complex{std::move(k), std::move(trace)};
}

void emit(char** out, const std::string& s) {
  require(out, "out");
  *out = dup_string(s);
}

void emit(pls_charmap** out, pls::CharMatrix m) {
  require(out, "out");
  *out = new pls_charmap{std::move(m)};
}

json labels_json(const pls::SimplicialComplex& k, const pls::Face& f) {
  return json(k.labels_of(f));
}

json complex_object(const pls::SimplicialComplex& k) {
  return json::parse(pls::complex_to_json(k));
}

json f_vector_object(const pls::FVector& f) {
  json out;
  out["counts"] = f.counts;
  out["complete"] = f.complete;
  out["euler_characteristic"] =
      f.euler_characteristic ? json(*f.euler_characteristic) : json(nullptr);
  return out;
}

json evidence_object(const pls::SimplicialComplex& k, const pls::EvidenceReport& r) {
  json out;
  out["pure"] = r.pure;
  out["pseudomanifold"] = r.pseudomanifold;
  out["strongly_connected"] = r.strongly_connected;
  out["euler"] = pls::check_state_name(r.euler);
  out["homology"] = pls::check_state_name(r.homology);
  out["f_vector"] = f_vector_object(r.f_vector);
  out["betti"] = r.betti ? json(*r.betti) : json(nullptr);
  out["expected_betti"] = pls::sphere_betti_profile(k.facet_size());
  out["reasons"] = r.reasons;
  out["ok"] = !r.has_failure();
  return out;
}

json verdict_object(const pls::SimplicialComplex& k, const pls::Verdict& v) {
  json out;
  out["value"] = v.value;
  out["reason"] = v.reason;
  if (v.witness)
    out["witness"] = {k.labels()[v.witness->first], k.labels()[v.witness->second]};
  else
    out["witness"] = nullptr;
  return out;
}

json inequality_object(const pls::InequalityReport& r) {
  json out;
  out["m"] = r.m;
  out["n"] = r.n;
  out["p"] = r.p;
  out["bound"] = r.bound ? json(*r.bound) : json(nullptr);
  out["certified"] = r.certified;
  out["status"] = r.status;
  return out;
}

json check_object(const pls::SimplicialComplex& k, const pls::CharmapCheck& c) {
  json out;
  out["valid"] = c.valid;
  out["failing_facet"] = c.failing_facet ? labels_json(k, *c.failing_facet) : json(nullptr);
  out["reason"] = c.reason;
  return out;
}

pls_family* make_family(std::vector<pls::FamilyMember> members) {
  auto* f = new pls_family{std::move(members), {}, {}};
  f->complexes.reserve(f->members.size());
  f->certificates.reserve(f->members.size());
  for (const auto& m : f->members) {
    f->complexes.push_back(pls_complex{m.complex, m.trace});
    f->certificates.push_back(pls_charmap{m.certificate});
  }
  return f;
}

const pls::FamilyMember& member_at(const pls_family* f, size_t i) {
  require(f, "family");
  if (i >= f->members.size())
    throw pls::Error(pls::ErrorCode::kInvalidArgument, "member index out of range");
  return f->members[i];
}

std::string default_copy(const pls::SimplicialComplex& k, const std::string& v) {
  for (std::uint32_t i = 1;; ++i) {
    auto label = pls::copy_label(v, i);
    if (!k.index_of(label)) return label;
  }
}

template <class Op>
pls_status wedge_like(const pls_complex* k, const char* vertex, const char* copy,
                      pls_complex** out, Op op) {
  return guarded([&] {
    require(k, "complex");
    require(vertex, "vertex");
    const auto v = k->k.require_vertex(vertex);
    const std::string label = copy ? std::string(copy) : default_copy(k->k, vertex);
    emit(out, op(k->k, v, label), k->trace);
  });
}

}  // namespace

extern "C" {

const char* pls_status_name(pls_status status) {
  if (status == PLS_OK) return "Ok";
  if (status < PLS_OK || status > PLS_ERR_INTERNAL) return "Unknown";
  return pls::error_code_name(static_cast<pls::ErrorCode>(static_cast<int>(status) - 1));
}

const char* pls_last_error(void) { return g_last_error.c_str(); }

void pls_string_free(char* s) { std::free(s); }

pls_status pls_sha256(const void* data, size_t length, char** out) {
  return guarded([&] {
    if (length > 0) require(data, "data");
    emit(out, pls::sha256_hex({static_cast<const char*>(data), length}));
  });
}

// ---- complexes

pls_status pls_complex_parse(const char* text, pls_complex** out) {
  return guarded([&] {
    require(text, "json");
    auto file = pls::parse_complex_json(text);
    emit(out, std::move(file.complex), std::move(file.trace));
  });
}

pls_status pls_complex_from_label_facets(const char* facets_json, const char* name,
                                         pls_complex** out) {
  return guarded([&] {
    require(facets_json, "facets");
    const auto parsed = json::parse(facets_json);
    if (!parsed.is_array())
      throw pls::Error(pls::ErrorCode::kParse, "facets must be an array of label arrays");
    std::vector<std::vector<std::string>> raw;
    for (const auto& facet : parsed) {
      if (!facet.is_array())
        throw pls::Error(pls::ErrorCode::kParse, "facets must be an array of label arrays");
      raw.emplace_back();
      for (const auto& l : facet) {
        if (!l.is_string()) throw pls::Error(pls::ErrorCode::kParse, "labels must be strings");
        raw.back().push_back(l.get<std::string>());
      }
    }
    emit(out, pls::SimplicialComplex::from_label_facets(raw, name ? name : ""), {});
  });
}

pls_status pls_complex_named(const char* spec, pls_complex** out) {
  return guarded([&] {
    require(spec, "spec");
    emit(out, pls::named_complex(spec), {std::string("base:") + spec});
  });
}

pls_status pls_complex_clone(const pls_complex* k, pls_complex** out) {
  return guarded([&] {
    require(k, "complex");
    emit(out, k->k, k->trace);
  });
}

void pls_complex_free(pls_complex* k) { delete k; }

pls_status pls_complex_to_json(const pls_complex* k, char** out) {
  return guarded([&] {
    require(k, "complex");
    emit(out, pls::complex_to_json(k->k, k->trace));
  });
}

pls_status pls_complex_hash(const pls_complex* k, char** out) {
  return guarded([&] {
    require(k, "complex");
    emit(out, pls::complex_hash(k->k));
  });
}

size_t pls_complex_vertex_count(const pls_complex* k) { return k ? k->k.vertex_count() : 0; }
size_t pls_complex_facet_count(const pls_complex* k) { return k ? k->k.facets().size() : 0; }
int pls_complex_dimension(const pls_complex* k) { return k ? k->k.dimension() : -1; }

pls_status pls_complex_set_name(pls_complex* k, const char* name) {
  return guarded([&] {
    require(k, "complex");
    require(name, "name");
    k->k.set_name(name);
  });
}

pls_status pls_complex_append_trace(pls_complex* k, const char* step) {
  return guarded([&] {
    require(k, "complex");
    require(step, "step");
    k->trace.emplace_back(step);
  });
}

// ---- operations

pls_status pls_link(const pls_complex* k, const char* face, pls_complex** out) {
  return guarded([&] {
    require(k, "complex");
    emit(out, pls::link(k->k, face_of(k->k, face)), k->trace);
  });
}

pls_status pls_star(const pls_complex* k, const char* face, pls_complex** out) {
  return guarded([&] {
    require(k, "complex");
    emit(out, pls::star(k->k, face_of(k->k, face)), k->trace);
  });
}

pls_status pls_join(const pls_complex* k, const pls_complex* l, int rename_collisions,
                    pls_complex** out) {
  return guarded([&] {
    require(k, "left complex");
    require(l, "right complex");
    emit(out, pls::join(k->k, l->k, {.rename_collisions = rename_collisions != 0}), k->trace);
  });
}


pls_status pls_wedge(const pls_complex* k, const char* vertex, const char* copy_label,
                     pls_complex** out) {
  return wedge_like(k, vertex, copy_label, out,
                    [](const auto& c, auto v, const auto& l) { return pls::wedge(c, v, l); });
}

pls_status pls_wedge_via_nonfaces(const pls_complex* k, const char* vertex,
                                  const char* copy_label, pls_complex** out) {
  return wedge_like(k, vertex, copy_label, out, [](const auto& c, auto v, const auto& l) {
    return pls::wedge_via_nonface_duplication(c, v, l);
  });
}

pls_status pls_stellar_subdivision(const pls_complex* k, const char* face, const char* new_label,
                                   pls_complex** out) {
  return guarded([&] {
    require(k, "complex");
    const auto sigma = face_of(k->k, face);
    emit(out,
         new_label ? pls::stellar_subdivision(k->k, sigma, new_label)
                   : pls::stellar_subdivision(k->k, sigma),
         k->trace);
  });
}

pls_status pls_suspension(const pls_complex* k, const char* north, const char* south,
                          pls_complex** out) {
  return guarded([&] {
    require(k, "complex");
    emit(out, pls::suspension(k->k, north ? north : "N", south ? south : "S"), k->trace);
  });
}

pls_status pls_j_construction(const pls_complex* k, const uint32_t* j, size_t length,
                              pls_complex** out) {
  return guarded([&] {
    require(k, "complex");
    if (length > 0) require(j, "J");
    emit(out, pls::j_construction(k->k, pls::MultiplicityTuple(j, j + length)), k->trace);
  });
}

pls_status pls_assembled_face(const pls_complex* k, const uint32_t* j, const uint32_t* s,
                              size_t length, char** out) {
  return guarded([&] {
    require(k, "complex");
    if (length > 0) {
      require(j, "J");
      require(s, "s");
    }
    pls::MultiplicityTuple jt(j, j + length);
    const auto kj = pls::j_construction(k->k, jt);
    const auto face = pls::assembled_face(k->k, jt, pls::SelectionTuple(s, s + length), kj);
    std::string text;
    for (const auto& l : kj.labels_of(face)) text += (text.empty() ? "" : ",") + l;
    emit(out, text);
  });
}

// ---- queries

pls_status pls_minimal_non_faces_json(const pls_complex* k, char** out) {
  return guarded([&] {
    require(k, "complex");
    json list = json::array();
    for (const auto& f : pls::minimal_non_faces(k->k)) list.push_back(labels_json(k->k, f));
    json doc;
    doc["minimal_non_faces"] = std::move(list);
    emit(out, doc.dump(2));
  });
}

pls_status pls_f_vector_json(const pls_complex* k, uint64_t face_budget, char** out) {
  return guarded([&] {
    require(k, "complex");
    emit(out, f_vector_object(pls::f_vector(k->k, face_budget)).dump(2));
  });
}

pls_status pls_isomorphism_json(const pls_complex* a, const pls_complex* b, char** out) {
  return guarded([&] {
    require(a, "first complex");
    require(b, "second complex");
    json doc;
    const auto map = pls::are_isomorphic(a->k, b->k);
    doc["isomorphic"] = map.has_value();
    if (map) {
      json m = json::object();
      for (std::size_t v = 0; v < map->size(); ++v)
        m[a->k.labels()[v]] = b->k.labels()[(*map)[v]];
      doc["map"] = std::move(m);
    } else {
      doc["map"] = nullptr;
    }
    emit(out, doc.dump(2));
  });
}

pls_status pls_classify_json(const pls_complex* k, char** out) {
  return guarded([&] {
    require(k, "complex");
    const auto& c = k->k;
    json pairs = json::array();
    json covering = json::array();
    for (const auto& pair : pls::covering_pairs(c)) {
      covering.push_back({c.labels()[pair.first], c.labels()[pair.second]});
      const auto cls = pls::classify_pair(c, pair);
      json entry;
      entry["pair"] = {c.labels()[pair.first], c.labels()[pair.second]};
      entry["kind"] = cls.kind == pls::PairKind::kWedgedEdge ? "wedged_edge" : "suspended_pair";
      entry["witness"] = complex_object(cls.witness);
      pairs.push_back(std::move(entry));
    }
    json doc;
    doc["covering_pairs"] = std::move(covering);
    doc["pairs"] = std::move(pairs);
    doc["seed"] = verdict_object(c, pls::is_seed(c));
    doc["suspended"] = verdict_object(c, pls::is_suspended(c));
    emit(out, doc.dump(2));
  });
}

pls_status pls_decompose_json(const pls_complex* k, char** out) {
  return guarded([&] {
    require(k, "complex");
    const auto d = pls::seed_decomposition(k->k);
    json doc;
    doc["seed"] = complex_object(d.seed);
    doc["J"] = d.j;
    json map = json::object();
    for (const auto& [label, copy] : d.label_map)
      map[label] = {{"seed_vertex", copy.seed_label}, {"copy", copy.copy_index}};
    doc["label_map"] = std::move(map);
    doc["round_trip"] = pls::decomposition_round_trips(k->k, d);
    emit(out, doc.dump(2));
  });
}

pls_status pls_evidence_json(const pls_complex* k, uint64_t face_budget, char** out) {
  return guarded([&] {
    require(k, "complex");
    emit(out, evidence_object(k->k, pls::sphere_evidence_report(k->k, face_budget)).dump(2));
  });
}

pls_status pls_inequality_json(const pls_complex* k, const pls_charmap* certificate, char** out) {
  return guarded([&] {
    require(k, "complex");
    const bool seed = pls::is_seed(k->k).value;
    const auto r =
        pls::picard_and_inequality(k->k, seed, certificate ? &certificate->m : nullptr);
    emit(out, inequality_object(r).dump(2));
  });
}

// ---- characteristic matrices

pls_status pls_charmap_parse(const char* text, const pls_complex* k, pls_charmap** out) {
  return guarded([&] {
    require(text, "json");
    require(k, "complex");
    emit(out, pls::parse_certificate_json(text, k->k));
  });
}

pls_status pls_charmap_from_rows(const char* rows_json, pls_ring ring, pls_charmap** out) {
  return guarded([&] {
    require(rows_json, "rows");
    const auto parsed = json::parse(rows_json);
    std::vector<std::vector<std::int64_t>> rows;
    if (!parsed.is_array()) throw pls::Error(pls::ErrorCode::kParse, "rows must be an array");
    for (const auto& row : parsed) {
      if (!row.is_array()) throw pls::Error(pls::ErrorCode::kParse, "rows must be arrays");
      rows.emplace_back();
      for (const auto& x : row) {
        if (!x.is_number_integer())
          throw pls::Error(pls::ErrorCode::kParse, "matrix entries must be integers");
        rows.back().push_back(x.get<std::int64_t>());
      }
    }
    emit(out, pls::CharMatrix::from_rows(ring_of(ring), rows));
  });
}

void pls_charmap_free(pls_charmap* c) { delete c; }

pls_status pls_charmap_to_json(const pls_charmap* c, const pls_complex* k, char** out) {
  return guarded([&] {
    require(c, "certificate");
    require(k, "complex");
    emit(out, pls::certificate_to_json(k->k, c->m));
  });
}

pls_ring pls_charmap_ring(const pls_charmap* c) {
  return c && c->m.ring() == pls::Ring::kGF2 ? PLS_RING_GF2 : PLS_RING_INT;
}

pls_status pls_charmap_mod2(const pls_charmap* c, pls_charmap** out) {
  return guarded([&] {
    require(c, "certificate");
    emit(out, c->m.mod2());
  });
}

pls_status pls_charmap_verify_json(const pls_complex* k, const pls_charmap* c, unsigned threads,
                                   char** out) {
  return guarded([&] {
    require(k, "complex");
    require(c, "certificate");
    emit(out, check_object(k->k, pls::verify_charmap(k->k, c->m, threads)).dump(2));
  });
}

pls_status pls_charmap_search(const pls_complex* k, pls_ring ring, int bound, unsigned threads,
                              pls_charmap** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    std::optional<pls::CharMatrix> found;
    if (ring == PLS_RING_INT && bound <= 0) {
      found = pls::find_int_certificate(k->k, threads);
    } else {
      pls::SearchOptions options;
      options.ring = ring_of(ring);
      options.bound = bound <= 0 ? 1 : bound;
      options.threads = threads;
      found = pls::search_charmap(k->k, options);
    }
    *out = found ? new pls_charmap{std::move(*found)} : nullptr;
  });
}

pls_status pls_charmap_wedge_propagate(const pls_complex* k, const pls_charmap* c,
                                       const char* vertex, pls_charmap** out) {
  return guarded([&] {
    require(k, "complex");
    require(c, "certificate");
    require(vertex, "vertex");
    emit(out, pls::wedge_propagate(k->k, c->m, k->k.require_vertex(vertex)));
  });
}

pls_status pls_charmap_stellar_propagate(const pls_complex* k, const pls_charmap* c,
                                         const char* face, pls_charmap** out) {
  return guarded([&] {
    require(k, "complex");
    require(c, "certificate");
    emit(out, pls::stellar_propagate(k->k, c->m, face_of(k->k, face)));
  });
}

// ---- seed constructions

pls_status pls_family_generate(int p, int with_evidence, uint64_t face_budget, unsigned threads,
                               pls_family** out) {
  return guarded([&] {
    require(out, "out");
    pls::FamilyOptions options;
    options.with_evidence = with_evidence != 0;
    options.face_budget = face_budget;
    options.threads = threads;
    *out = make_family(pls::corollary_family(p, options));
  });
}

pls_status pls_family_remark(int with_evidence, uint64_t face_budget, pls_family** out) {
  return guarded([&] {
    require(out, "out");
    auto member = pls::remark_seed();
    if (with_evidence) pls::attach_evidence(member, face_budget);
    *out = make_family({std::move(member)});
  });
}

pls_status pls_family_theorem_seed(const pls_complex* k, const pls_charmap* c,
                                   const char* doubled, pls_family** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    auto base = c ? pls::member_with_certificate(k->k, c->m, k->trace)
                  : pls::base_member(k->k, k->trace);
    std::vector<std::uint32_t> indices;
    for (const auto& l : split_labels(doubled)) indices.push_back(k->k.require_vertex(l));
    auto member = pls::theorem_seed(base, indices);
    *out = make_family({std::move(member)});
  });
}

void pls_family_free(pls_family* f) { delete f; }

size_t pls_family_size(const pls_family* f) { return f ? f->members.size() : 0; }

const pls_complex* pls_family_complex(const pls_family* f, size_t i) {
  return f && i < f->complexes.size() ? &f->complexes[i] : nullptr;
}

const pls_charmap* pls_family_certificate(const pls_family* f, size_t i) {
  return f && i < f->certificates.size() ? &f->certificates[i] : nullptr;
}

pls_status pls_family_member_json(const pls_family* f, size_t i, char** out) {
  return guarded([&] {
    const auto& m = member_at(f, i);
    json doc;
    doc["name"] = m.complex.name();
    doc["m"] = m.m;
    doc["n"] = m.n;
    doc["p"] = m.p;
    doc["seed"] = m.seed;
    doc["non_suspended"] = m.non_suspended;
    doc["polytopal_by_construction"] = m.polytopal_by_construction;
    doc["certificate_valid"] = pls::verify_charmap(m.complex, m.certificate).valid;
    doc["certificate_mod2_valid"] = pls::verify_charmap(m.complex, m.certificate.mod2()).valid;
    doc["inequality"] = inequality_object(m.inequality);
    doc["trace"] = m.trace;
    doc["evidence"] = m.evidence ? evidence_object(m.complex, *m.evidence) : json(nullptr);
    emit(out, doc.dump(2));
  });
}

}  // extern "C"
